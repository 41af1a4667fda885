import os
from unittest.mock import patch

import pytest

from src.report import JsonReporter, MarkdownReporter, ReporterRegistry, TsvReporter
from src.report.manager import ReportManager


@pytest.fixture
def payload():
    return {"density": "1/3", "set": "0+3N"}


def test_generate_all_success(tmp_path, payload):
    report_dir = str(tmp_path / "reports")
    manager = ReportManager(report_dir)

    with (
        patch.object(JsonReporter, "generate") as mock_json,
        patch.object(TsvReporter, "generate") as mock_tsv,
        patch.object(MarkdownReporter, "generate") as mock_md,
    ):
        generated = manager.generate_all(payload)

    assert sorted(generated) == sorted(
        os.path.join(report_dir, name)
        for name in ("addbasis_report.json", "addbasis_report.tsv", "addbasis_report.md")
    )
    mock_json.assert_called_once()
    mock_tsv.assert_called_once()
    mock_md.assert_called_once()
    assert os.path.exists(report_dir)


def test_files_are_written(tmp_path, payload):
    manager = ReportManager(str(tmp_path), report_types=["TSV"], base_name="density")
    (path,) = manager.generate_all(payload)
    assert path == os.path.join(str(tmp_path), "density.tsv")
    with open(path, encoding="utf-8") as handle:
        assert handle.read() == "density\t1/3\nset\t0+3N\n"


def test_no_output_dir_writes_nothing(payload):
    assert ReportManager().generate_all(payload) == []


def test_create_dir_failure(tmp_path, payload):
    with patch("os.makedirs", side_effect=OSError("Perm denied")):
        manager = ReportManager(str(tmp_path / "missing"))
        assert manager.generate_all(payload) == []


def test_reporter_failure_resilience(tmp_path, payload):
    manager = ReportManager(str(tmp_path))
    with patch.object(MarkdownReporter, "generate", side_effect=Exception("MD Failed")):
        generated = manager.generate_all(payload)
    assert len(generated) == 2
    assert not any(path.endswith(".md") for path in generated)


def test_unknown_types(tmp_path, payload):
    manager = ReportManager(str(tmp_path), report_types=["html"])
    assert manager.generate_all(payload) == []
    with pytest.raises(ValueError):
        manager.render(payload, "html")


def test_custom_registration(payload):
    registry = ReporterRegistry()
    registry.register_reporter("plain", TsvReporter, ".txt", "plain")
    manager = ReportManager(registry=registry)
    assert "plain" in manager.report_types
    assert manager.render(payload, "plain") == "density\t1/3\nset\t0+3N\n"
