import json
import os

import pytest
from click.testing import CliRunner

from src.core.basis.schema import RemovalStudy
from src.core.perset import parse_set
from src.runner.cli.main import cli


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(cli, list(args))

    return invoke


def payload_of(result):
    assert result.exit_code == 0, result.output
    return json.loads(result.output)


def test_order(run):
    payload = payload_of(run("order", "--T", "0+1N", "--A", "{1}, 0+2N"))
    assert payload["verdict"] == "basis"
    assert payload["order"] == 2


def test_order_tsv(run):
    result = run("--tsv", "order", "--T", "N", "--A", "{1}, 0+2N")
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert "verdict\tbasis" in lines
    assert "order\t2" in lines


def test_sumset(run):
    payload = payload_of(run("sumset", "--A", "{0,1}", "--h", "2"))
    assert payload["operation"] == "2A"
    assert parse_set(payload["result"]) == parse_set("{0,1,2}")
    payload = payload_of(run("sumset", "--A", "0+3N", "--B", "{1}"))
    assert parse_set(payload["result"]) == parse_set("1+3N")


def test_essential(run):
    payload = payload_of(run("essential", "--T", "0+1N", "--A", "{1}, 0+2N", "--kmax", "2"))
    assert payload["reservoir"]["reservoir"] == ["1"]
    assert [e["elements"] for e in payload["essentials"]] == [["1"]]
    assert payload["counts"] == {"1": 1, "2": 0}


def test_regular_and_remove(run):
    payload = payload_of(run("regular", "--T", "N", "--A", "{0,1}, 0+4N, 2+4N", "--F", "{1}"))
    assert payload == {"regular": False, "subgroup": "<2>", "index": "2"}
    payload = payload_of(run("remove", "--T", "N", "--A", "0+1N", "--F", "{0}"))
    assert payload["regular"] is True
    assert payload["order"] == 1
    assert payload["index"] == "1"


def test_classify_and_grothendieck(run):
    payload = payload_of(run("classify", "--T", "<3,5>"))
    assert payload["kind"] == "cofinite_to"
    assert payload["x"] == "3"
    assert parse_set(payload["sym_diff"]) == parse_set("{1,2,4,7}")
    payload = payload_of(run("grothendieck", "--T", "{0,3,5,6}, 8+1N"))
    assert payload == {"subgroup": "G", "index": "1"}


def test_density(run):
    payload = payload_of(run("density", "--T", "0+1N", "--S", "0+3N"))
    assert payload["density"] == "1/3"


def test_audit_twobases_and_nn(run):
    payload = payload_of(
        run("audit", "twobases", "--T", "N", "--F", "{1}", "--B", "0+3N", "--b", "0")
    )
    assert (payload["h1"], payload["h2"], payload["h"], payload["ok"]) == (2, 1, 3, True)
    payload = payload_of(run("audit", "nn", "--T", "N", "--A", "{0,1}, 0+2N", "--F", "{1}"))
    assert payload["holds"] is True
    assert payload["index"] == 2


def test_audit_bounds(run):
    payload = payload_of(run("audit", "x1", "--T", "N", "--A", "{1}, 0+2N"))
    assert payload["ok"] is True
    assert payload["order"] == 2
    payload = payload_of(run("--seed", "3", "audit", "s1", "--T", "N", "--count", "3"))
    assert payload["audit"] == "s1"
    assert len(payload["results"]) == 3
    assert payload["ok"] is True


def test_audit_violations_exit_three(run, mocker):
    study = RemovalStudy(order=2, k=1, group=False, violations=["too large"])
    mocker.patch("src.core.pipeline.corpus.bound_audit", return_value=study)
    result = run("--seed", "3", "audit", "x1", "--T", "N", "--count", "2")
    assert result.exit_code == 3
    assert '"ok": false' in result.output

    mocker.patch("src.core.basis.bound_audit", return_value=study)
    result = run("audit", "s1", "--T", "N", "--A", "{1}, 0+2N")
    assert result.exit_code == 3
    assert "too large" in result.output


def test_audit_density_lemmas(run):
    payload = payload_of(
        run("audit", "density-lemmas", "--T", "N", "--instances", "2", "--lemma", "doubling")
    )
    assert [s["lemma"] for s in payload["summaries"]] == ["doubling"]
    assert payload["ok"] is True


def test_search(run):
    payload = payload_of(
        run("search", "X", "--T", "N", "--h", "2", "--max-period", "5", "--max-window", "6")
    )
    assert payload["best"]["value"] == 4


def test_fpt_verify(run):
    payload = payload_of(run("fpt-verify", "--p", "2", "--r", "2", "--h", "2", "--removal-orders"))
    assert payload["basis"]["order"] == 2
    assert payload["basis"]["D"] == 8
    assert payload["hyperplanes"]["verified"] == 3
    assert payload["removal_orders"]["max_order"] == 3


def test_verify_paper(run):
    payload = payload_of(run("verify-paper", "--only", "10", "--only", "12"))
    assert [c["item"] for c in payload["checks"]] == [10, 12]
    assert payload["ok"] is True


def test_verify_paper_markdown(run):
    result = run("--format", "markdown", "verify-paper", "--only", "10")
    assert result.exit_code == 0
    assert "| item | name | passed | detail |" in result.output


def test_report_dir(run, tmp_path):
    report_dir = str(tmp_path / "out")
    result = run("--report-dir", report_dir, "density", "--T", "N", "--S", "0+2N")
    assert result.exit_code == 0
    with open(os.path.join(report_dir, "density.json"), encoding="utf-8") as handle:
        assert json.load(handle)["density"] == "1/2"


@pytest.mark.parametrize(
    "args, code, kind",
    [
        (("order", "--T", "N", "--A", "{1"), 4, "parse"),
        (("essential", "--T", "N", "--A", "0+2N"), 2, "precondition"),
        (("classify", "--T", "{3}, 0+2N"), 2, "not_a_semigroup"),
        (("audit", "s2", "--T", "N"), 2, "precondition"),
        (("fpt-verify", "--p", "4"), 2, "precondition"),
    ],
)
def test_error_exit_codes(run, args, code, kind):
    result = run(*args)
    assert result.exit_code == code
    assert f'"error": "{kind}"' in result.output


def test_conflicting_format_flags(run):
    result = run("--json", "--tsv", "density", "--T", "N", "--S", "0+2N")
    assert result.exit_code == 2
