from src.core.errors import VerificationError
from src.core.pipeline.verify import CHECKS, SuiteOptions, acceptance_suite

CHEAP = [2, 4, 8, 10, 12]


def _small(**overrides):
    options = SuiteOptions(
        oracle_pairs=20,
        eg_bases=8,
        corpus_size=2,
        twobases_instances=6,
        egt_bases=3,
        density_instances=2,
        removal_budgets=((2, 5, 6, 4), (3, 8, 4, 7)),
        essential_budget=(4, 6),
        multiplicative_limit=5000,
    )
    for key, value in overrides.items():
        setattr(options, key, value)
    return options


def test_every_item_is_listed():
    assert [item for item, _, _ in CHECKS] == list(range(1, 15))


def test_default_options_follow_the_published_budgets():
    options = SuiteOptions()
    assert options.oracle_pairs == 500
    assert options.eg_bases == 200
    assert options.twobases_instances == 100
    assert options.egt_bases == 50
    assert options.removal_budgets == ((2, 6, 12, 4), (3, 12, 16, 7))
    assert options.multiplicative_limit == 10**6


def test_cheap_items_pass():
    report = acceptance_suite(_small(), only=CHEAP)
    assert [c.item for c in report.checks] == CHEAP
    failed = [(c.item, c.detail) for c in report.checks if not c.passed]
    assert failed == []
    assert report.ok
    assert "certificates" in report.metrics


def test_small_audits_pass():
    report = acceptance_suite(_small(), only=[1, 3, 5, 6, 7, 9, 13, 14])
    failed = [(c.item, c.detail) for c in report.checks if not c.passed]
    assert failed == []


def test_erdos_graham_covers_four_carriers():
    (check,) = acceptance_suite(_small(eg_bases=4), only=[2]).checks
    assert check.passed
    assert check.detail.count("eg/") == 4
    assert "examples ok=True" in check.detail


def test_errors_fail_the_check(mocker):
    def broken(_):
        raise VerificationError("certificate mismatch")

    mocker.patch("src.core.pipeline.verify.CHECKS", [(99, "broken", broken)])
    report = acceptance_suite()
    (check,) = report.checks
    assert not check.passed
    assert check.detail == "VerificationError: certificate mismatch"
    assert report.model_dump()["ok"] is False
