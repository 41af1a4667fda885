from fractions import Fraction

import pytest

from src.core.density import (
    DensityLemma,
    density_lemma_suite,
    doubling_audit,
    iterated_audit,
    low_density_audit,
    prehistoric_audit,
    stabilization_audit,
    translate_cover_audit,
)
from src.core.errors import PreconditionError, VerificationError
from src.core.perset import parse_set


def test_prehistoric(nat):
    check = prehistoric_audit(parse_set("{0}, 2+1N"), parse_set("0+2N"), nat)
    assert check.hypotheses_hold
    assert check.conclusion_holds


def test_prehistoric_needs_mass(nat):
    check = prehistoric_audit(parse_set("0+2N"), parse_set("0+2N"), nat)
    assert not check.hypotheses_hold
    assert check.conclusion_holds is None
    with pytest.raises(PreconditionError):
        prehistoric_audit(parse_set("{-1}, 0+1N"), parse_set("0+1N"), nat)


def test_doubling_both_branches(nat):
    grows = doubling_audit(parse_set("{0,1}"), parse_set("0+2N"), nat)
    assert grows.conclusion_holds
    assert grows.detail["d(B+C)"] == "1"
    absorbed = doubling_audit(parse_set("{0,2}"), parse_set("0+2N"), nat)
    assert absorbed.conclusion_holds
    assert absorbed.detail["d(B+C)"] == "1/2"


def test_iterated_doubling(nat):
    assert iterated_audit(parse_set("0+2N"), nat, 1, 2).conclusion_holds
    assert iterated_audit(parse_set("{0,1}"), nat, 1, 2).conclusion_holds
    with pytest.raises(PreconditionError):
        iterated_audit(parse_set("0+2N"), nat, 0, 2)


def test_stabilization(nat):
    check = stabilization_audit(parse_set("{0,1}, 0+3N"), nat, 1)
    assert check.hypotheses_hold
    assert check.detail["bound"] == "5"
    # 4 is not a difference of two members, but 1 + 3 is a sum of two
    assert check.detail["s"] == "2"
    assert not stabilization_audit(parse_set("{0,1}"), nat, 2).hypotheses_hold


def test_translate_cover(nat):
    check = translate_cover_audit(parse_set("{1}, 0+3N"), [(0,), (1,), (2,)], 1, nat)
    assert check.hypotheses_hold
    assert check.detail["cap"] == "16"
    assert check.detail["order"] == "3"
    assert check.conclusion_holds
    # 2ℕ covers with two shifts but generates 2ℤ
    assert not translate_cover_audit(parse_set("0+2N"), [(0,), (1,)], 1, nat).hypotheses_hold
    with pytest.raises(PreconditionError):
        translate_cover_audit(parse_set("0+1N"), [(-1,)], 1, nat)


def test_low_density(nat):
    check = low_density_audit(parse_set("{3}, 0+5N, 1+5N"), (3,), nat)
    assert check.hypotheses_hold
    assert check.detail["d(T \\ h(A-x))"] == "2/5"
    assert check.conclusion_holds
    assert not low_density_audit(parse_set("{1}, 0+2N"), (1,), nat).hypotheses_hold
    assert low_density_audit(parse_set("0+1N"), (0,), nat).conclusion_holds


def test_violation_raises(nat, mocker):
    mocker.patch("src.core.density.audits.natural_density", return_value=Fraction(1))
    point = parse_set("{0}")
    with pytest.raises(VerificationError):
        prehistoric_audit(point, point, nat)
    assert prehistoric_audit(point, point, nat, strict=False).violated


@pytest.mark.parametrize("fixture", ["nat", "integers", "c2_nat", "nonpositive"])
def test_random_suite(fixture, request):
    t = request.getfixturevalue(fixture)
    report = density_lemma_suite(t, instances=8, seed=5)
    assert report.ok
    assert {s.lemma for s in report.summaries} == set(DensityLemma)
    assert all(s.instances == 8 for s in report.summaries)


def test_suite_hypotheses_are_met(nat):
    report = density_lemma_suite(nat, instances=30, seed=2, lemmas=[DensityLemma.PREHISTORIC])
    assert report.summaries[0].hypotheses_held > 0
