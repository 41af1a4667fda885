"""The acceptance suite: known values and audits that must all hold."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

from src.core.abgroup import Subgroup
from src.core.basis import (
    SearchBudget,
    SearchTarget,
    construct_exact_order_basis,
    erdos_graham,
    essential_subsets,
    ord_star,
    removal_order,
    standard_carrier,
    twobases_audit,
    witness_search,
)
from src.core.basis.criterion import removal_subgroup
from src.core.config import settings
from src.core.density import density_lemma_suite
from src.core.errors import AddBasisError, SemigroupError
from src.core.fpt import build_remark_basis, essential_hyperplane_count
from src.core.perset import parse_set
from src.core.pipeline.corpus import corpus_audit
from src.core.pipeline.oracle import sumset_oracle_audit
from src.core.pipeline.schema import (
    AcceptanceCheck,
    CorpusAudit,
    CorpusAuditReport,
    VerificationReport,
)
from src.core.structure import (
    multiplicative_counterexample,
    structure_decompose,
    t_cap_H,
    validate_semigroup,
)
from src.core.telemetry.metrics import MeasureLatency, MetricsCollector

logger = logging.getLogger(__name__)

# (h, max_period, max_window, expected removal order)
RemovalBudget = Tuple[int, int, int, int]


@dataclass
class SuiteOptions:
    workers: Optional[int] = None
    seed: int = field(default_factory=lambda: settings.ADDBASIS_SEED)
    oracle_pairs: int = 500
    eg_bases: int = 200
    corpus_size: int = 100
    twobases_instances: int = 100
    egt_bases: int = 50
    density_instances: int = field(default_factory=lambda: settings.ADDBASIS_RANDOM_INSTANCES)
    removal_budgets: Tuple[RemovalBudget, ...] = ((2, 6, 12, 4), (3, 12, 16, 7))
    essential_budget: Tuple[int, int] = (6, 12)
    multiplicative_limit: int = 10**6


Outcome = Tuple[bool, str]


def _corpus(
    audit: CorpusAudit, names: Sequence[str], count: int, opts: SuiteOptions
) -> Tuple[bool, List[CorpusAuditReport]]:
    reports = [
        corpus_audit(audit, standard_carrier(name), count, opts.seed, opts.workers)
        for name in names
    ]
    return all(r.ok for r in reports), reports


def _describe(reports: Sequence[CorpusAuditReport]) -> str:
    return "; ".join(
        f"{r.audit.value}/{r.carrier}: {r.checked} checked, {len(r.violations)} bad"
        for r in reports
    )


def _share(total: int, parts: int) -> int:
    return max(1, -(-total // parts))


def _sumset_oracle(opts: SuiteOptions) -> Outcome:
    report = sumset_oracle_audit(opts.oracle_pairs, opts.seed, opts.workers)
    return report.ok, f"{report.checked} pairs, {len(report.violations)} mismatches"


def _erdos_graham(opts: SuiteOptions) -> Outcome:
    nat = standard_carrier("N")
    odd = parse_set("{1}, 0+2N")
    parity = parse_set("{0,1}, 0+4N, 2+4N")
    removal = removal_order(parity, [(1,)], nat)
    examples = (
        ord_star(odd, nat).order == 2
        and not erdos_graham(odd, [(1,)], nat)
        and essential_subsets(odd, nat, 2).as_frozensets() == frozenset({frozenset({(1,)})})
        and ord_star(parity, nat).order == 2
        and not removal.regular
        and removal.index == "2"
        and removal_subgroup(parity, parse_set("{1}")).member((2,))
    )
    names = ("N", "Z", "C2+N", "<3,5>")
    ok, reports = _corpus(CorpusAudit.EG, names, _share(opts.eg_bases, len(names)), opts)
    return examples and ok, f"examples ok={examples}; {_describe(reports)}"


def _removal_witnesses(opts: SuiteOptions) -> Outcome:
    t = standard_carrier("N")
    found = []
    for h, max_period, max_window, expected in opts.removal_budgets:
        budget = SearchBudget(max_period=max_period, max_window=max_window)
        report = witness_search(
            t, h, 1, budget, SearchTarget.REMOVAL, seed=opts.seed, workers=opts.workers
        )
        value = report.best.value if report.best else None
        found.append((h, value, expected, len(report.violations)))
    ok = all(value == expected and not bad for _, value, expected, bad in found)
    return ok, "; ".join(f"h={h}: {value}, {bad} above the bound" for h, value, _, bad in found)


def _essential_singletons(opts: SuiteOptions) -> Outcome:
    t = standard_carrier("N")
    max_period, max_window = opts.essential_budget
    budget = SearchBudget(max_period=max_period, max_window=max_window)
    parts = []
    ok = True
    for h in (2, 3):
        report = witness_search(
            t, h, 1, budget, SearchTarget.ESSENTIAL, seed=opts.seed, workers=opts.workers
        )
        value = report.best.value if report.best else None
        # two essential elements force order at least 4, so h = 3 also tops out at 1
        ok = ok and value == 1 and not report.violations
        parts.append(f"h={h}: {value} over {report.bases} bases")
    odd = essential_subsets(parse_set("{1}, 0+2N"), t, 1)
    pair = essential_subsets(parse_set("{2,3}, 0+6N"), t, 1)
    ok = ok and odd.counts[1] == 1 and pair.order == 4 and pair.counts[1] == 2
    parts.append(f"{{1}}+2N: {odd.counts[1]}; {{2,3}}+6N: {pair.counts[1]} at order {pair.order}")
    return ok, "; ".join(parts)


def _singleton_bound(opts: SuiteOptions) -> Outcome:
    ok, reports = _corpus(CorpusAudit.S1, ("N", "Z"), opts.corpus_size, opts)
    return ok, _describe(reports)


def _pair_bound(opts: SuiteOptions) -> Outcome:
    ok, reports = _corpus(CorpusAudit.S2, ("Z",), opts.corpus_size, opts)
    return ok, _describe(reports)


def _explicit_caps(opts: SuiteOptions) -> Outcome:
    ok1, x1 = _corpus(CorpusAudit.X1, ("N", "Z"), opts.corpus_size, opts)
    ok2, x2 = _corpus(CorpusAudit.X2, ("N",), opts.corpus_size, opts)
    return ok1 and ok2, _describe(x1 + x2)


def _sandwich(opts: SuiteOptions) -> Outcome:
    fixed = twobases_audit([(1,)], parse_set("0+3N"), (0,), standard_carrier("N"))
    example = fixed.ok and (fixed.h1, fixed.h2, fixed.h) == (2, 1, 3)
    names = ("N", "C2+N")
    ok, reports = _corpus(
        CorpusAudit.TWOBASES, names, _share(opts.twobases_instances, len(names)), opts
    )
    return example and ok, f"F={{1}}, B=3N: h1={fixed.h1} h2={fixed.h2} h={fixed.h}; {_describe(reports)}"


def _density_lemmas(opts: SuiteOptions) -> Outcome:
    report = density_lemma_suite(
        standard_carrier("N"), opts.density_instances, opts.seed, workers=opts.workers
    )
    bad = sum(len(s.violations) for s in report.summaries)
    return report.ok, f"{opts.density_instances} instances per lemma, {bad} violations"


def _structure(opts: SuiteOptions) -> Outcome:
    numerical = structure_decompose(standard_carrier("<3,5>"))
    torsion = structure_decompose(standard_carrier("C2+N"))
    group = structure_decompose(standard_carrier("Z"))
    rejected = []
    for literal in ("{-1}, 0+1N", "{3}, 0+2N"):
        try:
            validate_semigroup(parse_set(literal))
        except SemigroupError:
            rejected.append(literal)
    t = standard_carrier("<3,5>")
    inner, _ = t_cap_H(t, Subgroup.generated_by(t.ambient, [(2,)]))
    sym = numerical.sym_diff.elements()
    ok = (
        sym == [(1,), (2,), (4,), (7,)]
        and numerical.remainders.elements() == [(0,), (5,), (10,)]
        and torsion.torsion == (2,)
        and torsion.remainders.elements() == [(0, 0), (1, 0)]
        and torsion.x == (0, 1)
        and group.kind == "group"
        and len(rejected) == 2
        and inner.carrier == parse_set("{0}, 3+1N")
    )
    return ok, (
        f"<3,5>: sym_diff={sym}; C2+N: C={torsion.torsion} x={torsion.x}; "
        f"Z: {group.kind}; rejected={rejected}"
    )


def _exact_orders(opts: SuiteOptions) -> Outcome:
    failures = []
    for name in ("N", "<3,5>", "C2+N"):
        t = standard_carrier(name)
        for h in range(2, 11):
            if construct_exact_order_basis(t, h).order != h:
                failures.append(f"{name}:{h}")
    return not failures, f"failures={failures}"


def _graded_basis(opts: SuiteOptions) -> Outcome:
    parts = []
    ok = True
    for p, r, h in ((2, 2, 2), (2, 2, 3)):
        D = r * h + 4
        built = build_remark_basis(p, r, h, D, seed=opts.seed)
        # raises when the count moves at D + 2 or disagrees with brute force
        count = essential_hyperplane_count(p, r, h, D, workers=opts.workers)
        ok = ok and built.order == h and count.meets_lower_bound and count.stable
        parts.append(
            f"({p},{r},{h}): order {built.order}, {count.verified}/{count.candidates} "
            f"verified, (h-1)k = {count.lower_bound}"
        )
    return ok, "; ".join(parts)


def _group_correspondence(opts: SuiteOptions) -> Outcome:
    ok, reports = _corpus(CorpusAudit.EGT, ("N",), opts.egt_bases, opts)
    return ok, _describe(reports)


def _multiplicative(opts: SuiteOptions) -> Outcome:
    report = multiplicative_counterexample(h_max=5, limit=opts.multiplicative_limit)
    hits = sum(len(r.hits) for r in report.removals)
    return report.ok, f"order {report.order}, {len(report.removals)} primes, {hits} hits"


CHECKS: List[Tuple[int, str, Callable[[SuiteOptions], Outcome]]] = [
    (1, "sumset oracle", _sumset_oracle),
    (2, "Erdos-Graham soundness", _erdos_graham),
    (3, "removal order witnesses", _removal_witnesses),
    (4, "essential singleton bound", _essential_singletons),
    (5, "singleton removal bound", _singleton_bound),
    (6, "pair removal bound", _pair_bound),
    (7, "explicit removal caps", _explicit_caps),
    (8, "two-bases sandwich", _sandwich),
    (9, "density lemmas", _density_lemmas),
    (10, "structure decomposition", _structure),
    (11, "exact order construction", _exact_orders),
    (12, "graded polynomial basis", _graded_basis),
    (13, "group basis correspondence", _group_correspondence),
    (14, "multiplicative counterexample", _multiplicative),
]


def acceptance_suite(
    options: Optional[SuiteOptions] = None, only: Optional[Sequence[int]] = None
) -> VerificationReport:
    options = options or SuiteOptions()
    checks = []
    for item, name, fn in CHECKS:
        if only and item not in only:
            continue
        with MeasureLatency(f"acceptance_{item}"):
            try:
                passed, detail = fn(options)
            except AddBasisError as exc:
                passed, detail = False, f"{type(exc).__name__}: {exc}"
        MetricsCollector().track_certification(f"acceptance_{item}", passed)
        log = logger.info if passed else logger.error
        log("acceptance check", extra={"item": item, "check": name, "passed": passed})
        checks.append(AcceptanceCheck(item=item, name=name, passed=passed, detail=detail))
    return VerificationReport(checks=checks, metrics=MetricsCollector().get_summary())
