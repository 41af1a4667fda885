import functools
import json
import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, Optional

import click
from pydantic import BaseModel

from src.core.config import settings
from src.core.density.schema import DensityLemma
from src.core.errors import AddBasisError
from src.core.telemetry import MeasureLatency, setup_logging

logger = logging.getLogger(__name__)

FORMATS = ["json", "tsv", "markdown"]


@dataclass
class RunOptions:
    fmt: str = "json"
    report_dir: Optional[str] = None
    workers: int = 1
    seed: int = 0


def handle_errors(fn):
    """Map engine errors to a JSON message on stderr and their exit code."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            with MeasureLatency(f"cli_{fn.__name__}"):
                return fn(*args, **kwargs)
        except AddBasisError as exc:
            logger.debug("command failed", exc_info=True)
            click.echo(json.dumps({"error": exc.kind, "message": str(exc)}), err=True)
            click.get_current_context().exit(exc.exit_code)

    return wrapper


def as_payload(result: Any) -> Dict[str, Any]:
    if isinstance(result, BaseModel):
        return result.model_dump(mode="json")
    return result


def emit(result: Any, title: str) -> None:
    from src.report import ReportManager

    opts: RunOptions = click.get_current_context().find_object(RunOptions)
    payload = as_payload(result)
    metadata = {"title": title}
    manager = ReportManager(opts.report_dir, [opts.fmt], base_name=title.replace(" ", "_"))
    click.echo(manager.render(payload, opts.fmt, metadata), nl=False)
    manager.generate_all(payload, metadata)


def index_text(index: float) -> str:
    return "inf" if index == math.inf else str(int(index))


def load_carrier(literal: str):
    """A carrier literal, or one of the standard names ``N``, ``Z``, ``C2+N``, ``<3,5>``."""
    from src.core.basis import STANDARD_CARRIERS, standard_carrier
    from src.core.perset import parse_set
    from src.core.structure import validate_semigroup

    if literal in STANDARD_CARRIERS:
        return standard_carrier(literal)
    return validate_semigroup(parse_set(literal))


def load_set(literal: str, t):
    from src.core.perset import parse_set

    return parse_set(literal, t.ambient)


carrier_option = click.option(
    "--T", "carrier", required=True, help="Carrier semigroup literal or standard name."
)
basis_option = click.option("--A", "basis", required=True, help="Basis literal.")
removed_option = click.option("--F", "removed", required=True, help="Finite set literal to remove.")


@click.group()
@click.option(
    "--format",
    "output_format",
    type=click.Choice(FORMATS, case_sensitive=False),
    default="json",
    help="Output format.",
)
@click.option("--json", "json_flag", is_flag=True, default=False, help="Shorthand for --format json.")
@click.option("--tsv", "tsv_flag", is_flag=True, default=False, help="Shorthand for --format tsv.")
@click.option("--report-dir", default=None, help="Also write the report under this directory.")
@click.option("--workers", type=int, default=None, help="Worker processes for audits and searches.")
@click.option("--seed", type=int, default=None, help="Seed for randomized audits and searches.")
@click.option("--log-level", default=None, help="Root log level.")
@click.pass_context
def cli(ctx, output_format, json_flag, tsv_flag, report_dir, workers, seed, log_level):
    """addbasis - exact additive bases in translatable semigroups"""
    setup_logging(log_level or settings.ADDBASIS_LOG_LEVEL, settings.ADDBASIS_LOG_FILE)
    if json_flag and tsv_flag:
        raise click.UsageError("--json and --tsv are mutually exclusive")
    fmt = "json" if json_flag else "tsv" if tsv_flag else output_format.lower()
    ctx.obj = RunOptions(
        fmt=fmt,
        report_dir=report_dir,
        workers=settings.ADDBASIS_WORKERS if workers is None else workers,
        seed=settings.ADDBASIS_SEED if seed is None else seed,
    )


@cli.command()
@carrier_option
@basis_option
@handle_errors
def order(carrier, basis):
    """Basis verdict and exact order of A in T."""
    from src.core.basis import ord_star

    t = load_carrier(carrier)
    emit(ord_star(load_set(basis, t), t), "order")


@cli.command()
@basis_option
@click.option("--B", "other", default=None, help="Second summand; omit for hA.")
@click.option("--h", "h", type=int, default=2, show_default=True)
@handle_errors
def sumset(basis, other, h):
    """A + B, or the h-fold sumset hA."""
    from src.core.errors import PreconditionError
    from src.core.perset import format_set, h_fold, minkowski_sum, parse_set

    a = parse_set(basis)
    if other is not None:
        result, operation = minkowski_sum(a, parse_set(other, a.ambient)), "A+B"
    else:
        if h < 1:
            raise PreconditionError(f"h must be at least 1, got {h}")
        result, operation = h_fold(a, h), f"{h}A"
    emit({"operation": operation, "result": format_set(result)}, "sumset")


@cli.command()
@carrier_option
@basis_option
@click.option("--kmax", type=int, default=1, show_default=True)
@handle_errors
def essential(carrier, basis, kmax):
    """Reservoir and essential subsets of size at most kmax."""
    from src.core.basis import essential_subsets

    t = load_carrier(carrier)
    emit(essential_subsets(load_set(basis, t), t, kmax), "essential")


@cli.command()
@carrier_option
@basis_option
@removed_option
@handle_errors
def regular(carrier, basis, removed):
    """Whether A \\ F is still a basis."""
    from src.core.basis import erdos_graham
    from src.core.basis.criterion import removal_subgroup

    t = load_carrier(carrier)
    a, f = load_set(basis, t), load_set(removed, t)
    verdict = erdos_graham(a, f, t)
    payload: Dict[str, Any] = {"regular": verdict}
    if not a.difference(f).is_empty():
        h = removal_subgroup(a, f)
        payload.update(subgroup=h.describe(), index=index_text(h.index()))
    emit(payload, "regular")


@cli.command()
@carrier_option
@basis_option
@removed_option
@handle_errors
def remove(carrier, basis, removed):
    """Order of A \\ F when F is regular."""
    from src.core.basis import removal_order

    t = load_carrier(carrier)
    emit(removal_order(load_set(basis, t), load_set(removed, t), t), "remove")


@cli.command()
@carrier_option
@handle_errors
def classify(carrier):
    """Structure of T: a group, or cofinite in C + x'N."""
    from src.core.structure import structure_decompose

    emit(structure_decompose(load_carrier(carrier)), "classify")


@cli.command()
@carrier_option
@handle_errors
def grothendieck(carrier):
    """The subgroup generated by T - T."""
    from src.core.structure import grothendieck as group_of

    h = group_of(load_carrier(carrier))
    emit({"subgroup": h.describe(), "index": index_text(h.index())}, "grothendieck")


@cli.command()
@carrier_option
@click.option("--S", "subset", required=True, help="Set literal.")
@handle_errors
def density(carrier, subset):
    """Natural density of S relative to T."""
    from src.core.density import density_report

    t = load_carrier(carrier)
    emit(density_report(load_set(subset, t), t), "density")


@cli.group()
def audit() -> None:
    """Lemma and bound audits."""


@audit.command("twobases")
@carrier_option
@removed_option
@click.option("--B", "rest", required=True, help="Infinite part B.")
@click.option("--b", "anchor", required=True, help="Element b of B.")
@handle_errors
def audit_twobases(carrier, removed, rest, anchor):
    """Order sandwich h1 + 1 <= h <= h1 + h2 for A = F + B."""
    from src.core.basis import twobases_audit
    from src.core.perset import parse_element

    t = load_carrier(carrier)
    report = twobases_audit(
        load_set(removed, t), load_set(rest, t), parse_element(anchor, t.ambient), t
    )
    emit(report, "twobases")


@audit.command("nn")
@carrier_option
@basis_option
@removed_option
@handle_errors
def audit_nn(carrier, basis, removed):
    """B - b is a basis of T inside <B - B>."""
    from src.core.basis import lemma_nn_audit

    t = load_carrier(carrier)
    emit(lemma_nn_audit(load_set(basis, t), load_set(removed, t), t), "nn")


def _bound_command(name: str) -> None:
    @audit.command(name)
    @carrier_option
    @click.option("--A", "basis", default=None, help="Audit one basis instead of a corpus.")
    @click.option("--count", type=int, default=20, show_default=True)
    @handle_errors
    def command(carrier, basis, count):
        from src.core.basis import basis_order, bound_audit
        from src.core.errors import PreconditionError
        from src.core.pipeline.corpus import corpus_audit
        from src.core.pipeline.schema import CorpusAudit

        opts = click.get_current_context().find_object(RunOptions)
        t = load_carrier(carrier)
        kind = CorpusAudit(name)
        if basis is None:
            report = corpus_audit(kind, t, count, opts.seed, opts.workers)
            emit(report, f"audit {name}")
            if not report.ok:
                click.get_current_context().exit(3)
            return
        a = load_set(basis, t)
        h = basis_order(a, t)
        if h is None:
            raise PreconditionError(f"A = {a} is not a basis of T")
        k = 1 if kind in (CorpusAudit.S1, CorpusAudit.X1) else 2
        study = bound_audit(a, t, h, k)
        payload = as_payload(study)
        payload["ok"] = study.ok
        emit(payload, f"audit {name}")
        if not study.ok:
            click.get_current_context().exit(3)

    command.__doc__ = f"Explicit {name} bound, on one basis or a seeded corpus."


for _name in ("s1", "s2", "x1", "x2"):
    _bound_command(_name)


@audit.command("density-lemmas")
@carrier_option
@click.option("--instances", type=int, default=None, help="Random instances per lemma.")
@click.option(
    "--lemma",
    "lemmas",
    multiple=True,
    type=click.Choice([lemma.value for lemma in DensityLemma]),
    help="Restrict to these lemmas (repeatable).",
)
@handle_errors
def audit_density(carrier, instances, lemmas):
    """Density lemmas on seeded random instances."""
    from src.core.density import density_lemma_suite

    opts = click.get_current_context().find_object(RunOptions)
    report = density_lemma_suite(
        load_carrier(carrier),
        instances,
        opts.seed,
        [DensityLemma(x) for x in lemmas] or None,
        opts.workers,
    )
    payload = as_payload(report)
    payload["ok"] = report.ok
    emit(payload, "density lemmas")
    if not report.ok:
        click.get_current_context().exit(3)


@cli.command()
@click.argument("target", type=click.Choice(["E", "X"]))
@carrier_option
@click.option("--h", "h", type=int, required=True)
@click.option("--k", "k", type=int, default=1, show_default=True)
@click.option("--max-period", type=int, default=6, show_default=True)
@click.option("--max-window", type=int, default=12, show_default=True)
@click.option("--max-size", type=int, default=2, show_default=True)
@click.option("--samples", type=int, default=2000, show_default=True)
@handle_errors
def search(target, carrier, h, k, max_period, max_window, max_size, samples):
    """Search bases W + (Q + pN) for large E or X values."""
    from src.core.basis import SearchBudget, SearchTarget, witness_search

    opts = click.get_current_context().find_object(RunOptions)
    budget = SearchBudget(
        max_period=max_period, max_window=max_window, max_size=max_size, samples=samples
    )
    report = witness_search(
        load_carrier(carrier), h, k, budget, SearchTarget(target), opts.seed, opts.workers
    )
    emit(report, f"search {target}")


@cli.command("fpt-verify")
@click.option("--p", "p", type=int, default=2, show_default=True)
@click.option("--r", "r", type=int, default=2, show_default=True)
@click.option("--h", "h", type=int, default=2, show_default=True)
@click.option("--D", "degree", type=int, default=None, help="Truncation degree (default r*h + 4).")
@click.option("--samples", type=int, default=None, help="Random reconstructions.")
@click.option("--removal-orders", is_flag=True, default=False, help="Also compute orders of A minus x.")
@handle_errors
def fpt_verify(p, r, h, degree, samples, removal_orders):
    """Graded basis of F_p[t]: order and essential hyperplane complements."""
    from src.core.fpt import build_remark_basis, essential_hyperplane_count, remark_removal_orders

    opts = click.get_current_context().find_object(RunOptions)
    degree = r * h + 4 if degree is None else degree
    built = build_remark_basis(p, r, h, degree, samples, opts.seed)
    payload: Dict[str, Any] = {
        "basis": as_payload(built),
        "hyperplanes": as_payload(essential_hyperplane_count(p, r, h, degree, opts.workers)),
    }
    if removal_orders:
        payload["removal_orders"] = as_payload(remark_removal_orders(p, r, h, degree))
    emit(payload, "fpt verify")


@cli.command("verify-paper")
@click.option("--corpus-size", type=int, default=None, help="Bases per removal bound audit.")
@click.option("--density-instances", type=int, default=None)
@click.option("--only", type=int, multiple=True, help="Run only these items (repeatable).")
@handle_errors
def verify_paper(corpus_size, density_instances, only):
    """Run the acceptance suite and print a pass/fail table."""
    from src.core.pipeline.verify import SuiteOptions, acceptance_suite

    opts = click.get_current_context().find_object(RunOptions)
    options = SuiteOptions(workers=opts.workers, seed=opts.seed)
    if corpus_size is not None:
        options.corpus_size = corpus_size
    if density_instances is not None:
        options.density_instances = density_instances
    report = acceptance_suite(options, list(only) or None)
    emit(report, "acceptance suite")
    if not report.ok:
        click.get_current_context().exit(3)
