"""
Integer lattice normal forms on plain ``List[List[int]]`` matrices.

Row operations only for Hermite form; Smith form tracks the left and right
unimodular transforms (and the inverse of the right one) so that quotient
isomorphisms can be written down explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from src.core.errors import PreconditionError
from src.core.telemetry.metrics import MetricsCollector

Matrix = List[List[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    cols = list(zip(*b)) if b else []
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def vecmul(v: Sequence[int], m: Sequence[Sequence[int]]) -> List[int]:
    if not m:
        return []
    return [sum(x * row[j] for x, row in zip(v, m)) for j in range(len(m[0]))]


def _axpy(q: int, x: Sequence[int], y: Sequence[int]) -> List[int]:
    """``y - q·x``."""
    return [b - q * a for a, b in zip(x, y)]


def hermite_rows(rows: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """
    Row-style Hermite normal form of the lattice spanned by ``rows``.

    Rows come back echelon with positive pivots, entries above a pivot
    reduced into ``[0, pivot)`` and zero rows dropped, so two generating
    sets span the same lattice iff their forms are equal.
    """
    MetricsCollector().track_kernel("hermite")
    m = [list(r) for r in rows if any(r)]
    for r in m:
        if len(r) != ncols:
            raise PreconditionError(f"row {r} does not have {ncols} columns")
    pivots: List[int] = []
    top = 0
    for col in range(ncols):
        while True:
            live = [i for i in range(top, len(m)) if m[i][col]]
            if not live:
                break
            best = min(live, key=lambda i: abs(m[i][col]))
            m[top], m[best] = m[best], m[top]
            if m[top][col] < 0:
                m[top] = [-x for x in m[top]]
            clean = True
            for i in range(top + 1, len(m)):
                if m[i][col]:
                    m[i] = _axpy(m[i][col] // m[top][col], m[top], m[i])
                    clean = clean and not m[i][col]
            if clean:
                break
        if top < len(m) and m[top][col]:
            pivots.append(col)
            top += 1
    m = m[:top]
    for k, col in enumerate(pivots):
        p = m[k][col]
        for i in range(k):
            q = m[i][col] // p
            if q:
                m[i] = _axpy(q, m[k], m[i])
    return m


def pivot_columns(hnf: Sequence[Sequence[int]]) -> List[int]:
    return [next(j for j, x in enumerate(row) if x) for row in hnf]


def solve_triangular(hnf: Sequence[Sequence[int]], v: Sequence[int]) -> List[int]:
    """Integer ``x`` with ``x · hnf = v``; raises if ``v`` is outside the lattice."""
    rest = list(v)
    x = []
    for row, col in zip(hnf, pivot_columns(hnf)):
        q, r = divmod(rest[col], row[col])
        if r:
            raise PreconditionError(f"vector {tuple(v)} is not in the lattice")
        x.append(q)
        if q:
            rest = _axpy(q, row, rest)
    if any(rest):
        raise PreconditionError(f"vector {tuple(v)} is not in the lattice")
    return x


@dataclass
class SmithForm:
    """``U · A · V = D`` with ``D`` diagonal and ``d_1 | d_2 | …``."""

    diagonal: List[int]
    left: Matrix
    right: Matrix
    right_inverse: Matrix


def smith_form(matrix: Sequence[Sequence[int]]) -> SmithForm:
    MetricsCollector().track_kernel("smith")
    a = [list(r) for r in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u, v, v_inv = identity(rows), identity(cols), identity(cols)

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for row in a + v:
            row[i], row[j] = row[j], row[i]
        v_inv[i], v_inv[j] = v_inv[j], v_inv[i]

    def row_op(target: int, source: int, q: int) -> None:
        a[target] = _axpy(q, a[source], a[target])
        u[target] = _axpy(q, u[source], u[target])

    def col_op(target: int, source: int, q: int) -> None:
        for row in a + v:
            row[target] -= q * row[source]
        v_inv[source] = [x + q * y for x, y in zip(v_inv[source], v_inv[target])]

    for s in range(min(rows, cols)):
        while True:
            entries = [
                (abs(a[i][j]), i, j)
                for i in range(s, rows)
                for j in range(s, cols)
                if a[i][j]
            ]
            if not entries:
                break
            _, i, j = min(entries)
            if i != s:
                swap_rows(s, i)
            if j != s:
                swap_cols(s, j)
            if a[s][s] < 0:
                a[s] = [-x for x in a[s]]
                u[s] = [-x for x in u[s]]
            p = a[s][s]
            for i in range(s + 1, rows):
                if a[i][s]:
                    row_op(i, s, a[i][s] // p)
            for j in range(s + 1, cols):
                if a[s][j]:
                    col_op(j, s, a[s][j] // p)
            if any(a[i][s] for i in range(s + 1, rows)) or any(
                a[s][j] for j in range(s + 1, cols)
            ):
                continue
            stray = next(
                (
                    i
                    for i in range(s + 1, rows)
                    for j in range(s + 1, cols)
                    if a[i][j] % p
                ),
                None,
            )
            if stray is None:
                break
            row_op(s, stray, -1)

    diagonal = [a[i][i] for i in range(min(rows, cols))]
    return SmithForm(diagonal, u, v, v_inv)


def invariant_factors(rows: Sequence[Sequence[int]], ncols: int) -> Tuple[int, List[int]]:
    """``ℤ^ncols / span(rows)`` as ``(free rank, invariant factors > 1)``."""
    hnf = hermite_rows(rows, ncols)
    if not hnf:
        return ncols, []
    diagonal = [d for d in smith_form(hnf).diagonal if d]
    return ncols - len(diagonal), [d for d in diagonal if d > 1]
