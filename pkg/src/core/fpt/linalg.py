"""Row reduction over the prime field on ``numpy`` integer arrays."""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

import numpy as np

scalar = np.int64


def as_rows(vectors: Sequence[Sequence[int]], width: int) -> np.ndarray:
    if not len(vectors):
        return np.zeros((0, width), dtype=scalar)
    return np.array(vectors, dtype=scalar).reshape(-1, width)


def row_reduce(rows: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form mod ``p`` and its pivot columns."""
    m = np.array(rows, dtype=scalar) % p
    pivots: List[int] = []
    if m.size == 0:
        return m, pivots
    top = 0
    for col in range(m.shape[1]):
        nonzero = np.nonzero(m[top:, col])[0]
        if nonzero.size == 0:
            continue
        pivot = top + nonzero[0]
        if pivot != top:
            m[[top, pivot]] = m[[pivot, top]]
        m[top] = (m[top] * pow(int(m[top, col]), -1, p)) % p
        others = np.nonzero(m[:, col])[0]
        others = others[others != top]
        if others.size:
            m[others] = (m[others] - np.outer(m[others, col], m[top])) % p
        pivots.append(col)
        top += 1
        if top == m.shape[0]:
            break
    return m[:top], pivots


def rank(rows: np.ndarray, p: int) -> int:
    return len(row_reduce(rows, p)[1])


def missing_columns(rows: np.ndarray, p: int, width: int) -> List[int]:
    """Columns without a pivot; empty exactly when the rows span ``𝔽_p^width``."""
    pivots = set(row_reduce(rows, p)[1])
    return [c for c in range(width) if c not in pivots]


def all_vectors(p: int, n: int, start: int = 0, stop: Optional[int] = None) -> np.ndarray:
    """Vectors numbered ``start .. stop-1`` of ``𝔽_p^n``; row ``i`` holds the base-``p`` digits of ``i``."""
    if n == 0:
        return np.zeros((1, 0), dtype=scalar)
    stop = p**n if stop is None else stop
    idx = np.arange(start, stop, dtype=scalar)
    return np.stack([(idx // p**i) % p for i in range(n)], axis=1)


def encode(vectors: np.ndarray, p: int) -> np.ndarray:
    weights = p ** np.arange(vectors.shape[1], dtype=scalar)
    return (vectors % p) @ weights
