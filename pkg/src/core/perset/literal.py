"""
Text and JSON forms of periodic sets.

Grammar::

    SET     := [TORSION ';'] CLAUSE (',' CLAUSE)*
    TORSION := 'C=' d1 'x' d2 ...
    CLAUSE  := [TUPLE] ( '{' [int (',' int)*] '}' | a '+' p 'N' | a '-' p 'N' | a '+' p 'Z' )
    TUPLE   := '(' c1 (',' c2)* ')'

``a+pN`` is ``{a, a+p, ...}``, ``a-pN`` is ``{a, a-p, ...}`` and ``a+pZ`` the
whole residue line; a tuple prefix gives the torsion coordinates (default 0).
"""

from __future__ import annotations

import re
from typing import Annotated, List, Optional, Tuple

from pydantic import BaseModel, Field, PlainSerializer

from src.core.errors import AmbientMismatchError, ParseError
from src.core.perset import bitset
from src.core.perset.group import AmbientGroup
from src.core.perset.periodic import PeriodicSet

_INT = re.compile(r"[+-]?\d+")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, token: str) -> bool:
        self.skip()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str) -> None:
        if not self.accept(token):
            found = self.peek() or "end of input"
            raise ParseError(f"expected {token!r}, found {found!r}", self.pos)

    def integer(self, signed: bool = True) -> int:
        self.skip()
        match = _INT.match(self.text, self.pos)
        if not match or (not signed and match.group()[0] in "+-"):
            raise ParseError("expected an integer", self.pos)
        self.pos = match.end()
        return int(match.group())

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)


def _parse_torsion(sc: _Scanner) -> Optional[AmbientGroup]:
    start = sc.pos
    sc.skip()
    if not sc.text.startswith("C", sc.pos):
        return None
    sc.pos += 1
    sc.expect("=")
    factors = [sc.integer(signed=False)]
    while sc.accept("x"):
        factors.append(sc.integer(signed=False))
    sc.expect(";")
    try:
        return AmbientGroup(tuple(factors))
    except ParseError as exc:
        raise ParseError(str(exc), start) from None


def _parse_clause(sc: _Scanner, amb: AmbientGroup) -> PeriodicSet:
    coords: Tuple[int, ...] = (0,) * amb.rank
    if sc.peek() == "(":
        start = sc.pos
        sc.expect("(")
        values = [sc.integer()]
        while sc.accept(","):
            values.append(sc.integer())
        sc.expect(")")
        if len(values) != amb.rank:
            raise ParseError(
                f"torsion tuple has {len(values)} coordinates, ambient needs {amb.rank}",
                start,
            )
        coords = tuple(values)

    if sc.accept("{"):
        elements: List[int] = []
        if not sc.accept("}"):
            elements.append(sc.integer())
            while sc.accept(","):
                elements.append(sc.integer())
            sc.expect("}")
        return PeriodicSet.finite(amb, [coords + (n,) for n in elements])

    a = sc.integer()
    if sc.accept("+"):
        sign = "+"
    elif sc.accept("-"):
        sign = "-"
    else:
        raise ParseError("expected '+' or '-' after progression start", sc.pos)
    step_pos = sc.pos
    p = sc.integer(signed=False)
    if p < 1:
        raise ParseError("progression step must be at least 1", step_pos)
    if sc.accept("N"):
        direction = "right" if sign == "+" else "left"
    elif sc.accept("Z"):
        direction = "line"
    else:
        raise ParseError("expected 'N' or 'Z' after progression step", sc.pos)
    return PeriodicSet.progression(amb, coords + (a,), p, direction)


def parse_set(literal: str, ambient: Optional[AmbientGroup] = None) -> PeriodicSet:
    sc = _Scanner(literal)
    if sc.at_end():
        raise ParseError("empty set literal; write {} for the empty set", 0)
    declared = _parse_torsion(sc)
    if declared is not None and ambient is not None and declared != ambient:
        raise AmbientMismatchError(
            f"literal declares {declared.describe()} but {ambient.describe()} was expected"
        )
    amb = declared or ambient or AmbientGroup()

    result = _parse_clause(sc, amb)
    while sc.accept(","):
        result = result.union(_parse_clause(sc, amb))
    if not sc.at_end():
        raise ParseError(f"unexpected {sc.peek()!r}", sc.pos)
    return result


def parse_element(text: str, ambient: AmbientGroup) -> Tuple[int, ...]:
    """``n`` or ``(c1,...,cr,n)``."""
    sc = _Scanner(text)
    if sc.accept("("):
        values = [sc.integer()]
        while sc.accept(","):
            values.append(sc.integer())
        sc.expect(")")
    else:
        values = [sc.integer()]
    if not sc.at_end():
        raise ParseError(f"unexpected {sc.peek()!r}", sc.pos)
    if len(values) != ambient.rank + 1:
        raise AmbientMismatchError(
            f"element {text!r} does not live in {ambient.describe()}"
        )
    return ambient.normalize(values)


def format_element(g: Tuple[int, ...]) -> str:
    if len(g) == 1:
        return str(g[0])
    return "(" + ",".join(str(x) for x in g) + ")"


def format_set(s: PeriodicSet) -> str:
    amb, p = s.ambient, s.period
    width = s.hi - s.lo
    clauses: List[str] = []
    for c in amb.torsion_indices():
        prefix = "(" + ",".join(str(x) for x in amb.decode(c)) + ")" if amb.rank else ""
        absent = bitset.fold(s.window[c] ^ bitset.mask(width), s.lo, p)
        lines = s.right[c] & s.left[c] & ~absent & bitset.mask(p)
        finite = s.window[c] & ~bitset.tile(lines, p, s.lo, s.hi)
        if finite:
            values = ",".join(str(s.lo + i) for i in bitset.iter_bits(finite))
            clauses.append(f"{prefix}{{{values}}}")
        for r in bitset.iter_bits(lines):
            clauses.append(f"{prefix}{r}+{p}Z")
        for r in bitset.iter_bits(s.right[c] & ~lines):
            clauses.append(f"{prefix}{s.tail_representative('right', c, r)[-1]}+{p}N")
        for r in bitset.iter_bits(s.left[c] & ~lines):
            clauses.append(f"{prefix}{s.tail_representative('left', c, r)[-1]}-{p}N")
    body = ", ".join(clauses) if clauses else "{}"
    return f"{amb.header()}; {body}" if amb.rank else body


class PeriodicSetModel(BaseModel):
    """JSON mirror of a canonical periodic set; integers are decimal strings."""

    torsion: List[str] = Field(default_factory=list)
    period: str
    lo: str
    hi: str
    window: List[List[str]] = Field(default_factory=list)
    right_pattern: List[List[str]] = Field(default_factory=list)
    left_pattern: List[List[str]] = Field(default_factory=list)
    literal: str = ""


def to_model(s: PeriodicSet) -> PeriodicSetModel:
    amb = s.ambient

    def classes(pattern) -> List[List[str]]:
        return [
            [str(x) for x in amb.decode(c)] + [str(r)]
            for c in amb.torsion_indices()
            for r in bitset.iter_bits(pattern[c])
        ]

    return PeriodicSetModel(
        torsion=[str(d) for d in amb.factors],
        period=str(s.period),
        lo=str(s.lo),
        hi=str(s.hi),
        window=[[str(x) for x in g] for g in s.window_elements()],
        right_pattern=classes(s.right),
        left_pattern=classes(s.left),
        literal=format_set(s),
    )


def from_model(model: PeriodicSetModel) -> PeriodicSet:
    try:
        amb = AmbientGroup(tuple(int(d) for d in model.torsion))
        period, lo, hi = int(model.period), int(model.lo), int(model.hi)
        cols = amb.torsion_order
        window, right, left = [0] * cols, [0] * cols, [0] * cols
        for g in model.window:
            c, n = amb.split([int(x) for x in g])
            if not lo <= n < hi:
                raise ParseError(f"window element {g} outside [{lo}, {hi})")
            window[c] |= 1 << (n - lo)
        for target, rows in ((right, model.right_pattern), (left, model.left_pattern)):
            for row in rows:
                values = [int(x) for x in row]
                c = amb.encode(values[:-1])
                target[c] |= 1 << (values[-1] % period)
        return PeriodicSet.build(amb, period, lo, hi, window, right, left)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, (ParseError, AmbientMismatchError)):
            raise
        raise ParseError(f"malformed periodic set JSON: {exc}") from None


# Field types for result models that carry sets and elements.
SetField = Annotated[PeriodicSet, PlainSerializer(lambda s: format_set(s), return_type=str)]
ElementField = Annotated[
    Tuple[int, ...], PlainSerializer(lambda g: format_element(g), return_type=str)
]
