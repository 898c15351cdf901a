"""Signatures, Gelfand-Tsetlin patterns, branching, dimensions and ordering.

An irreducible representation of (the q-deformation of) so_n is labelled by a
signature m = (m_1, ..., m_p), p = floor(n/2), subject to the dominance
condition

    n = 2p+1:  m_1 >= m_2 >= ... >= m_p >= 0
    n = 2p:    m_1 >= m_2 >= ... >= m_{p-1} >= |m_p|

with all components integers or all half-integers.  Basis vectors are
labelled by Gelfand-Tsetlin patterns: stacks of rows for levels n, n-1, ..., 2
in which consecutive rows interlace ("betweenness"):

    (2p+1 over 2p):   m_{1,2p+1} >= m_{1,2p} >= m_{2,2p+1} >= ...
                      >= m_{p,2p+1} >= m_{p,2p} >= -m_{p,2p+1}
    (2p over 2p-1):   m_{1,2p} >= m_{1,2p-1} >= m_{2,2p} >= ...
                      >= m_{p-1,2p-1} >= |m_{p,2p}|

The basis order is fixed once and for all: patterns are compared
lexicographically, rows top to bottom and entries left to right, in
descending order.  Nothing here depends on the deformation parameter; the
pattern combinatorics are those of the classical chain so_n > so_{n-1} > ...
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .qnum import HalfInt


@dataclass(frozen=True)
class Signature:
    """A row of a pattern: the so_n label n together with floor(n/2) entries."""

    n: int
    m: tuple[HalfInt, ...]

    @classmethod
    def of(cls, n: int, values: Iterable) -> "Signature":
        return cls(n, tuple(HalfInt.of(v) for v in values))

    def __str__(self) -> str:
        return f"so{self.n}(" + ",".join(str(v) for v in self.m) + ")"


@dataclass(frozen=True)
class GTPattern:
    """A full Gelfand-Tsetlin scheme: rows for levels n, n-1, ..., 2."""

    rows: tuple[Signature, ...]

    @property
    def n(self) -> int:
        return self.rows[0].n

    @property
    def signature(self) -> Signature:
        return self.rows[0]

    def row(self, level: int) -> Signature:
        if not 2 <= level <= self.n:
            raise ValueError(f"no row at level {level} in an so_{self.n} pattern")
        return self.rows[self.n - level]

    def bump(self, level: int, j: int, step: int) -> "GTPattern":
        """New pattern with entry j (0-based) of the given row shifted by step.

        The result is not validated; membership in an enumerated basis is the
        betweenness check.
        """
        i = self.n - level
        old = self.rows[i]
        new_m = old.m[:j] + (old.m[j] + step,) + old.m[j + 1 :]
        return GTPattern(self.rows[:i] + (Signature(old.n, new_m),) + self.rows[i + 1 :])

    def __str__(self) -> str:
        return "[" + "; ".join(",".join(str(v) for v in r.m) for r in self.rows) + "]"


@dataclass(frozen=True)
class LRow:
    """Shifted (l-)coordinates of one pattern row."""

    level: int
    l: tuple[HalfInt, ...]


def validate_signature(sig: Signature) -> str | None:
    """Return None when sig is a valid highest weight, else a violation text.

    Structural problems (n < 2, wrong number of entries) raise ValueError;
    dominance and parity failures are reported as strings so callers can
    surface them to users.
    """
    if sig.n < 2:
        raise ValueError(f"n must be >= 2, got {sig.n}")
    p = sig.n // 2
    if len(sig.m) != p:
        raise ValueError(f"so_{sig.n} signature needs {p} entries, got {len(sig.m)}")
    parities = {v.twice % 2 for v in sig.m}
    if len(parities) > 1:
        return "mixed parity: entries must be all integers or all half-integers"
    m = sig.m
    for i in range(p - 1):
        bound = abs(m[i + 1]) if (sig.n % 2 == 0 and i == p - 2) else m[i + 1]
        if m[i] < bound:
            if sig.n % 2 == 0 and i == p - 2:
                return f"m{i + 1} >= |m{i + 2}| fails ({m[i]} < |{m[i + 1]}|)"
            return f"m{i + 1} >= m{i + 2} fails ({m[i]} < {m[i + 1]})"
    if sig.n % 2 == 1 and p >= 1 and m[p - 1] < 0:
        return f"m{p} >= 0 fails ({m[p - 1]} < 0)"
    return None


def _slot_bounds_twice(sig: Signature) -> list[tuple[int, int]]:
    """Per-slot (hi, lo) twice-bounds for the next row down; independent boxes."""
    k = sig.n
    m = sig.m
    p = k // 2
    if k % 2 == 1:
        # row 2p below row 2p+1: p slots
        bounds = []
        for i in range(p):
            hi = m[i].twice
            lo = m[i + 1].twice if i < p - 1 else -m[p - 1].twice
            bounds.append((hi, lo))
        return bounds
    # row 2p-1 below row 2p: p-1 slots
    bounds = []
    for i in range(p - 1):
        hi = m[i].twice
        lo = m[i + 1].twice if i < p - 2 else abs(m[p - 1].twice)
        bounds.append((hi, lo))
    return bounds


def _children(sig: Signature) -> Iterator[Signature]:
    """Betweenness-allowed next rows, lexicographically descending."""
    bounds = _slot_bounds_twice(sig)
    ranges = [range(hi, lo - 1, -2) for hi, lo in bounds]
    for twices in itertools.product(*ranges):
        yield Signature(sig.n - 1, tuple(HalfInt(t) for t in twices))


def branch(sig: Signature) -> list[Signature]:
    """All rows that may sit directly below sig in a pattern, in basis order."""
    violation = validate_signature(sig)
    if violation is not None:
        raise ValueError(f"invalid signature {sig}: {violation}")
    if sig.n < 3:
        raise ValueError("level 2 rows have no lower row")
    return list(_children(sig))


def _pattern_tails(row: Signature) -> Iterator[tuple[Signature, ...]]:
    if row.n == 2:
        yield (row,)
        return
    for child in _children(row):
        for tail in _pattern_tails(child):
            yield (row,) + tail


def enumerate_patterns(sig: Signature) -> list[GTPattern]:
    """Every pattern with top row sig, exactly once, in descending lex order."""
    violation = validate_signature(sig)
    if violation is not None:
        raise ValueError(f"invalid signature {sig}: {violation}")
    return [GTPattern(rows) for rows in _pattern_tails(sig)]


@lru_cache(maxsize=None)
def _dim(sig: Signature) -> int:
    if sig.n == 2:
        return 1
    return sum(_dim(child) for child in _children(sig))


def dimension(sig: Signature) -> int:
    """Representation dimension by the branching recursion (level 2 counts 1)."""
    violation = validate_signature(sig)
    if violation is not None:
        raise ValueError(f"invalid signature {sig}: {violation}")
    return _dim(sig)


def l_coords(row: Signature) -> LRow:
    """Shifted coordinates: l_{j,2p+1} = m_j + p - j + 1, l_{j,2p} = m_j + p - j.

    Within a valid odd row the l-coordinates are strictly decreasing with the
    last entry >= 1 (or 3/2 on the half-integer lattice), which keeps all
    bracket denominators of the matrix-element formulas away from zero.
    """
    p = row.n // 2
    if row.n % 2 == 1:
        shifts = [p - i for i in range(p)]  # 1-based j: p - j + 1
    else:
        shifts = [p - i - 1 for i in range(p)]  # 1-based j: p - j
    return LRow(row.n, tuple(m + s for m, s in zip(row.m, shifts)))


def pattern_index(pattern: GTPattern, basis: Sequence[GTPattern]) -> int:
    """Position of pattern in the ordered basis; KeyError when absent.

    Raised or lowered patterns that violate betweenness are not in the basis,
    so callers use the KeyError to drop forbidden transitions.
    """
    try:
        return basis.index(pattern)
    except ValueError:
        raise KeyError(f"pattern {pattern} not in basis") from None
