"""Shared test oracles: brute-force enumeration, classical matrices, the grid.

Everything here is deliberately coded independently of the package internals
it checks: the brute-force enumerator filters raw candidate tuples through
explicit inequality predicates, and the classical oracle builds q = 1
matrices from plain float arithmetic.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from qsorep import GTPattern, HalfInt, Signature, validate_signature


def grid_signatures(n: int, max_twice: int = 4) -> list[Signature]:
    """Valid so_n signatures with entries in {0, 1/2, ..., max/2}, both parities."""
    p = n // 2
    out = []
    for parity in (0, 1):
        values = [t for t in range(parity, max_twice + 1, 2)]
        for tup in itertools.product(values, repeat=p):
            if all(tup[i] >= tup[i + 1] for i in range(p - 1)):
                sig = Signature(n, tuple(HalfInt(t) for t in tup))
                if validate_signature(sig) is None:
                    out.append(sig)
    return out


def acceptance_grid() -> list[Signature]:
    return [sig for n in (3, 4, 5, 6) for sig in grid_signatures(n)]


def _interlaces(upper_level: int, upper: tuple[int, ...], lower: tuple[int, ...]) -> bool:
    """Betweenness predicate on twice-values, written out longhand."""
    if upper_level % 2 == 1:
        # odd row over even row, equal lengths p
        p = len(upper)
        if len(lower) != p:
            return False
        chain: list[int] = []
        for i in range(p):
            chain.append(upper[i])
            chain.append(lower[i])
        ok = all(chain[i] >= chain[i + 1] for i in range(len(chain) - 1))
        return ok and lower[p - 1] >= -upper[p - 1]
    # even row (p entries) over odd row (p - 1 entries)
    p = len(upper)
    if len(lower) != p - 1:
        return False
    chain = []
    for i in range(p - 1):
        chain.append(upper[i])
        chain.append(lower[i])
    ok = all(chain[i] >= chain[i + 1] for i in range(len(chain) - 1))
    if p - 1 >= 1:
        ok = ok and lower[p - 2] >= abs(upper[p - 1])
    return ok


def brute_force_pattern_count(sig: Signature) -> int:
    """Count patterns by filtering raw candidate rows; independent of branch()."""
    top = tuple(v.twice for v in sig.m)
    bound = max((abs(t) for t in top), default=0)
    parity = top[0] % 2 if top else 0
    values = [v for v in range(-bound, bound + 1) if (v - parity) % 2 == 0]

    def extend(level: int, row: tuple[int, ...]) -> int:
        if level == 2:
            return 1
        lower_len = (level - 1) // 2
        total = 0
        for cand in itertools.product(values, repeat=lower_len):
            if _interlaces(level, row, cand):
                total += extend(level - 1, cand)
        return total

    return extend(sig.n, top)


# Classical (q = 1) Gelfand-Tsetlin so_n oracle, plain float arithmetic.


def _cl_l(row: tuple[float, ...], level: int) -> list[float]:
    p = level // 2
    if level % 2 == 1:
        return [m + (p - i) for i, m in enumerate(row)]
    return [m + (p - i - 1) for i, m in enumerate(row)]


def _cl_row(pattern: GTPattern, level: int) -> list[float]:
    if level < 2:
        return []
    return _cl_l(tuple(v.twice / 2.0 for v in pattern.row(level).m), level)


def _cl_a(above, row, below, j):
    r = row[j]
    num = 1.0
    for a in above:
        num *= (a + r) * (a - r - 1)
    for b in below:
        num *= (b + r) * (b - r - 1)
    den = 1.0
    for i, ri in enumerate(row):
        if i == j:
            continue
        den *= (ri + r) * (ri - r) * (ri + r + 1) * (ri - r - 1)
    return 0.5 * math.sqrt(abs(num / den))


def _cl_b(above, row, below, j):
    r = row[j]
    num = 1.0
    for a in above:
        num *= (a + r) * (a - r)
    for b in below:
        num *= (b + r) * (b - r)
    den = (2 * r + 1) * (2 * r - 1) * r * r
    for i, ri in enumerate(row):
        if i == j:
            continue
        den *= (ri + r) * (ri - r) * (ri + r - 1) * (ri - r - 1)
    return math.sqrt(abs(num / den))


def _cl_c(above, row, below):
    if above[-1] == 0.0:
        return 0.0
    num = 1.0
    for a in above:
        num *= a
    for b in below:
        num *= b
    den = 1.0
    for r in row:
        den *= r * (r - 1)
    return num / den


def classical_generator(basis: list[GTPattern], k: int) -> np.ndarray:
    """Dense classical T(I_{k,k-1}) over the given ordered basis."""
    index = {pat: i for i, pat in enumerate(basis)}
    dim = len(basis)
    out = np.zeros((dim, dim), dtype=np.complex128)
    odd = k % 2 == 1
    slots = (k - 1) // 2
    for ci, xi in enumerate(basis):
        above = _cl_row(xi, k)
        below = _cl_row(xi, k - 2)
        if not odd:
            out[ci, ci] += 1j * _cl_c(above, _cl_row(xi, k - 1), below)
        for j in range(slots):
            raised = xi.bump(k - 1, j, +1)
            ri = index.get(raised)
            if ri is None:
                continue
            row = _cl_row(xi, k - 1)
            amp = _cl_a(above, row, below, j) if odd else _cl_b(above, row, below, j)
            out[ri, ci] += amp
            out[ci, ri] -= amp
    return out
