"""Sparse generator matrices for the nonstandard q-deformation of so_n.

The algebra U_q(so_n) is generated by I_{21}, I_{32}, ..., I_{n,n-1} subject
to trilinear relations (see :mod:`qsorep.algebra_check`).  In the
Gelfand-Tsetlin basis the operator T(I_{k,k-1}) moves exactly one entry of
pattern row k-1 by +-1; even k additionally contributes a purely imaginary
diagonal.  With l the shifted coordinates of rows k, k-1, k-2 (written here
as ``above``, ``row``, ``below``) the squared raising amplitude for slot j is

  odd k = 2p+1:

    A_j^2 = d(r_j)^2 * prod_i [a_i + r_j][a_i - r_j - 1]
                     * prod_i [b_i + r_j][b_i - r_j - 1]
            / prod_{i != j} [r_i + r_j][r_i - r_j][r_i + r_j + 1][r_i - r_j - 1]

    with d(l)^2 = [l][l+1] / ([2l][2l+2]) = 1 / ({l}{l+1}); the balanced form
    on the right is used because the bracket form is 0/0 at l = 0, which does
    occur for valid patterns.

  even k = 2p:

    B_j^2 = prod_i [a_i + r_j][a_i - r_j] * prod_i [b_i + r_j][b_i - r_j]
            / ([2r_j + 1][2r_j - 1] [r_j]^2
               * prod_{i != j} [r_i + r_j][r_i - r_j][r_i + r_j - 1][r_i - r_j - 1])

    plus the signed diagonal element

    C = prod_i [a_i] * prod_i [b_i] / prod_i ([r_i][r_i - 1]),

    which vanishes identically when the last entry of the even row above is 0.

The amplitude attached to a transition is the nonnegative square root of the
absolute value of the squared amplitude whenever the brackets are real
(classical mode, q on the positive real axis, or |q| = 1); for those q the
signed squared amplitude is itself nonnegative on betweenness-valid
transitions, the matrices satisfy T* = -T, and lowering entries carry the
amplitude evaluated at the lowered pattern with a minus sign.  For other
complex q the principal complex square root is returned as-is and no
anti-Hermiticity claim is made.

Square roots force floating point: exact rational mode is reserved for the
squared quantities and rejected for assembled matrices.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .gtbasis import GTPattern, Signature, enumerate_patterns, l_coords, validate_signature
from .qnum import CLASSICAL, EXACT, HalfInt, QMode, QScalar, balanced_bracket, q_number


class UnsupportedModeError(ValueError):
    """Raised when an operation cannot run in the requested evaluation mode."""


@dataclass(frozen=True)
class GeneratorMatrix:
    """T(I_{k,k-1}) over the ordered pattern basis, as a sparse entry list."""

    k: int
    dim: int
    entries: tuple[tuple[int, int, complex], ...]
    mode: QMode

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.dim, self.dim), dtype=np.complex128)
        for r, c, v in self.entries:
            out[r, c] += v
        return out


@dataclass(frozen=True)
class RepBundle:
    """A signature, its ordered basis and all generators k = 2..n."""

    signature: Signature
    basis: tuple[GTPattern, ...]
    generators: tuple[GeneratorMatrix, ...]
    mode: QMode

    @property
    def dim(self) -> int:
        return len(self.basis)

    def generator(self, k: int) -> GeneratorMatrix:
        if not 2 <= k <= self.signature.n:
            raise ValueError(f"no generator k={k} in so_{self.signature.n}")
        return self.generators[k - 2]


def _one(mode: QMode) -> QScalar:
    return Fraction(1) if mode.kind in (EXACT, CLASSICAL) else 1 + 0j


def _zero(mode: QMode) -> QScalar:
    return Fraction(0) if mode.kind in (EXACT, CLASSICAL) else 0j


def d_squared(l: HalfInt, mode: QMode) -> QScalar:
    """Normalization d(l)^2 = 1/({l}{l+1}); finite at l = 0, where it is 1/(2[2])."""
    return _one(mode) / (balanced_bracket(l, mode) * balanced_bracket(l + 1, mode))


def odd_step_numerator(above, row, below, j: int, mode: QMode) -> QScalar:
    """Numerator bracket product of the odd-generator raising amplitude.

    Evaluates even at forbidden transitions, where one factor vanishes; used
    to check the boundary-zero property without touching the denominators.
    """
    rj = row[j]
    out = _one(mode)
    for a in above:
        out *= q_number(a + rj, mode) * q_number(a - rj - 1, mode)
    for b in below:
        out *= q_number(b + rj, mode) * q_number(b - rj - 1, mode)
    return out


def even_step_numerator(above, row, below, j: int, mode: QMode) -> QScalar:
    """Numerator bracket product of the even-generator raising amplitude."""
    rj = row[j]
    out = _one(mode)
    for a in above:
        out *= q_number(a + rj, mode) * q_number(a - rj, mode)
    for b in below:
        out *= q_number(b + rj, mode) * q_number(b - rj, mode)
    return out


def odd_step_squared(above, row, below, j: int, mode: QMode) -> QScalar:
    """Signed square of the raising amplitude for T(I_{2p+1,2p}), slot j.

    ``above``, ``row``, ``below`` are the l-coordinate tuples of pattern rows
    2p+1, 2p, 2p-1 (``below`` empty when p = 1); exact in exact mode.
    """
    rj = row[j]
    den = _one(mode)
    for i, ri in enumerate(row):
        if i == j:
            continue
        den *= q_number(ri + rj, mode) * q_number(ri - rj, mode)
        den *= q_number(ri + rj + 1, mode) * q_number(ri - rj - 1, mode)
    return d_squared(rj, mode) * odd_step_numerator(above, row, below, j, mode) / den


def even_step_squared(above, row, below, j: int, mode: QMode) -> QScalar:
    """Signed square of the raising amplitude for T(I_{2p,2p-1}), slot j.

    ``above``, ``row``, ``below`` are the l-coordinate tuples of pattern rows
    2p, 2p-1, 2p-2; raising slots exist only for p >= 2, where all three rows
    are present.
    """
    rj = row[j]
    den = q_number(rj * 2 + 1, mode) * q_number(rj * 2 - 1, mode)
    den *= q_number(rj, mode) ** 2
    for i, ri in enumerate(row):
        if i == j:
            continue
        den *= q_number(ri + rj, mode) * q_number(ri - rj, mode)
        den *= q_number(ri + rj - 1, mode) * q_number(ri - rj - 1, mode)
    return even_step_numerator(above, row, below, j, mode) / den


def even_diag_element(above, row, below, mode: QMode) -> QScalar:
    """Signed diagonal element of T(I_{2p,2p-1}) (enters multiplied by i).

    Returns exact zero when the last l-coordinate of the even row above is 0;
    that vanishing is definitional and shields the 0/0 configurations that
    valid patterns can reach.
    """
    p = len(above)
    if above[p - 1].twice == 0:
        return _zero(mode)
    num = _one(mode)
    for a in above:
        num *= q_number(a, mode)
    for b in below:
        num *= q_number(b, mode)
    den = _one(mode)
    for r in row:
        den *= q_number(r, mode) * q_number(r - 1, mode)
    if den == 0:
        raise ArithmeticError(
            "vanishing diagonal denominator with nonzero last coordinate; "
            "input rows do not come from a valid pattern"
        )
    return num / den


def _amplitude(squared: QScalar, mode: QMode) -> complex:
    if mode.kind == CLASSICAL:
        return complex(math.sqrt(abs(squared)))
    if mode.real_brackets:
        return complex(math.sqrt(abs(squared.real)))
    return cmath.sqrt(squared)


def odd_step_amplitude(above, row, below, j: int, mode: QMode) -> complex:
    """Raising amplitude for odd generators: |squared|^(1/2), >= 0 for real brackets."""
    if mode.kind == EXACT:
        raise UnsupportedModeError("amplitudes need square roots; use odd_step_squared in exact mode")
    return _amplitude(odd_step_squared(above, row, below, j, mode), mode)


def even_step_amplitude(above, row, below, j: int, mode: QMode) -> complex:
    """Raising amplitude for even generators: |squared|^(1/2), >= 0 for real brackets."""
    if mode.kind == EXACT:
        raise UnsupportedModeError("amplitudes need square roots; use even_step_squared in exact mode")
    return _amplitude(even_step_squared(above, row, below, j, mode), mode)


def _lrow(pattern: GTPattern, level: int) -> tuple[HalfInt, ...]:
    if level < 2:
        return ()
    return l_coords(pattern.row(level)).l


def _assemble(sig: Signature, k: int, mode: QMode, basis, index) -> GeneratorMatrix:
    odd = k % 2 == 1
    slots = (k - 1) // 2
    entries: list[tuple[int, int, complex]] = []
    for ci, xi in enumerate(basis):
        above = _lrow(xi, k)
        row = _lrow(xi, k - 1)
        below = _lrow(xi, k - 2)
        if not odd:
            c = even_diag_element(above, row, below, mode)
            if c != 0:
                entries.append((ci, ci, 1j * complex(float(c) if isinstance(c, Fraction) else c)))
        for j in range(slots):
            raised = xi.bump(k - 1, j, +1)
            ri = index.get(raised)
            if ri is None:
                continue
            if odd:
                amp = odd_step_amplitude(above, row, below, j, mode)
            else:
                amp = even_step_amplitude(above, row, below, j, mode)
            # raising entry from xi, and the paired lowering entry from the
            # raised pattern: same amplitude, opposite sign.
            entries.append((ri, ci, complex(amp)))
            entries.append((ci, ri, -complex(amp)))
    entries.sort(key=lambda e: (e[0], e[1]))
    return GeneratorMatrix(k=k, dim=len(basis), entries=tuple(entries), mode=mode)


def generator_matrix(sig: Signature, k: int, mode: QMode) -> GeneratorMatrix:
    """Assemble T(I_{k,k-1}) over the ordered pattern basis of sig."""
    violation = validate_signature(sig)
    if violation is not None:
        raise ValueError(f"invalid signature {sig}: {violation}")
    if not 2 <= k <= sig.n:
        raise ValueError(f"generator index k={k} outside 2..{sig.n}")
    if mode.kind == EXACT:
        raise UnsupportedModeError("exact mode cannot produce square-rooted matrices")
    basis = enumerate_patterns(sig)
    index = {pat: i for i, pat in enumerate(basis)}
    return _assemble(sig, k, mode, basis, index)


def build_rep(sig: Signature, mode: QMode) -> RepBundle:
    """All generators k = 2..n of the representation with highest weight sig."""
    violation = validate_signature(sig)
    if violation is not None:
        raise ValueError(f"invalid signature {sig}: {violation}")
    if mode.kind == EXACT:
        raise UnsupportedModeError("exact mode cannot produce square-rooted matrices")
    basis = enumerate_patterns(sig)
    index = {pat: i for i, pat in enumerate(basis)}
    gens = tuple(_assemble(sig, k, mode, basis, index) for k in range(2, sig.n + 1))
    return RepBundle(signature=sig, basis=tuple(basis), generators=gens, mode=mode)
