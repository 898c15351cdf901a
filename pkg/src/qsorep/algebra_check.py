"""Verification of the defining relations, star property and irreducibility.

The nonstandard q-deformation of so_n imposes, for adjacent generators
X = T(I_{k,k-1}) and Y = T(I_{k-1,k-2}),

    X^2 Y + Y X^2 - [2] X Y X = -Y
    Y^2 X + X Y^2 - [2] Y X Y = -X

commutativity [X, Y] = 0 for non-adjacent pairs, and the star condition
T* = -T for q = e^h or e^{ih}.  Residuals are measured in the
max-absolute-entry norm, normalized by the largest entry of the inputs so
tolerances stay dimension-independent.

Irreducibility is decided numerically through Schur's criterion: the
commutant {M : M T_k = T_k M for all k} is the joint nullspace of the
stacked commutator operators K_k = T_k (x) 1 - 1 (x) T_k^t acting on dim^2
unknowns, and the representation is irreducible iff that nullspace is
one-dimensional.  Singular values below 1e-8 times the largest count as
zero; a rank decision without a 1e2 gap between the smallest kept and the
largest dropped singular value is refused rather than guessed.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .qnum import FLOAT, QMode, q_two
from .repmatrix import GeneratorMatrix, RepBundle

SV_TOL = 1e-8
GAP_FACTOR = 1e2
DEFAULT_COMMUTANT_CAP = 64

TRILINEAR = "trilinear"
COMMUTATION = "commutation"
STAR = "star"


class IndeterminateCommutant(Exception):
    """The singular-value gap is too small to call the commutant rank."""


@dataclass(frozen=True)
class ResidualReport:
    relation: str
    pair: tuple[int, int]
    residual: float
    tolerance: float
    passed: bool


def _max_abs(m: np.ndarray) -> float:
    return float(np.max(np.abs(m))) if m.size else 0.0


def trilinear_residual(x: GeneratorMatrix, y: GeneratorMatrix, mode: QMode) -> float:
    """Max-entry residual of both trilinear relations for an adjacent pair.

    x must be T(I_{k,k-1}) and y the neighbour T(I_{k-1,k-2}) of the same
    bundle.
    """
    if x.dim != y.dim:
        raise ValueError(f"dimension mismatch: {x.dim} vs {y.dim}")
    if x.k - y.k != 1:
        raise ValueError(f"generators k={x.k}, k={y.k} are not an adjacent (k, k-1) pair")
    two = complex(q_two(mode))
    xd, yd = x.to_dense(), y.to_dense()
    xx, yy = xd @ xd, yd @ yd
    e1 = xx @ yd + yd @ xx - two * (xd @ yd @ xd) + yd
    e2 = yy @ xd + xd @ yy - two * (yd @ xd @ yd) + xd
    return max(_max_abs(e1), _max_abs(e2))


def commutation_residual(x: GeneratorMatrix, y: GeneratorMatrix) -> float:
    """Max-entry norm of [X, Y] for a distant pair |i - k| > 1 (or X = Y)."""
    if x.dim != y.dim:
        raise ValueError(f"dimension mismatch: {x.dim} vs {y.dim}")
    if x.k != y.k and abs(x.k - y.k) <= 1:
        raise ValueError(f"generators k={x.k}, k={y.k} are adjacent; use trilinear_residual")
    xd, yd = x.to_dense(), y.to_dense()
    return _max_abs(xd @ yd - yd @ xd)


def star_residual(x: GeneratorMatrix) -> float:
    """Max-entry norm of X + X^dagger (anti-Hermiticity defect)."""
    xd = x.to_dense()
    return _max_abs(xd + xd.conj().T)


def _zero_count_with_gap(svals: np.ndarray) -> int:
    """Count singular values below SV_TOL * largest, refusing ambiguous gaps."""
    if svals.size == 0:
        return 0
    smax = float(svals[0])
    if smax == 0.0:
        return int(svals.size)
    ordered = np.sort(svals)  # ascending
    threshold = SV_TOL * smax
    count = int(np.searchsorted(ordered, threshold))
    if 0 < count < ordered.size:
        below = float(ordered[count - 1])
        above = float(ordered[count])
        if below > 0 and above / below < GAP_FACTOR:
            raise IndeterminateCommutant(
                f"singular-value gap {above / below:.2e} below {GAP_FACTOR:g} "
                f"at rank boundary ({below:.3e} vs {above:.3e})"
            )
    return count


def _commutator_columns(mats: list[np.ndarray], pairs: list[tuple[int, int]]) -> np.ndarray:
    """Stacked vec([T, e_a e_b*]) columns for the given coordinate pairs."""
    d = mats[0].shape[0]
    g = len(mats)
    out = np.zeros((g * d * d, len(pairs)), dtype=np.complex128)
    for col, (a, b) in enumerate(pairs):
        for gi, t in enumerate(mats):
            block = np.zeros((d, d), dtype=np.complex128)
            block[:, b] += t[:, a]
            block[a, :] -= t[b, :]
            out[gi * d * d : (gi + 1) * d * d, col] = block.ravel()
    return out


def commutant_dimension_matrices(
    mats: list[np.ndarray], *, cap: int = DEFAULT_COMMUTANT_CAP
) -> int:
    """Dimension of {M : [M, T] = 0 for all T in mats}; 1 iff irreducible.

    For small dimensions the stacked commutator operator is factored
    directly.  Beyond that, the joint nullspace is contained in the exactly
    computable nullspace of the first (diagonal) generator, so the stack is
    restricted to that subspace first; the singular values inspected are
    those of the stacked operator on the restricted domain.
    """
    if not mats:
        raise ValueError("need at least one matrix")
    d = mats[0].shape[0]
    if any(m.shape != (d, d) for m in mats):
        raise ValueError("matrices must be square and of equal dimension")
    if d > cap:
        raise ValueError(f"dimension {d} exceeds commutant cap {cap}")
    if d <= 32:
        eye = np.eye(d)
        stacked = np.vstack([np.kron(t, eye) - np.kron(eye, t.T) for t in mats])
        svals = np.linalg.svd(stacked, compute_uv=False)
        return _zero_count_with_gap(svals)
    first = mats[0]
    if _max_abs(first - np.diag(np.diag(first))) > 1e-12 * max(1.0, _max_abs(first)):
        raise ValueError("large-dimension path requires a diagonal first generator")
    diag = np.diag(first)
    scale = max(1.0, float(np.max(np.abs(diag))))
    pairs = [
        (a, b)
        for a in range(d)
        for b in range(d)
        if abs(diag[a] - diag[b]) <= 1e-8 * scale
    ]
    restricted = _commutator_columns(mats, pairs)
    svals = np.linalg.svd(restricted, compute_uv=False)
    return _zero_count_with_gap(svals)


def commutant_dimension(bundle: RepBundle, *, cap: int = DEFAULT_COMMUTANT_CAP) -> int:
    """Schur check for a bundle; requires float mode and dim <= cap."""
    if bundle.mode.kind != FLOAT:
        raise ValueError("commutant check runs in float mode")
    return commutant_dimension_matrices([g.to_dense() for g in bundle.generators], cap=cap)


def relation_suite(
    bundle: RepBundle, tolerance: float = 1e-10, max_workers: int | None = None
) -> list[ResidualReport]:
    """All relation residuals of a bundle, scale-normalized, one report each.

    Adjacent pairs get one trilinear report covering both orientations,
    distant pairs one commutation report, and in float mode every generator
    gets a star report.  Reports are independent, so they may be evaluated
    concurrently; the output order is fixed regardless.
    """
    gens = bundle.generators
    scale = max([1.0] + [_max_abs(g.to_dense()) for g in gens])

    tasks = []
    for a in range(len(gens) - 1):
        x, y = gens[a + 1], gens[a]
        tasks.append((TRILINEAR, (x.k, y.k), lambda x=x, y=y: trilinear_residual(x, y, bundle.mode)))
    for a in range(len(gens)):
        for b in range(a + 2, len(gens)):
            x, y = gens[a], gens[b]
            tasks.append((COMMUTATION, (x.k, y.k), lambda x=x, y=y: commutation_residual(x, y)))
    if bundle.mode.kind == FLOAT:
        for g in gens:
            tasks.append((STAR, (g.k, g.k), lambda g=g: star_residual(g)))

    if max_workers is not None and max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            raws = list(pool.map(lambda t: t[2](), tasks))
    else:
        raws = [t[2]() for t in tasks]

    reports = []
    for (relation, pair, _), raw in zip(tasks, raws):
        residual = raw / scale
        reports.append(
            ResidualReport(
                relation=relation,
                pair=pair,
                residual=residual,
                tolerance=tolerance,
                passed=residual <= tolerance,
            )
        )
    return reports


def suite_max_workers_from_env() -> int | None:
    """Worker cap from QSOREP_THREADS, if set to a positive integer."""
    raw = os.environ.get("QSOREP_THREADS")
    if not raw:
        return None
    try:
        value = int(raw)
    except ValueError:
        return None
    return value if value > 0 else None
