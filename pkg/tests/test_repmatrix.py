import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

from conftest import grid_signatures
from qsorep import (
    HalfInt,
    QMode,
    Signature,
    UnsupportedModeError,
    build_rep,
    d_squared,
    enumerate_patterns,
    even_diag_element,
    even_step_numerator,
    even_step_squared,
    generator_matrix,
    odd_step_numerator,
    odd_step_squared,
    q_number,
    q_two,
)
from qsorep.repmatrix import _lrow

EXACT = QMode.exact(3)


def hf(v):
    return HalfInt.of(v)


def lrow(*vals):
    return tuple(hf(v) for v in vals)


def test_d_squared_at_zero():
    # balanced form stays finite at l = 0: d(0)^2 = 1 / (2 [2])
    assert d_squared(hf(0), EXACT) == 1 / (2 * q_two(EXACT))
    m = QMode.float_q(0.8)
    assert d_squared(hf(0), m) == pytest.approx(1 / (2 * q_two(m)))


def test_odd_step_squared_so3_specialization():
    # so_3 top l = j + 1: squared amplitude d(m)^2 [l3 + m][l3 - m - 1]
    # j = 1, m = 0: equals 1/2 at every q
    assert odd_step_squared(lrow(2), lrow(0), (), 0, EXACT) == Fraction(1, 2)
    sq = odd_step_squared(lrow(2), lrow(0), (), 0, QMode.float_q(1.37))
    assert sq.real == pytest.approx(0.5)
    # generic slot: compare against the formula assembled by hand
    mode = QMode.exact(Fraction(7, 2))
    l3, l2 = hf(3), hf(1)
    expected = d_squared(l2, mode) * q_number(l3 + l2, mode) * q_number(l3 - l2 - 1, mode)
    assert odd_step_squared((l3,), (l2,), (), 0, mode) == expected


def test_even_step_squared_so4_specialization():
    # rows l4 = (3, 1), l3 = (2), l2 = (1): value [3]/[2]^2 exactly
    got = even_step_squared(lrow(3, 1), lrow(2), lrow(1), 0, EXACT)
    assert got == Fraction(6643, 6724)  # [3]/[2]^2 at q = 9
    three = q_number(3, EXACT)
    two = q_number(2, EXACT)
    assert got == three / two**2


def test_even_diag_element_examples():
    # so_3 bottom row: diagonal is [m]; sign preserved for negative m
    assert even_diag_element(lrow(2), (), (), EXACT) == q_number(2, EXACT)
    assert even_diag_element(lrow(-1), (), (), EXACT) == -1
    # vanishing rule: last middle coordinate 0 kills the element exactly
    assert even_diag_element(lrow(2, 0), lrow(1), lrow(0), EXACT) == 0
    # 0/0 guarded case: l4 = (2, 0) above l3 = (1) would divide by [0]
    assert even_diag_element(lrow(2, 0), lrow(1), lrow(1), EXACT) == 0


def test_so3_generator_matrices():
    sig = Signature.of(3, [1])
    for q in (0.9, 2.0, cmath.exp(0.3j)):
        bundle = build_rep(sig, QMode.float_q(q))
        t21 = bundle.generator(2).to_dense()
        np.testing.assert_allclose(t21, np.diag([1j, 0, -1j]), atol=1e-14)
        t32 = bundle.generator(3).to_dense()
        a = 1 / math.sqrt(2)
        expected = np.array([[0, a, 0], [-a, 0, a], [0, -a, 0]], dtype=complex)
        np.testing.assert_allclose(t32, expected, atol=1e-14)
        # real antisymmetric tridiagonal
        assert np.max(np.abs(t32 + t32.T)) < 1e-14
        assert np.max(np.abs(t32.imag)) < 1e-14


def test_trivial_representation_is_zero():
    for n in (3, 4, 5, 6):
        sig = Signature.of(n, [0] * (n // 2))
        bundle = build_rep(sig, QMode.float_q(0.9))
        assert bundle.dim == 1
        for g in bundle.generators:
            assert g.entries == ()


def test_build_rep_shapes():
    cases = [(3, [1], 2, 3), (5, ["1/2", "1/2"], 4, 4), (4, [1, 0], 3, 4)]
    for n, w, ngen, dim in cases:
        bundle = build_rep(Signature.of(n, w), QMode.float_q(0.9))
        assert len(bundle.generators) == ngen
        assert bundle.dim == dim
        assert all(g.dim == dim for g in bundle.generators)


def test_generator_errors():
    sig = Signature.of(4, [1, 0])
    with pytest.raises(UnsupportedModeError):
        generator_matrix(sig, 2, EXACT)
    with pytest.raises(UnsupportedModeError):
        build_rep(sig, EXACT)
    with pytest.raises(ValueError):
        generator_matrix(sig, 5, QMode.float_q(0.9))
    with pytest.raises(ValueError):
        generator_matrix(Signature.of(5, [0, 1]), 3, QMode.float_q(0.9))


def test_sparsity_structure():
    sig = Signature.of(5, [1, 1])
    mode = QMode.float_q(0.9)
    bundle = build_rep(sig, mode)
    basis = bundle.basis
    for g in bundle.generators:
        for r, c, v in g.entries:
            if r == c:
                assert g.k % 2 == 0  # diagonal only for even generators
                assert abs(v.real) < 1e-14  # purely imaginary diagonal
                continue
            src, dst = basis[c], basis[r]
            diffs = []
            for level in range(2, sig.n + 1):
                a, b = src.row(level).m, dst.row(level).m
                for j in range(len(a)):
                    if a[j] != b[j]:
                        diffs.append((level, j, b[j].twice - a[j].twice))
            assert len(diffs) == 1
            level, _, delta = diffs[0]
            assert level == g.k - 1 and abs(delta) == 2  # one slot moved by 1


def test_antisymmetry_pairing_exact():
    bundle = build_rep(Signature.of(6, [1, 1, 0]), QMode.float_q(1.3))
    for g in bundle.generators:
        dense = g.to_dense()
        off = dense - np.diag(np.diag(dense))
        assert np.max(np.abs(off + off.T)) == 0.0  # entry pairing is exact


def test_boundary_zero_numerators():
    # every forbidden raise/lower carries a vanishing numerator bracket
    for sig in [Signature.of(5, [1, 0]), Signature.of(4, ["3/2", "1/2"]), Signature.of(6, [1, 1, 1])]:
        basis = enumerate_patterns(sig)
        index = {p: i for i, p in enumerate(basis)}
        for xi in basis:
            for k in range(3, sig.n + 1):
                odd = k % 2 == 1
                numerator = odd_step_numerator if odd else even_step_numerator
                for j in range((k - 1) // 2):
                    above, below = _lrow(xi, k), _lrow(xi, k - 2)
                    if xi.bump(k - 1, j, +1) not in index:
                        row = _lrow(xi, k - 1)
                        assert numerator(above, row, below, j, EXACT) == 0
                    lowered = xi.bump(k - 1, j, -1)
                    if lowered not in index:
                        row = _lrow(lowered, k - 1)
                        assert numerator(above, row, below, j, EXACT) == 0


def test_entries_finite_across_sample():
    for sig in grid_signatures(5):
        bundle = build_rep(sig, QMode.polar(0.3))
        for g in bundle.generators:
            dense = g.to_dense()
            assert np.all(np.isfinite(dense.real)) and np.all(np.isfinite(dense.imag))


def test_q_inverse_symmetry():
    sig = Signature.of(5, ["3/2", "1/2"])
    for qa, qb in [(0.9, 1 / 0.9), (cmath.exp(0.3j), cmath.exp(-0.3j))]:
        ma = build_rep(sig, QMode.float_q(qa))
        mb = build_rep(sig, QMode.float_q(qb))
        for ga, gb in zip(ma.generators, mb.generators):
            diff = np.max(np.abs(ga.to_dense() - gb.to_dense()))
            assert diff <= 1e-12


def test_classical_mode_equals_small_q_limit():
    sig = Signature.of(4, [1, 1])
    classical = build_rep(sig, QMode.classical())
    near_one = build_rep(sig, QMode.float_q(1 + 1e-6))
    for gc, gn in zip(classical.generators, near_one.generators):
        assert np.max(np.abs(gc.to_dense() - gn.to_dense())) <= 1e-4
