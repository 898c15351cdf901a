"""q-number arithmetic over three evaluation modes.

The q-number of an integer or half-integer x is

    [x] = (q^x - q^(-x)) / (q - q^(-1)),

and the balanced bracket is {x} = q^x + q^(-x), so that {x}[x] = [2x].
All arguments are carried as :class:`HalfInt` values (twice the value,
stored as an int) so half-integral weights stay exact.

Three evaluation modes are supported:

* ``float``: q is an arbitrary nonzero complex number, results are complex.
* ``exact``: arithmetic over exact rationals at a rational point s = q^(1/2);
  this makes [x] rational even for half-integer x and turns bracket
  identities into polynomial identity tests.
* ``classical``: the q -> 1 limit, where [x] = x and {x} = 2 exactly.
"""

from __future__ import annotations

import cmath
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

QScalar = Union[complex, Fraction]

FLOAT = "float"
EXACT = "exact"
CLASSICAL = "classical"

# q numerically indistinguishable from a root of unity up to this order is
# flagged at QMode construction (excluded hypothesis q^N != 1).
_UNITY_SCAN_MAX = 64
_UNITY_TOL = 1e-12


class RootOfUnityWarning(UserWarning):
    """q is numerically close to a root of unity q^N = 1, 1 <= N <= 64."""


def _twice_of(value) -> int:
    """Twice-integer encoding of an int, HalfInt, Fraction or half-string."""
    if isinstance(value, HalfInt):
        return value.twice
    if isinstance(value, bool):
        raise TypeError("bool is not a half-integer")
    if isinstance(value, int):
        return 2 * value
    if isinstance(value, str):
        value = Fraction(value)
    if isinstance(value, float):
        value = Fraction(value)
    if isinstance(value, Fraction):
        doubled = 2 * value
        if doubled.denominator != 1:
            raise ValueError(f"{value} is not an integer or half-integer")
        return doubled.numerator
    raise TypeError(f"cannot interpret {value!r} as a half-integer")


@dataclass(frozen=True)
class HalfInt:
    """An integer or half-integer stored exactly as twice its value."""

    twice: int

    @classmethod
    def of(cls, value) -> "HalfInt":
        """Coerce an int, Fraction, float or string like ``"3/2"``."""
        return cls(_twice_of(value))

    @property
    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __add__(self, other) -> "HalfInt":
        return HalfInt(self.twice + _twice_of(other))

    __radd__ = __add__

    def __sub__(self, other) -> "HalfInt":
        return HalfInt(self.twice - _twice_of(other))

    def __rsub__(self, other) -> "HalfInt":
        return HalfInt(_twice_of(other) - self.twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __abs__(self) -> "HalfInt":
        return HalfInt(abs(self.twice))

    def __mul__(self, other: int) -> "HalfInt":
        if not isinstance(other, int) or isinstance(other, bool):
            return NotImplemented
        return HalfInt(self.twice * other)

    __rmul__ = __mul__

    def __lt__(self, other):
        return self.twice < _twice_of(other)

    def __le__(self, other):
        return self.twice <= _twice_of(other)

    def __gt__(self, other):
        return self.twice > _twice_of(other)

    def __ge__(self, other):
        return self.twice >= _twice_of(other)

    def __float__(self) -> float:
        return self.twice / 2.0

    def __str__(self) -> str:
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt.of('{self}')"


def _near_unity_order(q: complex) -> int | None:
    """Smallest N in 1..64 with |q^N - 1| below tolerance, if any."""
    power = 1 + 0j
    for n in range(1, _UNITY_SCAN_MAX + 1):
        power *= q
        if abs(power - 1) < _UNITY_TOL:
            return n
    return None


@dataclass(frozen=True)
class QMode:
    """Deformation-parameter context: float complex, exact rational, or q = 1.

    Construct through :meth:`float_q`, :meth:`polar`, :meth:`exact` or
    :meth:`classical`; the raw constructor performs no validation.
    """

    kind: str
    q: complex | None = None
    s: Fraction | None = None
    near_unity_order: int | None = None

    @classmethod
    def float_q(cls, q: complex) -> "QMode":
        q = complex(q)
        if q == 0:
            raise ValueError("q must be nonzero")
        order = _near_unity_order(q)
        if order is not None:
            warnings.warn(
                f"q is within {_UNITY_TOL:g} of a root of unity (q^{order} ~ 1); "
                "representation properties are not guaranteed there",
                RootOfUnityWarning,
                stacklevel=2,
            )
        return cls(kind=FLOAT, q=q, near_unity_order=order)

    @classmethod
    def polar(cls, h: float) -> "QMode":
        """q on the unit circle, q = exp(i h)."""
        return cls.float_q(cmath.exp(1j * h))

    @classmethod
    def exact(cls, s) -> "QMode":
        """Exact rational mode at s = q^(1/2); requires s not in {0, 1, -1}."""
        s = Fraction(s)
        if s == 0 or s == 1 or s == -1:
            raise ValueError("exact mode needs s != 0 and s != +-1 (bracket denominator vanishes)")
        return cls(kind=EXACT, s=s)

    @classmethod
    def classical(cls) -> "QMode":
        return cls(kind=CLASSICAL)

    @property
    def real_brackets(self) -> bool:
        """True when all q-brackets evaluate to real numbers.

        Holds for classical and exact modes and, in float mode, for q on the
        positive real axis or the unit circle (q = e^h or e^{ih}).
        """
        if self.kind != FLOAT:
            return True
        q = self.q
        if q.imag == 0.0 and q.real > 0.0:
            return True
        return abs(abs(q) - 1.0) <= 1e-12


def _q_power_float(q: complex, twice: int) -> complex:
    if twice % 2 == 0:
        return q ** (twice // 2)
    return q ** (twice / 2.0)


@lru_cache(maxsize=None)
def _bracket(twice: int, mode: QMode) -> QScalar:
    if mode.kind == CLASSICAL:
        return Fraction(twice, 2)
    if mode.kind == EXACT:
        s = mode.s
        num = s**twice - s**-twice
        den = s**2 - s**-2
        return num / den
    qx = _q_power_float(mode.q, twice)
    q = mode.q
    return (qx - 1 / qx) / (q - 1 / q)


@lru_cache(maxsize=None)
def _balanced(twice: int, mode: QMode) -> QScalar:
    if mode.kind == CLASSICAL:
        return Fraction(2)
    if mode.kind == EXACT:
        s = mode.s
        return s**twice + s**-twice
    qx = _q_power_float(mode.q, twice)
    return qx + 1 / qx


def q_number(x, mode: QMode) -> QScalar:
    """[x] = (q^x - q^(-x)) / (q - q^(-1)); equals x in classical mode."""
    return _bracket(_twice_of(x), mode)


def balanced_bracket(x, mode: QMode) -> QScalar:
    """{x} = q^x + q^(-x); equals 2 in classical mode."""
    return _balanced(_twice_of(x), mode)


def q_two(mode: QMode) -> QScalar:
    """[2] = q + q^(-1), the coefficient in the trilinear relations."""
    return _bracket(4, mode)
