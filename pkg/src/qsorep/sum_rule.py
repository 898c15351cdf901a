"""The bracket sum rule behind the diagonal consistency of the action formulas.

With the bracket pair

    g(x; y) = [x + y] [x - y - 1]

and a ladder configuration of l-coordinates for three adjacent levels
(top = level 2p+1, middle = level 2p, bottom = level 2p-1, the bottom row one
entry shorter), define for each slot r the transition weight

    w_r = prod_s g(top_s; mid_r) * prod_s g(bot_s; mid_r)
          / prod_{s != r} g(mid_s; mid_r) g(mid_s + 1; mid_r)

which equals [2l][2l+2]/([l][l+1]) times the squared raising amplitude of the
odd generator at l = mid_r.  The sum rule states

    sum_r (1/[2 mid_r]) * (w_r(mid_r - 1) - w_r(mid_r)) = 1

for every configuration whose rows come from a valid Gelfand-Tsetlin pattern
(and, as a rational-function identity, at certain formal substitutions
outside that domain).  Evaluating it exactly at rational s = q^(1/2) turns
the claim into polynomial identity testing: each weight is a ratio of at most
4p^2 bracket pairs, every bracket is a Laurent polynomial in s of degree at
most 2*max|2l|, so agreement at three (indeed at one generic) rational s
values with exact arithmetic certifies the identity at that configuration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .gtbasis import GTPattern, Signature, l_coords, validate_signature, _children
from .qnum import HalfInt, QMode, QScalar, q_number


class ZeroWeightDenominator(ArithmeticError):
    """A bracket-pair denominator of a transition weight vanished."""

    def __init__(self, s: int, r: int):
        super().__init__(f"vanishing denominator pair (s={s + 1}, r={r + 1})")
        self.s = s
        self.r = r


@dataclass(frozen=True)
class LadderConfig:
    """l-coordinates of rows at levels 2p+1, 2p, 2p-1 (lengths p, p, p-1)."""

    top: tuple[HalfInt, ...]
    middle: tuple[HalfInt, ...]
    bottom: tuple[HalfInt, ...]

    def __post_init__(self):
        p = len(self.top)
        if p < 1 or len(self.middle) != p or len(self.bottom) != p - 1:
            raise ValueError("rows must have lengths p, p, p-1 with p >= 1")

    @property
    def p(self) -> int:
        return len(self.top)

    @classmethod
    def of(cls, top: Iterable, middle: Iterable, bottom: Iterable = ()) -> "LadderConfig":
        conv = lambda vals: tuple(HalfInt.of(v) for v in vals)
        return cls(conv(top), conv(middle), conv(bottom))

    @classmethod
    def from_rows(cls, odd_above: Signature, even: Signature, odd_below: Signature | None) -> "LadderConfig":
        """Build from pattern rows in m-coordinates at levels 2p+1, 2p, 2p-1."""
        if odd_above.n % 2 == 0 or even.n != odd_above.n - 1:
            raise ValueError("rows must sit at consecutive levels 2p+1, 2p, 2p-1")
        bottom: tuple[HalfInt, ...] = ()
        if odd_below is not None:
            if odd_below.n != even.n - 1:
                raise ValueError("rows must sit at consecutive levels 2p+1, 2p, 2p-1")
            bottom = l_coords(odd_below).l
        return cls(l_coords(odd_above).l, l_coords(even).l, bottom)

    @classmethod
    def from_pattern(cls, pattern: GTPattern, p: int) -> "LadderConfig":
        below = pattern.row(2 * p - 1) if 2 * p - 1 >= 2 else None
        return cls.from_rows(pattern.row(2 * p + 1), pattern.row(2 * p), below)

    def lower(self, r: int) -> "LadderConfig":
        mid = self.middle[:r] + (self.middle[r] - 1,) + self.middle[r + 1 :]
        return LadderConfig(self.top, mid, self.bottom)

    def __str__(self) -> str:
        fmt = lambda row: "(" + ",".join(str(v) for v in row) + ")"
        return f"top={fmt(self.top)} mid={fmt(self.middle)} bot={fmt(self.bottom)}"


def bracket_pair(x, y, mode: QMode) -> QScalar:
    """g(x; y) = [x + y][x - y - 1]."""
    x = HalfInt.of(x)
    y = HalfInt.of(y)
    return q_number(x + y, mode) * q_number(x - y - 1, mode)


def _one(mode: QMode) -> QScalar:
    return Fraction(1) if mode.kind != "float" else 1 + 0j


def transition_weight(config: LadderConfig, r: int, mode: QMode) -> QScalar:
    """Weight w_r of the configuration; exact in exact mode.

    On configurations reachable from valid patterns a denominator pair can
    vanish only when a strictly larger number of numerator factors vanishes
    with it (the betweenness chains force the matching kill factors); every
    vanishing bracket is a simple zero, so the weight's limit is 0 there and
    that exact value is returned.  A vanishing denominator without numerator
    excess is genuinely singular and raises :class:`ZeroWeightDenominator`.
    """
    mid_r = config.middle[r]
    num = _one(mode)
    num_zeros = 0
    for t in config.top:
        factor = bracket_pair(t, mid_r, mode)
        if factor == 0:
            num_zeros += 1
        else:
            num *= factor
    for b in config.bottom:
        factor = bracket_pair(b, mid_r, mode)
        if factor == 0:
            num_zeros += 1
        else:
            num *= factor
    den = _one(mode)
    den_zeros = 0
    first_zero_pair = None
    for s, mid_s in enumerate(config.middle):
        if s == r:
            continue
        for shifted in (mid_s, mid_s + 1):
            factor = bracket_pair(shifted, mid_r, mode)
            if factor == 0:
                den_zeros += 1
                if first_zero_pair is None:
                    first_zero_pair = s
            else:
                den *= factor
    if den_zeros == 0:
        if num_zeros:
            return num * 0
        return num / den
    if num_zeros > den_zeros:
        return num * 0
    raise ZeroWeightDenominator(first_zero_pair, r)


def weight_sum(config: LadderConfig, mode: QMode) -> QScalar:
    """The sum rule's left-hand side; equals 1 on valid configurations."""
    total = q_number(0, mode)
    for r, mid_r in enumerate(config.middle):
        denom = q_number(mid_r * 2, mode)
        if denom == 0:
            raise ZeroDivisionError(f"[2 l_{r + 1}] = 0: configuration outside the sum rule's domain")
        total += (transition_weight(config.lower(r), r, mode) - transition_weight(config, r, mode)) / denom
    return total


@dataclass
class SweepReport:
    """Outcome of an exact sum-rule sweep."""

    configs: int = 0
    extension_configs: int = 0
    evaluations: int = 0
    skipped: int = 0
    failures: list[tuple[LadderConfig, Fraction, QScalar]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def _grid_signatures(n: int, max_entry_twice: int) -> list[Signature]:
    """Valid signatures of so_n with entries 0..max, both parity classes."""
    p = n // 2
    out: list[Signature] = []

    def rec(values, prefix):
        if len(prefix) == p:
            sig = Signature(n, tuple(HalfInt(t) for t in prefix))
            if validate_signature(sig) is None:
                out.append(sig)
            return
        cap = prefix[-1] if prefix else max(values)
        for v in reversed(values):
            if v <= cap:
                rec(values, prefix + (v,))

    for start in (0, 1):  # integer and half-integer lattices
        values = list(range(start, max_entry_twice + 1, 2))
        if values:
            rec(values, tuple())
    return out


def _level_chains(n_top: int, max_entry_twice: int):
    """Distinct (row_{2p+1}, row_2p, row_{2p-1}) chains from grid signatures."""
    for sig in _grid_signatures(n_top, max_entry_twice):
        for mid in _children(sig):
            if n_top - 2 >= 2:
                for bot in _children(mid):
                    yield sig, mid, bot
            else:
                yield sig, mid, None


def _formal_row_shift(values: Sequence[HalfInt], delta_twice: int) -> tuple[HalfInt, ...]:
    return tuple(HalfInt(v.twice + delta_twice) for v in values)


def formal_extension_bottom_zero(config: LadderConfig, j: int) -> LadderConfig:
    """The footnoted substitution l_{j,2p-1} = 0, outside the valid domain."""
    bottom = config.bottom[:j] + (HalfInt(0),) + config.bottom[j + 1 :]
    return LadderConfig(config.top, config.middle, bottom)


def formal_extension_three_halves(even_above: Signature, odd: Signature, even_below: Signature, j: int) -> LadderConfig:
    """The footnoted substitution built from rows at levels 2p, 2p-1, 2p-2.

    Maps l-coordinates (a, b, c) of those rows into a size-p configuration
    with top_s = a_s + 1/2 (s != j), top_j = 3/2, mid_s = b_s - 1/2,
    mid_p = -1/2 and bottom_s = c_s + 1/2; formal for j < p.
    """
    a = l_coords(even_above).l
    b = l_coords(odd).l
    c = l_coords(even_below).l if even_below is not None else ()
    top = list(_formal_row_shift(a, +1))
    top[j] = HalfInt(3)  # 3/2
    middle = list(_formal_row_shift(b, -1)) + [HalfInt(-1)]  # append -1/2
    bottom = _formal_row_shift(c, +1)
    return LadderConfig(tuple(top), tuple(middle), tuple(bottom))


def _check(config: LadderConfig, modes, report: SweepReport, one: Fraction) -> None:
    for mode in modes:
        try:
            value = weight_sum(config, mode)
        except (ZeroDivisionError, ZeroWeightDenominator):
            report.skipped += 1
            continue
        report.evaluations += 1
        if value != one:
            report.failures.append((config, mode.s, value))


def identity_sweep(
    p_max: int,
    s_values: Sequence,
    *,
    max_entry=2,
    max_configs: int | None = None,
    include_extensions: bool = True,
) -> SweepReport:
    """Exact sweep of the sum rule over configurations from real patterns.

    Configurations are generated from genuine pattern row chains (top rows of
    so_{2p+1} with entries up to ``max_entry``), never from free lattice
    points, so the excluded degenerate denominators cannot be hit except via
    the formal extensions, which are skipped when a denominator vanishes.
    ``max_configs`` caps the number of base configurations per p (taken in
    deterministic basis order).
    """
    if p_max < 1 or p_max > 4:
        raise ValueError("p_max must be between 1 and 4")
    modes = [QMode.exact(Fraction(s)) for s in s_values]
    if not modes:
        raise ValueError("at least one rational s value is required")
    one = Fraction(1)
    report = SweepReport()
    max_twice = HalfInt.of(max_entry).twice
    for p in range(1, p_max + 1):
        count = 0
        for sig, mid, bot in _level_chains(2 * p + 1, max_twice):
            if max_configs is not None and count >= max_configs:
                break
            config = LadderConfig.from_rows(sig, mid, bot)
            if any(v.twice == 0 for v in config.middle):
                report.skipped += 1
                continue
            count += 1
            report.configs += 1
            _check(config, modes, report, one)
            if include_extensions and p >= 2:
                for j in range(p - 1):
                    ext = formal_extension_bottom_zero(config, j)
                    report.extension_configs += 1
                    _check(ext, modes, report, one)
        if include_extensions and p >= 2:
            count = 0
            for above, odd, below in _level_chains_even(2 * p, max_twice):
                if max_configs is not None and count >= max_configs:
                    break
                count += 1
                for j in range(p):
                    ext = formal_extension_three_halves(above, odd, below, j)
                    report.extension_configs += 1
                    _check(ext, modes, report, one)
    return report


def _level_chains_even(n_top: int, max_entry_twice: int):
    """Distinct (row_2p, row_{2p-1}, row_{2p-2}) chains from grid signatures."""
    for sig in _grid_signatures(n_top, max_entry_twice):
        for odd in _children(sig):
            if n_top - 2 >= 2:
                for below in _children(odd):
                    yield sig, odd, below
            else:
                yield sig, odd, None
