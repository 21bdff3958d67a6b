"""
High-precision evaluation of the Gamma approximations and of the
exact-decimal-digits metric.

Everything happens in log space: Gamma(10001) overflows any fixed-range
float, while the metric only needs the ratio approximation / Gamma.
The truncated series themselves are summed exactly in rationals (the
arguments are exact), so the only roundings are in log, exp and the final
conversion.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Any, Tuple

from mpmath import MPContext

from .coeff_families import (
    EXACT_PAIR_LIMIT,
    GOSPER_SHIFT,
    NEMES_SHIFT,
    laplace_coeffs,
    mortici_coeffs,
    nemes_even_pairs,
    nemes_shifted_coeffs,
    ramanujan_coeffs,
    stirling_log_coeffs,
)
from .errors import ConfigurationError, DomainError, InvalidSpecError, PrecisionError
from .exact_arith import RationalLike, as_rational, bernoulli

logger = logging.getLogger(__name__)

DEFAULT_WORKING_PRECISION = 120
GUARD_DIGITS = 20
# Stirling terms available to the reference (B_2 .. B_64)
MAX_REFERENCE_TERMS = 31
MAX_REFERENCE_SHIFT = 100_000


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision plus the number of digits the reference certifies.

    Owns a private mpmath context instead of the global one. mpmath functions
    raise and restore the precision of the context they run in, so one
    context must not be used by two threads at once.
    """
    working_precision: int = DEFAULT_WORKING_PRECISION
    target_digits: int = DEFAULT_WORKING_PRECISION - GUARD_DIGITS
    mp: Any = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.target_digits < 1:
            raise ConfigurationError(f"target_digits must be positive, got {self.target_digits}")
        if self.working_precision < self.target_digits + GUARD_DIGITS:
            raise ConfigurationError(
                f"working precision {self.working_precision} leaves fewer than {GUARD_DIGITS} "
                f"guard digits over the target {self.target_digits}")
        mp = MPContext()
        mp.dps = self.working_precision
        object.__setattr__(self, "mp", mp)

    @classmethod
    def with_precision(cls, working_precision: int) -> "PrecisionContext":
        return cls(working_precision, working_precision - GUARD_DIGITS)

    def doubled(self) -> "PrecisionContext":
        return PrecisionContext(2 * self.working_precision, 2 * self.working_precision - GUARD_DIGITS)

    def to_mpf(self, q: Fraction):
        return self.mp.mpf(q.numerator) / q.denominator


class Family(str, Enum):
    STIRLING = "stirling"
    LAPLACE = "laplace"
    RAMANUJAN = "ramanujan"
    MORTICI = "mortici"
    NEMES_SHIFTED = "nemes_shifted"
    NEMES_EVEN = "nemes_even"


EVEN_ORDER_FAMILIES = (Family.STIRLING, Family.NEMES_EVEN)


@dataclass(frozen=True)
class ApproximationSpec:
    """One formula at one order: a column "(i)" of the benchmark tables"""
    family: Family
    order: int

    def __post_init__(self):
        try:
            object.__setattr__(self, "family", Family(self.family))
        except ValueError:
            names = ", ".join(f.value for f in Family)
            raise InvalidSpecError(f"unknown family {self.family!r} (expected one of {names})") from None
        if isinstance(self.order, bool) or not isinstance(self.order, int) or self.order < 1:
            raise InvalidSpecError(f"order must be a positive integer, got {self.order!r}")
        if self.family in EVEN_ORDER_FAMILIES and self.order % 2:
            raise InvalidSpecError(f"{self.family.value} approximations only exist at even orders, got {self.order}")
        if self.family is Family.NEMES_EVEN and self.order > 2 * EXACT_PAIR_LIMIT:
            raise InvalidSpecError(
                f"nemes_even is evaluated with exact pairs up to order {2 * EXACT_PAIR_LIMIT}, got {self.order}")


@dataclass(frozen=True)
class EddResult:
    """Exact decimal digits and whether the approximation under- or overshoots"""
    edd: Any
    sign: str
    log_approximation: Any
    log_reference: Any

    @property
    def signed(self) -> float:
        value = float(self.edd)
        return -value if self.sign == "-" else value


def _exact_x(x: RationalLike) -> Fraction:
    q = as_rational(x)
    if q < 1:
        raise DomainError(f"x must be >= 1, got {q}")
    return q


def _reference_plan(x: Fraction, ctx: PrecisionContext) -> Tuple[int, int]:
    """(shift m, terms K) such that the first omitted Stirling term at x+m is below the threshold"""
    mp = ctx.mp
    threshold = mp.mpf(10) ** (-(ctx.target_digits + 1))
    best = None
    for K in range(1, MAX_REFERENCE_TERMS + 1):
        k = K + 1
        omitted = abs(ctx.to_mpf(bernoulli(2 * k))) / (2 * k * (2 * k - 1))
        # omitted / y^(2k-1) < threshold  <=>  y > (omitted / threshold)^(1/(2k-1))
        y_needed = (omitted / threshold) ** (mp.mpf(1) / (2 * k - 1))
        shift = max(0, int(mp.ceil(y_needed - ctx.to_mpf(x))) + 1)
        if best is None or shift < best[0]:
            best = (shift, K)
        if shift == 0:
            break
    shift, terms = best
    if shift > MAX_REFERENCE_SHIFT:
        raise PrecisionError(
            f"reference needs an argument shift of {shift} (limit {MAX_REFERENCE_SHIFT}) "
            f"to certify {ctx.target_digits} digits")
    return shift, terms


@lru_cache(maxsize=256)
def _log_gamma_reference(x: Fraction, ctx: PrecisionContext):
    mp = ctx.mp
    shift, terms = _reference_plan(x, ctx)
    y = x + shift
    ym = ctx.to_mpf(y)
    value = (ym + mp.mpf(1) / 2) * mp.log(ym) - ym + mp.log(2 * mp.pi) / 2
    coeffs = stirling_log_coeffs(2 * terms - 1)
    tail = sum((coeffs[n] / y ** n for n in range(1, 2 * terms, 2)), Fraction(0))
    value += ctx.to_mpf(tail)
    if shift:
        product = Fraction(1)
        for i in range(1, shift + 1):
            product *= x + i
        value -= mp.log(ctx.to_mpf(product))
    logger.debug("log Gamma(%s + 1): shift %d, %d Stirling terms", x, shift, terms)
    return value


def log_gamma_reference(x: RationalLike, ctx: PrecisionContext):
    """log Gamma(x+1) with absolute error below 10^-target_digits.

    Evaluates the Stirling log series at x + m, m chosen so the first omitted
    term is below the threshold, then divides out the m shift factors. For
    real positive arguments the series is enveloping, so the first omitted
    term bounds the truncation error.
    """
    return _log_gamma_reference(_exact_x(x), ctx)


def _partial_sum(coeffs, order: int, inv: Fraction) -> Fraction:
    return sum((coeffs[n] * inv ** n for n in range(order + 1)), Fraction(0))


def _series_tail(spec: ApproximationSpec, x: Fraction) -> Tuple[Fraction, Fraction, bool]:
    """(exact series value, power applied to its log, whether it is already a log)"""
    family, order = spec.family, spec.order
    if family is Family.STIRLING:
        coeffs = stirling_log_coeffs(order - 1)
        return _partial_sum(coeffs, order - 1, 1 / x), Fraction(1), True
    if family is Family.LAPLACE:
        return _partial_sum(laplace_coeffs(order), order, 1 / x), Fraction(1), False
    if family is Family.RAMANUJAN:
        return _partial_sum(ramanujan_coeffs(order), order, 1 / x), Fraction(1, 6), False
    if family is Family.MORTICI:
        return _partial_sum(mortici_coeffs(order), order, 1 / x), Fraction(1, 2), False
    if family is Family.NEMES_SHIFTED:
        G = nemes_shifted_coeffs(order).G
        return _partial_sum(G, order, 1 / (x + NEMES_SHIFT)), Fraction(1), False
    pairs = nemes_even_pairs(order // 2)
    total = Fraction(pairs.g[0])
    for m, (g, v) in enumerate(pairs.pairs(), start=1):
        total += g / (x + v) ** (2 * m)
    return total, Fraction(1), False


def log_approximation(spec: ApproximationSpec, x: RationalLike, ctx: PrecisionContext):
    """Natural log of the approximation of Gamma(x+1) named by spec"""
    q = _exact_x(x)
    mp = ctx.mp
    xm = ctx.to_mpf(q)
    value = xm * mp.log(xm) - xm
    if spec.family in (Family.NEMES_SHIFTED, Family.NEMES_EVEN):
        value += mp.log(2 * mp.pi * ctx.to_mpf(q + GOSPER_SHIFT)) / 2
    else:
        value += mp.log(2 * mp.pi * xm) / 2
    series, power, is_log = _series_tail(spec, q)
    if is_log:
        return value + ctx.to_mpf(series)
    if series <= 0:
        raise DomainError(f"partial sum of {spec.family.value} at order {spec.order} is {series} <= 0 at x = {q}")
    return value + ctx.to_mpf(power) * mp.log(ctx.to_mpf(series))


def edd(spec: ApproximationSpec, x: RationalLike, ctx: PrecisionContext) -> EddResult:
    """-log10 |1 - approximation / Gamma(x+1)|; sign '-' when the approximation is smaller"""
    mp = ctx.mp
    log_a = log_approximation(spec, x, ctx)
    log_g = log_gamma_reference(x, ctx)
    diff = log_a - log_g
    relative = abs(mp.expm1(diff))
    floor = mp.mpf(10) ** (-(ctx.target_digits - 10))
    if relative < floor:
        raise PrecisionError(
            f"{spec.family.value} order {spec.order} at x = {x}: relative error below the "
            f"certified 1e-{ctx.target_digits - 10}; raise the precision")
    return EddResult(
        edd=-mp.log10(relative),
        sign="-" if diff < 0 else "+",
        log_approximation=log_a,
        log_reference=log_g,
    )
