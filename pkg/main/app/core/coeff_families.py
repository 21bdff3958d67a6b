"""
Generators for the coefficients of every Gamma-function expansion handled here.

All a_n come from the Bernoulli-number log series, never from printed
tables. The ratio

    Gamma(x+1) e^x / (x^x sqrt(2 pi (x + 1/6)))  ~  sum c_n / x^n

is the common starting point of the two shifted expansions: the constant
shift 1/4 (coefficients G_k) and the even-power form sum g_m / (x + v_m)^(2m).
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, List, Optional, Sequence, Tuple

from mpmath import MPContext

from .coeff_store import get_coeff_store
from .errors import DegeneratePairError, OrderRangeError, UndefinedShiftError
from .exact_arith import bernoulli, binomial_general
from .series_engine import (
    FormalSeries,
    ShiftedSeries,
    scale_argument,
    series_exp,
    series_mul,
    series_pow,
    shift_reexpand,
)

logger = logging.getLogger(__name__)

GOSPER_SHIFT = Fraction(1, 6)
NEMES_SHIFT = Fraction(1, 4)
# Largest M the pair recurrence is solved for in exact rationals. The sizes
# of v_m grow roughly fivefold per step (v_7 has about ten thousand digits).
EXACT_PAIR_LIMIT = 7


def _require(condition: bool, message: str):
    if not condition:
        raise OrderRangeError(message)


def stirling_log_coeffs(N: int) -> FormalSeries:
    """log Gamma(x+1) - (x+1/2) log x + x - log(2 pi)/2 in powers of 1/x.

    c_{2k-1} = B_{2k} / (2k(2k-1)); every even coefficient is zero.
    """
    _require(N >= 1, f"Stirling log series needs N >= 1, got {N}")
    coeffs = [Fraction(0)] * (N + 1)
    for n in range(1, N + 1, 2):
        k = (n + 1) // 2
        coeffs[n] = bernoulli(2 * k) / (2 * k * (2 * k - 1))
    return FormalSeries(tuple(coeffs))


def laplace_coeffs(N: int) -> FormalSeries:
    """a_0..a_N of Gamma(x+1) ~ x^x e^-x sqrt(2 pi x) sum a_n x^-n"""
    _require(N >= 0, f"order must be >= 0, got {N}")

    def build(length: int) -> Sequence[Fraction]:
        return series_exp(stirling_log_coeffs(max(length - 1, 1))).coefficients

    return FormalSeries(get_coeff_store().cached_prefix("laplace", N + 1, build))


def ramanujan_coeffs(N: int) -> FormalSeries:
    """Radicand of the sixth-root form: (sum a_n x^-n)^6"""
    return series_pow(laplace_coeffs(N), 6)


def karatsuba_coeffs(N: int) -> FormalSeries:
    """8x^3 + 4x^2 + x + 1/30 - 11/(240x) + ... (8 times the sixth-root radicand)"""
    r = ramanujan_coeffs(N)
    return FormalSeries(tuple(8 * c for c in r), exponent_offset=3)


def mortici_coeffs(N: int) -> FormalSeries:
    """Radicand of the square-root form: (sum a_n x^-n)^2"""
    return series_pow(laplace_coeffs(N), 2)


def mortici_doubled_coeffs(N: int) -> FormalSeries:
    """2n + 1/3 + 1/(36n) - 31/(3240n^2) - ..., the radicand of n! ~ n^n e^-n sqrt(pi) sqrt(...)"""
    m = mortici_coeffs(N)
    return FormalSeries(tuple(2 * c for c in m), exponent_offset=1)


@dataclass(frozen=True)
class GosperBaseSeries:
    """c_n of Gamma(x+1) e^x / (x^x sqrt(2 pi (x+1/6))) ~ sum c_n x^-n"""
    c: Tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.c) - 1

    def as_series(self) -> FormalSeries:
        return FormalSeries(self.c)


def gosper_base_coeffs(N: int) -> GosperBaseSeries:
    """Direct double sum c_n = sum_j C(-1/2, j) a_{n-j} / 6^j"""
    _require(N >= 0, f"order must be >= 0, got {N}")
    a = laplace_coeffs(N)
    c = []
    for n in range(N + 1):
        c.append(sum((binomial_general(Fraction(-1, 2), j) * a[n - j] / 6 ** j
                      for j in range(n + 1)), Fraction(0)))
    return GosperBaseSeries(tuple(c))


def gosper_base_via_series(N: int) -> GosperBaseSeries:
    """Same coefficients through the series engine: a(x) * (1 + 1/(6x))^(-1/2)"""
    _require(N >= 0, f"order must be >= 0, got {N}")
    correction = series_pow(FormalSeries.of([1, GOSPER_SHIFT], order=N), Fraction(-1, 2))
    return GosperBaseSeries(series_mul(laplace_coeffs(N), correction).coefficients)


@dataclass(frozen=True)
class ShiftedCoeffs:
    """G_k of Gamma(x+1) ~ x^x e^-x sqrt(2 pi (x+1/6)) sum G_k (x+1/4)^-k"""
    G: Tuple[Fraction, ...]
    shift: Fraction = NEMES_SHIFT
    base_shift: Fraction = GOSPER_SHIFT

    @property
    def order(self) -> int:
        return len(self.G) - 1

    def as_shifted_series(self) -> ShiftedSeries:
        return ShiftedSeries(self.shift, self.G)


def nemes_shifted_coeffs(K: int) -> ShiftedCoeffs:
    """G_k = c_k - sum_{j<k} C(-j, k-j) G_j / 4^(k-j)"""
    _require(K >= 0, f"order must be >= 0, got {K}")

    def build(length: int) -> Sequence[Fraction]:
        base = gosper_base_coeffs(length - 1).as_series()
        return shift_reexpand(base, NEMES_SHIFT).coefficients

    return ShiftedCoeffs(get_coeff_store().cached_prefix("nemes_shifted", K + 1, build))


@dataclass(frozen=True)
class EvenPairSequence:
    """g_0..g_M and v_1..v_M of sum g_m / (x + v_m)^(2m).

    `v[m - 1]` holds v_m; v_0 does not exist. `exact` is False for the
    high-precision float continuation.
    """
    g: Tuple[Any, ...]
    v: Tuple[Any, ...]
    exact: bool = True

    def __post_init__(self):
        if len(self.v) != len(self.g) - 1:
            raise ValueError(f"need M v-values for M+1 g-values, got {len(self.v)} and {len(self.g)}")
        if self.g[0] != 1:
            raise ValueError(f"g_0 must be 1, got {self.g[0]}")

    @property
    def M(self) -> int:
        return len(self.g) - 1

    def v_at(self, m: int):
        if m == 0:
            raise UndefinedShiftError()
        if not 1 <= m <= self.M:
            raise IndexError(f"v_{m} outside 1..{self.M}")
        return self.v[m - 1]

    def pairs(self) -> List[Tuple[Any, Any]]:
        """(g_m, v_m) for m = 1..M"""
        return list(zip(self.g[1:], self.v))


def _solve_pairs(c: Sequence[Any], M: int, one: Any) -> Tuple[List[Any], List[Any]]:
    # Even order 2m fixes g_m (diagonal kernel C(-2m, 0) = 1); odd order
    # 2m+1 fixes v_m (diagonal kernel C(-2m, 1) = -2m). Works over Fraction
    # and over mpf alike.
    g = [one]
    v = [None]
    for m in range(1, M + 1):
        even = c[2 * m] - sum(int(binomial_general(-2 * j, 2 * m - 2 * j)) * g[j] * v[j] ** (2 * m - 2 * j)
                              for j in range(1, m))
        g.append(even)
        if even == 0:
            raise DegeneratePairError(m)
        odd = c[2 * m + 1] - sum(int(binomial_general(-2 * j, 2 * m + 1 - 2 * j)) * g[j] * v[j] ** (2 * m + 1 - 2 * j)
                                 for j in range(1, m))
        v.append(-odd / (2 * m * even))
    return g, v[1:]


def nemes_even_pairs(M: int) -> EvenPairSequence:
    """Exact g_m, v_m from the order-by-order reading of the pair recurrence"""
    _require(M >= 0, f"M must be >= 0, got {M}")
    _require(M <= EXACT_PAIR_LIMIT,
             f"exact pair solving is supported up to M = {EXACT_PAIR_LIMIT}, got {M}")

    def build(length: int) -> Sequence[Tuple[Fraction, Optional[Fraction]]]:
        m_max = length - 1
        c = gosper_base_coeffs(2 * m_max + 1).c
        g, v = _solve_pairs(c, m_max, Fraction(1))
        return [(g[0], None)] + list(zip(g[1:], v))

    terms = get_coeff_store().cached_prefix("even_pairs", M + 1, build)
    return EvenPairSequence(tuple(t[0] for t in terms), tuple(t[1] for t in terms[1:]))


def nemes_even_pairs_decimal(M: int, digits: int = 50, guard_digits: int = 20) -> EvenPairSequence:
    """Pairs in high-precision floating point, for M past the exact limit.

    The c_n are still exact; only the recurrence itself runs in floating
    point, at digits + guard_digits significant digits.
    """
    _require(M >= 0, f"M must be >= 0, got {M}")
    mp = MPContext()
    mp.dps = digits + guard_digits
    c = [mp.mpf(q.numerator) / q.denominator for q in gosper_base_coeffs(2 * M + 1).c]
    g, v = _solve_pairs(c, M, mp.mpf(1))
    logger.debug("solved %d pairs at %d digits", M, mp.dps)
    return EvenPairSequence(tuple(g), tuple(v), exact=False)


def expand_even_pairs(pairs: EvenPairSequence, N: int) -> FormalSeries:
    """sum g_m (x + v_m)^(-2m) rewritten in powers of 1/x, to order N"""
    _require(0 <= N <= 2 * pairs.M + 1,
             f"{pairs.M} pairs determine the expansion up to order {2 * pairs.M + 1}, got {N}")
    out = []
    for n in range(N + 1):
        total = Fraction(pairs.g[0]) if n == 0 else Fraction(0)
        for j in range(1, n // 2 + 1):
            total += binomial_general(-2 * j, n - 2 * j) * pairs.g[j] * pairs.v_at(j) ** (n - 2 * j)
        out.append(total)
    return FormalSeries(tuple(out))


def central_binomial_coeffs(N: int) -> FormalSeries:
    """T(n) with C(2n, n) ~ 4^n / sqrt(pi n) * T(n), i.e. a(2n) / a(n)^2"""
    _require(N >= 0, f"order must be >= 0, got {N}")
    a = laplace_coeffs(N)
    return scale_argument(a, 2) / series_mul(a, a)


def central_binomial_shifted(N: int) -> ShiftedSeries:
    """Same expansion normalized by sqrt(pi (n+1/4)) and written in powers of 1/(n+1/4)"""
    _require(N >= 0, f"order must be >= 0, got {N}")
    prefactor = series_pow(FormalSeries.of([1, NEMES_SHIFT], order=N), Fraction(1, 2))
    return shift_reexpand(series_mul(prefactor, central_binomial_coeffs(N)), NEMES_SHIFT)
