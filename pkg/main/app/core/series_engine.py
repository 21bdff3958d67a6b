"""
Formal series in powers of 1/x with exact rational coefficients.

A ``FormalSeries`` with coefficients c_0..c_N and exponent offset p denotes

    x^p * (c_0 + c_1/x + ... + c_N/x^N)

where N is the truncation order: coefficients past N are unknown, not zero.
Binary operations truncate to the smaller order of their operands, so every
result only carries coefficients it can vouch for.

A ``ShiftedSeries`` with shift s denotes d_0 + d_1/(x+s) + ... + d_N/(x+s)^N.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Tuple, Union

from .errors import SeriesError
from .exact_arith import RationalLike, binomial_general

Scalar = Union[int, Fraction]


def _coerce(values: Iterable[RationalLike]) -> Tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class FormalSeries:
    """Truncated series sum c_n x^(p-n), n = 0..N"""
    coefficients: Tuple[Fraction, ...]
    exponent_offset: int = 0

    def __post_init__(self):
        coeffs = _coerce(self.coefficients)
        if not coeffs:
            raise SeriesError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def of(cls, values: Iterable[RationalLike], order: Optional[int] = None,
           exponent_offset: int = 0) -> "FormalSeries":
        """Series from leading coefficients.

        With `order` larger than the number of values the remaining
        coefficients are zero, i.e. the values describe an exact polynomial
        in 1/x known to that order.
        """
        coeffs = list(_coerce(values))
        if order is not None:
            if order + 1 < len(coeffs):
                coeffs = coeffs[:order + 1]
            else:
                coeffs.extend([Fraction(0)] * (order + 1 - len(coeffs)))
        return cls(tuple(coeffs), exponent_offset)

    @classmethod
    def zero(cls, order: int) -> "FormalSeries":
        return cls.of([0], order)

    @classmethod
    def one(cls, order: int) -> "FormalSeries":
        return cls.of([1], order)

    @property
    def order(self) -> int:
        """Truncation order N"""
        return len(self.coefficients) - 1

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, n):
        return self.coefficients[n]

    def __iter__(self):
        return iter(self.coefficients)

    def truncate(self, order: int) -> "FormalSeries":
        if order > self.order:
            raise SeriesError(f"cannot extend a series known to order {self.order} to order {order}")
        return FormalSeries(self.coefficients[:order + 1], self.exponent_offset)

    def coefficient_of_power(self, power: int) -> Fraction:
        """Coefficient of x^power"""
        n = self.exponent_offset - power
        if n < 0:
            return Fraction(0)
        if n > self.order:
            raise SeriesError(f"x^{power} lies beyond the truncation order {self.order}")
        return self.coefficients[n]

    def __add__(self, other):
        if isinstance(other, FormalSeries):
            return series_add(self, other)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, FormalSeries):
            return series_sub(self, other)
        return NotImplemented

    def __neg__(self):
        return series_scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, FormalSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return series_scale(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return series_scale(self, other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, FormalSeries):
            return series_div(self, other)
        return NotImplemented

    def __pow__(self, r):
        return series_pow(self, r)


@dataclass(frozen=True)
class ShiftedSeries:
    """Truncated series sum d_n (x+s)^(-n), n = 0..N"""
    shift: Fraction
    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "shift", Fraction(self.shift))
        coeffs = _coerce(self.coefficients)
        if not coeffs:
            raise SeriesError("a shifted series needs at least the constant coefficient")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, n):
        return self.coefficients[n]

    def __iter__(self):
        return iter(self.coefficients)

    def to_formal(self) -> FormalSeries:
        return forward_expand(self)


def _shared_order(a: FormalSeries, b: FormalSeries) -> int:
    return min(a.order, b.order)


def series_add(a: FormalSeries, b: FormalSeries) -> FormalSeries:
    if a.exponent_offset != b.exponent_offset:
        raise SeriesError(f"cannot add series with offsets {a.exponent_offset} and {b.exponent_offset}")
    n = _shared_order(a, b)
    return FormalSeries(tuple(a[i] + b[i] for i in range(n + 1)), a.exponent_offset)


def series_sub(a: FormalSeries, b: FormalSeries) -> FormalSeries:
    return series_add(a, series_scale(b, -1))


def series_scale(a: FormalSeries, factor: Scalar) -> FormalSeries:
    factor = Fraction(factor)
    return FormalSeries(tuple(factor * c for c in a), a.exponent_offset)


def series_mul(a: FormalSeries, b: FormalSeries) -> FormalSeries:
    """Cauchy product; offsets add"""
    n = _shared_order(a, b)
    out = []
    for k in range(n + 1):
        out.append(sum((a[j] * b[k - j] for j in range(k + 1)), Fraction(0)))
    return FormalSeries(tuple(out), a.exponent_offset + b.exponent_offset)


def series_div(a: FormalSeries, b: FormalSeries) -> FormalSeries:
    """q with q * b = a up to the shared truncation order"""
    if b[0] == 0:
        raise SeriesError("division by a series with zero leading coefficient")
    n = _shared_order(a, b)
    q = []
    for k in range(n + 1):
        acc = a[k] - sum((b[j] * q[k - j] for j in range(1, k + 1)), Fraction(0))
        q.append(acc / b[0])
    return FormalSeries(tuple(q), a.exponent_offset - b.exponent_offset)


def series_pow(a: FormalSeries, r: RationalLike) -> FormalSeries:
    """a^r for a unit series (c_0 = 1, no offset).

    Uses the power recurrence n f_n = sum_{k=1}^{n} (k(r+1) - n) a_k f_{n-k}.
    """
    if a.exponent_offset != 0:
        raise SeriesError("powers are only taken of series without an exponent offset")
    if a[0] != 1:
        raise SeriesError(f"leading coefficient must be 1 to take a power, got {a[0]}")
    r = Fraction(r)
    f = [Fraction(1)]
    for n in range(1, a.order + 1):
        acc = sum(((k * (r + 1) - n) * a[k] * f[n - k] for k in range(1, n + 1)), Fraction(0))
        f.append(acc / n)
    return FormalSeries(tuple(f))


def series_exp(a: FormalSeries) -> FormalSeries:
    """exp(a) for a series with zero constant term.

    From f' = a' f: n f_n = sum_{k=1}^{n} k a_k f_{n-k}.
    """
    if a.exponent_offset != 0:
        raise SeriesError("exp is only taken of series without an exponent offset")
    if a[0] != 0:
        raise SeriesError(f"exp needs a zero constant term, got {a[0]}")
    f = [Fraction(1)]
    for n in range(1, a.order + 1):
        acc = sum((k * a[k] * f[n - k] for k in range(1, n + 1)), Fraction(0))
        f.append(acc / n)
    return FormalSeries(tuple(f))


def scale_argument(a: FormalSeries, lam: RationalLike) -> FormalSeries:
    """Substitute x -> lam*x"""
    lam = Fraction(lam)
    if lam == 0:
        raise SeriesError("cannot scale the argument by zero")
    p = a.exponent_offset
    return FormalSeries(tuple(c * lam ** (p - n) for n, c in enumerate(a)), p)


def _shift_kernel(j: int, k: int, s: Fraction) -> Fraction:
    # coefficient of x^-k in (x+s)^-j
    return binomial_general(-j, k - j) * s ** (k - j)


def forward_expand(d: ShiftedSeries) -> FormalSeries:
    """Rewrite sum d_j (x+s)^-j in powers of 1/x: c_k = sum_{j<=k} C(-j, k-j) d_j s^(k-j)"""
    s = d.shift
    c = []
    for k in range(d.order + 1):
        c.append(sum((_shift_kernel(j, k, s) * d[j] for j in range(k + 1)), Fraction(0)))
    return FormalSeries(tuple(c))


def shift_reexpand(a: FormalSeries, s: RationalLike) -> ShiftedSeries:
    """Rewrite sum c_n x^-n as sum d_n (x+s)^-n by inverting the forward kernel"""
    if a.exponent_offset != 0:
        raise SeriesError("only series without an exponent offset can be re-expanded")
    s = Fraction(s)
    d = []
    for k in range(a.order + 1):
        # kernel diagonal C(-k, 0) = 1
        d.append(a[k] - sum((_shift_kernel(j, k, s) * d[j] for j in range(k)), Fraction(0)))
    return ShiftedSeries(s, tuple(d))
