"""
Exact rational arithmetic used by every coefficient generator.

Rationals are plain ``fractions.Fraction`` values: always in lowest terms,
denominator positive, and never rounded.
"""

from fractions import Fraction
from math import comb
from typing import Sequence, Union

from .coeff_store import get_coeff_store
from .errors import DomainError

Rational = Fraction
RationalLike = Union[int, Fraction, str]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or exact literal ("5", "1/4", "100.5") to a Fraction.

    Floats and bools are refused: a binary float is rarely the number the
    caller meant.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise DomainError(f"{value!r} is not an exact value; pass an int, Fraction or string literal")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise DomainError(f"cannot read {value!r} as an exact number: {e}") from e
    raise DomainError(f"unsupported value type {type(value).__name__}")


def format_rational(q: Fraction) -> str:
    """"p/q", or just "p" for integers"""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def decimal_string(q, places: int) -> str:
    """Fixed-point string with `places` digits after the point, truncated toward zero.

    Accepts exact values and mpmath floats; a float is truncated at its own
    working precision.
    """
    if not isinstance(q, (int, Fraction)):
        scaled = int(abs(q) * 10 ** places)
        q = Fraction(-scaled if q < 0 else scaled, 10 ** places)
    q = Fraction(q)
    sign = "-" if q < 0 else ""
    scaled = abs(q.numerator) * 10 ** places // q.denominator
    digits = str(scaled).rjust(places + 1, "0")
    if places == 0:
        return f"{sign}{digits}"
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def binomial_general(r: RationalLike, k: int) -> Fraction:
    """r(r-1)...(r-k+1)/k! for any rational r; 1 when k = 0"""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    r = Fraction(r)
    result = Fraction(1)
    for i in range(k):
        result = result * (r - i) / (i + 1)
    return result


def _next_bernoulli(known: Sequence[Fraction]) -> Fraction:
    # sum_{j=0}^{n} C(n+1, j) B_j = 0, solved for B_n
    n = len(known)
    if n == 0:
        return Fraction(1)
    if n > 1 and n % 2 == 1:
        return Fraction(0)
    s = sum((comb(n + 1, j) * known[j] for j in range(n)), Fraction(0))
    return -s / (n + 1)


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with the B_1 = -1/2 convention"""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return get_coeff_store().term("bernoulli", n, _next_bernoulli)


def bernoulli_numbers(n: int) -> tuple:
    """B_0 .. B_n"""
    return get_coeff_store().prefix("bernoulli", n + 1, _next_bernoulli)
