from fractions import Fraction as F

import pytest

from app.core.coeff_families import laplace_coeffs, stirling_log_coeffs
from app.core.errors import SeriesError
from app.core.series_engine import (
    FormalSeries,
    ShiftedSeries,
    forward_expand,
    scale_argument,
    series_add,
    series_div,
    series_exp,
    series_mul,
    series_pow,
    shift_reexpand,
)

from .conftest import random_series


def coeffs(series):
    return list(series.coefficients)


class TestAdd:
    def test_cancels(self):
        assert coeffs(series_add(FormalSeries.of([1, F(1, 12)]), FormalSeries.of([0, F(-1, 12)]))) == [1, 0]

    def test_zero_is_identity(self):
        a = laplace_coeffs(4)
        assert series_add(a, FormalSeries.zero(4)) == a

    def test_doubling_laplace(self):
        a = laplace_coeffs(2)
        assert coeffs(a + a) == [2, F(1, 6), F(1, 144)]

    def test_truncates_to_smaller_order(self):
        assert series_add(laplace_coeffs(5), laplace_coeffs(2)).order == 2

    def test_offset_mismatch(self):
        with pytest.raises(SeriesError):
            series_add(FormalSeries.of([1], exponent_offset=1), FormalSeries.of([1]))


class TestMul:
    def test_hand_product(self):
        a = FormalSeries.of([1, F(1, 12)], order=2)
        b = FormalSeries.of([1, F(-1, 12)], order=2)
        assert coeffs(series_mul(a, b)) == [1, 0, F(-1, 144)]

    def test_one_is_identity(self):
        a = laplace_coeffs(6)
        assert a * FormalSeries.one(6) == a

    def test_square_of_laplace(self):
        a = laplace_coeffs(2)
        assert coeffs(a * a) == [1, F(1, 6), F(1, 72)]

    def test_offsets_add(self):
        a = FormalSeries.of([1, 2], exponent_offset=3)
        b = FormalSeries.of([1, 1], exponent_offset=-1)
        assert series_mul(a, b).exponent_offset == 2


class TestDiv:
    def test_self_division(self):
        a = laplace_coeffs(5)
        assert coeffs(a / a) == [1, 0, 0, 0, 0, 0]

    def test_triangular_solve(self):
        q = series_div(FormalSeries.of([1, 0, 0]), FormalSeries.of([1, F(1, 12), F(1, 288)]))
        assert coeffs(q) == [1, F(-1, 12), F(1, 288)]

    def test_agrees_with_multiplication(self, rng):
        a = random_series(rng, 8)
        b = random_series(rng, 8, constant=F(3, 2))
        assert series_mul(series_div(a, b), b) == a

    def test_zero_leading_coefficient(self):
        with pytest.raises(SeriesError):
            series_div(FormalSeries.of([1, 1]), FormalSeries.of([0, 1]))


class TestPow:
    def test_inverse_square_root(self):
        base = FormalSeries.of([1, F(1, 6)], order=2)
        assert coeffs(series_pow(base, F(-1, 2))) == [1, F(-1, 12), F(1, 96)]

    def test_zeroth_power(self):
        assert coeffs(series_pow(laplace_coeffs(4), 0)) == [1, 0, 0, 0, 0]

    def test_sixth_power_of_laplace(self):
        assert coeffs(series_pow(laplace_coeffs(3), 6)) == [1, F(1, 2), F(1, 8), F(1, 240)]

    def test_needs_unit_leading_coefficient(self):
        with pytest.raises(SeriesError):
            series_pow(FormalSeries.of([2, 1]), F(1, 2))

    def test_needs_zero_offset(self):
        with pytest.raises(SeriesError):
            series_pow(FormalSeries.of([1, 1], exponent_offset=1), 2)

    @pytest.mark.parametrize("r1, r2", [
        (F(1, 2), F(-1, 2)), (F(1, 6), F(-1, 6)), (F(1, 2), F(1, 6)),
        (2, F(-1, 2)), (6, F(-1, 6)), (2, 6),
    ])
    def test_exponents_add(self, rng, r1, r2):
        a = random_series(rng, 10, constant=1)
        assert series_pow(a, F(r1) + F(r2)) == series_mul(series_pow(a, r1), series_pow(a, r2))

    def test_integer_power_is_repeated_product(self, rng):
        a = random_series(rng, 9, constant=1)
        product = FormalSeries.one(9)
        for k in range(1, 6):
            product = series_mul(product, a)
            assert series_pow(a, k) == product


class TestExp:
    def test_exp_of_zero(self):
        assert coeffs(series_exp(FormalSeries.zero(3))) == [1, 0, 0, 0]

    def test_stirling_to_laplace(self):
        assert coeffs(series_exp(stirling_log_coeffs(4))) == [
            1, F(1, 12), F(1, 288), F(-139, 51840), F(-571, 2488320)]

    def test_termwise_exponential(self):
        assert coeffs(series_exp(FormalSeries.of([0, 1], order=3))) == [1, 1, F(1, 2), F(1, 6)]

    def test_nonzero_constant(self):
        with pytest.raises(SeriesError):
            series_exp(FormalSeries.of([1, 1]))

    def test_exp_of_sum_is_product(self, rng):
        a = random_series(rng, 9, constant=0)
        b = random_series(rng, 9, constant=0)
        assert series_exp(a + b) == series_mul(series_exp(a), series_exp(b))


class TestScaleArgument:
    def test_identity(self):
        a = laplace_coeffs(5)
        assert scale_argument(a, 1) == a

    def test_substitution(self):
        assert coeffs(scale_argument(FormalSeries.of([1, F(1, 12)]), 2)) == [1, F(1, 24)]

    def test_laplace_at_double_argument(self):
        assert coeffs(scale_argument(laplace_coeffs(2), 2)) == [1, F(1, 24), F(1, 1152)]

    def test_offset_head_scales(self):
        scaled = scale_argument(FormalSeries.of([8, 4, 1], exponent_offset=3), 2)
        assert coeffs(scaled) == [64, 16, 2]

    def test_zero(self):
        with pytest.raises(SeriesError):
            scale_argument(laplace_coeffs(2), 0)


class TestShift:
    def test_zero_shift_is_identity(self):
        a = laplace_coeffs(6)
        assert list(shift_reexpand(a, 0).coefficients) == coeffs(a)

    @pytest.mark.parametrize("s", [F(1, 4), F(1, 6), F(-3, 7), F(2)])
    def test_round_trip(self, rng, s):
        a = random_series(rng, 12)
        shifted = shift_reexpand(a, s)
        assert shifted.shift == s
        assert forward_expand(shifted) == a

    @pytest.mark.parametrize("s", [F(1, 4), F(-5, 3)])
    def test_opposite_shift_inverts(self, rng, s):
        a = random_series(rng, 10)
        once = shift_reexpand(a, s)
        back = shift_reexpand(FormalSeries(once.coefficients), -s)
        assert back.coefficients == a.coefficients

    def test_single_inverse_power(self):
        # 1/x = 1/(x+s) + s/(x+s)^2 + s^2/(x+s)^3 + ...
        s = F(1, 4)
        d = shift_reexpand(FormalSeries.of([0, 1], order=4), s)
        assert list(d.coefficients) == [0, 1, s, s ** 2, s ** 3]

    def test_forward_kernel(self):
        # (x+1/4)^-2 = x^-2 - (1/2) x^-3 + (3/16) x^-4
        d = ShiftedSeries(F(1, 4), (0, 0, 1, 0, 0))
        assert coeffs(forward_expand(d)) == [0, 0, 1, F(-1, 2), F(3, 16)]
        assert d.to_formal() == forward_expand(d)

    def test_offset_refused(self):
        with pytest.raises(SeriesError):
            shift_reexpand(FormalSeries.of([1], exponent_offset=2), F(1, 4))


class TestRingLaws:
    def test_commutative(self, rng):
        a, b = random_series(rng, 12), random_series(rng, 12)
        assert a * b == b * a

    def test_associative(self, rng):
        a, b, c = random_series(rng, 12), random_series(rng, 11), random_series(rng, 12)
        assert (a * b) * c == a * (b * c)

    def test_distributive(self, rng):
        a, b, c = random_series(rng, 12), random_series(rng, 12), random_series(rng, 10)
        assert a * (b + c) == a * b + a * c


def test_of_pads_and_truncates():
    assert coeffs(FormalSeries.of([1, 2], order=3)) == [1, 2, 0, 0]
    assert coeffs(FormalSeries.of([1, 2, 3], order=1)) == [1, 2]


def test_truncate_cannot_extend():
    with pytest.raises(SeriesError):
        laplace_coeffs(2).truncate(5)


def test_coefficient_of_power():
    s = FormalSeries.of([8, 4, 1, F(1, 30)], exponent_offset=3)
    assert s.coefficient_of_power(3) == 8
    assert s.coefficient_of_power(0) == F(1, 30)
    assert s.coefficient_of_power(5) == 0
    with pytest.raises(SeriesError):
        s.coefficient_of_power(-1)
