import math
from fractions import Fraction as F

import pytest

from app.core import precision_eval
from app.core.benchmark import format_edd
from app.core.errors import ConfigurationError, DomainError, InvalidSpecError, PrecisionError
from app.core.precision_eval import (
    ApproximationSpec,
    EddResult,
    Family,
    PrecisionContext,
    edd,
    log_approximation,
    log_gamma_reference,
)
from app.core.series_engine import FormalSeries


class TestReference:
    @pytest.mark.parametrize("n", [5, 50, 100, 200])
    def test_factorial_oracle(self, ctx, n):
        expected = ctx.mp.log(ctx.mp.mpf(math.factorial(n)))
        assert abs(log_gamma_reference(n, ctx) - expected) < ctx.mp.mpf(10) ** -90

    def test_sampled_points_against_loggamma(self, ctx, rng):
        mp = ctx.mp
        for _ in range(8):
            x = F(rng.randint(100, 20000), rng.choice([1, 3, 7, 100]))
            expected = mp.loggamma(ctx.to_mpf(x) + 1)
            assert abs(log_gamma_reference(x, ctx) - expected) < mp.mpf(10) ** -90, x

    @pytest.mark.parametrize("x", [100, 1000, 10000])
    def test_functional_equation(self, ctx, x):
        mp = ctx.mp
        step = log_gamma_reference(x + 1, ctx) - log_gamma_reference(x, ctx)
        assert abs(step - mp.log(x + 1)) < mp.mpf(10) ** -(ctx.target_digits - 5)

    def test_exact_point_one(self, ctx):
        assert abs(log_gamma_reference(1, ctx)) < ctx.mp.mpf(10) ** -95

    def test_string_points(self, ctx):
        assert log_gamma_reference("201/2", ctx) == log_gamma_reference(F(201, 2), ctx)

    @pytest.mark.parametrize("x", [F(1, 2), 0, -3])
    def test_below_domain(self, ctx, x):
        with pytest.raises(DomainError):
            log_gamma_reference(x, ctx)

    def test_float_refused(self, ctx):
        with pytest.raises(DomainError):
            log_gamma_reference(100.0, ctx)


class TestApproximation:
    def test_laplace_first_order(self, ctx):
        mp = ctx.mp
        expected = 100 * mp.log(100) - 100 + mp.log(200 * mp.pi) / 2 + mp.log(mp.mpf(1201) / 1200)
        got = log_approximation(ApproximationSpec("laplace", 1), 100, ctx)
        assert abs(got - expected) < mp.mpf(10) ** -100

    def test_stirling_second_order(self, ctx):
        mp = ctx.mp
        expected = 100 * mp.log(100) - 100 + mp.log(200 * mp.pi) / 2 + mp.mpf(1) / 1200
        got = log_approximation(ApproximationSpec("stirling", 2), 100, ctx)
        assert abs(got - expected) < mp.mpf(10) ** -100

    def test_gosper_prefactor(self, ctx):
        mp = ctx.mp
        expected = 100 * mp.log(100) - 100 + mp.log(2 * mp.pi * (100 + mp.mpf(1) / 6)) / 2
        got = log_approximation(ApproximationSpec("nemes_shifted", 1), 100, ctx)
        # G_1 = 0, so the first order adds nothing to the square-root factor
        assert abs(got - expected) < mp.mpf(10) ** -100

    def test_non_positive_partial_sum(self, ctx, monkeypatch):
        monkeypatch.setattr(precision_eval, "laplace_coeffs", lambda N: FormalSeries.of([1, -200], order=N))
        with pytest.raises(DomainError):
            log_approximation(ApproximationSpec("laplace", 1), 100, ctx)


class TestSpec:
    def test_family_from_string(self):
        assert ApproximationSpec("mortici", 3).family is Family.MORTICI

    @pytest.mark.parametrize("family, order", [
        ("gosper", 2), ("laplace", 0), ("laplace", -1), ("laplace", True),
        ("stirling", 3), ("nemes_even", 5), ("nemes_even", 16),
    ])
    def test_invalid(self, family, order):
        with pytest.raises(InvalidSpecError):
            ApproximationSpec(family, order)

    def test_nemes_even_limit(self):
        assert ApproximationSpec("nemes_even", 14).order == 14


class TestEdd:
    @pytest.mark.parametrize("family, order, x, shown", [
        ("laplace", 1, 100, "-6.5"),
        ("stirling", 2, 100, "8.6"),
        ("laplace", 2, 100, "8.6"),
        ("nemes_shifted", 2, 100, "10.1"),
        ("ramanujan", 7, 1000, "27.5"),
        ("mortici", 5, 10000, "-27.9"),
        ("nemes_even", 8, 10000, "-42.9"),
    ])
    def test_table_cells(self, ctx, family, order, x, shown):
        assert format_edd(edd(ApproximationSpec(family, order), x, ctx)) == shown

    def test_sign_follows_log_difference(self, ctx):
        result = edd(ApproximationSpec("laplace", 1), 100, ctx)
        assert result.sign == "-"
        assert result.log_approximation < result.log_reference
        assert result.signed < 0

    def test_doubled_precision_is_stable(self, ctx):
        spec = ApproximationSpec("ramanujan", 4)
        once = edd(spec, 1000, ctx)
        twice = edd(spec, 1000, ctx.doubled())
        assert once.sign == twice.sign
        assert abs(float(once.edd) - float(twice.edd)) < 1e-6

    @pytest.mark.parametrize("family, order", [
        ("stirling", 2), ("laplace", 2), ("ramanujan", 3),
        ("mortici", 3), ("nemes_shifted", 3), ("nemes_even", 4),
    ])
    def test_grows_with_x(self, ctx, family, order):
        spec = ApproximationSpec(family, order)
        values = [float(edd(spec, x, ctx).edd) for x in (100, 1000, 10000)]
        assert values[0] < values[1] < values[2]

    def test_too_accurate_for_precision(self):
        low = PrecisionContext(40, 20)
        with pytest.raises(PrecisionError):
            edd(ApproximationSpec("nemes_even", 8), 10000, low)

    def test_signed_property(self):
        assert EddResult(edd=2.5, sign="-", log_approximation=0, log_reference=0).signed == -2.5
        assert EddResult(edd=2.5, sign="+", log_approximation=0, log_reference=0).signed == 2.5


class TestPrecisionContext:
    def test_defaults(self):
        ctx = PrecisionContext()
        assert (ctx.working_precision, ctx.target_digits) == (120, 100)
        assert ctx.mp.dps == 120

    def test_guard_digits(self):
        with pytest.raises(ConfigurationError):
            PrecisionContext(50, 40)

    def test_positive_target(self):
        with pytest.raises(ConfigurationError):
            PrecisionContext(40, 0)

    def test_with_precision(self):
        assert PrecisionContext.with_precision(60) == PrecisionContext(60, 40)

    def test_doubled(self):
        assert PrecisionContext(60, 40).doubled() == PrecisionContext(120, 100)

    def test_private_contexts(self):
        a, b = PrecisionContext(60, 40), PrecisionContext(200, 100)
        assert a.mp is not b.mp
        assert a.mp.dps == 60 and b.mp.dps == 200

    def test_hashable(self):
        assert hash(PrecisionContext(60, 40)) == hash(PrecisionContext(60, 40))
