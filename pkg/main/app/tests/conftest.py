import os
import random
from fractions import Fraction

import pytest

from app.core.precision_eval import PrecisionContext
from app.core.series_engine import FormalSeries
from app.utils.logs import reset_logging
from app.utils.settings import reset_settings


@pytest.fixture(scope="session")
def ctx():
    return PrecisionContext()


@pytest.fixture
def rng():
    return random.Random(20100414)


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in list(os.environ):
        if name.startswith("GAMMAEXP_"):
            monkeypatch.delenv(name)
    reset_settings()
    yield
    reset_settings()
    reset_logging()


def random_series(rng, order, constant=None):
    """Series with small random rational coefficients"""
    coeffs = [Fraction(rng.randint(-40, 40), rng.randint(1, 25)) for _ in range(order + 1)]
    if constant is not None:
        coeffs[0] = Fraction(constant)
    return FormalSeries(tuple(coeffs))
