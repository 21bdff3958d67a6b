"""
Exception hierarchy for the expansion engine
Every failure the library raises on purpose derives from GammaExpansionError
"""

from typing import Optional


class GammaExpansionError(Exception):
    """Base class for all deliberate library errors"""


class SeriesError(GammaExpansionError):
    """A formal-series operation was applied outside its preconditions"""


class DegeneratePairError(SeriesError):
    """The pair recurrence hit g_m = 0, so v_m cannot be solved for"""

    def __init__(self, m: int):
        super().__init__(f"g_{m} = 0: v_{m} is undefined by the pair recurrence")
        self.m = m


class UndefinedShiftError(GammaExpansionError):
    """v_0 multiplies the zero power and has no value"""

    def __init__(self, message: Optional[str] = None):
        super().__init__(message or "v_0 is undefined (it only ever meets the zero power)")


class OrderRangeError(GammaExpansionError):
    """Requested order lies outside the supported range"""


class InvalidSpecError(GammaExpansionError):
    """Approximation spec violates its invariants or names an unknown family"""


class DomainError(GammaExpansionError):
    """Argument outside the evaluation domain (x < 1, inexact x, non-positive partial sum)"""


class PrecisionError(GammaExpansionError):
    """Requested accuracy cannot be certified with the configured limits"""


class ConfigurationError(GammaExpansionError):
    """Bad setting from a flag or an environment variable"""
