"""gamma-expansions: asymptotic expansions of the Gamma function in exact arithmetic"""

__version__ = "0.1.0"
