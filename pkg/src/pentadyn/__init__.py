"""Exact dynamics of the pentagonal lozenge map and its self-similar structure."""

from .cyclo import Cyclo, QuadReal, digits, omega, parse_cyclo, zeta
from .dynamics import classify, step_S, step_T, step_Ttilde

__version__ = "0.1.0"

__all__ = ["Cyclo", "QuadReal", "digits", "omega", "parse_cyclo", "zeta",
           "classify", "step_S", "step_T", "step_Ttilde", "__version__"]
