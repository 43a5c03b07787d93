"""modlat: admissible and perfect elements of D^{2,2,2} and D^4 over GF(p)."""

__version__ = "0.1.0"

from .subspace import Subspace
from .terms import D222, D4, evaluate, parse, render

__all__ = ["Subspace", "D222", "D4", "parse", "render", "evaluate", "__version__"]
