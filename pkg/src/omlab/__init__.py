"""Finite-model workbench for implicative involutive BE algebras."""

from .algebra import FiniteAlgebra, validate
from .algfile import parse_alg, read_alg, write_alg

__version__ = "0.1.0"
__all__ = ["FiniteAlgebra", "validate", "parse_alg", "read_alg", "write_alg", "__version__"]
