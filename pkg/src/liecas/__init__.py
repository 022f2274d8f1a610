"""Exact invariants and Casimir operators of finite-dimensional Lie algebras."""

from .exact import Polynomial
from .liealg import StructureConstants, SubSpace
from .enveloping import EnvelopingAlgebra, PBWElement

__version__ = "0.1.0"

__all__ = ["Polynomial", "StructureConstants", "SubSpace", "EnvelopingAlgebra", "PBWElement"]
