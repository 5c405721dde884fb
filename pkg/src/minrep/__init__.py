"""Exact-arithmetic verification of oscillator realizations, reductive dual
pairs and the commutator algebra of normal-ordered bilocal fields.

Everything is computed over exact rationals or Gaussian rationals: root
system data and the highest-root grading, the normal-ordered Weyl algebra
and its level-truncated Fock matrices, Chevalley-Serre and commutant
suites for the conformal-type algebras, the closed commutator formula for
matrix-labeled bilinears, harmonic mode bases, and the light-cone
realization of the massless multiplet.
"""

from .scalars import QI, QIS
from .weylalg import WeylElement, WeylMonomial, commutator, normal_product
from .reports import CheckRecord, Report

__all__ = [
    "QI", "QIS", "WeylElement", "WeylMonomial", "commutator",
    "normal_product", "CheckRecord", "Report",
]

__version__ = "0.1.0"
