"""
Objects imported here will live in the `pyracah.linalg` namespace

"""
from . eigenvalues import characteristic_polynomial, rational_eigenvalues
from . elimination import rref, solve_in_basis
from . matrices import RatMatrix, anticommutator, commutator
from . rationals import format_rational, rational_sqrt, to_rational
from . subspaces import (Subspace, contains, kernel, subspace_intersect,
                         subspace_sum)

__all__ = ["RatMatrix", "Subspace", "anticommutator", "characteristic_polynomial",
           "commutator", "contains", "format_rational", "kernel",
           "rational_eigenvalues", "rational_sqrt", "rref", "solve_in_basis",
           "subspace_intersect", "subspace_sum", "to_rational"]
