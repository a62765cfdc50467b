"""
Gauss-Jordan elimination over the rationals, backed by sympy's DomainMatrix.

@author : davidrpugh

"""
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from . matrices import RatMatrix
from . rationals import from_qq, to_qq


def rref(m):
    """
    Reduced row-echelon form of a matrix.

    Parameters
    ----------
    m : RatMatrix

    Returns
    -------
    reduced : RatMatrix
        The unique RREF of `m`; zero rows are kept at the bottom.
    rank : int
    pivot_columns : list(int)

    """
    if m.nrows == 0 or m.ncols == 0:
        return RatMatrix.zeros(m.nrows, m.ncols), 0, []
    reduced, pivots = m.to_domain().rref()
    return RatMatrix.from_domain(reduced), len(pivots), list(pivots)


def solve_in_basis(basis_rows, vector):
    """
    Coordinates of a vector with respect to linearly independent vectors.

    Parameters
    ----------
    basis_rows : sequence(sequence(Fraction))
        Linearly independent vectors.
    vector : sequence(Fraction)

    Returns
    -------
    coordinates : tuple(Fraction)

    Raises
    ------
    ValueError
        If the vector is not in the span of `basis_rows`.

    """
    vector = [to_qq(x) for x in vector]
    basis_rows = [[to_qq(x) for x in b] for b in basis_rows]
    k, n = len(basis_rows), len(vector)
    if any(len(b) != n for b in basis_rows):
        raise ValueError("Basis vectors and vector have different lengths.")
    if n == 0:
        raise ValueError("Cannot solve in a space of dimension zero.")
    augmented = DomainMatrix([[b[i] for b in basis_rows] + [vector[i]]
                              for i in range(n)], (n, k + 1), QQ)
    reduced, pivots = augmented.rref()
    if k in pivots:
        raise ValueError("Vector does not lie in the span of the basis.")
    if len(pivots) != k:
        raise ValueError("Basis vectors are linearly dependent.")
    rows = reduced.to_list()
    return tuple(from_qq(rows[i][k]) for i in range(k))
