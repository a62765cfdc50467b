"""
Rational eigenvalues of rational matrices.

The characteristic polynomial is computed without fractions on the
integer-scaled matrix, and its rational roots are read off the linear
factors of its factorisation over the integers.

@author : davidrpugh

"""
from fractions import Fraction

import sympy


_LAMBDA = sympy.Symbol('lambda')


def characteristic_polynomial(m):
    """
    Characteristic polynomial of the integer-scaled matrix.

    Parameters
    ----------
    m : RatMatrix
        A square matrix.

    Returns
    -------
    scale : int
        Least common multiple of the denominators of `m`.
    poly : sympy.PurePoly
        det(lambda I - scale * m), with integer coefficients.

    """
    if not m.is_square:
        mesg = "Characteristic polynomial needs a square matrix, got shape {}."
        raise ValueError(mesg.format(m.shape))
    scale, rows = m.integer_scaled()
    poly = sympy.Matrix(rows).charpoly(_LAMBDA)
    return scale, poly


def rational_eigenvalues(m):
    """
    Rational eigenvalues of a square matrix with algebraic multiplicities.

    Irrational and complex eigenvalues are silently omitted; callers that
    need the full spectrum must check that the multiplicities add up to the
    dimension.

    Parameters
    ----------
    m : RatMatrix

    Returns
    -------
    eigenvalues : list(tuple(Fraction, int))
        Sorted by eigenvalue.

    """
    if m.nrows == 0:
        return []
    scale, poly = characteristic_polynomial(m)
    _, factors = poly.factor_list()
    found = {}
    for factor, multiplicity in factors:
        if factor.degree() != 1:
            continue
        lead, const = factor.all_coeffs()
        root = Fraction(-int(const), int(lead)) / scale
        found[root] = found.get(root, 0) + multiplicity
    return sorted(found.items())
