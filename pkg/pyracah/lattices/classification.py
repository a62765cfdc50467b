"""
Identification of irreducible Racah subquotients with the modules R_d.

A subquotient is identified by solving for candidate parameters from the
spectra of A and B and the scalar delta, then certifying each candidate
with a ladder basis u_0, ..., u_d on which A and B take the bidiagonal
form of R_d(a, b, c).

@author : davidrpugh

"""
import collections
import itertools
from fractions import Fraction

from .. linalg import RatMatrix, Subspace, kernel, rational_eigenvalues, rational_sqrt
from .. linalg import solve_in_basis
from .. modules import RacahFamily, build_R
from . reports import SubquotientTag


COMBINATION_COEFFICIENTS = (0, 1, -1, 2, -2)

# x(x + 1) takes each value at most twice, so a start space inside an
# eigenspace of a matched ladder spectrum has dimension at most 2 and the
# combination search below is never cut short.
MAX_COMBINATION_DIM = 3


def subquotient_action(r, lower, upper):
    """
    Matrices of A, B and C on the subquotient upper/lower.

    Parameters
    ----------
    r : RacahRepLike
    lower, upper : Subspace
        Invariant subspaces with lower contained in upper.

    Returns
    -------
    Aq, Bq, Cq : RatMatrix
        Coordinates are taken with respect to the images of the vectors of
        upper's basis that complete lower's basis.

    """
    complement = lower.complement_in(upper)
    basis = list(lower.basis.rows) + complement
    k = lower.dim
    actions = []
    for matrix in (r.A, r.B, r.C):
        columns = [solve_in_basis(basis, matrix.apply(q))[k:] for q in complement]
        actions.append(RatMatrix.from_columns(columns, len(complement)))
    return tuple(actions)


def _roots_of_quadratic(value):
    """Rational x with x(x + 1) = value."""
    root = rational_sqrt(1 + 4 * value)
    if root is None:
        return []
    return sorted({(-1 + root) / 2, (-1 - root) / 2})


def _ladder_parameters(spectrum, d):
    """
    Parameters p with {(p + d/2 - i)(p + d/2 - i + 1)} equal to `spectrum`.

    Parameters
    ----------
    spectrum : Counter(Fraction)
        Eigenvalues with multiplicity; must hold d + 1 values.
    d : int

    """
    if sum(spectrum.values()) != d + 1:
        return []
    candidates = set()
    for value in spectrum:
        for x in _roots_of_quadratic(value):
            p = x - Fraction(d, 2)
            values = collections.Counter(RacahFamily.theta(d, p, i)
                                         for i in range(d + 1))
            if values == spectrum:
                candidates.add(p)
    return sorted(candidates)


def _start_vectors(space):
    """Basis vectors of `space`, then small combinations of them."""
    rows = space.basis.rows
    for row in rows:
        yield row
    if 1 < len(rows) <= MAX_COMBINATION_DIM:
        for coefficients in itertools.product(COMBINATION_COEFFICIENTS,
                                              repeat=len(rows)):
            if sum(1 for x in coefficients if x != 0) < 2:
                continue
            yield tuple(sum(c * row[k] for c, row in zip(coefficients, rows))
                        for k in range(space.ambient_dim))


def _start_space(Bq, d, a, b, c):
    """Eigenspace of Bq in which a ladder for R_d(a, b, c) must start."""
    theta_star_0 = RacahFamily.ladder(d, a, b, c)[1][0]
    return kernel(Bq.shift(-theta_star_0))


def verify_ladder(Aq, Bq, d, a, b, c):
    """
    Certify that (Aq, Bq) is isomorphic to R_d(a, b, c).

    Returns
    -------
    verified : bool
        True iff some u_0 in ker(Bq - theta*_0) generates a basis
        u_{i+1} = (Aq - theta_i) u_i on which Aq and Bq act exactly as in
        R_d(a, b, c).

    """
    n = d + 1
    thetas, theta_stars, phis = RacahFamily.ladder(d, a, b, c)
    start_space = _start_space(Bq, d, a, b, c)
    for u0 in _start_vectors(start_space):
        ladder = [tuple(u0)]
        for i in range(d):
            ladder.append(Aq.shift(-thetas[i]).apply(ladder[-1]))
        if any(Aq.shift(-thetas[d]).apply(ladder[-1])):
            continue
        if Subspace(n, ladder).dim != n:
            continue
        ok = True
        for i, u in enumerate(ladder):
            expected = [theta_stars[i] * x for x in u]
            if i > 0:
                expected = [x + phis[i] * y for x, y in zip(expected, ladder[i - 1])]
            if list(Bq.apply(u)) != expected:
                ok = False
                break
        if ok:
            return True
    return False


def classify_R_subquotient(Aq, Bq, delta):
    """
    Identify an irreducible subquotient with some R_d'(a', b', c').

    Parameters
    ----------
    Aq, Bq : RatMatrix
        Action of A and B on the subquotient.
    delta : Fraction
        Scalar by which A + B + C acts on the subquotient.

    Returns
    -------
    tag : SubquotientTag
        The lexicographically smallest verified (a', b', c'), or an
        unverified tag with a note when no candidate verifies.

    """
    d = Aq.nrows - 1
    a_spectrum = collections.Counter(dict(rational_eigenvalues(Aq)))
    b_spectrum = collections.Counter(dict(rational_eigenvalues(Bq)))
    a_candidates = _ladder_parameters(a_spectrum, d)
    b_candidates = _ladder_parameters(b_spectrum, d)
    if not a_candidates or not b_candidates:
        return SubquotientTag(d, None, None, None, False,
                              "spectrum of A or B does not match any R_d")
    candidates = set()
    half = Fraction(d, 2)
    for a, b in itertools.product(a_candidates, b_candidates):
        rest = delta - half * (half + 1) - a * (a + 1) - b * (b + 1)
        for c in _roots_of_quadratic(rest):
            candidates.add((a, b, c))
    for a, b, c in sorted(candidates):
        if verify_ladder(Aq, Bq, d, a, b, c):
            return SubquotientTag(d, a, b, c, True)
    return SubquotientTag(d, None, None, None, False,
                          "no candidate parameters admit a ladder basis")


def canonical_tag(d, a, b, c):
    """Normal-form tag of R_d(a, b, c)."""
    r = build_R(d, a, b, c)
    return classify_R_subquotient(r.A, r.B, r.delta)
