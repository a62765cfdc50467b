"""
Eigenspaces of t0, which are submodules for the Racah algebra.

@author : davidrpugh

"""
import collections

from .. algebras import zeta_pullback
from .. exceptions import IrrationalSpectrumError, LatticeInvariantError
from .. linalg import kernel, rational_eigenvalues, rational_sqrt


def t0_spectrum(h):
    """
    Eigenvalues of t0 with algebraic multiplicities.

    The candidates are the square roots +/-s of the scalar k0 by which
    t0^2 acts, cross-checked against the rational roots of the
    characteristic polynomial of t0.

    Parameters
    ----------
    h : HRepLike
        An irreducible module, so that t0^2 is a scalar.

    Returns
    -------
    spectrum : OrderedDict(Fraction, int)

    """
    k0 = (h.t0 @ h.t0).scalar_value()
    if k0 is None:
        raise LatticeInvariantError("t0^2 does not act as a scalar")
    root = rational_sqrt(k0)
    if root is None:
        mesg = "irrational spectrum: k0 = {} is not the square of a rational"
        raise IrrationalSpectrumError(mesg.format(k0))
    multiplicities = dict(rational_eigenvalues(h.t0))
    spectrum = collections.OrderedDict(
        (theta, multiplicities[theta]) for theta in sorted({-root, root})
        if theta in multiplicities)
    if sum(spectrum.values()) != h.dim:
        mesg = "spectrum of t0 is not fully rational: found {} of {} eigenvalues"
        raise IrrationalSpectrumError(mesg.format(sum(spectrum.values()), h.dim))
    return spectrum


def t0_eigenspaces(h, pullback=None):
    """
    Non-zero eigenspaces V(theta) of t0.

    Parameters
    ----------
    h : HRepLike
    pullback : RacahRepLike, optional(default=None)
        The zeta pullback of `h`, computed when not supplied.

    Returns
    -------
    eigenspaces : OrderedDict(Fraction, Subspace)
        Each eigenspace is checked to be invariant under A, B and C.

    """
    r = zeta_pullback(h) if pullback is None else pullback
    eigenspaces = collections.OrderedDict()
    for theta in t0_spectrum(h):
        space = kernel(h.t0.shift(-theta))
        for name, matrix in zip("ABC", (r.A, r.B, r.C)):
            if not space.is_invariant(matrix):
                mesg = "V({}) is not invariant under {}"
                raise LatticeInvariantError(mesg.format(theta, name))
        eigenspaces[theta] = space
    return eigenspaces
