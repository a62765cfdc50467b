"""
Maps between the presentations: the pullback along zeta and the change of
generators to the Bannai-Ito algebra.

@author : davidrpugh

"""
from fractions import Fraction

from .. linalg import commutator
from . relations import check_bi_relations
from . representations import RacahRep


def _quadratic(x):
    """x(x + 2)/4."""
    return x @ x.shift(2) * Fraction(1, 4)


def zeta_pullback(h):
    """
    Pull a DAHA module back to a module of the universal Racah algebra.

    Parameters
    ----------
    h : HRepLike

    Returns
    -------
    r : RacahRep
        A, B, C are the images of (t1v+t0v), (t1+t1v), (t0v+t1) under
        x -> x(x+2)/4; delta is set when A + B + C is a scalar matrix.

    """
    A = _quadratic(h.t1v + h.t0v)
    B = _quadratic(h.t1 + h.t1v)
    C = _quadratic(h.t0v + h.t1)
    delta = (A + B + C).scalar_value()
    return RacahRep(A, B, C, delta=delta, meta=h.meta)


def bi_triple(h):
    """
    Bannai-Ito generators of a DAHA module.

    Returns
    -------
    X, Y, Z : RatMatrix
        t0+t1+1/2, t0+t0v+1/2, t0+t1v+1/2.
    report : RelationReport

    """
    half = Fraction(1, 2)
    X = (h.t0 + h.t1).shift(half)
    Y = (h.t0 + h.t0v).shift(half)
    Z = (h.t0 + h.t1v).shift(half)
    return X, Y, Z, check_bi_relations(X, Y, Z)


def check_t0_centralizes(h, pullback=None):
    """
    True iff t0 commutes with the images of A, B and C.

    Parameters
    ----------
    h : HRepLike
    pullback : RacahRepLike, optional(default=None)
        The zeta pullback of `h`, computed when not supplied.

    """
    r = zeta_pullback(h) if pullback is None else pullback
    return all(commutator(h.t0, x).is_zero() for x in (r.A, r.B, r.C))
