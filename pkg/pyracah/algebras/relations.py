"""
Exact checks of the defining relations at a representation.

Failing identities are reported, never raised: every checker returns a
RelationReport listing the named residual matrices that are non-zero.

@author : davidrpugh

"""
from .. linalg import anticommutator, commutator


class RelationReport(object):
    """
    Outcome of checking a presentation at a representation.

    Attributes
    ----------
    h_sum_ok : bool or None
        Whether t0 + t1 + t0v + t1v = -1 (None when not checked).
    central_squares : tuple(Fraction) or None
        (k0, k1, k0v, k1v) when all four squares are scalar matrices.
    racah_d_ok : bool or None
        Whether [A,B] = [B,C] = [C,A] = 2D (None when not checked).
    central_elements_ok : bool or None
        Whether the designated central elements commute with every generator:
        the four squares for the DAHA, alpha/beta/gamma for the Racah
        algebra, the three anticommutator combinations for the Bannai-Ito
        algebra.
    alpha, beta, gamma : Fraction or None
        Scalars of the three central elements when they are scalar matrices.
    violations : list(tuple(str, RatMatrix))
        Named residual matrices of the identities that fail.

    """

    def __init__(self, h_sum_ok=None, central_squares=None, racah_d_ok=None,
                 central_elements_ok=None, alpha=None, beta=None, gamma=None,
                 violations=None):
        self._h_sum_ok = h_sum_ok
        self._central_squares = central_squares
        self._racah_d_ok = racah_d_ok
        self._central_elements_ok = central_elements_ok
        self._alpha, self._beta, self._gamma = alpha, beta, gamma
        self._violations = list(violations or [])

    def __repr__(self):
        names = [name for name, _ in self._violations]
        return "RelationReport(ok={}, violations={})".format(self.ok, names)

    @property
    def alpha(self):
        return self._alpha

    @property
    def beta(self):
        return self._beta

    @property
    def central_elements_ok(self):
        return self._central_elements_ok

    @property
    def central_squares(self):
        return self._central_squares

    @property
    def gamma(self):
        return self._gamma

    @property
    def h_sum_ok(self):
        return self._h_sum_ok

    @property
    def ok(self):
        """
        Conjunction of all checked relations.

        :getter: Return True iff no checked relation failed.
        :type: bool

        """
        flags = (self._h_sum_ok, self._racah_d_ok, self._central_elements_ok)
        return all(flag for flag in flags if flag is not None)

    @property
    def racah_d_ok(self):
        return self._racah_d_ok

    @property
    def violations(self):
        return self._violations


def _central(element, element_name, generators, generator_names, violations):
    """Record every generator that fails to commute with `element`."""
    ok = True
    for name, generator in zip(generator_names, generators):
        residual = commutator(element, generator)
        if not residual.is_zero():
            violations.append(("[{},{}]".format(element_name, name), residual))
            ok = False
    return ok


def check_h_relations(h):
    """
    Check the defining relations of the universal additive DAHA.

    Parameters
    ----------
    h : HRepLike

    Returns
    -------
    report : RelationReport

    """
    violations = []
    total = (h.t0 + h.t1 + h.t0v + h.t1v).shift(1)
    h_sum_ok = total.is_zero()
    if not h_sum_ok:
        violations.append(("t0+t1+t0v+t1v+1", total))

    names = h.GENERATOR_NAMES
    squares = [g @ g for g in h.generators]
    squares_ok = True
    for name, square in zip(names, squares):
        squares_ok &= _central(square, name + "^2", h.generators, names, violations)

    scalars = tuple(square.scalar_value() for square in squares)
    central_squares = scalars if None not in scalars else None
    return RelationReport(h_sum_ok=h_sum_ok, central_squares=central_squares,
                          central_elements_ok=squares_ok, violations=violations)


def check_racah_relations(r):
    """
    Check the defining relations of the universal Racah algebra.

    Parameters
    ----------
    r : RacahRepLike

    Returns
    -------
    report : RelationReport

    """
    A, B, C, D = r.generators
    violations = []
    two_d = D * 2
    racah_d_ok = True
    for name, (x, y) in (("[A,B]-2D", (A, B)), ("[B,C]-2D", (B, C)),
                         ("[C,A]-2D", (C, A))):
        residual = commutator(x, y) - two_d
        if not residual.is_zero():
            violations.append((name, residual))
            racah_d_ok = False

    elements = (("alpha", commutator(A, D) + A @ C - B @ A),
                ("beta", commutator(B, D) + B @ A - C @ B),
                ("gamma", commutator(C, D) + C @ B - A @ C))
    central_ok = True
    for name, element in elements:
        central_ok &= _central(element, name, r.generators, "ABCD", violations)

    alpha, beta, gamma = (element.scalar_value() for _, element in elements)
    return RelationReport(racah_d_ok=racah_d_ok, central_elements_ok=central_ok,
                          alpha=alpha, beta=beta, gamma=gamma,
                          violations=violations)


def check_bi_relations(X, Y, Z):
    """
    Check the Bannai-Ito relations: {X,Y}-Z, {Y,Z}-X, {Z,X}-Y are central.

    The scalars of the three combinations, when scalar, are reported in the
    alpha, beta, gamma slots of the report.

    """
    violations = []
    elements = (("{X,Y}-Z", anticommutator(X, Y) - Z),
                ("{Y,Z}-X", anticommutator(Y, Z) - X),
                ("{Z,X}-Y", anticommutator(Z, X) - Y))
    central_ok = True
    for name, element in elements:
        central_ok &= _central(element, name, (X, Y, Z), "XYZ", violations)
    alpha, beta, gamma = (element.scalar_value() for _, element in elements)
    return RelationReport(central_elements_ok=central_ok, alpha=alpha,
                          beta=beta, gamma=gamma, violations=violations)


def check_anticommutator_identities(h):
    """True iff {t0+t1,[t1,t0]}, {t0+t0v,[t0v,t0]}, {t0+t1v,[t1v,t0]} vanish."""
    t0 = h.t0
    return all(anticommutator(t0 + t, commutator(t, t0)).is_zero()
               for t in (h.t1, h.t0v, h.t1v))
