"""
Classes for representations of the additive DAHA and of the Racah algebra.

@author : davidrpugh

"""
from .. linalg import RatMatrix, commutator, to_rational


class HRepLike(object):
    """
    Class describing the protocol that all HRepLike objects should satisfy.

    An HRepLike object carries four square matrices giving the action of
    the generators t0, t1, t0v, t1v on a module, together with optional
    metadata identifying the catalog module the matrices came from.

    """

    GENERATOR_NAMES = ("t0", "t1", "t0v", "t1v")

    @property
    def dim(self):
        """
        Dimension of the module.

        :getter: Return the dimension.
        :type: int

        """
        return self._t0.nrows

    @property
    def generators(self):
        """
        Matrices of t0, t1, t0v, t1v (in that order).

        :getter: Return the generator matrices.
        :type: tuple(RatMatrix)

        """
        return (self._t0, self._t1, self._t0v, self._t1v)

    @property
    def meta(self):
        """
        Catalog metadata, or None for a custom module.

        :getter: Return the module specification.
        :type: ModuleSpec

        """
        return self._meta

    @property
    def t0(self):
        return self._t0

    @property
    def t1(self):
        return self._t1

    @property
    def t0v(self):
        return self._t0v

    @property
    def t1v(self):
        return self._t1v


class HRep(HRepLike):
    """Class representing a module for the universal additive DAHA."""

    def __init__(self, t0, t1, t0v, t1v, meta=None):
        """
        Initialize an instance of the HRep class.

        Parameters
        ----------
        t0, t1, t0v, t1v : RatMatrix
            Square matrices of a common size.
        meta : ModuleSpec, optional(default=None)

        """
        self._t0, self._t1, self._t0v, self._t1v = self._validate(
            (t0, t1, t0v, t1v), self.GENERATOR_NAMES)
        self._meta = self._validate_meta(meta, t0.nrows)

    def __repr__(self):
        return "HRep(dim={}, meta={})".format(self.dim, self._meta)

    def __eq__(self, other):
        if not isinstance(other, HRepLike):
            return NotImplemented
        return self.generators == other.generators and self.meta == other.meta

    def __hash__(self):
        return hash((self.generators, self.meta))

    @staticmethod
    def _validate(matrices, names):
        """Validate the generator matrices."""
        dim = matrices[0].nrows
        for name, matrix in zip(names, matrices):
            if not isinstance(matrix, RatMatrix):
                mesg = "Generator {} must be a RatMatrix, not {}."
                raise ValueError(mesg.format(name, type(matrix).__name__))
            if matrix.shape != (dim, dim):
                mesg = "Generator {} has shape {} but the module has dimension {}."
                raise ValueError(mesg.format(name, matrix.shape, dim))
        return matrices

    @staticmethod
    def _validate_meta(meta, dim):
        """Validate the metadata against the dimension of the module."""
        if meta is not None and meta.d + 1 != dim:
            mesg = "Metadata says d={} but the matrices have dimension {}."
            raise ValueError(mesg.format(meta.d, dim))
        return meta

    def replace(self, **generators):
        """Return a copy with some generator matrices replaced."""
        kwargs = dict(zip(self.GENERATOR_NAMES, self.generators))
        kwargs.update(generators)
        return HRep(meta=self._meta, **kwargs)


class RacahRepLike(object):
    """
    Class describing the protocol that all RacahRepLike objects should satisfy.

    Notes
    -----
    D is never stored independently: it is always [A, B] / 2.

    """

    @property
    def A(self):
        return self._A

    @property
    def B(self):
        return self._B

    @property
    def C(self):
        return self._C

    @property
    def D(self):
        return self._D

    @property
    def delta(self):
        """
        Scalar by which A + B + C acts, if known.

        :getter: Return the scalar, or None.
        :type: Fraction

        """
        return self._delta

    @property
    def dim(self):
        return self._A.nrows

    @property
    def generators(self):
        """Matrices of A, B, C, D (in that order)."""
        return (self._A, self._B, self._C, self._D)

    @property
    def meta(self):
        return self._meta


class RacahRep(RacahRepLike):
    """Class representing a module for the universal Racah algebra."""

    def __init__(self, A, B, C, delta=None, meta=None):
        """
        Initialize an instance of the RacahRep class.

        Parameters
        ----------
        A, B, C : RatMatrix
        delta : Fraction, optional(default=None)
            When given, A + B + C must equal delta times the identity.
        meta : ModuleSpec, optional(default=None)

        """
        self._A, self._B, self._C = HRep._validate((A, B, C), ("A", "B", "C"))
        self._delta = self._validate_delta(A, B, C, delta)
        self._D = commutator(A, B) * to_rational("1/2")
        self._meta = meta

    def __repr__(self):
        return "RacahRep(dim={}, delta={}, meta={})".format(self.dim, self._delta,
                                                           self._meta)

    @staticmethod
    def _validate_delta(A, B, C, delta):
        """Check that A + B + C acts as the claimed scalar."""
        if delta is None:
            return None
        delta = to_rational(delta)
        if not (A + B + C).shift(-delta).is_zero():
            mesg = "A + B + C does not act as the scalar {}."
            raise ValueError(mesg.format(delta))
        return delta
