"""
Subspaces of Q^n in canonical reduced row-echelon form.

@author : davidrpugh

"""
from .. exceptions import AmbientDimensionError
from . elimination import rref
from . matrices import RatMatrix


class Subspace(object):
    """
    Subspace of Q^n stored as the non-zero rows of a RREF matrix.

    Two subspaces are equal iff their RREF bases agree entry-wise, which
    makes subspaces hashable and usable as lattice nodes.

    """

    __slots__ = ('_ambient_dim', '_basis', '_pivots')

    def __init__(self, ambient_dim, vectors=()):
        """
        Initialize an instance of the Subspace class.

        Parameters
        ----------
        ambient_dim : int
        vectors : iterable(sequence), optional(default=())
            Spanning vectors, not necessarily independent.

        """
        reduced, rank, pivots = rref(RatMatrix(vectors, ambient_dim))
        self._ambient_dim = ambient_dim
        self._basis = RatMatrix(reduced.rows[:rank], ambient_dim)
        self._pivots = tuple(pivots)

    def __repr__(self):
        return "Subspace(dim={}, ambient_dim={})".format(self.dim, self._ambient_dim)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self._basis == other._basis

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._basis)

    def __add__(self, other):
        return subspace_sum(self, other)

    def __and__(self, other):
        return subspace_intersect(self, other)

    def __contains__(self, vector):
        return self.contains_vector(vector)

    @property
    def ambient_dim(self):
        return self._ambient_dim

    @property
    def basis(self):
        """
        Canonical basis of the subspace.

        :getter: Return the RREF basis, one vector per row.
        :type: RatMatrix

        """
        return self._basis

    @property
    def dim(self):
        return self._basis.nrows

    @property
    def pivots(self):
        return self._pivots

    @classmethod
    def full(cls, n):
        return cls(n, RatMatrix.identity(n).rows)

    @classmethod
    def zero(cls, n):
        return cls(n)

    def annihilator(self):
        """Subspace of vectors y with y.x = 0 for every x in the subspace."""
        return kernel(self._basis)

    def complement_in(self, other):
        """
        Vectors of `other`'s basis completing this basis to one of `other`.

        Parameters
        ----------
        other : Subspace
            Must contain this subspace.

        Returns
        -------
        complement : list(tuple(Fraction))

        """
        _check_ambient(self, other)
        if not other.contains(self):
            raise ValueError("Subspace is not contained in the other subspace.")
        complement, current = [], self
        for row in other.basis.rows:
            if not current.contains_vector(row):
                complement.append(row)
                current = Subspace(self._ambient_dim,
                                   current.basis.rows + (row,))
        return complement

    def contains(self, other):
        _check_ambient(self, other)
        return all(self.contains_vector(row) for row in other.basis.rows)

    def contains_vector(self, vector):
        return not any(self.reduce(vector))

    def is_invariant(self, matrix):
        return all(self.contains_vector(matrix.apply(row))
                   for row in self._basis.rows)

    def reduce(self, vector):
        """Residue of a vector after elimination against the basis."""
        vector = list(vector)
        if len(vector) != self._ambient_dim:
            mesg = "Vector of length {} is not in a space of dimension {}."
            raise AmbientDimensionError(mesg.format(len(vector), self._ambient_dim))
        for row, pivot in zip(self._basis.rows, self._pivots):
            factor = vector[pivot]
            if factor != 0:
                vector = [x - factor * y for x, y in zip(vector, row)]
        return tuple(vector)


def _check_ambient(u, w):
    if u.ambient_dim != w.ambient_dim:
        mesg = "Ambient dimensions differ: {} versus {}."
        raise AmbientDimensionError(mesg.format(u.ambient_dim, w.ambient_dim))


def kernel(m):
    """
    Null space of a matrix.

    Parameters
    ----------
    m : RatMatrix

    Returns
    -------
    null_space : Subspace
        The subspace {v : m v = 0} of Q^cols.

    """
    if m.nrows == 0 or m.is_zero():
        return Subspace.full(m.ncols)
    if rref(m)[1] == m.ncols:
        return Subspace.zero(m.ncols)
    null_rows = RatMatrix.from_domain(m.to_domain().nullspace()).rows
    return Subspace(m.ncols, null_rows)


def subspace_sum(u, w):
    _check_ambient(u, w)
    return Subspace(u.ambient_dim, u.basis.rows + w.basis.rows)


def subspace_intersect(u, w):
    """Intersection, computed as the kernel of the stacked annihilators."""
    _check_ambient(u, w)
    conditions = u.annihilator().basis.vstack(w.annihilator().basis)
    return kernel(conditions)


def contains(u, w):
    """True iff w is a subspace of u."""
    return u.contains(w)
