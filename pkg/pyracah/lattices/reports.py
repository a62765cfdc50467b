"""
Classes for representing computed submodule lattices.

@author : davidrpugh

"""
import collections

from .. exceptions import LatticeInvariantError


SubquotientTag = collections.namedtuple(
    'SubquotientTag', ['d_prime', 'a_prime', 'b_prime', 'c_prime', 'verified', 'note'])
SubquotientTag.__new__.__defaults__ = ('',)

CompositionSeries = collections.namedtuple('CompositionSeries',
                                           ['nodes', 'factor_dims'])


class LatticeReportLike(object):

    @property
    def chains(self):
        """
        Maximal chains of the lattice as tuples of node indices.

        :getter: Return the maximal chains.
        :type: list(tuple(int))

        """
        return self._chains

    @property
    def eigen_data(self):
        """
        Eigen data of t0.

        :getter: Return a dict mapping each eigenvalue to a tuple
            (geometric dimension, algebraic multiplicity).
        :type: OrderedDict

        """
        return self._eigen_data

    @property
    def eigen_labels(self):
        """Map from node index to theta for nodes equal to V(theta)."""
        return self._eigen_labels

    @property
    def hasse_edges(self):
        return self._hasse_edges

    @property
    def nodes(self):
        return self._nodes

    @property
    def shape(self):
        return self._shape

    @property
    def subquotients(self):
        """
        Classification of each covering pair.

        :getter: Return a dict mapping (lower, upper) index pairs to the
            SubquotientTag of upper/lower.
        :type: OrderedDict

        """
        return self._subquotients


class LatticeReport(LatticeReportLike):
    """Class representing the lattice of Racah submodules of a DAHA module."""

    def __init__(self, nodes, hasse_edges, shape, eigen_data, eigen_labels,
                 chains, subquotients):
        """
        Initialize an instance of the LatticeReport class.

        Parameters
        ----------
        nodes : list(Subspace)
            Sorted by dimension, so the zero space comes first and the
            full space last.
        hasse_edges : list(tuple(int, int))
        shape : str
        eigen_data : OrderedDict(Fraction, tuple(int, int))
        eigen_labels : dict(int, Fraction)
        chains : list(tuple(int))
        subquotients : OrderedDict(tuple(int, int), SubquotientTag)

        """
        self._nodes = nodes
        self._hasse_edges = hasse_edges
        self._shape = shape
        self._eigen_data = eigen_data
        self._eigen_labels = eigen_labels
        self._chains = chains
        self._subquotients = subquotients

    @property
    def composition_factor_dims(self):
        """Sorted dimensions of the composition factors."""
        return self.composition_series()[0].factor_dims

    @property
    def dim(self):
        return self._nodes[-1].dim

    @property
    def node_dims(self):
        return [node.dim for node in self._nodes]

    @property
    def t0_diagonalizable(self):
        return sum(geo for geo, _ in self._eigen_data.values()) == self.dim

    def atoms(self):
        """Minimal non-zero nodes."""
        return [self._nodes[upper] for lower, upper in self._hasse_edges
                if lower == 0]

    def composition_series(self):
        """
        Maximal chains with their factor dimensions.

        Returns
        -------
        series : list(CompositionSeries)
            factor_dims are sorted, so Jordan-Holder equivalent chains have
            equal factor_dims.

        """
        series = []
        for chain in self._chains:
            dims = [self._nodes[k].dim for k in chain]
            factors = tuple(sorted(y - x for x, y in zip(dims, dims[1:])))
            series.append(CompositionSeries(tuple(self._nodes[k] for k in chain),
                                            factors))
        return series

    def is_completely_reducible(self):
        """
        Whether the module is a direct sum of irreducible submodules.

        Returns t0-diagonalizability, cross-checked against whether the
        atoms of the lattice sum to the full space.

        """
        total = self._nodes[0]
        for atom in self.atoms():
            total = total + atom
        atoms_span = total == self._nodes[-1]
        if atoms_span != self.t0_diagonalizable:
            mesg = ("t0 diagonalizable is {} but the atoms {} span the module")
            raise LatticeInvariantError(
                mesg.format(self.t0_diagonalizable, "do" if atoms_span else "do not"))
        return atoms_span
