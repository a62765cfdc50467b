"""
Computation of the lattice of Racah submodules of an irreducible DAHA module.

@author : davidrpugh

"""
import collections
import itertools
import logging

import numpy as np

from .. algebras import zeta_pullback
from .. exceptions import LatticeInvariantError
from .. linalg import Subspace
from . classification import classify_R_subquotient, subquotient_action
from . eigenspaces import t0_eigenspaces, t0_spectrum
from . reports import LatticeReport, SubquotientTag
from . spinning import eigenvector_spins, lift, restrict, spin

logger = logging.getLogger(__name__)


class LatticeEngine(object):
    """
    Class for computing submodule lattices of the zeta pullback.

    Every irreducible Racah submodule lies in an eigenspace of t0, so the
    lattice is seeded with the eigenspaces and with the spins of the
    eigenvectors of A, B and C restricted to each of them, and then closed
    under sums and intersections.

    """

    MAX_NODES = 64

    def __init__(self, seed=0, belt_size=20):
        """
        Initialize an instance of the LatticeEngine class.

        Parameters
        ----------
        seed : int, optional(default=0)
            Seed for the random vectors of the soundness belt.
        belt_size : int, optional(default=20)
            Number of random vectors spun after the closure; each spin must
            already be a node.

        """
        self.seed = seed
        self.belt_size = belt_size

    @property
    def belt_size(self):
        """
        Number of random vectors used to check the computed lattice.

        :getter: Return the current belt size.
        :setter: Set a new belt size.
        :type: int

        """
        return self._belt_size

    @belt_size.setter
    def belt_size(self, value):
        self._belt_size = self._validate_belt_size(value)

    @property
    def seed(self):
        return self._seed

    @seed.setter
    def seed(self, value):
        self._seed = value

    @staticmethod
    def _validate_belt_size(value):
        if not isinstance(value, int) or value < 0:
            mesg = "The belt_size attribute must be a non-negative int, not {!r}."
            raise ValueError(mesg.format(value))
        return value

    @classmethod
    def _closure(cls, nodes):
        """Close a set of subspaces under sums and intersections."""
        nodes = set(nodes)
        while True:
            fresh = set()
            for u, w in itertools.combinations(nodes, 2):
                for candidate in (u + w, u & w):
                    if candidate not in nodes:
                        fresh.add(candidate)
            if not fresh:
                return nodes
            nodes |= fresh
            if len(nodes) > cls.MAX_NODES:
                mesg = "lattice closure exceeded {} nodes"
                raise LatticeInvariantError(mesg.format(cls.MAX_NODES))

    @staticmethod
    def _covering_edges(nodes):
        edges = []
        for i, j in itertools.combinations(range(len(nodes)), 2):
            lower, upper = nodes[i], nodes[j]
            if lower.dim == upper.dim or not upper.contains(lower):
                continue
            between = any(lower.dim < node.dim < upper.dim and
                          node.contains(lower) and upper.contains(node)
                          for node in nodes)
            if not between:
                edges.append((i, j))
        return edges

    @staticmethod
    def _shape(nodes):
        if len(nodes) == 2:
            return "simple"
        elif len(nodes) == 3:
            return "chain3"
        elif len(nodes) == 4:
            first, second = nodes[1], nodes[2]
            if second.contains(first) or first.contains(second):
                return "chain4"
            return "diamond"
        else:
            mesg = "unexpected lattice with {} nodes of dimensions {}"
            raise LatticeInvariantError(mesg.format(len(nodes),
                                                    [node.dim for node in nodes]))

    @staticmethod
    def _maximal_chains(nodes, edges):
        successors = collections.defaultdict(list)
        for lower, upper in edges:
            successors[lower].append(upper)
        top = len(nodes) - 1
        chains, stack = [], [(0,)]
        while stack:
            chain = stack.pop()
            if chain[-1] == top:
                chains.append(chain)
                continue
            for upper in reversed(successors[chain[-1]]):
                stack.append(chain + (upper,))
        return sorted(chains)

    @staticmethod
    def _check_jordan_holder(nodes, chains):
        multisets = set()
        for chain in chains:
            dims = [nodes[k].dim for k in chain]
            multisets.add(tuple(sorted(y - x for x, y in zip(dims, dims[1:]))))
        if len(multisets) != 1:
            mesg = "maximal chains have different composition factors: {}"
            raise LatticeInvariantError(mesg.format(sorted(multisets)))

    @staticmethod
    def _check_invariance(r, nodes):
        for node in nodes:
            for name, matrix in zip("ABC", (r.A, r.B, r.C)):
                if not node.is_invariant(matrix):
                    mesg = "node of dimension {} is not invariant under {}"
                    raise LatticeInvariantError(mesg.format(node.dim, name))

    @staticmethod
    def _tag(r, lower, upper):
        Aq, Bq, Cq = subquotient_action(r, lower, upper)
        delta = (Aq + Bq + Cq).scalar_value()
        if delta is None:
            return SubquotientTag(upper.dim - lower.dim - 1, None, None, None,
                                  False, "A + B + C is not scalar on the subquotient")
        return classify_R_subquotient(Aq, Bq, delta)

    def _discover(self, r, eigenspaces):
        """Seed nodes: 0, V, each V(theta) and the eigenvector spins inside them."""
        n = r.dim
        nodes = {Subspace.zero(n), Subspace.full(n)}
        for theta, space in eigenspaces.items():
            nodes.add(space)
            operators = [restrict(matrix, space) for matrix in (r.A, r.B, r.C)]
            for coordinate_space in eigenvector_spins(operators, space.dim):
                nodes.add(lift(coordinate_space, space))
            logger.debug("V(%s) of dimension %d seeded %d nodes", theta,
                         space.dim, len(nodes))
        return nodes

    def _soundness_belt(self, r, nodes):
        """Spin random vectors of random nodes; every spin must be a node."""
        prng = np.random.default_rng(self.seed)
        candidates = sorted((node for node in nodes if node.dim > 0),
                            key=lambda node: (node.dim, node.basis.rows))
        known = set(nodes)
        for _ in range(self.belt_size):
            node = candidates[int(prng.integers(len(candidates)))]
            coefficients = [int(x) for x in prng.integers(-5, 6, size=node.dim)]
            if not any(coefficients):
                coefficients[0] = 1
            rows = node.basis.rows
            vector = [sum((c * row[k] for c, row in zip(coefficients, rows)), 0)
                      for k in range(r.dim)]
            generated = spin(r, [vector])
            if generated not in known:
                mesg = "random spin found a submodule of dimension {} outside the lattice"
                raise LatticeInvariantError(mesg.format(generated.dim))

    def submodule_lattice(self, h):
        """
        Compute the lattice of Racah submodules of an irreducible DAHA module.

        Parameters
        ----------
        h : HRepLike

        Returns
        -------
        report : LatticeReport

        """
        r = zeta_pullback(h)
        spectrum = t0_spectrum(h)
        eigenspaces = t0_eigenspaces(h, pullback=r)

        nodes = self._closure(self._discover(r, eigenspaces))
        self._soundness_belt(r, nodes)
        nodes = sorted(nodes, key=lambda node: (node.dim, node.basis.rows))
        self._check_invariance(r, nodes)
        logger.debug("lattice of a %d-dimensional module has %d nodes",
                     h.dim, len(nodes))

        edges = self._covering_edges(nodes)
        shape = self._shape(nodes)
        chains = self._maximal_chains(nodes, edges)
        self._check_jordan_holder(nodes, chains)

        subquotients = collections.OrderedDict(
            ((lower, upper), self._tag(r, nodes[lower], nodes[upper]))
            for lower, upper in edges)

        eigen_data = collections.OrderedDict(
            (theta, (eigenspaces[theta].dim, multiplicity))
            for theta, multiplicity in spectrum.items())
        eigen_labels = {index: theta for index, node in enumerate(nodes)
                        for theta, space in eigenspaces.items() if node == space}

        return LatticeReport(nodes, edges, shape, eigen_data, eigen_labels,
                             chains, subquotients)

    def composition_series(self, h):
        """Maximal chains of the lattice with their factor dimensions."""
        return self.submodule_lattice(h).composition_series()

    def is_completely_reducible(self, h):
        """
        Whether the Racah module is a direct sum of irreducibles.

        Returns t0-diagonalizability, cross-checked against the lattice.

        """
        return self.submodule_lattice(h).is_completely_reducible()


_default_engine = LatticeEngine()


def submodule_lattice(h):
    return _default_engine.submodule_lattice(h)


def composition_series(h):
    return _default_engine.composition_series(h)


def is_completely_reducible(h):
    return _default_engine.is_completely_reducible(h)
