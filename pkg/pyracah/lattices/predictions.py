"""
Lattices of Racah submodules predicted by the classification theorems, and
their comparison with computed lattices.

@author : davidrpugh

"""
import collections
from fractions import Fraction

from .. exceptions import LatticeInvariantError, ReducibleModuleError, SpecError
from .. modules import OddFamily, derived_params, irreducibility_criterion, module_spec
from . classification import canonical_tag


PredictedLattice = collections.namedtuple(
    'PredictedLattice',
    ['shape', 'node_dims', 'edge_dims', 'eigen_data', 'subquotients'])


def _tag(d, a, b, c):
    tag = canonical_tag(d, a, b, c)
    if not tag.verified:
        mesg = "R_{}({}, {}, {}) has no verified normal form"
        raise LatticeInvariantError(mesg.format(d, a, b, c))
    return (tag.d_prime, tag.a_prime, tag.b_prime, tag.c_prime)


def _diamond(first, second, eigen_data):
    """Two complementary middles given as (dim, tag) pairs."""
    (m1, tag1), (m2, tag2) = first, second
    total = m1 + m2
    subquotients = [(0, m1) + tag1, (0, m2) + tag2,
                    (m1, total) + tag2, (m2, total) + tag1]
    return PredictedLattice("diamond", sorted([0, m1, m2, total]),
                            sorted([(0, m1), (0, m2), (m1, total), (m2, total)]),
                            eigen_data, sorted(subquotients))


def _chain(dims, tags, eigen_data):
    shape = {2: "simple", 3: "chain3", 4: "chain4"}[len(dims)]
    edges = list(zip(dims, dims[1:]))
    subquotients = [edge + tag for edge, tag in zip(edges, tags)]
    return PredictedLattice(shape, list(dims), edges, eigen_data, sorted(subquotients))


def _eigen_data(*items):
    return collections.OrderedDict(sorted(items))


def _predict_even(spec):
    d, a, b, c = spec.d, spec.a, spec.b, spec.c
    half = Fraction(1, 2)
    if spec.epsilon == (1, 1):
        p = (-(a + 1) * half, -(b + 1) * half, -(c + 1) * half)
        theta = Fraction(d + 1, 2)
        if d == 1:
            return _chain([0, 2], [_tag(1, *p)], _eigen_data((-theta, (2, 2))))
        low, high = (d - 1) // 2, (d + 3) // 2
        eigen_data = _eigen_data((-theta, (high, high)), (theta, (low, low)))
        return _diamond((high, _tag((d + 1) // 2, *p)),
                        (low, _tag((d - 3) // 2, *p)), eigen_data)

    # the twist decides which parameter is halved and which eigenvalue of
    # t0 carries the submodule
    params = [-(a + 1) * half, -(b + 1) * half, -(c + 1) * half]
    index, theta = {(1, -1): (0, -a), (-1, 1): (1, b), (-1, -1): (2, c)}[spec.epsilon]
    value = (a, b, c)[index]
    sub_params, quotient_params = list(params), list(params)
    if spec.epsilon == (1, -1):
        sub_params[0], quotient_params[0] = -a * half - 1, -a * half
    else:
        sub_params[index], quotient_params[index] = -value * half, -value * half - 1
    m = (d + 1) // 2
    sub, quotient = _tag(m - 1, *sub_params), _tag(m - 1, *quotient_params)
    if value == 0:
        return _chain([0, m, d + 1], [sub, quotient], _eigen_data((0, (m, d + 1))))
    eigen_data = _eigen_data((theta, (m, m)), (-theta, (m, m)))
    return _diamond((m, sub), (m, quotient), eigen_data)


def _predict_odd(spec):
    d = spec.d
    a, b, c = OddFamily.twisted_parameters(spec.a, spec.b, spec.c, spec.epsilon)
    sigma = derived_params(module_spec("O", d, a, b, c)).sigma
    quarter = Fraction(1, 4)
    if d == 0:
        tag = _tag(0, -a / 2 - quarter, -b / 2 - quarter, -c / 2 - quarter)
        return _chain([0, 1], [tag], _eigen_data((sigma / 2, (1, 1))))
    m = d // 2
    quotient = _tag(m - 1, -a / 2 - 3 * quarter, -b / 2 - 3 * quarter,
                    -c / 2 - 3 * quarter)
    if sigma == 0:
        middle = _tag(0, -(b + c + 1) / 2, -(c + a + 1) / 2, -(a + b + 1) / 2)
        return _chain([0, m, m + 1, d + 1], [quotient, middle, quotient],
                      _eigen_data((0, (m + 1, d + 1))))
    sub = _tag(m, -a / 2 - quarter, -b / 2 - quarter, -c / 2 - quarter)
    eigen_data = _eigen_data((sigma / 2, (m + 1, m + 1)), (-sigma / 2, (m, m)))
    return _diamond((m + 1, sub), (m, quotient), eigen_data)


def predicted_lattice(spec):
    """
    Lattice of Racah submodules of an irreducible E_d or O_d module.

    Parameters
    ----------
    spec : ModuleSpec
        Family E or O; twisted modules are supported.

    Returns
    -------
    predicted : PredictedLattice
        Subquotient tags are in the normal form of `canonical_tag`.

    Raises
    ------
    ReducibleModuleError
        If `spec` fails the irreducibility criterion.

    """
    if spec.family == "E":
        predict = _predict_even
    elif spec.family == "O":
        predict = _predict_odd
    else:
        raise SpecError("lattice predictions require family E or O")
    if not irreducibility_criterion(spec):
        mesg = "module {}:d={} with (a, b, c) = ({}, {}, {}) is reducible"
        raise ReducibleModuleError(mesg.format(spec.family, spec.d, spec.a,
                                               spec.b, spec.c))
    return predict(spec)


def lattice_signature(report):
    """
    Skeleton of a computed lattice in the form of a PredictedLattice.

    Unverified subquotient tags are left out; see `compare_lattices`.

    """
    dims = report.node_dims
    edge_dims = sorted((dims[lower], dims[upper]) for lower, upper in report.hasse_edges)
    subquotients = sorted(
        (dims[lower], dims[upper], tag.d_prime, tag.a_prime, tag.b_prime, tag.c_prime)
        for (lower, upper), tag in report.subquotients.items() if tag.verified)
    return PredictedLattice(report.shape, dims, edge_dims,
                            collections.OrderedDict(report.eigen_data), subquotients)


def compare_lattices(report, predicted):
    """
    Differences between a computed lattice and a prediction.

    Returns
    -------
    mismatches : list(str)
        Empty iff shape, node dimensions, edges, eigen data and verified
        subquotient tags agree and every computed tag is verified.

    """
    signature = lattice_signature(report)
    mismatches = []
    for field in ('shape', 'node_dims', 'edge_dims', 'subquotients'):
        computed, expected = getattr(signature, field), getattr(predicted, field)
        if computed != expected:
            mismatches.append("{}: computed {} but predicted {}".format(
                field, computed, expected))
    if dict(signature.eigen_data) != dict(predicted.eigen_data):
        mismatches.append("eigen_data: computed {} but predicted {}".format(
            dict(signature.eigen_data), dict(predicted.eigen_data)))
    for (lower, upper), tag in report.subquotients.items():
        if not tag.verified:
            mismatches.append("subquotient {}/{} unverified: {}".format(
                upper, lower, tag.note))
    return mismatches
