from fractions import Fraction

import numpy as np
import pytest

from . import models
from .. import lattices
from .. algebras import zeta_pullback
from .. exceptions import ReducibleModuleError
from .. linalg import Subspace
from .. modules import build_E, build_module, build_O, module_spec
from .. sweeps import sample_spec, sweep_config

e3 = build_E(3, 2, 3, 7)
o2 = build_O(2, 1, 1, Fraction(-1, 2))
e3_twisted = build_module(module_spec("E", 3, 0, 3, 1, (1, -1)))


def test_t0_eigenspaces():
    eigenspaces = lattices.t0_eigenspaces(e3)
    assert {theta: space.dim for theta, space in eigenspaces.items()} == {-2: 3, 2: 1}
    assert eigenspaces[-2] == models.even_low_eigenspace(3)

    eigenspaces = lattices.t0_eigenspaces(o2)
    assert {theta: space.dim for theta, space in eigenspaces.items()} == {0: 2}
    assert eigenspaces[0] == models.odd_sigma_eigenspace(2)

    eigenspaces = lattices.t0_eigenspaces(build_E(1, 1, 1, 1))
    assert list(eigenspaces) == [-1]
    assert eigenspaces[-1] == Subspace.full(2)


def test_spin():
    r = zeta_pullback(e3)
    assert lattices.spin(r, [[0, 0, 0, 0]]).dim == 0

    high = lattices.t0_eigenspaces(e3)[2]
    assert lattices.spin(r, high.basis.rows) == high

    low = lattices.spin(r, [models.unit(3, 0)])
    assert low == models.even_low_eigenspace(3)


def test_spin_is_minimal():
    r = zeta_pullback(o2)
    report = lattices.submodule_lattice(o2)
    vector = models.ladder_difference(2, 2)
    generated = lattices.spin(r, [vector])
    assert vector in generated
    for matrix in (r.A, r.B, r.C):
        assert generated.is_invariant(matrix)
    for node in report.nodes:
        if vector in node:
            assert node.contains(generated)


def test_diamond_lattice():
    report = lattices.submodule_lattice(e3)
    assert report.shape == "diamond"
    assert report.node_dims == [0, 1, 3, 4]
    assert report.hasse_edges == [(0, 1), (0, 2), (1, 3), (2, 3)]
    assert report.t0_diagonalizable
    assert report.eigen_data == {-2: (3, 3), 2: (1, 1)}
    assert report.eigen_labels == {1: 2, 2: -2}


def test_chain3_lattice():
    report = lattices.submodule_lattice(e3_twisted)
    assert report.shape == "chain3"
    assert report.node_dims == [0, 2, 4]
    assert report.nodes[1] == models.parity_span(3, 1)
    assert not report.t0_diagonalizable


def test_chain4_lattice():
    report = lattices.submodule_lattice(o2)
    assert report.shape == "chain4"
    assert report.node_dims == [0, 1, 2, 3]
    assert report.nodes[1] == models.odd_zero_prime(2)
    assert report.nodes[2] == models.odd_sigma_eigenspace(2)
    assert report.eigen_data == {0: (2, 3)}


def test_composition_series():
    series = lattices.composition_series(e3)
    assert len(series) == 2
    assert all(s.factor_dims == (1, 3) for s in series)

    series = lattices.composition_series(o2)
    assert len(series) == 1
    assert series[0].factor_dims == (1, 1, 1)

    series = lattices.composition_series(build_E(1, 1, 1, 1))
    assert len(series) == 1
    assert series[0].factor_dims == (2,)


def test_is_completely_reducible():
    assert lattices.is_completely_reducible(e3)
    assert not lattices.is_completely_reducible(o2)
    assert lattices.is_completely_reducible(build_O(0, 1, 1, 1))


def test_predicted_lattice():
    predicted = lattices.predicted_lattice(module_spec("E", 3, 2, 3, 7))
    assert predicted.shape == "diamond"
    assert predicted.node_dims == [0, 1, 3, 4]

    predicted = lattices.predicted_lattice(module_spec("E", 3, 0, 3, 1, (1, -1)))
    assert predicted.shape == "chain3"
    assert predicted.node_dims == [0, 2, 4]

    predicted = lattices.predicted_lattice(module_spec("O", 2, 1, 1, Fraction(-1, 2)))
    assert predicted.shape == "chain4"
    assert predicted.node_dims == [0, 1, 2, 3]

    with pytest.raises(ReducibleModuleError):
        lattices.predicted_lattice(module_spec("E", 3, 1, 1, 1))


@pytest.mark.parametrize("h, spec", [
    (e3, module_spec("E", 3, 2, 3, 7)),
    (e3_twisted, module_spec("E", 3, 0, 3, 1, (1, -1))),
    (o2, module_spec("O", 2, 1, 1, Fraction(-1, 2))),
])
def test_examples_match_predictions(h, spec):
    report = lattices.submodule_lattice(h)
    assert lattices.compare_lattices(report, lattices.predicted_lattice(spec)) == []


def _branch_specs(prng, config, count, sigma_zero_ds=None, **kwargs):
    specs = []
    for i in range(count):
        if sigma_zero_ds is not None:
            d = sigma_zero_ds[i % len(sigma_zero_ds)]
            kwargs.update(d=d, constraint=_sigma_zero(d))
        specs.append(sample_spec(prng, config, **kwargs))
    return specs


def _zero_parameter(index):
    def constraint(*params):
        params = list(params)
        params[index] = Fraction(0)
        return tuple(params)
    return constraint


def _sigma_zero(d):
    def constraint(a, b, c):
        return a, b, Fraction(d + 1, 2) - a - b
    return constraint


BRANCHES = [
    ("E d=1", dict(family="E", d=1, epsilon=(1, 1))),
    ("E generic", dict(family="E", epsilon=(1, 1))),
    ("E +- a=0", dict(family="E", epsilon=(1, -1), constraint=_zero_parameter(0))),
    ("E -+ b=0", dict(family="E", epsilon=(-1, 1), constraint=_zero_parameter(1))),
    ("E -- c=0", dict(family="E", epsilon=(-1, -1), constraint=_zero_parameter(2))),
    ("E +- generic", dict(family="E", epsilon=(1, -1))),
    ("E -+ generic", dict(family="E", epsilon=(-1, 1))),
    ("E -- generic", dict(family="E", epsilon=(-1, -1))),
    ("O d=0", dict(family="O", d=0)),
    ("O sigma=0", dict(family="O", epsilon=(1, 1), sigma_zero_ds=(2, 4, 6, 8))),
    ("O generic", dict(family="O")),
]


@pytest.mark.slow
@pytest.mark.parametrize("name, kwargs", BRANCHES, ids=[name for name, _ in BRANCHES])
def test_sampled_branches_match_predictions(name, kwargs):
    """Computed lattices agree with the classification at random points."""
    seed = 20240517
    prng = np.random.default_rng(seed)
    config = sweep_config(d_max=9, seed=seed)
    specs = _branch_specs(prng, config, 20, **kwargs)
    assert None not in specs, "Branch {} could not be sampled".format(name)
    for spec in specs:
        report = lattices.submodule_lattice(build_module(spec))
        mismatches = lattices.compare_lattices(report, lattices.predicted_lattice(spec))
        msg = "Branch {} failed!\nSeed: {}\nSpec: {}\n{}"
        assert mismatches == [], msg.format(name, seed, spec, mismatches)
        split = report.shape in ("simple", "diamond")
        assert report.is_completely_reducible() == report.t0_diagonalizable == split
