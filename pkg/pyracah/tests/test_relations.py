from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from .. import algebras
from .. linalg import RatMatrix
from .. modules import (EPSILONS, build_E, build_module, build_O, build_R,
                        central_scalars, module_spec, twist)


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=10)
twists = st.sampled_from(list(EPSILONS.values()))


@st.composite
def catalog_specs(draw):
    family = draw(st.sampled_from(["E", "O"]))
    if family == "E":
        d = draw(st.sampled_from([1, 3, 5, 7, 9]))
    else:
        d = draw(st.sampled_from([0, 2, 4, 6, 8]))
    a, b, c = draw(rationals), draw(rationals), draw(rationals)
    return module_spec(family, d, a, b, c, draw(twists))


def test_h_relations_small_modules():
    report = algebras.check_h_relations(build_E(1, 1, 1, 1))
    assert report.ok
    assert report.central_squares == (1, 1, 1, 1)

    report = algebras.check_h_relations(build_O(0, 1, 1, 1))
    assert report.ok
    assert report.central_squares[0] == Fraction(25, 16)


def test_h_relations_detect_corruption():
    h = build_E(1, 1, 1, 1)
    rows = [list(row) for row in h.t1.rows]
    rows[0][0] += 1
    report = algebras.check_h_relations(h.replace(t1=RatMatrix(rows)))
    assert not report.ok
    assert "t0+t1+t0v+t1v+1" in [name for name, _ in report.violations]


def test_zeta_pullback():
    r = algebras.zeta_pullback(build_E(1, 1, 1, 1))
    assert r.A.columns[0] == (Fraction(-1, 4), Fraction(-1, 2))

    r = algebras.zeta_pullback(build_O(0, 1, 1, 1))
    assert r.dim == 1 and r.delta is not None

    r = algebras.zeta_pullback(build_E(3, 2, 3, 7))
    assert r.delta is None
    assert algebras.check_racah_relations(r).ok


def test_pullback_delta_on_scalar_t0():
    h = build_O(0, 1, 1, 1)
    k = central_scalars(module_spec("O", 0, 1, 1, 1))
    t0 = h.t0.scalar_value()
    expected = sum(k) / 4 - t0 / 2 - Fraction(3, 4)
    assert algebras.zeta_pullback(h).delta == expected


def test_racah_relations():
    r = build_R(2, 1, 1, 1)
    assert r.delta == 8
    report = algebras.check_racah_relations(r)
    assert report.ok

    zero = RatMatrix.zeros(3, 3)
    report = algebras.check_racah_relations(algebras.RacahRep(zero, zero, zero))
    assert report.ok
    assert (report.alpha, report.beta, report.gamma) == (0, 0, 0)


def test_bi_triple():
    for h in (build_O(0, 1, 1, 1), build_E(1, 1, 1, 1), build_E(3, 2, 3, 7)):
        X, Y, Z, report = algebras.bi_triple(h)
        assert report.ok
        assert X.shape == (h.dim, h.dim)


def test_t0_centralizes():
    assert algebras.check_t0_centralizes(build_E(3, 2, 3, 7))
    assert algebras.check_t0_centralizes(build_O(2, 1, 1, Fraction(-1, 2)))

    h = build_E(3, 2, 3, 7)
    corrupted = h.replace(t1=RatMatrix([[1, 2, 0, 5], [0, 3, 1, 0],
                                        [7, 0, 0, 1], [0, 0, 4, 2]]))
    assert not algebras.check_t0_centralizes(corrupted)


def test_anticommutator_identities():
    assert algebras.check_anticommutator_identities(build_O(0, 1, 1, 1))
    assert algebras.check_anticommutator_identities(build_E(1, 1, 1, 1))
    assert algebras.check_anticommutator_identities(twist(build_E(3, 0, 3, 1), (1, -1)))


@settings(deadline=None, max_examples=100)
@given(catalog_specs())
def test_catalog_modules_satisfy_relations(spec):
    """Relations hold exactly at every rational parameter point."""
    h = build_module(spec)
    report = algebras.check_h_relations(h)
    assert report.ok, "{}: {}".format(spec, report.violations)
    assert report.central_squares == central_scalars(spec)

    r = algebras.zeta_pullback(h)
    assert algebras.check_racah_relations(r).ok, spec
    assert algebras.bi_triple(h)[3].ok, spec
    assert algebras.check_t0_centralizes(h, r), spec
    assert algebras.check_anticommutator_identities(h), spec


@settings(deadline=None, max_examples=25)
@given(st.integers(min_value=0, max_value=6), rationals, rationals, rationals)
def test_racah_modules_satisfy_relations(d, a, b, c):
    r = build_R(d, a, b, c)
    report = algebras.check_racah_relations(r)
    assert report.ok
    assert r.delta == (Fraction(d, 2) * (Fraction(d, 2) + 1) + a * (a + 1) +
                       b * (b + 1) + c * (c + 1))


@pytest.mark.slow
def test_relations_for_every_degree_and_twist():
    """Seeded triples checked on every admissible d <= 9 of both families."""
    seed = 2468
    prng = np.random.default_rng(seed)
    for _ in range(100):
        a, b, c = (Fraction(int(prng.integers(-50, 51)), int(prng.integers(1, 11)))
                   for _ in range(3))
        for family, degrees in (("E", range(1, 10, 2)), ("O", range(0, 10, 2))):
            for d in degrees:
                for epsilon in EPSILONS.values():
                    spec = module_spec(family, d, a, b, c, epsilon)
                    h = build_module(spec)
                    msg = "Relations failed!\nSeed: {}\nSpec: {}"
                    assert algebras.check_h_relations(h).ok, msg.format(seed, spec)
                    r = algebras.zeta_pullback(h)
                    assert algebras.check_racah_relations(r).ok, msg.format(seed, spec)
