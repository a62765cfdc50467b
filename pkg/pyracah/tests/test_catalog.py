from fractions import Fraction

import pytest

from .. import modules
from .. algebras import check_h_relations
from .. exceptions import SpecError


def test_parse_spec():
    spec = modules.parse_spec("E:d=3,a=2,b=3,c=7,eps=+-")
    assert spec == modules.ModuleSpec("E", 3, 2, 3, 7, (1, -1))

    spec = modules.parse_spec("O:d=2,a=1,b=1,c=-1/2")
    assert spec.c == Fraction(-1, 2)
    assert spec.epsilon == (1, 1)
    assert modules.parse_spec(modules.format_spec(spec)) == spec


@pytest.mark.parametrize("text, message", [
    ("E:d=2,a=1,b=1,c=1", "d must be odd for family E"),
    ("O:d=3,a=1,b=1,c=1", "d must be even for family O"),
    ("R:d=1,a=1,b=1,c=1,eps=+-", "family R cannot be twisted"),
    ("X:d=1,a=1,b=1,c=1", "Unknown family"),
    ("E:d=1,a=1,b=1", "misses"),
    ("E d=1,a=1,b=1,c=1", "Missing ':'"),
    ("E:d=1,a=1,b=1,c=x", "rational"),
])
def test_parse_spec_errors(text, message):
    with pytest.raises(SpecError, match=message):
        modules.parse_spec(text)


def test_build_R():
    r = modules.build_R(2, 1, 1, 1)
    assert r.delta == 8
    assert r.A.rows == ((6, 0, 0), (1, 2, 0), (0, 1, 0))
    assert r.B.rows[0][0] == 6

    r = modules.build_R(1, 1, 1, 1)
    assert r.B[0, 1] == Fraction(-27, 4)

    r = modules.build_R(0, 1, 0, 0)
    assert r.dim == 1


def test_build_E():
    h = modules.build_E(3, 2, 3, 7)
    assert h.dim == 4
    assert check_h_relations(h).ok
    with pytest.raises(SpecError, match="d must be odd"):
        modules.build_E(2, 1, 1, 1)


def test_build_O():
    h = modules.build_O(0, 1, 1, 1)
    assert h.t0.rows == ((Fraction(5, 4),),)
    h = modules.build_O(2, 1, 1, Fraction(-1, 2))
    assert (h.t0 @ h.t0).is_zero()
    assert not h.t0.is_zero()


def test_twist():
    h = modules.build_E(3, 0, 3, 1)
    twisted = modules.twist(h, (1, -1))
    assert twisted.t0 == h.t1 and twisted.t1 == h.t0
    assert twisted.t0v == h.t1v and twisted.t1v == h.t0v
    assert twisted.meta.epsilon == (1, -1)
    assert modules.twist(modules.twist(h, (-1, 1)), (-1, 1)) == h


def test_compose_twists():
    h = modules.build_O(2, 1, 2, 3)
    for first in modules.EPSILONS.values():
        for second in modules.EPSILONS.values():
            composed = modules.compose_twists(first, second)
            assert modules.twist(modules.twist(h, first), second) == modules.twist(h, composed)


def test_irreducibility_criterion():
    assert modules.irreducibility_criterion(modules.module_spec("E", 3, 2, 3, 7))
    assert modules.irreducibility_criterion(modules.module_spec("E", 3, 0, 3, 1, (1, -1)))
    assert not modules.irreducibility_criterion(modules.module_spec("E", 3, 1, 1, 1))
    assert modules.irreducibility_criterion(modules.module_spec("O", 2, 1, 1, Fraction(-1, 2)))
    assert modules.irreducibility_criterion(modules.module_spec("R", 2, 1, 1, 1))
    assert not modules.irreducibility_criterion(modules.module_spec("R", 2, 0, 0, 0))


def test_central_scalars():
    spec = modules.module_spec("E", 3, 2, 3, 7)
    assert modules.central_scalars(spec) == (4, 4, 9, 49)

    spec = modules.module_spec("O", 2, 1, 1, Fraction(-1, 2))
    assert modules.central_scalars(spec) == (0, Fraction(1, 4), Fraction(1, 4), 4)

    spec = modules.module_spec("E", 3, 2, 3, 7, (-1, -1))
    assert modules.central_scalars(spec) == (49, 9, 4, 4)

    with pytest.raises(SpecError):
        modules.central_scalars(modules.module_spec("R", 2, 1, 1, 1))


def test_central_scalars_match_squares():
    for spec in (modules.module_spec("E", 5, Fraction(1, 3), -2, 7, (1, -1)),
                 modules.module_spec("O", 4, Fraction(3, 2), 1, -5, (-1, 1))):
        h = modules.build_module(spec)
        squares = tuple((g @ g).scalar_value() for g in h.generators)
        assert squares == modules.central_scalars(spec)


def test_odd_twisted_parameters():
    assert modules.OddFamily.twisted_parameters(1, 2, 3, (1, -1)) == (1, -2, -3)
    assert modules.OddFamily.twisted_parameters(1, 2, 3, (-1, 1)) == (-1, 2, -3)
    assert modules.OddFamily.twisted_parameters(1, 2, 3, (-1, -1)) == (-1, -2, 3)


def test_derived_params():
    params = modules.derived_params(modules.module_spec("O", 0, 1, 1, 1))
    assert params.sigma == Fraction(5, 2)
    assert params.lmbda == Fraction(-3, 2)
