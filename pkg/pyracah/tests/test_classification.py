import collections
from fractions import Fraction

from hypothesis import assume, given, settings, strategies as st

from . import models
from .. import lattices
from .. algebras import zeta_pullback
from .. lattices.classification import MAX_COMBINATION_DIM
from .. linalg import RatMatrix, Subspace, kernel
from .. modules import RacahFamily, build_E, build_O, build_R


def _classify(h, lower, upper):
    r = zeta_pullback(h)
    Aq, Bq, Cq = lattices.subquotient_action(r, lower, upper)
    delta = (Aq + Bq + Cq).scalar_value()
    assert delta is not None
    return lattices.classify_R_subquotient(Aq, Bq, delta)


def test_even_low_eigenspace():
    """V(-2) of E_3(2, 3, 7) is R_2(-3/2, -2, -4)."""
    tag = _classify(build_E(3, 2, 3, 7), Subspace.zero(4), models.even_low_eigenspace(3))
    assert tag.verified
    assert (tag.d_prime, tag.a_prime, tag.b_prime, tag.c_prime) == (
        2, Fraction(-3, 2), -2, -4)


def test_odd_zero_prime():
    """O_2(1, 1, -1/2)(0)' is R_0(-5/4, -5/4, -1/2)."""
    h = build_O(2, 1, 1, Fraction(-1, 2))
    tag = _classify(h, Subspace.zero(3), models.odd_zero_prime(2))
    assert tag.verified
    assert (tag.d_prime, tag.a_prime, tag.b_prime, tag.c_prime) == (
        0, Fraction(-5, 4), Fraction(-5, 4), Fraction(-1, 2))


def test_odd_zero_quotient():
    """O_d(0)/O_d(0)' is R_0(-(b+c+1)/2, -(c+a+1)/2, -(a+b+1)/2)."""
    a, b, c = 1, 1, Fraction(-1, 2)
    h = build_O(2, a, b, c)
    tag = _classify(h, models.odd_zero_prime(2), models.odd_sigma_eigenspace(2))
    expected = lattices.canonical_tag(0, -(b + c + 1) / Fraction(2),
                                      -(c + a + 1) / Fraction(2),
                                      -(a + b + 1) / Fraction(2))
    assert tag.verified and tag == expected


def test_round_trip():
    r = build_R(2, 1, 1, 1)
    tag = lattices.classify_R_subquotient(r.A, r.B, r.delta)
    assert tag.verified and tag.d_prime == 2
    assert RacahFamily.delta(2, tag.a_prime, tag.b_prime, tag.c_prime) == 8
    assert lattices.canonical_tag(2, tag.a_prime, tag.b_prime, tag.c_prime) == tag


def test_unverified_tag():
    # spectrum of A matches no R_1 ladder
    A = RatMatrix([[0, 0], [0, 5]])
    B = RatMatrix([[0, 1], [0, 0]])
    tag = lattices.classify_R_subquotient(A, B, 0)
    assert not tag.verified
    assert tag.note


def test_verify_ladder_rejects_wrong_parameters():
    r = build_R(1, 2, 3, 4)
    assert lattices.verify_ladder(r.A, r.B, 1, 2, 3, 4)
    assert not lattices.verify_ladder(r.A, r.B, 1, 2, 3, 5)


@settings(deadline=None, max_examples=20)
@given(st.integers(min_value=0, max_value=4),
       st.fractions(min_value=-10, max_value=10, max_denominator=4),
       st.fractions(min_value=-10, max_value=10, max_denominator=4),
       st.fractions(min_value=-10, max_value=10, max_denominator=4))
def test_normal_form_is_idempotent(d, a, b, c):
    assume(RacahFamily.is_irreducible(d, a, b, c))
    tag = lattices.canonical_tag(d, a, b, c)
    assert tag.verified
    assert lattices.canonical_tag(d, tag.a_prime, tag.b_prime, tag.c_prime) == tag


@settings(deadline=None, max_examples=30)
@given(st.integers(min_value=0, max_value=9),
       st.fractions(min_value=-10, max_value=10, max_denominator=6))
def test_ladder_spectra_repeat_at_most_twice(d, p):
    """Start spaces never outgrow the combination search."""
    values = collections.Counter(RacahFamily.theta(d, p, i) for i in range(d + 1))
    assert max(values.values()) <= 2
    r = build_R(d, p, p, 0)
    theta_star_0 = RacahFamily.theta(d, p, 0)
    assert kernel(r.B.shift(-theta_star_0)).dim <= MAX_COMBINATION_DIM
