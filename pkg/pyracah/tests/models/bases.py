"""
Explicit bases of the Racah submodules appearing in the classification of
the E_d and O_d modules, written in the catalog basis v_0, ..., v_d.

"""
from ... linalg import Subspace


def unit(d, i):
    """The catalog basis vector v_i of a (d+1)-dimensional module."""
    return [1 if k == i else 0 for k in range(d + 1)]


def ladder_difference(d, i):
    """v_i - i v_{i-1}."""
    vector = unit(d, i)
    vector[i - 1] = -i
    return vector


def even_low_eigenspace(d):
    """V(-(d+1)/2) of E_d(a, b, c): v_0, v_d and v_i - i v_{i-1} for even i."""
    vectors = [unit(d, 0), unit(d, d)]
    vectors += [ladder_difference(d, i) for i in range(2, d, 2)]
    return Subspace(d + 1, vectors)


def odd_sigma_eigenspace(d):
    """V(sigma/2) of O_d(a, b, c): v_0 and v_i - i v_{i-1} for even i."""
    vectors = [unit(d, 0)] + [ladder_difference(d, i) for i in range(2, d + 1, 2)]
    return Subspace(d + 1, vectors)


def odd_zero_prime(d):
    """O_d(a, b, c)(0)' when a + b + c = (d+1)/2."""
    return Subspace(d + 1, [ladder_difference(d, i) for i in range(2, d + 1, 2)])


def parity_span(d, parity):
    """Span of the v_i with i of the given parity."""
    return Subspace(d + 1, [unit(d, i) for i in range(parity, d + 1, 2)])


def tail_span(d, start):
    """Span of v_start, ..., v_d."""
    return Subspace(d + 1, [unit(d, i) for i in range(start, d + 1)])
