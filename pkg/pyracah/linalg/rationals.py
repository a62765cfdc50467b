"""
Helpers for exact rational scalars.

@author : davidrpugh

"""
import math
from fractions import Fraction
import numbers

from sympy import QQ


def to_rational(value):
    """
    Coerce a value to an exact rational.

    Parameters
    ----------
    value : int, Fraction or str
        Strings may take the form "p", "p/q" or a finite decimal.

    Returns
    -------
    rational : Fraction

    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        mesg = "Booleans are not rationals: {}"
        raise ValueError(mesg.format(value))
    if isinstance(value, numbers.Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            mesg = "Could not parse '{}' as a rational number."
            raise ValueError(mesg.format(value))
    mesg = "Expected an exact rational, got {!r}."
    raise ValueError(mesg.format(value))


def format_rational(value):
    """Canonical string form: "p/q" in lowest terms, or "p" when q == 1."""
    return str(to_rational(value))


def rational_sqrt(value):
    """Exact square root of a non-negative rational, or None."""
    value = to_rational(value)
    if value < 0:
        return None
    num_root = math.isqrt(value.numerator)
    den_root = math.isqrt(value.denominator)
    if num_root**2 != value.numerator or den_root**2 != value.denominator:
        return None
    return Fraction(num_root, den_root)


def common_denominator(values):
    """Least common multiple of the denominators of some rationals."""
    scale = 1
    for value in values:
        scale = scale * value.denominator // math.gcd(scale, value.denominator)
    return scale


def to_qq(value):
    """Element of sympy's rational field QQ equal to `value`."""
    value = to_rational(value)
    return QQ(value.numerator, value.denominator)


def from_qq(element):
    """Fraction equal to an element of QQ."""
    return Fraction(int(QQ.numer(element)), int(QQ.denom(element)))
