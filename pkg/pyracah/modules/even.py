"""
The even-dimensional DAHA modules E_d(a, b, c), d odd.

@author : davidrpugh

"""
import functools
from fractions import Fraction

from . families import HFamilyLike
from . specs import derived_params


class EvenFamily(HFamilyLike):
    """
    Family of (d+1)-dimensional modules E_d(a, b, c) with d odd.

    The actions are written on the basis v_0, ..., v_d using
    sigma = a+b+c-(d+1)/2 and tau = a+b-c-(d+1)/2.

    """

    name = "E"

    @staticmethod
    def criterion_values(a, b, c):
        return (a + b + c, -a + b + c, a - b + c, a + b - c)

    @staticmethod
    def forbidden_values(d):
        return [Fraction(d - 1, 2) - i for i in range(0, d, 2)]

    @staticmethod
    def central_scalars(spec):
        return (Fraction(spec.d + 1, 2)**2, spec.a**2, spec.b**2, spec.c**2)

    @classmethod
    def _actions(cls, spec):
        params = derived_params(spec)
        return (functools.partial(cls._t0_action, spec.d),
                functools.partial(cls._t1_action, spec.d, spec.a),
                functools.partial(cls._t0v_action, spec.d, spec.b, params),
                functools.partial(cls._t1v_action, params))

    @staticmethod
    def _t0_action(d, i):
        if i == 0 or i == d:
            return {i: -Fraction(d + 1, 2)}
        elif i % 2 == 0:
            return {i - 1: i * (d - i + 1), i: -Fraction(d - 2 * i + 1, 2)}
        else:
            return {i: Fraction(d - 2 * i - 1, 2), i + 1: 1}

    @staticmethod
    def _t1_action(d, a, i):
        if i == 0:
            return {0: a, 1: 1}
        elif i % 2 == 0:
            return {i - 1: i * (i - d - 1), i: a, i + 1: 1}
        else:
            return {i: -a}

    @staticmethod
    def _t0v_action(d, b, params, i):
        sigma, tau = params.sigma, params.tau
        if i % 2 == 0:
            return {i: b}
        elif i == d:
            return {d - 1: -(sigma + d) * (tau + d), d: -b}
        else:
            return {i - 1: -(sigma + i) * (tau + i), i: -b, i + 1: -1}

    @staticmethod
    def _t1v_action(params, i):
        sigma, tau = params.sigma, params.tau
        if i % 2 == 0:
            return {i: -(sigma + tau + 2 * i + 2) / 2, i + 1: -1}
        else:
            return {i - 1: (sigma + i) * (tau + i), i: (sigma + tau + 2 * i) / 2}
