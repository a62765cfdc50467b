"""
The odd-dimensional DAHA modules O_d(a, b, c), d even.

@author : davidrpugh

"""
import functools
from fractions import Fraction

from . families import HFamilyLike
from . specs import derived_params


class OddFamily(HFamilyLike):
    """
    Family of (d+1)-dimensional modules O_d(a, b, c) with d even.

    The actions are written on the basis v_0, ..., v_d using sigma, tau,
    lambda, mu and nu (see `derived_params`).

    """

    name = "O"

    @staticmethod
    def criterion_values(a, b, c):
        return (a + b + c, a - b - c, -a + b - c, -a - b + c)

    @staticmethod
    def forbidden_values(d):
        return [Fraction(d + 1, 2) - i for i in range(2, d + 1, 2)]

    @staticmethod
    def central_scalars(spec):
        params = derived_params(spec)
        return tuple((x / 2)**2 for x in (params.sigma, params.lmbda,
                                          params.nu, params.mu))

    @staticmethod
    def twisted_parameters(a, b, c, epsilon):
        """
        Parameters of the O_d isomorphic to O_d(a, b, c) twisted by epsilon.

        The traces of t0, t1, t0v, t1v on O_d(a, b, c) are sigma/2,
        lambda/2, nu/2, mu/2; they determine (a, b, c) and are permuted
        by the twist.

        """
        e1, e2 = epsilon
        return (e1 * a, e2 * b, e1 * e2 * c)

    @classmethod
    def _actions(cls, spec):
        params = derived_params(spec)
        return (functools.partial(cls._t0_action, params.sigma),
                functools.partial(cls._t1_action, spec.d, params),
                functools.partial(cls._t0v_action, spec.d, params),
                functools.partial(cls._t1v_action, spec.d, params))

    @staticmethod
    def _t0_action(sigma, i):
        if i == 0:
            return {0: sigma / 2}
        elif i % 2 == 0:
            return {i - 1: -i * (sigma + i), i: (sigma + 2 * i) / 2}
        else:
            return {i: -(sigma + 2 * i + 2) / 2, i + 1: 1}

    @staticmethod
    def _t1_action(d, params, i):
        sigma, lmbda = params.sigma, params.lmbda
        if d == 0:
            return {0: lmbda / 2}
        elif i == d:
            return {d - 1: d * (sigma + d), d: lmbda / 2}
        elif i == 0:
            return {0: lmbda / 2, 1: 1}
        elif i % 2 == 0:
            return {i - 1: i * (sigma + i), i: lmbda / 2, i + 1: 1}
        else:
            return {i: -lmbda / 2}

    @staticmethod
    def _t0v_action(d, params, i):
        tau, nu = params.tau, params.nu
        if i % 2 == 0:
            return {i: nu / 2}
        else:
            return {i - 1: (d - i + 1) * (tau + i), i: -nu / 2, i + 1: -1}

    @staticmethod
    def _t1v_action(d, params, i):
        tau, mu = params.tau, params.mu
        if i == d:
            return {d: mu / 2}
        elif i % 2 == 0:
            return {i: (2 * d + mu - 2 * i) / 2, i + 1: -1}
        else:
            return {i - 1: (i - d - 1) * (tau + i), i: -(2 * d + mu - 2 * i + 2) / 2}
