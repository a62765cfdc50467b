"""
The modules R_d(a, b, c) of the universal Racah algebra.

@author : davidrpugh

"""
from fractions import Fraction

from .. algebras import RacahRep
from .. linalg import RatMatrix
from . families import FamilyLike


class RacahFamily(FamilyLike):
    """
    Family of (d+1)-dimensional Racah modules R_d(a, b, c).

    In the basis u_0, ..., u_d, A is lower bidiagonal and B upper
    bidiagonal:

        A u_i = theta_i u_i + u_{i+1},
        B u_i = theta*_i u_i + phi_i u_{i-1},

    and A + B + C acts as the scalar delta.

    """

    name = "R"

    @staticmethod
    def theta(d, a, i):
        """Diagonal of A; also of B with b in place of a."""
        x = a + Fraction(d, 2) - i
        return x * (x + 1)

    @staticmethod
    def phi(d, a, b, c, i):
        half = Fraction(d, 2)
        return i * (i - d - 1) * (a + b + c + half - i + 2) * (a + b - c + half - i + 1)

    @staticmethod
    def delta(d, a, b, c):
        half = Fraction(d, 2)
        return half * (half + 1) + a * (a + 1) + b * (b + 1) + c * (c + 1)

    @classmethod
    def ladder(cls, d, a, b, c):
        """
        Ladder data of R_d(a, b, c).

        Returns
        -------
        thetas, theta_stars, phis : list(Fraction)
            phis[0] is zero and never used.

        """
        a, b, c = (Fraction(x) for x in (a, b, c))
        thetas = [cls.theta(d, a, i) for i in range(d + 1)]
        theta_stars = [cls.theta(d, b, i) for i in range(d + 1)]
        phis = [cls.phi(d, a, b, c, i) for i in range(d + 1)]
        return thetas, theta_stars, phis

    @classmethod
    def build(cls, d, a, b, c):
        spec = cls.spec(d, a, b, c)
        d, a, b, c = spec.d, spec.a, spec.b, spec.c
        thetas, theta_stars, phis = cls.ladder(d, a, b, c)
        n = d + 1
        A = RatMatrix([[thetas[i] if i == j else (1 if i == j + 1 else 0)
                        for j in range(n)] for i in range(n)], n)
        B = RatMatrix([[theta_stars[i] if i == j else (phis[j] if j == i + 1 else 0)
                        for j in range(n)] for i in range(n)], n)
        delta = cls.delta(d, a, b, c)
        C = (A + B).shift(-delta) * -1
        return RacahRep(A, B, C, delta=delta, meta=spec)

    @staticmethod
    def criterion_values(a, b, c):
        return (a + b + c + 1, -a + b + c, a - b + c, a + b - c)

    @staticmethod
    def forbidden_values(d):
        return [Fraction(d, 2) - i for i in range(1, d + 1)]
