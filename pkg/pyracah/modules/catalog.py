"""
Constructors for the catalog of modules, twisting, irreducibility criteria
and central scalars.

@author : davidrpugh

"""
from .. algebras import HRep
from .. exceptions import SpecError
from . even import EvenFamily
from . odd import OddFamily
from . racah import RacahFamily


FAMILY_CLASSES = {"R": RacahFamily, "E": EvenFamily, "O": OddFamily}

# index of the generator of the original module acting as (t0, t1, t0v, t1v)
TWIST_PERMUTATIONS = {(1, 1): (0, 1, 2, 3),
                      (1, -1): (1, 0, 3, 2),
                      (-1, 1): (2, 3, 0, 1),
                      (-1, -1): (3, 2, 1, 0)}


def build_R(d, a, b, c):
    """Racah module R_d(a, b, c) with C = delta - A - B."""
    return RacahFamily.build(d, a, b, c)


def build_E(d, a, b, c):
    """DAHA module E_d(a, b, c); d must be odd."""
    return EvenFamily.build(d, a, b, c)


def build_O(d, a, b, c):
    """DAHA module O_d(a, b, c); d must be even."""
    return OddFamily.build(d, a, b, c)


def build_module(spec):
    """
    Build the module described by a ModuleSpec, twist included.

    Returns
    -------
    module : HRep or RacahRep

    """
    module = FAMILY_CLASSES[spec.family].build(spec.d, spec.a, spec.b, spec.c)
    if spec.family == "R":
        return module
    return twist(module, spec.epsilon)


def compose_twists(epsilon, other):
    """Product in the Klein four group {+1, -1}^2."""
    return (epsilon[0] * other[0], epsilon[1] * other[1])


def twist(h, epsilon):
    """
    Twist a DAHA module by an element of {+1, -1}^2.

    The twisted module lets each generator x act as epsilon(x) acted on
    the original module, so twisting only permutes the four matrices.

    Parameters
    ----------
    h : HRepLike
    epsilon : tuple(int, int)

    Returns
    -------
    twisted : HRep

    """
    epsilon = tuple(epsilon)
    if epsilon not in TWIST_PERMUTATIONS:
        mesg = "epsilon must be one of {}, got {!r}."
        raise SpecError(mesg.format(sorted(TWIST_PERMUTATIONS), epsilon))
    generators = h.generators
    permuted = [generators[k] for k in TWIST_PERMUTATIONS[epsilon]]
    meta = h.meta
    if meta is not None:
        meta = meta._replace(epsilon=compose_twists(meta.epsilon, epsilon))
    return HRep(*permuted, meta=meta)


def irreducibility_criterion(spec):
    """
    Whether the module described by `spec` is irreducible.

    Twisting permutes the generators, so the criterion ignores epsilon.

    """
    family = FAMILY_CLASSES[spec.family]
    return family.is_irreducible(spec.d, spec.a, spec.b, spec.c)


def central_scalars(spec):
    """
    Scalars (k0, k1, k0v, k1v) by which the squares of the generators act.

    Parameters
    ----------
    spec : ModuleSpec
        Family E or O.

    Returns
    -------
    scalars : tuple(Fraction)
        Permuted according to the twist of `spec`.

    """
    if spec.family == "R":
        raise SpecError("central scalars are only defined for families E and O")
    base = FAMILY_CLASSES[spec.family].central_scalars(spec)
    return tuple(base[k] for k in TWIST_PERMUTATIONS[spec.epsilon])
