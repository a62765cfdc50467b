"""
Module specifications and the parameters derived from them.

A specification string looks like "E:d=3,a=2,b=3,c=7,eps=+-".

@author : davidrpugh

"""
import collections
from fractions import Fraction

from .. exceptions import SpecError
from .. linalg import format_rational, to_rational


FAMILIES = ("R", "E", "O")

EPSILONS = collections.OrderedDict([("++", (1, 1)), ("+-", (1, -1)),
                                    ("-+", (-1, 1)), ("--", (-1, -1))])

ModuleSpec = collections.namedtuple('ModuleSpec',
                                    ['family', 'd', 'a', 'b', 'c', 'epsilon'])

DerivedParams = collections.namedtuple('DerivedParams',
                                       ['sigma', 'tau', 'lmbda', 'mu', 'nu', 'rho'])


def module_spec(family, d, a, b, c, epsilon=(1, 1)):
    """
    Create a validated ModuleSpec.

    Parameters
    ----------
    family : str
        One of "R", "E", "O".
    d : int
        Non-negative; odd for family E and even for family O.
    a, b, c : int, Fraction or str
    epsilon : tuple(int, int), optional(default=(1, 1))
        Twist; must be (1, 1) for family R.

    Returns
    -------
    spec : ModuleSpec

    """
    if family not in FAMILIES:
        mesg = "Unknown family '{}'; expected one of {}."
        raise SpecError(mesg.format(family, ", ".join(FAMILIES)))
    if isinstance(d, bool) or int(d) != d or d < 0:
        mesg = "d must be a non-negative integer, got {!r}."
        raise SpecError(mesg.format(d))
    d = int(d)
    if family == "E" and d % 2 == 0:
        raise SpecError("d must be odd for family E")
    if family == "O" and d % 2 == 1:
        raise SpecError("d must be even for family O")
    epsilon = tuple(epsilon)
    if epsilon not in EPSILONS.values():
        mesg = "epsilon must be one of {}, got {!r}."
        raise SpecError(mesg.format(list(EPSILONS.values()), epsilon))
    if family == "R" and epsilon != (1, 1):
        raise SpecError("family R cannot be twisted")
    try:
        a, b, c = (to_rational(x) for x in (a, b, c))
    except ValueError as err:
        raise SpecError(str(err))
    return ModuleSpec(family, d, a, b, c, epsilon)


def parse_spec(text):
    """
    Parse a specification string.

    Parameters
    ----------
    text : str
        "F:d=...,a=...,b=...,c=...[,eps=..]" with F in {R, E, O} and eps in
        {++, +-, -+, --}.

    Returns
    -------
    spec : ModuleSpec

    """
    family, sep, body = text.strip().partition(":")
    if not sep:
        mesg = "Missing ':' in module specification '{}'."
        raise SpecError(mesg.format(text))
    fields = {}
    for item in body.split(","):
        key, sep, value = item.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key or not value:
            mesg = "Malformed field '{}' in module specification '{}'."
            raise SpecError(mesg.format(item, text))
        if key in fields:
            mesg = "Duplicate field '{}' in module specification '{}'."
            raise SpecError(mesg.format(key, text))
        fields[key] = value
    unknown = set(fields) - {"d", "a", "b", "c", "eps"}
    missing = {"d", "a", "b", "c"} - set(fields)
    if unknown or missing:
        mesg = "Module specification '{}' has unknown fields {} and misses {}."
        raise SpecError(mesg.format(text, sorted(unknown), sorted(missing)))
    try:
        d = int(fields["d"])
    except ValueError:
        mesg = "d must be an integer, got '{}'."
        raise SpecError(mesg.format(fields["d"]))
    eps = fields.get("eps", "++")
    if eps not in EPSILONS:
        mesg = "eps must be one of {}, got '{}'."
        raise SpecError(mesg.format(", ".join(EPSILONS), eps))
    return module_spec(family.strip(), d, fields["a"], fields["b"], fields["c"],
                       EPSILONS[eps])


def format_epsilon(epsilon):
    return "".join("+" if e == 1 else "-" for e in epsilon)


def format_spec(spec):
    """Inverse of `parse_spec`."""
    text = "{}:d={},a={},b={},c={}".format(spec.family, spec.d,
                                           format_rational(spec.a),
                                           format_rational(spec.b),
                                           format_rational(spec.c))
    if spec.family != "R":
        text += ",eps=" + format_epsilon(spec.epsilon)
    return text


def derived_params(spec):
    """
    Auxiliary parameters used by the E and O constructions.

    Returns
    -------
    params : DerivedParams
        sigma, tau, lmbda, mu, nu and rho, a dict from odd i in 1..d to
        c^2 - (a + b - (d+1)/2 + i)^2.

    """
    d, a, b, c = spec.d, spec.a, spec.b, spec.c
    shift = Fraction(d + 1, 2)
    rho = {i: c**2 - (a + b - shift + i)**2 for i in range(1, d + 1, 2)}
    return DerivedParams(sigma=a + b + c - shift, tau=a + b - c - shift,
                         lmbda=a - b - c - shift, mu=c - a - b - shift,
                         nu=b - a - c - shift, rho=rho)
