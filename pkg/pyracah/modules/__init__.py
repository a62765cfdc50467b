"""
Objects imported here will live in the `pyracah.modules` namespace

"""
from . catalog import (build_E, build_O, build_R, build_module, central_scalars,
                       compose_twists, irreducibility_criterion, twist)
from . even import EvenFamily
from . families import FamilyLike, HFamilyLike
from . odd import OddFamily
from . racah import RacahFamily
from . specs import (EPSILONS, DerivedParams, ModuleSpec, derived_params,
                     format_epsilon, format_spec, module_spec, parse_spec)

__all__ = ["DerivedParams", "EPSILONS", "EvenFamily", "FamilyLike",
           "HFamilyLike", "ModuleSpec", "OddFamily", "RacahFamily", "build_E",
           "build_O", "build_R", "build_module", "central_scalars",
           "compose_twists", "derived_params", "format_epsilon", "format_spec",
           "irreducibility_criterion", "module_spec", "parse_spec", "twist"]
