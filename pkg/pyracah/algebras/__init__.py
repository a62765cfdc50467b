"""
Objects imported here will live in the `pyracah.algebras` namespace

"""
from . homomorphisms import bi_triple, check_t0_centralizes, zeta_pullback
from . relations import (RelationReport, check_anticommutator_identities,
                         check_bi_relations, check_h_relations,
                         check_racah_relations)
from . representations import HRep, HRepLike, RacahRep, RacahRepLike

__all__ = ["HRep", "HRepLike", "RacahRep", "RacahRepLike", "RelationReport",
           "bi_triple", "check_anticommutator_identities", "check_bi_relations",
           "check_h_relations", "check_racah_relations", "check_t0_centralizes",
           "zeta_pullback"]
