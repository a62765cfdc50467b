"""
Objects imported here will live in the `pyracah.lattices` namespace

"""
from . classification import (canonical_tag, classify_R_subquotient,
                              subquotient_action, verify_ladder)
from . eigenspaces import t0_eigenspaces, t0_spectrum
from . engine import (LatticeEngine, composition_series, is_completely_reducible,
                      submodule_lattice)
from . predictions import (PredictedLattice, compare_lattices, lattice_signature,
                           predicted_lattice)
from . reports import (CompositionSeries, LatticeReport, LatticeReportLike,
                       SubquotientTag)
from . spinning import (eigenvector_spins, find_invariant_subspace, h_spin, lift,
                        restrict, spin, spin_under)

__all__ = ["CompositionSeries", "LatticeEngine", "LatticeReport",
           "LatticeReportLike", "PredictedLattice", "SubquotientTag",
           "canonical_tag", "classify_R_subquotient", "compare_lattices",
           "composition_series", "eigenvector_spins", "find_invariant_subspace",
           "h_spin", "is_completely_reducible", "lattice_signature", "lift",
           "predicted_lattice", "restrict", "spin", "spin_under",
           "subquotient_action", "submodule_lattice", "t0_eigenspaces",
           "t0_spectrum", "verify_ladder"]
