"""
Exceptions raised by pyracah.

@author : davidrpugh

"""


class PyRacahError(Exception):
    """Base class for all errors raised by pyracah."""


class SpecError(PyRacahError, ValueError):
    """A module specification could not be parsed or is inadmissible."""


class AmbientDimensionError(PyRacahError, ValueError):
    """Operands live in spaces of different dimension."""


class ReducibleModuleError(PyRacahError, ValueError):
    """The requested module fails its irreducibility criterion."""


class LatticeInvariantError(PyRacahError, RuntimeError):
    """An internal consistency check of the lattice engine failed."""


class IrrationalSpectrumError(LatticeInvariantError):
    """The spectrum of t0 is not fully rational."""


class DocumentError(PyRacahError, ValueError):
    """A JSON document does not follow the expected schema."""
