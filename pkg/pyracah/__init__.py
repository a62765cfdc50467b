"""
Objects imported here will live in the `pyracah` namespace

"""
from importlib.metadata import PackageNotFoundError, version

from . import algebras
from . import lattices
from . import linalg
from . import modules

__all__ = ["algebras", "lattices", "linalg", "modules"]

try:
    __version__ = version('pyracah')
except PackageNotFoundError:
    __version__ = '0.1.0'
