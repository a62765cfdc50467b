"""
Objects imported here will live in the `pyracah.tests.models` namespace

"""
from . bases import (even_low_eigenspace, ladder_difference, odd_sigma_eigenspace,
                     odd_zero_prime, parity_span, tail_span, unit)

__all__ = ["even_low_eigenspace", "ladder_difference", "odd_sigma_eigenspace",
           "odd_zero_prime", "parity_span", "tail_span", "unit"]
