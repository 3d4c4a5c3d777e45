"""Computations in the strict skeletal 2-category 2Hilb."""

from .core import (CompositionError, OneCell, TwoCell, add2, adjoint1, adjunction_cells,
                   associator, dagger2, eq2, hcomp1, hcomp2, identity_1, identity_2,
                   max_entry_error, paste, rebracket, scalar_mul, vcomp, vcomp_all)
from .protocols import CheckReport

__version__ = "0.1.0"

__all__ = [
    "CheckReport", "CompositionError", "OneCell", "TwoCell", "add2", "adjoint1",
    "adjunction_cells", "associator", "dagger2", "eq2", "hcomp1", "hcomp2", "identity_1",
    "identity_2", "max_entry_error", "paste", "rebracket", "scalar_mul", "vcomp", "vcomp_all",
]
