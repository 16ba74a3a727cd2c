"""paraq: validated numerics for a cubic parabolic model map.

Rigorously derives the map constants, certifies the inequality ledger via
interval branch-and-bound, and ships a floating-point explorer for Fatou
coordinates and the domain figures.
"""

from .backend import BACKEND, kern
from .interval import (
    RealInterval,
    ComplexBox,
    DomainViolation,
    DivisionByIntervalContainingZero,
    DivisionByBoxContainingZero,
    BranchCutStraddle,
    ArgBranchCutStraddle,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "kern",
    "RealInterval",
    "ComplexBox",
    "DomainViolation",
    "DivisionByIntervalContainingZero",
    "DivisionByBoxContainingZero",
    "BranchCutStraddle",
    "ArgBranchCutStraddle",
    "__version__",
]
