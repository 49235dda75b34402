"""Exception types shared across the package.

Every error that carries mathematical meaning gets its own class so tests
can assert on the precise failure mode rather than on message strings.
"""

__all__ = [
    "VVMacdError",
    "DivisionByZero",
    "InvalidFilling",
    "CellOutOfShape",
    "IndexOutOfRange",
    "DivisibilityViolation",
    "AmbiguousLeader",
    "NotASpectralVector",
    "Unreachable",
    "ShapeMismatch",
    "CertificationFailure",
    "InconsistentRecursion",
    "IncompatibleTableau",
]


class VVMacdError(Exception):
    """Base class for all package-specific errors."""


class DivisionByZero(VVMacdError, ZeroDivisionError):
    """Division by the zero rational function."""


class InvalidFilling(VVMacdError, ValueError):
    """A filling violates weakly-increasing-rows / strictly-increasing-columns."""


class CellOutOfShape(VVMacdError, ValueError):
    """A (column, row) coordinate falls outside the Ferrers diagram."""


class IndexOutOfRange(VVMacdError, IndexError):
    """A generator or variable index is outside 1..N-1 (or 1..N)."""


class DivisibilityViolation(VVMacdError, ArithmeticError):
    """An exact division left a remainder where theory guarantees none.

    Raised by the degree-lowering operator when the result of the
    annihilator is not divisible by the last variable; this signals an
    implementation bug, never bad user input.
    """


class AmbiguousLeader(VVMacdError, ValueError):
    """The dominance-maximal exponent of a polynomial is not unique."""


class NotASpectralVector(VVMacdError, ValueError):
    """No (tableau, composition) pair realizes the given spectral vector."""


class Unreachable(VVMacdError, RuntimeError):
    """Path synthesis failed to connect the root to the requested vertex."""


class ShapeMismatch(VVMacdError, ValueError):
    """Two values that must share a shape/N do not."""


class CertificationFailure(VVMacdError, AssertionError):
    """An eigenfunction check failed; indicates a bug, not bad input."""


class InconsistentRecursion(VVMacdError, AssertionError):
    """A path-independent recursion produced path-dependent values."""


class IncompatibleTableau(VVMacdError, ValueError):
    """A filling is incompatible with the requested (anti)symmetrization."""
