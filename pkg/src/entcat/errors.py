"""Exception types raised by the exact catalyst search."""


class CatalysisError(Exception):
    """Base class for all entcat errors."""


class NegativeEntry(CatalysisError, ValueError):
    """A state entry was negative."""


class ZeroVector(CatalysisError, ValueError):
    """All state entries were zero, so the vector cannot be normalized."""


class LengthMismatch(CatalysisError, ValueError):
    """Two vectors had different lengths and zero-padding was disabled."""


class WrongDimension(CatalysisError, ValueError):
    """An operation restricted to 4-dimensional states got something else."""


class NotIncomparable(CatalysisError, ValueError):
    """A catalyst search was asked about a pair that is already ordered."""


class IndexOutOfRange(CatalysisError, IndexError):
    """A top-l sum was requested for l outside 1..len(values)."""


class TieAtSamplePoint(CatalysisError, RuntimeError):
    """Two distinct products tied at a sweep sample point (caller bug:
    the point is a breakpoint, not a gap interior)."""


class TieAtRepresentative(CatalysisError, RuntimeError):
    """Two distinct products tied at a cell representative (caller bug:
    the point lies on an arrangement hyperplane)."""


class DegenerateSimplex(CatalysisError, ValueError):
    """The catalyst simplex is degenerate (k < 2)."""


class UnsupportedK(CatalysisError, ValueError):
    """The requested catalyst dimension exceeds the exact-elimination
    limit; reported instead of silently approximating."""
