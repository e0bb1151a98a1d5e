"""Exception types shared across the package."""


class MatseqError(Exception):
    """Base class for all package-specific errors."""


class RingMismatch(MatseqError):
    """Operands belong to different coefficient rings."""


class UnsupportedRing(MatseqError):
    """The operation is not defined over the given ring."""


class ExactDivisionError(MatseqError):
    """Division has a remainder or the divisor is not invertible."""


class BadIndex(MatseqError):
    """A term index is out of range or malformed."""


class ZeroVector(MatseqError):
    """A nonzero vector was required."""


class Char2Unsupported(MatseqError):
    """The operation requires characteristic different from 2."""


class LengthMismatch(MatseqError):
    """Sequences must have equal length."""


class LengthTooShort(MatseqError):
    """The sequence is too short for this operation."""


class TowerTooDeep(MatseqError):
    """A second quadratic extension would be required."""


class NotTriangularizable(MatseqError):
    """The sequence admits no common triangular form over its ring."""


class CommutativeInput(MatseqError):
    """The operation requires a non-commutative sequence."""


class NotCommutative(MatseqError):
    """The operation requires a commutative sequence."""


class NotCanonical1a(MatseqError):
    """The sequence is not in the expected diagonal canonical form."""


class DegenerateDiscriminant(MatseqError):
    """The characteristic roots coincide; the construction needs them distinct."""


class ZeroC2(MatseqError):
    """The reconstructed lower-left entry would vanish."""


class NotApplicable(MatseqError):
    """The transformation does not apply to this input."""


class TooLarge(MatseqError):
    """The requested enumeration exceeds the size guard."""


class InternalInconsistency(MatseqError):
    """A decision procedure and its own construction disagree (bug sentinel)."""
