"""Exception types shared across the package."""

from __future__ import annotations


class QdivError(Exception):
    """Base class for errors raised by this package."""


class LengthMismatchError(QdivError, ValueError):
    """Two multi-indices (or a vector and an ambient space) disagree in length."""


class AxisOutOfRangeError(QdivError, ValueError):
    """A coordinate axis index lies outside 1..n (or 1..n-1 for generators)."""


class DegreeOutOfRangeError(QdivError, ValueError):
    """A requested homogeneous degree lies outside the graded support."""


class DegreeMismatchError(QdivError, ValueError):
    """A vector is not homogeneous of the stated degree."""


class ZeroVectorError(QdivError, ValueError):
    """An operation that needs a nonzero vector received zero."""


class NotClosedError(QdivError, ValueError):
    """A subspace expected to be stable under the algebra action is not."""


class InvariantViolationError(QdivError, RuntimeError):
    """A mathematical identity the library guarantees failed to hold.

    Reaching this means a bug (or an unsound input slipped past validation);
    the CLI maps it to exit code 3.
    """
