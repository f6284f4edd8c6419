"""Exception hierarchy shared by the whole package.

Everything derives from :class:`BrillNoetherError`, so callers (and the CLI)
can catch domain failures in one go while programming errors still surface
as ordinary Python exceptions.
"""

from __future__ import annotations


class BrillNoetherError(Exception):
    """Base class for domain errors raised by this package."""


class ContainmentViolation(BrillNoetherError):
    """The inner partition is not contained in the outer one."""


class DegenerateShape(BrillNoetherError):
    """Row data does not describe a skew shape."""


class EmptyRow(DegenerateShape):
    """A row of the requested shape would contain no boxes."""


class RowOutOfRange(BrillNoetherError):
    """A 1-based row index falls outside 1..k."""


class DisconnectedShape(BrillNoetherError):
    """The operation is only defined for connected skew shapes."""


class TooLarge(BrillNoetherError):
    """The input exceeds the enumeration cap."""


class NonIntegral(BrillNoetherError):
    """An exact rational that must be an integer failed to be one."""


class InternalNonIntegral(NonIntegral):
    """Assertion-level: an internal determinant lost integrality."""


class InvalidSequence(BrillNoetherError):
    """Tuples do not form a valid sequence for the given data."""


class InvalidPretableau(BrillNoetherError):
    """A labelled filling violates the pretableau conditions."""


class DataMismatch(BrillNoetherError):
    """Two objects built from different Brill-Noether data were combined."""


class WrongRho(BrillNoetherError):
    """The adjusted Brill-Noether number is outside the supported range."""


class EmptyAspect(BrillNoetherError):
    """The requested ramification data admits no linear series."""


class DisconnectedGraph(BrillNoetherError):
    """The dual graph is disconnected, so the genus formula does not apply."""
