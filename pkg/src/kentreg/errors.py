"""Exception types shared across the package."""


class KentRegError(Exception):
    """Base class for all kentreg errors."""


class InvalidParams(KentRegError):
    """Distribution or mixture parameters outside their valid domain."""


class TooFewPoints(KentRegError):
    """Not enough points for the requested operation."""


class DegenerateMean(KentRegError):
    """A mean direction or mean rotation is too close to singular."""


class DegenerateSamples(KentRegError):
    """Sample set carries no usable directional signal (zero weight,
    collinear directions, or concentration overflow)."""


class ParseError(KentRegError):
    """Input file could not be parsed."""
