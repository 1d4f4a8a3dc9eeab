"""Exception types shared across the library."""


class PlateauError(Exception):
    """Base class for all library errors."""


class ChartPoleCollision(PlateauError):
    """An ideal point coincides with the pole of a half-plane chart."""


class DegenerateHull(PlateauError):
    """Fewer than three ideal points; no polygon can be formed."""


class TooLarge(PlateauError):
    """Polygon too big for exhaustive inscribed-polygon enumeration."""


class CrossingChords(PlateauError):
    """A chord set that was required to be non-crossing crosses."""


class InvalidCurve(PlateauError):
    """A boundary curve failed validation."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class NotTallError(PlateauError):
    """Operation requires a tall curve."""


class NotFat(PlateauError):
    """Operation requires a strictly fat polygon."""


class PrecheckFailed(PlateauError):
    """Cap-structure prechecks (geodesic caps, distinct endpoints) failed."""


class BisectionFailed(PlateauError):
    """No sign change found for an exactness equation; never clamped."""


class CoverageIncomplete(PlateauError):
    """A covering left sampled points uncovered after the fill-in budget."""

    def __init__(self, message, uncovered):
        self.uncovered = uncovered
        super().__init__(message)


class SpecInvalid(PlateauError):
    """A generator was given an inconsistent specification."""
