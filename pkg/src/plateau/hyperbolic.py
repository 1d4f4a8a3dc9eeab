"""Hyperbolic-plane primitives: ideal points, geodesics, decorated lengths.

Everything lives in the unit-disk model. Ideal points are angles on the
circle at infinity; a geodesic is determined by two distinct ideal points.
Length computations that involve horocycle truncation go through a
half-plane chart whose pole is kept away from all operand points: the chart
sends the angle ``theta`` to the boundary coordinate
``x = tan((theta - pole)/2 - pi/2)`` of the upper half-plane, with the pole
itself going to infinity.

With a horocycle of Euclidean diameter ``sigma`` (in the chart) at each
endpoint, the signed distance between the two horocycle crossings along the
geodesic is ``log((x - y)**2 / (sigma_x * sigma_y))``.  It is negative when
the horoballs overlap.  Shrinking one horoball by hyperbolic distance ``s``
(``sigma -> exp(-s) * sigma``) lengthens every incident truncated geodesic
by exactly ``s``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import ChartPoleCollision

TWO_PI = 2.0 * math.pi

# Tolerance for ideal-point coincidence on the circle.
TOL_GEOM = 1e-12


def normalize_angle(theta: float) -> float:
    """Reduce an angle into [0, 2*pi)."""
    theta = math.fmod(theta, TWO_PI)
    if theta < 0.0:
        theta += TWO_PI
    if theta >= TWO_PI:  # fmod can land exactly on 2*pi after the add
        theta -= TWO_PI
    return theta


def angle_dist(a: float, b: float) -> float:
    """Shortest angular distance between two angles, in [0, pi]."""
    d = abs(normalize_angle(a) - normalize_angle(b))
    return min(d, TWO_PI - d)


def ccw_gap(a: float, b: float) -> float:
    """Counterclockwise gap from angle a to angle b, in [0, 2*pi)."""
    return normalize_angle(b - a)


def angle_in_open_arc(theta: float, a: float, b: float, tol: float = 0.0) -> bool:
    """True iff theta lies strictly inside the CCW arc from a to b."""
    span = ccw_gap(a, b)
    pos = ccw_gap(a, theta)
    return tol < pos < span - tol


@dataclass(frozen=True, order=True)
class IdealPoint:
    """A point of the circle at infinity, stored as an angle in [0, 2*pi)."""

    theta: float

    def __post_init__(self):
        if not math.isfinite(self.theta):
            raise ValueError("ideal point angle must be finite")
        object.__setattr__(self, "theta", normalize_angle(self.theta))

    def same_as(self, other: "IdealPoint", tol: float = TOL_GEOM) -> bool:
        return angle_dist(self.theta, other.theta) <= tol

    def disk_point(self) -> complex:
        return cmath.exp(1j * self.theta)


@dataclass(frozen=True)
class Geodesic:
    """Unordered geodesic between two distinct ideal points.

    Construction normalizes so that ``p.theta < q.theta``.
    """

    p: IdealPoint
    q: IdealPoint

    def __post_init__(self):
        p, q = self.p, self.q
        if p.same_as(q):
            raise ValueError("geodesic endpoints must be distinct")
        if p.theta > q.theta:
            object.__setattr__(self, "p", q)
            object.__setattr__(self, "q", p)

    @staticmethod
    def of(theta1: float, theta2: float) -> "Geodesic":
        return Geodesic(IdealPoint(theta1), IdealPoint(theta2))

    @property
    def angles(self) -> tuple[float, float]:
        return (self.p.theta, self.q.theta)

    def width(self) -> float:
        """Angular separation of the endpoints, in (0, pi]."""
        return angle_dist(self.p.theta, self.q.theta)

    def other_end(self, point: IdealPoint, tol: float = TOL_GEOM) -> IdealPoint:
        if self.p.same_as(point, tol):
            return self.q
        if self.q.same_as(point, tol):
            return self.p
        raise ValueError("point is not an endpoint of this geodesic")


def shares_endpoint(g1: Geodesic, g2: Geodesic, tol: float = TOL_GEOM) -> bool:
    return any(
        a.same_as(b, tol)
        for a in (g1.p, g1.q)
        for b in (g2.p, g2.q)
    )


def geodesics_cross(g1: Geodesic, g2: Geodesic, tol: float = TOL_GEOM) -> bool:
    """True iff the endpoint pairs strictly interleave on the circle.

    Touching configurations (a shared endpoint within tolerance) do not
    count as crossing.
    """
    if shares_endpoint(g1, g2, tol):
        return False
    a, b = g1.p.theta, g1.q.theta
    inside1 = angle_in_open_arc(g2.p.theta, a, b)
    inside2 = angle_in_open_arc(g2.q.theta, a, b)
    return inside1 != inside2


# ---------------------------------------------------------------------------
# Decorations and half-plane charts


class Decoration:
    """Horoball size assignment: ideal point -> positive sigma.

    ``sigma`` is read as the Euclidean horocycle diameter in whatever chart
    a length computation runs in.  The canonical decoration assigns
    ``sigma = 1`` everywhere; every classification quantity downstream is
    independent of this choice (tested, not assumed).
    """

    def __init__(self, sizes=None, default: float = 1.0):
        if default <= 0.0:
            raise ValueError("horoball size must be positive")
        self.default = float(default)
        self._entries: list[tuple[IdealPoint, float]] = []
        if sizes:
            for point, sigma in dict(sizes).items():
                if sigma <= 0.0:
                    raise ValueError("horoball size must be positive")
                self._entries.append((point, float(sigma)))

    @staticmethod
    def unit() -> "Decoration":
        return Decoration()

    def size(self, point: IdealPoint, tol: float = TOL_GEOM) -> float:
        for stored, sigma in self._entries:
            if stored.same_as(point, tol):
                return sigma
        return self.default

    def with_size(self, point: IdealPoint, sigma: float) -> "Decoration":
        sizes = {p: s for p, s in self._entries if not p.same_as(point)}
        sizes[point] = sigma
        dec = Decoration(sizes, default=self.default)
        return dec


@dataclass(frozen=True)
class HalfPlaneChart:
    """Boundary chart of the upper half-plane with a movable pole.

    Maps the ideal angle ``theta`` to ``x = tan((theta - pole)/2 - pi/2)``;
    the pole goes to infinity and must stay away from every operand point.
    """

    pole: float = 0.0

    def to_real(self, point: IdealPoint, tol: float = TOL_GEOM) -> float:
        if angle_dist(point.theta, self.pole) <= tol:
            raise ChartPoleCollision(
                f"ideal point at theta={point.theta} coincides with chart pole"
            )
        return math.tan((point.theta - self.pole) / 2.0 - math.pi / 2.0)

    def boundary_derivative(self, point: IdealPoint) -> float:
        """d(x)/d(theta) at the point; used to transport decorations."""
        u = (point.theta - self.pole) / 2.0 - math.pi / 2.0
        return 0.5 * (1.0 + math.tan(u) ** 2)


def chart_avoiding(points) -> HalfPlaneChart:
    """Chart whose pole sits in the middle of the largest angular gap."""
    angles = sorted(normalize_angle(p.theta) for p in points)
    if not angles:
        return HalfPlaneChart(pole=0.0)
    best_gap, best_pole = -1.0, 0.0
    n = len(angles)
    for i in range(n):
        a = angles[i]
        b = angles[(i + 1) % n] + (TWO_PI if i == n - 1 else 0.0)
        if b - a > best_gap:
            best_gap = b - a
            best_pole = (a + b) / 2.0
    return HalfPlaneChart(pole=normalize_angle(best_pole))


def truncated_length(g: Geodesic, dec: Decoration, chart: HalfPlaneChart) -> float:
    """Signed distance between the two horoball boundaries along g.

    Negative when the horoballs overlap; zero exactly at tangency.
    """
    x = chart.to_real(g.p)
    y = chart.to_real(g.q)
    sx = dec.size(g.p)
    sy = dec.size(g.q)
    return math.log((x - y) ** 2 / (sx * sy))


# ---------------------------------------------------------------------------
# Metric disk: points, distances, clipping


@dataclass(frozen=True)
class PlanePoint:
    """A point of the open unit disk."""

    x: float
    y: float

    def __post_init__(self):
        if self.x * self.x + self.y * self.y >= 1.0:
            raise ValueError("plane point must lie in the open unit disk")

    def as_complex(self) -> complex:
        return complex(self.x, self.y)


def point_distance(u: PlanePoint, v: PlanePoint) -> float:
    """Hyperbolic distance between two disk points."""
    du = 1.0 - (u.x * u.x + u.y * u.y)
    dv = 1.0 - (v.x * v.x + v.y * v.y)
    sq = (u.x - v.x) ** 2 + (u.y - v.y) ** 2
    arg = 1.0 + 2.0 * sq / (du * dv)
    return math.acosh(max(arg, 1.0))


def distance_to_origin(g: Geodesic) -> float:
    """Hyperbolic distance from the disk center to the geodesic."""
    half = g.width() / 2.0  # in (0, pi/2]
    r = math.tan(math.pi / 4.0 - half / 2.0)  # Euclidean closest approach
    if r <= 0.0:
        return 0.0
    return 2.0 * math.atanh(r)


def clipped_length(g: Geodesic, m: float) -> float:
    """Length of the part of g inside the hyperbolic disk of radius m.

    A geodesic at distance rho < m from the center meets the disk in a
    segment of length ``2*acosh(cosh m / cosh rho)``.
    """
    if m <= 0.0:
        raise ValueError("disk radius must be positive")
    rho = distance_to_origin(g)
    if rho >= m:
        return 0.0
    return 2.0 * math.acosh(math.cosh(m) / math.cosh(rho))


def _geodesic_euclidean_arc(g: Geodesic):
    """Euclidean description of the geodesic: ('line', dir) or ('circle', c, R)."""
    u = g.p.disk_point()
    w = g.q.disk_point()
    dot = u.real * w.real + u.imag * w.imag
    if 1.0 + dot < 1e-14:  # diameter
        return ("line", u)
    c = (u + w) / (1.0 + dot)
    radius = math.sqrt(abs(c) ** 2 - 1.0)
    return ("circle", c, radius)


def metric_circle_chord(m: float, phi: float) -> float:
    """Distance between two points of the radius-m metric circle whose
    directions from the center differ by the angle phi.

    ``acosh(1 + 2*sinh(m)^2*sin(phi/2)^2)``; stable for large m, where the
    Euclidean representation of the points degenerates toward the boundary.
    """
    s = math.sinh(m) * math.sin(phi / 2.0)
    return math.acosh(1.0 + 2.0 * s * s)


def _raw_circle_intersections(g: Geodesic, m: float, tol: float = 1e-12):
    """(points, tangent) with points as raw (x, y) pairs ordered along g.

    Points sit on the Euclidean circle of radius tanh(m/2); for very large m
    they coincide with the ideal endpoints to machine precision (their
    directions stay accurate, their radius saturates at 1).
    """
    if m <= 0.0:
        raise ValueError("disk radius must be positive")
    rho = distance_to_origin(g)
    if abs(rho - m) <= tol:
        return [], True
    if rho > m:
        return [], False
    r_m = math.tanh(m / 2.0)  # Euclidean radius of the metric circle
    kind = _geodesic_euclidean_arc(g)
    if kind[0] == "line":
        u = kind[1]
        pts = [(-r_m * u.real, -r_m * u.imag), (r_m * u.real, r_m * u.imag)]
    else:
        _, c, radius = kind
        d = abs(c)
        # Radical line of the two circles, then the chord endpoints.
        a = (r_m * r_m - radius * radius + d * d) / (2.0 * d)
        h_sq = r_m * r_m - a * a
        if h_sq <= 0.0:
            return [], abs(h_sq) <= tol
        h = math.sqrt(h_sq)
        base = c / d * a
        offset = complex(-c.imag, c.real) / d * h
        z1, z2 = base + offset, base - offset
        pts = [(z1.real, z1.imag), (z2.real, z2.imag)]

    def arc_parameter(xy):
        # Fraction of the way from endpoint p to endpoint q, measured by
        # Euclidean distance to the p end (monotone along the arc).
        z = complex(*xy)
        return abs(z - g.p.disk_point())

    pts.sort(key=arc_parameter)
    return pts, False


def circle_intersections(g: Geodesic, m: float, tol: float = 1e-12):
    """Points of g on the boundary circle of the radius-m hyperbolic disk.

    Returns ``(points, tangent)``.  ``points`` is empty when g misses the
    disk (and when it only touches; then ``tangent`` is True), otherwise the
    two intersection points ordered along g from endpoint p to endpoint q.
    """
    pts, tangent = _raw_circle_intersections(g, m, tol)
    return [PlanePoint(x, y) for x, y in pts], tangent


def ideal_polygon_area(n: int) -> float:
    """Area of an ideal n-gon: (n - 2) * pi."""
    if n < 3:
        raise ValueError("an ideal polygon needs at least 3 vertices")
    return (n - 2) * math.pi


# ---------------------------------------------------------------------------
# Klein-model helpers (geodesics become straight chords)


def poincare_to_klein(z: complex) -> complex:
    return 2.0 * z / (1.0 + abs(z) ** 2)


def klein_to_poincare(k: complex) -> complex:
    return k / (1.0 + math.sqrt(max(0.0, 1.0 - abs(k) ** 2)))


# ---------------------------------------------------------------------------
# Orientation-preserving isometries (disk Moebius maps)


@dataclass(frozen=True)
class MobiusMap:
    """Disk Moebius map ``z -> (a*z + b) / (conj(b)*z + conj(a))``.

    With ``|a|^2 - |b|^2 = 1`` this is an orientation-preserving isometry of
    the hyperbolic plane; it acts on the circle at infinity by a monotone
    circle map, so circular order of ideal points is preserved.
    """

    a: complex
    b: complex

    @staticmethod
    def identity() -> "MobiusMap":
        return MobiusMap(1.0 + 0.0j, 0.0j)

    @staticmethod
    def rotation(phi: float) -> "MobiusMap":
        return MobiusMap(cmath.exp(1j * phi / 2.0), 0.0j)

    @staticmethod
    def translation_to(z0: complex) -> "MobiusMap":
        """Map sending the disk center to z0."""
        norm = math.sqrt(max(1e-300, 1.0 - abs(z0) ** 2))
        return MobiusMap(1.0 / norm, z0 / norm)

    def compose(self, other: "MobiusMap") -> "MobiusMap":
        a = self.a * other.a + self.b * other.b.conjugate()
        b = self.a * other.b + self.b * other.a.conjugate()
        return MobiusMap(a, b)

    def apply_complex(self, z: complex) -> complex:
        return (self.a * z + self.b) / (self.b.conjugate() * z + self.a.conjugate())

    def apply(self, point: IdealPoint) -> IdealPoint:
        w = self.apply_complex(point.disk_point())
        return IdealPoint(cmath.phase(w))

    def apply_plane(self, point: PlanePoint) -> PlanePoint:
        w = self.apply_complex(point.as_complex())
        return PlanePoint(w.real, w.imag)


def random_isometry(seed) -> MobiusMap:
    """Deterministic pseudo-random orientation-preserving disk isometry."""
    import numpy as np

    rng = np.random.default_rng(seed)
    phi = rng.uniform(0.0, TWO_PI)
    radius = rng.uniform(0.0, 0.85)
    angle = rng.uniform(0.0, TWO_PI)
    z0 = radius * cmath.exp(1j * angle)
    return MobiusMap.rotation(phi).compose(MobiusMap.translation_to(z0))


def apply_isometry(mob: MobiusMap, point: IdealPoint) -> IdealPoint:
    return mob.apply(point)
