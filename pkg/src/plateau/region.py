"""Point/region predicates for ideal polygons via the Klein model.

In the Klein model an ideal polygon is the Euclidean convex hull of its
vertex directions and geodesics are straight chords, so membership and
crossing tests reduce to sign checks.  Sampling of polygon interiors is by
area-weighted fan triangulation, deterministic for a given generator.
"""

from __future__ import annotations

import math

import numpy as np

from .hyperbolic import Geodesic, IdealPoint, angle_in_open_arc

# Sign slack for closed point-in-polygon tests.
MEMBER_TOL = 1e-12


def _vertex_array(angles) -> np.ndarray:
    arr = np.asarray([(math.cos(a), math.sin(a)) for a in angles], dtype=float)
    return arr


def polygon_contains(angles, pts: np.ndarray, tol: float = MEMBER_TOL) -> np.ndarray:
    """Closed membership of Klein-model points in the ideal polygon.

    ``angles``: CCW vertex angles.  ``pts``: array of shape (k, 2) in Klein
    coordinates.  Returns a boolean array.
    """
    verts = _vertex_array(angles)
    pts = np.atleast_2d(np.asarray(pts, dtype=float))
    inside = np.ones(len(pts), dtype=bool)
    n = len(verts)
    for i in range(n):
        a = verts[i]
        b = verts[(i + 1) % n]
        cross = (b[0] - a[0]) * (pts[:, 1] - a[1]) - (b[1] - a[1]) * (pts[:, 0] - a[0])
        inside &= cross >= -tol
    return inside


def point_in_polygon(angles, x: float, y: float, tol: float = MEMBER_TOL) -> bool:
    return bool(polygon_contains(angles, np.array([[x, y]]), tol)[0])


def polygon_seed(angles) -> tuple[float, float]:
    """An interior point (Klein): centroid of the vertex directions."""
    verts = _vertex_array(angles)
    c = verts.mean(axis=0)
    if np.hypot(*c) > 1.0 - 1e-9:  # nearly degenerate spread, pull inward
        c *= 0.5
    return float(c[0]), float(c[1])


def sample_polygon(angles, count: int, rng) -> np.ndarray:
    """Uniform (Klein-area) samples of the polygon interior, shape (count, 2)."""
    verts = _vertex_array(angles)
    n = len(verts)
    tri = [(verts[0], verts[i], verts[i + 1]) for i in range(1, n - 1)]
    areas = np.array([
        abs((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])) / 2.0
        for a, b, c in tri
    ])
    weights = areas / areas.sum()
    choice = rng.choice(len(tri), size=count, p=weights)
    u = rng.uniform(size=count)
    v = rng.uniform(size=count)
    flip = u + v > 1.0
    u[flip] = 1.0 - u[flip]
    v[flip] = 1.0 - v[flip]
    a = np.array([t[0] for t in tri])[choice]
    b = np.array([t[1] for t in tri])[choice]
    c = np.array([t[2] for t in tri])[choice]
    return a + u[:, None] * (b - a) + v[:, None] * (c - a)


def chord_crosses_interior(chord: Geodesic, angles, tol: float = 1e-12) -> bool:
    """True iff the geodesic passes through the open polygon interior.

    The chord meets the interior exactly when each of the two open circle
    arcs cut off by its endpoints contains at least one polygon vertex
    strictly.
    """
    a, b = chord.p.theta, chord.q.theta
    side1 = any(angle_in_open_arc(t, a, b, tol) for t in angles)
    side2 = any(angle_in_open_arc(t, b, a, tol) for t in angles)
    return side1 and side2


def beyond_chord(chord: Geodesic, x: float, y: float, arc_ref: float | None = None) -> bool:
    """True iff the Klein point lies strictly in a lens cut off by the chord.

    ``arc_ref`` is an angle inside the circle arc that bounds the intended
    lens; it defaults to the CCW arc from chord.p to chord.q.
    """
    if arc_ref is None:
        arc_ref = (chord.p.theta + chord.q.theta) / 2.0
    ax, ay = math.cos(chord.p.theta), math.sin(chord.p.theta)
    bx, by = math.cos(chord.q.theta), math.sin(chord.q.theta)
    mx, my = math.cos(arc_ref), math.sin(arc_ref)
    cross_ref = (bx - ax) * (my - ay) - (by - ay) * (mx - ax)
    cross_pt = (bx - ax) * (y - ay) - (by - ay) * (x - ax)
    return cross_pt * cross_ref > 0.0


def ideal_point_array(angles) -> list[IdealPoint]:
    return [IdealPoint(a) for a in angles]
