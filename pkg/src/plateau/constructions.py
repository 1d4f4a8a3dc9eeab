"""Curve generators and auxiliary decision procedures.

Generators: infinite rectangles (one cap geodesic, two vertical rays and a
cylinder arc), multi-rectangle curves realizing prescribed cap geodesics
(nested arcs get levels deeper into the cap), boundary curves of vertical
planes, their k-fold families, and the boundary curve over an exact polygon
(alpha sides on one cap, beta sides on the other, vertical lines at the
vertices).

Decision procedures: the trap test (a curve strictly inside one side of an
exact-polygon boundary curve bounds no complete minimal surface), the
vertical pi-separation test for finite multi-component curves, and the
area-comparison table contrasting the cylinder area ``2m * a_m`` of the
vertical surface over the cap geodesics against the competitor bound
``2m * b_m + 4(k-1)pi`` inside the radius-m solid cylinder.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .curves import (
    BoundaryCurve,
    CapGeodesic,
    CylinderArc,
    JordanComponent,
    VerticalRay,
    curves_intersect,
    decompose,
    _cylinder_edges,
    _curve_rays,
    _edge_lifts_for,
)
from .errors import SpecInvalid
from .hyperbolic import (
    Geodesic,
    IdealPoint,
    TWO_PI,
    _raw_circle_intersections,
    angle_dist,
    ccw_gap,
    clipped_length,
    geodesics_cross,
    ideal_polygon_area,
    metric_circle_chord,
    normalize_angle,
    shares_endpoint,
)
from .polygons import (
    AlternatingPolygon,
    IdealPolygon,
    ab_gap,
    is_exact,
)
from .region import beyond_chord, polygon_seed


def _other_cap(cap: str) -> str:
    return "-" if cap == "+" else "+"


def _short_arc(g: Geodesic) -> tuple[float, float]:
    """(start, span) of the shorter boundary arc between the endpoints."""
    span = ccw_gap(g.p.theta, g.q.theta)
    if span <= math.pi:
        return g.p.theta, span
    return g.q.theta, TWO_PI - span


def infinite_rectangle(g: Geodesic, t0: float, cap: str = "+",
                       side: str = "short") -> JordanComponent:
    """Four-segment component: cap geodesic, two vertical rays from height
    t0, and the cylinder arc at t0 along the chosen boundary arc."""
    if side not in ("short", "long"):
        raise ValueError("side must be 'short' or 'long'")
    start, span = _short_arc(g)
    if side == "long":
        start = normalize_angle(start + span)
        span = TWO_PI - span
    end = start + span  # lift
    return JordanComponent((
        CapGeodesic(cap, (IdealPoint(start), IdealPoint(end))),
        VerticalRay(normalize_angle(end), t0, cap),
        CylinderArc(((end, t0), (start, t0))),
        VerticalRay(normalize_angle(start), t0, cap),
    ))


@dataclass(frozen=True)
class CapSpec:
    """Desired cap geodesics; within each cap they must be pairwise
    non-crossing with all endpoints distinct."""

    plus: tuple[Geodesic, ...] = ()
    minus: tuple[Geodesic, ...] = ()

    def __post_init__(self):
        for name, geos in (("plus", self.plus), ("minus", self.minus)):
            for i in range(len(geos)):
                for j in range(i + 1, len(geos)):
                    if geodesics_cross(geos[i], geos[j]):
                        raise SpecInvalid(f"{name} cap geodesics cross")
                    if shares_endpoint(geos[i], geos[j], 1e-9):
                        raise SpecInvalid(f"{name} cap geodesics share an endpoint")


def _arc_contains(outer, inner, tol=1e-12) -> bool:
    """Strict containment of boundary arcs given as (start, span)."""
    (sa, wa), (sb, wb) = outer, inner
    pos = ccw_gap(sa, sb)
    return pos >= -tol and pos + wb <= wa + tol and wb < wa - tol


def generate_from_caps(spec: CapSpec) -> BoundaryCurve:
    """One infinite rectangle per requested geodesic.

    Nested shorter arcs sit deeper toward their cap (larger |t|), so the
    rays of inner rectangles never cross the cylinder arcs of outer ones;
    levels are pairwise distinct and separated by at least 1.
    """
    components = []
    for cap, geos in (("+", spec.plus), ("-", spec.minus)):
        arcs = [_short_arc(g) for g in geos]
        depth = []
        for i in range(len(arcs)):
            depth.append(sum(
                1 for j in range(len(arcs))
                if j != i and _arc_contains(arcs[j], arcs[i])
            ))
        order = sorted(range(len(arcs)), key=lambda i: (depth[i], i))
        for rank, i in enumerate(order):
            level = 1.0 + rank
            t0 = level if cap == "+" else -level
            components.append(infinite_rectangle(geos[i], t0, cap, "short"))
    return BoundaryCurve(tuple(components))


def vertical_plane_component(g: Geodesic, t_split: float = 0.0) -> JordanComponent:
    """Boundary curve of the vertical plane over a geodesic: both cap
    geodesics plus the two full vertical lines at its endpoints."""
    p, q = g.p, g.q
    return JordanComponent((
        CapGeodesic("+", (p, q)),
        VerticalRay(q.theta, t_split, "+"),
        VerticalRay(q.theta, t_split, "-"),
        CapGeodesic("-", (q, p)),
        VerticalRay(p.theta, t_split, "-"),
        VerticalRay(p.theta, t_split, "+"),
    ))


def knoid_curve(k: int, gap: float | None = None) -> BoundaryCurve:
    """k symmetric vertical-plane boundary curves.

    ``gap`` is the angular gap between consecutive plane endpoints; the
    default pi/(2k) makes the configuration skinny at infinity (each
    plane's own arc is wider than the gaps between planes).
    """
    if k < 2:
        raise ValueError("need at least two planes")
    gap = math.pi / (2 * k) if gap is None else gap
    if not 0.0 < gap < TWO_PI / k:
        raise ValueError("gap must be in (0, 2*pi/k)")
    comps = []
    for i in range(k):
        a = TWO_PI * i / k + gap / 2.0
        b = TWO_PI * (i + 1) / k - gap / 2.0
        comps.append(vertical_plane_component(Geodesic.of(a, b)))
    return BoundaryCurve(tuple(comps))


def polygon_boundary_curve(xi: AlternatingPolygon, cap: str = "+",
                           t_split: float = 0.0) -> BoundaryCurve:
    """Single Jordan curve over a polygon: alpha sides as geodesics in
    ``cap``, beta sides in the other cap, vertical lines at all vertices."""
    n2 = len(xi)
    segments = []
    for i in range(n2):
        side_cap = cap if xi.alpha_sides[i] else _other_cap(cap)
        next_cap = cap if xi.alpha_sides[(i + 1) % n2] else _other_cap(cap)
        segments.append(CapGeodesic(side_cap, (xi.vertices[i], xi.vertices[(i + 1) % n2])))
        theta = xi.vertices[(i + 1) % n2].theta
        segments.append(VerticalRay(theta, t_split, side_cap))
        segments.append(VerticalRay(theta, t_split, next_cap))
    return BoundaryCurve((JordanComponent(tuple(segments)),))


def scherk_curve(n: int = 2, t_split: float = 0.0) -> BoundaryCurve:
    """Boundary curve over the symmetric exact 2n-gon."""
    xi = AlternatingPolygon.of([i * math.pi / n for i in range(2 * n)])
    return polygon_boundary_curve(xi, "+", t_split)


# ---------------------------------------------------------------------------
# Trap test


@dataclass(frozen=True)
class TrapRegion:
    """An exact polygon whose boundary curve (alpha sides toward ``cap``)
    forms the trapping wall."""

    xi: AlternatingPolygon
    cap: str = "+"

    def __post_init__(self):
        if self.cap not in ("+", "-"):
            raise ValueError("cap must be '+' or '-'")
        if not is_exact(self.xi):
            raise ValueError("the trap polygon must be exact")

    def curve(self) -> BoundaryCurve:
        return polygon_boundary_curve(self.xi, self.cap)


@dataclass(frozen=True)
class TrapReport:
    trapped: bool
    disjoint: bool
    seed_in_wall_side: bool | None = None
    wall_inside_region: bool | None = None


def _feature_angles(curve: BoundaryCurve) -> list[float]:
    """Angles where canonical parity paths would be degenerate."""
    out = []
    for comp in curve.components:
        for seg in comp.segments:
            if isinstance(seg, CylinderArc):
                out.extend(normalize_angle(a) for a, _t in seg.points)
            elif isinstance(seg, VerticalRay):
                out.append(normalize_angle(seg.theta))
            elif isinstance(seg, CapGeodesic):
                out.extend((seg.endpoints[0].theta, seg.endpoints[1].theta))
            elif type(seg).__name__ == "CornerPoint":
                out.append(normalize_angle(seg.theta))
            elif type(seg).__name__ == "CornerArc":
                out.extend(normalize_angle(a) for a in seg.interval)
            elif type(seg).__name__ == "CapArc":
                out.extend(math.atan2(p.y, p.x) % TWO_PI for p in seg.points)
    return out


def _ray_segment_crossing(a, b, theta: float):
    """(u, r): the segment a->b meets the radial ray at angle theta at
    parameter u in [0, 1] and radius r > 0, or None."""
    ax, ay = a
    bx, by = b
    dx, dy = math.cos(theta), math.sin(theta)
    det = -(bx - ax) * dy + dx * (by - ay)
    if abs(det) < 1e-15:
        return None
    u = (ax * dy - dx * ay) / det
    r = (-ay * (bx - ax) + ax * (by - ay)) / det
    if -1e-12 <= u <= 1.0 + 1e-12 and r > 0.0:
        return u, r
    return None


def _crossing_parities(curve: BoundaryCurve, kind: str, data) -> dict[int, int] | None:
    """Crossing parity with each component along a canonical path to the
    center of the + cap.

    ``kind`` is "cyl" with data (theta, t lifts) or "cap" with data
    (cap, x, y) in Klein coordinates.  Returns None when the path runs too
    close to a curve feature; callers retry with a perturbed start.
    """
    near_tol = 1e-7
    if kind == "cyl":
        theta = normalize_angle(data[0])
        legs = [("vertical", data[1], math.inf)]
        corners = [("+", theta)]
        radials = [("+", 0.0, 1.0)]
    else:
        cap, x, y = data
        theta = normalize_angle(math.atan2(y, x))
        r0 = math.hypot(x, y)
        if cap == "+":
            legs, corners, radials = [], [], [("+", 0.0, r0)]
        else:
            legs = [("vertical", -math.inf, math.inf)]
            corners = [("-", theta), ("+", theta)]
            radials = [("-", r0, 1.0), ("+", 0.0, 1.0)]

    for feat in _feature_angles(curve):
        if angle_dist(feat, theta) < near_tol:
            return None

    parities = {ci: 0 for ci in range(len(curve.components))}
    for ci, comp in enumerate(curve.components):
        sub = BoundaryCurve((comp,))
        flips = 0
        for _tag, t_lo, t_hi in legs:
            for edge in _cylinder_edges(sub):
                (a1, t1), (a2, t2) = edge
                if abs(a2 - a1) < 1e-15:
                    continue  # vertical edge at a feature angle: excluded above
                for cand, _lo, _hi in _edge_lifts_for(edge, theta):
                    frac = (cand - a1) / (a2 - a1)
                    t_cross = t1 + frac * (t2 - t1)
                    if abs(t_cross - t_lo) < near_tol or abs(t_cross - t_hi) < near_tol:
                        return None
                    if t_lo < t_cross < t_hi:
                        flips ^= 1
        for cap, lo_r, hi_r in radials:
            for seg in comp.segments:
                if isinstance(seg, CapGeodesic) and seg.cap == cap:
                    g = seg.geodesic
                    a = (math.cos(g.p.theta), math.sin(g.p.theta))
                    b = (math.cos(g.q.theta), math.sin(g.q.theta))
                    hit = _ray_segment_crossing(a, b, theta)
                    if hit is None:
                        continue
                    _u, r = hit  # Klein radius
                    if abs(r - lo_r) < near_tol or abs(r - hi_r) < near_tol:
                        return None
                    if lo_r < r < hi_r:
                        flips ^= 1
                elif type(seg).__name__ == "CapArc" and seg.cap == cap:
                    for u, v in zip(seg.points, seg.points[1:]):
                        hit = _ray_segment_crossing((u.x, u.y), (v.x, v.y), theta)
                        if hit is None:
                            continue
                        _s, r_p = hit  # Poincare radius; compare in Klein
                        r = 2.0 * r_p / (1.0 + r_p * r_p)
                        if abs(r - lo_r) < near_tol or abs(r - hi_r) < near_tol:
                            return None
                        if lo_r < r < hi_r:
                            flips ^= 1
        for cap, ctheta in corners:
            for seg in comp.segments:
                if type(seg).__name__ == "CornerArc" and seg.cap == cap:
                    a, b = (normalize_angle(x) for x in seg.interval)
                    pos = ccw_gap(a, ctheta)
                    span = ccw_gap(a, b)
                    if near_tol < pos < span - near_tol:
                        flips ^= 1
                    elif min(pos, abs(pos - span)) <= near_tol:
                        return None
        parities[ci] = flips
    return parities


def _same_region(curve: BoundaryCurve, point_a, point_b) -> bool:
    """Whether two points lie in the same complementary region."""
    for trial in range(12):
        shift = trial * 7.3e-4
        pa = _shift_point(point_a, shift)
        pb = _shift_point(point_b, shift)
        par_a = _crossing_parities(curve, pa[0], pa[1])
        par_b = _crossing_parities(curve, pb[0], pb[1])
        if par_a is not None and par_b is not None:
            return all(par_a[ci] == par_b[ci] for ci in par_a)
    raise RuntimeError("region test degenerate for every perturbation")


def _shift_point(point, shift):
    kind, data = point
    if kind == "cyl":
        theta, t = data
        return (kind, (theta + shift, t))
    cap, x, y = data
    c, s = math.cos(shift), math.sin(shift)
    return (kind, (cap, x * c - y * s, x * s + y * c))


def _cap_hull_seed(curve: BoundaryCurve, cap: str):
    dec = decompose(curve)
    geos = dec.cap_geodesics[cap]
    if not geos:
        raise ValueError(f"curve has no cap geodesics in cap {cap}")
    angles = sorted(
        a for g in geos for a in (g.p.theta, g.q.theta)
    )
    if len(angles) >= 3:
        x, y = polygon_seed(angles)
    else:
        x = 0.45 * (math.cos(angles[0]) + math.cos(angles[1]))
        y = 0.45 * (math.sin(angles[0]) + math.sin(angles[1]))
    return ("cap", (cap, x, y))


def in_wall_side(trap: TrapRegion, cap_point_xy) -> bool:
    """Membership of a point of the ``trap.cap`` cap (Klein coordinates) in
    the region on the polygon side of the trap's boundary curve: not
    strictly beyond any alpha side."""
    x, y = cap_point_xy
    for i in range(len(trap.xi)):
        if not trap.xi.alpha_sides[i]:
            continue
        side = trap.xi.side(i)
        a = trap.xi.vertices[i].theta
        b = trap.xi.vertices[(i + 1) % len(trap.xi)].theta
        arc_ref = a + ccw_gap(a, b) / 2.0
        if beyond_chord(side, x, y, arc_ref=arc_ref):
            return False
    return True


def trapped_by(curve: BoundaryCurve, trap: TrapRegion,
               report: bool = False):
    """Trap test: the curve's relevant cap region sits strictly inside the
    polygon side of the trap's boundary curve.

    Checks (i) the trap wall neither meets the curve nor enters the curve's
    cap region and (ii) a seed of the curve's cap hull lies on the wall's
    polygon side.  A trapped curve bounds no complete minimal surface.
    """
    wall = trap.curve()
    if curves_intersect(curve, wall):
        result = TrapReport(False, disjoint=False)
        return result if report else False
    seed = _cap_hull_seed(curve, trap.cap)
    # Wall sample point: on a vertical line of the wall, off the curve.
    theta0 = trap.xi.vertices[0].theta
    wall_point = ("cyl", (theta0, 0.61803398875))
    wall_inside = _same_region(curve, wall_point, seed)
    seed_ok = in_wall_side(trap, seed[1][1:])
    trapped = (not wall_inside) and seed_ok
    result = TrapReport(trapped, True, seed_ok, wall_inside)
    return result if report else trapped


# ---------------------------------------------------------------------------
# Vertical pi-separation


def vertical_separation_check(curve: BoundaryCurve) -> float | None:
    """A height c such that one component lies below c and all others above
    c + pi, if such a split exists (an obstruction to connected fillings)."""
    if len(curve.components) < 2:
        raise ValueError("need at least two components")
    ranges = []
    for comp in curve.components:
        ts = []
        for seg in comp.segments:
            if isinstance(seg, CylinderArc):
                ts.extend(t for _a, t in seg.points)
            else:
                raise ValueError("vertical separation applies to finite curves only")
        ranges.append((min(ts), max(ts)))
    low = min(range(len(ranges)), key=lambda i: ranges[i][1])
    top = ranges[low][1]
    others_min = min(r[0] for i, r in enumerate(ranges) if i != low)
    if others_min - top > math.pi:
        return (top + (others_min - math.pi)) / 2.0
    return None


# ---------------------------------------------------------------------------
# Area comparison


@dataclass(frozen=True)
class AreaRow:
    m: float
    a_m: float
    b_m: float
    c_m: float
    lhs: float
    bound: float


@dataclass(frozen=True)
class AreaDemo:
    k: int
    rows: tuple[AreaRow, ...]
    crossover_m: float | None
    c_limit: float


def area_demo(cap_geodesics, m_values) -> AreaDemo:
    """Area-comparison table for the vertical surface over k disjoint
    geodesics inside the radius-m solid cylinder.

    ``a_m`` sums the clipped geodesic lengths, ``b_m`` the chords between
    consecutive clip points around the induced polygon; the vertical
    surface has area ``2m * a_m`` while the competitor through the polygon
    faces is bounded by ``2m * b_m + 4(k-1)pi``.  The gap ``c_m`` grows to
    the truncated-length difference of the induced polygon labeling.
    """
    geos = list(cap_geodesics)
    k = len(geos)
    if k < 2:
        raise ValueError("area comparison needs at least two geodesics")
    for i in range(k):
        for j in range(i + 1, k):
            if geodesics_cross(geos[i], geos[j]) or shares_endpoint(geos[i], geos[j], 1e-9):
                raise ValueError("geodesics must be pairwise disjoint")
    endpoints = sorted(
        (p for g in geos for p in (g.p, g.q)), key=lambda p: p.theta
    )
    hull = IdealPolygon(tuple(endpoints))
    n2 = len(hull)
    geo_pairs = set()
    for g in geos:
        i = next(i for i, v in enumerate(hull.vertices) if v.same_as(g.p, 1e-9))
        j = next(i for i, v in enumerate(hull.vertices) if v.same_as(g.q, 1e-9))
        if (j - i) % n2 != 1 and (i - j) % n2 != 1:
            raise ValueError("nested geodesics: pass the face geodesics instead")
        geo_pairs.add((min(i, j), max(i, j)))
    flags = tuple(
        (min(i, (i + 1) % n2), max(i, (i + 1) % n2)) in geo_pairs
        for i in range(n2)
    )
    labeled = AlternatingPolygon(hull, flags)
    c_limit = ab_gap(labeled)

    # Which geodesic ends at each hull vertex, and its clip point there.
    owner = {}
    for gi, g in enumerate(geos):
        for end, point in (("p", g.p), ("q", g.q)):
            idx = next(i for i, v in enumerate(hull.vertices) if v.same_as(point, 1e-9))
            owner[idx] = (gi, end)

    rows = []
    crossover = None
    for m in sorted(m_values):
        a_m = sum(clipped_length(g, m) for g in geos)
        clip_dirs = {}
        for gi, g in enumerate(geos):
            pts, _tangent = _raw_circle_intersections(g, m)
            if len(pts) != 2:
                raise ValueError(f"geodesic {gi} misses the radius-{m} disk")
            for end, (x, y) in zip(("p", "q"), pts):
                clip_dirs[(gi, end)] = math.atan2(y, x)
        b_m = 0.0
        for i in range(n2):
            j = (i + 1) % n2
            if (min(i, j), max(i, j)) in geo_pairs:
                continue
            # Both clip points lie on the radius-m metric circle; the chord
            # between them depends only on their direction angle.
            phi = angle_dist(clip_dirs[owner[i]], clip_dirs[owner[j]])
            b_m += metric_circle_chord(m, phi)
        c_m = a_m - b_m
        lhs = 2.0 * m * a_m
        bound = 2.0 * m * b_m + 2.0 * ideal_polygon_area(n2)
        rows.append(AreaRow(m, a_m, b_m, c_m, lhs, bound))
        if crossover is None and lhs > bound:
            crossover = m
    return AreaDemo(k, tuple(rows), crossover, c_limit)
