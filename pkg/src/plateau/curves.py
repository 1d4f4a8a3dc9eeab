"""Boundary curves on the cylinder-with-caps and their analysis.

The boundary at infinity is modeled as the infinite cylinder (coordinates
``theta`` mod 2*pi and finite ``t``) glued to two closed disks (the caps,
written "+" and "-") along the two corner circles.  A curve is a finite
collection of disjoint Jordan components, each a cyclic chain of typed
segments:

* ``CylinderArc``  -- piecewise-linear arc in the cylinder development,
  finite t; theta values are real lifts (an edge may span up to one full
  turn, which encodes closed horizontal circles).
* ``VerticalRay``  -- vertical segment from (theta, t_start) to the corner
  point of the chosen cap.
* ``CapGeodesic``  -- geodesic in a cap between two ideal (corner) points.
* ``CapArc``       -- piecewise-linear path strictly inside an open cap.
* ``CornerPoint``  -- isolated contact with a corner circle.
* ``CornerArc``    -- interval of a corner circle (always an obstruction).

The height of a curve is the infimum over theta of the lengths of bounded
components of the vertical line minus the curve; it is computed exactly by
an event sweep (crossing heights are linear between events).  A curve is
tall when the height exceeds pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NotTallError
from .hyperbolic import (
    Geodesic,
    IdealPoint,
    PlanePoint,
    TWO_PI,
    angle_dist,
    geodesics_cross,
    normalize_angle,
    shares_endpoint,
)

# Matching tolerance for segment connection points.
TOL_CONNECT = 1e-9

CAPS = ("+", "-")


def _check_cap(cap: str) -> str:
    if cap not in CAPS:
        raise ValueError("cap must be '+' or '-'")
    return cap


# ---------------------------------------------------------------------------
# Segments


@dataclass(frozen=True)
class CylinderArc:
    points: tuple[tuple[float, float], ...]  # (theta lift, t)

    def __post_init__(self):
        pts = tuple((float(a), float(t)) for a, t in self.points)
        if len(pts) < 2:
            raise ValueError("polyline needs at least 2 points")
        for (a1, t1), (a2, t2) in zip(pts, pts[1:]):
            if not (math.isfinite(a1) and math.isfinite(t1)):
                raise ValueError("cylinder arc coordinates must be finite")
            if abs(a2 - a1) < 1e-15 and abs(t2 - t1) < 1e-15:
                raise ValueError("zero-length polyline edge")
            if abs(a2 - a1) > TWO_PI + 1e-9:
                raise ValueError("a polyline edge may span at most one full turn")
        object.__setattr__(self, "points", pts)


@dataclass(frozen=True)
class VerticalRay:
    theta: float
    t_start: float
    cap: str

    def __post_init__(self):
        _check_cap(self.cap)
        if not (math.isfinite(self.theta) and math.isfinite(self.t_start)):
            raise ValueError("ray coordinates must be finite")


@dataclass(frozen=True)
class CapGeodesic:
    cap: str
    endpoints: tuple[IdealPoint, IdealPoint]

    def __post_init__(self):
        _check_cap(self.cap)
        if len(self.endpoints) != 2:
            raise ValueError("a cap geodesic has two endpoints")

    @property
    def geodesic(self) -> Geodesic:
        return Geodesic(self.endpoints[0], self.endpoints[1])


@dataclass(frozen=True)
class CapArc:
    cap: str
    points: tuple[PlanePoint, ...]

    def __post_init__(self):
        _check_cap(self.cap)
        if len(self.points) < 2:
            raise ValueError("polyline needs at least 2 points")
        for u, v in zip(self.points, self.points[1:]):
            if abs(u.x - v.x) < 1e-15 and abs(u.y - v.y) < 1e-15:
                raise ValueError("zero-length polyline edge")


@dataclass(frozen=True)
class CornerPoint:
    cap: str
    theta: float

    def __post_init__(self):
        _check_cap(self.cap)


@dataclass(frozen=True)
class CornerArc:
    cap: str
    interval: tuple[float, float]  # CCW from interval[0] to interval[1]

    def __post_init__(self):
        _check_cap(self.cap)
        a, b = self.interval
        if angle_dist(a, b) < 1e-12 and abs(normalize_angle(b - a)) < 1e-12:
            raise ValueError("corner arc must have positive length")


Segment = CylinderArc | VerticalRay | CapGeodesic | CapArc | CornerPoint | CornerArc


@dataclass(frozen=True)
class JordanComponent:
    segments: tuple[Segment, ...]

    def __post_init__(self):
        if not self.segments:
            raise ValueError("a component needs at least one segment")


@dataclass(frozen=True)
class BoundaryCurve:
    components: tuple[JordanComponent, ...]

    @staticmethod
    def of(*components) -> "BoundaryCurve":
        return BoundaryCurve(tuple(
            c if isinstance(c, JordanComponent) else JordanComponent(tuple(c))
            for c in components
        ))


# ---------------------------------------------------------------------------
# Connection nodes


def _segment_nodes(seg: Segment):
    """Unordered endpoint pair on the compactified boundary."""
    if isinstance(seg, CylinderArc):
        (a1, t1), (a2, t2) = seg.points[0], seg.points[-1]
        return (("cyl", normalize_angle(a1), t1), ("cyl", normalize_angle(a2), t2))
    if isinstance(seg, VerticalRay):
        return (
            ("cyl", normalize_angle(seg.theta), seg.t_start),
            ("corner", seg.cap, normalize_angle(seg.theta)),
        )
    if isinstance(seg, CapGeodesic):
        return (
            ("corner", seg.cap, seg.endpoints[0].theta),
            ("corner", seg.cap, seg.endpoints[1].theta),
        )
    if isinstance(seg, CapArc):
        u, v = seg.points[0], seg.points[-1]
        return (("cappt", seg.cap, u.x, u.y), ("cappt", seg.cap, v.x, v.y))
    if isinstance(seg, CornerPoint):
        node = ("corner", seg.cap, normalize_angle(seg.theta))
        return (node, node)
    if isinstance(seg, CornerArc):
        a, b = seg.interval
        return (("corner", seg.cap, normalize_angle(a)), ("corner", seg.cap, normalize_angle(b)))
    raise TypeError(f"unknown segment type: {type(seg)!r}")


def _nodes_equal(n1, n2, tol: float = TOL_CONNECT) -> bool:
    if n1[0] != n2[0]:
        return False
    if n1[0] == "cyl":
        return angle_dist(n1[1], n2[1]) <= tol and abs(n1[2] - n2[2]) <= tol
    if n1[0] == "corner":
        return n1[1] == n2[1] and angle_dist(n1[2], n2[2]) <= tol
    if n1[0] == "cappt":
        return n1[1] == n2[1] and abs(n1[2] - n2[2]) <= tol and abs(n1[3] - n2[3]) <= tol
    return False


def _cycle_connects(component: JordanComponent) -> bool:
    """Whether some orientation of the segments closes into a cycle."""
    segs = component.segments
    ends = [_segment_nodes(s) for s in segs]
    if len(segs) == 1:
        return _nodes_equal(ends[0][0], ends[0][1])
    for first_flip in (False, True):
        start, current = (ends[0][1], ends[0][0]) if first_flip else ends[0]
        ok = True
        for pair in ends[1:]:
            if _nodes_equal(current, pair[0]):
                current = pair[1]
            elif _nodes_equal(current, pair[1]):
                current = pair[0]
            else:
                ok = False
                break
        if ok and _nodes_equal(current, start):
            return True
    return False


# ---------------------------------------------------------------------------
# Development segments (cylinder geometry, rays clipped at a large sentinel)

_RAY_SPAN = 1e9


def _recenter(seg):
    """Shift a development segment so its theta midpoint lies in [0, 2*pi)."""
    (a1, t1), (a2, t2) = seg
    mid = (a1 + a2) / 2.0
    shift = -TWO_PI * math.floor(mid / TWO_PI)
    return ((a1 + shift, t1), (a2 + shift, t2))


def _dev_segments(seg: Segment):
    if isinstance(seg, CylinderArc):
        return [
            _recenter((seg.points[i], seg.points[i + 1]))
            for i in range(len(seg.points) - 1)
        ]
    if isinstance(seg, VerticalRay):
        far = _RAY_SPAN if seg.cap == "+" else -_RAY_SPAN
        return [_recenter(((seg.theta, seg.t_start), (seg.theta, far)))]
    return []


def _seg_intersections(s1, s2, eps: float = 1e-12):
    """Intersection points of two development segments (list; 'overlap' for
    collinear positive-length overlap)."""
    (ax, ay), (bx, by) = s1
    (cx, cy), (dx, dy) = s2
    r = (bx - ax, by - ay)
    s = (dx - cx, dy - cy)
    denom = r[0] * s[1] - r[1] * s[0]
    qp = (cx - ax, cy - ay)
    cross_qp_r = qp[0] * r[1] - qp[1] * r[0]
    if abs(denom) < eps:
        if abs(cross_qp_r) > eps * max(1.0, abs(r[0]) + abs(r[1])):
            return []
        # Collinear: project on the dominant direction.
        axis = 0 if abs(r[0]) >= abs(r[1]) else 1
        i1 = sorted((s1[0][axis], s1[1][axis]))
        i2 = sorted((s2[0][axis], s2[1][axis]))
        lo, hi = max(i1[0], i2[0]), min(i1[1], i2[1])
        if hi - lo > 1e-9:
            return ["overlap"]
        if hi - lo >= -1e-9:
            frac = (lo - s1[0][axis]) / (s1[1][axis] - s1[0][axis])
            return [(ax + frac * r[0], ay + frac * r[1])]
        return []
    t = (qp[0] * s[1] - qp[1] * s[0]) / denom
    u = cross_qp_r / denom
    slack = 1e-9
    if -slack <= t <= 1.0 + slack and -slack <= u <= 1.0 + slack:
        return [(ax + t * r[0], ay + t * r[1])]
    return []


def _dev_pair_contacts(s1, s2):
    """All contact points of two development segments across theta lifts."""
    out = []
    for shift in (-TWO_PI, 0.0, TWO_PI):
        shifted = (
            (s2[0][0] + shift, s2[0][1]),
            (s2[1][0] + shift, s2[1][1]),
        )
        for hit in _seg_intersections(s1, shifted):
            if hit == "overlap":
                out.append("overlap")
            else:
                out.append(hit)
    return out


def _point_near_node(pt, node, tol=1e-7) -> bool:
    if node[0] != "cyl":
        return False
    return angle_dist(pt[0], node[1]) <= tol and abs(pt[1] - node[2]) <= tol


def _corner_reach(seg: Segment):
    """Corner-circle contacts of a segment: list of (cap, theta) or
    (cap, (a, b)) for corner arcs."""
    out = []
    if isinstance(seg, VerticalRay):
        out.append((seg.cap, normalize_angle(seg.theta)))
    elif isinstance(seg, CapGeodesic):
        out.append((seg.cap, seg.endpoints[0].theta))
        out.append((seg.cap, seg.endpoints[1].theta))
    elif isinstance(seg, CornerPoint):
        out.append((seg.cap, normalize_angle(seg.theta)))
    elif isinstance(seg, CornerArc):
        out.append((seg.cap, tuple(map(normalize_angle, seg.interval))))
    return out


def _corner_contacts(seg1: Segment, seg2: Segment, tol=TOL_CONNECT):
    """Corner-circle contact points between two segments."""
    hits = []
    for cap1, item1 in _corner_reach(seg1):
        for cap2, item2 in _corner_reach(seg2):
            if cap1 != cap2:
                continue
            pts1 = item1 if isinstance(item1, tuple) else (item1,)
            pts2 = item2 if isinstance(item2, tuple) else (item2,)
            if isinstance(item1, tuple) and isinstance(item2, tuple):
                # Arc against arc: overlap check on the circle.
                if _arcs_overlap(item1, item2, tol):
                    hits.append("overlap")
                continue
            if isinstance(item1, tuple) or isinstance(item2, tuple):
                arc = item1 if isinstance(item1, tuple) else item2
                others = pts2 if isinstance(item1, tuple) else pts1
                for th in others:
                    if _angle_in_closed_arc(th, arc, tol):
                        hits.append(("corner", cap1, th))
                continue
            if angle_dist(item1, item2) <= tol:
                hits.append(("corner", cap1, item1))
    return hits


def _angle_in_closed_arc(theta, arc, tol) -> bool:
    a, b = arc
    span = normalize_angle(b - a)
    pos = normalize_angle(theta - a)
    return -tol <= pos <= span + tol or abs(pos - TWO_PI) <= tol


def _arcs_overlap(arc1, arc2, tol) -> bool:
    a1, b1 = arc1
    for th in (a1, b1, normalize_angle(a1 + normalize_angle(b1 - a1) / 2.0)):
        if _angle_in_closed_arc(th, arc2, -tol):
            return True
    a2, b2 = arc2
    for th in (a2, b2, normalize_angle(a2 + normalize_angle(b2 - a2) / 2.0)):
        if _angle_in_closed_arc(th, arc1, -tol):
            return True
    return False


def _cap_geodesic_arc_hits(geo: CapGeodesic, arc: CapArc):
    """Intersections of a cap geodesic with a cap polyline (same cap)."""
    if geo.cap != arc.cap:
        return []
    g = geo.geodesic
    u = g.p.disk_point()
    w = g.q.disk_point()
    dot = u.real * w.real + u.imag * w.imag
    hits = []
    for p1, p2 in zip(arc.points, arc.points[1:]):
        z1, z2 = p1.as_complex(), p2.as_complex()
        if 1.0 + dot < 1e-14:
            # Diameter: line through origin along u.
            n = complex(-u.imag, u.real)
            d1 = (z1 * n.conjugate()).real
            d2 = (z2 * n.conjugate()).real
            if d1 * d2 <= 0.0 and abs(d1 - d2) > 1e-15:
                frac = d1 / (d1 - d2)
                hits.append(z1 + frac * (z2 - z1))
        else:
            c = (u + w) / (1.0 + dot)
            radius = math.sqrt(abs(c) ** 2 - 1.0)
            # Segment against circle |z - c| = radius.
            dz = z2 - z1
            a = abs(dz) ** 2
            if a < 1e-30:
                continue
            b = 2.0 * ((z1 - c) * dz.conjugate()).real
            cc = abs(z1 - c) ** 2 - radius * radius
            disc = b * b - 4.0 * a * cc
            if disc < 0.0:
                continue
            for sgn in (-1.0, 1.0):
                frac = (-b + sgn * math.sqrt(disc)) / (2.0 * a)
                if -1e-12 <= frac <= 1.0 + 1e-12:
                    z = z1 + frac * dz
                    if abs(z) < 1.0:
                        hits.append(z)
    return hits


def _cap_arcs_hits(a1: CapArc, a2: CapArc):
    if a1.cap != a2.cap:
        return []
    hits = []
    for i in range(len(a1.points) - 1):
        s1 = ((a1.points[i].x, a1.points[i].y), (a1.points[i + 1].x, a1.points[i + 1].y))
        for j in range(len(a2.points) - 1):
            s2 = ((a2.points[j].x, a2.points[j].y), (a2.points[j + 1].x, a2.points[j + 1].y))
            hits.extend(_seg_intersections(s1, s2))
    return hits


# ---------------------------------------------------------------------------
# Validation


def validate(curve: BoundaryCurve) -> list[str]:
    """Validate a curve; returns a list of violations (empty means ok)."""
    violations: list[str] = []
    for ci, comp in enumerate(curve.components):
        if not _cycle_connects(comp):
            violations.append(f"component {ci}: discontinuous (segments do not chain into a closed cycle)")
    violations.extend(_pair_msg(*v) for v in _embedding_violations(curve))
    return violations


def curves_intersect(c1: BoundaryCurve, c2: BoundaryCurve) -> bool:
    """Whether two (individually valid) curves meet anywhere."""
    merged = BoundaryCurve(tuple(c1.components) + tuple(c2.components))
    n1 = len(c1.components)
    for ci, _si, cj, _sj, _kind in _embedding_violations(merged):
        if (ci < n1) != (cj < n1):
            return True
    return False


def _adjacency(comp: JordanComponent):
    """Pairs of segment indices adjacent in the cycle."""
    n = len(comp.segments)
    if n == 1:
        return set()
    return {(i, (i + 1) % n) for i in range(n)} | {((i + 1) % n, i) for i in range(n)}


def _embedding_violations(curve: BoundaryCurve) -> list[tuple]:
    out: list[tuple] = []
    # Indexed development segments: (comp, seg index, edge index, dev segment).
    dev = []
    for ci, comp in enumerate(curve.components):
        for si, seg in enumerate(comp.segments):
            for ei, d in enumerate(_dev_segments(seg)):
                dev.append((ci, si, ei, seg, d))
    adjacency = [_adjacency(c) for c in curve.components]

    def allowed_contact(pt, ci, si, ei, cj, sj, ej) -> bool:
        if ci != cj:
            return False
        comp = curve.components[ci]
        if si == sj:
            # Consecutive edges of one polyline share a vertex; a closed
            # polyline also joins its last edge to its first.
            seg = comp.segments[si]
            nedges = len(seg.points) - 1 if isinstance(seg, CylinderArc) else 1
            if abs(ei - ej) == 1:
                shared = seg.points[max(ei, ej)]
                return _point_near_node(pt, ("cyl", normalize_angle(shared[0]), shared[1]))
            if nedges > 2 and {ei, ej} == {0, nedges - 1} and len(comp.segments) == 1:
                shared = seg.points[0]
                return _point_near_node(pt, ("cyl", normalize_angle(shared[0]), shared[1]))
            return False
        if (si, sj) in adjacency[ci]:
            for node in _segment_nodes(comp.segments[si]):
                if any(_nodes_equal(node, n2) for n2 in _segment_nodes(comp.segments[sj])):
                    if _point_near_node(pt, node):
                        return True
        return False

    for a in range(len(dev)):
        ci, si, ei, seg_i, d1 = dev[a]
        for b in range(a + 1, len(dev)):
            cj, sj, ej, seg_j, d2 = dev[b]
            for hit in _dev_pair_contacts(d1, d2):
                if hit == "overlap":
                    out.append((ci, si, cj, sj, "overlapping segments"))
                    break
                if not allowed_contact(hit, ci, si, ei, cj, sj, ej):
                    kind = "not disjoint" if ci != cj else "self-intersection"
                    out.append((ci, si, cj, sj, kind))
                    break
            else:
                continue
            break

    # Corner-circle and cap contacts.
    flat = [
        (ci, si, seg)
        for ci, comp in enumerate(curve.components)
        for si, seg in enumerate(comp.segments)
    ]
    for a in range(len(flat)):
        ci, si, seg_i = flat[a]
        for b in range(a + 1, len(flat)):
            cj, sj, seg_j = flat[b]
            adjacent = ci == cj and (si, sj) in _adjacency(curve.components[ci])
            for hit in _corner_contacts(seg_i, seg_j):
                if hit == "overlap":
                    out.append((ci, si, cj, sj, "corner overlap between segments"))
                    break
                if not (adjacent and _corner_hit_is_shared_node(hit, seg_i, seg_j)):
                    kind = "not disjoint" if ci != cj else "self-intersection at corner"
                    out.append((ci, si, cj, sj, kind))
                    break
            else:
                pass
            # Cap-interior contacts.
            hits = []
            if isinstance(seg_i, CapGeodesic) and isinstance(seg_j, CapGeodesic):
                if seg_i.cap == seg_j.cap:
                    gi, gj = seg_i.geodesic, seg_j.geodesic
                    if geodesics_cross(gi, gj):
                        hits.append("cross")
                    elif gi.p.same_as(gj.p, 1e-9) and gi.q.same_as(gj.q, 1e-9):
                        hits.append("overlap")
            elif isinstance(seg_i, CapGeodesic) and isinstance(seg_j, CapArc):
                hits.extend(_cap_geodesic_arc_hits(seg_i, seg_j))
            elif isinstance(seg_i, CapArc) and isinstance(seg_j, CapGeodesic):
                hits.extend(_cap_geodesic_arc_hits(seg_j, seg_i))
            elif isinstance(seg_i, CapArc) and isinstance(seg_j, CapArc):
                raw = _cap_arcs_hits(seg_i, seg_j)
                for h in raw:
                    if h == "overlap":
                        hits.append(h)
                    elif not (adjacent and _cappt_hit_is_shared_node(h, seg_i, seg_j)):
                        hits.append(h)
            if hits:
                kind = "not disjoint" if ci != cj else "self-intersection in cap"
                out.append((ci, si, cj, sj, kind))
    return out


def _corner_hit_is_shared_node(hit, seg_i, seg_j) -> bool:
    if not isinstance(hit, tuple):
        return False
    return any(
        _nodes_equal(hit, n1) and any(_nodes_equal(hit, n2) for n2 in _segment_nodes(seg_j))
        for n1 in _segment_nodes(seg_i)
    )


def _cappt_hit_is_shared_node(hit, seg_i, seg_j, tol=1e-7) -> bool:
    x, y = hit
    for n1 in _segment_nodes(seg_i):
        if n1[0] != "cappt":
            continue
        if abs(n1[2] - x) <= tol and abs(n1[3] - y) <= tol:
            for n2 in _segment_nodes(seg_j):
                if n2[0] == "cappt" and abs(n2[2] - x) <= tol and abs(n2[3] - y) <= tol:
                    return True
    return False


def _pair_msg(ci, si, cj, sj, kind) -> str:
    if ci == cj:
        return f"component {ci}: {kind} (segments {si} and {sj})"
    return f"components {ci} and {cj}: {kind} (segments {si} and {sj})"


# ---------------------------------------------------------------------------
# Decomposition


@dataclass(frozen=True)
class Decomposition:
    cylinder: tuple[Segment, ...]
    cap_geodesics: dict
    cap_arcs: dict
    corner_points: dict
    corner_arcs: dict

    def cap_geodesic_list(self, cap: str):
        return self.cap_geodesics[_check_cap(cap)]


def decompose(curve: BoundaryCurve) -> Decomposition:
    """Partition the curve's segments by kind and cap sign."""
    cylinder = []
    cap_geos = {"+": [], "-": []}
    cap_arcs = {"+": [], "-": []}
    corner_pts = {"+": [], "-": []}
    corner_arcs = {"+": [], "-": []}
    for comp in curve.components:
        for seg in comp.segments:
            if isinstance(seg, (CylinderArc, VerticalRay)):
                cylinder.append(seg)
            elif isinstance(seg, CapGeodesic):
                cap_geos[seg.cap].append(seg.geodesic)
            elif isinstance(seg, CapArc):
                cap_arcs[seg.cap].append(seg)
            elif isinstance(seg, CornerPoint):
                corner_pts[seg.cap].append(normalize_angle(seg.theta))
            elif isinstance(seg, CornerArc):
                corner_arcs[seg.cap].append(tuple(map(normalize_angle, seg.interval)))
    return Decomposition(
        cylinder=tuple(cylinder),
        cap_geodesics={c: tuple(v) for c, v in cap_geos.items()},
        cap_arcs={c: tuple(v) for c, v in cap_arcs.items()},
        corner_points={c: tuple(v) for c, v in corner_pts.items()},
        corner_arcs={c: tuple(v) for c, v in corner_arcs.items()},
    )


# ---------------------------------------------------------------------------
# Height sweep


@dataclass(frozen=True)
class HeightReport:
    h: float  # may be math.inf
    witness_theta: float | None = None
    witness_interval: tuple[float, float] | None = None


def _cylinder_edges(curve: BoundaryCurve):
    """All development edges of cylinder arcs, recentered lifts."""
    edges = []
    for comp in curve.components:
        for seg in comp.segments:
            if isinstance(seg, CylinderArc):
                for i in range(len(seg.points) - 1):
                    edges.append(_recenter((seg.points[i], seg.points[i + 1])))
    return edges


def _curve_rays(curve: BoundaryCurve):
    return [
        seg
        for comp in curve.components
        for seg in comp.segments
        if isinstance(seg, VerticalRay)
    ]


def _edge_lifts_for(edge, phi: float, tol: float = 0.0):
    """All lifts of phi within the closed theta-span of the edge."""
    lo = min(edge[0][0], edge[1][0])
    hi = max(edge[0][0], edge[1][0])
    out = []
    k_min = math.floor((lo - phi) / TWO_PI) - 1
    k_max = math.ceil((hi - phi) / TWO_PI) + 1
    for k in range(k_min, k_max + 1):
        cand = phi + k * TWO_PI
        if lo - tol <= cand <= hi + tol:
            out.append((cand, lo, hi))
    return out


def _edge_lift_for(edge, phi: float, tol: float = 0.0):
    lifts = _edge_lifts_for(edge, phi, tol)
    return lifts[0] if lifts else None


def _obstacles_at(curve: BoundaryCurve, phi: float, mode: str):
    """Blocked t-set on the vertical line at angle phi.

    mode "exact" includes vertical edges, rays and vertices at phi; the
    one-sided modes "left"/"right" give the limiting crossing set from that
    side (only edges whose span covers an approach from that side).
    Returns a list of (t_lo, t_hi) blocked intervals (points degenerate).
    """
    eps = 1e-12
    blocks: list[tuple[float, float]] = []
    crossings: list[float] = []
    for edge in _cylinder_edges(curve):
        (a1, t1), (a2, t2) = edge
        vertical = abs(a2 - a1) < 1e-15
        for cand, lo, hi in _edge_lifts_for(edge, phi, tol=eps):
            if vertical:
                if mode == "exact":
                    blocks.append((min(t1, t2), max(t1, t2)))
                continue
            if mode == "left" and cand <= lo + eps:
                continue
            if mode == "right" and cand >= hi - eps:
                continue
            frac = (cand - a1) / (a2 - a1)
            frac = min(1.0, max(0.0, frac))
            t = t1 + frac * (t2 - t1)
            blocks.append((t, t))
            crossings.append(t)
    if mode == "exact":
        for ray in _curve_rays(curve):
            if angle_dist(ray.theta, phi) <= eps:
                if ray.cap == "+":
                    blocks.append((ray.t_start, math.inf))
                else:
                    blocks.append((-math.inf, ray.t_start))
    # Coincident one-sided crossings from distinct edges mark a pinch: the
    # complementary component between them vanishes in the limit (a local
    # theta-extremum of the curve), so the height infimum there is 0.
    pinches: list[float] = []
    if mode in ("left", "right"):
        crossings.sort()
        pinches = [
            t1 for t1, t2 in zip(crossings, crossings[1:]) if t2 - t1 <= eps
        ]
    return _merge_blocks(blocks), pinches


def _merge_blocks(blocks, tol: float = 1e-12):
    if not blocks:
        return []
    blocks = sorted(blocks)
    merged = [list(blocks[0])]
    for lo, hi in blocks[1:]:
        if lo <= merged[-1][1] + tol:
            merged[-1][1] = max(merged[-1][1], hi)
        else:
            merged.append([lo, hi])
    return [tuple(b) for b in merged]


def _min_bounded_gap(blocks):
    """Min length over bounded components between blocked sets, with witness."""
    best = math.inf
    witness = None
    for (lo1, hi1), (lo2, hi2) in zip(blocks, blocks[1:]):
        if math.isinf(hi1) or math.isinf(lo2):
            continue
        gap = lo2 - hi1
        if gap < best:
            best = gap
            witness = (hi1, lo2)
    return best, witness


def sweep_events(curve: BoundaryCurve) -> list[float]:
    """Sorted distinct event angles: polyline vertices and ray positions."""
    angles = set()
    for comp in curve.components:
        for seg in comp.segments:
            if isinstance(seg, CylinderArc):
                for a, _t in seg.points:
                    angles.add(round(normalize_angle(a), 12))
            elif isinstance(seg, VerticalRay):
                angles.add(round(normalize_angle(seg.theta), 12))
    return sorted(angles)


def height(curve: BoundaryCurve) -> HeightReport:
    """Infimum over theta of the bounded vertical gaps of the cylinder part."""
    events = sweep_events(curve)
    if not events:
        return HeightReport(math.inf)
    best = math.inf
    best_theta = None
    best_interval = None
    for phi in events:
        for mode in ("exact", "left", "right"):
            blocks, pinches = _obstacles_at(curve, phi, mode)
            gap, witness = _min_bounded_gap(blocks)
            if pinches:
                gap, witness = 0.0, (pinches[0], pinches[0])
            if gap < best:
                best, best_theta, best_interval = gap, phi, witness
    return HeightReport(best, best_theta, best_interval)


class Tallness:
    TALL = "tall"
    NOT_TALL = "not_tall"
    BORDERLINE = "borderline"


def is_tall(curve: BoundaryCurve, tol: float = 1e-12) -> str:
    h = height(curve).h
    if h > math.pi + tol:
        return Tallness.TALL
    if h < math.pi - tol:
        return Tallness.NOT_TALL
    return Tallness.BORDERLINE


def band_extent(curve: BoundaryCurve) -> float:
    """Max |t| over cylinder vertices and ray feet (0 for empty cylinder part)."""
    out = 0.0
    for comp in curve.components:
        for seg in comp.segments:
            if isinstance(seg, CylinderArc):
                out = max(out, max(abs(t) for _a, t in seg.points))
            elif isinstance(seg, VerticalRay):
                out = max(out, abs(seg.t_start))
    return out


# ---------------------------------------------------------------------------
# Tall-rectangle covers


@dataclass(frozen=True)
class TallRectangle:
    theta_interval: tuple[float, float]  # lifts, width <= 2*pi
    t_interval: tuple[float, float]

    def __post_init__(self):
        t1, t2 = self.t_interval
        if not t2 - t1 > math.pi:
            raise ValueError("a tall rectangle needs vertical extent > pi")

    def contains(self, theta: float, t: float) -> bool:
        a, b = self.theta_interval
        t1, t2 = self.t_interval
        if not t1 < t < t2:
            return False
        for k in (-1, 0, 1):
            if a < theta + k * TWO_PI < b:
                return True
        return False


def cover_margin(h: float) -> float:
    """Staircase rise bound for covers: points closer than this to the
    cylinder part of the curve are excluded from coverage verification."""
    if math.isinf(h):
        return 0.05
    return min(0.05, (h - math.pi) / 4.0)


def tall_cover(curve: BoundaryCurve, T: float) -> list[TallRectangle]:
    """Cover the band complement of the cylinder part by tall rectangles.

    Rectangle interiors avoid the curve; their union covers every point of
    (S^1 x [-T, T]) minus the curve at distance greater than
    ``cover_margin(h)`` from the cylinder part.  Exact coverage of sloped
    edges would need infinitely many axis-aligned rectangles, so the
    staircase resolution is tied to the margin used by the verifier.
    """
    report = height(curve)
    h = report.h
    if not h > math.pi:
        raise NotTallError(f"tall cover requires a tall curve (h = {h})")
    if T < band_extent(curve) + math.pi + 1.0 - 1e-9:
        raise ValueError("band half-height T too small for this curve")
    r = cover_margin(h)
    events = sweep_events(curve)
    rects: list[TallRectangle] = []

    if not events:
        # Empty cylinder part: tile the band with two angular windows.
        for (a, b) in ((0.0, 1.2 * math.pi), (math.pi, 2.2 * math.pi)):
            t = -T
            while t < T:
                top = min(T, t + math.pi + 1.0)
                if top - t > math.pi:
                    rects.append(TallRectangle((a, b), (t, top)))
                if top >= T:
                    break
                t = top - (math.pi + 1.0) / 2.0
        return rects

    edges = _cylinder_edges(curve)
    slopes = [
        abs((e[1][1] - e[0][1]) / (e[1][0] - e[0][0]))
        for e in edges
        if abs(e[1][0] - e[0][0]) > 1e-15
    ]
    max_slope = max(slopes) if slopes else 0.0

    # Strip rectangles between consecutive events.
    n_ev = len(events)
    for i in range(n_ev):
        a = events[i]
        b = events[(i + 1) % n_ev] + (TWO_PI if i == n_ev - 1 else 0.0)
        if b - a < 1e-12:
            continue
        mid = (a + b) / 2.0
        crossings = []
        for edge in edges:
            found = _edge_lift_for(edge, normalize_angle(mid))
            if found is None:
                continue
            cand, lo, hi = found
            (a1, t1), (a2, t2) = edge
            if abs(a2 - a1) < 1e-15:
                continue  # vertical edges live at events only
            shift = cand - mid

            def t_at(u, a1=a1, a2=a2, t1=t1, t2=t2, shift=shift):
                frac = (u + shift - a1) / (a2 - a1)
                return t1 + frac * (t2 - t1)

            crossings.append(t_at)
        crossings.sort(key=lambda f: f(mid))
        levels = [lambda _u, v=-T: v] + crossings + [lambda _u, v=T: v]
        for f_lo, f_hi in zip(levels, levels[1:]):
            rise = max(abs(f_lo(b) - f_lo(a)), abs(f_hi(b) - f_hi(a)))
            n_steps = max(1, math.ceil(rise / (r / 2.0)))
            for k in range(n_steps):
                u = a + (b - a) * k / n_steps
                v = a + (b - a) * (k + 1) / n_steps
                floor = max(f_lo(u), f_lo(v), -T)
                ceil = min(f_hi(u), f_hi(v), T)
                if ceil - floor > math.pi:
                    rects.append(TallRectangle((u, v), (floor, ceil)))

    # Straddle rectangles so event lines themselves are covered.
    gaps_between_events = [
        (events[(i + 1) % n_ev] + (TWO_PI if i == n_ev - 1 else 0.0)) - events[i]
        for i in range(n_ev)
    ]
    for i, phi in enumerate(events):
        left_gap = gaps_between_events[(i - 1) % n_ev]
        right_gap = gaps_between_events[i]
        w = min(r / (2.0 * max_slope + 1.0), left_gap / 2.0, right_gap / 2.0)
        if w <= 0.0:
            continue
        blocks, _pinches = _obstacles_at(curve, phi, "exact")
        # Build the free gaps at the event line, clipped to the band.
        frees = []
        prev_top = -T
        curve_below = False
        for lo, hi in blocks:
            lo_c, hi_c = max(lo, -T), min(hi, T)
            if lo_c > prev_top:
                frees.append((prev_top, lo_c, curve_below, True))
            prev_top = max(prev_top, hi_c)
            curve_below = True
        if prev_top < T:
            frees.append((prev_top, T, curve_below, False))
        for (fa, fb, curve_bot, curve_top) in frees:
            lo = fa + (r / 2.0 if curve_bot else 0.0)
            hi = fb - (r / 2.0 if curve_top else 0.0)
            if hi - lo > math.pi:
                rects.append(TallRectangle((phi - w, phi + w), (lo, hi)))
    return rects


def _dev_distance(theta: float, t: float, edge) -> float:
    """Distance from a development point to an edge, minimized over lifts."""
    best = math.inf
    (a1, t1), (a2, t2) = edge
    for k in (-1, 0, 1):
        x, y = theta + k * TWO_PI, t
        dx, dy = a2 - a1, t2 - t1
        denom = dx * dx + dy * dy
        frac = 0.0 if denom < 1e-30 else max(0.0, min(1.0, ((x - a1) * dx + (y - t1) * dy) / denom))
        px, py = a1 + frac * dx, t1 + frac * dy
        best = min(best, math.hypot(x - px, y - py))
    return best


def distance_to_cylinder_part(curve: BoundaryCurve, theta: float, t: float) -> float:
    best = math.inf
    for edge in _cylinder_edges(curve):
        best = min(best, _dev_distance(theta, t, edge))
    for ray in _curve_rays(curve):
        for edge in _dev_segments(ray):
            best = min(best, _dev_distance(theta, t, edge))
    return best


@dataclass(frozen=True)
class CoverReport:
    samples: int
    accepted: int
    covered: int
    all_tall: bool
    disjoint_from_curve: bool

    @property
    def coverage(self) -> float:
        return 1.0 if self.accepted == 0 else self.covered / self.accepted


def verify_tall_cover(curve: BoundaryCurve, rects, T: float,
                      samples: int = 10_000, rng=None) -> CoverReport:
    """Rejection-sample the band and check the cover certificate."""
    rng = rng if rng is not None else np.random.default_rng(0)
    margin = cover_margin(height(curve).h)
    thetas = rng.uniform(0.0, TWO_PI, size=samples)
    ts = rng.uniform(-T, T, size=samples)
    accepted = covered = 0
    for theta, t in zip(thetas, ts):
        if distance_to_cylinder_part(curve, theta, t) <= margin:
            continue
        accepted += 1
        if any(rect.contains(theta, t) for rect in rects):
            covered += 1
    all_tall = all(rect.t_interval[1] - rect.t_interval[0] > math.pi for rect in rects)
    disjoint = all(
        not _rect_meets_cylinder(curve, rect)
        for rect in rects
    )
    return CoverReport(samples, accepted, covered, all_tall, disjoint)


def _rect_meets_cylinder(curve: BoundaryCurve, rect: TallRectangle) -> bool:
    a, b = rect.theta_interval
    t1, t2 = rect.t_interval
    eps = 1e-12
    box = ((a + eps, t1 + eps), (b - eps, t2 - eps))
    ray_edges = [d for ray in _curve_rays(curve) for d in _dev_segments(ray)]
    for edge in _cylinder_edges(curve) + ray_edges:
        for shift in (-TWO_PI, 0.0, TWO_PI):
            e = ((edge[0][0] + shift, edge[0][1]), (edge[1][0] + shift, edge[1][1]))
            if _segment_meets_open_box(e, box):
                return True
    return False


def _segment_meets_open_box(seg, box) -> bool:
    (x1, y1), (x2, y2) = seg
    (bx1, by1), (bx2, by2) = box
    # Clip the segment to the box with the Liang-Barsky test.
    dx, dy = x2 - x1, y2 - y1
    t0, t1 = 0.0, 1.0
    for p, q in (
        (-dx, x1 - bx1),
        (dx, bx2 - x1),
        (-dy, y1 - by1),
        (dy, by2 - y1),
    ):
        if abs(p) < 1e-30:
            if q < 0:
                return False
            continue
        ratio = q / p
        if p < 0:
            t0 = max(t0, ratio)
        else:
            t1 = min(t1, ratio)
        if t0 > t1:
            return False
    return True


# ---------------------------------------------------------------------------
# Curve-level condition checks


def corner_check(curve: BoundaryCurve) -> bool:
    """Nonoverlapping at the corner: no corner-arc segments."""
    return not any(
        isinstance(seg, CornerArc)
        for comp in curve.components
        for seg in comp.segments
    )


def cap_geodesic_check(curve: BoundaryCurve) -> bool:
    """No non-geodesic cap paths."""
    return not any(
        isinstance(seg, CapArc)
        for comp in curve.components
        for seg in comp.segments
    )


def endpoints_distinct_check(curve: BoundaryCurve, tol: float = 1e-9) -> bool:
    """Within each cap: geodesic endpoints pairwise distinct, no crossings."""
    dec = decompose(curve)
    for cap in CAPS:
        geos = dec.cap_geodesics[cap]
        for i in range(len(geos)):
            for j in range(i + 1, len(geos)):
                if shares_endpoint(geos[i], geos[j], tol):
                    return False
                if geodesics_cross(geos[i], geos[j]):
                    return False
    return True


# ---------------------------------------------------------------------------
# Thin-tail diagnostic


@dataclass(frozen=True)
class ThinTailWitness:
    arc: tuple[tuple[float, float], ...]
    line_theta: float
    band: tuple[float, float]


def _polyline_chains(curve: BoundaryCurve):
    """Cylinder polylines with a closed flag (single-arc loop components)."""
    chains = []
    for comp in curve.components:
        for seg in comp.segments:
            if isinstance(seg, CylinderArc):
                closed = (
                    len(comp.segments) == 1
                    and _nodes_equal(*_segment_nodes(seg))
                )
                chains.append((list(seg.points), closed))
    return chains


def _one_sided_extent(points, closed, k, sign):
    """t-extent of the maximal arc around vertex k staying on one side of
    the vertical line through it (sign +1: theta <= theta_k)."""
    theta0 = points[k][0]
    n = len(points)
    ts = [points[k][1]]
    arc = [points[k]]

    def extend(direction):
        idx = k
        a_cur = theta0
        t_cur = points[k][1]
        steps = 0
        while steps < n:
            nxt = idx + direction
            if closed:
                nxt_i = nxt % n
            else:
                if nxt < 0 or nxt >= n:
                    return
                nxt_i = nxt
            a_nxt, t_nxt = points[nxt_i]
            if closed:
                # Continue the lift from the current accumulated angle.
                while a_nxt - a_cur > math.pi:
                    a_nxt -= TWO_PI
                while a_nxt - a_cur < -math.pi:
                    a_nxt += TWO_PI
            delta = sign * (a_nxt - theta0)
            if delta > 1e-12:
                # The edge crosses the line; cut at the crossing.
                frac = (theta0 - a_cur) / (a_nxt - a_cur)
                t_cross = t_cur + frac * (t_nxt - t_cur)
                ts.append(t_cross)
                arc.append((theta0, t_cross))
                return
            ts.append(t_nxt)
            arc.append((a_nxt, t_nxt))
            idx, a_cur, t_cur = nxt, a_nxt, t_nxt
            steps += 1

    extend(-1)
    extend(+1)
    return max(ts) - min(ts), arc, min(ts)


def thin_tail_scan(curve: BoundaryCurve) -> ThinTailWitness | None:
    """Sufficient thin-tail detector around theta-extrema of the cylinder part.

    Finds an arc that touches a vertical line, stays on one side of it, has
    endpoints off the line, and fits inside an open band of height pi.
    Returning None does not prove absence.
    """
    for points, closed in _polyline_chains(curve):
        n = len(points)
        rng_idx = range(n) if closed else range(1, n - 1)
        for k in rng_idx:
            a_prev = points[(k - 1) % n][0]
            a_here = points[k][0]
            a_next = points[(k + 1) % n][0]
            if closed:
                while a_prev - a_here > math.pi:
                    a_prev -= TWO_PI
                while a_prev - a_here < -math.pi:
                    a_prev += TWO_PI
                while a_next - a_here > math.pi:
                    a_next -= TWO_PI
                while a_next - a_here < -math.pi:
                    a_next += TWO_PI
            if a_prev < a_here and a_next < a_here:
                sign = +1  # local max: arc stays at theta <= theta_k
            elif a_prev > a_here and a_next > a_here:
                sign = -1
            else:
                continue
            extent, arc, t_min = _one_sided_extent(points, closed, k, sign)
            if extent < math.pi - 1e-9:
                pad = (math.pi - extent) / 2.0
                return ThinTailWitness(
                    arc=tuple(arc),
                    line_theta=normalize_angle(points[k][0]),
                    band=(t_min - pad, t_min - pad + math.pi),
                )
    return None
