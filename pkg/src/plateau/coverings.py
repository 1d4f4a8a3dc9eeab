"""Constructive coverings of fat polygons by exact polygons.

Two covering styles are provided.  The per-vertex covering replaces one
vertex at a time: the replacement slides along the adjacent beta arc and the
exactness equation ``a = b`` is solved by bisection (the gap is monotone
along the arc and changes sign, so bisection always lands).  The special
covering keeps one alpha side fixed per piece and pushes every other vertex
outward by a single displacement parameter, again solved to exactness; all
beta sides of those pieces lie outside the covered polygon.  Corner regions
(a base side plus corner points on the far arc) are covered by exact
(2e+2)-gons with vertex pairs placed symmetrically around each corner point
at a one-parameter spread.

Every returned piece carries its exactness residual; coverage and
side-avoidance are verified statistically by ``verify_cover``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BisectionFailed, CoverageIncomplete, NotFat
from .hyperbolic import Geodesic, IdealPoint, ccw_gap, normalize_angle
from .polygons import (
    AlternatingPolygon,
    Fatness,
    IdealPolygon,
    TOL_EXACT,
    ab_gap,
    classify_fatness,
    is_regular,
)
from .region import beyond_chord, chord_crosses_interior, polygon_contains, sample_polygon

MAX_FILL_IN = 8


@dataclass(frozen=True)
class CoverMove:
    vertex_index: int
    original: IdealPoint
    replacement: IdealPoint
    residual: float


@dataclass(frozen=True)
class ExactCovering:
    style: str  # "per_vertex" | "special" | "corner"
    pieces: tuple[AlternatingPolygon, ...]
    moves: tuple[tuple[CoverMove, ...], ...]

    def residuals(self) -> list[float]:
        return [max(abs(m.residual) for m in ms) if ms else 0.0 for ms in self.moves]


def _alternating(vertices, flags) -> AlternatingPolygon:
    """Alternating polygon with labels kept attached through rotation."""
    n = len(vertices)
    start = min(range(n), key=lambda i: vertices[i].theta)
    verts = tuple(vertices[start:] + vertices[:start])
    fl = tuple(flags[(start + i) % n] for i in range(n))
    return AlternatingPolygon(IdealPolygon(verts), fl)


def _starts_alpha(poly: AlternatingPolygon, i: int) -> bool:
    """Whether vertex i is the tail of its alpha side (each vertex of an
    alternating polygon meets exactly one alpha side)."""
    return poly.alpha_sides[i % len(poly)]


def _bisect_exactness(gap_fn, tol: float = TOL_EXACT, max_iter: int = 200,
                      probe: int = 32):
    """Root of gap_fn on (0, 1) by bracketed bisection.

    Probes the arc first (geometric tails plus a uniform grid) to find a
    sign change; raises BisectionFailed when none exists.  Returns
    (s_root, residual, monotone_flag).
    """
    # Probe tails stay clear of s = 0 and s = 1 so candidate vertices never
    # collide with their neighbors within the coincidence tolerance.
    tails = [2.0 ** -k for k in range(2, 31, 3)]
    grid = list(np.linspace(0.05, 0.95, probe - 2 * len(tails)))
    svals = sorted(set(tails + grid + [1.0 - t for t in tails]))
    gaps = [gap_fn(s) for s in svals]
    diffs = [g2 - g1 for g1, g2 in zip(gaps, gaps[1:])]
    monotone = all(d >= 0.0 for d in diffs) or all(d <= 0.0 for d in diffs)
    lo = hi = None
    for i in range(len(svals) - 1):
        if gaps[i] == 0.0:
            return svals[i], 0.0, monotone
        if gaps[i] * gaps[i + 1] < 0.0:
            lo, hi = svals[i], svals[i + 1]
            g_lo = gaps[i]
            break
    else:
        if gaps[-1] == 0.0:
            return svals[-1], 0.0, monotone
        raise BisectionFailed(
            f"no sign change on the search arc (gap range [{min(gaps):.3g}, {max(gaps):.3g}])"
        )
    for _ in range(max_iter):
        mid = (lo + hi) / 2.0
        g_mid = gap_fn(mid)
        if abs(g_mid) <= tol:
            return mid, g_mid, monotone
        if g_lo * g_mid < 0.0:
            hi = mid
        else:
            lo, g_lo = mid, g_mid
    mid = (lo + hi) / 2.0
    residual = gap_fn(mid)
    if abs(residual) > tol:
        raise BisectionFailed(f"bisection stalled with residual {residual:.3g}")
    return mid, residual, monotone


def exact_cover_per_vertex(poly: AlternatingPolygon,
                           tol_exact: float = TOL_EXACT) -> ExactCovering:
    """One exact piece per vertex; the replaced vertex slides into the
    adjacent beta arc until the alpha and beta totals agree."""
    if classify_fatness(poly, tol_exact) is not Fatness.FAT:
        raise NotFat("per-vertex covering requires a strictly fat polygon")
    base = poly
    n2 = len(base)
    verts = list(base.vertices)
    flags = list(base.alpha_sides)
    pieces: list[AlternatingPolygon] = []
    moves: list[tuple[CoverMove, ...]] = []
    for i in range(n2):
        if _starts_alpha(base, i):
            # Tail of its alpha side: slide clockwise into the preceding beta arc.
            span = ccw_gap(verts[(i - 1) % n2].theta, verts[i].theta)

            def theta_of(s, i=i, span=span):
                return verts[i].theta - s * span
        else:
            # Head of its alpha side: slide counterclockwise into the next beta arc.
            span = ccw_gap(verts[i].theta, verts[(i + 1) % n2].theta)

            def theta_of(s, i=i, span=span):
                return verts[i].theta + s * span

        def make(s, i=i, theta_of=theta_of):
            replaced = verts.copy()
            replaced[i] = IdealPoint(theta_of(s))
            return _alternating(replaced, flags)

        s_root, residual, _mono = _bisect_exactness(
            lambda s: ab_gap(make(s)), tol=tol_exact
        )
        piece = make(s_root)
        pieces.append(piece)
        moves.append((CoverMove(i, verts[i], IdealPoint(theta_of(s_root)), residual),))
    return ExactCovering("per_vertex", tuple(pieces), tuple(moves))


def _special_piece(base: AlternatingPolygon, fixed_side: int | None, budget_scale,
                   tol_exact: float):
    """One special-covering piece: the alpha side ``fixed_side`` stays, every
    other vertex moves outward by a common parameter, solved to exactness.

    ``budget_scale`` is a scalar or a per-vertex-index map of scalars.
    """
    n2 = len(base)
    verts = list(base.vertices)
    flags = list(base.alpha_sides)
    fixed = set()
    if fixed_side is not None:
        fixed = {fixed_side, (fixed_side + 1) % n2}

    def scale_of(i):
        if isinstance(budget_scale, dict):
            return budget_scale.get(i, 1.0)
        return budget_scale

    plans = []  # (index, direction, budget)
    for i in range(n2):
        if i in fixed:
            continue
        if _starts_alpha(base, i):
            other = (i - 1) % n2
            span = ccw_gap(verts[other].theta, verts[i].theta)
            direction = -1.0
        else:
            other = (i + 1) % n2
            span = ccw_gap(verts[i].theta, verts[other].theta)
            direction = +1.0
        # Both endpoints of a beta arc move into it unless one is fixed;
        # a lone mover may eat almost the whole arc.
        budget = span / 2.0 if other not in fixed else 0.98 * span
        plans.append((i, direction, scale_of(i) * budget))

    def make(s):
        replaced = verts.copy()
        for i, direction, half in plans:
            replaced[i] = IdealPoint(verts[i].theta + direction * s * half)
        return _alternating(replaced, flags)

    s_root, residual, _mono = _bisect_exactness(lambda s: ab_gap(make(s)), tol=tol_exact)
    piece = make(s_root)
    mv = tuple(
        CoverMove(i, verts[i], IdealPoint(verts[i].theta + d * s_root * half), residual)
        for i, d, half in plans
    )
    return piece, mv


def exact_cover_special(poly: AlternatingPolygon, i0: int = 0,
                        tol_exact: float = TOL_EXACT,
                        samples: int = 2000, rng=None) -> ExactCovering:
    """Special covering: one piece per alpha side (all beta sides outside the
    polygon), plus up to MAX_FILL_IN all-vertex fill-in pieces for any
    uncovered interior."""
    if classify_fatness(poly, tol_exact) is not Fatness.FAT:
        raise NotFat("special covering requires a strictly fat polygon")
    base = poly
    n = len(base) // 2
    if not 0 <= i0 < n:
        raise ValueError(f"alpha side index {i0} out of range (n = {n})")
    rng = rng if rng is not None else np.random.default_rng(0)
    alpha_sides = [i for i in range(len(base)) if base.alpha_sides[i]]

    pieces: list[AlternatingPolygon] = []
    moves: list[tuple[CoverMove, ...]] = []
    for k in range(n):
        side = alpha_sides[(i0 + k) % n]
        piece, mv = _special_piece(base, side, 1.0, tol_exact)
        pieces.append(piece)
        moves.append(mv)

    pts = sample_polygon([v.theta for v in base.vertices], samples, rng)

    def uncovered(points):
        mask = np.zeros(len(points), dtype=bool)
        for piece in pieces:
            mask |= polygon_contains([v.theta for v in piece.vertices], points)
        return points[~mask]

    # Fill-in candidates: the all-vertex piece for the middle, one strip
    # piece hugging each beta side, then shrunk all-vertex variants.
    beta_sides = [i for i in range(len(base)) if not base.alpha_sides[i]]
    candidates: list = [1.0]
    for j in beta_sides:
        candidates.append({j: 0.08, (j + 1) % len(base): 0.08})
    candidates.extend([0.5, 0.25])

    missing = uncovered(pts)
    fill = 0
    for scale in candidates:
        if len(missing) == 0 or fill >= MAX_FILL_IN:
            break
        try:
            piece, mv = _special_piece(base, None, scale, tol_exact)
        except BisectionFailed:
            continue
        pieces.append(piece)
        moves.append(mv)
        fill += 1
        missing = uncovered(pts)
    if len(missing) > 0:
        raise CoverageIncomplete(
            f"{len(missing)} of {samples} sampled points remain uncovered",
            uncovered=missing,
        )
    return ExactCovering("special", tuple(pieces), tuple(moves))


# ---------------------------------------------------------------------------
# Corner regions


@dataclass(frozen=True)
class CornerRegionSpec:
    """Base side plus corner points strictly inside the arc beyond it.

    The region is the hull of the base endpoints and the corner points; the
    covering pieces keep the base side as an alpha side and straddle each
    corner point with an alpha side of their own.
    """

    base: Geodesic
    corner_points: tuple[float, ...]

    def __post_init__(self):
        pts = tuple(normalize_angle(q) for q in self.corner_points)
        a, b = self.base.p.theta, self.base.q.theta
        inside_pq = [0.0 < ccw_gap(a, q) < ccw_gap(a, b) for q in pts]
        if all(inside_pq):
            start, end = a, b
        elif not any(inside_pq):
            start, end = b, a
        else:
            raise ValueError("corner points must all lie in one arc of the base side")
        ordered = tuple(sorted(pts, key=lambda q: ccw_gap(start, q)))
        object.__setattr__(self, "corner_points", ordered)
        object.__setattr__(self, "_arc", (start, end))

    @property
    def arc(self) -> tuple[float, float]:
        """CCW arc (start, end) beyond the base side holding the corner points."""
        return self._arc

    def region_angles(self) -> list[float]:
        start, _end = self.arc
        pts = [self.base.p.theta, self.base.q.theta] + list(self.corner_points)
        return sorted(pts, key=normalize_angle)


def corner_cover(spec: CornerRegionSpec, tol_exact: float = TOL_EXACT) -> ExactCovering:
    """Exact (2e+2)-gon covering a corner region up to the approach lenses.

    Vertex pairs sit symmetrically around each corner point at a spread
    driven by one scalar; exactness is solved by bisection.  The returned
    union covers the region hull minus the lens at each corner point cut off
    by the straddling alpha side.
    """
    e = len(spec.corner_points)
    if e < 1:
        raise ValueError("a corner region needs at least one corner point "
                         "(lens regions are handled by infinite rectangles)")
    start, end = spec.arc
    markers = [start] + list(spec.corner_points) + [end]
    gaps = [ccw_gap(markers[i], markers[i + 1]) for i in range(len(markers) - 1)]
    budgets = [min(gaps[j], gaps[j + 1]) / 2.0 for j in range(e)]

    def make(s):
        vertices = [IdealPoint(start)]
        flags = [False]  # side start -> x_1 is beta
        for j, q in enumerate(spec.corner_points):
            u = s * budgets[j]
            vertices.append(IdealPoint(q - u))
            vertices.append(IdealPoint(q + u))
            flags.extend([True, False])  # alpha straddling q, then beta
        vertices.append(IdealPoint(end))
        flags.append(True)  # closing side back through the base arc: tau, alpha
        return _alternating(vertices, flags)

    s_root, residual, _mono = _bisect_exactness(lambda s: ab_gap(make(s)), tol=tol_exact)
    piece = make(s_root)
    # Interleaving sanity: each corner point sits inside its alpha side.
    for j, q in enumerate(spec.corner_points):
        u = s_root * budgets[j]
        assert ccw_gap(normalize_angle(q - u), q) < ccw_gap(normalize_angle(q - u), normalize_angle(q + u))
    mv = tuple(
        CoverMove(2 * j + 1, IdealPoint(q), IdealPoint(q - s_root * budgets[j]), residual)
        for j, q in enumerate(spec.corner_points)
    )
    return ExactCovering("corner", (piece,), (mv,))


# ---------------------------------------------------------------------------
# Verification


@dataclass(frozen=True)
class CoverVerification:
    residuals: tuple[float, ...]
    coverage: float
    samples: int
    avoidance: bool
    pieces_regular: bool | None = None

    @property
    def max_residual(self) -> float:
        return max(self.residuals) if self.residuals else 0.0


def verify_cover(poly: AlternatingPolygon, cov: ExactCovering,
                 samples: int = 10_000, rng=None,
                 check_regularity: bool = False) -> CoverVerification:
    """Independent check of a covering: residuals, sampled coverage, and
    alpha-side avoidance (no piece interior crosses an alpha side of poly)."""
    rng = rng if rng is not None else np.random.default_rng(0)
    residuals = tuple(abs(ab_gap(piece)) for piece in cov.pieces)
    pts = sample_polygon([v.theta for v in poly.vertices], samples, rng)
    mask = np.zeros(len(pts), dtype=bool)
    for piece in cov.pieces:
        mask |= polygon_contains([v.theta for v in piece.vertices], pts)
    coverage = float(mask.sum()) / float(samples)
    avoidance = True
    alphas = poly.alpha_geodesics()
    for piece in cov.pieces:
        angles = [v.theta for v in piece.vertices]
        for alpha in alphas:
            if chord_crosses_interior(alpha, angles):
                avoidance = False
    regular = None
    if check_regularity:
        regular = all(is_regular(piece) for piece in cov.pieces)
    return CoverVerification(residuals, coverage, samples, avoidance, regular)


def verify_corner_cover(spec: CornerRegionSpec, cov: ExactCovering,
                        samples: int = 5000, rng=None) -> CoverVerification:
    """Coverage of the corner-region hull minus the approach lens at each
    corner point, plus exactness residuals."""
    rng = rng if rng is not None else np.random.default_rng(0)
    residuals = tuple(abs(ab_gap(piece)) for piece in cov.pieces)
    region = spec.region_angles()
    pts = sample_polygon(region, samples, rng)
    keep = np.ones(len(pts), dtype=bool)
    for q in spec.corner_points:
        for piece in cov.pieces:
            side = _straddling_side(piece, q)
            if side is None:
                continue
            lens = np.array([beyond_chord(side, x, y, arc_ref=q) for x, y in pts])
            keep &= ~lens
    pts = pts[keep]
    mask = np.zeros(len(pts), dtype=bool)
    for piece in cov.pieces:
        mask |= polygon_contains([v.theta for v in piece.vertices], pts)
    coverage = 1.0 if len(pts) == 0 else float(mask.sum()) / float(len(pts))
    return CoverVerification(residuals, coverage, len(pts), True)


def _straddling_side(piece: AlternatingPolygon, q: float):
    for i in range(len(piece)):
        if piece.alpha_sides[i] and angle_strictly_inside(q, piece.side(i)):
            return piece.side(i)
    return None


def angle_strictly_inside(q: float, side: Geodesic) -> bool:
    """Whether q lies strictly inside the shorter arc of the side."""
    a, b = side.p.theta, side.q.theta
    lo, hi = (a, b) if ccw_gap(a, b) <= math.pi else (b, a)
    return 0.0 < ccw_gap(lo, q) < ccw_gap(lo, hi)
