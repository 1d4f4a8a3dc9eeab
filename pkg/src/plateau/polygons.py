"""Ideal polygons with alternating side labels and truncated-length sums.

An alternating 2n-gon carries labels ``alpha``/``beta`` on its sides, in
strict alternation.  For a decorated polygon, ``alpha_total`` / ``beta_total``
are the sums of truncated side lengths by label; their difference
(``ab_gap``) is independent of both the decoration and the chart, because
every vertex of an alternating polygon meets exactly one alpha and one beta
side, so the per-vertex horoball and chart factors cancel.

A polygon is *fat* when the alpha total is smaller than the beta total,
*skinny* when larger, *exact* when equal (within tolerance) and regular.
Regularity quantifies over proper inscribed sub-polygons D: both
``2*a(D) < |D|`` and ``2*b(D) < |D|`` must hold for all sufficiently small
horoballs.  Shrinking the horoball at a vertex v by s changes
``2*a(D) - |D|`` by ``(2*deg_alpha(v; D) - 2) * s`` with
``deg_alpha <= 1``, so the quantity is non-increasing in every shrink: the
inequality holds in the small-horoball limit unless every vertex of D meets
an alpha side of D, in which case it is decoration-free and is evaluated at
the canonical decoration.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum

from .errors import TooLarge
from .hyperbolic import (
    Decoration,
    Geodesic,
    HalfPlaneChart,
    IdealPoint,
    MobiusMap,
    ccw_gap,
    chart_avoiding,
    normalize_angle,
    truncated_length,
)

# Maximum n for exhaustive inscribed-polygon enumeration (2n vertices).
MAX_ENUM_N = 8

TOL_EXACT = 1e-9


class Fatness(Enum):
    FAT = "fat"
    SKINNY = "skinny"
    EXACT = "exact"


@dataclass(frozen=True)
class IdealPolygon:
    """Ideal polygon given by circularly ordered (CCW) distinct vertices."""

    vertices: tuple[IdealPoint, ...]

    def __post_init__(self):
        verts = tuple(self.vertices)
        if len(verts) < 3:
            raise ValueError("an ideal polygon needs at least 3 vertices")
        # Normalize the rotation so the smallest angle comes first, then
        # check strict circular order.
        start = min(range(len(verts)), key=lambda i: verts[i].theta)
        verts = verts[start:] + verts[:start]
        for i in range(len(verts) - 1):
            if verts[i + 1].theta <= verts[i].theta:
                raise ValueError("vertices must be distinct and in circular order")
        object.__setattr__(self, "vertices", verts)

    @staticmethod
    def of(*angles: float) -> "IdealPolygon":
        return IdealPolygon(tuple(IdealPoint(a) for a in angles))

    def __len__(self) -> int:
        return len(self.vertices)

    def side(self, i: int) -> Geodesic:
        n = len(self.vertices)
        return Geodesic(self.vertices[i % n], self.vertices[(i + 1) % n])

    def sides(self) -> list[Geodesic]:
        return [self.side(i) for i in range(len(self.vertices))]


@dataclass(frozen=True)
class AlternatingPolygon:
    """Ideal 2n-gon whose sides alternate between alpha and beta labels.

    ``alpha_sides[i]`` labels the side from vertex i to vertex i+1.
    """

    polygon: IdealPolygon
    alpha_sides: tuple[bool, ...]

    def __post_init__(self):
        n = len(self.polygon)
        flags = tuple(bool(f) for f in self.alpha_sides)
        if n % 2 != 0:
            raise ValueError("alternating polygons have an even side count")
        if len(flags) != n:
            raise ValueError("one label per side required")
        for i in range(n):
            if flags[i] == flags[(i + 1) % n]:
                raise ValueError("alpha/beta labels must strictly alternate")
        object.__setattr__(self, "alpha_sides", flags)

    @staticmethod
    def of(angles, alpha_first: bool = True) -> "AlternatingPolygon":
        poly = IdealPolygon.of(*angles)
        flags = tuple((i % 2 == 0) == alpha_first for i in range(len(poly)))
        return AlternatingPolygon(poly, flags)

    @property
    def vertices(self) -> tuple[IdealPoint, ...]:
        return self.polygon.vertices

    def __len__(self) -> int:
        return len(self.polygon)

    def side(self, i: int) -> Geodesic:
        return self.polygon.side(i)

    def side_label(self, i: int) -> str:
        return "alpha" if self.alpha_sides[i % len(self)] else "beta"

    def alpha_geodesics(self) -> list[Geodesic]:
        return [self.side(i) for i in range(len(self)) if self.alpha_sides[i]]

    def beta_geodesics(self) -> list[Geodesic]:
        return [self.side(i) for i in range(len(self)) if not self.alpha_sides[i]]

    def swap_labels(self) -> "AlternatingPolygon":
        return AlternatingPolygon(self.polygon, tuple(not f for f in self.alpha_sides))

    def transform(self, mob: MobiusMap) -> "AlternatingPolygon":
        """Apply an isometry, keeping each label attached to its side."""
        n = len(self)
        new_pts = [mob.apply(v) for v in self.vertices]
        start = min(range(n), key=lambda i: new_pts[i].theta)
        verts = tuple(new_pts[start:] + new_pts[:start])
        flags = tuple(self.alpha_sides[(start + i) % n] for i in range(n))
        return AlternatingPolygon(IdealPolygon(verts), flags)


@dataclass(frozen=True)
class InscribedPolygon:
    """Sub-polygon on a vertex subset of an ambient alternating polygon.

    Sides that coincide with ambient sides keep the ambient label
    (alpha/beta); diagonals are labeled gamma.
    """

    ambient: AlternatingPolygon
    indices: tuple[int, ...]  # strictly increasing ambient vertex indices
    labels: tuple[str, ...]  # per side, "alpha" | "beta" | "gamma"

    def __len__(self) -> int:
        return len(self.indices)

    def side(self, i: int) -> Geodesic:
        k = len(self.indices)
        a = self.ambient.vertices[self.indices[i % k]]
        b = self.ambient.vertices[self.indices[(i + 1) % k]]
        return Geodesic(a, b)

    def vertex_alpha_degree(self, i: int) -> int:
        k = len(self.indices)
        return int(self.labels[i % k] == "alpha") + int(self.labels[(i - 1) % k] == "alpha")

    def vertex_beta_degree(self, i: int) -> int:
        k = len(self.indices)
        return int(self.labels[i % k] == "beta") + int(self.labels[(i - 1) % k] == "beta")


@dataclass(frozen=True)
class TruncatedSums:
    """Truncated length totals by side label; total = a + b + c."""

    alpha_total: float
    beta_total: float
    diagonal_total: float
    total: float

    def __post_init__(self):
        expected = self.alpha_total + self.beta_total + self.diagonal_total
        if abs(self.total - expected) > 1e-12 * max(1.0, abs(expected)):
            raise ValueError("total must equal a + b + c")


def _sum_by_label(sides_with_labels, dec: Decoration, chart: HalfPlaneChart) -> TruncatedSums:
    totals = {"alpha": 0.0, "beta": 0.0, "gamma": 0.0}
    for geod, label in sides_with_labels:
        totals[label] += truncated_length(geod, dec, chart)
    return TruncatedSums(
        alpha_total=totals["alpha"],
        beta_total=totals["beta"],
        diagonal_total=totals["gamma"],
        total=totals["alpha"] + totals["beta"] + totals["gamma"],
    )


def truncated_sums(poly, dec: Decoration | None = None,
                   chart: HalfPlaneChart | None = None) -> TruncatedSums:
    """Truncated side-length sums of an alternating or inscribed polygon."""
    dec = dec or Decoration.unit()
    if isinstance(poly, AlternatingPolygon):
        chart = chart or chart_avoiding(poly.vertices)
        sides = [(poly.side(i), poly.side_label(i)) for i in range(len(poly))]
    elif isinstance(poly, InscribedPolygon):
        chart = chart or chart_avoiding(poly.ambient.vertices)
        sides = [(poly.side(i), poly.labels[i]) for i in range(len(poly))]
    else:
        raise TypeError("expected an AlternatingPolygon or InscribedPolygon")
    return _sum_by_label(sides, dec, chart)


def ab_gap(poly: AlternatingPolygon, dec: Decoration | None = None) -> float:
    """alpha total minus beta total, canonical decoration by default.

    Independent of decoration and chart for alternating polygons; swapping
    the labels negates it exactly.
    """
    sums = truncated_sums(poly, dec=dec)
    return sums.alpha_total - sums.beta_total


def classify_fatness(poly: AlternatingPolygon, tol_exact: float = TOL_EXACT) -> Fatness:
    gap = ab_gap(poly)
    if gap < -tol_exact:
        return Fatness.FAT
    if gap > tol_exact:
        return Fatness.SKINNY
    return Fatness.EXACT


def enumerate_inscribed(poly: AlternatingPolygon) -> list[InscribedPolygon]:
    """All proper inscribed polygons (vertex subsets of size >= 3).

    Raises TooLarge beyond 2n = 16 vertices to keep the enumeration
    exhaustive but bounded.
    """
    n2 = len(poly)
    if n2 > 2 * MAX_ENUM_N:
        raise TooLarge(f"inscribed enumeration capped at {2 * MAX_ENUM_N} vertices")
    out = []
    for size in range(3, n2):
        for subset in itertools.combinations(range(n2), size):
            labels = []
            for j in range(size):
                a, b = subset[j], subset[(j + 1) % size]
                if (b - a) % n2 == 1:
                    labels.append(poly.side_label(a))
                else:
                    labels.append("gamma")
            insc = InscribedPolygon(poly, subset, tuple(labels))
            # Structural sanity: one alpha and one beta at most per vertex.
            for j in range(size):
                assert insc.vertex_alpha_degree(j) <= 1
                assert insc.vertex_beta_degree(j) <= 1
            out.append(insc)
    return out


@dataclass(frozen=True)
class RegularityReport:
    regular: bool
    witness: InscribedPolygon | None = None
    failed_inequality: str | None = None  # "2a<|D|" or "2b<|D|"


def _chord_table(poly: AlternatingPolygon) -> dict[tuple[int, int], float]:
    """Truncated lengths of all vertex-pair geodesics, canonical decoration."""
    chart = chart_avoiding(poly.vertices)
    dec = Decoration.unit()
    table = {}
    n2 = len(poly)
    for i in range(n2):
        for j in range(i + 1, n2):
            g = Geodesic(poly.vertices[i], poly.vertices[j])
            table[(i, j)] = truncated_length(g, dec, chart)
    return table


def is_regular(poly: AlternatingPolygon, return_report: bool = False):
    """Check 2a(D) < |D| and 2b(D) < |D| for every proper inscribed D.

    Small-horoball semantics: a side of the inequality that some vertex of D
    does not support (no incident alpha side, resp. beta side) holds in the
    shrink limit automatically; when every vertex supports it, the quantity
    is decoration-free and is evaluated at the canonical decoration.
    """
    table = _chord_table(poly)
    report = RegularityReport(True)
    for insc in enumerate_inscribed(poly):
        k = len(insc)
        length = {"alpha": 0.0, "beta": 0.0, "gamma": 0.0}
        for j in range(k):
            a, b = insc.indices[j], insc.indices[(j + 1) % k]
            key = (min(a, b), max(a, b))
            length[insc.labels[j]] += table[key]
        every_vertex_alpha = all(insc.vertex_alpha_degree(j) == 1 for j in range(k))
        every_vertex_beta = all(insc.vertex_beta_degree(j) == 1 for j in range(k))
        q_a = length["alpha"] - length["beta"] - length["gamma"]
        q_b = length["beta"] - length["alpha"] - length["gamma"]
        if every_vertex_alpha and q_a >= 0.0:
            report = RegularityReport(False, insc, "2a<|D|")
            break
        if every_vertex_beta and q_b >= 0.0:
            report = RegularityReport(False, insc, "2b<|D|")
            break
    if return_report:
        return report
    return report.regular


def regularity_at_scale(poly: AlternatingPolygon, scale: float):
    """Regularity evaluated at one uniform finite horoball scale.

    Sensitivity probe: no shrink limit is taken, the inequalities are simply
    evaluated with sigma = scale everywhere.  Returns (regular, witness).
    """
    if scale <= 0.0:
        raise ValueError("horoball scale must be positive")
    table = _chord_table(poly)
    shift = -2.0 * math.log(scale)  # each side length changes by this much
    for insc in enumerate_inscribed(poly):
        k = len(insc)
        length = {"alpha": 0.0, "beta": 0.0, "gamma": 0.0}
        count = {"alpha": 0, "beta": 0, "gamma": 0}
        for j in range(k):
            a, b = insc.indices[j], insc.indices[(j + 1) % k]
            length[insc.labels[j]] += table[(min(a, b), max(a, b))]
            count[insc.labels[j]] += 1
        la = length["alpha"] + shift * count["alpha"]
        lb = length["beta"] + shift * count["beta"]
        lc = length["gamma"] + shift * count["gamma"]
        if la - lb - lc >= 0.0:
            return False, insc
        if lb - la - lc >= 0.0:
            return False, insc
    return True, None


def is_exact(poly: AlternatingPolygon, tol_exact: float = TOL_EXACT) -> bool:
    """Regular and with alpha/beta totals equal within tolerance."""
    return is_regular(poly) and classify_fatness(poly, tol_exact) is Fatness.EXACT


def random_alternating_polygon(rng, n: int, min_gap: float = 0.05) -> AlternatingPolygon:
    """Random alternating 2n-gon with a minimum angular gap between vertices."""
    while True:
        angles = sorted(rng.uniform(0.0, 2.0 * math.pi, size=2 * n))
        gaps = [angles[i + 1] - angles[i] for i in range(2 * n - 1)]
        gaps.append(2.0 * math.pi - angles[-1] + angles[0])
        if min(gaps) > min_gap:
            return AlternatingPolygon.of(angles)


def hull_polygon(points) -> IdealPolygon:
    """Ideal polygon on a set of >= 3 distinct circle points (sorted CCW)."""
    ordered = sorted(points, key=lambda p: p.theta)
    return IdealPolygon(tuple(ordered))
