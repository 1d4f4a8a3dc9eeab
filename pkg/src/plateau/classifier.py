"""Strong-fillability classifier with verifiable certificates.

A tame curve at infinity is strongly fillable exactly when four conditions
hold together: its open cap traces are geodesics, the curve is tall, it is
nonoverlapping at the corner circles, and it is fat at infinity.  All four
conditions are evaluated (never short-circuited) so a failing curve reports
every reason at once.

Being fat at infinity is decided on the cap hulls: the endpoints of the cap
geodesics span an ideal polygon per cap, the geodesics cut it into faces,
each face inherits alpha labels from the curve's geodesics, and every face
must be regular and fat.  A single skinny face is already decisive the
other way.  Curves with an exact face (and no skinny one), or with a
non-regular non-skinny face, are exceptional and stay unclassified.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .constructions import vertical_separation_check
from .coverings import (
    CornerRegionSpec,
    ExactCovering,
    corner_cover,
    exact_cover_per_vertex,
)
from .curves import (
    BoundaryCurve,
    Decomposition,
    HeightReport,
    TallRectangle,
    Tallness,
    band_extent,
    cap_geodesic_check,
    corner_check,
    decompose,
    endpoints_distinct_check,
    height,
    is_tall,
    tall_cover,
    thin_tail_scan,
    validate,
)
from .errors import (
    BisectionFailed,
    CoverageIncomplete,
    CrossingChords,
    DegenerateHull,
    InvalidCurve,
    PrecheckFailed,
)
from .hyperbolic import Geodesic, IdealPoint, ccw_gap, geodesics_cross
from .polygons import (
    AlternatingPolygon,
    Fatness,
    IdealPolygon,
    RegularityReport,
    TOL_EXACT,
    ab_gap,
    classify_fatness,
    is_regular,
)

# Reason tags for negative verdicts.
NON_GEODESIC_CAP = "non_geodesic_cap"
SHARED_CAP_ENDPOINTS = "shared_cap_endpoints"
NOT_TALL = "not_tall"
CORNER_OVERLAP = "corner_overlap"
SKINNY_FACE = "skinny_face"

# Verdict kinds.
STRONGLY_FILLABLE = "strongly_fillable"
NOT_STRONGLY_FILLABLE = "not_strongly_fillable"
BORDERLINE = "borderline"
EXCEPTIONAL = "exceptional"


def cap_hull(dec: Decomposition, sign: str):
    """Hull of the cap geodesic endpoints and the extended hull that also
    takes the cap's corner points as vertices."""
    geos = dec.cap_geodesics[sign]
    endpoints: list[IdealPoint] = []
    for g in geos:
        endpoints.extend((g.p, g.q))
    if len(endpoints) < 3:
        raise DegenerateHull(f"cap {sign}: fewer than 3 hull points")
    hull = IdealPolygon(tuple(sorted(endpoints, key=lambda p: p.theta)))
    extended = list(endpoints) + [IdealPoint(a) for a in dec.corner_points[sign]]
    extended_hull = IdealPolygon(tuple(sorted(extended, key=lambda p: p.theta)))
    return hull, extended_hull


def faces(hull: IdealPolygon, geodesics) -> list[AlternatingPolygon]:
    """Faces of the hull cut along the given geodesics.

    Every geodesic endpoint must be a hull vertex; geodesics that are not
    hull sides act as non-crossing chords.  Face sides inherit the alpha
    label exactly when they are one of the given geodesics.
    """
    n = len(hull)
    angles = [v.theta for v in hull.vertices]

    def index_of(point: IdealPoint) -> int:
        for i, a in enumerate(angles):
            if abs(a - point.theta) <= 1e-9 or abs(abs(a - point.theta) - 2 * math.pi) <= 1e-9:
                return i
        raise ValueError("geodesic endpoint is not a hull vertex")

    pairs = set()
    for g in geodesics:
        i, j = sorted((index_of(g.p), index_of(g.q)))
        pairs.add((i, j))
    chords = [(i, j) for (i, j) in pairs if (j - i) % n != 1 and (i - j) % n != 1]
    for a in range(len(chords)):
        for b in range(a + 1, len(chords)):
            (i1, j1), (i2, j2) = chords[a], chords[b]
            if (i1 < i2 < j1 < j2) or (i2 < i1 < j2 < j1):
                raise CrossingChords(f"chords {chords[a]} and {chords[b]} cross")

    def split(cycle: list[int], inner: list[tuple[int, int]]):
        if not inner:
            return [cycle]
        i, j = inner[0]
        pa, pb = cycle.index(i), cycle.index(j)
        if pa > pb:
            pa, pb = pb, pa
        part1 = cycle[pa:pb + 1]
        part2 = cycle[pb:] + cycle[:pa + 1]
        rest = inner[1:]
        in1 = [c for c in rest if c[0] in part1 and c[1] in part1]
        in2 = [c for c in rest if not (c[0] in part1 and c[1] in part1)]
        return split(part1, in1) + split(part2, in2)

    out = []
    for cycle in split(list(range(n)), chords):
        verts = [hull.vertices[i] for i in cycle]
        flags = []
        k = len(cycle)
        for t in range(k):
            a, b = cycle[t], cycle[(t + 1) % k]
            flags.append((min(a, b), max(a, b)) in pairs)
        start = min(range(k), key=lambda t: verts[t].theta)
        verts = verts[start:] + verts[:start]
        flags = flags[start:] + flags[:start]
        face = AlternatingPolygon(IdealPolygon(tuple(verts)), tuple(flags))
        out.append(face)
    return out


@dataclass(frozen=True)
class FaceReport:
    face: AlternatingPolygon
    gap: float
    fatness: Fatness
    regular: bool
    regularity: RegularityReport


@dataclass(frozen=True)
class CapAnalysis:
    cap: str
    trivially_fat: bool
    hull: IdealPolygon | None = None
    extended_hull: IdealPolygon | None = None
    faces: tuple[AlternatingPolygon, ...] = ()
    face_reports: tuple[FaceReport, ...] = ()


@dataclass(frozen=True)
class FatAnalysis:
    caps: dict
    overall: str  # "fat" | "skinny" | "exceptional"
    skinny_witness: AlternatingPolygon | None = None
    exceptional_cause: str | None = None  # "exact_face" | "non_regular_face"
    exceptional_witness: AlternatingPolygon | None = None


def analyze_cap(dec: Decomposition, cap: str, tol_exact: float = TOL_EXACT) -> CapAnalysis:
    geos = dec.cap_geodesics[cap]
    if len(geos) <= 1:
        # Empty or single-geodesic caps count as fat.
        ext = None
        if geos or dec.corner_points[cap]:
            pts = [p for g in geos for p in (g.p, g.q)]
            pts += [IdealPoint(a) for a in dec.corner_points[cap]]
            if len(pts) >= 3:
                ext = IdealPolygon(tuple(sorted(pts, key=lambda p: p.theta)))
        return CapAnalysis(cap, trivially_fat=True, extended_hull=ext)
    hull, extended_hull = cap_hull(dec, cap)
    face_list = faces(hull, geos)
    reports = []
    for face in face_list:
        gap = ab_gap(face)
        fat = classify_fatness(face, tol_exact)
        reg = is_regular(face, return_report=True)
        reports.append(FaceReport(face, gap, fat, reg.regular, reg))
    return CapAnalysis(cap, False, hull, extended_hull, tuple(face_list), tuple(reports))


def fat_at_infinity(curve: BoundaryCurve, tol_exact: float = TOL_EXACT) -> FatAnalysis:
    """Fat/skinny/exceptional analysis of both caps (fat needs every face
    regular and fat; skinny needs one skinny face, regular or not)."""
    if not cap_geodesic_check(curve):
        raise PrecheckFailed("cap traces are not all geodesics")
    if not endpoints_distinct_check(curve):
        raise PrecheckFailed("cap geodesic endpoints collide or cross")
    dec = decompose(curve)
    caps = {cap: analyze_cap(dec, cap, tol_exact) for cap in ("+", "-")}
    skinny = None
    exact_face = None
    non_regular = None
    for cap in ("+", "-"):
        for rep in caps[cap].face_reports:
            if rep.fatness is Fatness.SKINNY:
                skinny = skinny or rep.face
            elif rep.fatness is Fatness.EXACT:
                exact_face = exact_face or rep.face
            elif not rep.regular:
                non_regular = non_regular or rep.face
    if skinny is not None:
        return FatAnalysis(caps, "skinny", skinny_witness=skinny)
    if exact_face is not None:
        return FatAnalysis(caps, "exceptional",
                           exceptional_cause="exact_face",
                           exceptional_witness=exact_face)
    if non_regular is not None:
        return FatAnalysis(caps, "exceptional",
                           exceptional_cause="non_regular_face",
                           exceptional_witness=non_regular)
    return FatAnalysis(caps, "fat")


@dataclass(frozen=True)
class Certificate:
    band_T: float
    tall_rectangles: tuple[TallRectangle, ...]
    cap_analyses: dict
    face_coverings: dict  # cap -> tuple of ExactCovering
    corner_coverings: dict  # cap -> tuple of (CornerRegionSpec, ExactCovering | str)


@dataclass(frozen=True)
class Verdict:
    kind: str
    reasons: tuple[str, ...] = ()
    witnesses: dict = field(default_factory=dict)
    exceptional_cause: str | None = None
    height_report: HeightReport | None = None
    fat_analysis: FatAnalysis | None = None
    certificate: Certificate | None = None
    diagnostics: dict = field(default_factory=dict)


def _corner_region_specs(dec: Decomposition, cap: str):
    """Group the cap's corner points by the hull-side arcs they fall in."""
    geos = dec.cap_geodesics[cap]
    corners = dec.corner_points[cap]
    if not corners or len(geos) < 2:
        return []
    hull, _ = cap_hull(dec, cap)
    angles = [v.theta for v in hull.vertices]
    n = len(angles)
    groups: dict[int, list[float]] = {}
    for q in corners:
        for i in range(n):
            a, b = angles[i], angles[(i + 1) % n]
            if 0.0 < ccw_gap(a, q) < ccw_gap(a, b if b != a else a + 2 * math.pi):
                groups.setdefault(i, []).append(q)
                break
    specs = []
    for i, qs in sorted(groups.items()):
        base = Geodesic(hull.vertices[i], hull.vertices[(i + 1) % n])
        specs.append(CornerRegionSpec(base, tuple(qs)))
    return specs


def _build_certificate(curve: BoundaryCurve, fat: FatAnalysis,
                       tol_exact: float) -> Certificate:
    T = band_extent(curve) + math.pi + 1.0
    rects = tall_cover(curve, T)
    dec = decompose(curve)
    face_covs = {}
    corner_covs = {}
    for cap in ("+", "-"):
        analysis = fat.caps[cap]
        covs = []
        for face in analysis.faces:
            covs.append(exact_cover_per_vertex(face, tol_exact))
        face_covs[cap] = tuple(covs)
        ccovs = []
        for spec in _corner_region_specs(dec, cap):
            try:
                ccovs.append((spec, corner_cover(spec, tol_exact)))
            except BisectionFailed as exc:
                ccovs.append((spec, f"bisection_failed: {exc}"))
        corner_covs[cap] = tuple(ccovs)
    return Certificate(T, tuple(rects), fat.caps, face_covs, corner_covs)


def classify(curve: BoundaryCurve, tol_exact: float = TOL_EXACT,
             with_certificate: bool = True,
             horoball_scale: float | None = None) -> Verdict:
    """Full decision procedure; evaluates every condition for diagnostics."""
    violations = validate(curve)
    if violations:
        raise InvalidCurve(violations)

    reasons: list[str] = []
    witnesses: dict = {}
    diagnostics: dict = {}

    geo_ok = cap_geodesic_check(curve)
    if not geo_ok:
        reasons.append(NON_GEODESIC_CAP)
    distinct_ok = endpoints_distinct_check(curve)
    if not distinct_ok:
        reasons.append(SHARED_CAP_ENDPOINTS)

    hrep = height(curve)
    tallness = is_tall(curve)
    if tallness == Tallness.NOT_TALL:
        reasons.append(NOT_TALL)
        witnesses["not_tall"] = hrep
        tail = thin_tail_scan(curve)
        if tail is not None:
            diagnostics["thin_tail"] = tail

    if not corner_check(curve):
        reasons.append(CORNER_OVERLAP)
        diagnostics["corner_overlap"] = (
            "overlaps a corner circle in an interval: not even minimally fillable"
        )

    fat = None
    if geo_ok and distinct_ok:
        fat = fat_at_infinity(curve, tol_exact)
        if fat.overall == "skinny":
            reasons.append(SKINNY_FACE)
            witnesses["skinny_face"] = fat.skinny_witness
        if horoball_scale is not None:
            diagnostics["horoball_scale_sensitivity"] = _scale_sensitivity(
                fat, horoball_scale
            )

    dec = decompose(curve)
    if len(curve.components) >= 2 and not any(
        dec.cap_geodesics[c] or dec.cap_arcs[c] or dec.corner_points[c] or dec.corner_arcs[c]
        for c in ("+", "-")
    ):
        sep = vertical_separation_check(curve)
        if sep is not None:
            diagnostics["vertical_pi_separation"] = sep

    if reasons:
        return Verdict(NOT_STRONGLY_FILLABLE, tuple(reasons), witnesses,
                       height_report=hrep, fat_analysis=fat, diagnostics=diagnostics)
    if tallness == Tallness.BORDERLINE:
        return Verdict(BORDERLINE, (), witnesses, height_report=hrep,
                       fat_analysis=fat, diagnostics=diagnostics)
    if fat is not None and fat.overall == "exceptional":
        witnesses["exceptional_face"] = fat.exceptional_witness
        return Verdict(EXCEPTIONAL, (), witnesses,
                       exceptional_cause=fat.exceptional_cause,
                       height_report=hrep, fat_analysis=fat, diagnostics=diagnostics)

    certificate = None
    if with_certificate:
        assert fat is not None or geo_ok
        fat = fat or fat_at_infinity(curve, tol_exact)
        certificate = _build_certificate(curve, fat, tol_exact)
    return Verdict(STRONGLY_FILLABLE, (), witnesses, height_report=hrep,
                   fat_analysis=fat, certificate=certificate, diagnostics=diagnostics)


def _scale_sensitivity(fat: FatAnalysis, scale: float) -> dict:
    """How face regularity verdicts would read at one finite horoball scale."""
    from .polygons import regularity_at_scale

    out = {}
    for cap in ("+", "-"):
        rows = []
        for rep in fat.caps[cap].face_reports:
            finite, _w = regularity_at_scale(rep.face, scale)
            rows.append({"limit_regular": rep.regular, "at_scale": finite})
        out[cap] = rows
    return out


def fillable_union_check(curve: BoundaryCurve, tol_exact: float = TOL_EXACT) -> bool:
    """Sufficient condition for fillability of the union: every Jordan
    component, classified alone, is strongly fillable."""
    violations = validate(curve)
    if violations:
        raise InvalidCurve(violations)
    for comp in curve.components:
        verdict = classify(BoundaryCurve((comp,)), tol_exact, with_certificate=False)
        if verdict.kind != STRONGLY_FILLABLE:
            return False
    return True
