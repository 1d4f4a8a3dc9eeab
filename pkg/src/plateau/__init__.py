"""Classification of boundary curves at infinity of the hyperbolic plane
cross the real line, by strong fillability, with verifiable certificates."""

from .classifier import (
    Certificate,
    Verdict,
    cap_hull,
    classify,
    faces,
    fat_at_infinity,
    fillable_union_check,
)
from .constructions import (
    AreaDemo,
    CapSpec,
    TrapRegion,
    area_demo,
    generate_from_caps,
    infinite_rectangle,
    knoid_curve,
    polygon_boundary_curve,
    scherk_curve,
    trapped_by,
    vertical_plane_component,
    vertical_separation_check,
)
from .coverings import (
    CornerRegionSpec,
    ExactCovering,
    corner_cover,
    exact_cover_per_vertex,
    exact_cover_special,
    verify_corner_cover,
    verify_cover,
)
from .curves import (
    BoundaryCurve,
    CapArc,
    CapGeodesic,
    CornerArc,
    CornerPoint,
    CylinderArc,
    HeightReport,
    JordanComponent,
    TallRectangle,
    Tallness,
    VerticalRay,
    cap_geodesic_check,
    corner_check,
    decompose,
    endpoints_distinct_check,
    height,
    is_tall,
    tall_cover,
    thin_tail_scan,
    validate,
    verify_tall_cover,
)
from .hyperbolic import (
    Decoration,
    Geodesic,
    HalfPlaneChart,
    IdealPoint,
    MobiusMap,
    PlanePoint,
    apply_isometry,
    circle_intersections,
    clipped_length,
    geodesics_cross,
    ideal_polygon_area,
    point_distance,
    random_isometry,
    truncated_length,
)
from .polygons import (
    AlternatingPolygon,
    Fatness,
    IdealPolygon,
    InscribedPolygon,
    TruncatedSums,
    ab_gap,
    classify_fatness,
    enumerate_inscribed,
    is_exact,
    is_regular,
    truncated_sums,
)

__version__ = "0.1.0"
