import math

import numpy as np
import pytest

from plateau.classifier import STRONGLY_FILLABLE, classify, fillable_union_check
from plateau.constructions import (
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
from plateau.curves import (
    BoundaryCurve,
    CylinderArc,
    JordanComponent,
    Tallness,
    decompose,
    endpoints_distinct_check,
    cap_geodesic_check,
    corner_check,
    height,
    is_tall,
    validate,
)
from plateau.errors import SpecInvalid
from plateau.hyperbolic import Geodesic, ccw_gap, geodesics_cross
from plateau.polygons import AlternatingPolygon, ab_gap

from conftest import horizontal_circle


def skinny_pair(gap=math.pi / 4):
    return [
        Geodesic.of(gap / 2, math.pi - gap / 2),
        Geodesic.of(math.pi + gap / 2, 2 * math.pi - gap / 2),
    ]


def fat_pair():
    return [Geodesic.of(0.1, 0.7), Geodesic.of(2.5, 3.3)]


def random_cap_family(rng, count, lo=0.0, hi=2 * math.pi):
    """Random pairwise disjoint geodesics by recursive arc splitting."""
    out = []

    def fill(a, b, budget):
        if budget <= 0 or b - a < 0.2:
            return
        u, v = np.sort(rng.uniform(a + 0.05, b - 0.05, size=2))
        if v - u < 0.1:
            return
        out.append(Geodesic.of(float(u), float(v)))
        remaining = budget - 1
        inner = remaining // 2
        fill(u + 0.02, v - 0.02, inner)
        fill(v + 0.02, b, remaining - inner)

    fill(lo, hi - 0.05, count)
    return out


class TestInfiniteRectangle:
    def test_structure_and_classification(self):
        comp = infinite_rectangle(Geodesic.of(0.0, math.pi / 2), 0.0, "+", "short")
        curve = BoundaryCurve((comp,))
        assert validate(curve) == []
        dec = decompose(curve)
        assert len(dec.cap_geodesics["+"]) == 1
        assert len(dec.cylinder) == 3
        assert classify(curve, with_certificate=False).kind == STRONGLY_FILLABLE

    def test_minus_cap_mirror(self):
        comp = infinite_rectangle(Geodesic.of(0.0, math.pi / 2), 5.0, "-", "short")
        curve = BoundaryCurve((comp,))
        assert validate(curve) == []
        assert height(curve).h == math.inf
        assert is_tall(curve) == Tallness.TALL

    def test_long_side(self):
        comp = infinite_rectangle(Geodesic.of(0.0, 1.0), 0.0, "+", "long")
        arc = [s for s in comp.segments if isinstance(s, CylinderArc)][0]
        width = abs(arc.points[0][0] - arc.points[-1][0])
        assert width == pytest.approx(2 * math.pi - 1.0)


class TestGenerateFromCaps:
    def test_seven_component_family(self):
        spec = CapSpec(
            plus=(Geodesic.of(0.1, 0.6), Geodesic.of(0.8, 1.3),
                  Geodesic.of(1.5, 2.0), Geodesic.of(2.2, 2.7)),
            minus=(Geodesic.of(3.2, 3.7), Geodesic.of(4.0, 4.5),
                   Geodesic.of(4.8, 5.3)),
        )
        curve = generate_from_caps(spec)
        assert len(curve.components) == 7
        assert validate(curve) == []
        assert corner_check(curve) and cap_geodesic_check(curve)
        assert endpoints_distinct_check(curve)
        assert fillable_union_check(curve)

    def test_single_geodesic(self):
        curve = generate_from_caps(CapSpec(plus=(Geodesic.of(0.0, 1.0),)))
        assert len(curve.components) == 1
        assert validate(curve) == []

    def test_nesting_levels(self):
        outer = Geodesic.of(0.1, 2.9)
        inner = Geodesic.of(0.5, 2.5)
        curve = generate_from_caps(CapSpec(plus=(outer, inner)))
        assert validate(curve) == []
        levels = {}
        for comp in curve.components:
            geo = [s for s in comp.segments if hasattr(s, "endpoints")][0]
            arc = [s for s in comp.segments if isinstance(s, CylinderArc)][0]
            levels[round(geo.endpoints[0].theta, 6)] = arc.points[0][1]
        assert levels[0.5] > levels[0.1]

    def test_crossing_spec_rejected(self):
        with pytest.raises(SpecInvalid):
            CapSpec(plus=(Geodesic.of(0.0, 2.0), Geodesic.of(1.0, 3.0)))

    def test_random_specs(self, rng):
        for _ in range(10):
            plus = random_cap_family(rng, int(rng.integers(1, 5)))
            minus = random_cap_family(rng, int(rng.integers(0, 4)))
            spec = CapSpec(plus=tuple(plus), minus=tuple(minus))
            curve = generate_from_caps(spec)
            assert validate(curve) == []
            assert fillable_union_check(curve)
            # Nesting rule: contained shorter arcs sit deeper.
            for cap, geos in (("+", plus), ("-", minus)):
                arcs = []
                for comp in curve.components:
                    geo = next((s for s in comp.segments
                                if hasattr(s, "endpoints") and s.cap == cap), None)
                    if geo is None:
                        continue
                    arc_seg = [s for s in comp.segments if isinstance(s, CylinderArc)][0]
                    g = geo.geodesic
                    span = ccw_gap(g.p.theta, g.q.theta)
                    start = g.p.theta if span <= math.pi else g.q.theta
                    span = min(span, 2 * math.pi - span)
                    arcs.append(((start, span), arc_seg.points[0][1]))
                for (a1, t1) in arcs:
                    for (a2, t2) in arcs:
                        if a1 == a2:
                            continue
                        pos = ccw_gap(a2[0], a1[0])
                        if pos >= 0 and pos + a1[1] <= a2[1] and a1[1] < a2[1] - 1e-9:
                            assert abs(t1) > abs(t2)


class TestPolygonBoundaryCurves:
    def test_scherk_curve_valid(self):
        for n in (2, 3):
            curve = scherk_curve(n)
            assert validate(curve) == []
            assert len(curve.components) == 1
            dec = decompose(curve)
            assert len(dec.cap_geodesics["+"]) == n
            assert len(dec.cap_geodesics["-"]) == n

    def test_knoid_structure(self):
        curve = knoid_curve(3)
        assert len(curve.components) == 3
        assert validate(curve) == []
        assert is_tall(curve) == Tallness.TALL

    def test_knoid_gap_bounds(self):
        with pytest.raises(ValueError):
            knoid_curve(1)
        with pytest.raises(ValueError):
            knoid_curve(3, gap=3.0)


class TestTrap:
    XI = AlternatingPolygon.of([0.0, math.pi / 2, math.pi, 3 * math.pi / 2])

    def nested_curve(self, inset=0.0):
        return BoundaryCurve((
            vertical_plane_component(Geodesic.of(1.65 + inset, 2.9 - inset)),
            vertical_plane_component(Geodesic.of(1.9 + inset, 2.6 - inset)),
        ))

    def test_trapped(self):
        trap = TrapRegion(self.XI, "+")
        report = trapped_by(self.nested_curve(), trap, report=True)
        assert report.trapped
        assert report.disjoint
        assert report.seed_in_wall_side
        assert not report.wall_inside_region

    def test_monotone_under_shrinking(self):
        trap = TrapRegion(self.XI, "+")
        assert trapped_by(self.nested_curve(), trap)
        assert trapped_by(self.nested_curve(inset=0.05), trap)
        assert trapped_by(self.nested_curve(inset=0.1), trap)

    def test_crossing_wall_not_trapped(self):
        trap = TrapRegion(self.XI, "+")
        shift = -0.4  # straddles the wall's vertical line at pi/2
        moved = BoundaryCurve((
            vertical_plane_component(Geodesic.of(1.65 + shift, 2.9 + shift)),
            vertical_plane_component(Geodesic.of(1.9 + shift, 2.6 + shift)),
        ))
        report = trapped_by(moved, trap, report=True)
        assert not report.trapped
        assert not report.disjoint

    def test_wall_itself_not_trapped(self):
        trap = TrapRegion(self.XI, "+")
        report = trapped_by(trap.curve(), trap, report=True)
        assert not report.trapped
        assert not report.disjoint

    def test_non_exact_polygon_rejected(self):
        skew = AlternatingPolygon.of([0.0, 0.2, math.pi, math.pi + 0.2])
        with pytest.raises(ValueError):
            TrapRegion(skew, "+")

    def test_minus_cap_symmetric(self):
        trap = TrapRegion(self.XI, "-")
        assert trapped_by(self.nested_curve(), trap)


class TestVerticalSeparation:
    def test_split_found(self):
        curve = BoundaryCurve((horizontal_circle(0.0), horizontal_circle(5.0)))
        c = vertical_separation_check(curve)
        assert c is not None and 0.0 < c < 5.0 - math.pi

    def test_no_split(self):
        curve = BoundaryCurve((horizontal_circle(0.0), horizontal_circle(2.0)))
        assert vertical_separation_check(curve) is None

    def test_three_components_first_split(self):
        curve = BoundaryCurve((
            JordanComponent((CylinderArc(((0.0, 0.0), (1.0, 1.0), (2 * math.pi, 0.0))),)),
            JordanComponent((CylinderArc(((0.0, 5.0), (1.0, 6.0), (2 * math.pi, 5.0))),)),
            JordanComponent((CylinderArc(((0.0, 10.0), (1.0, 11.0), (2 * math.pi, 10.0))),)),
        ))
        c = vertical_separation_check(curve)
        assert c is not None and 1.0 < c < 5.0 - math.pi

    def test_requires_finite(self):
        with pytest.raises(ValueError):
            vertical_separation_check(knoid_curve(2))


class TestAreaDemo:
    M_LIST = [2, 4, 6, 8, 10, 12, 14, 16, 18, 20]

    def test_skinny_pair_crossover(self):
        demo = area_demo(skinny_pair(), self.M_LIST)
        assert demo.c_limit > 0
        cs = [row.c_m for row in demo.rows]
        assert all(b >= a - 1e-7 for a, b in zip(cs, cs[1:]))
        assert demo.crossover_m is not None
        row20 = demo.rows[-1]
        assert abs(row20.c_m - demo.c_limit) < 0.01
        for row in demo.rows:
            assert row.lhs == pytest.approx(2 * row.m * row.a_m)
            assert row.bound == pytest.approx(2 * row.m * row.b_m + 4 * math.pi)

    def test_fat_pair_no_crossover(self):
        demo = area_demo(fat_pair(), list(range(2, 51, 2)))
        assert demo.c_limit < 0
        assert demo.crossover_m is None

    def test_c_limit_is_hull_gap(self):
        geos = skinny_pair()
        demo = area_demo(geos, [2.0])
        endpoints = sorted(
            p.theta for g in geos for p in (g.p, g.q)
        )
        poly = AlternatingPolygon.of(endpoints)  # sides alternate with the geodesics first
        assert abs(demo.c_limit) == pytest.approx(abs(ab_gap(poly)), abs=1e-12)

    def test_single_geodesic_rejected(self):
        with pytest.raises(ValueError):
            area_demo([Geodesic.of(0.0, 1.0)], [2.0])

    def test_small_disk_rejected(self):
        # Geodesics far from the origin miss small disks.
        geos = [Geodesic.of(0.0, 0.3), Geodesic.of(1.0, 1.3)]
        with pytest.raises(ValueError):
            area_demo(geos, [0.2])
