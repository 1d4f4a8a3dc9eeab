import math

import numpy as np
import pytest

from plateau.constructions import infinite_rectangle, scherk_curve
from plateau.curves import (
    BoundaryCurve,
    CapArc,
    CapGeodesic,
    CornerArc,
    CornerPoint,
    CylinderArc,
    JordanComponent,
    Tallness,
    VerticalRay,
    band_extent,
    cap_geodesic_check,
    corner_check,
    curves_intersect,
    decompose,
    endpoints_distinct_check,
    height,
    is_tall,
    tall_cover,
    thin_tail_scan,
    validate,
    verify_tall_cover,
)
from plateau.errors import NotTallError
from plateau.hyperbolic import Geodesic, IdealPoint, PlanePoint, TWO_PI

from conftest import horizontal_circle, stacked_graph_curve, two_circles
from oracles import grid_height

INF_RECT = BoundaryCurve((infinite_rectangle(Geodesic.of(0.0, 1.2), 0.0, "+"),))


def rectangle_boundary(th1, th2, t1, t2) -> BoundaryCurve:
    pts = ((th1, t1), (th2, t1), (th2, t2), (th1, t2), (th1, t1))
    return BoundaryCurve((JordanComponent((CylinderArc(pts),)),))


class TestValidation:
    def test_infinite_rectangle_ok(self):
        assert validate(INF_RECT) == []

    def test_components_sharing_point(self):
        a = horizontal_circle(0.0)
        b = JordanComponent((CylinderArc(((0.0, 0.0), (1.0, 1.0), (0.0 + TWO_PI, 0.0))),))
        violations = validate(BoundaryCurve((a, b)))
        assert any("not disjoint" in v for v in violations)

    def test_discontinuous(self):
        comp = JordanComponent((
            VerticalRay(1.0, 0.0, "+"),
            CapGeodesic("+", (IdealPoint(2.0), IdealPoint(3.0))),
            VerticalRay(3.0, 0.0, "+"),
            CylinderArc(((3.0, 0.0), (1.0, 0.0))),
        ))
        violations = validate(BoundaryCurve((comp,)))
        assert any("discontinuous" in v for v in violations)

    def test_self_crossing_polyline(self):
        comp = JordanComponent((CylinderArc((
            (0.0, 0.0), (1.0, 1.0), (1.0, -1.0), (0.2, 0.5), (0.0, 0.0),
        )),))
        violations = validate(BoundaryCurve((comp,)))
        assert any("self-intersection" in v for v in violations)

    def test_crossing_cap_geodesics_rejected(self):
        comp1 = infinite_rectangle(Geodesic.of(0.0, 2.0), 0.0, "+")
        comp2 = infinite_rectangle(Geodesic.of(1.0, 3.0), 5.0, "+")
        violations = validate(BoundaryCurve((comp1, comp2)))
        assert violations

    def test_curves_intersect(self):
        c1 = two_circles(4.0)
        c2 = BoundaryCurve((horizontal_circle(2.0),))
        c3 = BoundaryCurve((JordanComponent((CylinderArc((
            (0.0, -1.0), (1.0, 5.0), (TWO_PI, -1.0),
        )),)),))
        assert not curves_intersect(c1, c2)
        assert curves_intersect(c1, c3)


class TestDecompose:
    def test_infinite_rectangle_buckets(self):
        dec = decompose(INF_RECT)
        assert len(dec.cap_geodesics["+"]) == 1
        assert len(dec.cap_geodesics["-"]) == 0
        assert len(dec.cylinder) == 3
        assert dec.corner_points["+"] == ()
        assert dec.corner_arcs["+"] == ()

    def test_finite_curve_empty_caps(self):
        dec = decompose(two_circles(4.0))
        assert dec.cap_geodesics["+"] == () and dec.cap_geodesics["-"] == ()
        assert len(dec.cylinder) == 2

    def test_scherk_curve_buckets(self):
        dec = decompose(scherk_curve(3))
        assert len(dec.cap_geodesics["+"]) == 3
        assert len(dec.cap_geodesics["-"]) == 3
        assert dec.corner_points["+"] == () and dec.corner_points["-"] == ()
        assert len(dec.cylinder) == 12  # vertical lines, two rays each

    def test_partition_is_total(self):
        curve = scherk_curve(2)
        dec = decompose(curve)
        counted = (len(dec.cylinder)
                   + sum(len(dec.cap_geodesics[c]) for c in "+-")
                   + sum(len(dec.cap_arcs[c]) for c in "+-")
                   + sum(len(dec.corner_points[c]) for c in "+-")
                   + sum(len(dec.corner_arcs[c]) for c in "+-"))
        total = sum(len(c.segments) for c in curve.components)
        assert counted == total


class TestHeight:
    def test_two_circles(self):
        report = height(two_circles(4.0))
        assert report.h == pytest.approx(4.0)
        assert report.witness_interval == pytest.approx((0.0, 4.0))

    def test_graph_curve_infinite(self, rng):
        thetas = np.linspace(0.0, TWO_PI, 9)
        pts = tuple((float(a), float(math.sin(a))) for a in thetas)
        curve = BoundaryCurve((JordanComponent((CylinderArc(pts),)),))
        assert height(curve).h == math.inf

    def test_rectangle_boundary(self):
        report = height(rectangle_boundary(1.0, 2.0, 0.0, 4.0))
        assert report.h == pytest.approx(4.0)

    def test_matches_grid_oracle(self, rng):
        for _ in range(12):
            curve = stacked_graph_curve(rng)
            h_sweep = height(curve).h
            h_grid = grid_height(curve, samples=2000)
            bound = 2 * 4.0 * (TWO_PI / 2000)
            assert h_grid >= h_sweep - 1e-9
            assert abs(h_sweep - h_grid) <= bound

    def test_rotation_translation_invariance(self, rng):
        curve = stacked_graph_curve(rng)
        h0 = height(curve).h
        for shift_theta, shift_t in ((1.3, 0.0), (0.0, 2.5), (4.1, -3.0)):
            moved = BoundaryCurve(tuple(
                JordanComponent(tuple(
                    CylinderArc(tuple((a + shift_theta, t + shift_t) for a, t in seg.points))
                    for seg in comp.segments
                ))
                for comp in curve.components
            ))
            assert height(moved).h == pytest.approx(h0, abs=1e-9)


class TestTallness:
    def test_examples(self):
        assert is_tall(two_circles(4.0)) == Tallness.TALL
        assert is_tall(two_circles(3.0)) == Tallness.NOT_TALL
        assert is_tall(two_circles(math.pi)) == Tallness.BORDERLINE

    def test_near_borderline(self):
        assert is_tall(two_circles(math.pi + 1e-3)) == Tallness.TALL
        assert is_tall(two_circles(math.pi - 1e-3)) == Tallness.NOT_TALL


class TestTallCover:
    def check(self, curve, T=None):
        T = T if T is not None else band_extent(curve) + math.pi + 1.0
        rects = tall_cover(curve, T)
        report = verify_tall_cover(curve, rects, T, samples=4000)
        assert report.coverage == 1.0
        assert report.all_tall
        assert report.disjoint_from_curve
        return rects

    def test_two_circles(self):
        self.check(two_circles(4.0))

    def test_single_rectangle_boundary(self):
        self.check(rectangle_boundary(1.0, 2.5, 0.0, 4.0))

    def test_empty_curve(self):
        curve = BoundaryCurve(())
        rects = tall_cover(curve, math.pi + 1.0)
        assert rects
        report = verify_tall_cover(curve, rects, math.pi + 1.0, samples=4000)
        assert report.coverage == 1.0

    def test_sloped_curve(self, rng):
        curve = stacked_graph_curve(rng, n_components=2)
        if is_tall(curve) == Tallness.TALL:
            self.check(curve)

    def test_not_tall_error(self):
        with pytest.raises(NotTallError):
            tall_cover(two_circles(3.0), 10.0)


class TestChecks:
    def test_corner_check(self):
        assert corner_check(INF_RECT)
        with_arc = BoundaryCurve((JordanComponent((
            VerticalRay(1.0, 0.0, "+"),
            CornerArc("+", (1.0, 2.0)),
            VerticalRay(2.0, 0.0, "+"),
            CylinderArc(((2.0, 0.0), (1.0, 0.0))),
        )),))
        assert validate(with_arc) == []
        assert not corner_check(with_arc)

    def test_cap_geodesic_check(self):
        assert cap_geodesic_check(INF_RECT)
        loop = BoundaryCurve((JordanComponent((CapArc("+", (
            PlanePoint(0.2, 0.0), PlanePoint(0.0, 0.2),
            PlanePoint(-0.2, 0.0), PlanePoint(0.2, 0.0),
        )),)),))
        assert validate(loop) == []
        assert not cap_geodesic_check(loop)

    def test_endpoints_distinct_check(self):
        shared = BoundaryCurve((JordanComponent((
            CapGeodesic("+", (IdealPoint(0.0), IdealPoint(1.5))),
            CapGeodesic("+", (IdealPoint(1.5), IdealPoint(3.0))),
            VerticalRay(3.0, 0.0, "+"),
            CylinderArc(((3.0, 0.0), (0.0, 0.0))),
            VerticalRay(0.0, 0.0, "+"),
        )),))
        assert validate(shared) == []
        assert not endpoints_distinct_check(shared)
        assert endpoints_distinct_check(INF_RECT)


class TestThinTail:
    def hook_fixture(self):
        # A tail wraps rightward around theta = 3 inside t in (-0.4, 1.0)
        # while the rest of the curve escapes upward, far out of the band.
        pts = (
            (5.0, 1.0), (2.0, 1.0), (3.0, 0.3), (2.0, -0.4), (5.0, -0.4),
            (5.5, 2.0), (5.5, 6.0), (4.8, 6.0), (5.0, 1.0),
        )
        return BoundaryCurve((JordanComponent((CylinderArc(pts),)),))

    def test_witness_found(self):
        curve = self.hook_fixture()
        assert validate(curve) == []
        witness = thin_tail_scan(curve)
        assert witness is not None
        assert witness.line_theta == pytest.approx(3.0)
        band = witness.band
        assert band[1] - band[0] == pytest.approx(math.pi)
        ts = [t for _a, t in witness.arc]
        assert max(ts) - min(ts) < math.pi
        # One-sided: the arc stays left of the line and inside the band.
        assert all(a <= 3.0 + 1e-9 for a, _t in witness.arc)
        assert all(band[0] < t < band[1] for _a, t in witness.arc)

    def test_pinch_forces_zero_height(self):
        # A strict theta-extremum pinches complementary components.
        assert height(self.hook_fixture()).h == 0.0
        assert is_tall(self.hook_fixture()) == Tallness.NOT_TALL

    def test_tall_curves_have_none(self, rng):
        assert thin_tail_scan(two_circles(4.0)) is None
        assert thin_tail_scan(INF_RECT) is None
        for _ in range(5):
            assert thin_tail_scan(stacked_graph_curve(rng)) is None

    def test_horizontal_circle_none(self):
        assert thin_tail_scan(BoundaryCurve((horizontal_circle(0.0),))) is None
