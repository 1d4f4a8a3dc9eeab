import math

import numpy as np
import pytest

from plateau.errors import ChartPoleCollision
from plateau.hyperbolic import (
    Decoration,
    Geodesic,
    HalfPlaneChart,
    IdealPoint,
    MobiusMap,
    PlanePoint,
    TWO_PI,
    chart_avoiding,
    circle_intersections,
    clipped_length,
    distance_to_origin,
    geodesics_cross,
    ideal_polygon_area,
    normalize_angle,
    point_distance,
    random_isometry,
    truncated_length,
)

from oracles import (
    clipped_length_disk,
    ideal_polygon_area_numeric,
    point_distance_disk,
    truncated_length_hp,
)


def angle_for(x: float, pole: float) -> float:
    """Angle whose half-plane coordinate is x in the chart with this pole."""
    return normalize_angle(2.0 * (math.atan(x) + math.pi / 2.0) + pole)


def pair_for(x: float, y: float, pole: float = 3.0):
    chart = HalfPlaneChart(pole)
    g = Geodesic(IdealPoint(angle_for(x, pole)), IdealPoint(angle_for(y, pole)))
    return g, chart


class TestTruncatedLength:
    def test_tangent_horoballs(self):
        g, chart = pair_for(0.0, 1.0)
        assert truncated_length(g, Decoration.unit(), chart) == pytest.approx(0.0, abs=1e-12)

    def test_two_log_two(self):
        g, chart = pair_for(0.0, 2.0)
        value = truncated_length(g, Decoration.unit(), chart)
        assert value == pytest.approx(2.0 * math.log(2.0), abs=1e-12)

    def test_decoration_shift(self):
        g, chart = pair_for(0.3, 1.9)
        base = truncated_length(g, Decoration.unit(), chart)
        s = 0.7
        dec = Decoration({g.p: math.exp(s)})
        assert truncated_length(g, dec, chart) == pytest.approx(base - s, abs=1e-12)

    def test_pole_collision(self):
        chart = HalfPlaneChart(pole=1.0)
        g = Geodesic.of(1.0, 2.0)
        with pytest.raises(ChartPoleCollision):
            truncated_length(g, Decoration.unit(), chart)

    def test_matches_integration_oracle(self, rng):
        for _ in range(25):
            x, y = np.sort(rng.uniform(-3.0, 3.0, size=2))
            if y - x < 0.05:
                continue
            sx, sy = rng.uniform(0.2, 2.0, size=2)
            g, chart = pair_for(float(x), float(y))
            dec = Decoration({g.p: float(sx) if chart.to_real(g.p) == pytest.approx(x) else float(sy)})
            dec = Decoration({
                IdealPoint(angle_for(float(x), 3.0)): float(sx),
                IdealPoint(angle_for(float(y), 3.0)): float(sy),
            })
            got = truncated_length(g, dec, chart)
            want = truncated_length_hp(float(x), float(y), float(sx), float(sy))
            assert got == pytest.approx(want, abs=1e-9)

    def test_chart_independence_with_transport(self, rng):
        for _ in range(20):
            a, b = np.sort(rng.uniform(0.3, 5.0, size=2))
            if b - a < 0.1:
                continue
            g = Geodesic.of(float(a), float(b))
            chart1 = HalfPlaneChart(pole=0.05)
            chart2 = HalfPlaneChart(pole=5.9)
            sig = {g.p: rng.uniform(0.3, 2.0), g.q: rng.uniform(0.3, 2.0)}
            dec1 = Decoration(sig)
            # Transport: sigma scales by the boundary derivative ratio.
            dec2 = Decoration({
                p: s * chart2.boundary_derivative(p) / chart1.boundary_derivative(p)
                for p, s in sig.items()
            })
            v1 = truncated_length(g, dec1, chart1)
            v2 = truncated_length(g, dec2, chart2)
            assert v1 == pytest.approx(v2, abs=1e-9)


class TestGeodesics:
    def test_cross(self):
        assert geodesics_cross(Geodesic.of(0.0, math.pi), Geodesic.of(math.pi / 2, 3 * math.pi / 2))

    def test_separated(self):
        assert not geodesics_cross(Geodesic.of(0.0, math.pi / 4), Geodesic.of(math.pi / 2, math.pi))

    def test_touching_is_not_crossing(self):
        assert not geodesics_cross(Geodesic.of(0.0, math.pi), Geodesic.of(math.pi, 3 * math.pi / 2))

    def test_degenerate_rejected(self):
        with pytest.raises(ValueError):
            Geodesic.of(1.0, 1.0)


class TestClippedLength:
    def test_diameter(self):
        assert clipped_length(Geodesic.of(0.0, math.pi), 3.0) == pytest.approx(6.0, abs=1e-12)

    def test_far_geodesic_misses(self):
        g = Geodesic.of(0.0, 0.01)
        assert distance_to_origin(g) > 1.0
        assert clipped_length(g, 1.0) == 0.0

    def test_matches_integration_oracle(self):
        got = clipped_length(Geodesic.of(0.0, math.pi / 2), 2.0)
        want = clipped_length_disk(0.0, math.pi / 2, 2.0)
        assert got == pytest.approx(want, abs=1e-9)

    def test_nondecreasing_and_linear_growth(self):
        g = Geodesic.of(0.3, 0.3 + math.pi * 0.9)
        values = [clipped_length(g, m) for m in np.arange(0.5, 12.0, 0.5)]
        assert all(b >= a for a, b in zip(values, values[1:]))
        # For large m the length grows like 2m.
        assert values[-1] - values[-2] == pytest.approx(1.0, abs=1e-3)


class TestPointDistance:
    def test_zero(self):
        origin = PlanePoint(0.0, 0.0)
        assert point_distance(origin, origin) == 0.0

    def test_radial(self):
        r = 0.62
        want = math.log((1 + r) / (1 - r))
        assert point_distance(PlanePoint(0, 0), PlanePoint(r, 0)) == pytest.approx(want, abs=1e-12)

    @staticmethod
    def _random_points(rng, count):
        radii = rng.uniform(0.0, 0.85, size=count)
        angles = rng.uniform(0.0, TWO_PI, size=count)
        return [PlanePoint(r * math.cos(a), r * math.sin(a))
                for r, a in zip(radii, angles)]

    def test_matches_integration_oracle(self, rng):
        for _ in range(15):
            pu, pv = self._random_points(rng, 2)
            if point_distance(pu, pv) < 1e-3:
                continue
            want = point_distance_disk(complex(pu.x, pu.y), complex(pv.x, pv.y))
            assert point_distance(pu, pv) == pytest.approx(want, abs=1e-9)

    def test_triangle_inequality(self, rng):
        for _ in range(200):
            pts = self._random_points(rng, 3)
            ab = point_distance(pts[0], pts[1])
            bc = point_distance(pts[1], pts[2])
            ac = point_distance(pts[0], pts[2])
            assert ac <= ab + bc + 1e-9


class TestCircleIntersections:
    def test_diameter(self):
        pts, tangent = circle_intersections(Geodesic.of(0.0, math.pi), 1.0)
        assert not tangent
        r = math.tanh(0.5)
        assert sorted((p.x, p.y) for p in pts) == pytest.approx(
            sorted([(-r, 0.0), (r, 0.0)]), abs=1e-12)
        # Ordered along the geodesic from the lower-angle endpoint.
        assert pts[0].x > 0

    def test_miss(self):
        pts, tangent = circle_intersections(Geodesic.of(0.0, 0.01), 1.0)
        assert pts == [] and not tangent

    def test_points_on_metric_circle(self, rng):
        origin = PlanePoint(0.0, 0.0)
        for _ in range(40):
            t1, t2 = np.sort(rng.uniform(0.0, TWO_PI, size=2))
            if t2 - t1 < 0.5 or t2 - t1 > TWO_PI - 0.5:
                continue
            m = rng.uniform(0.5, 3.0)
            pts, _tangent = circle_intersections(Geodesic.of(float(t1), float(t2)), float(m))
            for p in pts:
                assert point_distance(origin, p) == pytest.approx(m, abs=1e-9)


class TestIdealPolygonArea:
    def test_triangle(self):
        assert ideal_polygon_area(3) == pytest.approx(math.pi)

    def test_even_gon_formula(self):
        for k in range(2, 7):
            assert ideal_polygon_area(2 * k) == pytest.approx(2 * (k - 1) * math.pi)

    def test_hexagon_matches_numeric_integration(self):
        angles = sorted(normalize_angle(k * math.pi / 3 + 0.07 * k) for k in range(6))
        got = ideal_polygon_area_numeric(angles)
        assert got == pytest.approx(4 * math.pi, abs=1e-6)

    def test_too_few_vertices(self):
        with pytest.raises(ValueError):
            ideal_polygon_area(2)


class TestIsometries:
    def test_identity(self):
        ident = MobiusMap.identity()
        for theta in (0.0, 1.0, 4.5):
            assert ident.apply(IdealPoint(theta)).theta == pytest.approx(theta)

    def test_rotation(self):
        rot = MobiusMap.rotation(0.8)
        assert rot.apply(IdealPoint(1.0)).theta == pytest.approx(1.8, abs=1e-12)

    def test_circular_order_preserved(self):
        for seed in range(200):
            mob = random_isometry(seed)
            pts = [IdealPoint(a) for a in (0.3, 1.1, 2.9, 5.0)]
            images = [mob.apply(p).theta for p in pts]
            lifted = [images[0]]
            for x in images[1:]:
                while x < lifted[-1]:
                    x += TWO_PI
                lifted.append(x)
            assert lifted[-1] - lifted[0] < TWO_PI


class TestChartSelection:
    def test_pole_avoids_points(self):
        pts = [IdealPoint(a) for a in (0.0, 1.0, 2.0, 3.0)]
        chart = chart_avoiding(pts)
        for p in pts:
            chart.to_real(p)  # must not collide
