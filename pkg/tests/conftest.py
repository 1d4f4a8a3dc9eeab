import math

import numpy as np
import pytest

from plateau.curves import BoundaryCurve, CylinderArc, JordanComponent
from plateau.polygons import (
    AlternatingPolygon,
    Fatness,
    classify_fatness,
    is_regular,
    random_alternating_polygon,
)

TWO_PI = 2.0 * math.pi


@pytest.fixture
def rng():
    return np.random.default_rng(20240814)


def horizontal_circle(t: float) -> JordanComponent:
    return JordanComponent((CylinderArc(((0.0, t), (TWO_PI, t))),))


def two_circles(gap: float) -> BoundaryCurve:
    return BoundaryCurve((horizontal_circle(0.0), horizontal_circle(gap)))


def stacked_graph_curve(rng, n_components=None, slope_cap=4.0) -> BoundaryCurve:
    """Disjoint piecewise-linear graph components over the full circle,
    stacked with positive vertical gaps."""
    n_components = n_components or int(rng.integers(2, 5))
    n_knots = int(rng.integers(4, 10))
    thetas = np.linspace(0.0, TWO_PI, n_knots + 1)
    comps = []
    base = 0.0
    for _ in range(n_components):
        amp = rng.uniform(0.1, 0.8)
        values = base + rng.uniform(0.0, amp, size=n_knots)
        # Bound the slopes.
        for i in range(1, n_knots):
            dt = thetas[i] - thetas[i - 1]
            lo = values[i - 1] - slope_cap * dt
            hi = values[i - 1] + slope_cap * dt
            values[i] = min(max(values[i], lo), hi)
        pts = [(float(th), float(v)) for th, v in zip(thetas, values)]
        pts.append((float(TWO_PI), float(values[0])))
        comps.append(JordanComponent((CylinderArc(tuple(pts)),)))
        base = float(values.max()) + rng.uniform(0.3, 2.5)
    return BoundaryCurve(tuple(comps))


def random_fat_regular_polygon(rng, n: int, min_gap: float = 0.25) -> AlternatingPolygon:
    """Random alternating 2n-gon that is strictly fat and regular."""
    while True:
        poly = random_alternating_polygon(rng, n, min_gap=min_gap)
        fat = classify_fatness(poly)
        if fat is Fatness.SKINNY:
            poly = poly.swap_labels()
            fat = classify_fatness(poly)
        if fat is Fatness.FAT and is_regular(poly):
            return poly
