"""Tour of the hyperbolic kernel: ideal points, decorated lengths, clipping.

Run:  python demos/01_hyperbolic_kernel.py
"""

import math

from plateau import (
    Decoration,
    Geodesic,
    HalfPlaneChart,
    IdealPoint,
    PlanePoint,
    circle_intersections,
    clipped_length,
    ideal_polygon_area,
    point_distance,
    truncated_length,
)


def angle_for(x, pole):
    return (2.0 * (math.atan(x) + math.pi / 2.0) + pole) % (2 * math.pi)


def main():
    print("== decorated truncated lengths ==")
    chart = HalfPlaneChart(pole=3.0)
    p = IdealPoint(angle_for(0.0, 3.0))
    q = IdealPoint(angle_for(1.0, 3.0))
    r = IdealPoint(angle_for(2.0, 3.0))
    unit = Decoration.unit()
    print("boundary coordinates:", chart.to_real(p), chart.to_real(q), chart.to_real(r))
    print("tangent unit horoballs (x=0, x=1):",
          truncated_length(Geodesic(p, q), unit, chart))
    print("x=0 to x=2, expect 2*ln 2 =", 2 * math.log(2), "->",
          truncated_length(Geodesic(p, r), unit, chart))
    shrunk = Decoration({p: math.exp(-1.0)})
    print("shrinking one horoball by distance 1 adds exactly 1:",
          truncated_length(Geodesic(p, r), shrunk, chart))

    print()
    print("== metric-disk clipping ==")
    diameter = Geodesic.of(0.0, math.pi)
    print("diameter clipped to radius 3 has length", clipped_length(diameter, 3.0))
    pts, _ = circle_intersections(diameter, 1.0)
    print("its crossings of the radius-1 circle:",
          [(round(pt.x, 6), round(pt.y, 6)) for pt in pts])
    print("distance of each from the center:",
          [round(point_distance(PlanePoint(0, 0), pt), 12) for pt in pts])

    print()
    print("== ideal polygon areas ==")
    for n in (3, 4, 6, 8):
        print(f"ideal {n}-gon area / pi =", ideal_polygon_area(n) / math.pi)


if __name__ == "__main__":
    main()
