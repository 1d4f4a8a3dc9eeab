"""Boundary curves on the cylinder-with-caps: height, tallness, covers.

Run:  python demos/03_curves_and_height.py
"""

import math

from plateau import (
    BoundaryCurve,
    CylinderArc,
    Geodesic,
    JordanComponent,
    band_extent,
    decompose,
    height,
    infinite_rectangle,
    is_tall,
    tall_cover,
    thin_tail_scan,
    validate,
    verify_tall_cover,
)

TWO_PI = 2 * math.pi


def circle(t):
    return JordanComponent((CylinderArc(((0.0, t), (TWO_PI, t))),))


def main():
    print("== two horizontal circles ==")
    for gap in (4.0, 3.0, math.pi):
        curve = BoundaryCurve((circle(0.0), circle(gap)))
        print(f"gap {gap:.5f}: height {height(curve).h:.5f} -> {is_tall(curve)}")

    print()
    print("== tall rectangle cover of the gap-4 curve ==")
    curve = BoundaryCurve((circle(0.0), circle(4.0)))
    T = band_extent(curve) + math.pi + 1.0
    rects = tall_cover(curve, T)
    report = verify_tall_cover(curve, rects, T)
    print(f"{len(rects)} rectangles; sampled coverage {report.coverage:.3f},"
          f" all taller than pi: {report.all_tall},"
          f" none meets the curve: {report.disjoint_from_curve}")

    print()
    print("== an infinite rectangle ==")
    comp = infinite_rectangle(Geodesic.of(0.0, 1.2), 0.0, "+")
    inf_rect = BoundaryCurve((comp,))
    print("violations:", validate(inf_rect))
    dec = decompose(inf_rect)
    print("cap-+ geodesics:", [g.angles for g in dec.cap_geodesics["+"]])
    print("height:", height(inf_rect).h)

    print()
    print("== a thin tail ==")
    hook = BoundaryCurve((JordanComponent((CylinderArc((
        (5.0, 1.0), (2.0, 1.0), (3.0, 0.3), (2.0, -0.4), (5.0, -0.4),
        (5.5, 2.0), (5.5, 6.0), (4.8, 6.0), (5.0, 1.0),
    )),)),))
    witness = thin_tail_scan(hook)
    print("height of the hooked curve:", height(hook).h)
    print("tail witness around theta =", witness.line_theta,
          "inside the band", witness.band)


if __name__ == "__main__":
    main()
