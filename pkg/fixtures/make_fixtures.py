"""Regenerate the bundled curve fixtures (one JSON document per family)."""

import json
import math
import pathlib

from plateau import curvedoc
from plateau.constructions import (
    CapSpec,
    generate_from_caps,
    infinite_rectangle,
    knoid_curve,
    scherk_curve,
    vertical_plane_component,
)
from plateau.curves import (
    BoundaryCurve,
    CornerArc,
    CapGeodesic,
    CylinderArc,
    JordanComponent,
    VerticalRay,
)
from plateau.hyperbolic import Geodesic, IdealPoint

HERE = pathlib.Path(__file__).parent


def circle(t):
    return JordanComponent((CylinderArc(((0.0, t), (2 * math.pi, t))),))


def write(name, curve, note):
    doc = curvedoc.curve_to_doc(curve, meta={"note": note})
    (HERE / name).write_text(curvedoc.dumps(doc) + "\n")
    print(name)


def main():
    write("infinite_rectangle.json",
          BoundaryCurve((infinite_rectangle(Geodesic.of(0.0, 1.2), 0.0, "+"),)),
          "single infinite rectangle; strongly fillable")

    write("scherk_square.json", scherk_curve(2),
          "boundary curve of the symmetric exact square; exceptional")
    write("scherk_hexagon.json", scherk_curve(3),
          "boundary curve of the symmetric exact hexagon; exceptional")

    write("knoid_k2.json", knoid_curve(2),
          "two vertical planes, skinny at infinity; fillable but not strongly")
    write("knoid_k3.json", knoid_curve(3),
          "three vertical planes, skinny at infinity")

    write("caps_4up_3down.json", generate_from_caps(CapSpec(
        plus=(Geodesic.of(0.1, 0.6), Geodesic.of(0.8, 1.3),
              Geodesic.of(1.5, 2.0), Geodesic.of(2.2, 2.7)),
        minus=(Geodesic.of(3.2, 3.7), Geodesic.of(4.0, 4.5),
               Geodesic.of(4.8, 5.3)),
    )), "seven infinite rectangles realizing prescribed cap geodesics")

    write("fat_pair_rectangles.json", BoundaryCurve((
        infinite_rectangle(Geodesic.of(0.1, 0.7), 1.0, "+"),
        infinite_rectangle(Geodesic.of(2.5, 3.3), 2.0, "+"),
    )), "two narrow rectangles; single fat face; strongly fillable")

    write("corner_arc_negative.json", BoundaryCurve((JordanComponent((
        VerticalRay(1.0, 0.0, "+"),
        CornerArc("+", (1.0, 2.0)),
        VerticalRay(2.0, 0.0, "+"),
        CylinderArc(((2.0, 0.0), (1.0, 0.0))),
    )),)), "overlaps the + corner circle in an interval; not minimally fillable")

    write("shared_endpoint_negative.json", BoundaryCurve((JordanComponent((
        CapGeodesic("+", (IdealPoint(0.0), IdealPoint(math.pi / 2))),
        CapGeodesic("+", (IdealPoint(math.pi / 2), IdealPoint(math.pi))),
        VerticalRay(math.pi, 0.0, "+"),
        CylinderArc(((math.pi, 0.0), (0.0, 0.0))),
        VerticalRay(0.0, 0.0, "+"),
    )),)), "two cap geodesics sharing an endpoint")

    write("two_circles_gap3.json", BoundaryCurve((circle(0.0), circle(3.0))),
          "finite curve with height 3; not tall")
    write("two_circles_gap_pi.json", BoundaryCurve((circle(0.0), circle(math.pi))),
          "finite curve exactly at the borderline height pi")
    write("two_circles_gap4.json", BoundaryCurve((circle(0.0), circle(4.0))),
          "finite tall curve; strongly fillable")

    write("trapped_nested_planes.json", BoundaryCurve((
        vertical_plane_component(Geodesic.of(1.65, 2.9)),
        vertical_plane_component(Geodesic.of(1.9, 2.6)),
    )), "nested vertical planes, trapped by the exact-square wall")

    (HERE / "exact_square.json").write_text(json.dumps({
        "vertices": [0.0, math.pi / 2, math.pi, 3 * math.pi / 2],
        "alpha_sides": [True, False, True, False],
    }, indent=2) + "\n")
    print("exact_square.json")

    (HERE / "fat_quadrilateral.json").write_text(json.dumps({
        "vertices": [0.0, 0.2, math.pi, math.pi + 0.2],
        "alpha_sides": [True, False, True, False],
    }, indent=2) + "\n")
    print("fat_quadrilateral.json")


if __name__ == "__main__":
    main()
