"""Fat, skinny, exact: the alternating-polygon taxonomy.

Run:  python demos/02_polygon_taxonomy.py
"""

import math

import numpy as np

from plateau import (
    AlternatingPolygon,
    Decoration,
    ab_gap,
    classify_fatness,
    enumerate_inscribed,
    is_exact,
    is_regular,
)


def main():
    square = AlternatingPolygon.of([0.0, math.pi / 2, math.pi, 3 * math.pi / 2])
    skew = AlternatingPolygon.of([0.0, 0.2, math.pi, math.pi + 0.2])

    print("symmetric square: gap =", ab_gap(square), "->", classify_fatness(square).value)
    print("  regular:", is_regular(square), " exact:", is_exact(square))
    print("skew square: gap =", ab_gap(skew), "->", classify_fatness(skew).value)
    print("  swapping the labels negates the gap:", ab_gap(skew.swap_labels()))

    print()
    print("the gap ignores the horoball decoration entirely:")
    rng = np.random.default_rng(1)
    for _ in range(3):
        sizes = {v: rng.uniform(0.1, 10.0) for v in skew.vertices}
        print("  random decoration ->", ab_gap(skew, Decoration(sizes)))

    print()
    print("inscribed sub-polygons of the square:", len(enumerate_inscribed(square)))
    hexagon = AlternatingPolygon.of([k * math.pi / 3 for k in range(6)])
    print("inscribed sub-polygons of the hexagon:", len(enumerate_inscribed(hexagon)))
    print("the symmetric hexagon is exact:", is_exact(hexagon))

    # Extreme lopsidedness breaks regularity even though the gap is negative.
    narrow = AlternatingPolygon.of(sorted(
        (a % (2 * math.pi))
        for k in range(3)
        for a in (2 * math.pi * k / 3 - 0.25, 2 * math.pi * k / 3 + 0.25)
    ), alpha_first=False)
    print()
    print("very narrow alpha sides: gap =", round(ab_gap(narrow), 3),
          "fat =", classify_fatness(narrow).value,
          "but regular =", is_regular(narrow))


if __name__ == "__main__":
    main()
