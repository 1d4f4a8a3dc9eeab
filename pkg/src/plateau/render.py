"""Deterministic three-panel SVG rendering of boundary curves.

Left panel: the + cap disk.  Middle: the cylinder development
[0, 2*pi] x [-T, T].  Right: the - cap disk.  Optional layers add hulls,
face chords, covering pieces and tall rectangles on top of the curve.
Output bytes depend only on the input and options.
"""

from __future__ import annotations

import math

from .curves import (
    BoundaryCurve,
    CapArc,
    CapGeodesic,
    CornerArc,
    CornerPoint,
    CylinderArc,
    VerticalRay,
)
from .hyperbolic import TWO_PI, Geodesic, normalize_angle

PANEL = 360.0
PAD = 20.0
WIDTH = 3 * PANEL + 4 * PAD
HEIGHT = PANEL + 2 * PAD

CURVE_COLOR = {"+": "#c0392b", "-": "#2471a3", "cyl": "#1e8449"}


def _f(x: float) -> str:
    return f"{x:.4f}"


class _Panel:
    def __init__(self, x0: float):
        self.x0 = x0

    def disk_xy(self, x: float, y: float) -> tuple[float, float]:
        cx = self.x0 + PANEL / 2.0
        cy = PAD + PANEL / 2.0
        r = PANEL / 2.0 - 4.0
        return cx + r * x, cy - r * y

    def dev_xy(self, theta: float, t: float, T: float) -> tuple[float, float]:
        x = self.x0 + (theta / TWO_PI) * PANEL
        y = PAD + PANEL / 2.0 - (t / T) * (PANEL / 2.0 - 4.0)
        return x, y


def _disk_geodesic_path(panel: _Panel, g: Geodesic) -> str:
    ux, uy = math.cos(g.p.theta), math.sin(g.p.theta)
    wx, wy = math.cos(g.q.theta), math.sin(g.q.theta)
    x1, y1 = panel.disk_xy(ux, uy)
    x2, y2 = panel.disk_xy(wx, wy)
    dot = ux * wx + uy * wy
    if 1.0 + dot < 1e-12:
        return f"M {_f(x1)} {_f(y1)} L {_f(x2)} {_f(y2)}"
    scale = 1.0 / (1.0 + dot)
    cx, cy = scale * (ux + wx), scale * (uy + wy)
    radius = math.sqrt(cx * cx + cy * cy - 1.0)
    r_px = radius * (PANEL / 2.0 - 4.0)
    cross = (wx - ux) * (cy - uy) - (wy - uy) * (cx - ux)
    sweep = 1 if cross < 0.0 else 0
    return (f"M {_f(x1)} {_f(y1)} A {_f(r_px)} {_f(r_px)} 0 0 {sweep} "
            f"{_f(x2)} {_f(y2)}")


def _polyline(points) -> str:
    return " ".join(f"{_f(x)},{_f(y)}" for x, y in points)


def render_svg(curve: BoundaryCurve, T: float | None = None,
               layers: dict | None = None) -> str:
    """Render a curve (plus optional layers) as an SVG document string.

    ``layers`` may contain: "hulls" (list of (cap, polygon)), "faces"
    (list of (cap, polygon)), "coverings" (list of (cap, ExactCovering)),
    "tall_rectangles" (list of TallRectangle).
    """
    from .curves import band_extent

    if T is None:
        T = max(band_extent(curve) + math.pi + 1.0, math.pi + 1.0)
    layers = layers or {}
    cap_plus = _Panel(PAD)
    dev = _Panel(2 * PAD + PANEL)
    cap_minus = _Panel(3 * PAD + 2 * PANEL)
    panels = {"+": cap_plus, "-": cap_minus}

    parts: list[str] = []
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{int(WIDTH)}" '
        f'height="{int(HEIGHT)}" viewBox="0 0 {int(WIDTH)} {int(HEIGHT)}">'
    )
    parts.append(f'<rect width="{int(WIDTH)}" height="{int(HEIGHT)}" fill="white"/>')
    for cap, panel in panels.items():
        cx = panel.x0 + PANEL / 2.0
        cy = PAD + PANEL / 2.0
        parts.append(
            f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(PANEL / 2.0 - 4.0)}" '
            f'fill="none" stroke="#999" stroke-width="1"/>'
        )
    parts.append(
        f'<rect x="{_f(dev.x0)}" y="{_f(PAD)}" width="{_f(PANEL)}" '
        f'height="{_f(PANEL)}" fill="none" stroke="#999" stroke-width="1"/>'
    )
    parts.append(
        f'<clipPath id="dev"><rect x="{_f(dev.x0)}" y="{_f(PAD)}" '
        f'width="{_f(PANEL)}" height="{_f(PANEL)}"/></clipPath>'
    )

    # Tall rectangles under the curve.
    for rect in layers.get("tall_rectangles", ()):
        (a, b), (t1, t2) = rect.theta_interval, rect.t_interval
        x1, y1 = dev.dev_xy(normalize_angle(a), min(t2, T), T)
        x2, y2 = dev.dev_xy(normalize_angle(a) + (b - a), max(t1, -T), T)
        parts.append(
            f'<rect x="{_f(x1)}" y="{_f(y1)}" width="{_f(abs(x2 - x1))}" '
            f'height="{_f(abs(y2 - y1))}" fill="#f9e79f" fill-opacity="0.35" '
            f'stroke="#b7950b" stroke-width="0.4"/>'
        )

    for cap, poly in layers.get("hulls", ()):
        panel = panels[cap]
        n = len(poly.vertices)
        for i in range(n):
            g = Geodesic(poly.vertices[i], poly.vertices[(i + 1) % n])
            parts.append(
                f'<path d="{_disk_geodesic_path(panel, g)}" fill="none" '
                f'stroke="#7d3c98" stroke-width="0.8" stroke-dasharray="4 3"/>'
            )
    for cap, poly in layers.get("faces", ()):
        panel = panels[cap]
        for i in range(len(poly)):
            if poly.alpha_sides[i]:
                continue
            parts.append(
                f'<path d="{_disk_geodesic_path(panel, poly.side(i))}" fill="none" '
                f'stroke="#16a085" stroke-width="0.8" stroke-dasharray="2 2"/>'
            )
    for cap, cov in layers.get("coverings", ()):
        panel = panels[cap]
        for piece in cov.pieces:
            for i in range(len(piece)):
                parts.append(
                    f'<path d="{_disk_geodesic_path(panel, piece.side(i))}" '
                    f'fill="none" stroke="#e67e22" stroke-width="0.6"/>'
                )

    # The curve itself.
    for comp in curve.components:
        for seg in comp.segments:
            if isinstance(seg, CylinderArc):
                # Each edge drawn at its own lift (plus the wrapped copy),
                # clipped to the development rectangle.
                for (a1, t1), (a2, t2) in zip(seg.points, seg.points[1:]):
                    base = normalize_angle(a1)
                    for shift in (0.0, -TWO_PI, TWO_PI):
                        x1, y1 = dev.dev_xy(base + shift, max(-T, min(T, t1)), T)
                        x2, y2 = dev.dev_xy(base + shift + (a2 - a1), max(-T, min(T, t2)), T)
                        if max(x1, x2) < dev.x0 or min(x1, x2) > dev.x0 + PANEL:
                            continue
                        parts.append(
                            f'<line x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" '
                            f'y2="{_f(y2)}" clip-path="url(#dev)" '
                            f'stroke="{CURVE_COLOR["cyl"]}" stroke-width="1.6"/>'
                        )
            elif isinstance(seg, VerticalRay):
                t_edge = T if seg.cap == "+" else -T
                x1, y1 = dev.dev_xy(normalize_angle(seg.theta), seg.t_start, T)
                x2, y2 = dev.dev_xy(normalize_angle(seg.theta), t_edge, T)
                parts.append(
                    f'<line x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}" '
                    f'stroke="{CURVE_COLOR["cyl"]}" stroke-width="1.6"/>'
                )
            elif isinstance(seg, CapGeodesic):
                panel = panels[seg.cap]
                parts.append(
                    f'<path d="{_disk_geodesic_path(panel, seg.geodesic)}" fill="none" '
                    f'stroke="{CURVE_COLOR[seg.cap]}" stroke-width="1.6"/>'
                )
            elif isinstance(seg, CapArc):
                panel = panels[seg.cap]
                pts = [panel.disk_xy(p.x, p.y) for p in seg.points]
                parts.append(
                    f'<polyline points="{_polyline(pts)}" fill="none" '
                    f'stroke="{CURVE_COLOR[seg.cap]}" stroke-width="1.6"/>'
                )
            elif isinstance(seg, CornerPoint):
                panel = panels[seg.cap]
                x, y = panel.disk_xy(math.cos(seg.theta), math.sin(seg.theta))
                parts.append(
                    f'<circle cx="{_f(x)}" cy="{_f(y)}" r="3" '
                    f'fill="{CURVE_COLOR[seg.cap]}"/>'
                )
            elif isinstance(seg, CornerArc):
                panel = panels[seg.cap]
                a, b = seg.interval
                span = normalize_angle(b - a)
                steps = max(8, int(span / 0.1))
                pts = [
                    panel.disk_xy(math.cos(a + span * i / steps), math.sin(a + span * i / steps))
                    for i in range(steps + 1)
                ]
                parts.append(
                    f'<polyline points="{_polyline(pts)}" fill="none" '
                    f'stroke="{CURVE_COLOR[seg.cap]}" stroke-width="3.2"/>'
                )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
