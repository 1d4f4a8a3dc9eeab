"""JSON interchange for curves, verdicts, coverings and area tables.

Strict JSON throughout: angles in radians, floats serialized by Python's
shortest round-trip representation (lossless; never NaN/Inf literals).
Unbounded coordinates are expressed structurally through the vertical-ray
and corner segment kinds, never as infinities.
"""

from __future__ import annotations

import json
from dataclasses import asdict

from .classifier import Certificate, Verdict
from .constructions import AreaDemo
from .coverings import ExactCovering
from .curves import (
    BoundaryCurve,
    CapArc,
    CapGeodesic,
    CornerArc,
    CornerPoint,
    CylinderArc,
    JordanComponent,
    VerticalRay,
)
from .hyperbolic import IdealPoint, PlanePoint
from .polygons import AlternatingPolygon, IdealPolygon

SCHEMA_VERSION = 1


def _segment_to_dict(seg) -> dict:
    if isinstance(seg, CylinderArc):
        return {"kind": "cylinder_arc", "points": [[a, t] for a, t in seg.points]}
    if isinstance(seg, VerticalRay):
        return {"kind": "vertical_ray", "theta": seg.theta,
                "t_start": seg.t_start, "cap": seg.cap}
    if isinstance(seg, CapGeodesic):
        return {"kind": "cap_geodesic", "cap": seg.cap,
                "endpoints": [seg.endpoints[0].theta, seg.endpoints[1].theta]}
    if isinstance(seg, CapArc):
        return {"kind": "cap_arc", "cap": seg.cap,
                "points": [[p.x, p.y] for p in seg.points]}
    if isinstance(seg, CornerPoint):
        return {"kind": "corner_point", "cap": seg.cap, "theta": seg.theta}
    if isinstance(seg, CornerArc):
        return {"kind": "corner_arc", "cap": seg.cap,
                "interval": [seg.interval[0], seg.interval[1]]}
    raise TypeError(f"unknown segment type: {type(seg)!r}")


def _segment_from_dict(d: dict):
    kind = d["kind"]
    if kind == "cylinder_arc":
        return CylinderArc(tuple((float(a), float(t)) for a, t in d["points"]))
    if kind == "vertical_ray":
        return VerticalRay(float(d["theta"]), float(d["t_start"]), d["cap"])
    if kind == "cap_geodesic":
        a, b = d["endpoints"]
        return CapGeodesic(d["cap"], (IdealPoint(float(a)), IdealPoint(float(b))))
    if kind == "cap_arc":
        return CapArc(d["cap"], tuple(PlanePoint(float(x), float(y)) for x, y in d["points"]))
    if kind == "corner_point":
        return CornerPoint(d["cap"], float(d["theta"]))
    if kind == "corner_arc":
        a, b = d["interval"]
        return CornerArc(d["cap"], (float(a), float(b)))
    raise ValueError(f"unknown segment kind: {kind!r}")


def curve_to_doc(curve: BoundaryCurve, meta: dict | None = None) -> dict:
    doc = {
        "schema": SCHEMA_VERSION,
        "components": [
            {"segments": [_segment_to_dict(s) for s in comp.segments]}
            for comp in curve.components
        ],
    }
    if meta:
        doc["meta"] = meta
    return doc


def doc_to_curve(doc: dict) -> BoundaryCurve:
    if doc.get("schema", SCHEMA_VERSION) != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema version: {doc.get('schema')!r}")
    comps = []
    for comp in doc["components"]:
        comps.append(JordanComponent(tuple(
            _segment_from_dict(s) for s in comp["segments"]
        )))
    return BoundaryCurve(tuple(comps))


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, allow_nan=False, sort_keys=True)


def loads(text: str) -> dict:
    return json.loads(text)


# ---------------------------------------------------------------------------
# Polygons


def polygon_to_dict(poly: AlternatingPolygon) -> dict:
    return {
        "vertices": [v.theta for v in poly.vertices],
        "alpha_sides": list(poly.alpha_sides),
    }


def polygon_from_dict(d: dict) -> AlternatingPolygon:
    verts = tuple(IdealPoint(float(a)) for a in d["vertices"])
    return AlternatingPolygon(IdealPolygon(verts), tuple(bool(f) for f in d["alpha_sides"]))


def covering_to_dict(cov: ExactCovering) -> dict:
    return {
        "style": cov.style,
        "pieces": [
            {
                **polygon_to_dict(piece),
                "moves": [
                    {
                        "vertex_index": m.vertex_index,
                        "original": m.original.theta,
                        "replacement": m.replacement.theta,
                        "residual": m.residual,
                    }
                    for m in moves
                ],
            }
            for piece, moves in zip(cov.pieces, cov.moves)
        ],
    }


# ---------------------------------------------------------------------------
# Verdicts and certificates


def _witness_to_jsonable(value):
    if isinstance(value, AlternatingPolygon):
        return polygon_to_dict(value)
    if hasattr(value, "_asdict"):
        return value._asdict()
    if hasattr(value, "__dataclass_fields__"):
        try:
            return asdict(value)
        except TypeError:
            return repr(value)
    if isinstance(value, float) and value == float("inf"):
        return "inf"
    return value


def certificate_to_dict(cert: Certificate) -> dict:
    caps = {}
    for cap, analysis in cert.cap_analyses.items():
        caps[cap] = {
            "trivially_fat": analysis.trivially_fat,
            "hull": [v.theta for v in analysis.hull.vertices] if analysis.hull else None,
            "extended_hull": (
                [v.theta for v in analysis.extended_hull.vertices]
                if analysis.extended_hull else None
            ),
            "faces": [
                {
                    **polygon_to_dict(rep.face),
                    "ab_gap": rep.gap,
                    "fatness": rep.fatness.value,
                    "regular": rep.regular,
                }
                for rep in analysis.face_reports
            ],
        }
    return {
        "band_T": cert.band_T,
        "tall_rectangles": [
            {"theta": list(r.theta_interval), "t": list(r.t_interval)}
            for r in cert.tall_rectangles
        ],
        "caps": caps,
        "face_coverings": {
            cap: [covering_to_dict(c) for c in covs]
            for cap, covs in cert.face_coverings.items()
        },
        "corner_coverings": {
            cap: [
                {
                    "base": [spec.base.p.theta, spec.base.q.theta],
                    "corner_points": list(spec.corner_points),
                    "covering": covering_to_dict(item) if isinstance(item, ExactCovering) else item,
                }
                for spec, item in covs
            ]
            for cap, covs in cert.corner_coverings.items()
        },
    }


def verdict_to_dict(verdict: Verdict, include_certificate: bool = True) -> dict:
    h = verdict.height_report
    out = {
        "verdict": verdict.kind,
        "reasons": list(verdict.reasons),
        "witnesses": {k: _witness_to_jsonable(v) for k, v in verdict.witnesses.items()},
        "height": None if h is None else ("inf" if h.h == float("inf") else h.h),
        "diagnostics": {k: _witness_to_jsonable(v) for k, v in verdict.diagnostics.items()},
    }
    if verdict.exceptional_cause:
        out["exceptional_cause"] = verdict.exceptional_cause
    if include_certificate and verdict.certificate is not None:
        out["certificate"] = certificate_to_dict(verdict.certificate)
    return out


# ---------------------------------------------------------------------------
# Area tables


def area_demo_to_dict(demo: AreaDemo) -> dict:
    return {
        "k": demo.k,
        "c_limit": demo.c_limit,
        "crossover_m": demo.crossover_m,
        "rows": [
            {"m": r.m, "a_m": r.a_m, "b_m": r.b_m, "c_m": r.c_m,
             "lhs": r.lhs, "bound": r.bound}
            for r in demo.rows
        ],
    }


def area_demo_to_csv(demo: AreaDemo) -> str:
    lines = ["m,a_m,b_m,c_m,lhs,bound"]
    for r in demo.rows:
        lines.append(f"{r.m!r},{r.a_m!r},{r.b_m!r},{r.c_m!r},{r.lhs!r},{r.bound!r}")
    return "\n".join(lines) + "\n"
