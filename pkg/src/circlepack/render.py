"""CSV, JSON and SVG emitters."""

from __future__ import annotations

import csv
import io
import json
import math
import xml.etree.ElementTree as ET
from typing import Any, Sequence

from .hexpack import HexPackMetrics
from .model import ArcShape, PackingSequence, SegmentShape, arc_points, bounding_box, report_dict

ARC_SEGMENTS = 128
MARGIN = 0.02
STROKE = 0.002
FILL_OPACITY = "0.3"


def round_sig(value: float, precision: int) -> float:
    """``value`` rounded to ``precision`` significant digits."""
    return float(f"{value:.{precision}g}")


def fmt(value: Any, precision: int) -> str:
    """Shortest text that reads back as ``value`` rounded to ``precision`` digits."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return repr(round_sig(value, precision))
    return str(value)


def _jsonable(value: Any, precision: int) -> Any:
    if isinstance(value, float) and not isinstance(value, bool):
        return round_sig(value, precision) if math.isfinite(value) else None
    if isinstance(value, dict):
        return {k: _jsonable(v, precision) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v, precision) for v in value]
    return value


def _dump(obj: Any, precision: int) -> str:
    return json.dumps(_jsonable(obj, precision), indent=2) + "\n"


def _write_csv(header: Sequence[str], rows: Sequence[Sequence[Any]], precision: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(v, precision) for v in row])
    return buf.getvalue()


# Packing sequences


def _has_theta(seqs: Sequence[PackingSequence]) -> bool:
    return any(c.theta is not None for s in seqs for c in s.circles)


def _rows(seq: PackingSequence, with_theta: bool, extras: Sequence[str]) -> list[dict[str, Any]]:
    out = []
    for k, c in enumerate(seq.circles):
        row: dict[str, Any] = {"index": c.index, "radius": c.radius, "cx": c.cx, "cy": c.cy}
        if with_theta:
            row["theta_deg"] = math.degrees(c.theta) if c.theta is not None else None
        for name in extras:
            col = seq.extra_columns.get(name)
            row[name] = col[k] if col is not None and k < len(col) else None
        out.append(row)
    return out


def _extra_names(seqs: Sequence[PackingSequence]) -> list[str]:
    names: list[str] = []
    for s in seqs:
        for name in s.extra_columns:
            if name not in names:
                names.append(name)
    return names


def sequences_csv(seqs: Sequence[PackingSequence], precision: int) -> str:
    """One row per circle.  Several sequences get a leading ``region`` column."""
    with_theta = _has_theta(seqs)
    extras = _extra_names(seqs)
    multi = len(seqs) > 1
    header = (["region"] if multi else []) + ["index", "radius", "cx", "cy"]
    header += (["theta_deg"] if with_theta else []) + extras
    rows = []
    for s in seqs:
        for row in _rows(s, with_theta, extras):
            rows.append(([s.region] if multi else []) + list(row.values()))
    return _write_csv(header, rows, precision)


def _sequence_obj(seq: PackingSequence, report=None) -> dict[str, Any]:
    with_theta = _has_theta([seq])
    obj: dict[str, Any] = {
        "region": seq.region,
        "params": seq.params,
        "meta": seq.meta,
        "circles": _rows(seq, with_theta, list(seq.extra_columns)),
    }
    if report is not None:
        obj["verification"] = report_dict(report)
    return obj


def sequences_json(seqs: Sequence[PackingSequence], precision: int, reports=None) -> str:
    reports = reports or [None] * len(seqs)
    objs = [_sequence_obj(s, r) for s, r in zip(seqs, reports)]
    if len(objs) == 1:
        return _dump(objs[0], precision)
    return _dump({"sequences": objs}, precision)


def _svg_root(xmin: float, ymin: float, xmax: float, ymax: float, precision: int) -> tuple[ET.Element, ET.Element, float]:
    w, h = xmax - xmin, ymax - ymin
    major = max(w, h)
    m = MARGIN * major
    root = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "viewBox": " ".join(fmt(v, precision) for v in (xmin - m, -(ymax + m), w + 2 * m, h + 2 * m)),
        },
    )
    group = ET.SubElement(
        root,
        "g",
        {"transform": "scale(1,-1)", "fill": "none", "stroke": "black", "stroke-width": fmt(STROKE * major, precision)},
    )
    return root, group, major


def _polyline(parent: ET.Element, pts, precision: int, cls: str) -> None:
    ET.SubElement(
        parent,
        "polyline",
        {"class": cls, "points": " ".join(f"{fmt(x, precision)},{fmt(y, precision)}" for x, y in pts)},
    )


def _boundary(parent: ET.Element, shapes, precision: int) -> None:
    for s in shapes:
        if isinstance(s, SegmentShape):
            _polyline(parent, [(s.x0, s.y0), (s.x1, s.y1)], precision, "boundary")
        elif isinstance(s, ArcShape) and s.full:
            ET.SubElement(
                parent,
                "circle",
                {
                    "class": "boundary",
                    "cx": fmt(s.cx, precision),
                    "cy": fmt(s.cy, precision),
                    "r": fmt(s.radius, precision),
                },
            )
        else:
            _polyline(parent, arc_points(s, ARC_SEGMENTS), precision, "boundary")


def _serialize(root: ET.Element) -> str:
    ET.indent(root)
    return '<?xml version="1.0" encoding="utf-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"


def sequences_svg(seqs: Sequence[PackingSequence], precision: int) -> str:
    shapes = []
    for s in seqs:
        for b in s.boundary:
            if b not in shapes:
                shapes.append(b)
    circles = [c for s in seqs for c in s.circles]
    root, group, _ = _svg_root(*bounding_box(shapes, circles), precision)
    _boundary(group, shapes, precision)
    for s in seqs:
        for c in s.circles:
            ET.SubElement(
                group,
                "circle",
                {
                    "class": "packed",
                    "data-region": s.region,
                    "data-index": str(c.index),
                    "cx": fmt(c.cx, precision),
                    "cy": fmt(c.cy, precision),
                    "r": fmt(c.radius, precision),
                    "fill": "steelblue",
                    "fill-opacity": FILL_OPACITY,
                },
            )
    return _serialize(root)


# Hexagonal packing


def hex_record(n: int, r: float, m: HexPackMetrics) -> dict[str, Any]:
    return {"n": n, "r": r, **m.as_dict()}


def hex_csv(n: int, r: float, m: HexPackMetrics, precision: int) -> str:
    rec = hex_record(n, r, m)
    return _write_csv(list(rec), [list(rec.values())], precision)


def hex_json(n: int, r: float, m: HexPackMetrics, precision: int) -> str:
    return _dump(hex_record(n, r, m), precision)


def hex_svg(m: HexPackMetrics, precision: int) -> str:
    """Hexagon (vertices at distance ``side`` from the centre) and the circle around the packing."""
    a, R = m.side, m.circumradius
    ext = max(a, R)
    root, group, _ = _svg_root(-ext, -ext, ext, ext, precision)
    verts = [(a * math.cos(k * math.pi / 3.0), a * math.sin(k * math.pi / 3.0)) for k in range(7)]
    _polyline(group, verts, precision, "hexagon")
    ET.SubElement(group, "circle", {"class": "circumscribing", "cx": "0.0", "cy": "0.0", "r": fmt(R, precision)})
    return _serialize(root)


def curve_csv(rows: Sequence[tuple[int, float]], precision: int) -> str:
    return _write_csv(["n", "density"], rows, precision)


def curve_json(rows: Sequence[tuple[int, float]], precision: int) -> str:
    return _dump([{"n": n, "density": rho} for n, rho in rows], precision)


def curve_svg(rows: Sequence[tuple[int, float]], precision: int) -> str:
    """Density against n, drawn in data coordinates."""
    xs = [float(n) for n, _ in rows]
    ys = [rho for _, rho in rows]
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    if xmax == xmin:
        xmin, xmax = xmin - 0.5, xmax + 0.5
    if ymax == ymin:
        ymin, ymax = ymin - 0.5 * abs(ymin) - 1e-3, ymax + 0.5 * abs(ymax) + 1e-3
    # Stretch the density axis so both axes fill the picture.
    sy = (xmax - xmin) / (ymax - ymin)
    root, group, _ = _svg_root(xmin, ymin * sy, xmax, ymax * sy, precision)
    _polyline(group, [(x, y * sy) for x, y in zip(xs, ys)], precision, "density")
    return _serialize(root)
