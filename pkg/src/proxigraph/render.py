"""Point-set parsing and drawing serialization.

Reads CSV / JSON / Ipe XML point inputs and writes complete Ipe XML
documents, standalone SVG, and a machine-readable result JSON. Both writers
are deterministic: the same document always serializes to the same bytes.
"""

from __future__ import annotations

import colorsys
import json
import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from enum import Enum

from .clustering import NOISE, Clustering
from .errors import EmptyInput, ParseError
from .geometry import Graph, PointSet, Triangulation

IPE_VERSION = "70218"
CREATOR = "proxigraph"

#: named palette head; cluster ids >= 8 get HSV-spaced extras
PALETTE_NAMES = ("black", "red", "blue", "green", "orange", "purple", "brown", "gray")
_PALETTE_RGB = {
    "black": (0.0, 0.0, 0.0),
    "red": (1.0, 0.0, 0.0),
    "blue": (0.0, 0.0, 1.0),
    "green": (0.0, 1.0, 0.0),
    "orange": (1.0, 0.647, 0.0),
    "purple": (0.502, 0.0, 0.502),
    "brown": (0.647, 0.165, 0.165),
    "gray": (0.502, 0.502, 0.502),
}
GRAY_INDEX = PALETTE_NAMES.index("gray")

MARK_DISK = "disk"
MARK_CROSS = "cross"


def palette_rgb(index: int) -> tuple[float, float, float]:
    """Deterministic cluster-id -> color mapping."""
    if index < 0:
        raise ValueError(f"palette index must be >= 0, got {index}")
    if index < len(PALETTE_NAMES):
        return _PALETTE_RGB[PALETTE_NAMES[index]]
    # golden-angle hue spacing keeps consecutive extras far apart
    hue = ((index - 8) * 137.508) % 360.0 / 360.0
    return colorsys.hsv_to_rgb(hue, 0.8, 0.85)


def _fmt(value: float) -> str:
    """Coordinates with up to 6 fractional digits, trailing zeros trimmed."""
    text = f"{value:.6f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def _ipe_color(index: int) -> str:
    if index < len(PALETTE_NAMES):
        return PALETTE_NAMES[index]
    r, g, b = palette_rgb(index)
    return f"{_fmt(r)} {_fmt(g)} {_fmt(b)}"


def _svg_color(index: int) -> str:
    r, g, b = palette_rgb(index)
    return "#{:02x}{:02x}{:02x}".format(round(r * 255), round(g * 255), round(b * 255))


@dataclass(frozen=True)
class Mark:
    """Per-point style."""

    color: int = 0
    symbol: str = MARK_DISK


@dataclass(frozen=True)
class Document:
    """Renderable scene over a point set.

    Segments are (i, j, color index); circles are (center index, radius,
    color index). Every referenced index must be a valid point index.
    """

    points: PointSet
    marks: tuple[Mark, ...] = ()
    segments: tuple[tuple[int, int, int], ...] = ()
    circles: tuple[tuple[int, float, int], ...] = ()
    page: tuple[float, float] = (595.0, 842.0)

    def __post_init__(self):
        n = len(self.points)
        if self.marks and len(self.marks) != n:
            raise ValueError(f"{len(self.marks)} marks for {n} points")
        for i, j, _ in self.segments:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"segment ({i},{j}) out of range")
        for c, r, _ in self.circles:
            if not 0 <= c < n:
                raise ValueError(f"circle center {c} out of range")
            if not r >= 0:
                raise ValueError(f"negative circle radius {r}")

    def mark_at(self, i: int) -> Mark:
        return self.marks[i] if self.marks else Mark()


class PointFormat(Enum):
    CSV = "csv"
    JSON = "json"
    IPE_XML = "ipe"


def _finite(value: float, where: str) -> float:
    if not math.isfinite(value):
        raise ParseError(f"non-finite coordinate {value!r}", where)
    return value


def parse_points(data: bytes, fmt: PointFormat) -> PointSet:
    """Parse a point set; input order becomes index order.

    Duplicates are allowed here (graph and clustering operations reject them
    later) but non-finite coordinates are not.
    """
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"input is not UTF-8: {exc}") from exc
    if fmt is PointFormat.CSV:
        return _parse_csv(text)
    if fmt is PointFormat.JSON:
        return _parse_json(text)
    return _parse_ipe(text)


def _parse_csv(text: str) -> PointSet:
    points: list[tuple[float, float]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(",")]
        try:
            if len(parts) != 2:
                raise ValueError(f"expected 'x,y', got {len(parts)} fields")
            x, y = float(parts[0]), float(parts[1])
        except ValueError as exc:
            if lineno == 1 and not points:
                continue  # non-numeric header
            raise ParseError(str(exc), f"line {lineno}") from exc
        points.append((_finite(x, f"line {lineno}"), _finite(y, f"line {lineno}")))
    if not points:
        raise EmptyInput("no points in CSV input")
    return PointSet.from_xy(points)


def _parse_json(text: str) -> PointSet:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(str(exc)) from exc
    if not isinstance(payload, list):
        raise ParseError("expected a JSON array of [x, y] pairs")
    points = []
    for i, entry in enumerate(payload):
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in entry)
        ):
            raise ParseError("expected an [x, y] number pair", f"element {i}")
        points.append((_finite(float(entry[0]), f"element {i}"), _finite(float(entry[1]), f"element {i}")))
    if not points:
        raise EmptyInput("no points in JSON input")
    return PointSet.from_xy(points)


def _parse_ipe(text: str) -> PointSet:
    try:
        tree = ET.fromstring(text)
    except ET.ParseError as exc:
        raise ParseError(str(exc)) from exc
    points = []
    for idx, use in enumerate(tree.iter("use")):
        pos = use.get("pos")
        if pos is None:
            continue
        parts = pos.split()
        if len(parts) != 2:
            raise ParseError(f"bad pos attribute {pos!r}", f"use element {idx}")
        try:
            x, y = float(parts[0]), float(parts[1])
        except ValueError as exc:
            raise ParseError(f"bad pos attribute {pos!r}", f"use element {idx}") from exc
        points.append((_finite(x, f"use element {idx}"), _finite(y, f"use element {idx}")))
    if not points:
        raise EmptyInput("no mark objects with a pos attribute in Ipe input")
    return PointSet.from_xy(points)


# ---------------------------------------------------------------------------
# Writers
# ---------------------------------------------------------------------------


def write_ipe(doc: Document) -> bytes:
    """Complete Ipe XML document; byte-stable for a given Document."""
    lines = [
        '<?xml version="1.0"?>',
        f'<ipe version="{IPE_VERSION}" creator="{CREATOR}">',
        "<page>",
    ]
    for i, p in enumerate(doc.points):
        mark = doc.mark_at(i)
        name = "mark/cross(sx)" if mark.symbol == MARK_CROSS else "mark/disk(sx)"
        lines.append(
            f'<use name="{name}" pos="{_fmt(p.x)} {_fmt(p.y)}" size="normal" '
            f'stroke="{_ipe_color(mark.color)}"/>'
        )
    for i, j, color in doc.segments:
        a, b = doc.points[i], doc.points[j]
        lines.append(
            f'<path stroke="{_ipe_color(color)}">'
            f"{_fmt(a.x)} {_fmt(a.y)} m {_fmt(b.x)} {_fmt(b.y)} l</path>"
        )
    for center, radius, color in doc.circles:
        c = doc.points[center]
        lines.append(
            f'<path stroke="{_ipe_color(color)}">'
            f"{_fmt(radius)} 0 0 {_fmt(radius)} {_fmt(c.x)} {_fmt(c.y)} e</path>"
        )
    lines.append("</page>")
    lines.append("</ipe>")
    return ("\n".join(lines) + "\n").encode("utf-8")


def write_svg(doc: Document) -> bytes:
    """Standalone SVG 1.1; y-axis flipped to match Ipe's upward orientation."""
    pts = doc.points
    if len(pts) == 0:
        width = height = 100.0
        ox, oy = 0.0, 0.0
        top = height

        def txy(x: float, y: float) -> tuple[float, float]:
            return x, top - y

    else:
        xs = [p.x for p in pts]
        ys = [p.y for p in pts]
        xmin, xmax = min(xs), max(xs)
        ymin, ymax = min(ys), max(ys)
        margin = 0.05 * max(xmax - xmin, ymax - ymin)
        if margin == 0.0:
            margin = 10.0
        ox = xmin - margin
        oy = ymin - margin
        width = (xmax - xmin) + 2 * margin
        height = (ymax - ymin) + 2 * margin
        top = ymax + margin

        def txy(x: float, y: float) -> tuple[float, float]:
            return x - ox, top - y

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
    ]
    for i, j, color in doc.segments:
        x1, y1 = txy(doc.points[i].x, doc.points[i].y)
        x2, y2 = txy(doc.points[j].x, doc.points[j].y)
        lines.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="{_svg_color(color)}" stroke-width="1"/>'
        )
    for center, radius, color in doc.circles:
        cx, cy = txy(doc.points[center].x, doc.points[center].y)
        lines.append(
            f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(radius)}" '
            f'fill="none" stroke="{_svg_color(color)}" stroke-width="1"/>'
        )
    for i, p in enumerate(doc.points):
        mark = doc.mark_at(i)
        x, y = txy(p.x, p.y)
        color = _svg_color(mark.color)
        if mark.symbol == MARK_CROSS:
            lines.append(
                f'<path d="M {_fmt(x - 3)} {_fmt(y - 3)} L {_fmt(x + 3)} {_fmt(y + 3)} '
                f'M {_fmt(x - 3)} {_fmt(y + 3)} L {_fmt(x + 3)} {_fmt(y - 3)}" '
                f'stroke="{color}" stroke-width="1" fill="none"/>'
            )
        else:
            lines.append(
                f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="2" fill="{color}" stroke="{color}"/>'
            )
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")


def write_result_json(result: Graph | Triangulation | Clustering) -> bytes:
    """Machine-readable result payload with stable field order and formatting."""
    if isinstance(result, Triangulation):
        result = result.edge_graph()
    if isinstance(result, Graph):
        payload = {
            "type": "graph",
            "n": result.n,
            "edges": [[i, j] for i, j in result.edge_list()],
        }
    elif isinstance(result, Clustering):
        payload = {
            "type": "clustering",
            "labels": list(result.labels),
            "noise": NOISE,
        }
        if result.centers is not None:
            payload["centers"] = [[p.x, p.y] for p in result.centers]
        if result.medoids is not None:
            payload["medoids"] = list(result.medoids)
    else:
        raise TypeError(f"cannot serialize {type(result).__name__}")
    return json.dumps(payload, separators=(",", ":")).encode("utf-8")
