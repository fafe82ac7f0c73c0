"""Deterministic SVG snapshots of subdivision runs and body streams."""

from __future__ import annotations

from pathlib import Path
from typing import Optional, Sequence

from .geometry import Anchor, ConvexBody
from .subdivision import (
    AnnulusOracle,
    Color,
    DiscOracle,
    PolygonOracle,
    SubdivisionEngine,
    UnionOracle,
)

FILL = {Color.GREEN: "#8fd18f", Color.RED: "#e06666", Color.YELLOW: "#f6e27a"}
SIZE = 600


def _f(v) -> str:
    s = f"{float(v):.6f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


class _Canvas:
    """World-to-pixel mapping with y pointing up."""

    def __init__(self, xmin, ymin, xmax, ymax):
        self.xmin, self.ymin = xmin, ymin
        span = max(xmax - xmin, ymax - ymin)
        self.scale = SIZE / span
        self.parts: list[str] = []

    def x(self, v) -> str:
        return _f((v - self.xmin) * self.scale)

    def y(self, v) -> str:
        return _f(SIZE - (v - self.ymin) * self.scale)

    def length(self, v) -> str:
        return _f(v * self.scale)

    def rect(self, x0, y0, x1, y1, **attrs) -> None:
        self.parts.append(
            f'<rect x="{self.x(x0)}" y="{self.y(y1)}" width="{self.length(x1 - x0)}" '
            f'height="{self.length(y1 - y0)}"{_attrs(attrs)}/>'
        )

    def polygon(self, points, **attrs) -> None:
        pts = " ".join(f"{self.x(p.x)},{self.y(p.y)}" for p in points)
        self.parts.append(f'<polygon points="{pts}"{_attrs(attrs)}/>')

    def circle(self, cx, cy, r, **attrs) -> None:
        self.parts.append(
            f'<circle cx="{self.x(cx)}" cy="{self.y(cy)}" r="{self.length(r)}"{_attrs(attrs)}/>'
        )

    def marker(self, p, label: str) -> None:
        self.parts.append(
            f'<circle cx="{self.x(p.x)}" cy="{self.y(p.y)}" r="4" fill="#000000"/>'
        )
        self.parts.append(
            f'<text x="{self.x(p.x)}" y="{self.y(p.y)}" dx="6" dy="-6" '
            f'font-family="monospace" font-size="14">{label}</text>'
        )

    def document(self) -> str:
        head = (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
            f'viewBox="0 0 {SIZE} {SIZE}">'
        )
        return "\n".join([head, *self.parts, "</svg>", ""])


def _attrs(attrs) -> str:
    return "".join(f' {k.replace("_", "-")}="{v}"' for k, v in attrs.items())


def _obstacles(oracle) -> list:
    if isinstance(oracle, UnionOracle):
        out = []
        for o in oracle.oracles:
            out.extend(_obstacles(o))
        return out
    return [oracle]


def render_engine(engine: SubdivisionEngine) -> str:
    """SVG of the unit square: leaf boxes by color, obstacle outlines, and the terminals."""
    canvas = _Canvas(0, 0, 1, 1)
    for node in sorted(engine.graph.boxes):
        if node in engine.ring_nodes:
            continue
        box = engine.graph.boxes[node]
        x0, y0, x1, y1 = box.bounds
        canvas.rect(x0, y0, x1, y1, fill=FILL[engine.graph.colors[node]],
                    stroke="#555555", stroke_width="0.5")
    outline = dict(fill="none", stroke="#1f3a93", stroke_width="1.5")
    for ob in _obstacles(engine.oracle):
        if isinstance(ob, DiscOracle):
            canvas.circle(ob.cx, ob.cy, ob.r, **outline)
        elif isinstance(ob, AnnulusOracle):
            canvas.circle(ob.cx, ob.cy, ob.r_in, **outline)
            canvas.circle(ob.cx, ob.cy, ob.r_out, **outline)
        elif isinstance(ob, PolygonOracle):
            canvas.polygon(ob.body.vertices, **outline)
    canvas.marker(engine.anchor.s, "s")
    canvas.marker(engine.anchor.t, "t")
    return canvas.document()


def render_stream(
    anchor: Anchor, bodies: Sequence[ConvexBody], separated_at: Optional[int] = None
) -> str:
    """SVG of inserted bodies; the insertion that caused separation is drawn in red."""
    pts = [anchor.s, anchor.t]
    xs = [p.x for p in pts] + [b.xmin for b in bodies] + [b.xmax for b in bodies]
    ys = [p.y for p in pts] + [b.ymin for b in bodies] + [b.ymax for b in bodies]
    pad = max(max(xs) - min(xs), max(ys) - min(ys)) / 20 or 1
    canvas = _Canvas(min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad)
    for i, body in enumerate(bodies):
        fill = "#e06666" if i == separated_at else "#9fb7d9"
        stroke = "#8b0000" if i == separated_at else "#2b4c7e"
        if len(body.vertices) >= 3:
            canvas.polygon(body.vertices, fill=fill, fill_opacity="0.6", stroke=stroke)
        else:
            canvas.polygon(body.vertices, fill="none", stroke=stroke, stroke_width="2")
    canvas.parts.append(
        f'<line x1="{canvas.x(anchor.s.x)}" y1="{canvas.y(anchor.s.y)}" '
        f'x2="{canvas.x(anchor.t.x)}" y2="{canvas.y(anchor.t.y)}" '
        f'stroke="#000000" stroke-dasharray="4 3"/>'
    )
    canvas.marker(anchor.s, "s")
    canvas.marker(anchor.t, "t")
    return canvas.document()


def write_svg(text: str, path) -> None:
    Path(path).write_text(text, encoding="utf-8")


def render_svg(snapshot, path) -> None:
    """Write ``snapshot`` (an engine, or an ``(anchor, bodies, separated_at)`` triple) to ``path``."""
    if isinstance(snapshot, SubdivisionEngine):
        text = render_engine(snapshot)
    else:
        anchor, bodies, separated_at = snapshot
        text = render_stream(anchor, bodies, separated_at)
    write_svg(text, path)
