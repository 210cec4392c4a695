"""Deterministic SVG output for drawings, intervals and Z2 node graphs."""

from __future__ import annotations

import math
import random
from xml.sax.saxutils import escape

from .complex import face_key
from .configspace import Z2Complex
from .planar import PlanarDrawing
from .representability import IntervalRepresentation

MARGIN = 30
SCALE = 60


def _doc(width: float, height: float, body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">'
    )
    return "\n".join([head, '<rect width="100%" height="100%" fill="white"/>', *body, "</svg>"]) + "\n"


def _label(x: float, y: float, text: str, anchor: str = "middle") -> str:
    return (
        f'<text x="{x:.2f}" y="{y:.2f}" font-family="sans-serif" font-size="11" '
        f'text-anchor="{anchor}">{escape(text)}</text>'
    )


def drawing_svg(drawing: PlanarDrawing) -> str:
    pos = drawing.as_dict()
    if not pos:
        return _doc(2 * MARGIN, 2 * MARGIN, [])
    xs = [p[0] for p in pos.values()]
    ys = [p[1] for p in pos.values()]
    x0, y1 = min(xs), max(ys)
    width = (max(xs) - x0) * SCALE + 2 * MARGIN
    height = (y1 - min(ys)) * SCALE + 2 * MARGIN

    def at(v):
        x, y = pos[v]
        return MARGIN + (x - x0) * SCALE, MARGIN + (y1 - y) * SCALE

    body = []
    for u, v in drawing.edges:
        (ax, ay), (bx, by) = at(u), at(v)
        body.append(f'<line x1="{ax:.2f}" y1="{ay:.2f}" x2="{bx:.2f}" y2="{by:.2f}" stroke="black"/>')
    for v, _ in drawing.positions:
        x, y = at(v)
        body.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="4" fill="black"/>')
        body.append(_label(x, y - 8, v))
    return _doc(width, height, body)


def intervals_svg(rep: IntervalRepresentation) -> str:
    rows = rep.intervals
    if not rows:
        return _doc(2 * MARGIN, 2 * MARGIN, [])
    lo = min(r[1] for r in rows)
    hi = max(r[2] for r in rows)
    span = max(hi - lo, 1)
    scale = 400 / span
    left = MARGIN + 40
    body = []
    for i, (v, a, b) in enumerate(rows):
        y = MARGIN + i * 20
        xa, xb = left + float((a - lo) * scale), left + float((b - lo) * scale)
        body.append(_label(MARGIN, y + 4, v, "start"))
        body.append(
            f'<line x1="{xa:.2f}" y1="{y}" x2="{xb:.2f}" y2="{y}" stroke="black" stroke-width="3" '
            'stroke-linecap="round"/>'
        )
    return _doc(left + 400 + MARGIN, 2 * MARGIN + 20 * (len(rows) - 1), body)


def _cell_name(c) -> str:
    a, b = c
    return f"({','.join(face_key(a))} | {','.join(face_key(b))})"


def node_graph_svg(Z: Z2Complex, seed: int = 0) -> str:
    """Vertex pairs on a circle, joined through the 1-cells between them.

    Nodes are ordered component by component along a depth-first walk, so a
    ring-shaped component shows up as a ring; ``seed`` fixes the rotation.
    """
    points = list(Z.vertex_pairs)
    links = []
    for a, b in Z.node_graph[0]:
        if len(a) == 2:
            x, y = face_key(a)
            links.append(((frozenset((x,)), b), (frozenset((y,)), b)))
        elif len(b) == 2:
            x, y = face_key(b)
            links.append(((a, frozenset((x,))), (a, frozenset((y,)))))
    nbrs = {p: [] for p in points}
    for p, q in links:
        nbrs[p].append(q)
        nbrs[q].append(p)
    order, seen = [], set()
    for s in points:
        if s in seen:
            continue
        stack = [s]
        while stack:
            u = stack.pop()
            if u in seen:
                continue
            seen.add(u)
            order.append(u)
            stack.extend(sorted(nbrs[u], key=lambda c: (face_key(c[0]), face_key(c[1])), reverse=True))
    n = len(order)
    radius = max(80.0, 12.0 * n)
    c = radius + 4 * MARGIN
    offset = random.Random(seed).random() * 2 * math.pi
    pos = {
        p: (c + radius * math.cos(offset + 2 * math.pi * i / max(n, 1)), c + radius * math.sin(offset + 2 * math.pi * i / max(n, 1)))
        for i, p in enumerate(order)
    }
    body = []
    for p, q in links:
        (ax, ay), (bx, by) = pos[p], pos[q]
        body.append(f'<line x1="{ax:.2f}" y1="{ay:.2f}" x2="{bx:.2f}" y2="{by:.2f}" stroke="gray"/>')
    for p in order:
        x, y = pos[p]
        body.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="4" fill="black"/>')
        body.append(_label(x, y - 8, _cell_name(p)))
    return _doc(2 * c, 2 * c, body)


def write_svg(text: str, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
