"""Static SVG drawings of the graphs.

Standard graphs and prisms use their concentric-ring coordinates; anything
else gets a Tutte (barycentric) embedding with its longest face as the
outer boundary.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

import numpy as np

from .graph import TrivalentPlanarGraph, faces

A_COLOR = "#c0392b"
B_COLOR = "#2471a3"
PLAIN = "#444444"


def tutte_layout(graph: TrivalentPlanarGraph) -> dict[int, tuple[float, float]]:
    fs = faces(graph)
    outer_walk = max(fs.faces, key=len)
    outer = [t for _, t, _ in outer_walk]
    pos: dict[int, tuple[float, float]] = {}
    for i, v in enumerate(outer):
        a = 2 * math.pi * i / len(outer)
        pos[v] = (3 * math.cos(a), 3 * math.sin(a))
    inner = [v for v in graph.vertices if v not in pos]
    if inner:
        idx = {v: i for i, v in enumerate(inner)}
        lap = np.zeros((len(inner), len(inner)))
        rhs = np.zeros((len(inner), 2))
        for v in inner:
            i = idx[v]
            for w in graph.neighbors(v):
                lap[i, i] += 1
                if w in idx:
                    lap[i, idx[w]] -= 1
                else:
                    rhs[i] += pos[w]
        sol = np.linalg.solve(lap, rhs)
        for v in inner:
            pos[v] = (float(sol[idx[v], 0]), float(sol[idx[v], 1]))
    return pos


def default_layout(graph: TrivalentPlanarGraph) -> dict[int, tuple[float, float]]:
    from . import families

    name = graph.name
    try:
        if name.startswith("G") and name[1:].isdigit():
            _, _, pos = families.standard_layout(int(name[1:]))
            return pos
        if name.startswith("prism") and name[5:].isdigit():
            _, _, pos = families.prism_layout(int(name[5:]))
            return pos
    except families.UnsupportedGenus:
        pass
    return tutte_layout(graph)


def export_svg(graph: TrivalentPlanarGraph, decomposition=None, size: int = 480,
               pos: dict[int, tuple[float, float]] | None = None) -> str:
    """SVG document; A/B vertices coloured and crossing edges dashed when a decomposition is given."""
    from .planes import _order_cycle

    pos = pos or default_layout(graph)
    xs = [p[0] for p in pos.values()]
    ys = [p[1] for p in pos.values()]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    margin = 24
    scale = (size - 2 * margin) / span

    def xy(v):
        x, y = pos[v]
        return margin + (x - min(xs)) * scale, margin + (max(ys) - y) * scale

    part_a = set(decomposition.part_A) if decomposition else set()
    part_b = set(decomposition.part_B) if decomposition else set()
    crossing = set(decomposition.crossing()) if decomposition else set()

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
           f'viewBox="0 0 {size} {size}">',
           f"<title>{escape(graph.name or 'graph')} (genus {graph.genus})</title>"]
    for e, (a, b) in enumerate(graph.edges):
        (x1, y1), (x2, y2) = xy(a), xy(b)
        if e in crossing:
            style = 'class="crossing" stroke="#888888" stroke-dasharray="6,4"'
        else:
            style = f'class="edge" stroke="{PLAIN}"'
        out.append(f'<line {style} stroke-width="1.5" x1="{x1:.2f}" y1="{y1:.2f}" '
                   f'x2="{x2:.2f}" y2="{y2:.2f}"/>')
    if crossing:
        # the dotted cut meets the crossing edges in their order around the double curve
        fs = faces(graph)
        pairs = {tuple(sorted(fs.faces_of_edge(e))): e for e in crossing}
        cycle = _order_cycle(pairs)
        if cycle:
            mids = []
            for i in range(len(cycle)):
                e = pairs[tuple(sorted((cycle[i], cycle[(i + 1) % len(cycle)])))]
                (x1, y1), (x2, y2) = xy(graph.edges[e][0]), xy(graph.edges[e][1])
                mids.append(f"{(x1 + x2) / 2:.2f},{(y1 + y2) / 2:.2f}")
            out.append(f'<polygon class="cut" fill="none" stroke="#27ae60" '
                       f'stroke-dasharray="2,3" points="{" ".join(mids)}"/>')
    for v in graph.vertices:
        x, y = xy(v)
        color = A_COLOR if v in part_a else B_COLOR if v in part_b else PLAIN
        cls = "vertex-a" if v in part_a else "vertex-b" if v in part_b else "vertex"
        out.append(f'<circle class="{cls}" cx="{x:.2f}" cy="{y:.2f}" r="6" fill="{color}"/>')
        out.append(f'<text x="{x + 7:.2f}" y="{y - 7:.2f}" font-size="10">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
