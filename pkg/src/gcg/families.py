"""Explicit trivalent planar graphs: the standard family G_g, prisms, and the tilde graphs.

The standard graphs are laid out on concentric rings and the rotation at a
vertex is its neighbours sorted by angle, so the embedding (and therefore
the faces) comes straight from the coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import TrivalentPlanarGraph, crossing_edges

Point = tuple[float, float]


class UnsupportedGenus(ValueError):
    """No construction of the requested kind exists for this genus."""


class InvariantViolation(RuntimeError):
    """A construction produced data contradicting its own guarantees."""


def _ring(radius: float, angle: float) -> Point:
    return (radius * math.cos(angle), radius * math.sin(angle))


def _cycle(vs: list[int]) -> list[tuple[int, int]]:
    return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def _norm(edges) -> list[tuple[int, int]]:
    return [(min(a, b), max(a, b)) for a, b in edges]


def rotation_from_layout(vertex_count: int, edges, pos: dict[int, Point]) -> list[list[int]]:
    """Incident edges of each vertex sorted counterclockwise by direction."""
    rot = []
    for v in range(1, vertex_count + 1):
        inc = [i for i, e in enumerate(edges) if v in e]

        def angle(i, v=v):
            a, b = edges[i]
            w = b if a == v else a
            return math.atan2(pos[w][1] - pos[v][1], pos[w][0] - pos[v][0])

        rot.append(sorted(inc, key=angle))
    return rot


def standard_layout(g: int) -> tuple[int, list[tuple[int, int]], dict[int, Point]]:
    """Vertex count, edge list and ring coordinates of G_g."""
    if g < 7:
        raise UnsupportedGenus(f"standard graphs start at g = 7 (got {g}); "
                               "use prism_graph or tilde_graph for smaller genus")
    if g % 2:
        n = (g - 1) // 2
        edges = _cycle(list(range(1, n + 1)))
        edges += _cycle(list(range(n + 1, 3 * n + 1)))
        edges += _cycle(list(range(3 * n + 1, 4 * n + 1)))
        edges += [(i, n + 2 * i - 1) for i in range(1, n + 1)]
        edges += [(i, 2 * i - 5 * n) for i in range(3 * n + 1, 4 * n + 1)]
        pos = {i: _ring(1, 2 * math.pi * (i - 1) / n) for i in range(1, n + 1)}
        pos |= {n + m: _ring(2, math.pi * (m - 1) / n) for m in range(1, 2 * n + 1)}
        pos |= {3 * n + j: _ring(5, math.pi * (2 * j - 1) / n) for j in range(1, n + 1)}
        return 4 * n, _norm(edges), pos

    n = (g - 2) // 2
    count, edges, pos = standard_layout(g - 1)

    def shift(v):
        return v if v <= n else v + 2

    edges = [(shift(a), shift(b)) for a, b in edges]
    pos = {shift(v): p for v, p in pos.items()}
    a, b = (n + 1) // 2, (n + 3) // 2
    # split the inner-cycle edges 1-n and a-b, and join the two new vertices
    edges.remove((1, n))
    edges.remove((a, b))
    edges += [(1, n + 1), (n, n + 1), (a, n + 2), (b, n + 2), (n + 1, n + 2)]
    pos[n + 1] = ((pos[1][0] + pos[n][0]) / 2, (pos[1][1] + pos[n][1]) / 2)
    pos[n + 2] = ((pos[a][0] + pos[b][0]) / 2, (pos[a][1] + pos[b][1]) / 2)
    return count + 2, edges, pos


def standard_graph(g: int) -> TrivalentPlanarGraph:
    """G_g for g >= 7."""
    count, edges, pos = standard_layout(g)
    return TrivalentPlanarGraph(count, edges, rotation_from_layout(count, edges, pos), name=f"G{g}")


def prism_layout(m: int) -> tuple[int, list[tuple[int, int]], dict[int, Point]]:
    if m < 3:
        raise UnsupportedGenus(f"a prism needs m >= 3 (got {m})")
    edges = _cycle(list(range(1, m + 1))) + _cycle(list(range(m + 1, 2 * m + 1)))
    edges += [(i, m + i) for i in range(1, m + 1)]
    pos = {i: _ring(1, 2 * math.pi * (i - 1) / m) for i in range(1, m + 1)}
    pos |= {m + i: _ring(2, 2 * math.pi * (i - 1) / m) for i in range(1, m + 1)}
    return 2 * m, _norm(edges), pos


def prism_graph(m: int) -> TrivalentPlanarGraph:
    """Two m-cycles joined by m rungs; genus m + 1.  m = 5 is the tilde graph of genus 6."""
    count, edges, pos = prism_layout(m)
    return TrivalentPlanarGraph(count, edges, rotation_from_layout(count, edges, pos), name=f"prism{m}")


def tilde_graph(g: int) -> TrivalentPlanarGraph:
    """Genus 7 or 8 graph read off from the union of the two limit chains of its data."""
    from .degeneration import tilde_data, union_config
    from .planes import graph_from_config

    if g == 6:
        return prism_graph(5)
    if g not in (7, 8):
        raise UnsupportedGenus(f"tilde graphs exist for g = 6, 7, 8 (got {g})")
    union, _, _ = union_config(tilde_data(g))
    return graph_from_config(union, name=f"tilde{g}")


def build(kind: str, genus: int) -> TrivalentPlanarGraph:
    """Dispatch used by the command line: kind is standard, prism or tilde."""
    if kind == "standard":
        return standard_graph(genus)
    if kind == "prism":
        return prism_graph(genus - 1)
    if kind == "tilde":
        return tilde_graph(genus)
    raise ValueError(f"unknown family {kind!r}")


# the A/B halves

@dataclass(frozen=True)
class ChainDecomposition:
    graph: TrivalentPlanarGraph
    part_A: tuple[int, ...]
    part_B: tuple[int, ...]

    @property
    def genus(self) -> int:
        return self.graph.genus

    def crossing(self) -> list[int]:
        """Edges with one end in each part."""
        return crossing_edges(self.graph, set(self.part_A))

    def to_json(self) -> dict:
        return {"schema": "gcg/1", "genus": self.genus, "part_A": list(self.part_A),
                "part_B": list(self.part_B), "crossing_edges": self.crossing()}


def decomposition_lists(g: int) -> tuple[list[int], list[int]]:
    if g < 7:
        raise UnsupportedGenus(f"decompositions are given for g >= 7 (got {g})")
    if g % 2:
        n = (g - 1) // 2
        a = [1] + list(range(n + 1, 3 * n - 1)) + [4 * n - 1]
        b = list(range(2, n + 1)) + [3 * n - 1, 3 * n, 4 * n] + list(range(3 * n + 1, 4 * n - 1))
        return a, b
    n = (g - 2) // 2
    a = [n + 1, 1] + list(range(n + 3, 3 * n + 1)) + [4 * n + 1]
    b = (list(range(2, (n + 1) // 2 + 1)) + [n + 2] + list(range((n + 3) // 2, n + 1))
         + [3 * n + 1, 3 * n + 2, 4 * n + 2] + list(range(3 * n + 3, 4 * n + 1)))
    return a, b


def check_decomposition(dec: ChainDecomposition) -> None:
    g = dec.genus
    a, b = dec.part_A, dec.part_B
    if sorted(a + b) != list(dec.graph.vertices):
        raise InvariantViolation(f"g={g}: parts do not partition the vertices")
    if len(a) != g - 1 or len(b) != g - 1:
        raise InvariantViolation(f"g={g}: part sizes {len(a)}, {len(b)} != {g - 1}")
    for name, part in (("A", a), ("B", b)):
        for u, v in zip(part, part[1:]):
            if not dec.graph.adjacent(u, v):
                raise InvariantViolation(f"g={g}: part {name} breaks at v{u}, v{v}")


def ab_decomposition(g: int) -> ChainDecomposition:
    a, b = decomposition_lists(g)
    dec = ChainDecomposition(standard_graph(g), tuple(a), tuple(b))
    check_decomposition(dec)
    return dec
