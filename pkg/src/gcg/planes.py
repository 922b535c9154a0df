"""Unions of coordinate planes and lines as pure simplicial complexes.

A configuration of coordinate subspaces of P^N is recorded only by which
coordinate points span each component, so its homogeneous coordinate ring is
a Stanley-Reisner ring and every Hilbert function is a binomial sum over the
f-vector.  Point labels are the face indices of a planar graph (or the
``p_j`` labels of a degeneration), facets are 3-subsets (planes) or
2-subsets (lines).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Sequence

from .graph import (FaceSet, TrivalentPlanarGraph, edge_connectivity, faces,
                    validate)


class ConfigError(ValueError):
    """A configuration could not be built or fails a structural requirement."""


@dataclass(frozen=True)
class PlaneConfig:
    ambient: int
    points: tuple[int, ...]
    facets: tuple[tuple[int, ...], ...]
    tags: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "facets", tuple(tuple(sorted(f)) for f in self.facets))
        if self.tags is not None:
            object.__setattr__(self, "tags", tuple(self.tags))
            if len(self.tags) != len(self.facets):
                raise ConfigError("one tag per facet")
        pts = set(self.points)
        for f in self.facets:
            if len(set(f)) != len(f):
                raise ConfigError(f"facet {f} repeats a label")
            if not set(f) <= pts:
                raise ConfigError(f"facet {f} uses labels outside {sorted(pts)}")
        if len({len(f) for f in self.facets}) > 1:
            raise ConfigError("complex is not pure")

    @property
    def dim(self) -> int:
        """Projective dimension of the components (2 for planes, 1 for lines)."""
        return len(self.facets[0]) - 1 if self.facets else -1

    def tag(self, i: int) -> str:
        return self.tags[i] if self.tags else str(i)

    def f_vector(self) -> tuple[int, ...]:
        """(f_0, f_1, ...): number of faces with 1, 2, ... vertices."""
        faces_by_size: list[set] = [set() for _ in range(self.dim + 1)]
        for f in self.facets:
            for k in range(1, len(f) + 1):
                faces_by_size[k - 1].update(combinations(f, k))
        return tuple(len(s) for s in faces_by_size)

    def to_json(self) -> dict:
        out = {"schema": "gcg/1", "ambient": self.ambient, "points": list(self.points),
               "facets": [list(f) for f in self.facets]}
        if self.tags:
            out["tags"] = list(self.tags)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "PlaneConfig":
        try:
            return cls(int(data["ambient"]), tuple(data["points"]),
                       tuple(tuple(f) for f in data["facets"]), data.get("tags"))
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"malformed config JSON: {exc}") from exc


def config_from_graph(graph: TrivalentPlanarGraph, face_set: FaceSet | None = None) -> PlaneConfig:
    """The union S_G: one plane per vertex, spanned by the points of its three faces."""
    report = validate(graph)
    if not report.ok:
        raise ConfigError(f"graph fails validation: {report.failures()}")
    k = edge_connectivity(graph)
    if k < 3:
        raise ConfigError(f"edge connectivity {k} < 3: plane intersections would not follow edges")
    fs = face_set if face_set is not None else faces(graph)
    facets = []
    for v in graph.vertices:
        around = fs.faces_at(v)
        if len(set(around)) != 3:
            raise ConfigError(f"vertex {v} meets face(s) {around} more than once")
        facets.append(around)
    return PlaneConfig(graph.genus, tuple(range(len(fs))), tuple(facets),
                       tuple(f"v{v}" for v in graph.vertices))


def pairwise_intersections(config: PlaneConfig) -> list[tuple[tuple[int, int], int]]:
    """Number of shared labels for every pair of facets ``(i, j)`` with ``i < j``."""
    sets = [set(f) for f in config.facets]
    return [((i, j), len(sets[i] & sets[j])) for i, j in combinations(range(len(sets)), 2)]


def hilbert_function(config: PlaneConfig, d: int) -> int:
    """H(d) = sum_i f_{i-1} C(d-1, i-1) for d >= 1, and H(0) = 1."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    if d == 0:
        return 1
    f = config.f_vector()
    return sum(fi * comb(d - 1, i) for i, fi in enumerate(f))


def hilbert_function_bruteforce(config: PlaneConfig, d: int) -> int:
    """Count degree-d monomials whose support is a face of the complex."""
    if d == 0:
        return 1
    facet_sets = [frozenset(f) for f in config.facets]
    count = 0
    for mono in combinations_with_replacement(config.points, d):
        support = set(mono)
        if any(support <= f for f in facet_sets):
            count += 1
    return count


# chains and the double curve

def chain_config(decomp, part: str) -> PlaneConfig:
    """Sub-configuration of S_G on one ordered part ('A' or 'B') of a chain decomposition."""
    if part not in ("A", "B"):
        raise ValueError("part must be 'A' or 'B'")
    graph = decomp.graph
    order = decomp.part_A if part == "A" else decomp.part_B
    for u, v in zip(order, order[1:]):
        if not graph.adjacent(u, v):
            raise ConfigError(f"part {part}: v{u} and v{v} are not adjacent")
    full = config_from_graph(graph)
    facets = [full.facets[v - 1] for v in order]
    cfg = PlaneConfig(full.ambient, full.points, tuple(facets), tuple(f"v{v}" for v in order))
    check_chain(cfg)
    return cfg


def check_chain(config: PlaneConfig) -> None:
    """Consecutive facets share a line, all other pairs share at most a point."""
    for (i, j), shared in pairwise_intersections(config):
        if j == i + 1 and shared != 2:
            raise ConfigError(f"chain planes {config.tag(i)}, {config.tag(j)} share {shared} labels")
        if j > i + 1 and shared > 1:
            raise ConfigError(f"non-consecutive planes {config.tag(i)}, {config.tag(j)} share a line")


def double_curve(config_a: PlaneConfig, config_b: PlaneConfig) -> PlaneConfig:
    """Lines lying on a plane of both configurations, ordered around their cycle."""
    def lines(cfg):
        return {pair for f in cfg.facets for pair in combinations(f, 2)}

    common = sorted(lines(config_a) & lines(config_b))
    if not common:
        raise ConfigError("configurations share no line")
    cycle = _order_cycle(common)
    if cycle is None or set(p for l in common for p in l) != set(config_a.points):
        raise ConfigError("common lines do not form a single cycle through all points")
    ordered = [tuple(sorted((cycle[i], cycle[(i + 1) % len(cycle)]))) for i in range(len(cycle))]
    return PlaneConfig(config_a.ambient, config_a.points, tuple(ordered))


def _order_cycle(pairs) -> list[int] | None:
    """Vertices of a single cycle given by its edges, or None if the edges are not one cycle."""
    adj: dict[int, list[int]] = {}
    for a, b in pairs:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    if any(len(v) != 2 for v in adj.values()):
        return None
    start = min(adj)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return order if len(order) == len(adj) else None


# spans in the line/point vocabulary of the double curve

@dataclass(frozen=True)
class SpanRow:
    plane: str
    first: tuple[str, int]
    second: tuple[str, int]

    def __str__(self) -> str:
        return f"{self.plane}: {self.first[0]}{self.first[1]}, {self.second[0]}{self.second[1]}"


@dataclass(frozen=True)
class SpanTable:
    rows: tuple[SpanRow, ...]
    lines: tuple[tuple[int, int], ...]   # lines[j-1] is l_j as a label pair
    points: tuple[int, ...]              # points[j-1] is p_j = l_j meet l_{j+1}

    def row(self, plane: str) -> SpanRow:
        for r in self.rows:
            if r.plane == plane:
                return r
        raise KeyError(plane)

    def as_dict(self) -> dict[str, tuple[tuple[str, int], tuple[str, int]]]:
        return {r.plane: (r.first, r.second) for r in self.rows}


def numbered_lines(cycle_points: Sequence[int]) -> tuple[tuple[tuple[int, int], ...], tuple[int, ...]]:
    """Number lines l_1.. and points p_1.. from a cyclic point order q_0, q_1, ...

    l_j joins q_{j-1} and q_j, so p_j = l_j meet l_{j+1} = q_j (indices mod the length).
    """
    m = len(cycle_points)
    lines = tuple(tuple(sorted((cycle_points[j - 1], cycle_points[j % m]))) for j in range(1, m + 1))
    points = tuple(cycle_points[j % m] for j in range(1, m + 1))
    return lines, points


def default_line_numbering(chain: PlaneConfig, curve: PlaneConfig) -> list[int]:
    """Cyclic point order fixing l_1, l_2, ... for ``span_table``.

    The first chain plane holds two consecutive lines; they become l_{m} and
    l_1.  Of the two reflections, take the one where the line of the second
    plane meets l_m; remaining ties go to the smaller face label.
    """
    base = _order_cycle(curve.facets)
    if base is None:
        raise ConfigError("double curve is not a cycle")
    m = len(base)
    candidates = []
    for seq in (base, base[::-1]):
        for shift in range(m):
            order = seq[shift:] + seq[:shift]
            lines, _ = numbered_lines(order)
            first = set(chain.facets[0])
            if set(lines[0]) <= first and set(lines[-1]) <= first:
                candidates.append(order)
    if not candidates:
        raise ConfigError("first chain plane does not contain two consecutive lines")
    if len(chain.facets) > 1:
        second = set(chain.facets[1])
        good = []
        for order in candidates:
            lines, _ = numbered_lines(order)
            inside = [l for l in lines if set(l) <= second]
            if inside and set(inside[0]) & set(lines[-1]):
                good.append(order)
        candidates = good or candidates
    return min(candidates)


def span_table(chain: PlaneConfig, curve: PlaneConfig,
               numbering: Sequence[int] | None = None) -> SpanTable:
    """Express each chain plane as (l_j, l_k) or (p_j, l_k).

    ``numbering`` is the cyclic order of points q_0, q_1, ... defining the
    lines (see ``numbered_lines``); by default it is chosen by
    ``default_line_numbering``.
    """
    order = list(numbering) if numbering is not None else default_line_numbering(chain, curve)
    lines, points = numbered_lines(order)
    line_no = {l: j for j, l in enumerate(lines, 1)}
    point_no = {p: j for j, p in enumerate(points, 1)}
    rows = []
    for i, f in enumerate(chain.facets):
        contained = sorted(line_no[pair] for pair in combinations(f, 2) if pair in line_no)
        if len(contained) == 2:
            rows.append(SpanRow(chain.tag(i), ("l", contained[0]), ("l", contained[1])))
        elif len(contained) == 1:
            (other,) = set(f) - set(lines[contained[0] - 1])
            rows.append(SpanRow(chain.tag(i), ("p", point_no[other]), ("l", contained[0])))
        else:
            raise ConfigError(f"plane {chain.tag(i)} {f} contains {len(contained)} double-curve lines")
    return SpanTable(tuple(rows), lines, points)


# from a union of planes back to its dual planar graph

def graph_from_config(config: PlaneConfig, name: str = "") -> TrivalentPlanarGraph:
    """Dual graph of a union of planes forming a triangulated sphere.

    Vertices are facets (in order), edges join facets sharing a line, and the
    rotation at each vertex follows a coherent orientation of the triangles,
    so the faces of the result are the point labels.
    """
    facets = config.facets
    if config.dim != 2:
        raise ConfigError("need a configuration of planes")
    owner: dict[tuple[int, int], list[int]] = {}
    for i, f in enumerate(facets):
        for pair in combinations(f, 2):
            owner.setdefault(pair, []).append(i)
    bad = {p: o for p, o in owner.items() if len(o) != 2}
    if bad:
        raise ConfigError(f"lines not on exactly two planes: {sorted(bad)[:5]}")
    edge_of = {}
    edges = []
    for pair, (i, j) in sorted(owner.items(), key=lambda kv: tuple(kv[1])):
        edge_of[pair] = len(edges)
        edges.append((i + 1, j + 1))
    # coherent orientation by breadth-first propagation
    oriented: dict[int, tuple[int, int, int]] = {0: facets[0]}
    queue = [0]
    while queue:
        i = queue.pop()
        a, b, c = oriented[i]
        for x, y in ((a, b), (b, c), (c, a)):
            (j,) = [k for k in owner[tuple(sorted((x, y)))] if k != i]
            (z,) = set(facets[j]) - {x, y}
            want = (y, x, z)
            if j in oriented:
                if not _same_cycle(oriented[j], want):
                    raise ConfigError("planes do not form an orientable sphere")
                continue
            oriented[j] = want
            queue.append(j)
    if len(oriented) != len(facets):
        raise ConfigError("configuration is not connected through lines")
    rotation = []
    for i in range(len(facets)):
        a, b, c = oriented[i]
        rotation.append([edge_of[tuple(sorted(p))] for p in ((a, b), (b, c), (c, a))])
    return TrivalentPlanarGraph(len(facets), edges, rotation, name=name)


def _same_cycle(t1, t2) -> bool:
    return any(tuple(t1[k:] + t1[:k]) == tuple(t2) for k in range(3))


def label_degrees(config: PlaneConfig) -> Counter:
    return Counter(p for f in config.facets for p in f)
