"""Trivalent planar graphs given with an explicit rotation system.

Vertices are numbered ``1..V``; edges are 0-based indices into ``edges``.
The rotation at a vertex is the cyclic order of its incident edges in the
planar embedding.  Every signed structure orients an edge from its lower to
its higher endpoint.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np


class GraphShapeError(ValueError):
    """Input data is malformed (bad indices, rotation not matching edges)."""


@dataclass(frozen=True)
class TrivalentPlanarGraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    rotation: tuple[tuple[int, ...], ...] | None = None
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(tuple(int(x) for x in e) for e in self.edges))
        if self.rotation is not None:
            object.__setattr__(self, "rotation", tuple(tuple(int(x) for x in r) for r in self.rotation))
        _check_shape(self)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    @cached_property
    def genus(self) -> int:
        # |E| - |V| + 1 is the first Betti number of a connected graph
        return self.edge_count - self.vertex_count + 1

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Incident edge indices per vertex (index 0 is vertex 1); loops appear twice."""
        inc: list[list[int]] = [[] for _ in self.vertices]
        for i, (a, b) in enumerate(self.edges):
            inc[a - 1].append(i)
            inc[b - 1].append(i)
        return tuple(tuple(x) for x in inc)

    def neighbors(self, v: int) -> list[int]:
        return [self.other_end(e, v) for e in self.incidence[v - 1]]

    def other_end(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if a == v else a

    def rotation_at(self, v: int) -> tuple[int, ...]:
        if self.rotation is None:
            raise GraphShapeError("graph has no rotation system")
        return self.rotation[v - 1]

    def orientation_sign(self, e: int, v: int) -> int:
        """+1 if edge ``e`` (oriented low to high) points into ``v``, else -1."""
        a, b = self.edges[e]
        return 1 if v == max(a, b) else -1

    def adjacent(self, u: int, v: int) -> bool:
        return any(self.other_end(e, u) == v for e in self.incidence[u - 1])

    # serialization

    def to_json(self) -> dict:
        out = {
            "schema": "gcg/1",
            "genus": self.genus,
            "vertices": self.vertex_count,
            "edges": [list(e) for e in self.edges],
        }
        if self.rotation is not None:
            out["rotation"] = {str(v): list(self.rotation[v - 1]) for v in self.vertices}
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_json(cls, data: dict | str) -> "TrivalentPlanarGraph":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise GraphShapeError(f"invalid JSON: {exc}") from exc
        try:
            n = int(data["vertices"])
            edges = [tuple(e) for e in data["edges"]]
            rot = data.get("rotation")
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphShapeError(f"missing or malformed field: {exc}") from exc
        rotation = None
        if rot is not None:
            if set(rot) != {str(v) for v in range(1, n + 1)}:
                raise GraphShapeError("rotation must have one entry per vertex")
            rotation = [rot[str(v)] for v in range(1, n + 1)]
        graph = cls(n, edges, rotation, name=data.get("name", ""))
        if "genus" in data and data["genus"] != graph.genus:
            raise GraphShapeError(f"declared genus {data['genus']} != computed {graph.genus}")
        return graph

    def to_dot(self) -> str:
        lines = [f"graph {_dot_id(self.name or 'G')} {{"]
        if self.rotation is not None:
            fs = faces(self)
            for i, walk in enumerate(fs.faces):
                verts = " ".join(str(t) for _, t, _ in walk)
                lines.append(f"  // face {i}: {verts}")
        for v in self.vertices:
            lines.append(f"  {v};")
        for i, (a, b) in enumerate(self.edges):
            lines.append(f"  {a} -- {b}; // e{i}")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _dot_id(name: str) -> str:
    return '"' + name.replace('"', "'") + '"'


def _check_shape(g: TrivalentPlanarGraph) -> None:
    if g.vertex_count < 1:
        raise GraphShapeError("vertex_count must be positive")
    for i, e in enumerate(g.edges):
        if len(e) != 2:
            raise GraphShapeError(f"edge {i} is not a pair: {e}")
        for x in e:
            if not 1 <= x <= g.vertex_count:
                raise GraphShapeError(f"edge {i} endpoint {x} out of range 1..{g.vertex_count}")
    if g.rotation is None:
        return
    if len(g.rotation) != g.vertex_count:
        raise GraphShapeError("rotation must list every vertex")
    for v in g.vertices:
        rot = g.rotation[v - 1]
        for e in rot:
            if not 0 <= e < g.edge_count:
                raise GraphShapeError(f"rotation at {v} names unknown edge {e}")
        if sorted(rot) != sorted(g.incidence[v - 1]):
            raise GraphShapeError(f"rotation at {v} is {list(rot)}, incident edges are "
                                  f"{sorted(g.incidence[v - 1])}")


# validation

@dataclass(frozen=True)
class ValidationReport:
    checks: dict[str, bool]
    messages: dict[str, str]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]

    def to_json(self) -> dict:
        return {"schema": "gcg/1", "ok": self.ok, "checks": dict(self.checks),
                "messages": dict(self.messages)}


def validate(graph: TrivalentPlanarGraph) -> ValidationReport:
    checks: dict[str, bool] = {}
    msgs: dict[str, str] = {}

    seen = set()
    simple = True
    for i, (a, b) in enumerate(graph.edges):
        key = (min(a, b), max(a, b))
        if a == b:
            simple = False
            msgs["simple"] = f"edge {i} is a loop at {a}"
        elif key in seen:
            simple = False
            msgs["simple"] = f"edge {i} repeats {key}"
        seen.add(key)
    checks["simple"] = simple

    degrees = [len(inc) for inc in graph.incidence]
    bad = [v for v, d in zip(graph.vertices, degrees) if d != 3]
    checks["trivalent"] = not bad
    if bad:
        msgs["trivalent"] = f"vertices of degree != 3: {bad[:10]}"

    checks["connected"] = _is_connected(graph)
    checks["count_relation"] = 2 * graph.edge_count == 3 * graph.vertex_count
    if not checks["count_relation"]:
        msgs["count_relation"] = f"|E|={graph.edge_count}, |V|={graph.vertex_count}"
    g = graph.genus
    checks["genus_integral"] = (graph.vertex_count % 2 == 0 and graph.vertex_count == 2 * g - 2
                                and graph.edge_count == 3 * g - 3 and g >= 3)

    rot_ok = graph.rotation is not None and all(len(r) == 3 for r in graph.rotation)
    checks["rotation"] = rot_ok
    distinct = False
    if rot_ok and simple:
        fs = faces(graph)
        distinct = all(len(set(fs.faces_at(v))) == 3 for v in graph.vertices)
        if not distinct:
            msgs["distinct_faces"] = "some vertex meets the same face twice"
    checks["distinct_faces"] = distinct
    return ValidationReport(checks, msgs)


def _is_connected(graph: TrivalentPlanarGraph) -> bool:
    seen = {1}
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for w in graph.neighbors(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == graph.vertex_count


# edge connectivity

def _max_flow_unit(graph: TrivalentPlanarGraph, s: int, t: int) -> int:
    """Max number of edge-disjoint s-t paths (undirected, unit capacities)."""
    # residual capacity per (edge, direction); direction 0 is a->b
    cap = {}
    for i, (a, b) in enumerate(graph.edges):
        if a != b:
            cap[(i, 0)] = 1
            cap[(i, 1)] = 1
    flow = 0
    while True:
        parent: dict[int, tuple[int, int, int]] = {s: (0, -1, -1)}
        queue = deque([s])
        while queue and t not in parent:
            v = queue.popleft()
            for e in graph.incidence[v - 1]:
                a, b = graph.edges[e]
                if a == b:
                    continue
                d = 0 if v == a else 1
                w = b if d == 0 else a
                if w not in parent and cap[(e, d)] > 0:
                    parent[w] = (v, e, d)
                    queue.append(w)
        if t not in parent:
            return flow
        w = t
        while w != s:
            v, e, d = parent[w]
            cap[(e, d)] -= 1
            cap[(e, 1 - d)] += 1
            w = v
        flow += 1


def edge_connectivity(graph: TrivalentPlanarGraph) -> int:
    """Global minimum edge cut, via max-flow from vertex 1 to every other vertex."""
    if graph.vertex_count < 2:
        return 0
    if not _is_connected(graph):
        return 0
    return min(_max_flow_unit(graph, 1, t) for t in range(2, graph.vertex_count + 1))


# faces and cycles

Dart = tuple[int, int, int]  # (edge, tail, head)


@dataclass(frozen=True)
class FaceSet:
    graph: TrivalentPlanarGraph
    faces: tuple[tuple[Dart, ...], ...]

    def __len__(self) -> int:
        return len(self.faces)

    @cached_property
    def face_of_dart(self) -> dict[tuple[int, int], int]:
        """Map (edge, tail) to the index of the face containing that dart."""
        return {(e, t): i for i, walk in enumerate(self.faces) for e, t, _ in walk}

    def faces_at(self, v: int) -> tuple[int, ...]:
        """Faces around ``v``, one per outgoing dart, in rotation order."""
        return tuple(self.face_of_dart[(e, v)] for e in self.graph.rotation_at(v))

    def faces_of_edge(self, e: int) -> tuple[int, int]:
        a, b = self.graph.edges[e]
        return self.face_of_dart[(e, a)], self.face_of_dart[(e, b)]

    def boundary_vector(self, i: int) -> tuple[int, ...]:
        vec = [0] * self.graph.edge_count
        for e, t, h in self.faces[i]:
            vec[e] += 1 if t < h else -1
        return tuple(vec)


def faces(graph: TrivalentPlanarGraph) -> FaceSet:
    """Trace face boundaries: leave ``v`` along the successor (in rotation) of the arrival edge."""
    if graph.rotation is None:
        raise GraphShapeError("faces need a rotation system")
    seen: set[tuple[int, int]] = set()
    walks = []
    for e, (a, b) in enumerate(graph.edges):
        for tail, head in ((min(a, b), max(a, b)), (max(a, b), min(a, b))):
            if (e, tail) in seen:
                continue
            walk = []
            cur = (e, tail, head)
            while (cur[0], cur[1]) not in seen:
                seen.add((cur[0], cur[1]))
                walk.append(cur)
                edge, _, w = cur
                rot = graph.rotation_at(w)
                nxt = rot[(rot.index(edge) + 1) % len(rot)]
                cur = (nxt, w, graph.other_end(nxt, w))
            walks.append(tuple(walk))
    return FaceSet(graph, tuple(walks))


@dataclass(frozen=True)
class CycleBasis:
    graph: TrivalentPlanarGraph
    basis: tuple[tuple[int, ...], ...]
    face_indices: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.basis)

    @property
    def matrix(self) -> np.ndarray:
        """Basis as a g x |E| integer array."""
        return np.array(self.basis, dtype=np.int64).reshape(len(self.basis), self.graph.edge_count)


def divergence(graph: TrivalentPlanarGraph, vec) -> list[int]:
    """Net signed inflow at each vertex; zero everywhere for a cycle."""
    div = [0] * graph.vertex_count
    for e, (a, b) in enumerate(graph.edges):
        lo, hi = min(a, b), max(a, b)
        div[hi - 1] += vec[e]
        div[lo - 1] -= vec[e]
    return div


def cycle_basis(graph: TrivalentPlanarGraph, face_set: FaceSet | None = None,
                outer: int | None = None) -> CycleBasis:
    """Boundaries of all faces except ``outer`` (default: the highest-index face)."""
    fs = face_set if face_set is not None else faces(graph)
    outer = len(fs) - 1 if outer is None else outer
    if not 0 <= outer < len(fs):
        raise IndexError(f"outer face {outer} out of range")
    idx = tuple(i for i in range(len(fs)) if i != outer)
    return CycleBasis(graph, tuple(fs.boundary_vector(i) for i in idx), idx)


def crossing_edges(graph: TrivalentPlanarGraph, part) -> list[int]:
    part = set(part)
    return [e for e, (a, b) in enumerate(graph.edges) if (a in part) != (b in part)]

