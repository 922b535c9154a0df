"""The Gaussian (Wahl) map of a graph curve as an exact integer matrix.

Model
-----
Each vertex v is a smooth rational component with its three nodes placed at
z = 0, 1, oo (in the order of an explicit position assignment, by default
the rotation order).  A global section of the dualizing sheaf restricts to
``(r0/z + r1/(z-1)) dz`` where r0, r1 are the residues of a cycle at the
first two branches; the residue at oo is ``-r0-r1``.

Component rows.  For two sections s, t the Wronskian ``f'g - fg'`` of their
restrictions has its order-3 poles cancel by antisymmetry and equals
``(r0(s) r1(t) - r0(t) r1(s)) (dz)^3 / (z^2 (z-1)^2)``; the integer in front
is the component row.

Node rows.  Near the node of an edge, in the local model xy = 0, let
``eta = dx/x = -dy/y``.  On the x-branch ``s = (alpha + sigma x + ...) eta``,
on the y-branch ``s = (alpha - sigma' y + ...) eta`` where sigma, sigma' are
the next coefficients after the residue in each branch's own coordinate.
Writing s = a eta, t = b eta, the image is ``(a db - b da) eta^2``.  The
constant part lives on the branches; the mixed terms are multiples of
``x dy`` and ``y dx = -x dy``, the torsion generator of Omega^1 at the node.
Collecting them gives

    2 (sigma'_s sigma_t - sigma_s sigma'_t) x dy eta^2

and the node row is this coefficient without the factor 2.  With the
coordinates z, z-1, 1/z the next coefficient at the three positions is
``-r1``, ``r0`` and ``-r1``.

The corank does not depend on the position assignment, on edge
orientations or on the cycle basis; ``convention_shuffle`` exists to test
exactly that.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .exact import BackendRank, certified_rank
from .graph import TrivalentPlanarGraph, cycle_basis, divergence, faces, validate

MIX_BOUND = 2**10


@dataclass(frozen=True)
class CurveModel:
    graph: TrivalentPlanarGraph
    positions: tuple[tuple[int, int, int], ...]    # per vertex: edges at 0, 1, oo
    flips: tuple[int, ...] = ()                    # per edge: +1 or -1 orientation change

    def __post_init__(self):
        g = self.graph
        if not self.flips:
            object.__setattr__(self, "flips", (1,) * g.edge_count)
        for v, pos in zip(g.vertices, self.positions):
            if sorted(pos) != sorted(g.incidence[v - 1]):
                raise ValueError(f"positions at v{v} are not its incident edges")

    @property
    def components(self) -> int:
        return self.graph.vertex_count

    @property
    def nodes(self) -> tuple[tuple[int, int, int, int], ...]:
        """Per edge (x, position at x, y, position at y) with x < y."""
        out = []
        for e, (a, b) in enumerate(self.graph.edges):
            x, y = min(a, b), max(a, b)
            out.append((x, self.positions[x - 1].index(e), y, self.positions[y - 1].index(e)))
        return tuple(out)

    def sign(self, e: int, v: int) -> int:
        """+1 if the (possibly flipped) orientation of e points into v."""
        return self.flips[e] * self.graph.orientation_sign(e, v)


def curve_model(graph: TrivalentPlanarGraph) -> CurveModel:
    """Positions 0, 1, oo follow the rotation order at each vertex."""
    return CurveModel(graph, tuple(graph.rotation_at(v) for v in graph.vertices))


@dataclass(frozen=True)
class OmegaSection:
    cycle: tuple[int, ...]
    residues: np.ndarray = field(repr=False)      # V x 3, positions 0, 1, oo

    def pair(self, v: int) -> tuple[int, int]:
        r = self.residues[v - 1]
        return int(r[0]), int(r[1])


def omega_restrictions(model: CurveModel, cycle) -> OmegaSection:
    """Residues of the section attached to ``cycle`` (given in the model's orientation)."""
    g = model.graph
    cycle = tuple(int(x) for x in cycle)
    plain = [c * f for c, f in zip(cycle, model.flips)]
    if any(divergence(g, plain)):
        raise ValueError("vector is not a cycle: nonzero divergence")
    res = np.zeros((g.vertex_count, 3), dtype=np.int64)
    for v in g.vertices:
        for p, e in enumerate(model.positions[v - 1]):
            res[v - 1, p] = cycle[e] * model.sign(e, v)
    return OmegaSection(cycle, res)


def next_coefficient(residues, position: int):
    """Coefficient after the residue in the local coordinate z, z-1 or 1/z."""
    r0, r1 = residues[..., 0], residues[..., 1]
    return (-r1, r0, -r1)[position]


def wronskian_component(s: OmegaSection, t: OmegaSection, v: int) -> int:
    a0, a1 = s.pair(v)
    b0, b1 = t.pair(v)
    return a0 * b1 - b0 * a1


def torsion_component(model: CurveModel, s: OmegaSection, t: OmegaSection, e: int) -> int:
    x, px, y, py = model.nodes[e]
    sx = int(next_coefficient(s.residues[x - 1], px))
    sy = int(next_coefficient(s.residues[y - 1], py))
    tx = int(next_coefficient(t.residues[x - 1], px))
    ty = int(next_coefficient(t.residues[y - 1], py))
    return sy * tx - sx * ty


@dataclass(frozen=True)
class GaussianMatrix:
    genus: int
    entries: np.ndarray = field(repr=False)
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def to_csv(self) -> str:
        lines = ["row," + ",".join(self.col_labels)]
        for label, row in zip(self.row_labels, self.entries):
            lines.append(label + "," + ",".join(str(int(x)) for x in row))
        return "\n".join(lines) + "\n"


def target_dimension(graph: TrivalentPlanarGraph) -> int:
    """Component rows plus node rows; equals h0 of omega^3 on a smooth curve, 5g - 5."""
    total = graph.vertex_count + graph.edge_count
    assert total == 5 * graph.genus - 5, "trivalent counts violated"
    return total


def gaussian_matrix(graph: TrivalentPlanarGraph, model: CurveModel | None = None,
                    basis=None) -> GaussianMatrix:
    """Matrix with one column per basis pair i < j and rows (v1..vV, e0..e_{E-1})."""
    model = model or curve_model(graph)
    if basis is None:
        basis = cycle_basis(graph).matrix
    basis = np.asarray(basis, dtype=np.int64)
    g = graph.genus
    sections = [omega_restrictions(model, c) for c in basis]
    res = np.stack([s.residues for s in sections])          # g x V x 3
    r0, r1 = res[:, :, 0], res[:, :, 1]
    nodes = np.array(model.nodes, dtype=np.int64)           # E x 4
    lam = np.stack([-r1, r0, -r1], axis=2)                  # g x V x 3
    lx = lam[:, nodes[:, 0] - 1, nodes[:, 1]]               # g x E
    ly = lam[:, nodes[:, 2] - 1, nodes[:, 3]]
    pairs = list(combinations(range(g), 2))
    i = np.array([p[0] for p in pairs], dtype=np.int64)
    j = np.array([p[1] for p in pairs], dtype=np.int64)
    comp = r0[i] * r1[j] - r0[j] * r1[i]                    # pairs x V
    tors = ly[i] * lx[j] - lx[i] * ly[j]                    # pairs x E
    entries = np.concatenate([comp, tors], axis=1).T
    rows = tuple(f"v{v}" for v in graph.vertices) + tuple(f"e{e}" for e in range(graph.edge_count))
    cols = tuple(f"{a}^{b}" for a, b in pairs)
    return GaussianMatrix(g, entries, rows, cols)


@dataclass(frozen=True)
class CorankCertificate:
    genus: int
    domain_dim: int
    target_dim: int
    rank: int
    backends: tuple[BackendRank, ...]
    name: str = ""

    @property
    def corank(self) -> int:
        return self.target_dim - self.rank

    def to_json(self) -> dict:
        return {"schema": "gcg/1", "genus": self.genus, "graph": self.name,
                "domain_dim": self.domain_dim, "target_dim": self.target_dim,
                "target_audit": {"components": 2 * self.genus - 2, "nodes": 3 * self.genus - 3,
                                 "smooth_h0_omega3": 5 * self.genus - 5},
                "rank": self.rank, "corank": self.corank,
                "backends": [b.to_json() for b in self.backends]}


def corank(matrix: GaussianMatrix, rng: random.Random | None = None, name: str = "") -> CorankCertificate:
    """Certified corank; raises RankDisagreement if the backends differ."""
    rng = rng or random.Random(0)
    rank, backends = certified_rank(matrix.entries, rng)
    rows, cols = matrix.shape
    return CorankCertificate(matrix.genus, cols, rows, rank, tuple(backends), name)


def graph_corank(graph: TrivalentPlanarGraph, seed: int = 0) -> CorankCertificate:
    report = validate(graph)
    if not report.ok:
        raise ValueError(f"graph fails validation: {report.failures()}")
    return corank(gaussian_matrix(graph), random.Random(seed), name=graph.name)


def convention_shuffle(graph: TrivalentPlanarGraph, seed: int) -> GaussianMatrix:
    """Rebuild the matrix under random legal conventions.

    Positions at every vertex are permuted, edge orientations flipped, a
    random face is dropped from the basis and the basis is mixed by random
    unimodular row operations.
    """
    rng = random.Random(seed)
    g = graph.genus
    positions = tuple(tuple(rng.sample(list(graph.incidence[v - 1]), 3)) for v in graph.vertices)
    flips = tuple(rng.choice((1, -1)) for _ in range(graph.edge_count))
    model = CurveModel(graph, positions, flips)
    fs = faces(graph)
    basis = cycle_basis(graph, fs, outer=rng.randrange(len(fs))).matrix.copy()
    for _ in range(3 * g):
        a, b = rng.sample(range(g), 2)
        row = basis[a] + rng.choice((-1, 1, 2)) * basis[b]
        if np.abs(row).max() <= MIX_BOUND:   # keep products well inside int64
            basis[a] = row
    if g > 1 and rng.random() < 0.5:
        basis[[0, 1]] = basis[[1, 0]]
    # express the cycles in the flipped orientation
    basis = basis * np.array(flips, dtype=np.int64)[None, :]
    return gaussian_matrix(graph, model, basis)
