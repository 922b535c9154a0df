"""Degenerations of a pair of scrolls to two chains of planes.

An elliptic normal curve degenerates to a cycle of ``k`` rational
components; ``g + 1`` of them survive as the lines of the double curve and
the others are contracted to the points where consecutive lines meet.  A
degenerate g^1_2 is an involution of the component cycle (a reflection),
and when the survivors are compatible with it, the limit scroll is a chain
of ``g - 1`` planes spanned by the lines of survivors and the images of
their partners.

Component indices keep the conventions of the printed data: ``1..k`` for
odd genus and the tilde graphs, ``0..k-1`` for even genus.  Points of the
limit configurations are labelled ``1..g+1`` with ``p_j`` = l_j meet l_{j+1}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .planes import ConfigError, PlaneConfig, SpanRow, SpanTable, config_from_graph

KINDS = ("i", "ii", "iii")


class DegenerationError(ValueError):
    """Degeneration data is inconsistent or malformed."""


@dataclass(frozen=True)
class RationalCycle:
    k: int
    base: int = 1

    def __post_init__(self):
        if self.k < 2:
            raise DegenerationError("a cycle needs at least two components")
        if self.base not in (0, 1):
            raise DegenerationError("components are numbered from 0 or from 1")

    @property
    def components(self) -> range:
        return range(self.base, self.base + self.k)

    def norm(self, j: int) -> int:
        return (j - self.base) % self.k + self.base

    def step(self, j: int, d: int) -> int:
        return self.norm(j + d)


@dataclass(frozen=True)
class DoubleCorrespondence:
    """An allowable double correspondence: the reflection ``j <-> c - j (mod k)``."""

    cycle: RationalCycle
    kind: str
    constant: int
    anchor: int | tuple[int, int]

    def partner(self, j: int) -> int:
        return self.cycle.norm(self.constant - j)

    @property
    def pairing(self) -> dict[int, int]:
        return {j: self.partner(j) for j in self.cycle.components}

    @property
    def fixed_components(self) -> tuple[int, ...]:
        return tuple(j for j in self.cycle.components if self.partner(j) == j)

    @property
    def fixed_vertices(self) -> tuple[tuple[int, int], ...]:
        """Vertices (j, j+1) of the cycle exchanged with themselves."""
        c = self.cycle
        return tuple((j, c.step(j, 1)) for j in c.components if self.partner(j) == c.step(j, 1))

    def pairs(self) -> list[tuple[int, int]]:
        return sorted({tuple(sorted((j, self.partner(j)))) for j in self.cycle.components
                       if self.partner(j) != j})

    def to_json(self) -> dict:
        anchor = list(self.anchor) if isinstance(self.anchor, tuple) else self.anchor
        return {"kind": self.kind, "anchor": anchor, "constant": self.constant,
                "pairs": [list(p) for p in self.pairs()]}


def _kind_of(k: int, fixed: int) -> str:
    return {2: "i", 1: "ii", 0: "iii"}[fixed]


def make_correspondence(k: int, kind: str, anchor, base: int = 1) -> DoubleCorrespondence:
    """Correspondence of the given kind determined by a single choice.

    Kinds i and ii take a component ``a`` (self-paired); kind iii takes a
    cycle vertex ``(a, a+1)``.  Components at equal distance from the anchor
    are paired.
    """
    if kind not in KINDS:
        raise DegenerationError(f"unknown kind {kind!r}")
    if kind in ("i", "iii") and k % 2:
        raise DegenerationError(f"kind {kind} needs an even cycle, k={k}")
    if kind == "ii" and k % 2 == 0:
        raise DegenerationError(f"kind ii needs an odd cycle, k={k}")
    cycle = RationalCycle(k, base)
    if kind == "iii":
        a, b = anchor
        if cycle.step(a, 1) != cycle.norm(b):
            raise DegenerationError(f"anchor {anchor} is not a vertex of the cycle")
        constant = cycle.norm(2 * a + 1)
        anchor = (cycle.norm(a), cycle.norm(b))
    else:
        constant = cycle.norm(2 * anchor)
        anchor = cycle.norm(anchor)
    return DoubleCorrespondence(cycle, kind, constant, anchor)


def reflection(k: int, constant: int, base: int = 1) -> DoubleCorrespondence:
    """The correspondence ``j <-> constant - j (mod k)``, with kind read off its fixed points."""
    cycle = RationalCycle(k, base)
    probe = DoubleCorrespondence(cycle, "iii", constant, 0)
    fixed = probe.fixed_components
    kind = _kind_of(k, len(fixed))
    anchor = fixed[0] if fixed else probe.fixed_vertices[0]
    return DoubleCorrespondence(cycle, kind, constant, anchor)


@dataclass(frozen=True)
class SurvivorSet:
    cycle: RationalCycle
    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(sorted(self.indices))
        object.__setattr__(self, "indices", idx)
        if len(set(idx)) != len(idx):
            raise DegenerationError(f"repeated survivors in {idx}")
        out = [j for j in idx if j not in self.cycle.components]
        if out:
            raise DegenerationError(f"survivors {out} outside components {self.cycle.components}")

    @property
    def genus(self) -> int:
        return len(self.indices) - 1

    def __contains__(self, j: int) -> bool:
        return j in set(self.indices)

    def line(self, j: int) -> int:
        """Line label l_m of a surviving component."""
        return self.indices.index(j) + 1

    def point(self, j: int) -> int:
        """Point label p_m of a contracted component: it lies between l_m and l_{m+1}."""
        if j in self:
            raise DegenerationError(f"component {j} survives")
        m = len(self.indices)
        for pos in range(m):
            a, b = self.indices[pos], self.indices[(pos + 1) % m]
            if _strictly_between(self.cycle, a, b, j):
                return pos + 1
        raise DegenerationError(f"component {j} not found between survivors")

    def line_points(self, m: int) -> tuple[int, int]:
        """l_m passes through p_{m-1} and p_m."""
        n = len(self.indices)
        return ((m - 2) % n + 1, m)


def _strictly_between(cycle: RationalCycle, a: int, b: int, j: int) -> bool:
    da = (j - a) % cycle.k
    db = (b - a) % cycle.k or cycle.k
    return 0 < da < db


# compatibility

@dataclass(frozen=True)
class CompatibilityReport:
    ok: bool
    violations: tuple[tuple[str, tuple[int, ...]], ...]
    end_pairs: tuple[tuple[int, int], ...]

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return f"compatible; end pairs {list(self.end_pairs)}"
        return "; ".join(f"({c}) violated by {list(ix)}" for c, ix in self.violations)


def _first_survivor(survivors: SurvivorSet, start: int, direction: int, stop: set[int]) -> int | None:
    c = survivors.cycle
    j = start
    for _ in range(c.k):
        if j in stop:
            return None
        if j in survivors:
            return j
        j = c.step(j, direction)
    return None


def is_compatible(survivors: SurvivorSet, corr: DoubleCorrespondence) -> CompatibilityReport:
    violations: list[tuple[str, tuple[int, ...]]] = []
    c = survivors.cycle
    if c != corr.cycle:
        raise DegenerationError("survivors and correspondence live on different cycles")
    fixed = set(corr.fixed_components)
    bad = sorted(fixed & set(survivors.indices))
    if bad:
        violations.append(("a", tuple(bad)))

    # each end of the two paired chains: a self-paired component or a fixed vertex
    starts = [(c.step(f, -1), c.step(f, 1)) for f in corr.fixed_components]
    starts += [(a, b) for a, b in corr.fixed_vertices]
    end_pairs = []
    for left, right in starts:
        s1 = _first_survivor(survivors, left, -1, fixed)
        s2 = _first_survivor(survivors, right, 1, fixed)
        if s1 is None or s2 is None or corr.partner(s1) != s2:
            violations.append(("b", tuple(x for x in (s1, s2) if x is not None)))
        else:
            end_pairs.append((s1, s2))

    in_ends = {x for p in end_pairs for x in p}
    clash = sorted({tuple(sorted((s, corr.partner(s)))) for s in survivors.indices
                    if s not in in_ends and corr.partner(s) != s and corr.partner(s) in survivors})
    for pair in clash:
        violations.append(("c", pair))
    return CompatibilityReport(not violations, tuple(violations), tuple(end_pairs))


# limit planes

@dataclass(frozen=True)
class LimitPlanes:
    config: PlaneConfig
    spans: SpanTable
    end_pairs: tuple[tuple[int, int], ...]


def limit_planes(survivors: SurvivorSet, corr: DoubleCorrespondence) -> LimitPlanes:
    """Planes of the flat limit of the scrolls, ordered along their chain.

    Each end pair of survivors spans the plane of its two meeting lines;
    every other survivor spans a plane with the point its contracted partner
    maps to.
    """
    report = is_compatible(survivors, corr)
    if not report:
        raise DegenerationError(f"incompatible data: {report.describe()}")
    g = survivors.genus
    planes: dict[str, tuple[tuple[int, ...], SpanRow]] = {}
    ends = {x for p in report.end_pairs for x in p}
    for s, t in report.end_pairs:
        ls, lt = survivors.line(s), survivors.line(t)
        pts = set(survivors.line_points(ls)) | set(survivors.line_points(lt))
        if len(pts) != 3:
            raise DegenerationError(f"lines l{ls}, l{lt} of end pair ({s},{t}) do not meet")
        lo, hi = sorted((ls, lt))
        planes[f"{s}|{t}"] = (tuple(sorted(pts)), SpanRow(f"{s}|{t}", ("l", lo), ("l", hi)))
    for s in survivors.indices:
        if s in ends:
            continue
        partner = corr.partner(s)
        m = survivors.line(s)
        p = survivors.point(partner)
        line_pts = survivors.line_points(m)
        if p in line_pts:
            raise DegenerationError(f"partner {partner} of {s} maps onto line l{m}")
        planes[f"{s}>{partner}"] = (tuple(sorted(line_pts + (p,))), SpanRow(f"{s}>{partner}", ("p", p), ("l", m)))
    if len(planes) != g - 1:
        raise DegenerationError(f"expected {g - 1} planes, got {len(planes)}")
    # start the chain at the end plane holding l_1
    first = min(report.end_pairs, key=lambda st: min(survivors.line(x) for x in st))
    order = _chain_order(planes, first=f"{first[0]}|{first[1]}")
    facets = tuple(planes[t][0] for t in order)
    config = PlaneConfig(g, tuple(range(1, g + 2)), facets, tuple(order))
    lines = tuple(survivors.line_points(m) for m in range(1, g + 2))
    spans = SpanTable(tuple(planes[t][1] for t in order), tuple(tuple(sorted(l)) for l in lines),
                      tuple(range(1, g + 2)))
    return LimitPlanes(config, spans, report.end_pairs)


def _chain_order(planes, first: str) -> list[str]:
    tags = list(planes)
    sets = {t: set(planes[t][0]) for t in tags}
    order = [first]
    left = set(tags) - {first}
    while left:
        nxt = [t for t in sorted(left) if len(sets[t] & sets[order[-1]]) == 2]
        if len(nxt) != 1:
            # not a simple chain: keep the remaining planes in a fixed order
            order.extend(sorted(left))
            break
        order.append(nxt[0])
        left.remove(nxt[0])
    return order


# the printed data sets

@dataclass(frozen=True)
class GenusData:
    genus: int
    cycle: RationalCycle
    survivors: SurvivorSet
    corr_a: DoubleCorrespondence
    corr_b: DoubleCorrespondence
    source: str = ""
    expressions: tuple[str, ...] = field(default=(), compare=False)

    def to_json(self) -> dict:
        return {"schema": "gcg/1", "genus": self.genus, "source": self.source, "k": self.cycle.k,
                "base": self.cycle.base, "survivors": list(self.survivors.indices),
                "correspondences": [self.corr_a.to_json(), self.corr_b.to_json()]}


def odd_genus_data(n: int) -> GenusData:
    """g = 2n+1: a cycle of 8n-4 components and two kind-iii correspondences."""
    if n < 3:
        raise DegenerationError("odd-genus data needs n >= 3")
    k = 8 * n - 4
    survivors = ([n - 2] + list(range(n + 3, 3 * n + 2, 2))
                 + [5 * n - 4] + list(range(5 * n + 1, 7 * n, 2)))
    cycle = RationalCycle(k, 1)
    data = GenusData(2 * n + 1, cycle, SurvivorSet(cycle, tuple(survivors)),
                     reflection(k, 8 * n - 3, 1), reflection(k, 2 * n + 1, 1), source=f"odd n={n}")
    _expect_kinds(data, "iii", "iii")
    return data


def _even_terms(n: int) -> list[tuple[str, int]]:
    """The printed survivor expressions with [x] read as floor, paired with their values."""
    q, h, t = (n - 1) // 2, (n - 2) // 2, (3 * n - 3) // 2
    terms = [("[(n-2)/2]", h), ("[(3n-7)/2]", (3 * n - 7) // 2)]
    num = 3 * n + 1
    while num <= 7 * n - 7:
        terms.append((f"[(3n+{num - 3 * n})/2]", num // 2))
        num += 4
    terms += [("3[(3n-3)/2]", 3 * t), ("2n+3[(3n-3)/2]-5", 2 * n + 3 * t - 5)]
    last_run = 8 * n + 4 * q - h - 11
    j = 5 * t
    while j <= last_run:
        terms.append((f"5[(3n-3)/2]+{j - 5 * t}", j))
        j += 2
    terms.append(("8n+6[(n-1)/2]-[(n-2)/2]-11", 8 * n + 6 * q - h - 11))
    return terms


def even_genus_data(n: int) -> GenusData:
    """g = 2n+2: components 0..k-1 with k = 8n + 6[(n-1)/2] - 11, two kind-ii correspondences.

    The printed survivor list is evaluated term by term and rejected, naming
    the offending term, if any value repeats or falls outside 0..k-1.
    """
    if n < 1:
        raise DegenerationError("even-genus data needs n >= 1")
    q, t = (n - 1) // 2, (3 * n - 3) // 2
    k = 8 * n + 6 * q - 11
    if k < 2:
        raise DegenerationError(f"n={n}: cycle length k={k} is too small")
    terms = _even_terms(n)
    seen: dict[int, str] = {}
    for expr, value in terms:
        if not 0 <= value < k:
            raise DegenerationError(f"n={n}: survivor {expr} = {value} outside 0..{k - 1}")
        if value in seen:
            raise DegenerationError(f"n={n}: survivor {expr} = {value} repeats {seen[value]}")
        seen[value] = expr
    if len(terms) != 2 * n + 3:
        raise DegenerationError(f"n={n}: {len(terms)} survivors, expected {2 * n + 3}")
    cycle = RationalCycle(k, 0)
    data = GenusData(2 * n + 2, cycle, SurvivorSet(cycle, tuple(v for _, v in terms)),
                     reflection(k, k, 0), reflection(k, 2 * t, 0), source=f"even n={n}",
                     expressions=tuple(e for e, _ in terms))
    _expect_kinds(data, "ii", "ii")
    if data.corr_a.fixed_components != (0,):
        raise DegenerationError(f"n={n}: correspondence A fixes {data.corr_a.fixed_components}, not only 0")
    return data


def tilde_data(g: int) -> GenusData:
    """Alternative data for genus 7 (k=18) and genus 8 (k=23)."""
    if g == 7:
        cycle = RationalCycle(18, 1)
        data = GenusData(7, cycle, SurvivorSet(cycle, (1, 5, 7, 10, 11, 13, 15, 16)),
                         reflection(18, 17, 1), reflection(18, 6, 1), source="tilde g=7")
        _expect_kinds(data, "iii", "i")
        _expect_fixed(data.corr_b, (3, 12))
    elif g == 8:
        cycle = RationalCycle(23, 1)
        data = GenusData(8, cycle, SurvivorSet(cycle, (1, 6, 8, 9, 12, 14, 16, 19, 20)),
                         reflection(23, 21, 1), reflection(23, 7, 1), source="tilde g=8")
        _expect_kinds(data, "ii", "ii")
        _expect_fixed(data.corr_a, (22,))
        _expect_fixed(data.corr_b, (15,))
    else:
        raise DegenerationError(f"tilde data exists only for g = 7, 8 (got {g})")
    return data


def standard_data(g: int) -> GenusData:
    if g < 7:
        raise DegenerationError("standard data starts at g = 7")
    return odd_genus_data((g - 1) // 2) if g % 2 else even_genus_data((g - 2) // 2)


def _expect_kinds(data: GenusData, ka: str, kb: str) -> None:
    for corr, want, label in ((data.corr_a, ka, "A"), (data.corr_b, kb, "B")):
        if corr.kind != want:
            raise DegenerationError(f"{data.source}: correspondence {label} has kind {corr.kind}, "
                                    f"stated {want} (fixed {corr.fixed_components})")


def _expect_fixed(corr: DoubleCorrespondence, want: tuple[int, ...]) -> None:
    if corr.fixed_components != want:
        raise DegenerationError(f"self-paired components {corr.fixed_components}, stated {want}")


# the union of the two limits

@dataclass(frozen=True)
class UnionReport:
    ok: bool
    limit_a: LimitPlanes | None
    limit_b: LimitPlanes | None
    label_map: dict[int, int]          # p_j label -> face index of the graph
    witness: dict[str, str]            # limit plane tag -> graph vertex tag
    mismatch: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {"schema": "gcg/1", "ok": self.ok, "mismatch": self.mismatch,
                "label_map": {str(k): v for k, v in sorted(self.label_map.items())},
                "witness": dict(sorted(self.witness.items()))}


def union_config(data: GenusData) -> tuple[PlaneConfig, LimitPlanes, LimitPlanes]:
    la = limit_planes(data.survivors, data.corr_a)
    lb = limit_planes(data.survivors, data.corr_b)
    tags = tuple(f"A:{t}" for t in la.config.tags) + tuple(f"B:{t}" for t in lb.config.tags)
    union = PlaneConfig(data.genus, la.config.points, la.config.facets + lb.config.facets, tags)
    return union, la, lb


def verify_union(data: GenusData, graph=None, parts: dict[int, str] | None = None) -> UnionReport:
    """Check that the two limit chains together are the plane configuration of ``graph``.

    ``graph`` defaults to the standard graph of the genus (or the tilde graph
    for tilde data).  When ``parts`` maps graph vertices to 'A'/'B', the
    search first looks for a witness sending each limit chain onto the
    matching part.
    """
    from . import families

    try:
        union, la, lb = union_config(data)
    except (DegenerationError, ConfigError) as exc:
        return UnionReport(False, None, None, {}, {}, str(exc))
    if graph is None:
        if data.source.startswith("tilde"):
            graph = families.tilde_graph(data.genus)
        else:
            graph = families.standard_graph(data.genus)
            if parts is None:
                dec = families.ab_decomposition(data.genus)
                parts = {v: "A" for v in dec.part_A} | {v: "B" for v in dec.part_B}
    target = config_from_graph(graph)
    src_parts = [t[0] for t in union.tags]
    tgt_parts = [parts.get(v) if parts else None for v in graph.vertices]
    mapping = None
    if parts:
        mapping = find_label_isomorphism(union, target, src_parts, tgt_parts)
    if mapping is None:
        mapping = find_label_isomorphism(union, target)
    if mapping is None:
        return UnionReport(False, la, lb, {}, {}, _first_mismatch(union, target))
    index = {f: i for i, f in enumerate(target.facets)}
    witness = {}
    for i, f in enumerate(union.facets):
        image = tuple(sorted(mapping[x] for x in f))
        witness[union.tags[i]] = target.tags[index[image]]
    return UnionReport(True, la, lb, mapping, witness)


def _first_mismatch(src: PlaneConfig, tgt: PlaneConfig) -> str:
    if len(src.facets) != len(tgt.facets):
        return f"{len(src.facets)} limit planes vs {len(tgt.facets)} graph planes"
    if len(set(src.facets)) != len(src.facets):
        return "limit planes repeat"
    ds, dt = sorted(_degrees(src).values()), sorted(_degrees(tgt).values())
    if ds != dt:
        return f"point degree sequences differ: {ds} vs {dt}"
    return "no label bijection carries one set of planes onto the other"


def _degrees(cfg: PlaneConfig) -> dict[int, int]:
    out = {p: 0 for p in cfg.points}
    for f in cfg.facets:
        for p in f:
            out[p] += 1
    return out


def find_label_isomorphism(src: PlaneConfig, tgt: PlaneConfig, src_colors=None, tgt_colors=None
                           ) -> dict[int, int] | None:
    """Bijection of point labels carrying the facets of ``src`` onto those of ``tgt``.

    Optional facet colors must be preserved.  Plain backtracking over labels
    ordered by facet adjacency, pruning on degrees and on completed facets.
    """
    if len(src.points) != len(tgt.points) or len(src.facets) != len(tgt.facets):
        return None
    if len(set(src.facets)) != len(src.facets):
        return None
    src_colors = src_colors or [None] * len(src.facets)
    tgt_colors = tgt_colors or [None] * len(tgt.facets)
    tgt_lookup = {f: c for f, c in zip(tgt.facets, tgt_colors)}
    deg_s, deg_t = _degrees(src), _degrees(tgt)
    facets_at: dict[int, list[int]] = {p: [] for p in src.points}
    for i, f in enumerate(src.facets):
        for p in f:
            facets_at[p].append(i)
    # order labels so each new one shares a facet with an earlier one
    order: list[int] = []
    pool = sorted(src.points, key=lambda p: -deg_s[p])
    while pool:
        nxt = next((p for p in pool if any(set(src.facets[i]) & set(order) for i in facets_at[p])),
                   pool[0])
        order.append(nxt)
        pool.remove(nxt)

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def consistent(p: int) -> bool:
        for i in facets_at[p]:
            f = src.facets[i]
            if all(x in mapping for x in f):
                image = tuple(sorted(mapping[x] for x in f))
                if image not in tgt_lookup or tgt_lookup[image] != src_colors[i]:
                    return False
        return True

    def search(pos: int) -> bool:
        if pos == len(order):
            return True
        p = order[pos]
        for q in tgt.points:
            if q in used or deg_t[q] != deg_s[p]:
                continue
            mapping[p] = q
            used.add(q)
            if consistent(p) and search(pos + 1):
                return True
            del mapping[p]
            used.discard(q)
        return False

    return dict(mapping) if search(0) else None


Builder = Callable[[int], GenusData]
