"""The acceptance checks, shared by the test-suite and the ``suite`` subcommand.

Every check returns a ``Criterion`` carrying a pass flag and a one-line
detail; none of them raise on an ordinary mismatch.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import degeneration as deg
from . import families, gauss, numerology, planes

GAUSS_CAVEAT = ("criteria 1-3 are the oracle for the derived node-torsion rows: "
                "a failure there is a model-derivation failure, not an arithmetic one (see 5)")


@dataclass
class Criterion:
    number: int
    title: str
    ok: bool = True
    details: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def fail(self, msg: str) -> None:
        self.ok = False
        self.details.append(msg)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = "; ".join(self.details[:4])
        return f"[{status}] {self.number:>2}. {self.title}" + (f" -- {extra}" if extra else "")

    def to_json(self) -> dict:
        return {"criterion": self.number, "title": self.title, "ok": self.ok,
                "details": self.details, "warnings": self.warnings}


class CorankCache:
    """Certificates computed once per graph and reused across criteria."""

    def __init__(self, seed: int = 0):
        self.seed = seed
        self._store: dict[tuple[str, int], gauss.CorankCertificate] = {}

    def get(self, kind: str, g: int) -> gauss.CorankCertificate:
        key = (kind, g)
        if key not in self._store:
            graph = families.build(kind, g)
            self._store[key] = gauss.graph_corank(graph, seed=self.seed + g)
        return self._store[key]


def corank_theorem(genera: Iterable[int], cache: CorankCache) -> Criterion:
    c = Criterion(1, "corank 1 for G_11 and G_13..G_20")
    for g in genera:
        if g == 11 or 13 <= g <= 20:
            got = cache.get("standard", g).corank
            if got != 1:
                c.fail(f"G{g}: corank {got}")
    return c


def genus_twelve(cache: CorankCache) -> Criterion:
    c = Criterion(2, "corank 2 for G_12")
    got = cache.get("standard", 12).corank
    if got != 2:
        c.fail(f"G12: corank {got}, expected 2")
    return c


def tilde_coranks(cache: CorankCache) -> Criterion:
    c = Criterion(3, "corank 9 for tilde G_7, 7 for tilde G_8")
    for g, want in ((7, 9), (8, 7)):
        got = cache.get("tilde", g).corank
        if got != want:
            c.fail(f"tilde G{g}: corank {got}, expected {want}")
    g9 = cache.get("standard", 9).corank
    g10 = cache.get("standard", 10).corank
    c.details.append(f"reported: G9={g9} (soft 5), G10={g10}")
    if g9 != 5:
        c.warnings.append(f"G9 corank {g9} differs from the soft expectation 5")
    return c


def wahl_bound(genera: Iterable[int], cache: CorankCache) -> Criterion:
    c = Criterion(4, "corank >= 1 for every standard graph")
    for g in genera:
        got = cache.get("standard", g).corank
        if got < 1:
            c.fail(f"G{g}: corank {got}")
    return c


def convention_invariance(cache: CorankCache, genera=(7, 11, 12, 15), shuffles: int = 20) -> Criterion:
    c = Criterion(5, "corank unchanged by convention shuffles; rank backends agree")
    from .exact import RankDisagreement

    for g in genera:
        base = cache.get("standard", g).corank
        graph = families.standard_graph(g)
        for s in range(shuffles):
            seed = cache.seed * 1000 + 100 * g + s
            try:
                got = gauss.corank(gauss.convention_shuffle(graph, seed), random.Random(seed)).corank
            except RankDisagreement as exc:
                c.fail(f"G{g} shuffle {s}: {exc}")
                continue
            if got != base:
                c.fail(f"G{g} shuffle {s}: corank {got} != {base}")
    return c


def k3_numerics(genera: Iterable[int]) -> Criterion:
    c = Criterion(6, "H(d) = (g-1)d^2 + 2 for S_G")
    for g in genera:
        cfg = planes.config_from_graph(families.standard_graph(g))
        for d in range(1, 7):
            h = planes.hilbert_function(cfg, d)
            if h != (g - 1) * d * d + 2:
                c.fail(f"g={g} d={d}: H={h}")
            if g <= 9 and d <= 4 and planes.hilbert_function_bruteforce(cfg, d) != h:
                c.fail(f"g={g} d={d}: monomial count disagrees")
    return c


def scroll_numerics(genera: Iterable[int]) -> Criterion:
    c = Criterion(7, "chains are numerical scrolls, double curve has H(d) = (g+1)d")
    for g in genera:
        dec = families.ab_decomposition(g)
        chains = [planes.chain_config(dec, p) for p in "AB"]
        curve = planes.double_curve(*chains)
        if len(curve.facets) != g + 1:
            c.fail(f"g={g}: {len(curve.facets)} double-curve lines")
        for d in range(1, 7):
            want = ((g - 1) * d * d + (g + 1) * d + 2) // 2
            for name, ch in zip("AB", chains):
                h = planes.hilbert_function(ch, d)
                if h != want:
                    c.fail(f"g={g} {name} d={d}: H={h} != {want}")
            if planes.hilbert_function(curve, d) != (g + 1) * d:
                c.fail(f"g={g} curve d={d}")
    return c


def table_one_rows(n: int) -> dict[int, tuple[tuple[str, int], tuple[str, int]]]:
    """Spans of the odd-genus A chain, keyed by vertex number."""
    rows = {1: (("l", 1), ("l", 2 * n + 2)), n + 1: (("p", 1), ("l", 2 * n + 1))}
    for i in range(1, n - 1):
        rows[n + 2 * i] = (("p", i), ("l", 2 * n + 1 - i))
        rows[n + 2 * i + 1] = (("p", 2 * n - i), ("l", i + 1))
    rows[3 * n - 2] = (("p", n + 2), ("l", n))
    rows[4 * n - 1] = (("l", n + 1), ("l", n + 2))
    return rows


def table_one_matches(n: int) -> bool:
    dec = families.ab_decomposition(2 * n + 1)
    chain_a = planes.chain_config(dec, "A")
    curve = planes.double_curve(chain_a, planes.chain_config(dec, "B"))
    table = planes.span_table(chain_a, curve)
    got = {int(r.plane[1:]): (r.first, r.second) for r in table.rows}
    return got == table_one_rows(n)


def degeneration_theorem(genera: Iterable[int]) -> Criterion:
    c = Criterion(8, "standard and tilde data degenerate to S_G")
    for g in genera:
        try:
            data = deg.standard_data(g)
        except deg.DegenerationError as exc:
            c.fail(f"g={g}: {exc}")
            continue
        for name, corr in (("A", data.corr_a), ("B", data.corr_b)):
            rep = deg.is_compatible(data.survivors, corr)
            if not rep:
                c.fail(f"g={g} {name}: {rep.describe()}")
        report = deg.verify_union(data)
        if not report:
            c.fail(f"g={g}: union {report.mismatch}")
            continue
        for lim in (report.limit_a, report.limit_b):
            if len(lim.config.facets) != g - 1:
                c.fail(f"g={g}: chain of {len(lim.config.facets)} planes")
    if not table_one_matches(3):
        c.fail("Table One differs at n=3")
    for g in (7, 8):
        report = deg.verify_union(deg.tilde_data(g))
        if not report:
            c.fail(f"tilde g={g}: {report.mismatch}")
    return c


def numerology_checks() -> Criterion:
    c = Criterion(9, "dimension identities, Table Two, cone codimension")
    for g in range(6, 31):
        try:
            numerology.dimensions(g)
        except numerology.NumerologyError as exc:
            c.fail(f"g={g}: {exc}")
    for row in numerology.table_two():
        if not row.ok:
            c.fail(row.line())
    # gamma >= 1 on K3 sections, so (0, 1) is outside the domain of the statement
    for gamma in range(1, 4):
        for tail in range(0, 3):
            one = numerology.cone_codimension(gamma, tail) == 1
            if one != ((gamma, tail) == (1, 0)):
                c.fail(f"cone codimension at ({gamma}, {tail})")
    for g in range(6, 31):
        codim = numerology.dimensions(g).cone_codim
        if codim is not None and (codim == 1) != (g == 11 or g >= 13):
            c.fail(f"g={g}: cone codimension {codim}")
    return c


def run_all(genera: list[int], seed: int = 0,
            progress: Callable[[Criterion], None] | None = None) -> list[Criterion]:
    cache = CorankCache(seed)
    checks = [
        lambda: corank_theorem(genera, cache),
        lambda: genus_twelve(cache),
        lambda: tilde_coranks(cache),
        lambda: wahl_bound(genera, cache),
        lambda: convention_invariance(cache),
        lambda: k3_numerics(genera),
        lambda: scroll_numerics(genera),
        lambda: degeneration_theorem(genera),
        numerology_checks,
    ]
    out = []
    for check in checks:
        result = check()
        out.append(result)
        if progress:
            progress(result)
    return out
