"""Closed-form dimension counts for K3 surfaces, their hyperplane sections, and Table Two."""

from __future__ import annotations

from dataclasses import dataclass, field

T1_DEGREE = 16
NORMAL_BUNDLE_DEGREE = 8     # each of the two rank-one pieces of T^1

# (genus, number of moduli, parameters, corank) as printed
TABLE_TWO = (
    (6, 22, 85, 10),
    (7, 18, 98, 9),
    (8, 15, 114, 7),
    (9, 12, 132, 5),
    (10, 10, 153, 4),
    (12, 6, 201, 2),
)


class NumerologyError(ArithmeticError):
    """A stated identity fails for the given inputs."""


def projective_group_dim(g: int) -> int:
    """dim PGL(g+2), the automorphisms of P^{g+1}."""
    return (g + 2) ** 2 - 1


def default_tail(g: int) -> int:
    """Default for the sum of h0(N_C(-k)), k >= 2: zero from genus 7 on, at most one at genus 6."""
    if g < 6:
        raise ValueError("tail defaults exist for g >= 6")
    return 1 if g == 6 else 0


@dataclass(frozen=True)
class DimensionReport:
    genus: int
    dim_H: int
    dim_C: int
    dim_F: int
    fiber_dim: int | None
    cone_codim: int | None
    t1_degree: int = T1_DEGREE
    projective_group_dim: int = 0
    notes: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        return {"schema": "gcg/1", "genus": self.genus, "dim_H": self.dim_H, "dim_C": self.dim_C,
                "dim_F": self.dim_F, "fiber_dim": self.fiber_dim, "cone_codim": self.cone_codim,
                "t1_degree": self.t1_degree, "projective_group_dim": self.projective_group_dim,
                "notes": list(self.notes)}


def fiber_case(g: int) -> tuple[str, int]:
    """The stated value of the fiber dimension and whether it is an upper bound or exact."""
    if 6 <= g <= 9 or g == 11:
        return "at_most", 23 - g
    if g in (10, 12):
        return "at_most", 14
    if g >= 13:
        return "exact", g + 1
    raise ValueError(f"no fiber statement for g = {g}")


def fiber_dimension(g: int, gamma: int, tail: int = 0) -> int:
    """Tangent dimension g + gamma + tail of the fiber, checked against the case table."""
    if g < 6 or gamma < 0 or tail < 0:
        raise ValueError("need g >= 6 and non-negative gamma, tail")
    value = g + gamma + tail
    how, bound = fiber_case(g)
    if (how == "exact" and value != bound) or (how == "at_most" and value > bound):
        raise NumerologyError(f"g={g}: fiber dimension {value} vs stated {how} {bound}")
    return value


def cone_codimension(gamma: int, tail: int = 0) -> int:
    if gamma < 0 or tail < 0:
        raise ValueError("inputs must be non-negative")
    return gamma + tail


def fano_tangent_bound(g: int, gamma: int) -> int:
    """Upper bound for h0 of the normal bundle of the Fano threefold; genus 6 gets an extra 2."""
    if g < 6:
        raise ValueError("bound stated for g >= 6")
    return g * g + 3 * g + 19 + gamma + (2 if g == 6 else 0)


def dimensions(g: int, gamma: int | None = None, tail: int | None = None) -> DimensionReport:
    """All closed forms at genus g; fiber data only when a corank is known (or tabulated)."""
    if g < 3:
        raise ValueError("genus must be at least 3")
    dim_h = g * g + 2 * g + 19
    dim_c = g * g + 4 * g - 4
    dim_f = g * g + 3 * g + 19
    if dim_f - dim_h != g:
        raise NumerologyError("dim F - dim H != g")
    if T1_DEGREE != 2 * NORMAL_BUNDLE_DEGREE:
        raise NumerologyError("T^1 degree audit failed")
    notes = []
    if gamma is None:
        gamma = {row[0]: row[3] for row in TABLE_TWO}.get(g, 1 if g == 11 or g >= 13 else None)
    fiber = cone = None
    if gamma is not None and g >= 6:
        tail = default_tail(g) if tail is None else tail
        fiber = fiber_dimension(g, gamma, tail)
        cone = cone_codimension(gamma, tail)
        if 6 <= g <= 9 or g == 11:
            # the map to curves is dominant here, so dim F - dim C is the fiber dimension
            if dim_f - dim_c != 23 - g:
                raise NumerologyError(f"g={g}: dim F - dim C = {dim_f - dim_c} != {23 - g}")
            notes.append(f"dim_F - dim_C = {dim_f - dim_c}")
    return DimensionReport(g, dim_h, dim_c, dim_f, fiber, cone, T1_DEGREE,
                           projective_group_dim(g), tuple(notes))


@dataclass(frozen=True)
class TableRow:
    genus: int
    moduli: int
    parameters: int
    gamma: int
    group_sum: int
    bound: int

    @property
    def ok(self) -> bool:
        return self.parameters == self.group_sum == self.bound

    def line(self) -> str:
        mark = "ok" if self.ok else "FAIL"
        return (f"g={self.genus:>2}  moduli={self.moduli:>3}  params={self.parameters:>3}  "
                f"moduli+PGL={self.group_sum:>3}  bound={self.bound:>3}  gamma={self.gamma:>2}  {mark}")


def table_two() -> list[TableRow]:
    return [TableRow(g, m, p, c, m + projective_group_dim(g), fano_tangent_bound(g, c))
            for g, m, p, c in TABLE_TWO]
