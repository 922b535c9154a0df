import pytest
from hypothesis import given, strategies as st

from gcg.numerology import (NumerologyError, TABLE_TWO, T1_DEGREE, cone_codimension, default_tail,
                            dimensions, fano_tangent_bound, fiber_dimension, projective_group_dim,
                            table_two)


def test_g11_dimensions():
    r = dimensions(11)
    assert (r.dim_H, r.dim_C, r.dim_F) == (162, 161, 173)


def test_g7_dim_h():
    assert dimensions(7).dim_H == 82


@given(st.integers(3, 200))
def test_f_minus_h_is_g(g):
    r = dimensions(g, gamma=None)
    assert r.dim_F - r.dim_H == g
    assert r.projective_group_dim == g * g + 4 * g + 3


@pytest.mark.parametrize("g", range(6, 31))
def test_identities_hold(g):
    r = dimensions(g)
    assert r.t1_degree == 16
    if 6 <= g <= 9 or g == 11:
        assert r.dim_F - r.dim_C == r.fiber_dim == 23 - g


def test_fiber_examples():
    assert fiber_dimension(8, 7) == 15
    assert fiber_dimension(13, 1) == 14
    assert fiber_dimension(12, 2) == 14


def test_fiber_contradiction_flagged():
    with pytest.raises(NumerologyError):
        fiber_dimension(13, 2)
    # a corank 3 at genus 12 would exceed the stated bound of 14
    with pytest.raises(NumerologyError):
        fiber_dimension(12, 3)


def test_genus_six_tail():
    assert default_tail(6) == 1
    assert fiber_dimension(6, 10, default_tail(6)) == 17


def test_cone_codimension():
    assert cone_codimension(1, 0) == 1
    assert cone_codimension(2, 0) == 2
    assert cone_codimension(0, 0) == 0


@given(st.integers(1, 30), st.integers(0, 5))
def test_codimension_one_only_at_one_zero(gamma, tail):
    assert (cone_codimension(gamma, tail) == 1) == ((gamma, tail) == (1, 0))


def test_bound_examples():
    assert fano_tangent_bound(12, 2) == 201
    assert fano_tangent_bound(7, 9) == 98
    assert fano_tangent_bound(6, 10) == 85


def test_table_two_rows():
    rows = table_two()
    assert len(rows) == 6
    assert all(r.ok for r in rows)
    by_g = {r.genus: r for r in rows}
    assert by_g[9].group_sum == 12 + 120 == 132
    assert by_g[10].group_sum == 153
    assert by_g[6].group_sum == 85


def test_table_two_verbatim():
    assert TABLE_TWO[0] == (6, 22, 85, 10)
    assert [row[3] for row in TABLE_TWO] == [10, 9, 7, 5, 4, 2]


def test_t1_degree():
    assert T1_DEGREE == 16
    assert projective_group_dim(11) == 168
