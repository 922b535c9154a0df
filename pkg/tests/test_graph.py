import json
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gcg.families import prism_graph, standard_graph
from gcg.graph import (GraphShapeError, TrivalentPlanarGraph, cycle_basis, divergence,
                       edge_connectivity, faces, validate)
from gcg.exact import bareiss_rank
from oracles import brute_min_cut


def test_k4_basics(K4):
    report = validate(K4)
    assert report.ok, report.failures()
    assert K4.genus == 3
    assert len(faces(K4)) == 4
    assert len(cycle_basis(K4)) == 3
    assert edge_connectivity(K4) == 3


def test_g7_counts(G7):
    assert (G7.vertex_count, G7.edge_count, G7.genus) == (12, 18, 7)
    assert validate(G7).ok
    assert len(faces(G7)) == 8


def test_g12_faces(G12):
    assert len(faces(G12)) == 13


def test_doubled_edge_fails_simplicity(K4):
    edges = list(K4.edges)
    edges[5] = edges[4]            # replace 3-4 by a second copy of 2-4
    bad = TrivalentPlanarGraph(4, edges)
    report = validate(bad)
    assert not report.checks["simple"]
    assert not report.ok


def test_shape_errors_are_not_validation_failures():
    with pytest.raises(GraphShapeError):
        TrivalentPlanarGraph(3, [(1, 4)])
    with pytest.raises(GraphShapeError):
        TrivalentPlanarGraph(2, [(1, 2)], rotation=[[0], [1]])


def test_bridge_has_connectivity_one():
    # two triangles joined by a single bridge
    edges = [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 4)]
    assert edge_connectivity(TrivalentPlanarGraph(6, edges)) == 1


def test_disconnected_has_connectivity_zero():
    edges = [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]
    assert edge_connectivity(TrivalentPlanarGraph(6, edges)) == 0


@pytest.mark.parametrize("graph", [standard_graph(7), standard_graph(8), prism_graph(5), prism_graph(3)],
                         ids=lambda g: g.name)
def test_connectivity_matches_bipartition_oracle(graph):
    assert edge_connectivity(graph) == brute_min_cut(graph.vertex_count, graph.edges)


def test_every_dart_in_one_face(G7):
    fs = faces(G7)
    darts = [(e, t) for walk in fs.faces for e, t, _ in walk]
    assert len(darts) == len(set(darts)) == 2 * G7.edge_count


def test_face_boundaries_sum_to_zero(G7):
    fs = faces(G7)
    total = np.sum([fs.boundary_vector(i) for i in range(len(fs))], axis=0)
    assert not total.any()


def test_cycle_basis_g7_is_divergence_free(G7):
    basis = cycle_basis(G7)
    assert len(basis) == 7
    for vec in basis.basis:
        assert divergence(G7, vec) == [0] * 12


def test_cycle_basis_g11_rank(G11):
    m = cycle_basis(G11).matrix
    assert m.shape == (11, 30)
    assert bareiss_rank(m) == 11


@given(st.integers(7, 24), st.data())
@settings(max_examples=25, deadline=None)
def test_any_outer_face_gives_a_basis(g, data):
    graph = standard_graph(g)
    fs = faces(graph)
    outer = data.draw(st.integers(0, len(fs) - 1))
    assert bareiss_rank(cycle_basis(graph, fs, outer).matrix) == g


def test_json_round_trip(G7):
    text = json.dumps(G7.to_json())
    back = TrivalentPlanarGraph.from_json(text)
    assert back == G7
    assert json.loads(text)["rotation"]["1"] == list(G7.rotation_at(1))


def test_json_rejects_wrong_genus(G7):
    data = G7.to_json()
    data["genus"] = 8
    with pytest.raises(GraphShapeError):
        TrivalentPlanarGraph.from_json(data)


def test_dot_lists_faces(K4):
    dot = K4.to_dot()
    assert dot.count("// face") == 4
    assert dot.count("--") == 6


def test_shuffled_rotation_can_break_distinct_faces():
    # some rotation of G7 meets a face twice; validation must catch it without crashing
    rng = random.Random(3)
    g = standard_graph(7)
    for _ in range(50):
        rot = [tuple(rng.sample(list(r), 3)) for r in g.rotation]
        report = validate(TrivalentPlanarGraph(g.vertex_count, g.edges, rot))
        if not report.checks["distinct_faces"]:
            break
    else:
        pytest.fail("no non-planar rotation found")
    assert len(faces(TrivalentPlanarGraph(g.vertex_count, g.edges, rot))) != 8 or not report.ok
