"""Validation, recovery, crossing neighborhoods, and diagnostics."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gadgets import (
    crossing_gadget,
    doubly_triangular_gadget,
    encircled_gadget,
    squeezed_gadget,
)
from oneplane.generators import GeneratorParams, catalog, random_oneplane
from oneplane.oneplanar import (
    ADJACENT_FALSE,
    CROSSING_EDGE_ON_TWO_TRIANGLES,
    ENCIRCLED_4_VERTEX,
    FALSE_DEGREE,
    RECOVERED_LOOP,
    RECOVERED_MULTI_EDGE,
    SQUEEZED_3_VERTEX,
    RecoveredLoop,
    RecoveredMultiEdge,
    build_drawing,
    crossing_neighborhoods,
    drawing_diagnostics,
    recover_original,
    validate,
)

K4 = {0: [1, 3, 2], 1: [2, 3, 0], 2: [0, 3, 1], 3: [2, 0, 1]}


def test_plane_triangulation_validates_clean():
    report = validate(build_drawing(K4))
    assert report.ok


def test_adjacent_false_vertices_flagged():
    # path 0-1-2-3-4 with 1, 2 marked false (degrees wrong too)
    rot = {0: [1], 1: [0, 2], 2: [1, 3], 3: [2, 4], 4: [3]}
    report = validate(build_drawing(rot, {1, 2}))
    assert ADJACENT_FALSE in report.kinds()
    assert FALSE_DEGREE in report.kinds()


def test_false_degree_three_flagged():
    rot = {0: [1, 2, 3], 1: [2, 0], 2: [0, 1, 3], 3: [2, 0]}
    report = validate(build_drawing(rot, {0}))
    assert report.kinds() == {FALSE_DEGREE}


def test_recover_identity_without_crossings():
    view = recover_original(build_drawing(K4))
    assert view.edges == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    assert all(view.degree(v) == 3 for v in view.vertices)


def test_recover_k5_from_catalog_drawing():
    g = catalog("k5-one-crossing")
    view = recover_original(g)
    assert len(view.vertices) == 5
    assert len(view.edges) == 10
    assert sorted(view.degrees.values()) == [4] * 5
    # true-vertex degrees agree between the drawing and the recovery
    assert all(view.degree(v) == g.embedding.degree(v) for v in view.vertices)


def test_coincident_recovered_edges_raise():
    g = encircled_gadget()
    with pytest.raises(RecoveredMultiEdge):
        recover_original(g)
    assert RECOVERED_MULTI_EDGE in validate(g).kinds()


def test_crossing_parallel_to_direct_edge_is_a_multi_edge():
    # vertex 2 is the crossing of edges 0-1 and 3-4, but 0-1 also exists
    rot = {0: [1, 2], 1: [2, 0], 2: [0, 3, 1, 4], 3: [2], 4: [2]}
    g = build_drawing(rot, {2})
    assert RECOVERED_MULTI_EDGE in validate(g).kinds()
    with pytest.raises(RecoveredMultiEdge):
        recover_original(g)


def test_false_chain_straightening_to_a_loop():
    # crossing 3 straightens along 0-3-4-0; 3 and 4 are adjacent crossings
    rot = {0: [3, 4], 1: [3], 2: [3], 3: [0, 1, 4, 2], 4: [3, 5, 0, 6], 5: [4], 6: [4]}
    g = build_drawing(rot, {3, 4})
    kinds = validate(g).kinds()
    assert ADJACENT_FALSE in kinds
    assert RECOVERED_LOOP in kinds
    with pytest.raises(RecoveredLoop):
        recover_original(g)


def test_crossing_neighborhoods_on_k5():
    g = catalog("k5-one-crossing")
    hoods = crossing_neighborhoods(g)
    assert len(hoods) == 1
    hood = hoods[0]
    assert hood.false_vertex == 5
    assert hood.endpoints[0] == min(hood.endpoints)
    assert hood.crossing_pairs() == frozenset({frozenset({0, 2}), frozenset({1, 3})})
    assert all(0 <= f < g.embedding.face_count() for f in hood.faces)
    # each listed face joins consecutive endpoints
    for i in range(4):
        tails = set(g.embedding.face_tails(hood.faces[i]))
        assert {hood.false_vertex, hood.endpoints[i], hood.endpoints[(i + 1) % 4]} <= tails


def test_plane_drawing_has_no_neighborhoods():
    assert crossing_neighborhoods(build_drawing(K4)) == []


def test_cube_plus_diagonals_has_six_neighborhoods():
    g = catalog("cube-plus-diagonals")
    hoods = crossing_neighborhoods(g)
    assert len(hoods) == 6
    pairs = {p for h in hoods for p in h.crossing_pairs()}
    assert len(pairs) == 12  # two fresh diagonals per cube face


def test_edge_count_identity_under_recovery():
    for name, g in [
        ("k5", catalog("k5-one-crossing")),
        ("k6", catalog("k6-three-crossings")),
        ("cube+d", catalog("cube-plus-diagonals")),
    ]:
        view = recover_original(g)
        assert len(view.edges) == g.embedding.edge_count() - 2 * len(g.false_vertices), name


def test_diagnostics_clean_on_catalog():
    for name in ("k4", "cube", "icosahedron", "k5-one-crossing", "k6-three-crossings"):
        assert drawing_diagnostics(catalog(name)).ok, name


def test_encircled_four_vertex_flagged():
    report = drawing_diagnostics(encircled_gadget())
    assert ENCIRCLED_4_VERTEX in report.kinds()


def test_squeezed_three_vertex_flagged():
    report = drawing_diagnostics(squeezed_gadget())
    assert report.kinds() == {SQUEEZED_3_VERTEX}


def test_crossing_edge_on_two_triangles_flagged():
    g = doubly_triangular_gadget()
    assert validate(g).ok  # valid, just not crossing-minimal
    report = drawing_diagnostics(g)
    assert CROSSING_EDGE_ON_TWO_TRIANGLES in report.kinds()


def test_neighborhood_invariant_under_rotation_of_stored_lists():
    g = catalog("k6-three-crossings")
    base = {h.false_vertex: h.crossing_pairs() for h in crossing_neighborhoods(g)}
    rot = {v: list(r) for v, r in g.embedding.rotation.rotation.items()}
    for v in g.false_vertices:  # rotating the stored list keeps the embedding
        rot[v] = rot[v][2:] + rot[v][:2]
    g2 = build_drawing(rot, g.false_vertices)
    assert {h.false_vertex: h.crossing_pairs() for h in crossing_neighborhoods(g2)} == base


@given(st.integers(0, 10_000))
@settings(max_examples=30, deadline=None)
def test_recovery_degree_identity_on_random_instances(seed):
    g = random_oneplane(GeneratorParams(seed, 4 + seed % 20, (seed % 3) / 4))
    view = recover_original(g)
    for v in view.vertices:
        assert view.degree(v) == g.embedding.degree(v)


def test_crossing_gadget_validates():
    g = crossing_gadget(9, 9, 1, 1, "triangle")
    assert validate(g).ok
