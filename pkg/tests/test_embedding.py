"""Face tracing, Euler acceptance, and rotation-system validation."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from naive_oracle import naive_faces
from oneplane.embedding import (
    Disconnected,
    MalformedRotation,
    NotPlane,
    RotationSystem,
    build_embedding,
    euler_characteristic,
)

TRIANGLE = {0: [1, 2], 1: [2, 0], 2: [0, 1]}
K4 = {0: [1, 3, 2], 1: [2, 3, 0], 2: [0, 3, 1], 3: [2, 0, 1]}
CUBE = {
    0: [1, 4, 3], 1: [2, 5, 0], 2: [3, 6, 1], 3: [0, 7, 2],
    4: [5, 7, 0], 5: [6, 4, 1], 6: [2, 7, 5], 7: [6, 3, 4],
}


def build(mapping):
    return build_embedding(RotationSystem.from_mapping(mapping))


def test_triangle_has_two_triangular_faces():
    emb = build(TRIANGLE)
    assert emb.face_count() == 2
    assert [emb.face_degree(i) for i in range(2)] == [3, 3]
    assert euler_characteristic(emb) == 2


def test_single_edge_is_one_face_of_degree_two():
    emb = build({0: [1], 1: [0]})
    assert emb.face_count() == 1
    assert emb.face_degree(0) == 2


def test_k4_faces_match_independent_tracer():
    emb = build(K4)
    assert emb.face_count() == 4
    assert sorted(emb.face_degree(i) for i in range(4)) == [3, 3, 3, 3]
    assert euler_characteristic(emb) == 2
    oracle = naive_faces({v: tuple(r) for v, r in K4.items()})
    assert [list(w) for w in emb.faces] == oracle


def test_cube_euler_and_faces():
    emb = build(CUBE)
    assert emb.vertex_count() - emb.edge_count() + emb.face_count() == 8 - 12 + 6
    assert sorted(emb.face_degree(i) for i in range(6)) == [4] * 6
    oracle = naive_faces({v: tuple(r) for v, r in CUBE.items()})
    assert [list(w) for w in emb.faces] == oracle


def test_face_walks_partition_half_edges():
    emb = build(K4)
    walked = [d for walk in emb.faces for d in walk]
    assert len(walked) == len(set(walked)) == 2 * emb.edge_count()
    assert sum(emb.face_degree(i) for i in range(emb.face_count())) == 2 * emb.edge_count()


def test_rebuild_is_deterministic():
    a = build(CUBE)
    b = build(CUBE)
    assert a.faces == b.faces
    assert a.face_of == b.face_of


def test_asymmetric_rotation_rejected():
    with pytest.raises(MalformedRotation):
        build({0: [1], 1: []})


def test_loop_rejected():
    with pytest.raises(MalformedRotation):
        build({0: [0, 1], 1: [0]})


def test_duplicate_neighbor_rejected():
    with pytest.raises(MalformedRotation):
        build({0: [1, 1], 1: [0, 0]})


def test_empty_and_edgeless_rejected():
    with pytest.raises(MalformedRotation):
        build({})
    with pytest.raises(MalformedRotation):
        build({0: []})


def test_disconnected_rejected():
    with pytest.raises(Disconnected):
        build({0: [1], 1: [0], 2: [3], 3: [2]})


def test_k5_rotation_is_not_plane():
    # K5 admits no sphere embedding, whatever the rotation
    k5 = {v: [u for u in range(5) if u != v] for v in range(5)}
    with pytest.raises(NotPlane):
        build(k5)


@st.composite
def rotation_systems(draw):
    """Connected simple graphs with shuffled rotations; most are not plane."""
    n = draw(st.integers(min_value=2, max_value=7))
    extra = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=12))
    adj = {v: set() for v in range(n)}
    for v in range(1, n):  # random spanning tree keeps it connected
        u = draw(st.integers(0, v - 1))
        adj[v].add(u)
        adj[u].add(v)
    for u, v in extra:
        if u != v:
            adj[u].add(v)
            adj[v].add(u)
    rotation = {}
    for v in range(n):
        order = sorted(adj[v])
        perm = draw(st.permutations(order))
        rotation[v] = list(perm)
    return rotation


@given(rotation_systems())
@settings(max_examples=120, deadline=None)
def test_tracing_invariants_on_random_rotations(rotation):
    try:
        emb = build(rotation)
    except NotPlane:
        return
    assert euler_characteristic(emb) == 2
    walked = [d for walk in emb.faces for d in walk]
    assert len(walked) == len(set(walked)) == 2 * emb.edge_count()
    again = build(rotation)
    assert again.faces == emb.faces
