"""Rotation systems and the sphere embeddings they induce.

A rotation system records, for every vertex, the cyclic order of its
neighbors. Tracing directed edges through these rotations recovers the
faces: the successor of the directed edge (u, v) is (v, w), where w
follows u in the rotation at v. The walks so obtained partition the set
of directed edges, and the system describes a sphere embedding exactly
when V - E + F = 2. Anything else is rejected.

Face indexing is deterministic: walks are discovered and anchored at
their lexicographically smallest directed edge, so rebuilding from equal
rotations always yields identical face lists.
"""

from __future__ import annotations

from dataclasses import dataclass, field

HalfEdge = tuple[int, int]


class MalformedRotation(ValueError):
    """The rotation table is not a simple, symmetric neighbor structure."""


class Disconnected(ValueError):
    """The underlying graph has more than one component."""


class NotPlane(ValueError):
    """The rotation system embeds in a surface of positive genus."""


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic counterclockwise neighbor order, one tuple per vertex."""

    rotation: dict[int, tuple[int, ...]]

    @classmethod
    def from_mapping(cls, mapping: dict[int, list[int] | tuple[int, ...]]) -> RotationSystem:
        return cls({v: tuple(nbrs) for v, nbrs in mapping.items()})

    @property
    def vertices(self) -> list[int]:
        return sorted(self.rotation)

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def edge_count(self) -> int:
        return sum(len(r) for r in self.rotation.values()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return sorted({(min(u, v), max(u, v)) for u, r in self.rotation.items() for v in r})

    def successor(self, v: int, prev: int) -> int:
        """Neighbor that follows `prev` in the cyclic order at v."""
        r = self.rotation[v]
        return r[(r.index(prev) + 1) % len(r)]


@dataclass(frozen=True)
class PlaneEmbedding:
    """A rotation system together with its traced faces.

    Each face is a closed walk of directed edges; `face_of` maps every
    directed edge to the index of the unique face walk containing it.
    Boundary walks carry multiplicity: a bridge contributes both of its
    directions to the same face, and a cut vertex may appear several
    times on one walk.
    """

    rotation: RotationSystem
    faces: tuple[tuple[HalfEdge, ...], ...]
    face_of: dict[HalfEdge, int] = field(repr=False)

    @property
    def vertices(self) -> list[int]:
        return self.rotation.vertices

    def degree(self, v: int) -> int:
        return self.rotation.degree(v)

    def vertex_count(self) -> int:
        return len(self.rotation.rotation)

    def edge_count(self) -> int:
        return self.rotation.edge_count()

    def face_count(self) -> int:
        return len(self.faces)

    def face_degree(self, i: int) -> int:
        return len(self.faces[i])

    def face_tails(self, i: int) -> tuple[int, ...]:
        """Vertices along face i, with multiplicity, in walk order."""
        return tuple(t for t, _ in self.faces[i])

    def corner_face(self, v: int, i: int) -> int:
        """Face at the corner of v between its i-th and (i+1)-th neighbors."""
        r = self.rotation.rotation[v]
        return self.face_of[(v, r[(i + 1) % len(r)])]

    def corner_faces(self, v: int) -> tuple[int, ...]:
        """Faces around v in rotation order, one per corner, with multiplicity."""
        return tuple(self.corner_face(v, i) for i in range(self.degree(v)))


def _check_rotation(rot: RotationSystem) -> None:
    table = rot.rotation
    if not table:
        raise MalformedRotation("empty rotation system")
    for v, nbrs in table.items():
        seen: set[int] = set()
        for u in nbrs:
            if u == v:
                raise MalformedRotation(f"loop at vertex {v}")
            if u not in table:
                raise MalformedRotation(f"vertex {v} lists unknown neighbor {u}")
            if u in seen:
                raise MalformedRotation(f"vertex {v} lists neighbor {u} twice")
            seen.add(u)
        for u in nbrs:
            if v not in table[u]:
                raise MalformedRotation(f"edge {v}-{u} is not symmetric")
    if rot.edge_count() == 0:
        raise MalformedRotation("rotation system has no edges")


def _check_connected(rot: RotationSystem) -> None:
    table = rot.rotation
    start = next(iter(table))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in table[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    if len(seen) != len(table):
        raise Disconnected(f"{len(table) - len(seen)} vertices unreachable from {start}")


def build_embedding(rot: RotationSystem) -> PlaneEmbedding:
    """Trace the faces of a rotation system and verify it is a sphere embedding.

    Raises MalformedRotation for asymmetric, looped, or duplicated
    adjacencies, Disconnected for multi-component input, and NotPlane
    when the traced faces violate Euler's identity V - E + F = 2.
    """
    _check_rotation(rot)
    _check_connected(rot)

    half_edges = sorted((u, v) for u, r in rot.rotation.items() for v in r)
    face_of: dict[HalfEdge, int] = {}
    faces: list[tuple[HalfEdge, ...]] = []
    for start in half_edges:
        if start in face_of:
            continue
        walk: list[HalfEdge] = []
        cur = start
        while True:
            face_of[cur] = len(faces)
            walk.append(cur)
            tail, head = cur
            cur = (head, rot.successor(head, tail))
            if cur == start:
                break
        faces.append(tuple(walk))

    emb = PlaneEmbedding(rotation=rot, faces=tuple(faces), face_of=face_of)
    if euler_characteristic(emb) != 2:
        raise NotPlane(
            f"V - E + F = {euler_characteristic(emb)}, expected 2 "
            f"(V={emb.vertex_count()}, E={emb.edge_count()}, F={emb.face_count()})"
        )
    return emb


def euler_characteristic(emb: PlaneEmbedding) -> int:
    return emb.vertex_count() - emb.edge_count() + emb.face_count()
