"""Planarized 1-plane drawings.

The input model is the planarized form of a drawing in which every edge
is crossed at most once: each crossing point is replaced by a marked
degree-4 vertex (a "false" vertex), and the result is an ordinary plane
graph. This module validates such drawings, recovers the original
abstract graph by straightening the crossing pairs back out, exposes the
local neighborhood of every crossing, and flags structural patterns that
cannot occur in a crossing-minimal drawing.

Straightening works on the rotation at a false vertex: its four
neighbors pair up opposite positions, so a crossing with rotation
(a, b, c, d) stands for the two original edges a-c and b-d. Recovery
follows each such segment through any further false vertices it meets,
defensively, even though adjacent false vertices are themselves a
validation violation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .embedding import PlaneEmbedding, RotationSystem, build_embedding


class RecoveredLoop(ValueError):
    """Straightening a crossing produced an edge from a vertex to itself."""


class RecoveredMultiEdge(ValueError):
    """Straightening produced two parallel copies of the same edge."""


@dataclass(frozen=True)
class AssociatedPlaneGraph:
    """A plane embedding plus the set of vertices marking crossings."""

    embedding: PlaneEmbedding
    false_vertices: frozenset[int]

    @property
    def true_vertices(self) -> list[int]:
        return [v for v in self.embedding.vertices if v not in self.false_vertices]

    def is_false(self, v: int) -> bool:
        return v in self.false_vertices


def build_drawing(
    rotation: RotationSystem | dict[int, list[int] | tuple[int, ...]],
    false_vertices: set[int] | frozenset[int] = frozenset(),
) -> AssociatedPlaneGraph:
    """Build and embed a planarized drawing from a rotation table."""
    rot = rotation if isinstance(rotation, RotationSystem) else RotationSystem.from_mapping(rotation)
    emb = build_embedding(rot)
    marks = frozenset(false_vertices)
    unknown = marks - set(rot.rotation)
    if unknown:
        raise ValueError(f"false-vertex marks name unknown vertices: {sorted(unknown)}")
    return AssociatedPlaneGraph(embedding=emb, false_vertices=marks)


@dataclass(frozen=True)
class Violation:
    kind: str
    members: tuple[int, ...]
    detail: str

    def __str__(self) -> str:
        return f"{self.kind} {list(self.members)}: {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}


# Violation kinds produced by validate().
FALSE_DEGREE = "false-vertex-degree"
ADJACENT_FALSE = "adjacent-false-vertices"
FALSE_CYCLE = "false-vertex-cycle"
RECOVERED_LOOP = "recovered-loop"
RECOVERED_MULTI_EDGE = "recovered-multi-edge"


def _follow_segment(g: AssociatedPlaneGraph, start: int, toward: int) -> tuple[int, ...] | None:
    """Walk straight through false vertices from `start` in direction `toward`.

    Returns the vertex path ending at the first true vertex, or None if
    the walk cycles through false vertices without reaching one.
    """
    rot = g.embedding.rotation.rotation
    path = [start, toward]
    prev, cur = start, toward
    budget = len(rot) + 1
    while g.is_false(cur):
        if len(rot[cur]) != 4:
            raise ValueError(f"false vertex {cur} has degree {len(rot[cur])}, not 4")
        budget -= 1
        if budget == 0:
            return None
        r = rot[cur]
        nxt = r[(r.index(prev) + 2) % 4]
        path.append(nxt)
        prev, cur = cur, nxt
    return tuple(path)


def _original_edge_instances(
    g: AssociatedPlaneGraph,
) -> tuple[list[tuple[int, int]], list[Violation]]:
    """Every original-edge instance, one per direct edge or crossing segment.

    Duplicated endpoint pairs in the returned list are multi-edges of the
    recovered graph; pairs with equal endpoints are loops. Segment walks
    that cycle through false vertices are reported as violations and
    produce no instance.
    """
    rot = g.embedding.rotation.rotation
    problems: list[Violation] = []

    instances: list[tuple[int, int]] = [
        (u, v)
        for u in sorted(rot)
        if not g.is_false(u)
        for v in rot[u]
        if u < v and not g.is_false(v)
    ]

    seen_paths: set[tuple[int, ...]] = set()
    for f in sorted(g.false_vertices):
        if len(rot[f]) != 4:
            continue  # reported separately by validate()
        for axis in (0, 1):
            half_a = _follow_segment(g, f, rot[f][axis])
            half_b = _follow_segment(g, f, rot[f][axis + 2])
            if half_a is None or half_b is None:
                problems.append(
                    Violation(FALSE_CYCLE, (f,), "crossing segment cycles through false vertices")
                )
                continue
            path = tuple(reversed(half_a)) + half_b[1:]
            key = min(path, path[::-1])
            if key in seen_paths:
                continue  # same segment discovered from another false vertex on it
            seen_paths.add(key)
            instances.append((path[0], path[-1]))
    return instances, problems


def validate(g: AssociatedPlaneGraph) -> ValidationReport:
    """Check the crossing structure; violations are reported, never raised.

    An empty report means: every false vertex has degree 4, no two false
    vertices are adjacent, and the recovered original graph is simple.
    """
    rot = g.embedding.rotation.rotation
    violations: list[Violation] = []

    for f in sorted(g.false_vertices):
        d = len(rot[f])
        if d != 4:
            violations.append(Violation(FALSE_DEGREE, (f,), f"degree {d}, expected 4"))

    for f in sorted(g.false_vertices):
        for u in rot[f]:
            if g.is_false(u) and f < u:
                violations.append(Violation(ADJACENT_FALSE, (f, u), "false vertices are adjacent"))

    instances, problems = _original_edge_instances(g)
    violations.extend(problems)
    seen: set[tuple[int, int]] = set()
    for a, b in instances:
        if a == b:
            violations.append(Violation(RECOVERED_LOOP, (a,), "crossing straightens to a loop"))
            continue
        key = (min(a, b), max(a, b))
        if key in seen:
            violations.append(Violation(RECOVERED_MULTI_EDGE, key, "recovered edge appears twice"))
        seen.add(key)

    return ValidationReport(tuple(violations))


@dataclass(frozen=True)
class OriginalGraphView:
    """The abstract graph obtained by straightening all crossings."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    degrees: dict[int, int]

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def min_degree(self) -> int:
        return min(self.degrees.values())

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in set(self.edges)


def recover_original(g: AssociatedPlaneGraph) -> OriginalGraphView:
    """Undo the planarization, returning the original simple graph.

    Raises RecoveredLoop or RecoveredMultiEdge when straightening breaks
    simplicity, which signals an invalid drawing.
    """
    instances, problems = _original_edge_instances(g)
    if problems:
        raise RecoveredLoop(str(problems[0]))
    edges: set[tuple[int, int]] = set()
    for a, b in instances:
        if a == b:
            raise RecoveredLoop(f"crossing straightens to a loop at vertex {a}")
        key = (min(a, b), max(a, b))
        if key in edges:
            raise RecoveredMultiEdge(f"recovered edge {key} appears twice")
        edges.add(key)

    vertices = tuple(g.true_vertices)
    degrees = {v: 0 for v in vertices}
    for a, b in edges:
        degrees[a] += 1
        degrees[b] += 1
    edge_set = frozenset(edges)
    return OriginalGraphView(vertices=vertices, edges=tuple(sorted(edge_set)), degrees=degrees)


@dataclass(frozen=True)
class CrossingNeighborhood:
    """Local labels around one crossing.

    `endpoints` lists the four neighbors in rotation order starting at
    the lowest id, so positions 0/2 and 1/3 are the two original edges.
    `faces[i]` is the face at the corner between endpoints i and i+1.
    The starting label is only a representative: consumers must not
    depend on which rotation or reflection of the labels was chosen.
    """

    false_vertex: int
    endpoints: tuple[int, int, int, int]
    faces: tuple[int, int, int, int]

    def crossing_pairs(self) -> frozenset[frozenset[int]]:
        e = self.endpoints
        return frozenset({frozenset({e[0], e[2]}), frozenset({e[1], e[3]})})


def crossing_neighborhoods(g: AssociatedPlaneGraph) -> list[CrossingNeighborhood]:
    """One neighborhood per false vertex, in vertex order."""
    emb = g.embedding
    out: list[CrossingNeighborhood] = []
    for f in sorted(g.false_vertices):
        r = emb.rotation.rotation[f]
        if len(r) != 4:
            raise ValueError(f"false vertex {f} has degree {len(r)}, not 4")
        k = r.index(min(r))
        endpoints = tuple(r[(k + i) % 4] for i in range(4))
        faces = tuple(emb.face_of[(f, endpoints[(i + 1) % 4])] for i in range(4))
        out.append(CrossingNeighborhood(f, endpoints, faces))  # type: ignore[arg-type]
    return out


@dataclass(frozen=True)
class DiagnosticFlag:
    kind: str
    members: tuple[int, ...]
    detail: str

    def __str__(self) -> str:
        return f"{self.kind} {list(self.members)}: {self.detail}"


@dataclass(frozen=True)
class DiagnosticsReport:
    flags: tuple[DiagnosticFlag, ...]

    @property
    def ok(self) -> bool:
        return not self.flags

    def kinds(self) -> set[str]:
        return {f.kind for f in self.flags}


# Flag kinds produced by drawing_diagnostics(). Each names a local
# pattern that a crossing-minimal simple drawing cannot contain.
SQUEEZED_3_VERTEX = "squeezed-3-vertex"
CROSSING_EDGE_ON_TWO_TRIANGLES = "crossing-edge-on-two-triangles"
ENCIRCLED_4_VERTEX = "encircled-4-vertex"


def _is_false_triangle(g: AssociatedPlaneGraph, face: int) -> bool:
    emb = g.embedding
    return emb.face_degree(face) == 3 and any(g.is_false(t) for t in emb.face_tails(face))


def drawing_diagnostics(g: AssociatedPlaneGraph) -> DiagnosticsReport:
    """Flag local patterns impossible in crossing-minimal drawings.

    A nonempty report does not make the input unusable; it signals that
    the drawing is not crossing-minimal or not a drawing of a simple
    graph at all. Three patterns are checked:

    - a 3-vertex on two or more triangles, with two or more false
      neighbors, but no incident face of degree 5 or more;
    - an edge from a false vertex to a 3-vertex lying on two triangles;
    - a true 4-vertex all four of whose corners are triangles containing
      a false vertex.
    """
    emb = g.embedding
    rot = emb.rotation.rotation
    flags: list[DiagnosticFlag] = []

    for v in emb.vertices:
        d = emb.degree(v)
        corner_degs = [emb.face_degree(f) for f in emb.corner_faces(v)]

        if d == 3 and not g.is_false(v):
            triangles = sum(1 for fd in corner_degs if fd == 3)
            false_nbrs = sum(1 for u in rot[v] if g.is_false(u))
            if triangles >= 2 and false_nbrs >= 2 and not any(fd >= 5 for fd in corner_degs):
                flags.append(
                    DiagnosticFlag(
                        SQUEEZED_3_VERTEX,
                        (v,),
                        f"{triangles} triangles, {false_nbrs} false neighbors, no 5+-face",
                    )
                )

        if d == 4 and not g.is_false(v):
            if all(fd == 3 for fd in corner_degs) and all(
                _is_false_triangle(g, f) for f in emb.corner_faces(v)
            ):
                flags.append(
                    DiagnosticFlag(ENCIRCLED_4_VERTEX, (v,), "four false triangles around a 4-vertex")
                )

    for u in sorted(g.false_vertices):
        for v in rot[u]:
            if g.is_false(v) or emb.degree(v) != 3:
                continue
            side_a = emb.face_of[(u, v)]
            side_b = emb.face_of[(v, u)]
            if emb.face_degree(side_a) == 3 and emb.face_degree(side_b) == 3:
                flags.append(
                    DiagnosticFlag(
                        CROSSING_EDGE_ON_TWO_TRIANGLES,
                        (u, v),
                        "crossing edge to a 3-vertex lies on two triangles",
                    )
                )

    return DiagnosticsReport(tuple(flags))
