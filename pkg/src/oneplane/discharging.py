"""The discharging engine: exact rational charges moved by local rules.

Every vertex and face of the planarized drawing starts with charge
(degree - 4); on a sphere embedding these sum to exactly -8. The engine
then applies a fixed table of local rules and records every movement as
a tagged transfer, so the whole run can be audited after the fact. All
arithmetic uses `fractions.Fraction`; conservation of the total is an
exact equality, never a tolerance.

Rules R1-R6 depend only on degrees and adjacency, so they are evaluated
simultaneously against the initial configuration (phase A). R7 and R8
then redistribute each face's remaining balance (phases B and C):

  R1  true 4-vertex:  1/6 to each incident 4-special face pivoted at it.
  R2  5-vertex:       3/10 to incident 5-special faces pivoted at it,
                      1/5 to its other incident 3-faces.
  R3  6-vertex:       7/18 and 1/3, same pattern as R2.
  R4  7-vertex:       1/2 to each incident false 3-face.
  R5  8+-vertex:      (d-4)/d to each incident face, once per incidence.
  R6  face-to-face and face-to-vertex transfers routed through a false
      vertex, described below.
  R7  every 4--face splits its remaining charge equally over its
      incident true 4--vertices (with boundary multiplicity), keeping
      the charge if there are none. The split happens whatever the sign
      of the balance.
  R8  every 5+-face first pays 2/3 to each incident 3-vertex, then
      splits its remaining charge equally over its incident true
      4-vertices, keeping it if there are none.

A false 3-face {v, p, q} with v false is k-special with pivot p when
p has degree k in {4, 5, 6}, q is adjacent in the original graph to the
far endpoint of p's crossing edge, and the far endpoint of q's crossing
edge has degree at most 11 / 9 / 8 for k = 4 / 5 / 6. Both true corners
of the face are tried as pivots, and R1-R3 pay once per pivot record.

R6 in detail. Around a false vertex v with rotation (n0, n1, n2, n3) the
original edges pair opposite neighbors. For each corner face f at v
between consecutive neighbors A, B, write a and b for the neighbors
opposite A and B, and m = min(deg(A), deg(B)). The sub-rule is chosen by
the band of m and fires at most once per (v, corner), covering both
orientations of the stated rule:

  R6.1  m >= 24: if deg(a) = deg(b) = 3, f sends 1/6 through v to each
        of the two adjacent corner faces and to a and b; if exactly one
        of them, say a, has degree 3 and the other at least 4, f sends
        1/3 through v to a and to the adjacent corner face beyond a.
  R6.2  12 <= m <= 23, some far endpoint of degree <= 6:
        3-face sender: 1/6 to both adjacent corner faces when both far
        endpoints have degree <= 6, else 1/3 to the face beyond the
        small one; 4+-face sender: 1/3 to both adjacent corner faces.
  R6.3  10 <= m <= 11: amounts 1/10, 1/5 and 3/10, same shape.
  R6.4  m = 9: amounts 1/18, 1/9 and 5/18, same shape.

A face only ever sends through a false vertex whose two neighbors on
that face both have degree at least 9 (a transitive false vertex); this
is forced by the m >= 9 requirement above.

Residual splits in R7/R8 may move a negative balance; those transfers
keep the face as their source and carry the signed per-recipient share.
Zero-amount transfers are never recorded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .oneplanar import AssociatedPlaneGraph, OriginalGraphView, recover_original

# An element of the charge ledger: ("v", vertex id) or ("f", face index).
Element = tuple[str, int]

RULES = ("R1", "R2", "R3", "R4", "R5", "R6.1", "R6.2", "R6.3", "R6.4", "R7", "R8")

SPECIAL_PARTNER_BOUND = {4: 11, 5: 9, 6: 8}

# R6 amounts per band: (3-face both far endpoints small, 3-face one far
# endpoint small, 4+-face sender).
_R6_BANDS = (
    ("R6.3", 10, 11, Fraction(1, 10), Fraction(1, 5), Fraction(3, 10)),
    ("R6.4", 9, 9, Fraction(1, 18), Fraction(1, 9), Fraction(5, 18)),
)


def vertex(v: int) -> Element:
    return ("v", v)


def face(i: int) -> Element:
    return ("f", i)


def element_label(el: Element) -> str:
    return f"{el[0]}{el[1]}"


@dataclass(frozen=True)
class Transfer:
    """One rule-tagged charge movement. R6 transfers name the false
    vertex they are routed through."""

    rule: str
    source: Element
    target: Element
    amount: Fraction
    via: int | None = None

    def ledger_line(self) -> str:
        via = element_label(vertex(self.via)) if self.via is not None else ""
        return (
            f"{self.rule};{element_label(self.source)};{element_label(self.target)};"
            f"{via};{self.amount.numerator}/{self.amount.denominator}"
        )


@dataclass(frozen=True)
class ChargeState:
    charges: dict[Element, Fraction]

    def of(self, el: Element) -> Fraction:
        return self.charges[el]

    def total(self) -> Fraction:
        return sum(self.charges.values(), Fraction(0))


def initial_charges(g: AssociatedPlaneGraph) -> ChargeState:
    """Charge degree - 4 on every vertex and face; the total is -8."""
    emb = g.embedding
    charges: dict[Element, Fraction] = {}
    for v in emb.vertices:
        charges[vertex(v)] = Fraction(emb.degree(v) - 4)
    for i in range(emb.face_count()):
        charges[face(i)] = Fraction(emb.face_degree(i) - 4)
    return ChargeState(charges)


@dataclass(frozen=True)
class SpecialFace:
    """A (false 3-face, pivot) pair satisfying the k-special pattern."""

    face: int
    pivot: int
    k: int
    partner: int
    far_endpoints: tuple[int, int]


def _crossing_corners(g: AssociatedPlaneGraph, v: int) -> list[tuple[int, int, int, int, int]]:
    """Per corner of false vertex v: (A, B, a, b, corner face index).

    A and B are rotation-consecutive neighbors; a and b are their
    opposite neighbors, the far endpoints of the two original edges.
    """
    emb = g.embedding
    r = emb.rotation.rotation[v]
    if len(r) != 4:
        raise ValueError(f"false vertex {v} has degree {len(r)}, not 4")
    out = []
    for i in range(4):
        a_near, b_near = r[i], r[(i + 1) % 4]
        a_far, b_far = r[(i + 2) % 4], r[(i + 3) % 4]
        out.append((a_near, b_near, a_far, b_far, emb.face_of[(v, b_near)]))
    return out


def find_special_faces(
    g: AssociatedPlaneGraph, original: OriginalGraphView | None = None
) -> list[SpecialFace]:
    """All (false 3-face, pivot) records, trying both true corners."""
    emb = g.embedding
    view = original if original is not None else recover_original(g)
    records = []
    for v in sorted(g.false_vertices):
        for near_a, near_b, far_a, far_b, f in _crossing_corners(g, v):
            if emb.face_degree(f) != 3:
                continue
            # both corner vertices are candidate pivots; the pivot's own
            # crossing edge ends at its opposite neighbor
            for pivot, partner, pivot_far, partner_far in (
                (near_a, near_b, far_a, far_b),
                (near_b, near_a, far_b, far_a),
            ):
                k = emb.degree(pivot)
                if k not in SPECIAL_PARTNER_BOUND or g.is_false(pivot):
                    continue
                if not view.has_edge(partner, pivot_far):
                    continue
                if emb.degree(partner_far) <= SPECIAL_PARTNER_BOUND[k]:
                    records.append(SpecialFace(f, pivot, k, partner, (pivot_far, partner_far)))
    records.sort(key=lambda s: (s.face, s.pivot))
    return records


def _face_corner_triples(emb, i: int) -> list[tuple[int, int, int]]:
    """(previous tail, vertex, next tail) for every position on face i."""
    walk = emb.faces[i]
    n = len(walk)
    return [(walk[j - 1][0], walk[j][0], walk[j][1]) for j in range(n)]


def find_transitive_false_vertices(g: AssociatedPlaneGraph) -> dict[int, tuple[int, ...]]:
    """Per face, the false vertices both of whose face-neighbors have
    degree at least 9. Only these may route R6 transfers off the face."""
    emb = g.embedding
    out: dict[int, tuple[int, ...]] = {}
    for i in range(emb.face_count()):
        found = [
            v
            for prev, v, nxt in _face_corner_triples(emb, i)
            if g.is_false(v) and min(emb.degree(prev), emb.degree(nxt)) >= 9
        ]
        if found:
            out[i] = tuple(dict.fromkeys(found))
    return out


def _special_pivot_keys(specials: list[SpecialFace]) -> set[tuple[int, int]]:
    return {(s.pivot, s.face) for s in specials}


def _corner_3faces(emb, v: int) -> list[int]:
    """Distinct 3-faces around v. A 3-face occupies exactly one corner of
    each of its vertices, so no dedup is needed for degree >= 3."""
    return [f for f in emb.corner_faces(v) if emb.face_degree(f) == 3]


def _phase_a(g: AssociatedPlaneGraph, specials: list[SpecialFace]) -> list[Transfer]:
    emb = g.embedding
    transfers: list[Transfer] = []
    pivot_keys = _special_pivot_keys(specials)

    for s in specials:
        if s.k == 4:
            transfers.append(Transfer("R1", vertex(s.pivot), face(s.face), Fraction(1, 6)))

    for v in emb.vertices:
        if g.is_false(v):
            continue
        d = emb.degree(v)
        if d == 5 or d == 6:
            rule = "R2" if d == 5 else "R3"
            special_amt = Fraction(3, 10) if d == 5 else Fraction(7, 18)
            plain_amt = Fraction(1, 5) if d == 5 else Fraction(1, 3)
            for f in _corner_3faces(emb, v):
                amt = special_amt if (v, f) in pivot_keys else plain_amt
                transfers.append(Transfer(rule, vertex(v), face(f), amt))
        elif d == 7:
            for f in _corner_3faces(emb, v):
                if any(g.is_false(t) for t in emb.face_tails(f)):
                    transfers.append(Transfer("R4", vertex(v), face(f), Fraction(1, 2)))
        elif d >= 8:
            amt = Fraction(d - 4, d)
            for f in emb.corner_faces(v):
                transfers.append(Transfer("R5", vertex(v), face(f), amt))

    for v in sorted(g.false_vertices):
        transfers.extend(_route_through_crossing(g, v))
    return transfers


def _route_through_crossing(g: AssociatedPlaneGraph, v: int) -> list[Transfer]:
    """R6 transfers for every sending corner of one false vertex."""
    emb = g.embedding
    deg = emb.degree
    corners = _crossing_corners(g, v)
    transfers: list[Transfer] = []
    for i, (near_a, near_b, far_a, far_b, f1) in enumerate(corners):
        m = min(deg(near_a), deg(near_b))
        if m < 9:
            continue
        src = face(f1)
        beyond_a = face(corners[(i + 1) % 4][4])  # corner face past far_a
        beyond_b = face(corners[(i - 1) % 4][4])  # corner face past far_b
        da, db = deg(far_a), deg(far_b)

        if m >= 24:
            if da == 3 and db == 3:
                for target in (beyond_a, beyond_b, vertex(far_a), vertex(far_b)):
                    transfers.append(Transfer("R6.1", src, target, Fraction(1, 6), via=v))
            elif da == 3:
                for target in (beyond_a, vertex(far_a)):
                    transfers.append(Transfer("R6.1", src, target, Fraction(1, 3), via=v))
            elif db == 3:
                for target in (beyond_b, vertex(far_b)):
                    transfers.append(Transfer("R6.1", src, target, Fraction(1, 3), via=v))
            continue

        if 12 <= m <= 23:
            rule, both_amt, single_amt, big_amt = "R6.2", Fraction(1, 6), Fraction(1, 3), Fraction(1, 3)
        elif 10 <= m <= 11:
            rule, both_amt, single_amt, big_amt = "R6.3", Fraction(1, 10), Fraction(1, 5), Fraction(3, 10)
        else:  # m == 9
            rule, both_amt, single_amt, big_amt = "R6.4", Fraction(1, 18), Fraction(1, 9), Fraction(5, 18)

        if da > 6 and db > 6:
            continue
        if emb.face_degree(f1) == 3:
            if da <= 6 and db <= 6:
                transfers.append(Transfer(rule, src, beyond_a, both_amt, via=v))
                transfers.append(Transfer(rule, src, beyond_b, both_amt, via=v))
            elif da <= 6:
                transfers.append(Transfer(rule, src, beyond_a, single_amt, via=v))
            else:
                transfers.append(Transfer(rule, src, beyond_b, single_amt, via=v))
        else:
            transfers.append(Transfer(rule, src, beyond_a, big_amt, via=v))
            transfers.append(Transfer(rule, src, beyond_b, big_amt, via=v))
    return transfers


def _apply(charges: dict[Element, Fraction], transfers: list[Transfer]) -> None:
    for t in transfers:
        charges[t.source] -= t.amount
        charges[t.target] += t.amount


def apply_discharging(g: AssociatedPlaneGraph) -> tuple[ChargeState, list[Transfer]]:
    """Run all rules and return the final state plus the full ledger."""
    emb = g.embedding
    charges = dict(initial_charges(g).charges)

    transfers = _phase_a(g, find_special_faces(g))
    _apply(charges, transfers)

    phase_b: list[Transfer] = []
    for i in range(emb.face_count()):
        if emb.face_degree(i) > 4:
            continue
        takers = [
            t for t in emb.face_tails(i) if not g.is_false(t) and emb.degree(t) <= 4
        ]
        balance = charges[face(i)]
        if not takers or balance == 0:
            continue
        share = balance / len(takers)
        phase_b.extend(Transfer("R7", face(i), vertex(t), share) for t in takers)
    _apply(charges, phase_b)
    transfers.extend(phase_b)

    phase_c: list[Transfer] = []
    for i in range(emb.face_count()):
        if emb.face_degree(i) < 5:
            continue
        tails = emb.face_tails(i)
        prepaid = [Transfer("R8", face(i), vertex(t), Fraction(2, 3)) for t in tails if emb.degree(t) == 3]
        takers = [t for t in tails if not g.is_false(t) and emb.degree(t) == 4]
        balance = charges[face(i)] - Fraction(2, 3) * len(prepaid)
        splits = (
            [Transfer("R8", face(i), vertex(t), balance / len(takers)) for t in takers]
            if takers and balance != 0
            else []
        )
        phase_c.extend(prepaid)
        phase_c.extend(splits)
    _apply(charges, phase_c)
    transfers.extend(phase_c)

    return ChargeState(charges), transfers


def _ledger_sort_key(t: Transfer):
    return (t.rule, t.source, t.target, -1 if t.via is None else t.via, t.amount)


def ledger_lines(transfers: list[Transfer]) -> list[str]:
    """Render a ledger in its deterministic export order."""
    return [t.ledger_line() for t in sorted(transfers, key=_ledger_sort_key)]
