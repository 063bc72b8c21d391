"""Light-edge classification and the guarantee check.

An edge is light when the degrees of its endpoints, taken in the
recovered original graph, fall inside one of the bounded degree types of
the active profile. The default profile guarantees, for every valid
drawing of a simple graph with minimum degree 3, an edge of type
(3, <=23), (4, <=11), (5, <=9), (6, <=8) or (7, 7). The alternative
profile "thm11" carries the older minimum-degree-4 list, which starts at
(4, <=13) and has no degree-3 type.
"""

from __future__ import annotations

from dataclasses import dataclass

from .oneplanar import (
    AssociatedPlaneGraph,
    DiagnosticsReport,
    OriginalGraphView,
    ValidationReport,
    drawing_diagnostics,
    recover_original,
    validate,
)

# Per profile: smaller endpoint degree -> largest allowed partner degree.
PROFILES: dict[str, dict[int, int]] = {
    "thm12": {3: 23, 4: 11, 5: 9, 6: 8, 7: 7},
    "thm11": {4: 13, 5: 9, 6: 8, 7: 7},
}
DEFAULT_PROFILE = "thm12"


@dataclass(frozen=True)
class LightType:
    """A bounded degree type, tagged by its smaller endpoint degree."""

    tag: str
    profile: str

    @property
    def min_endpoint(self) -> int:
        return int(self.tag[1:])

    @property
    def max_partner(self) -> int:
        return PROFILES[self.profile][self.min_endpoint]


def classify_edge(a: int, b: int, profile: str = DEFAULT_PROFILE) -> LightType | None:
    """Light type of an edge with endpoint degrees a and b, or None.

    Order-insensitive. When several types would match, the one tagged by
    the smaller endpoint degree wins.
    """
    if a < 1 or b < 1:
        raise ValueError("degrees must be positive")
    lo, hi = min(a, b), max(a, b)
    bound = PROFILES[profile].get(lo)
    if bound is not None and hi <= bound:
        return LightType(f"T{lo}", profile)
    return None


@dataclass(frozen=True)
class LightEdgeWitness:
    edge: tuple[int, int]
    degrees: tuple[int, int]
    light_type: LightType


def find_light_edges(
    view: OriginalGraphView, profile: str = DEFAULT_PROFILE
) -> list[LightEdgeWitness]:
    """All light edges of the recovered graph, sorted by (type, degree, ids)."""
    found = []
    for a, b in view.edges:
        lt = classify_edge(view.degree(a), view.degree(b), profile)
        if lt is not None:
            found.append(LightEdgeWitness((a, b), (view.degree(a), view.degree(b)), lt))
    found.sort(key=lambda w: (w.light_type.tag, min(w.degrees), w.edge))
    return found


WITNESS_FOUND = "witness-found"
HYPOTHESIS_UNMET = "hypothesis-unmet"
COUNTEREXAMPLE_CANDIDATE = "counterexample-candidate"


@dataclass(frozen=True)
class GuaranteeVerdict:
    """Outcome of searching a valid drawing for its guaranteed light edge.

    `counterexample-candidate` never occurs for a valid drawing of a
    minimum-degree-3 graph; when it does appear, the validation and
    diagnostics reports are attached so the input (or the engine) can be
    debugged.
    """

    status: str
    min_degree: int
    witness: LightEdgeWitness | None = None
    validation: ValidationReport | None = None
    diagnostics: DiagnosticsReport | None = None


def check_light_edge_guarantee(
    g: AssociatedPlaneGraph, profile: str = DEFAULT_PROFILE
) -> GuaranteeVerdict:
    """Search for a guaranteed light edge in a valid drawing.

    Requires minimum degree 3 in the recovered graph (4 under "thm11");
    anything lower is reported as hypothesis-unmet rather than searched.
    """
    view = recover_original(g)
    needed = min(PROFILES[profile])
    if view.min_degree() < needed:
        return GuaranteeVerdict(status=HYPOTHESIS_UNMET, min_degree=view.min_degree())
    witnesses = find_light_edges(view, profile)
    if witnesses:
        return GuaranteeVerdict(
            status=WITNESS_FOUND, min_degree=view.min_degree(), witness=witnesses[0]
        )
    return GuaranteeVerdict(
        status=COUNTEREXAMPLE_CANDIDATE,
        min_degree=view.min_degree(),
        validation=validate(g),
        diagnostics=drawing_diagnostics(g),
    )
