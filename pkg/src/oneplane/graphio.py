"""On-disk formats: the graph JSON document and ledger line rendering.

A drawing is stored as a single JSON object:

    {
      "vertices": [{"id": 0, "false": false}, ...],
      "rotation": {"0": [1, 2, 3], ...}
    }

Vertex ids must be dense from 0. Rotation lists keep their stored
starting neighbor, so parse -> serialize -> parse is the identity and
serialization of a given drawing is byte-stable.
"""

from __future__ import annotations

import json
from pathlib import Path

from .oneplanar import AssociatedPlaneGraph, build_drawing


class GraphFormatError(ValueError):
    """Input does not parse as the graph JSON document.

    `byte_offset` locates the first offending byte; structural problems
    that have no single position report offset 0.
    """

    def __init__(self, message: str, byte_offset: int = 0):
        super().__init__(message)
        self.byte_offset = byte_offset


def _format_error(text: str, err: json.JSONDecodeError) -> GraphFormatError:
    offset = len(text[: err.pos].encode("utf-8"))
    return GraphFormatError(f"invalid JSON at byte {offset}: {err.msg}", offset)


def loads(text: str) -> AssociatedPlaneGraph:
    """Parse the graph JSON document and build the embedded drawing."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise _format_error(text, err) from None

    if not isinstance(doc, dict):
        raise GraphFormatError("top-level value must be an object")
    for key in ("vertices", "rotation"):
        if key not in doc:
            raise GraphFormatError(f"missing required field {key!r}")

    vertices = doc["vertices"]
    if not isinstance(vertices, list) or not vertices:
        raise GraphFormatError("'vertices' must be a non-empty list")
    false_vertices: set[int] = set()
    ids: set[int] = set()
    for entry in vertices:
        if not isinstance(entry, dict) or not isinstance(entry.get("id"), int) or entry["id"] < 0:
            raise GraphFormatError(f"vertex entry {entry!r} needs a non-negative integer 'id'")
        if not isinstance(entry.get("false"), bool):
            raise GraphFormatError(f"vertex {entry['id']} needs a boolean 'false' mark")
        if entry["id"] in ids:
            raise GraphFormatError(f"duplicate vertex id {entry['id']}")
        ids.add(entry["id"])
        if entry["false"]:
            false_vertices.add(entry["id"])
    if ids != set(range(len(ids))):
        raise GraphFormatError("vertex ids must be dense from 0")

    rotation_doc = doc["rotation"]
    if not isinstance(rotation_doc, dict):
        raise GraphFormatError("'rotation' must be an object keyed by vertex id")
    rotation: dict[int, tuple[int, ...]] = {}
    for key, nbrs in rotation_doc.items():
        try:
            v = int(key)
        except ValueError:
            raise GraphFormatError(f"rotation key {key!r} is not an integer") from None
        if v not in ids:
            raise GraphFormatError(f"rotation key {v} is not a declared vertex")
        if not isinstance(nbrs, list) or not all(isinstance(u, int) for u in nbrs):
            raise GraphFormatError(f"rotation of vertex {v} must be a list of integers")
        rotation[v] = tuple(nbrs)
    missing = ids - set(rotation)
    if missing:
        raise GraphFormatError(f"vertices without a rotation entry: {sorted(missing)}")

    return build_drawing(rotation, false_vertices)


def dumps(g: AssociatedPlaneGraph) -> str:
    """Serialize a drawing to its canonical JSON text."""
    rot = g.embedding.rotation.rotation
    doc = {
        "vertices": [{"id": v, "false": g.is_false(v)} for v in sorted(rot)],
        "rotation": {str(v): list(rot[v]) for v in sorted(rot)},
    }
    return json.dumps(doc, indent=2) + "\n"


def load(path: str | Path) -> AssociatedPlaneGraph:
    return loads(Path(path).read_text(encoding="utf-8"))


def save(g: AssociatedPlaneGraph, path: str | Path) -> None:
    Path(path).write_text(dumps(g), encoding="utf-8")
