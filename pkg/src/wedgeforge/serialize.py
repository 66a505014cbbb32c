"""JSON schemas for complexes and matrices, plus canonical encoding.

Complexes: ``{"vertices": ["1", "2"], "facets": [["1"], ["2"]]}`` with string
labels; wedge copies use dotted labels like "3.2".  Matrices:
``{"rows": n, "cols": m, "entries": [["-1", "1"], ...]}`` with entries as
decimal strings so arbitrary precision survives any JSON reader.  All output
goes through :func:`canonical_dumps` (sorted keys, fixed indentation) so runs
are byte-identical.
"""

from __future__ import annotations

import json
from typing import Any

from .complexes import SimplicialComplex, validate_complex
from .errors import ParseError
from .intlin import IntMatrix

__all__ = [
    "complex_to_obj",
    "complex_from_obj",
    "matrix_to_obj",
    "matrix_from_obj",
    "canonical_dumps",
    "load_json",
]


def complex_to_obj(K: SimplicialComplex) -> dict[str, Any]:
    return {
        "vertices": list(K.vertices),
        "facets": [list(K.sorted_face(f)) for f in K.facets],
    }


def complex_from_obj(obj: Any) -> SimplicialComplex:
    if not isinstance(obj, dict) or "facets" not in obj:
        raise ParseError("complex JSON must be an object with a 'facets' key")
    facets = obj["facets"]
    vertices = obj.get("vertices")
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise ParseError("'facets' must be a list of lists of labels")
    labels = [[str(v) for v in f] for f in facets]
    verts = [str(v) for v in vertices] if vertices is not None else None
    return validate_complex(labels, verts)


def matrix_to_obj(M: IntMatrix) -> dict[str, Any]:
    return {
        "rows": M.rows,
        "cols": M.cols,
        "entries": [[str(x) for x in row] for row in M.entries],
    }


def matrix_from_obj(obj: Any) -> IntMatrix:
    if not isinstance(obj, dict) or "entries" not in obj:
        raise ParseError("matrix JSON must be an object with an 'entries' key")
    try:
        entries = [[int(x) for x in row] for row in obj["entries"]]
    except (TypeError, ValueError) as exc:
        raise ParseError(f"matrix entries must be integers: {exc}") from None
    M = IntMatrix(entries)
    if "rows" in obj and obj["rows"] != M.rows:
        raise ParseError(f"declared rows {obj['rows']} != actual {M.rows}")
    if "cols" in obj and obj["cols"] != M.cols:
        raise ParseError(f"declared cols {obj['cols']} != actual {M.cols}")
    return M


def canonical_dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def load_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from None
