"""Bundled example corpus: complexes, matrices, and named base pairs.

The corpus ships as package data so every CLI command and the acceptance
suite run out of the box.  ``wedgeforge corpus export`` writes the files to
disk for use as ordinary ``--complex`` / ``--lambda`` inputs, and those flags
also resolve bare corpus names directly.
"""

from __future__ import annotations

import json
from importlib import resources

from .charmaps import CharPair
from .complexes import SimplicialComplex
from .errors import ParseError
from .intlin import IntMatrix
from .serialize import complex_from_obj, matrix_from_obj

__all__ = [
    "COMPLEXES",
    "MATRICES",
    "BASE_PAIRS",
    "load_complex",
    "load_matrix",
    "load_pair",
    "resource_text",
]

COMPLEXES = ("two_points", "triangle", "square")

MATRICES = (
    "cp1",
    "cp2",
    "product",
    "hirzebruch_a0",
    "hirzebruch_a1",
    "hirzebruch_a2",
)

# Matrix name -> complex it is characteristic for.
BASE_PAIRS = {
    "cp1": "two_points",
    "cp2": "triangle",
    "product": "square",
    "hirzebruch_a0": "square",
    "hirzebruch_a1": "square",
    "hirzebruch_a2": "square",
}


def resource_text(name: str) -> str:
    ref = resources.files("wedgeforge.data") / f"{name}.json"
    if not ref.is_file():
        raise ParseError(f"no bundled corpus entry named {name!r}")
    return ref.read_text(encoding="utf-8")


def load_complex(name: str) -> SimplicialComplex:
    return complex_from_obj(json.loads(resource_text(name)))


def load_matrix(name: str) -> IntMatrix:
    return matrix_from_obj(json.loads(resource_text(name)))


def load_pair(matrix_name: str) -> CharPair:
    if matrix_name not in BASE_PAIRS:
        raise ParseError(f"no bundled base pair named {matrix_name!r}")
    return CharPair(
        K=load_complex(BASE_PAIRS[matrix_name]),
        lam=load_matrix(matrix_name),
    )
