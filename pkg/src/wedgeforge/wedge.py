"""The simplicial wedge construction and its weight-vector iterate.

Wedging a complex K at a vertex v replaces v by an edge {v1, v2}: the new
complex is ``{v1,v2} * link(v)  union  {{v1},{v2}} * (K minus v)``.  Iterating
over a weight vector J = (j_1, ..., j_m) produces K(J) on d(J) = sum(j_i)
vertices, labelled "i.t" for group i and copy t.  The result does not depend
on the order in which the elementary wedges are performed: the minimal
non-faces of K(J) are exactly the minimal non-faces of K with every member
blown up to its full group of copies.  That characterization doubles as an
independent construction (:func:`wedged_from_nonfaces`) used as an oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import Iterable, Sequence

from .complexes import (
    SimplicialComplex,
    _iter_bits,
    _maximalize,
    delete_vertex,
    faces,
    join,
    link,
    minimal_nonfaces,
)
from .errors import LengthMismatch, NonPositiveEntry, UnknownVertex

__all__ = [
    "WedgedComplex",
    "check_weights",
    "d_of",
    "wedge_label",
    "parse_wedge_label",
    "wedge_at",
    "wedge_J",
    "wedged_from_nonfaces",
    "detect_wedge",
]


def check_weights(J: Sequence[int]) -> tuple[int, ...]:
    J = tuple(J)
    if not J:
        raise LengthMismatch("weight vector must be nonempty")
    for j in J:
        if not isinstance(j, int) or j < 1:
            raise NonPositiveEntry(f"weight entries must be positive integers, got {j!r}")
    return J


def d_of(J: Sequence[int]) -> int:
    """Total weight d(J) = j_1 + ... + j_m.

    >>> d_of((2, 1, 3))
    6
    """
    return sum(check_weights(J))


def wedge_label(group: int, copy: int) -> str:
    return f"{group}.{copy}"


def parse_wedge_label(label: str) -> tuple[int, int]:
    group, _, copy = label.partition(".")
    return int(group), int(copy)


@dataclass(frozen=True)
class WedgedComplex:
    """K(J) together with its weight vector and base vertex count.

    Vertices are labelled "i.t" with 1 <= i <= base_vertex_count and
    1 <= t <= J[i-1], ordered by (i, t).
    """

    complex: SimplicialComplex
    J: tuple[int, ...]
    base_vertex_count: int

    @property
    def d(self) -> int:
        return sum(self.J)


def _canonical_vertex_order(labels: Iterable[str]) -> list[str]:
    return sorted(labels, key=parse_wedge_label)


def _relabel_base(K: SimplicialComplex) -> SimplicialComplex:
    """Rename vertex at position i (1-based) to "i.1"."""
    rename = {v: wedge_label(i + 1, 1) for i, v in enumerate(K.vertices)}
    verts = [rename[v] for v in K.vertices]
    return SimplicialComplex(verts, [{rename[v] for v in f} for f in K.facets])


def _elementary_wedge(
    C: SimplicialComplex, at: str, fresh: str
) -> SimplicialComplex:
    """One wedge step: vertex ``at`` splits into the edge {at, fresh}."""
    lk = link(C, [at])
    dl = delete_vertex(C, at)
    edge = SimplicialComplex([at, fresh], [[at, fresh]])
    two_points = SimplicialComplex([at, fresh], [[at], [fresh]])
    part1 = join(edge, lk)
    part2 = join(two_points, dl)
    verts = _canonical_vertex_order(set(part1.vertices) | set(part2.vertices))
    merged = SimplicialComplex(verts, list(part1.facets) + list(part2.facets))
    maximal = _maximalize(merged.facet_masks)
    return SimplicialComplex(verts, [merged.labels_of(m) for m in maximal])


def wedge_at(K: SimplicialComplex, v: str) -> WedgedComplex:
    """Wedge the base complex at one vertex.

    >>> from .complexes import validate_complex
    >>> K = validate_complex([["1"], ["2"]])
    >>> sorted(sorted(f) for f in wedge_at(K, "1").complex.facets)
    [['1.1', '1.2'], ['1.1', '2.1'], ['1.2', '2.1']]
    """
    if v not in K.vertices:
        raise UnknownVertex(f"vertex {v!r} not in complex")
    i = K.vertices.index(v) + 1
    J = tuple(2 if k == i else 1 for k in range(1, len(K.vertices) + 1))
    base = _relabel_base(K)
    wedged = _elementary_wedge(base, wedge_label(i, 1), wedge_label(i, 2))
    return WedgedComplex(wedged, J, len(K.vertices))


def wedge_J(
    K: SimplicialComplex,
    J: Sequence[int],
    *,
    order: Sequence[int] | None = None,
    rng: Random | None = None,
) -> WedgedComplex:
    """Iterated wedge K(J).

    By default groups are processed in increasing index and each elementary
    wedge happens at the first copy of its group; ``order`` (a sequence of
    group indices, group i appearing j_i - 1 times) and ``rng`` (random copy
    choice within the group) exist so tests can confirm the result is
    order-independent.

    >>> from .complexes import validate_complex
    >>> K = validate_complex([["1"], ["2"]])
    >>> W = wedge_J(K, (2, 1))
    >>> W.d, W.complex.dim
    (3, 1)
    """
    J = check_weights(J)
    m = len(K.vertices)
    if len(J) != m:
        raise LengthMismatch(f"weight vector has {len(J)} entries for {m} vertices")
    if order is None:
        order = [i for i in range(1, m + 1) for _ in range(J[i - 1] - 1)]
    else:
        order = list(order)
        needed = {i: J[i - 1] - 1 for i in range(1, m + 1)}
        got: dict[int, int] = {}
        for i in order:
            got[i] = got.get(i, 0) + 1
        if got != {i: c for i, c in needed.items() if c}:
            raise LengthMismatch("wedge order does not match the weight vector")

    C = _relabel_base(K)
    copies = [1] * (m + 1)  # copies[i] = number of copies of group i so far
    for i in order:
        if rng is None:
            t = 1
        else:
            t = rng.randint(1, copies[i])
        fresh = wedge_label(i, copies[i] + 1)
        C = _elementary_wedge(C, wedge_label(i, t), fresh)
        copies[i] += 1
    return WedgedComplex(C, J, m)


def _minimal_hitting_sets(sets: Sequence[int]) -> list[int]:
    """All inclusion-minimal bitmasks intersecting every given mask."""
    results: set[int] = set()

    def descend(hit: int, remaining: list[int]) -> None:
        rem = [s for s in remaining if not s & hit]
        if not rem:
            results.add(hit)
            return
        for v in _iter_bits(rem[0]):
            descend(hit | (1 << v), rem)

    descend(0, list(sets))
    ordered = sorted(results, key=lambda h: (h.bit_count(), h))
    minimal: list[int] = []
    for h in ordered:
        if not any(h | k == h for k in minimal):
            minimal.append(h)
    return minimal


def wedged_from_nonfaces(K: SimplicialComplex, J: Sequence[int]) -> WedgedComplex:
    """Build K(J) directly from the blown-up minimal non-faces of K.

    A subset of the d(J) vertices is a face iff it contains no full blow-up
    of a minimal non-face of K; facets are the complements of the minimal
    hitting sets of those blow-ups.  Independent of the iterated construction.
    """
    J = check_weights(J)
    m = len(K.vertices)
    if len(J) != m:
        raise LengthMismatch(f"weight vector has {len(J)} entries for {m} vertices")
    labels = [
        wedge_label(i, t) for i in range(1, m + 1) for t in range(1, J[i - 1] + 1)
    ]
    index = {lab: p for p, lab in enumerate(labels)}
    group_mask = [0] * (m + 1)
    for i in range(1, m + 1):
        gm = 0
        for t in range(1, J[i - 1] + 1):
            gm |= 1 << index[wedge_label(i, t)]
        group_mask[i] = gm

    blowups = []
    for nf in minimal_nonfaces(K):
        bm = 0
        for v in nf:
            bm |= group_mask[K.vertices.index(v) + 1]
        blowups.append(bm)

    full = (1 << len(labels)) - 1
    facet_masks = [full ^ h for h in _minimal_hitting_sets(blowups)]
    facets = [
        {labels[p] for p in _iter_bits(fm)} for fm in sorted(facet_masks)
    ]
    return WedgedComplex(SimplicialComplex(labels, facets), J, m)


def detect_wedge(K: SimplicialComplex) -> tuple[tuple[str, str], ...]:
    """Candidate vertex pairs exhibiting K as a wedge of a smaller complex.

    A pair qualifies when it spans an edge of K and swapping its two vertices
    is a simplicial automorphism.  The criterion is necessary, not sufficient,
    so the pairs are candidates only.

    >>> from .complexes import validate_complex
    >>> detect_wedge(validate_complex([["1"], ["2"]]))
    ()
    """
    facet_set = set(K.facets)
    out = []
    for edge in faces(K).get(1, ()):
        a, b = K.sorted_face(edge)

        def swap(v: str) -> str:
            return b if v == a else a if v == b else v

        if all(frozenset(swap(v) for v in f) in facet_set for f in K.facets):
            out.append((a, b))
    return tuple(sorted(out, key=lambda p: (K._pos[p[0]], K._pos[p[1]])))
