"""Abstract simplicial complexes stored by their facet (maximal face) sets.

Vertices are opaque string labels kept in a fixed declared order.  Faces are
frozensets of labels at the API boundary and bitmasks over the vertex order
internally, which keeps face enumeration, minimal non-faces, links and
deletions exact and deterministic.

Two degenerate complexes are representable and distinguished: the *void*
complex (no faces at all, ``facets == ()``) and the *irrelevant* complex
(single face, the empty set, ``facets == (frozenset(),)``).  The irrelevant
complex is the unit of ``join`` and arises as the link of a facet; the void
complex is rejected by :func:`validate_complex`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable

from .errors import (
    DuplicateVertexLabel,
    EmptyVertexSet,
    FaceNotInComplex,
    NotPure,
    UnknownVertex,
    VertexLabelCollision,
)

__all__ = [
    "SimplicialComplex",
    "FHVectors",
    "PseudomanifoldReport",
    "label_key",
    "validate_complex",
    "faces",
    "f_vector",
    "minimal_nonfaces",
    "link",
    "join",
    "delete_vertex",
    "f_h_vectors",
    "pseudomanifold_check",
]

def label_key(label: str):
    """Sort key giving numeric labels their natural order.

    Dotted labels such as ``"3.2"`` sort componentwise, so wedge copies
    ``"1.1" < "1.2" < "2.1"`` and plain numerals ``"2" < "10"``.
    """
    key = []
    for part in label.split("."):
        if part.isdigit():
            key.append((0, int(part), ""))
        else:
            key.append((1, 0, part))
    return tuple(key)


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _maximalize(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-maximal elements of a set of bitmasks."""
    distinct = sorted(set(masks), key=lambda m: (-m.bit_count(), m))
    kept: list[int] = []
    for m in distinct:
        if not any(m | k == k for k in kept):
            kept.append(m)
    return tuple(kept)


class SimplicialComplex:
    """A simplicial complex given by vertex order and facet set.

    The constructor trusts its caller to pass inclusion-incomparable facets
    (it deduplicates but does not re-maximalize); use :func:`validate_complex`
    for raw input.
    """

    __slots__ = ("vertices", "facets", "_pos", "_facet_masks")

    def __init__(self, vertices: Iterable[str], facets: Iterable[Iterable[str]]):
        self.vertices: tuple[str, ...] = tuple(vertices)
        pos: dict[str, int] = {}
        for i, v in enumerate(self.vertices):
            if v in pos:
                raise DuplicateVertexLabel(f"vertex label {v!r} declared twice")
            pos[v] = i
        self._pos = pos
        masks = set()
        for f in facets:
            masks.add(self.mask_of(f))
        self._facet_masks: tuple[int, ...] = tuple(
            sorted(masks, key=self._mask_sort_key)
        )
        self.facets: tuple[frozenset[str], ...] = tuple(
            self.labels_of(m) for m in self._facet_masks
        )

    # -- low-level helpers -------------------------------------------------

    def _mask_sort_key(self, mask: int):
        return tuple(_iter_bits(mask))

    def mask_of(self, face: Iterable[str]) -> int:
        mask = 0
        for v in face:
            try:
                mask |= 1 << self._pos[v]
            except KeyError:
                raise UnknownVertex(f"vertex {v!r} not in complex") from None
        return mask

    def labels_of(self, mask: int) -> frozenset[str]:
        return frozenset(self.vertices[i] for i in _iter_bits(mask))

    def sorted_face(self, face: Iterable[str]) -> tuple[str, ...]:
        return tuple(sorted(face, key=lambda v: self._pos[v]))

    @property
    def facet_masks(self) -> tuple[int, ...]:
        return self._facet_masks

    # -- basic queries ------------------------------------------------------

    @property
    def dim(self) -> int:
        """Dimension: max facet size minus one; -1 for {emptyset}, -2 if void."""
        if not self._facet_masks:
            return -2
        return max(m.bit_count() for m in self._facet_masks) - 1

    @property
    def is_void(self) -> bool:
        return not self._facet_masks

    @property
    def is_irrelevant(self) -> bool:
        return self._facet_masks == (0,)

    def is_pure(self) -> bool:
        sizes = {m.bit_count() for m in self._facet_masks}
        return len(sizes) <= 1

    def is_face(self, face: Iterable[str]) -> bool:
        """True iff ``face`` is contained in some facet.

        >>> K = validate_complex([["1", "2"], ["2", "3"]])
        >>> K.is_face(["2"]) and K.is_face(["1", "2"]) and K.is_face([])
        True
        >>> K.is_face(["1", "3"])
        False
        """
        try:
            mask = self.mask_of(face)
        except UnknownVertex:
            return False
        return self._has_face_mask(mask)

    def _has_face_mask(self, mask: int) -> bool:
        return any(mask & ~fm == 0 for fm in self._facet_masks)

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.vertices == other.vertices and set(self.facets) == set(
            other.facets
        )

    def __hash__(self) -> int:
        return hash((self.vertices, frozenset(self.facets)))

    def __repr__(self) -> str:
        shown = [list(self.sorted_face(f)) for f in self.facets]
        return f"SimplicialComplex(vertices={list(self.vertices)}, facets={shown})"


def validate_complex(
    raw_facets: Iterable[Iterable[str]],
    vertices: Iterable[str] | None = None,
) -> SimplicialComplex:
    """Build a complex from raw facet input.

    Subsumed faces are dropped; the vertex set must be exactly the union of
    the facets.  If ``vertices`` is omitted the union is taken in natural
    label order.

    >>> [sorted(f) for f in validate_complex([["1", "2"], ["2"]]).facets]
    [['1', '2']]
    >>> validate_complex([["1"], ["2"]]).dim
    0
    """
    raw = [frozenset(f) for f in raw_facets]
    if not raw:
        raise EmptyVertexSet("no facets given (the void complex is rejected)")
    used = set().union(*raw)
    if vertices is None:
        order = sorted(used, key=label_key)
    else:
        order = list(vertices)
        declared = set(order)
        if len(declared) != len(order):
            raise DuplicateVertexLabel("duplicate label in declared vertex list")
        missing = declared - used
        if missing:
            raise EmptyVertexSet(
                f"vertices {sorted(missing)} appear in no facet"
            )
    probe = SimplicialComplex(order, raw)
    return SimplicialComplex(order, [probe.labels_of(m) for m in _maximalize(probe.facet_masks)])


def faces(K: SimplicialComplex) -> dict[int, tuple[frozenset[str], ...]]:
    """All faces of ``K`` grouped by dimension, the empty face included.

    >>> K = validate_complex([["1"], ["2"]])
    >>> {d: len(fs) for d, fs in faces(K).items()}
    {-1: 1, 0: 2}
    """
    seen: set[int] = set()
    for fm in K.facet_masks:
        sub = fm
        while True:
            seen.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & fm
    grouped: dict[int, list[int]] = {}
    for mask in seen:
        grouped.setdefault(mask.bit_count() - 1, []).append(mask)
    return {
        d: tuple(K.labels_of(m) for m in sorted(ms, key=K._mask_sort_key))
        for d, ms in sorted(grouped.items())
    }


def f_vector(K: SimplicialComplex) -> tuple[int, ...]:
    """Face counts ``(f_-1, f_0, ..., f_dim)``."""
    grouped = faces(K)
    if not grouped:
        return ()
    top = max(grouped)
    return tuple(len(grouped.get(d, ())) for d in range(-1, top + 1))


def minimal_nonfaces(K: SimplicialComplex) -> tuple[frozenset[str], ...]:
    """Vertex sets that are not faces although every proper subset is.

    Returned sorted lexicographically in vertex order.

    >>> K = validate_complex([["1", "2"], ["2", "3"], ["3", "4"], ["1", "4"]])
    >>> [sorted(f) for f in minimal_nonfaces(K)]
    [['1', '3'], ['2', '4']]
    """
    m = len(K.vertices)
    face_masks: set[int] = set()
    for fm in K.facet_masks:
        sub = fm
        while True:
            face_masks.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & fm
    found: set[int] = set()
    for f in face_masks:
        for v in range(m):
            bit = 1 << v
            if f & bit:
                continue
            cand = f | bit
            if cand in face_masks or cand in found:
                continue
            if all((cand ^ (1 << u)) in face_masks for u in _iter_bits(cand)):
                found.add(cand)
    ordered = sorted(found, key=K._mask_sort_key)
    return tuple(K.labels_of(m_) for m_ in ordered)


def link(K: SimplicialComplex, sigma: Iterable[str]) -> SimplicialComplex:
    """The link of a face: all tau with ``sigma | tau`` a face, disjoint from sigma.

    >>> K = validate_complex([["1", "2"], ["2", "3"], ["1", "3"]])
    >>> sorted(sorted(f) for f in link(K, ["1"]).facets)
    [['2'], ['3']]
    """
    smask = K.mask_of(sigma)
    if not K._has_face_mask(smask):
        raise FaceNotInComplex(f"{sorted(sigma)} is not a face")
    lf = {fm & ~smask for fm in K.facet_masks if fm & smask == smask}
    union = 0
    for m in lf:
        union |= m
    verts = [K.vertices[i] for i in range(len(K.vertices)) if union >> i & 1]
    return SimplicialComplex(verts, [K.labels_of(m) for m in lf])


def join(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join: facets are unions of facet pairs.

    The irrelevant complex is the unit; joining with the void complex gives
    the void complex.

    >>> pt1 = validate_complex([["a"]])
    >>> pt2 = validate_complex([["b"]])
    >>> [sorted(f) for f in join(pt1, pt2).facets]
    [['a', 'b']]
    """
    shared = set(K1.vertices) & set(K2.vertices)
    if shared:
        raise VertexLabelCollision(f"shared vertex labels {sorted(shared)}")
    verts = K1.vertices + K2.vertices
    new_facets = [f1 | f2 for f1 in K1.facets for f2 in K2.facets]
    return SimplicialComplex(verts, new_facets)


def delete_vertex(K: SimplicialComplex, v: str) -> SimplicialComplex:
    """Face deletion: all faces of ``K`` not containing ``v``, re-maximalized.

    >>> K = validate_complex([["1"], ["2"]])
    >>> delete_vertex(K, "1").facets
    (frozenset({'2'}),)
    """
    if v not in K._pos:
        raise UnknownVertex(f"vertex {v!r} not in complex")
    vbit = 1 << K._pos[v]
    candidates = _maximalize(fm & ~vbit for fm in K.facet_masks)
    verts = [u for u in K.vertices if u != v]
    return SimplicialComplex(verts, [K.labels_of(m) for m in candidates])


@dataclass(frozen=True)
class FHVectors:
    """Face counts by dimension and their binomial transform."""

    f: tuple[int, ...]
    h: tuple[int, ...]


def f_h_vectors(K: SimplicialComplex) -> FHVectors:
    """f-vector by counting and h-vector via the standard transform.

    With ``n - 1 = dim K``, ``h_k = sum_i (-1)^(k-i) C(n-i, k-i) f_(i-1)``.

    >>> K = validate_complex([["1", "2"], ["2", "3"], ["1", "3"]])
    >>> f_h_vectors(K)
    FHVectors(f=(1, 3, 3), h=(1, 1, 1))
    """
    if not K.is_pure():
        raise NotPure("f/h vectors require a pure complex")
    f = f_vector(K)
    n = K.dim + 1
    h = tuple(
        sum((-1) ** (k - i) * comb(n - i, k - i) * f[i] for i in range(k + 1))
        for k in range(n + 1)
    )
    return FHVectors(f=f, h=h)


@dataclass(frozen=True)
class PseudomanifoldReport:
    """Necessary-condition report for being dual to a simple polytope."""

    dimension: int
    ridge_violations: tuple[tuple[tuple[str, ...], int], ...]
    connected: bool | None  # None when the connectivity condition is waived
    passed: bool


def pseudomanifold_check(K: SimplicialComplex) -> PseudomanifoldReport:
    """Check that every ridge lies in exactly two facets and the facet graph
    is connected.

    For dimension 0 the ridge is the empty face: the complex must consist of
    exactly two vertices, and connectivity is waived (two points bound the
    1-simplex).
    """
    if not K.is_pure():
        raise NotPure("pseudomanifold check requires a pure complex")
    n = K.dim + 1
    if n <= 0:
        return PseudomanifoldReport(K.dim, (), None, False)
    if n == 1:
        count = len(K.facet_masks)
        violations = () if count == 2 else (((), count),)
        return PseudomanifoldReport(0, violations, None, count == 2)

    ridge_count: dict[int, int] = {}
    for fm in K.facet_masks:
        for u in _iter_bits(fm):
            ridge = fm ^ (1 << u)
            ridge_count[ridge] = ridge_count.get(ridge, 0) + 1
    violations = tuple(
        (K.sorted_face(K.labels_of(r)), ridge_count[r])
        for r in sorted(ridge_count, key=K._mask_sort_key)
        if ridge_count[r] != 2
    )

    # Facet adjacency via shared ridges, explored breadth-first.
    facets = list(K.facet_masks)
    seen = {0}
    queue = [0]
    while queue:
        i = queue.pop()
        for j in range(len(facets)):
            if j not in seen and (facets[i] & facets[j]).bit_count() == n - 1:
                seen.add(j)
                queue.append(j)
    connected = len(seen) == len(facets)
    return PseudomanifoldReport(
        K.dim, violations, connected, not violations and connected
    )
