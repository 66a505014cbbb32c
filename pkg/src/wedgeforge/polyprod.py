"""Polyhedral products over interval/endpoint pairs as cubical subcomplexes.

The product over a face sigma takes the full factor on vertices in sigma and
the boundary factor elsewhere; the whole space is the union over all faces.
With the pair (interval, endpoints)^p on each vertex group this union is an
honest cubical subcomplex of [-1,1]^d: a cubical face, written as a string
over '-', '+', 'I', belongs to the model exactly when the set of groups whose
coordinates are all 'I' is a face of the complex.  Homology is integral, via
Smith reduction of the sparse boundary matrices.

The wedge/exponentiation equivalence is checked at the level of point sets:
the model of K with group sizes J and the model of K(J) with singleton groups
occupy literally the same cubical faces of the same ambient cube.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .complexes import SimplicialComplex, faces
from .errors import (
    AmbientTooLarge,
    ChainComplexInconsistent,
    LengthMismatch,
    NonPositiveEntry,
)
from .intlin import sparse_elementary_divisors
from .wedge import check_weights, wedge_J

__all__ = [
    "DiskPair",
    "CubePair",
    "AbstractPair",
    "DSigmaPiece",
    "CubicalModel",
    "HomologyGroup",
    "SweepRow",
    "BettiSweep",
    "dsigma_decomposition",
    "real_model",
    "real_model_wedged",
    "verify_subspace_equality",
    "subspace_difference",
    "cubical_homology",
    "total_betti_sweep",
]

AMBIENT_GUARD = 12


@dataclass(frozen=True)
class DiskPair:
    """(D^{2j}, S^{2j-1}): the even disk and its boundary sphere."""

    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise NonPositiveEntry("disk dimension parameter must be >= 1")


@dataclass(frozen=True)
class CubePair:
    """(D^1, S^0)^p: the p-cube and its boundary."""

    power: int

    def __post_init__(self):
        if self.power < 1:
            raise NonPositiveEntry("cube power must be >= 1")


@dataclass(frozen=True)
class AbstractPair:
    """An uninterpreted CW pair, carried along by label only."""

    label: str


PairLike = DiskPair | CubePair | AbstractPair


@dataclass(frozen=True)
class DSigmaPiece:
    """One product piece of the decomposition: X-roles exactly on sigma."""

    sigma: tuple[str, ...]
    roles: tuple[str, ...]  # 'X' or 'A' per vertex, in vertex order
    is_maximal: bool


def dsigma_decomposition(
    K: SimplicialComplex, spec: Sequence[PairLike]
) -> tuple[DSigmaPiece, ...]:
    """One piece per face of K; pieces for facets are flagged maximal."""
    if len(spec) != len(K.vertices):
        raise LengthMismatch(
            f"pair family has {len(spec)} entries for {len(K.vertices)} vertices"
        )
    facet_set = set(K.facets)
    pieces = []
    for dim_faces in faces(K).values():
        for face in dim_faces:
            roles = tuple("X" if v in face else "A" for v in K.vertices)
            pieces.append(
                DSigmaPiece(
                    sigma=K.sorted_face(face),
                    roles=roles,
                    is_maximal=face in facet_set,
                )
            )
    return tuple(pieces)


@dataclass(frozen=True)
class HomologyGroup:
    betti: int
    torsion: tuple[int, ...]


class CubicalModel:
    """A subcomplex of the cube [-1,1]^d closed under taking cubical faces.

    Faces are strings over '-', '+', 'I'; the dimension of a face is its
    number of 'I' characters.  ``maximal_faces`` determine the model;
    ``faces_by_dim`` holds the full (downward-closed) face list.
    """

    __slots__ = ("ambient_dim", "maximal_faces", "faces_by_dim")

    def __init__(
        self,
        ambient_dim: int,
        maximal_faces: Iterable[str],
        faces_by_dim: dict[int, tuple[str, ...]],
    ):
        self.ambient_dim = ambient_dim
        self.maximal_faces = tuple(sorted(maximal_faces))
        self.faces_by_dim = faces_by_dim

    @property
    def dim(self) -> int:
        return max(self.faces_by_dim) if self.faces_by_dim else -1

    def face_counts(self) -> tuple[int, ...]:
        return tuple(
            len(self.faces_by_dim.get(k, ())) for k in range(self.dim + 1)
        )

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.face_counts()))

    def boundary_triples(self, k: int) -> list[tuple[int, int, int]]:
        """Sparse boundary map from k-faces to (k-1)-faces.

        The boundary of a face alternates signs over its 'I' positions; each
        'I' splits into the '+' endpoint minus the '-' endpoint.
        """
        lower = {f: i for i, f in enumerate(self.faces_by_dim.get(k - 1, ()))}
        triples = []
        for col, face in enumerate(self.faces_by_dim.get(k, ())):
            sign = 1
            for pos, ch in enumerate(face):
                if ch != "I":
                    continue
                plus = face[:pos] + "+" + face[pos + 1 :]
                minus = face[:pos] + "-" + face[pos + 1 :]
                if plus not in lower or minus not in lower:
                    raise ChainComplexInconsistent(
                        f"face {face} has a boundary face outside the model"
                    )
                triples.append((lower[plus], col, sign))
                triples.append((lower[minus], col, -sign))
                sign = -sign
        return triples

    def check_boundary_squares_to_zero(self) -> None:
        """Raise ChainComplexInconsistent unless boundary-of-boundary is 0."""
        for k in range(2, self.dim + 1):
            for face in self.faces_by_dim.get(k, ()):
                acc: dict[str, int] = {}
                for f1, s1 in _face_boundary(face):
                    for f2, s2 in _face_boundary(f1):
                        acc[f2] = acc.get(f2, 0) + s1 * s2
                if any(acc.values()):
                    raise ChainComplexInconsistent(
                        f"boundary squared nonzero at face {face}"
                    )


def _face_boundary(face: str) -> list[tuple[str, int]]:
    out = []
    sign = 1
    for pos, ch in enumerate(face):
        if ch != "I":
            continue
        out.append((face[:pos] + "+" + face[pos + 1 :], sign))
        out.append((face[:pos] + "-" + face[pos + 1 :], -sign))
        sign = -sign
    return out


def _group_patterns(p: int) -> list[str]:
    """All non-interior patterns of a group: at least one endpoint coordinate."""
    all_i = "I" * p
    return [
        "".join(pat) for pat in product("-+I", repeat=p) if "".join(pat) != all_i
    ]


def real_model(
    K: SimplicialComplex,
    powers: Sequence[int],
    *,
    ambient_guard: int | None = None,
) -> CubicalModel:
    """The model of K over (interval, endpoints)^{p_i} per vertex group.

    A cubical face belongs to the model iff the set of all-'I' groups is a
    face of K; maximal faces sit over facets, with exactly one endpoint
    coordinate in every non-facet group.

    >>> from .complexes import validate_complex
    >>> K = validate_complex([["1"], ["2"]])
    >>> real_model(K, (1, 1)).maximal_faces
    ('+I', '-I', 'I+', 'I-')
    """
    powers = check_weights(powers)
    if len(powers) != len(K.vertices):
        raise LengthMismatch(
            f"powers vector has {len(powers)} entries for {len(K.vertices)} vertices"
        )
    ambient = sum(powers)
    if ambient_guard is not None and ambient > ambient_guard:
        raise AmbientTooLarge(f"ambient dimension {ambient} exceeds {ambient_guard}")

    m = len(K.vertices)
    face_list = faces(K)
    facet_set = set(K.facets)
    patterns = {p: _group_patterns(p) for p in set(powers)}

    by_dim: dict[int, list[str]] = {}
    maximal: list[str] = []
    for dim_faces in face_list.values():
        for sigma in dim_faces:
            group_choices = []
            for i, v in enumerate(K.vertices):
                if v in sigma:
                    group_choices.append(["I" * powers[i]])
                else:
                    group_choices.append(patterns[powers[i]])
            for combo in product(*group_choices):
                face = "".join(combo)
                by_dim.setdefault(face.count("I"), []).append(face)
            if sigma in facet_set:
                endpoint_choices = []
                for i, v in enumerate(K.vertices):
                    if v in sigma:
                        endpoint_choices.append(["I" * powers[i]])
                    else:
                        p = powers[i]
                        opts = []
                        for pos in range(p):
                            for e in "-+":
                                opts.append("I" * pos + e + "I" * (p - pos - 1))
                        endpoint_choices.append(opts)
                for combo in product(*endpoint_choices):
                    maximal.append("".join(combo))

    faces_by_dim = {k: tuple(sorted(v)) for k, v in by_dim.items()}
    return CubicalModel(ambient, maximal, faces_by_dim)


def real_model_wedged(
    K: SimplicialComplex,
    J: Sequence[int],
    power_per_copy: int,
    *,
    ambient_guard: int | None = None,
) -> CubicalModel:
    """Model of the wedged complex K(J) with a constant power on every copy."""
    J = check_weights(J)
    if len(J) != len(K.vertices):
        raise LengthMismatch(
            f"weight vector has {len(J)} entries for {len(K.vertices)} vertices"
        )
    KJ = wedge_J(K, J).complex
    return real_model(
        KJ, (power_per_copy,) * len(KJ.vertices), ambient_guard=ambient_guard
    )


def verify_subspace_equality(K: SimplicialComplex, J: Sequence[int]) -> bool:
    """True iff the grouped model of K and the singleton model of K(J) agree.

    Both live in the cube of dimension d(J); coordinates are identified by
    listing group i's copies consecutively, which is exactly the canonical
    vertex order of K(J).
    """
    grouped = real_model(K, J)
    wedged = real_model_wedged(K, J, 1)
    return grouped.maximal_faces == wedged.maximal_faces


def subspace_difference(
    K: SimplicialComplex, J: Sequence[int]
) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Maximal faces on one side only: (grouped-only, wedged-only)."""
    grouped = set(real_model(K, J).maximal_faces)
    wedged = set(real_model_wedged(K, J, 1).maximal_faces)
    return tuple(sorted(grouped - wedged)), tuple(sorted(wedged - grouped))


def cubical_homology(
    C: CubicalModel, *, check_boundary: bool = True
) -> tuple[HomologyGroup, ...]:
    """Integral homology per dimension via Smith reduction.

    Boundary-of-boundary is verified up front unless ``check_boundary`` is
    disabled; a defect would also surface later as a negative rank.

    >>> from .complexes import validate_complex
    >>> K = validate_complex([["1"], ["2"]])
    >>> [g.betti for g in cubical_homology(real_model(K, (1, 1)))]
    [1, 1]
    """
    if check_boundary:
        C.check_boundary_squares_to_zero()
    top = C.dim
    if top < 0:
        return ()
    counts = C.face_counts()
    divisors_by_dim = [
        sparse_elementary_divisors(C.boundary_triples(k)) for k in range(top + 2)
    ]
    groups = []
    for k in range(top + 1):
        rank_k = len(divisors_by_dim[k])
        rank_up = len(divisors_by_dim[k + 1]) if k + 1 <= top else 0
        betti = counts[k] - rank_k - rank_up
        if betti < 0:
            raise ChainComplexInconsistent(
                f"negative rank in dimension {k}; boundary maps are defective"
            )
        torsion = tuple(d for d in divisors_by_dim[k + 1] if d > 1) if k + 1 <= top else ()
        groups.append(HomologyGroup(betti=betti, torsion=torsion))
    return tuple(groups)


@dataclass(frozen=True)
class SweepRow:
    J: tuple[int, ...]
    ambient_dim: int
    total_betti: int
    betti: tuple[int, ...]


@dataclass(frozen=True)
class BettiSweep:
    rows: tuple[SweepRow, ...]
    all_agree: bool


def total_betti_sweep(
    K: SimplicialComplex,
    J_list: Iterable[Sequence[int]],
    *,
    ambient_guard: int | None = AMBIENT_GUARD,
) -> BettiSweep:
    """Total Betti numbers of the doubled models of K(J) across weights.

    Doubling each copy realizes the moment-angle space of K(J) as a cubical
    model; across comparable weight vectors the totals must agree.
    """
    rows = []
    for J in J_list:
        J = check_weights(J)
        model = real_model_wedged(K, J, 2, ambient_guard=ambient_guard)
        groups = cubical_homology(model)
        betti = tuple(g.betti for g in groups)
        rows.append(
            SweepRow(
                J=J,
                ambient_dim=model.ambient_dim,
                total_betti=sum(betti),
                betti=betti,
            )
        )
    totals = {r.total_betti for r in rows}
    return BettiSweep(rows=tuple(rows), all_agree=len(totals) <= 1)
