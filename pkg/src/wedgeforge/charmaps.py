"""Characteristic matrices, their derived block form, and kernel-torus data.

An n x m integer matrix is characteristic for a pure (n-1)-dimensional
complex K when the columns attached to every face span a direct summand of
Z^n; for facets this is the condition that the n x n facet minor is +1 or -1.

Given a weight vector J, the derived matrix has one block row per extra copy
of each vertex group (an identity entry on the copy column and a -1 on the
group's first-copy column) stacked over the original matrix placed on the
first-copy columns.  Columns are ordered copies-first: v_{1,2..j_1}, ...,
v_{m,2..j_m}, then v_{1,1}, ..., v_{m,1}.  The kernel of the derived matrix
is spanned by the original kernel with each row replicated across its group.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .complexes import SimplicialComplex, faces
from .errors import InvalidBase, NotPure, ShapeMismatch, TheoremViolation
from .intlin import IntMatrix, kernel_basis, minor, smith_normal_form
from .wedge import WedgedComplex, check_weights, wedge_J, wedge_label

__all__ = [
    "CharPair",
    "CharacteristicReport",
    "DerivedCharPair",
    "verify_characteristic",
    "build_lambda_J",
    "verify_lambda_J",
    "kernel_S",
    "build_S_J",
    "verify_kernel_J",
    "derived_column_order",
]


@dataclass(frozen=True)
class CharPair:
    """A complex together with a candidate characteristic matrix.

    Column i of ``lam`` is attached to vertex i of ``K`` (in vertex order).
    """

    K: SimplicialComplex
    lam: IntMatrix

    @property
    def m(self) -> int:
        return len(self.K.vertices)

    @property
    def n(self) -> int:
        return self.lam.rows


@dataclass(frozen=True)
class CharacteristicReport:
    """Outcome of the facet-minor and face-summand checks."""

    facet_minors: tuple[tuple[tuple[str, ...], int], ...]
    facet_failures: tuple[tuple[str, ...], ...]
    face_failures: tuple[tuple[tuple[str, ...], tuple[int, ...]], ...]
    passed: bool


def verify_characteristic(K: SimplicialComplex, lam: IntMatrix) -> CharacteristicReport:
    """Check the characteristic condition for every face of ``K``.

    Records the minor of each facet (which must be +-1) and, independently,
    the Smith divisors of each face's column submatrix (which must all be 1
    with full column count).  The two agree on facets but are reported
    separately because they diagnose failures differently.
    """
    if not K.is_pure():
        raise NotPure("characteristic matrices live over pure complexes")
    n = K.dim + 1
    m = len(K.vertices)
    if lam.rows != n:
        raise ShapeMismatch(f"matrix has {lam.rows} rows, complex needs {n}")
    if lam.cols != m:
        raise ShapeMismatch(f"matrix has {lam.cols} columns for {m} vertices")

    all_rows = list(range(n))
    facet_minors = []
    facet_failures = []
    for facet in K.facets:
        labels = K.sorted_face(facet)
        cols = [K.vertices.index(v) for v in labels]
        value = minor(lam, all_rows, cols)
        facet_minors.append((labels, value))
        if value not in (1, -1):
            facet_failures.append(labels)

    face_failures = []
    for dim_faces in faces(K).values():
        for face in dim_faces:
            if not face:
                continue
            labels = K.sorted_face(face)
            cols = [K.vertices.index(v) for v in labels]
            divisors = smith_normal_form(lam.submatrix(all_rows, cols)).divisors
            if len(divisors) != len(cols) or any(d != 1 for d in divisors):
                face_failures.append((labels, tuple(divisors)))

    return CharacteristicReport(
        facet_minors=tuple(facet_minors),
        facet_failures=tuple(facet_failures),
        face_failures=tuple(face_failures),
        passed=not facet_failures and not face_failures,
    )


def derived_column_order(J: Sequence[int]) -> tuple[str, ...]:
    """Column labels of the derived matrix: all extra copies, then all first copies."""
    J = check_weights(J)
    m = len(J)
    copies = [
        wedge_label(i, t) for i in range(1, m + 1) for t in range(2, J[i - 1] + 1)
    ]
    firsts = [wedge_label(i, 1) for i in range(1, m + 1)]
    return tuple(copies + firsts)


@dataclass(frozen=True)
class DerivedCharPair:
    """The derived characteristic data (K(J), lambda(J)) over a base pair."""

    base: CharPair
    J: tuple[int, ...]
    KJ: WedgedComplex
    lambdaJ: IntMatrix
    column_order: tuple[str, ...]

    def column_of(self, label: str) -> int:
        return self.column_order.index(label)

    def canonical_matrix(self) -> IntMatrix:
        """The derived matrix with columns permuted into K(J) vertex order."""
        perm = [self.column_order.index(v) for v in self.KJ.complex.vertices]
        return IntMatrix(
            [[row[j] for j in perm] for row in self.lambdaJ.entries]
        )


def build_lambda_J(pair: CharPair, J: Sequence[int]) -> DerivedCharPair:
    """Assemble the derived matrix for the wedged complex K(J).

    >>> from .complexes import validate_complex
    >>> two_points = validate_complex([["1"], ["2"]])
    >>> pair = CharPair(two_points, IntMatrix([[-1, 1]]))
    >>> build_lambda_J(pair, (2, 1)).lambdaJ.entries
    ((1, -1, 0), (0, -1, 1))
    """
    J = check_weights(J)
    if len(J) != pair.m:
        raise ShapeMismatch(f"weight vector length {len(J)} != {pair.m} vertices")
    base_report = verify_characteristic(pair.K, pair.lam)
    if not base_report.passed:
        raise InvalidBase("base pair fails the characteristic condition")

    m, n = pair.m, pair.n
    order = derived_column_order(J)
    col_pos = {lab: p for p, lab in enumerate(order)}
    d = sum(J)
    height = d - m + n
    rows = [[0] * d for _ in range(height)]
    r = 0
    for i in range(1, m + 1):
        for t in range(2, J[i - 1] + 1):
            rows[r][col_pos[wedge_label(i, t)]] = 1
            rows[r][col_pos[wedge_label(i, 1)]] = -1
            r += 1
    for br in range(n):
        for i in range(1, m + 1):
            rows[r + br][col_pos[wedge_label(i, 1)]] = pair.lam.entries[br][i - 1]

    return DerivedCharPair(
        base=pair,
        J=J,
        KJ=wedge_J(pair.K, J),
        lambdaJ=IntMatrix(rows),
        column_order=order,
    )


def verify_lambda_J(derived: DerivedCharPair) -> CharacteristicReport:
    """Run the characteristic checks on (K(J), lambda(J)).

    A pass is guaranteed whenever the base pair passes, so a failure here is
    raised as :class:`TheoremViolation`, flagging a library defect rather
    than bad input.
    """
    report = verify_characteristic(derived.KJ.complex, derived.canonical_matrix())
    if not report.passed:
        raise TheoremViolation(
            "derived matrix failed the characteristic condition; "
            f"facet failures: {report.facet_failures}, "
            f"face failures: {report.face_failures}"
        )
    return report


def kernel_S(pair: CharPair) -> IntMatrix:
    """Canonical basis of the integer kernel of the base matrix, m x (m-n)."""
    report = verify_characteristic(pair.K, pair.lam)
    if not report.passed:
        raise InvalidBase("base pair fails the characteristic condition")
    return kernel_basis(pair.lam)


def build_S_J(S: IntMatrix, J: Sequence[int]) -> IntMatrix:
    """Replicate each group's kernel row onto all its copy rows.

    Rows follow the derived column order, so the row for v_{i,t} equals row i
    of S for every copy t.
    """
    J = check_weights(J)
    if S.rows != len(J):
        raise ShapeMismatch(f"kernel matrix has {S.rows} rows for {len(J)} groups")
    rows = []
    for label in derived_column_order(J):
        group = int(label.partition(".")[0])
        rows.append(list(S.row(group - 1)))
    return IntMatrix(rows) if rows else IntMatrix([])


def verify_kernel_J(derived: DerivedCharPair, SJ: IntMatrix) -> bool:
    """True iff SJ is a saturated full kernel basis for the derived matrix."""
    if SJ.rows != derived.lambdaJ.cols:
        raise ShapeMismatch(
            f"S(J) has {SJ.rows} rows, derived matrix has {derived.lambdaJ.cols} columns"
        )
    if not (derived.lambdaJ @ SJ).is_zero():
        return False
    expected = derived.base.m - derived.base.n
    if SJ.cols != expected:
        return False
    if SJ.cols == 0:
        return True
    divisors = smith_normal_form(SJ).divisors
    return len([d for d in divisors if d]) == SJ.cols and all(
        d == 1 for d in divisors
    )
