"""Exact integer linear algebra: determinants, minors, Smith normal form,
and saturated kernel bases.

Everything runs on arbitrary-precision Python ints; no floating point is used
anywhere.  Determinants use Bareiss fraction-free elimination.  The Smith
form carries unimodular certificates U, V with U @ A @ V == D, checked by
:meth:`SmithForm.verify`.  For the large sparse boundary matrices of cubical
models, :func:`sparse_elementary_divisors` peels off unit pivots before
falling back to the dense routine on the (typically empty) residue.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, NotSquare, ShapeMismatch

__all__ = [
    "IntMatrix",
    "SmithForm",
    "det",
    "minor",
    "smith_normal_form",
    "kernel_basis",
    "rank",
    "hermite_row_basis",
    "sparse_elementary_divisors",
]


class IntMatrix:
    """Immutable dense integer matrix."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        self.entries: tuple[tuple[int, ...], ...] = rows
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        if any(len(r) != self.cols for r in rows):
            raise ShapeMismatch("ragged rows")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int) -> "IntMatrix":
        return cls([[0] * c for _ in range(r)])

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.entries)) if self.rows else IntMatrix([])

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "IntMatrix":
        for i in row_idx:
            if not 0 <= i < self.rows:
                raise IndexOutOfRange(f"row index {i} out of range")
        for j in col_idx:
            if not 0 <= j < self.cols:
                raise IndexOutOfRange(f"column index {j} out of range")
        return IntMatrix([[self.entries[i][j] for j in col_idx] for i in row_idx])

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        ot = list(zip(*other.entries))
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in ot] for row in self.entries]
        )

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.entries]})"


def det(M: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination.

    >>> det(IntMatrix.identity(3))
    1
    >>> det(IntMatrix([[1, -1], [0, -1]]))
    -1
    """
    if M.rows != M.cols:
        raise NotSquare(f"determinant of a {M.shape} matrix")
    n = M.rows
    if n == 0:
        return 1
    a = [list(r) for r in M.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def minor(M: IntMatrix, row_idx: Sequence[int], col_idx: Sequence[int]) -> int:
    """Determinant of the selected square submatrix; empty selection gives 1."""
    if len(row_idx) != len(col_idx):
        raise NotSquare("minor needs equally many rows and columns")
    return det(M.submatrix(row_idx, col_idx))


@dataclass(frozen=True)
class SmithForm:
    """Diagonalization D = U @ A @ V with unimodular U, V and d_k | d_(k+1)."""

    D: IntMatrix
    U: IntMatrix
    V: IntMatrix
    divisors: tuple[int, ...]

    def verify(self, A: IntMatrix) -> bool:
        if (self.U @ A) @ self.V != self.D:
            return False
        if abs(det(self.U)) != 1 or abs(det(self.V)) != 1:
            return False
        for a, b in zip(self.divisors, self.divisors[1:]):
            if a < 0 or (a == 0 and b != 0) or (a != 0 and b % a != 0):
                return False
        return True


def smith_normal_form(M: IntMatrix) -> SmithForm:
    """Smith normal form with transformation certificates.

    >>> smith_normal_form(IntMatrix([[2, 0], [0, 3]])).divisors
    (1, 6)
    >>> smith_normal_form(IntMatrix([[-1, 1]])).divisors
    (1,)
    """
    r, c = M.rows, M.cols
    a = [list(row) for row in M.entries]
    u = [[int(i == j) for j in range(r)] for i in range(r)]
    v = [[int(i == j) for j in range(c)] for i in range(c)]

    def row_op(i, j, q):  # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for row in a:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(r, c):
        # Smallest nonzero entry of the trailing block becomes the pivot.
        best = None
        for i in range(t, r):
            for j in range(t, c):
                x = a[i][j]
                if x and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            dirty = False
            for i in range(t + 1, r):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    row_op(i, t, q)
                    if a[i][t]:  # remainder smaller than pivot: promote it
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, c):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    col_op(j, t, q)
                    if a[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # Divisibility: fold a violating row in and restart the clearing.
            pivot = a[t][t]
            culprit = None
            for i in range(t + 1, r):
                for j in range(t + 1, c):
                    if a[i][j] % pivot:
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            row_op(t, culprit, -1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    divisors = tuple(a[k][k] for k in range(min(r, c)))
    return SmithForm(D=IntMatrix(a), U=IntMatrix(u), V=IntMatrix(v), divisors=divisors)


def rank(M: IntMatrix) -> int:
    """Rank over the rationals (equals the number of nonzero Smith divisors)."""
    return sum(1 for d in smith_normal_form(M).divisors if d)


def hermite_row_basis(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Pivots are positive, entries above each pivot are reduced into
    [0, pivot); zero rows are dropped.  The result is the canonical basis of
    the row lattice, so it is independent of the input basis.
    """
    work = [list(r) for r in rows if any(r)]
    if not work:
        return []
    ncols = len(work[0])
    basis: list[list[int]] = []
    rest = work
    for col in range(ncols):
        active = [r for r in rest if r[col]]
        rest = [r for r in rest if not r[col]]
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            head = active[0]
            reduced = []
            for r in active[1:]:
                q = r[col] // head[col]
                new = [x - q * y for x, y in zip(r, head)]
                if new[col]:
                    reduced.append(new)
                elif any(new):
                    rest.append(new)
            active = [head] + reduced
        if active:
            pivot_row = active[0]
            if pivot_row[col] < 0:
                pivot_row = [-x for x in pivot_row]
            basis.append(pivot_row)
    # Reduce entries above each pivot.
    for pi in range(len(basis) - 1, -1, -1):
        col = next(j for j, x in enumerate(basis[pi]) if x)
        p = basis[pi][col]
        for qi in range(pi):
            q = basis[qi][col] // p
            if q:
                basis[qi] = [x - q * y for x, y in zip(basis[qi], basis[pi])]
    return basis


def kernel_basis(M: IntMatrix) -> IntMatrix:
    """Columns form a basis of the integer kernel of M as a direct summand.

    Canonicalized via the Hermite form, so the output is deterministic; an
    empty kernel yields a (cols x 0) matrix.

    >>> kernel_basis(IntMatrix([[-1, 1]])).entries
    ((1,), (1,))
    >>> kernel_basis(IntMatrix.identity(2)).shape
    (2, 0)
    """
    snf = smith_normal_form(M)
    rk = sum(1 for d in snf.divisors if d)
    # U @ M @ V = D, so the trailing columns of V (past the rank) solve Mx = 0
    # and extend to a basis of Z^cols: the kernel is split off as a summand.
    cols = [snf.V.column(j) for j in range(rk, M.cols)]
    hnf = hermite_row_basis(cols)
    if not hnf:
        return IntMatrix.zeros(M.cols, 0) if M.cols else IntMatrix([])
    result = IntMatrix(hnf).transpose()
    assert (M @ result).is_zero()
    return result


def sparse_elementary_divisors(
    triples: Iterable[tuple[int, int, int]]
) -> list[int]:
    """Smith divisors of a sparse integer matrix given as (row, col, value).

    Unit entries are used as pivots and eliminated in place (each such pivot
    contributes a divisor 1); whatever remains when no unit entries are left
    goes through the dense Smith routine.  Zero divisors are not reported:
    the returned list has one entry per unit of rank.
    """
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for r, c, v in triples:
        if not v:
            continue
        row = rows.setdefault(r, {})
        nv = row.get(c, 0) + v
        if nv:
            row[c] = nv
            cols.setdefault(c, set()).add(r)
        else:
            del row[c]
            cols[c].discard(r)

    ones = 0
    queue = sorted(cols)
    queued = set(queue)
    while queue:
        c = queue.pop()
        queued.discard(c)
        rows_here = cols.get(c)
        if not rows_here:
            cols.pop(c, None)
            continue
        # Pick a unit entry in this column with the sparsest row.
        pivot_row = None
        for r in rows_here:
            if abs(rows[r][c]) == 1 and (
                pivot_row is None or len(rows[r]) < len(rows[pivot_row])
            ):
                pivot_row = r
        if pivot_row is None:
            continue  # revisited in the dense sweep
        ones += 1
        prow = rows.pop(pivot_row)
        s = prow[c]  # +1 or -1
        for cc in prow:
            cols[cc].discard(pivot_row)
        targets = [r for r in cols.get(c, ()) if r != pivot_row]
        for r in targets:
            f = rows[r][c] * s
            row = rows[r]
            for cc, vv in prow.items():
                nv = row.get(cc, 0) - f * vv
                if nv:
                    row[cc] = nv
                    cols.setdefault(cc, set()).add(r)
                    if cc not in queued and cc != c:
                        queued.add(cc)
                        queue.append(cc)
                else:
                    row.pop(cc, None)
                    cols[cc].discard(r)
            if not row:
                del rows[r]
        cols.pop(c, None)

    if not rows:
        return [1] * ones
    # Dense residue: relabel the surviving rows/columns compactly.
    live_cols = sorted({c for row in rows.values() for c in row})
    col_pos = {c: i for i, c in enumerate(live_cols)}
    dense = []
    for r in sorted(rows):
        line = [0] * len(live_cols)
        for c, v in rows[r].items():
            line[col_pos[c]] = v
        dense.append(line)
    divisors = [d for d in smith_normal_form(IntMatrix(dense)).divisors if d]
    return [1] * ones + divisors
