"""Graded ring presentations for the cohomology of the wedged toric manifolds.

Two presentations of the same ring are provided: the *standard* one on d(J)
degree-two generators (one per vertex of K(J), monomial relations from the
Stanley-Reisner ideal of K(J), linear relations from the rows of the derived
matrix) and the *condensed* one on the m original generators (weighted
monomial relations with exponent j_i on each member of a minimal non-face,
linear relations from the rows of the base matrix).  Graded dimensions over
the rationals act as the independent oracle that the presentations agree,
and the h-vector of K(J) supplies the even Betti numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .complexes import (
    SimplicialComplex,
    f_h_vectors,
    faces,
    minimal_nonfaces,
    pseudomanifold_check,
)
from .charmaps import CharPair, build_lambda_J, verify_characteristic
from .errors import DegreeTooLarge, InvalidBase, LengthMismatch, TheoremViolation
from .intlin import IntMatrix
from .wedge import check_weights, wedge_J

__all__ = [
    "RingPresentation",
    "HilbertSeries",
    "BettiNumbers",
    "sr_ideal",
    "weighted_ideal",
    "linear_ideal",
    "presentation_condensed",
    "presentation_standard",
    "eliminate_unit_variables",
    "hilbert_weighted",
    "graded_dims",
    "betti_MJ",
]

DEGREE_GUARD = 12


@dataclass(frozen=True)
class RingPresentation:
    """Z[variables] / (monomial generators + linear forms), all degrees even.

    ``degrees`` are cohomological degrees (2 per generator); exponent vectors
    and linear-form coefficient vectors are indexed like ``variables``.
    """

    variables: tuple[str, ...]
    degrees: tuple[int, ...]
    monomial_generators: tuple[tuple[int, ...], ...]
    linear_forms: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        nv = len(self.variables)
        for g in self.monomial_generators:
            if len(g) != nv:
                raise LengthMismatch("generator exponent vector has wrong length")
        for f in self.linear_forms:
            if len(f) != nv:
                raise LengthMismatch("linear form has wrong length")


def _minimalize_monomials(
    gens: Sequence[tuple[int, ...]]
) -> tuple[tuple[int, ...], ...]:
    """Drop duplicates and any generator divisible by another."""
    distinct = sorted(set(gens), key=lambda g: (sum(g), g))
    kept: list[tuple[int, ...]] = []
    for g in distinct:
        if not any(all(x >= y for x, y in zip(g, k)) for k in kept):
            kept.append(g)
    return tuple(kept)


def sr_ideal(K: SimplicialComplex) -> tuple[tuple[int, ...], ...]:
    """One squarefree exponent vector per minimal non-face.

    >>> from .complexes import validate_complex
    >>> sr_ideal(validate_complex([["1"], ["2"]]))
    ((1, 1),)
    """
    m = len(K.vertices)
    out = []
    for nf in minimal_nonfaces(K):
        e = [0] * m
        for v in nf:
            e[K.vertices.index(v)] = 1
        out.append(tuple(e))
    return tuple(out)


def weighted_ideal(
    K: SimplicialComplex, J: Sequence[int]
) -> tuple[tuple[int, ...], ...]:
    """Weighted monomial ideal: exponent j_i on each member of a non-face.

    >>> from .complexes import validate_complex
    >>> weighted_ideal(validate_complex([["1"], ["2"]]), (3, 1))
    ((3, 1),)
    """
    J = check_weights(J)
    m = len(K.vertices)
    if len(J) != m:
        raise LengthMismatch(f"weight vector length {len(J)} != {m} vertices")
    out = []
    for nf in minimal_nonfaces(K):
        e = [0] * m
        for v in nf:
            i = K.vertices.index(v)
            e[i] = J[i]
        out.append(tuple(e))
    return tuple(out)


def linear_ideal(lam: IntMatrix) -> tuple[tuple[int, ...], ...]:
    """Degree-two linear relations: one form per nonzero matrix row."""
    return tuple(tuple(row) for row in lam.entries if any(row))


def _checked_pair(K: SimplicialComplex, lam: IntMatrix) -> CharPair:
    pair = CharPair(K, lam)
    if not verify_characteristic(K, lam).passed:
        raise InvalidBase("base pair fails the characteristic condition")
    return pair


def presentation_condensed(
    K: SimplicialComplex, lam: IntMatrix, J: Sequence[int]
) -> RingPresentation:
    """Presentation on the m base generators with weighted monomial relations."""
    _checked_pair(K, lam)
    J = check_weights(J)
    return RingPresentation(
        variables=tuple(f"v{v}" for v in K.vertices),
        degrees=(2,) * len(K.vertices),
        monomial_generators=_minimalize_monomials(weighted_ideal(K, J)),
        linear_forms=linear_ideal(lam),
    )


def presentation_standard(
    K: SimplicialComplex, lam: IntMatrix, J: Sequence[int]
) -> RingPresentation:
    """Presentation on the d(J) generators of the wedged complex."""
    pair = _checked_pair(K, lam)
    derived = build_lambda_J(pair, J)
    KJ = derived.KJ.complex
    order = derived.column_order
    pos = {lab: p for p, lab in enumerate(order)}
    gens = []
    for e in sr_ideal(KJ):
        reindexed = [0] * len(order)
        for p, exp in enumerate(e):
            reindexed[pos[KJ.vertices[p]]] = exp
        gens.append(tuple(reindexed))
    return RingPresentation(
        variables=tuple(f"v{lab}" for lab in order),
        degrees=(2,) * len(order),
        monomial_generators=_minimalize_monomials(gens),
        linear_forms=linear_ideal(derived.lambdaJ),
    )


def eliminate_unit_variables(P: RingPresentation) -> RingPresentation:
    """Remove variables via unit-coefficient linear forms.

    Only substitutions that keep every generator a monomial are applied: the
    solved variable must be absent from all generators, or its substitute
    must be zero or a single generator with unit coefficient.  Each applied
    step removes one variable; the procedure is deterministic (fewest-term
    form first, then lowest variable index).

    >>> P = RingPresentation(("a", "b"), (2, 2), ((3, 1),), ((-1, 1),))
    >>> eliminate_unit_variables(P).monomial_generators
    ((4,),)
    """
    variables = list(P.variables)
    degrees = list(P.degrees)
    gens = [list(g) for g in P.monomial_generators]
    forms = [list(f) for f in P.linear_forms]

    def candidate():
        best = None
        for fi, form in enumerate(forms):
            support = [(k, c) for k, c in enumerate(form) if c]
            if not support:
                continue
            for k, c in support:
                if abs(c) != 1:
                    continue
                rest = [(q, -c * cq) for q, cq in support if q != k]
                used = any(g[k] for g in gens)
                if used and len(rest) > 1:
                    continue
                if used and rest and abs(rest[0][1]) != 1:
                    continue
                key = (len(support), k, fi)
                if best is None or key < best[0]:
                    best = (key, fi, k, rest)
        return best

    while True:
        found = candidate()
        if found is None:
            break
        _, fi, k, rest = found
        del forms[fi]
        # Rewrite the remaining linear forms: v_k = sum(rest).
        for form in forms:
            ck = form[k]
            if ck:
                for q, cq in rest:
                    form[q] += ck * cq
                form[k] = 0
        # Rewrite the generators.
        if rest:
            q = rest[0][0]
            new_gens = []
            for g in gens:
                if g[k]:
                    g[q] += g[k]
                    g[k] = 0
                new_gens.append(g)
            gens = new_gens
        else:
            gens = [g for g in gens if not g[k]]
        # Drop the variable everywhere.
        for g in gens:
            del g[k]
        for form in forms:
            del form[k]
        del variables[k]
        del degrees[k]
        forms = [f for f in forms if any(f)]

    return RingPresentation(
        variables=tuple(variables),
        degrees=tuple(degrees),
        monomial_generators=_minimalize_monomials(tuple(tuple(g) for g in gens)),
        linear_forms=tuple(tuple(f) for f in forms),
    )


@dataclass(frozen=True)
class HilbertSeries:
    """numerator(t) / (1-t)^denominator_power, t tracking cohomological degree 2."""

    numerator: tuple[int, ...]
    denominator_power: int

    def coefficients(self, max_degree: int) -> tuple[int, ...]:
        """Power-series coefficients up to t^max_degree."""
        m = self.denominator_power
        out = []
        for d in range(max_degree + 1):
            total = 0
            for k, a in enumerate(self.numerator):
                if k > d:
                    break
                if a:
                    total += a * comb(m - 1 + d - k, d - k) if m else (a if k == d else 0)
            out.append(total)
        return tuple(out)

    def __str__(self) -> str:
        terms = []
        for k, a in enumerate(self.numerator):
            if a:
                terms.append(f"{'+' if a > 0 and terms else ''}{a}t^{k}")
        num = " ".join(terms) if terms else "0"
        return f"({num}) / (1-t)^{self.denominator_power}"


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def hilbert_weighted(K: SimplicialComplex, J: Sequence[int]) -> HilbertSeries:
    """Hilbert series of the weighted Stanley-Reisner ring.

    A monomial v^a survives iff its weighted support {i : a_i >= j_i} is a
    face of K; summing the resulting geometric series over all faces gives

        H(t) = sum_sigma prod_{i in sigma} t^{j_i} * prod_{i not in sigma} (1 - t^{j_i})

    over (1-t)^m.

    >>> from .complexes import validate_complex
    >>> hilbert_weighted(validate_complex([["1"], ["2"]]), (4, 1)).numerator
    (1, 0, 0, 0, 0, -1)
    """
    J = check_weights(J)
    m = len(K.vertices)
    if len(J) != m:
        raise LengthMismatch(f"weight vector length {len(J)} != {m} vertices")
    numerator = [0]
    for dim_faces in faces(K).values():
        for face in dim_faces:
            term = [1]
            for i, v in enumerate(K.vertices):
                j = J[i]
                if v in face:
                    term = _poly_mul(term, [0] * j + [1])
                else:
                    term = _poly_mul(term, [1] + [0] * (j - 1) + [-1])
            if len(term) > len(numerator):
                numerator += [0] * (len(term) - len(numerator))
            for k, x in enumerate(term):
                numerator[k] += x
    while len(numerator) > 1 and numerator[-1] == 0:
        numerator.pop()
    return HilbertSeries(numerator=tuple(numerator), denominator_power=m)


# -- graded dimensions ------------------------------------------------------


def _reduce_linear_forms(
    forms: Sequence[Sequence[int]], nvars: int
) -> tuple[list[int], dict[int, dict[int, Fraction]]]:
    """Row-reduce the forms over Q.

    Returns the free variable indices and, for each pivot variable, its
    expression as a linear combination of free variables.
    """
    rows = [[Fraction(c) for c in f] for f in forms if any(f)]
    pivots: dict[int, list[Fraction]] = {}
    for row in rows:
        for col in sorted(pivots):
            if row[col]:
                coef = row[col]
                prow = pivots[col]
                row = [x - coef * y for x, y in zip(row, prow)]
        lead = next((j for j, x in enumerate(row) if x), None)
        if lead is None:
            continue
        inv = 1 / row[lead]
        row = [x * inv for x in row]
        for col, prow in pivots.items():
            if prow[lead]:
                coef = prow[lead]
                pivots[col] = [x - coef * y for x, y in zip(prow, row)]
        pivots[lead] = row
    free = [j for j in range(nvars) if j not in pivots]
    substitution: dict[int, dict[int, Fraction]] = {}
    for col, row in pivots.items():
        substitution[col] = {
            q: -row[q] for q in free if row[q]
        }
    return free, substitution


def _substituted_polynomial(
    exponents: Sequence[int],
    free: list[int],
    substitution: dict[int, dict[int, Fraction]],
) -> dict[tuple[int, ...], Fraction]:
    """Image of a monomial under the linear substitution, over the free vars."""
    fpos = {v: q for q, v in enumerate(free)}
    f = len(free)

    def unit(var: int) -> dict[tuple[int, ...], Fraction]:
        if var in fpos:
            e = [0] * f
            e[fpos[var]] = 1
            return {tuple(e): Fraction(1)}
        out: dict[tuple[int, ...], Fraction] = {}
        for v, c in substitution[var].items():
            e = [0] * f
            e[fpos[v]] = 1
            out[tuple(e)] = c
        return out

    def mul(a, b):
        out: dict[tuple[int, ...], Fraction] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                val = out.get(key, Fraction(0)) + ca * cb
                if val:
                    out[key] = val
                elif key in out:
                    del out[key]
        return out

    poly: dict[tuple[int, ...], Fraction] = {(0,) * f: Fraction(1)}
    for var, e in enumerate(exponents):
        for _ in range(e):
            poly = mul(poly, unit(var))
    return poly


def _rank_over_q(rows: list[list[Fraction]]) -> int:
    rank_count = 0
    pivot_rows: list[tuple[int, list[Fraction]]] = []
    for row in rows:
        for lead, prow in pivot_rows:
            if row[lead]:
                coef = row[lead]
                row = [x - coef * y for x, y in zip(row, prow)]
        lead = next((j for j, x in enumerate(row) if x), None)
        if lead is None:
            continue
        inv = 1 / row[lead]
        pivot_rows.append((lead, [x * inv for x in row]))
        rank_count += 1
    return rank_count


def _monomials_of_degree(nvars: int, degree: int) -> list[tuple[int, ...]]:
    if nvars == 0:
        return [()] if degree == 0 else []
    out = []

    def rec(prefix: list[int], remaining: int, pos: int):
        if pos == nvars - 1:
            out.append(tuple(prefix + [remaining]))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e, pos + 1)

    rec([], degree, 0)
    return out


def graded_dims(
    P: RingPresentation, max_degree: int, *, guard: int = DEGREE_GUARD
) -> tuple[int, ...]:
    """Dimension over Q of each graded piece of the quotient, by t-degree.

    The linear forms are eliminated first by exact rational substitution
    (this quotients by the linear ideal), then each degree-d piece is the
    span complement of monomial multiples of the substituted generators,
    computed by exact row reduction.

    >>> P = RingPresentation(("v",), (2,), ((3,),), ())
    >>> graded_dims(P, 5)
    (1, 1, 1, 0, 0, 0)
    """
    if max_degree > guard:
        raise DegreeTooLarge(f"degree {max_degree} exceeds guard {guard}")
    nvars = len(P.variables)
    free, substitution = _reduce_linear_forms(P.linear_forms, nvars)
    f = len(free)
    subbed = []
    for g in P.monomial_generators:
        poly = _substituted_polynomial(g, free, substitution)
        if poly:
            subbed.append((sum(g), poly))

    dims = []
    for d in range(max_degree + 1):
        monoms = _monomials_of_degree(f, d)
        index = {e: i for i, e in enumerate(monoms)}
        rows: list[list[Fraction]] = []
        for deg_g, poly in subbed:
            if deg_g > d:
                continue
            for mult in _monomials_of_degree(f, d - deg_g):
                row = [Fraction(0)] * len(monoms)
                for e, c in poly.items():
                    key = tuple(x + y for x, y in zip(e, mult))
                    row[index[key]] += c
                rows.append(row)
        dims.append(len(monoms) - _rank_over_q(rows))
    return tuple(dims)


# -- Betti numbers ----------------------------------------------------------


@dataclass(frozen=True)
class BettiNumbers:
    """Even Betti numbers (rank H^0, rank H^2, ...) of the wedged manifold.

    ``manifold_certified`` is False when the base complex fails the
    pseudomanifold necessary conditions, in which case the values are the
    h-vector of K(J) as combinatorial data only.
    """

    even_ranks: tuple[int, ...]
    manifold_certified: bool

    @property
    def total(self) -> int:
        return sum(self.even_ranks)


def betti_MJ(
    K: SimplicialComplex,
    lam: IntMatrix,
    J: Sequence[int],
    *,
    verify: bool = False,
) -> BettiNumbers:
    """Even Betti numbers via the h-vector of K(J).

    With ``verify=True`` the ranks are cross-checked against the graded
    dimensions of the condensed presentation; a mismatch is an internal
    defect and raises :class:`TheoremViolation`.

    >>> from .complexes import validate_complex
    >>> K = validate_complex([["1"], ["2"]])
    >>> betti_MJ(K, IntMatrix([[-1, 1]]), (3, 1)).even_ranks
    (1, 1, 1, 1)
    """
    _checked_pair(K, lam)
    J = check_weights(J)
    h = f_h_vectors(wedge_J(K, J).complex).h
    certified = pseudomanifold_check(K).passed
    if verify:
        dims = graded_dims(
            presentation_condensed(K, lam, J), len(h), guard=max(DEGREE_GUARD, len(h))
        )
        if tuple(dims[: len(h)]) != h or any(dims[len(h) :]):
            raise TheoremViolation(
                f"h-vector {h} disagrees with graded dimensions {dims}"
            )
    return BettiNumbers(even_ranks=h, manifold_certified=certified)
