"""Wedge construction: elementary wedges, iterates, the non-face oracle."""

from itertools import combinations
from random import Random

import pytest

from wedgeforge.complexes import minimal_nonfaces, validate_complex
from wedgeforge.errors import LengthMismatch, NonPositiveEntry, UnknownVertex
from wedgeforge.wedge import (
    d_of,
    detect_wedge,
    parse_wedge_label,
    wedge_J,
    wedge_at,
    wedged_from_nonfaces,
)

TWO_POINTS = validate_complex([["1"], ["2"]])
TRIANGLE = validate_complex([["1", "2"], ["1", "3"], ["2", "3"]])
SQUARE = validate_complex([["1", "2"], ["2", "3"], ["3", "4"], ["1", "4"]])


def all_weights(m, dmax):
    """All positive integer vectors of length m with total at most dmax."""
    out = []
    for d in range(m, dmax + 1):
        for cuts in combinations(range(1, d), m - 1):
            out.append(tuple(b - a for a, b in zip((0,) + cuts, cuts + (d,))))
    return out


def simplex_boundary_on(labels):
    k = len(labels) - 1
    return validate_complex(
        [list(c) for c in combinations(labels, k)], vertices=labels
    )


def test_d_of():
    assert d_of((1, 1, 1)) == 3
    assert d_of((5, 1)) == 6
    assert d_of((2, 2, 2, 2)) == 8
    with pytest.raises(NonPositiveEntry):
        d_of((0, 1))


def test_wedge_at_two_points_gives_triangle_boundary():
    W = wedge_at(TWO_POINTS, "1")
    assert W.J == (2, 1)
    expected = simplex_boundary_on(["1.1", "1.2", "2.1"])
    assert set(W.complex.facets) == set(expected.facets)


def test_wedge_at_full_simplex_stays_full():
    for m in (1, 2, 3, 4):
        K = validate_complex([[str(i) for i in range(1, m + 1)]])
        W = wedge_at(K, "1")
        assert len(W.complex.facets) == 1
        assert len(W.complex.vertices) == m + 1


def test_wedge_at_square_minimal_nonfaces():
    W = wedge_at(SQUARE, "1")
    assert len(W.complex.vertices) == 5
    assert set(minimal_nonfaces(W.complex)) == {
        frozenset({"1.1", "1.2", "3.1"}),
        frozenset({"2.1", "4.1"}),
    }


def test_wedge_J_identity_weights():
    for K in (TWO_POINTS, TRIANGLE, SQUARE):
        W = wedge_J(K, (1,) * len(K.vertices))
        relabeled = {
            frozenset(f"{K.vertices.index(v) + 1}.1" for v in f) for f in K.facets
        }
        assert set(W.complex.facets) == relabeled


def test_wedge_J_two_points_gives_simplex_boundaries():
    for k in range(1, 7):
        W = wedge_J(TWO_POINTS, (k, 1))
        expected = simplex_boundary_on(sorted(W.complex.vertices, key=parse_wedge_label))
        assert set(W.complex.facets) == set(expected.facets)
    for j1, j2 in [(2, 2), (1, 4), (3, 2)]:
        W = wedge_J(TWO_POINTS, (j1, j2))
        assert len(W.complex.facets) == j1 + j2  # boundary of the (d-1)-simplex
        assert W.complex.dim == j1 + j2 - 2


def test_wedge_J_length_mismatch():
    with pytest.raises(LengthMismatch):
        wedge_J(TWO_POINTS, (2, 1, 1))


def test_wedge_J_rejects_wrong_order_multiset():
    with pytest.raises(LengthMismatch):
        wedge_J(TWO_POINTS, (3, 1), order=[1])  # needs group 1 twice
    with pytest.raises(LengthMismatch):
        wedge_J(TWO_POINTS, (3, 1), order=[1, 2])


def test_wedge_at_unknown_vertex():
    with pytest.raises(UnknownVertex):
        wedge_at(TWO_POINTS, "7")


def test_oracle_examples():
    W = wedged_from_nonfaces(TWO_POINTS, (2, 1))
    assert set(minimal_nonfaces(W.complex)) == {frozenset({"1.1", "1.2", "2.1"})}
    W = wedged_from_nonfaces(SQUARE, (2, 1, 2, 1))
    assert set(minimal_nonfaces(W.complex)) == {
        frozenset({"1.1", "1.2", "3.1", "3.2"}),
        frozenset({"2.1", "4.1"}),
    }


def test_oracle_identity_weights():
    for K in (TWO_POINTS, TRIANGLE, SQUARE):
        J = (1,) * len(K.vertices)
        assert set(wedged_from_nonfaces(K, J).complex.facets) == set(
            wedge_J(K, J).complex.facets
        )


def test_oracle_agrees_with_iterated_wedge():
    for K in (TWO_POINTS, TRIANGLE, SQUARE):
        m = len(K.vertices)
        for J in all_weights(m, m + 3):
            a = wedge_J(K, J)
            b = wedged_from_nonfaces(K, J)
            assert a.complex == b.complex, (K.vertices, J)


def test_order_independence_randomized():
    rng = Random(20240817)
    jobs = [
        (TWO_POINTS, (3, 2)),
        (TRIANGLE, (2, 2, 1)),
        (SQUARE, (2, 1, 2, 1)),
        (SQUARE, (3, 1, 1, 1)),
    ]
    for K, J in jobs:
        reference = wedge_J(K, J)
        m = len(K.vertices)
        base = [i for i in range(1, m + 1) for _ in range(J[i - 1] - 1)]
        for _ in range(10):
            order = list(base)
            rng.shuffle(order)
            W = wedge_J(K, J, order=order, rng=rng)
            assert set(W.complex.facets) == set(reference.complex.facets)


def test_wedge_composition():
    # Wedging K(J) again by J2 equals wedging K once by the merged weights:
    # each base group's total copy count is what matters, not the nesting.
    cases = [
        (TWO_POINTS, (2, 1), (2, 1, 2), (3, 2)),
        (SQUARE, (2, 1, 1, 1), (1, 2, 1, 1, 1), (3, 1, 1, 1)),
        (SQUARE, (1, 2, 1, 1), (2, 1, 1, 1, 2), (2, 2, 1, 2)),
    ]
    for K, J, J2, merged_J in cases:
        inner = wedge_J(K, J)
        outer = wedge_J(inner.complex, J2)
        merged = wedge_J(K, merged_J)
        assert len(outer.complex.vertices) == len(merged.complex.vertices)
        # Outer copies grouped by the base group of their inner vertex, in
        # inner vertex order; merged copies grouped by base group directly.
        inner_order = inner.complex.vertices
        base_copies: dict[int, list[str]] = {}
        for v in outer.complex.vertices:
            g, _ = parse_wedge_label(v)
            base_group, _ = parse_wedge_label(inner_order[g - 1])
            base_copies.setdefault(base_group, []).append(v)
        merged_copies: dict[int, list[str]] = {}
        for v in merged.complex.vertices:
            g, _ = parse_wedge_label(v)
            merged_copies.setdefault(g, []).append(v)
        rename = {}
        for g, outer_labels in base_copies.items():
            assert len(outer_labels) == len(merged_copies[g])
            rename.update(dict(zip(outer_labels, merged_copies[g])))
        mapped = {frozenset(rename[v] for v in f) for f in outer.complex.facets}
        assert mapped == set(merged.complex.facets)


def test_detect_wedge_triangle_boundary():
    pairs = detect_wedge(TRIANGLE)
    assert set(pairs) == {("1", "2"), ("1", "3"), ("2", "3")}


def test_detect_wedge_negative_cases():
    assert detect_wedge(TWO_POINTS) == ()
    assert detect_wedge(SQUARE) == ()


def test_detect_wedge_finds_wedge_images():
    for K in (TWO_POINTS, TRIANGLE, SQUARE):
        for v in K.vertices:
            W = wedge_at(K, v)
            i = K.vertices.index(v) + 1
            assert (f"{i}.1", f"{i}.2") in detect_wedge(W.complex)
