"""Characteristic matrices, the derived block form, and kernel data."""

from itertools import combinations
from random import Random

import pytest

from wedgeforge.charmaps import (
    CharPair,
    build_S_J,
    build_lambda_J,
    derived_column_order,
    kernel_S,
    verify_characteristic,
    verify_kernel_J,
    verify_lambda_J,
)
from wedgeforge.complexes import validate_complex
from wedgeforge.errors import InvalidBase, ShapeMismatch
from wedgeforge.intlin import IntMatrix, rank

TWO_POINTS = validate_complex([["1"], ["2"]])
TRIANGLE = validate_complex([["1", "2"], ["1", "3"], ["2", "3"]])
SQUARE = validate_complex([["1", "2"], ["2", "3"], ["3", "4"], ["1", "4"]])

CP1 = IntMatrix([[-1, 1]])
CP2 = IntMatrix([[1, 0, -1], [0, 1, -1]])
PRODUCT = IntMatrix([[1, 0, -1, 0], [0, 1, 0, -1]])


def hirzebruch(a):
    return IntMatrix([[1, 0, -1, 0], [0, 1, a, -1]])


PAIRS = [
    (TWO_POINTS, CP1),
    (TRIANGLE, CP2),
    (SQUARE, PRODUCT),
    (SQUARE, hirzebruch(0)),
    (SQUARE, hirzebruch(1)),
    (SQUARE, hirzebruch(2)),
]


def all_weights(m, dmax):
    out = []
    for d in range(m, dmax + 1):
        for cuts in combinations(range(1, d), m - 1):
            out.append(tuple(b - a for a, b in zip((0,) + cuts, cuts + (d,))))
    return out


def test_verify_cp1_passes():
    report = verify_characteristic(TWO_POINTS, CP1)
    assert report.passed
    assert dict(report.facet_minors) == {("1",): -1, ("2",): 1}


def test_verify_bad_entry_fails():
    report = verify_characteristic(TWO_POINTS, IntMatrix([[2, 1]]))
    assert not report.passed
    assert (("1",), 2) in report.facet_minors
    assert ("1",) in report.facet_failures


def test_verify_cp2_passes():
    assert verify_characteristic(TRIANGLE, CP2).passed


def test_verify_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        verify_characteristic(TRIANGLE, CP1)


def test_verify_reports_face_summand_failure():
    # Columns (2, 0) and (3, 0): each facet minor is +-6... actually not +-1,
    # and the single-column faces already fail saturation (gcd 2, gcd 3).
    report = verify_characteristic(TWO_POINTS, IntMatrix([[2, 3]]))
    assert not report.passed
    assert any(divs != (1,) for _, divs in report.face_failures)


def test_build_lambda_j_projective_tower():
    # J = (k, 1) over the two-point complex: identity block, a column of -1,
    # and the base row (0 ... 0, -1, 1) at the bottom.
    pair = CharPair(TWO_POINTS, CP1)
    for k in range(1, 11):
        derived = build_lambda_J(pair, (k, 1))
        expected = []
        for r in range(k - 1):
            row = [0] * (k + 1)
            row[r] = 1
            row[k - 1] = -1
            expected.append(row)
        expected.append([0] * (k - 1) + [-1, 1])
        assert derived.lambdaJ == IntMatrix(expected)
        assert derived.column_order == tuple(
            [f"1.{t}" for t in range(2, k + 1)] + ["1.1", "2.1"]
        )


def test_build_lambda_j_identity_weights():
    for K, lam in PAIRS:
        derived = build_lambda_J(CharPair(K, lam), (1,) * lam.cols)
        assert derived.lambdaJ == lam


def test_derived_copy_column_minor():
    from wedgeforge.intlin import minor

    derived = build_lambda_J(CharPair(TWO_POINTS, CP1), (2, 1))
    # Columns 1.2 and 1.1 of the 2x3 derived matrix give a unit minor.
    assert derived.column_order[:2] == ("1.2", "1.1")
    assert minor(derived.lambdaJ, [0, 1], [0, 1]) in (1, -1)


def test_build_lambda_j_cp2_golden():
    derived = build_lambda_J(CharPair(TRIANGLE, CP2), (2, 1, 1))
    assert derived.column_order == ("1.2", "1.1", "2.1", "3.1")
    assert derived.lambdaJ == IntMatrix(
        [[1, -1, 0, 0], [0, 1, 0, -1], [0, 0, 1, -1]]
    )


def test_build_lambda_j_rejects_bad_base():
    with pytest.raises(InvalidBase):
        build_lambda_J(CharPair(TWO_POINTS, IntMatrix([[2, 1]])), (2, 1))


def test_verify_lambda_j_sweep():
    for K, lam in PAIRS:
        pair = CharPair(K, lam)
        for J in all_weights(lam.cols, lam.cols + 3):
            derived = build_lambda_J(pair, J)
            assert verify_lambda_J(derived).passed
            n_prime = sum(J) - pair.m + pair.n
            assert rank(derived.lambdaJ) == n_prime


def test_kernel_s_examples():
    assert kernel_S(CharPair(TWO_POINTS, CP1)).entries == ((1,), (1,))
    assert kernel_S(CharPair(TRIANGLE, CP2)).entries == ((1,), (1,), (1,))
    S = kernel_S(CharPair(SQUARE, hirzebruch(0)))
    assert S.shape == (4, 2)
    assert (hirzebruch(0) @ S).is_zero()


def test_build_s_j_replication():
    S = IntMatrix([[1], [1]])
    for k in range(1, 6):
        SJ = build_S_J(S, (k, 1))
        assert SJ.entries == ((1,),) * (k + 1)
    assert build_S_J(S, (1, 1)) == S

    S2 = kernel_S(CharPair(SQUARE, hirzebruch(1)))
    SJ2 = build_S_J(S2, (2, 1, 1, 1))
    assert SJ2.shape == (5, 2)
    order = derived_column_order((2, 1, 1, 1))
    assert order == ("1.2", "1.1", "2.1", "3.1", "4.1")
    assert SJ2.row(0) == SJ2.row(1) == S2.row(0)  # both copies of group 1


def test_build_s_j_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        build_S_J(IntMatrix([[1], [1]]), (2, 1, 1))


def test_verify_kernel_j_sweep():
    rng = Random(5150)
    for K, lam in PAIRS:
        pair = CharPair(K, lam)
        S = kernel_S(pair)
        weights = all_weights(lam.cols, lam.cols + 3)
        for J in rng.sample(weights, min(8, len(weights))):
            derived = build_lambda_J(pair, J)
            SJ = build_S_J(S, J)
            assert verify_kernel_J(derived, SJ)


def test_verify_kernel_j_rejects_corruption():
    pair = CharPair(TRIANGLE, CP2)
    derived = build_lambda_J(pair, (2, 2, 1))
    SJ = build_S_J(kernel_S(pair), (2, 2, 1))
    corrupt = [list(r) for r in SJ.entries]
    corrupt[0][0] += 1
    assert not verify_kernel_J(derived, IntMatrix(corrupt))
