import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from inducedmatch.errors import AsymmetricInput, DuplicateLabel, InvalidBijection, NegativeValue, NonzeroDiagonal, ParseError
from inducedmatch.types import (
    Barcode,
    PointBijection,
    Pose,
    Trajectory,
    Triplet,
    TripletMergeTree,
    format_matrix_text,
    normalize_angle,
    parse_matrix_text,
    validate_dissimilarity,
)


def test_minimal_symmetric_space():
    space = validate_dissimilarity([[0, 5], [5, 0]])
    assert space.n == 2
    assert space.dist(1, 2) == 5.0
    assert space.labels == (1, 2)


@pytest.mark.parametrize(
    "matrix, error",
    [
        ([[0, 1], [2, 0]], AsymmetricInput),
        ([[0, -1], [-1, 0]], NegativeValue),
        ([[1, 0], [0, 0]], NonzeroDiagonal),
    ],
)
def test_invalid_matrices(matrix, error):
    with pytest.raises(error):
        validate_dissimilarity(matrix)


def test_symmetry_is_exact():
    with pytest.raises(AsymmetricInput):
        validate_dissimilarity([[0, 0.1 + 0.2], [0.3, 0]])


def test_duplicate_labels():
    with pytest.raises(DuplicateLabel):
        validate_dissimilarity([[0, 1], [1, 0]], labels=["a", "a"])


def test_zero_off_diagonal_allowed():
    space = validate_dissimilarity([[0, 0, 1], [0, 0, 1], [1, 1, 0]])
    assert space.dist(1, 2) == 0


def test_no_triangle_inequality_required():
    validate_dissimilarity([[0, 1, 10], [1, 0, 1], [10, 1, 0]])


def test_space_is_read_only():
    space = validate_dissimilarity([[0, 5], [5, 0]])
    with pytest.raises(ValueError):
        space.d[0, 1] = 3


sym_matrices = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.floats(0, 100, allow_nan=False), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2).map(
        lambda vals: _fill(n, vals)
    )
)


def _fill(n, vals):
    d = np.zeros((n, n))
    it = iter(vals)
    for i in range(n):
        for j in range(i + 1, n):
            d[i, j] = d[j, i] = next(it)
    return d


@given(sym_matrices)
def test_validation_idempotent(d):
    once = validate_dissimilarity(d)
    assert validate_dissimilarity(once) == once
    assert validate_dissimilarity(once.d, once.labels) == once


def test_barcode_invariants():
    b = Barcode.from_deaths([2.0, 1.0, 2.0], n=4)
    assert b.bars == ((1.0, 1), (2.0, 2))
    assert b.expanded() == [1.0, 2.0, 2.0]
    assert b.representation() == [(1.0, 1), (2.0, 1), (2.0, 2)]
    assert Barcode.from_json(b.to_json()) == b
    with pytest.raises(ValueError):
        Barcode(n=3, bars=((1.0, 1),))
    zero = Barcode.from_deaths([0.0, 3.0])
    assert zero.multiplicity(0.0) == 1


def test_tmt_invariants():
    tmt = TripletMergeTree(3, (Triplet(2, 1.0, 1), Triplet(3, 2.0, 1)))
    assert TripletMergeTree.from_json(tmt.to_json()) == tmt
    with pytest.raises(ValueError):
        TripletMergeTree(3, (Triplet(2, 1.0, 1), Triplet(3, 2.0, 3)))
    with pytest.raises(ValueError):
        TripletMergeTree(3, (Triplet(2, 1.0, 1),))


def test_point_bijection():
    f = PointBijection((2, 3, 1))
    assert f(1) == 2 and f(3) == 1
    assert f.inverse().permutation == (3, 1, 2)
    with pytest.raises(InvalidBijection):
        PointBijection((1, 1, 2))


def test_pose_alpha_normalized():
    assert Pose(0, 0, 7.0).alpha == 7.0 - 2 * math.pi
    assert Pose(0, 0, -math.pi / 2).alpha == pytest.approx(1.5 * math.pi)
    assert normalize_angle(-1e-20) == 0.0
    assert 0 <= Pose(0, 0, 2 * math.pi).alpha < 2 * math.pi


@given(st.floats(-1e6, 1e6, allow_nan=False))
def test_normalized_angle_range(alpha):
    a = normalize_angle(alpha)
    assert 0 <= a < 2 * math.pi


def test_trajectory_nonempty():
    with pytest.raises(ValueError):
        Trajectory("a", ())
    tr = Trajectory("a", (Pose(1, 2, 0.5),))
    assert tr.as_array().shape == (1, 3)


def test_matrix_text_round_trip():
    d = np.array([[0, 1.5, 2], [1.5, 0, 0.1], [2, 0.1, 0]])
    assert np.array_equal(parse_matrix_text(format_matrix_text(d)), d)
    assert parse_matrix_text("2\n0 5\n5 0\n").tolist() == [[0, 5], [5, 0]]


@pytest.mark.parametrize("text", ["", "x\n", "2\n0 1\n", "2\n0 1\n1 a\n", "2\n0 1 2\n1 0\n"])
def test_matrix_text_errors(text):
    with pytest.raises(ParseError):
        parse_matrix_text(text)
