import random

import pytest

from reproaxb.axbc import is_consistent
from reproaxb.ratmat import Mat, ShapeError, rank
from reproaxb.sampling import random_permutation, random_rank_matrix, random_triple
from reproaxb.structural import permuted_form, structural_check

A_COL = Mat([[1], [2]])
B_ROW = Mat([[1, 3]])


def test_permuted_form_row_dependency():
    data = permuted_form(A_COL, Mat([[1]]))
    assert data.a == 1 and data.T_A == Mat.identity(2)
    assert data.alpha == ((2,),)


def test_permuted_form_column_dependency():
    data = permuted_form(Mat([[1]]), B_ROW)
    assert data.b == 1 and data.T_B == Mat.identity(2)
    assert data.beta == ((3,),)


def test_permuted_form_full_row_rank():
    data = permuted_form(Mat([[1, 0, 2], [0, 1, 1]]), Mat([[1]]))
    assert data.a == 2 and data.alpha == ()
    assert data.T_A == Mat.identity(2)


def test_permuted_form_moves_independent_row_up():
    A = Mat([[0, 0], [1, 1], [2, 2]])
    data = permuted_form(A, Mat([[1]]))
    assert data.a == 1
    assert (data.T_A @ A).row(0) == (1, 1)
    assert data.alpha == ((0,), (2,))


def check_dependencies(A, B, data):
    Ah, Bh = data.T_A @ A, B @ data.T_B
    a, b = data.a, data.b
    assert rank(Mat([Ah.row(i) for i in range(a)], cols=A.cols)) == a == rank(A)
    assert rank(Mat([Bh.col(j) for j in range(b)], cols=B.rows)) == b == rank(B)
    for i in range(a, A.rows):
        combo = [sum((data.alpha[i - a][l] * Ah[l, c] for l in range(a)), 0) for c in range(A.cols)]
        assert list(Ah.row(i)) == combo
    for j in range(b, B.cols):
        combo = [sum((data.beta[k][j - b] * Bh[r, k] for k in range(b)), 0) for r in range(B.rows)]
        assert list(Bh.col(j)) == combo


def test_permuted_form_invariants_random():
    rng = random.Random(21)
    for _ in range(60):
        m, n, p, q = (rng.randint(1, 4) for _ in range(4))
        A = random_rank_matrix(rng, m, n, rng.randint(0, min(m, n)))
        B = random_rank_matrix(rng, p, q, rng.randint(0, min(p, q)))
        check_dependencies(A, B, permuted_form(A, B))


def test_zero_coefficient_matrices():
    data = permuted_form(Mat.zeros(2, 2), Mat.zeros(2, 3))
    assert data.a == data.b == 0
    assert data.alpha == ((), ())
    assert data.beta == ()
    assert structural_check(Mat.zeros(2, 2), Mat.zeros(2, 3), Mat.zeros(2, 3))
    assert not structural_check(Mat.zeros(2, 2), Mat.zeros(2, 3), Mat([[0, 0, 0], [0, 1, 0]]))


@pytest.mark.parametrize(
    "C, expected",
    [
        (Mat([[1, 3], [2, 6]]), True),
        (Mat([[1, 3], [2, 5]]), False),
    ],
)
def test_hand_built_pattern(C, expected):
    assert structural_check(A_COL, B_ROW, C) is expected


def test_example_has_no_constraints(worked):
    A, B, _, _ = worked
    for c in (-5, 0, 12, 100):
        assert structural_check(A, B, Mat([[c]]))


def test_shape_mismatch():
    with pytest.raises(ShapeError):
        structural_check(A_COL, B_ROW, Mat([[1, 2, 3]]))


def test_matches_oracle_random():
    rng = random.Random(5)
    for _ in range(100):
        A, B, C = random_triple(rng)
        assert structural_check(A, B, C) == is_consistent(A, B, C)


def test_scrambling_invariance():
    rng = random.Random(55)
    for _ in range(30):
        A, B, C = random_triple(rng)
        S, T = random_permutation(rng, A.rows), random_permutation(rng, B.cols)
        assert structural_check(S @ A, B @ T, S @ C @ T) == structural_check(A, B, C)
