import random

import pytest

from reproaxb.gen_inverse import (
    canonical_one_inverse,
    is_one_inverse,
    normal_form_matrix,
    one_inverse_at,
    one_inverse_family,
    rank_normal_form,
    sample_one_inverse,
)
from reproaxb.ratmat import INCONSISTENT, NOT_REGULAR, Mat, ShapeError, inverse, kron, rank, solve_affine, vec
from reproaxb.sampling import random_rank_matrix


def one_inverse_oracle(A):
    """{G : A G A = A} by brute-force vectorization."""
    return solve_affine(kron(A.T, A), vec(A))


def test_rnf_row_vector():
    A = Mat([[1, 2]])
    rnf = rank_normal_form(A)
    assert rnf.a == 1
    assert rnf.Q == Mat([[1]])
    assert rnf.P == Mat([[1, -2], [0, 1]])
    assert rnf.Q @ A @ rnf.P == Mat([[1, 0]])


@pytest.mark.parametrize("n", [1, 2, 4])
def test_rnf_identity(n):
    rnf = rank_normal_form(Mat.identity(n))
    assert rnf.a == n
    assert rnf.Q @ rnf.P == Mat.identity(n)


def test_rnf_zero():
    rnf = rank_normal_form(Mat.zeros(2, 2))
    assert rnf.a == 0
    assert rnf.normal_form() == Mat.zeros(2, 2)
    assert inverse(rnf.Q) is not NOT_REGULAR and inverse(rnf.P) is not NOT_REGULAR


def test_rnf_random_invariants():
    rng = random.Random(11)
    for _ in range(50):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        A = random_rank_matrix(rng, m, n, rng.randint(0, min(m, n)))
        rnf = rank_normal_form(A)
        assert rnf.Q @ A @ rnf.P == normal_form_matrix(m, n, rank(A))
        assert inverse(rnf.Q) is not NOT_REGULAR
        assert inverse(rnf.P) is not NOT_REGULAR
        assert rank_normal_form(A) == rnf


def test_rohde_row_vector_matches_closed_form():
    A = Mat([[1, 2]])
    fam = one_inverse_family(A)
    assert fam.block_shapes == ((1, 0), (1, 1), (1, 0))
    for t in range(-4, 5):
        G = one_inverse_at(fam, Mat.zeros(1, 0), Mat([[t]]), Mat.zeros(1, 0))
        assert G == Mat([[1 - 2 * t], [t]])


def test_rohde_column_vector_matches_closed_form():
    B = Mat([[1], [3]])
    fam = one_inverse_family(B)
    for t in range(-4, 5):
        G = one_inverse_at(fam, Mat([[t]]), Mat.zeros(0, 1), Mat.zeros(0, 1))
        assert G == Mat([[1 - 3 * t, t]])


def test_regular_matrix_family_is_the_inverse():
    A = Mat([[2, 1], [1, 1]])
    fam = one_inverse_family(A)
    assert fam.dimension == 0
    assert one_inverse_at(fam, *fam.zero_blocks()) == inverse(A)


def test_block_shape_mismatch():
    fam = one_inverse_family(Mat([[1, 2]]))
    with pytest.raises(ShapeError, match="X2"):
        one_inverse_at(fam, Mat.zeros(1, 0), Mat([[1, 2]]), Mat.zeros(1, 0))


def test_sample_is_deterministic_and_varies():
    A = Mat([[1, 2], [2, 4], [0, 1]])
    fam = one_inverse_family(A)
    assert sample_one_inverse(fam, 3) == sample_one_inverse(fam, 3)
    samples = {sample_one_inverse(fam, s) for s in range(10)}
    assert len(samples) > 1
    assert all(is_one_inverse(A, G) for G in samples)


def test_sample_on_identity():
    fam = one_inverse_family(Mat.identity(3))
    assert all(sample_one_inverse(fam, s) == Mat.identity(3) for s in range(5))


def test_is_one_inverse_examples():
    A = Mat([[1, 2]])
    assert is_one_inverse(A, Mat([[1], [0]]))
    assert is_one_inverse(Mat.identity(2), Mat.identity(2))
    assert not is_one_inverse(A, Mat([[0], [0]]))
    with pytest.raises(ShapeError):
        is_one_inverse(A, Mat([[1, 0]]))


def test_family_is_exhaustive_for_row_vector():
    A = Mat([[1, 2]])
    fam = one_inverse_family(A)
    oracle = one_inverse_oracle(A)
    assert oracle.dim == fam.dimension == 1
    for t in range(-3, 4):
        assert oracle.contains(vec(fam.from_parameters([t])))
    # and every oracle point is hit: G = [1-2t, t]^T with t = G[1]
    for x in oracle.spanning_points():
        G = Mat([[x[0, 0]], [x[1, 0]]])
        assert fam.from_parameters([G[1, 0]]) == G


def test_produced_inverses_have_rank_at_least_a():
    rng = random.Random(5)
    for _ in range(30):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        A = random_rank_matrix(rng, m, n, rng.randint(0, min(m, n)))
        fam = one_inverse_family(A)
        for s in range(3):
            assert rank(sample_one_inverse(fam, s)) >= fam.a


def test_canonical_inverse_on_zero_matrix():
    A = Mat.zeros(2, 3)
    G = canonical_one_inverse(A)
    assert G == Mat.zeros(3, 2)
    assert one_inverse_oracle(A) is not INCONSISTENT
