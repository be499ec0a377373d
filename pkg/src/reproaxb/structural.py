"""Consistency of ``A X B = C`` read off from row/column dependencies.

Permute a maximal independent set of rows of ``A`` to the top and a maximal
independent set of columns of ``B`` to the front.  Each remaining row of
``T_A A`` is a fixed combination (``alpha``) of the kept rows, each remaining
column of ``B T_B`` a fixed combination (``beta``) of the kept columns.  The
equation is solvable exactly when ``T_A C T_B`` obeys the same dependencies.
"""
from __future__ import annotations

from dataclasses import dataclass

from .ratmat import INCONSISTENT, Mat, ShapeError, hstack, rank, solve_affine


@dataclass(frozen=True)
class PermutedData:
    """``alpha[i][l]`` belongs to row ``a + i`` of ``T_A A``; ``beta[k][j]`` to column ``b + j`` of ``B T_B``."""

    T_A: Mat
    T_B: Mat
    a: int
    b: int
    alpha: tuple[tuple, ...]
    beta: tuple[tuple, ...]


def _greedy_independent(vectors: list[Mat]) -> list[int]:
    kept: list[int] = []
    for i, v in enumerate(vectors):
        if rank(hstack(*(vectors[k] for k in kept), v)) > len(kept):
            kept.append(i)
    return kept


def _coefficients(kept: list[Mat], v: Mat) -> tuple:
    if not kept:
        if not v.is_zero():
            raise AssertionError("vector outside the span of an empty set")
        return ()
    sol = solve_affine(hstack(*kept), v)
    assert sol is not INCONSISTENT and sol.dim == 0
    return tuple(sol.particular.col(0))


def permuted_form(A: Mat, B: Mat) -> PermutedData:
    m, q = A.rows, B.cols
    rows = [Mat.column(A.row(i)) for i in range(m)]
    cols = [Mat.column(B.col(j)) for j in range(q)]
    kept_rows = _greedy_independent(rows)
    kept_cols = _greedy_independent(cols)
    row_order = kept_rows + [i for i in range(m) if i not in kept_rows]
    col_order = kept_cols + [j for j in range(q) if j not in kept_cols]

    T_A = Mat.permutation(row_order)
    T_B = Mat.permutation(col_order).T

    basis_rows = [rows[i] for i in kept_rows]
    basis_cols = [cols[j] for j in kept_cols]
    alpha = tuple(_coefficients(basis_rows, rows[i]) for i in row_order[len(kept_rows):])
    beta_by_col = [_coefficients(basis_cols, cols[j]) for j in col_order[len(kept_cols):]]
    # beta is indexed [k][j]: kept column k, dependent column j
    beta = tuple(tuple(c[k] for c in beta_by_col) for k in range(len(kept_cols)))
    return PermutedData(T_A, T_B, len(kept_rows), len(kept_cols), alpha, beta)


def structural_check(A: Mat, B: Mat, C: Mat) -> bool:
    """True iff ``A X B = C`` is solvable, decided from the dependency pattern of ``T_A C T_B``."""
    if C.shape != (A.rows, B.cols):
        raise ShapeError(
            f"A is {A.rows}x{A.cols} and B is {B.rows}x{B.cols}, so C must be "
            f"{A.rows}x{B.cols}, got {C.rows}x{C.cols}"
        )
    data = permuted_form(A, B)
    Ch = data.T_A @ C @ data.T_B
    m, q = Ch.shape
    a, b = data.a, data.b
    for i in range(a, m):
        coeffs = data.alpha[i - a]
        for j in range(q):
            if Ch[i, j] != sum((coeffs[l] * Ch[l, j] for l in range(a)), 0):
                return False
    for j in range(b, q):
        for i in range(m):
            if Ch[i, j] != sum((data.beta[k][j - b] * Ch[i, k] for k in range(b)), 0):
                return False
    return True
