"""Rank normal form and the full parametrization of the {1}-inverse set.

For ``A`` of shape ``m x n`` and rank ``a`` we build regular ``Q`` (m x m) and
``P`` (n x n) with ``Q A P = E_a``.  Every {1}-inverse is then

    G = P [[I_a, X1], [X2, X3]] Q

with ``X1`` of shape ``a x (m-a)``, ``X2`` of shape ``(n-a) x a`` and ``X3``
of shape ``(n-a) x (m-a)`` arbitrary.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .ratmat import (
    Mat,
    ScalarLike,
    ShapeError,
    block,
    mul,
    rref_with_transform,
)

PARAM_RANGE = (-3, 3)


@dataclass(frozen=True)
class RankNormalForm:
    Q: Mat
    P: Mat
    a: int

    @property
    def m(self) -> int:
        return self.Q.rows

    @property
    def n(self) -> int:
        return self.P.rows

    def normal_form(self) -> Mat:
        return normal_form_matrix(self.m, self.n, self.a)


def normal_form_matrix(m: int, n: int, a: int) -> Mat:
    """``E_a``: identity of order ``a`` in the top-left corner of an ``m x n`` zero matrix."""
    return Mat([[1 if i == j and i < a else 0 for j in range(n)] for i in range(m)], cols=n)


def rank_normal_form(A: Mat) -> RankNormalForm:
    """Deterministic ``(Q, P, a)`` with ``Q @ A @ P == E_a``.

    ``Q`` is the row transform of the reduced echelon form ``R = Q A``.  The
    pivot rows of ``R`` are already on top, so ``P`` only has to move the
    pivot columns to the front and clear the remaining block ``F``:
    ``R Pi = [[I, F], [0, 0]]`` and ``[[I, F], [0, 0]] [[I, -F], [0, I]] = E_a``.
    """
    m, n = A.shape
    R, Q, a, pivots = rref_with_transform(A)
    free = [j for j in range(n) if j not in set(pivots)]
    order = list(pivots) + free
    # Pi has e_{order[k]} as its k-th column
    Pi = Mat([[1 if order[k] == i else 0 for k in range(n)] for i in range(n)], cols=n)
    F = R.submatrix(range(a), free)
    clear = block([
        [Mat.identity(a), -F],
        [Mat.zeros(n - a, a), Mat.identity(n - a)],
    ])
    return RankNormalForm(Q, Pi @ clear, a)


@dataclass(frozen=True)
class OneInverseFamily:
    """All {1}-inverses of an ``m x n`` matrix, indexed by three free blocks."""

    rnf: RankNormalForm
    m: int
    n: int

    @property
    def a(self) -> int:
        return self.rnf.a

    @property
    def block_shapes(self) -> tuple[tuple[int, int], tuple[int, int], tuple[int, int]]:
        a, m, n = self.a, self.m, self.n
        return (a, m - a), (n - a, a), (n - a, m - a)

    @property
    def dimension(self) -> int:
        return sum(r * c for r, c in self.block_shapes)

    def at(self, X1: Mat, X2: Mat, X3: Mat) -> Mat:
        return one_inverse_at(self, X1, X2, X3)

    def from_parameters(self, values: Sequence[ScalarLike]) -> Mat:
        """Member whose blocks X1, X2, X3 are filled row-major, in that order, from ``values``."""
        if len(values) != self.dimension:
            raise ValueError(f"expected {self.dimension} parameters, got {len(values)}")
        blocks = []
        pos = 0
        for r, c in self.block_shapes:
            blocks.append(Mat([values[pos + i * c: pos + (i + 1) * c] for i in range(r)], cols=c))
            pos += r * c
        return one_inverse_at(self, *blocks)

    def zero_blocks(self) -> tuple[Mat, Mat, Mat]:
        return tuple(Mat.zeros(r, c) for r, c in self.block_shapes)


def one_inverse_family(A: Mat) -> OneInverseFamily:
    return OneInverseFamily(rank_normal_form(A), A.rows, A.cols)


def one_inverse_at(fam: OneInverseFamily, X1: Mat, X2: Mat, X3: Mat) -> Mat:
    for name, X, shape in zip(("X1", "X2", "X3"), (X1, X2, X3), fam.block_shapes):
        if X.shape != shape:
            raise ShapeError(f"block {name} must be {shape[0]}x{shape[1]}, got {X.rows}x{X.cols}")
    middle = block([[Mat.identity(fam.a), X1], [X2, X3]])
    return mul(mul(fam.rnf.P, middle), fam.rnf.Q)


def canonical_one_inverse(A: Mat) -> Mat:
    """The member with all free blocks zero; this is the library's default {1}-inverse."""
    fam = one_inverse_family(A)
    return one_inverse_at(fam, *fam.zero_blocks())


def sample_one_inverse(fam: OneInverseFamily, seed: int) -> Mat:
    """Member with block entries drawn uniformly from the integers in [-3, 3]."""
    rng = random.Random(seed)
    lo, hi = PARAM_RANGE
    return fam.from_parameters([rng.randint(lo, hi) for _ in range(fam.dimension)])


def is_one_inverse(A: Mat, G: Mat) -> bool:
    if G.shape != (A.cols, A.rows):
        raise ShapeError(f"a {{1}}-inverse of a {A.rows}x{A.cols} matrix is {A.cols}x{A.rows}, got {G.rows}x{G.cols}")
    return A @ G @ A == A
