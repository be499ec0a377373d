"""Seeded random matrices for property tests and experiments."""
from __future__ import annotations

import random

from .ratmat import Mat, rank


def random_matrix(rng: random.Random, rows: int, cols: int, lo: int = -5, hi: int = 5) -> Mat:
    return Mat([[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)], cols=cols)


def random_rank_matrix(rng: random.Random, rows: int, cols: int, r: int, lo: int = -2, hi: int = 2) -> Mat:
    """Integer matrix of rank exactly ``r`` (product of ``rows x r`` and ``r x cols`` factors)."""
    if r > min(rows, cols):
        raise ValueError(f"rank {r} impossible for {rows}x{cols}")
    if r == 0:
        return Mat.zeros(rows, cols)
    while True:
        M = random_matrix(rng, rows, r, lo, hi) @ random_matrix(rng, r, cols, lo, hi)
        if rank(M) == r:
            return M


def random_shape(rng: random.Random, max_dim: int) -> tuple[int, int]:
    return rng.randint(1, max_dim), rng.randint(1, max_dim)


def random_triple(rng: random.Random, max_dim: int = 4, consistent: bool | None = None) -> tuple[Mat, Mat, Mat]:
    """Random ``(A, B, C)`` for ``A X B = C`` with low-rank factors so both verdicts occur.

    ``consistent=True`` builds ``C = A X B`` from a random ``X``; ``None`` flips a coin
    between that and an unrelated random ``C``.
    """
    m, n = random_shape(rng, max_dim)
    p, q = random_shape(rng, max_dim)
    A = random_rank_matrix(rng, m, n, rng.randint(0, min(m, n)))
    B = random_rank_matrix(rng, p, q, rng.randint(0, min(p, q)))
    if consistent is None:
        consistent = rng.random() < 0.5
    if consistent:
        C = A @ random_matrix(rng, n, p, -3, 3) @ B
    else:
        C = random_matrix(rng, m, q, -3, 3)
    return A, B, C


def random_permutation(rng: random.Random, n: int) -> Mat:
    order = list(range(n))
    rng.shuffle(order)
    return Mat.permutation(order)
