"""The matrix equation ``A X B = C``.

Consistency tests, affine solution families ``Y -> S + sum(+-L Y R)``, the
reproductivity test ``f(f(Y)) == f(Y)`` and a rank-based certificate that a
particular solution is not of the form ``A1 C B1`` for any {1}-inverses.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

from .gen_inverse import canonical_one_inverse, is_one_inverse
from .ratmat import (
    INCONSISTENT,
    AffineSet,
    Mat,
    Outcome,
    ShapeError,
    column_space_basis,
    hstack,
    kron,
    rank,
    solve_affine,
    unvec,
    vec,
)


class NotOneInverseError(ValueError):
    pass


class InconsistentEquationError(ValueError):
    pass


class NotASolutionError(ValueError):
    pass


class Term(NamedTuple):
    """``sign * L @ Y @ R``."""

    L: Mat
    R: Mat
    sign: int = 1


@dataclass(frozen=True)
class AffineMatMap:
    """``Y -> shift + sum(sign * L @ Y @ R for L, R, sign in terms)``.

    ``in_shape`` is the shape of ``Y``; the output has the shape of ``shift``.
    """

    shift: Mat
    terms: tuple[Term, ...]
    in_shape: tuple[int, int]

    def __post_init__(self):
        n, p = self.in_shape
        r, c = self.shift.shape
        for t in self.terms:
            if t.sign not in (1, -1):
                raise ValueError(f"term sign must be +1 or -1, got {t.sign}")
            if t.L.shape != (r, n) or t.R.shape != (p, c):
                raise ShapeError(
                    f"term L {t.L.rows}x{t.L.cols}, R {t.R.rows}x{t.R.cols} does not map "
                    f"{n}x{p} to {r}x{c}"
                )

    @classmethod
    def identity(cls, rows: int, cols: int) -> AffineMatMap:
        return cls(Mat.zeros(rows, cols), (Term(Mat.identity(rows), Mat.identity(cols)),), (rows, cols))

    @property
    def out_shape(self) -> tuple[int, int]:
        return self.shift.shape

    def linear(self, Y: Mat) -> Mat:
        if Y.shape != self.in_shape:
            raise ShapeError(f"map expects a {self.in_shape[0]}x{self.in_shape[1]} argument, got {Y.rows}x{Y.cols}")
        out = Mat.zeros(*self.out_shape)
        for t in self.terms:
            LYR = t.L @ Y @ t.R
            out = out + LYR if t.sign == 1 else out - LYR
        return out

    def __call__(self, Y: Mat) -> Mat:
        return self.shift + self.linear(Y)

    def vec_matrix(self) -> Mat:
        """Matrix of the linear part acting on ``vec(Y)``: ``sum(sign * kron(R.T, L))``."""
        return self._vec_matrix

    @cached_property
    def _vec_matrix(self) -> Mat:
        n, p = self.in_shape
        r, c = self.out_shape
        M = Mat.zeros(r * c, n * p)
        for t in self.terms:
            K = kron(t.R.T, t.L)
            M = M + K if t.sign == 1 else M - K
        return M

    def image(self) -> AffineSet:
        """The image as an affine set of vectorized outputs."""
        return AffineSet(vec(self.shift), tuple(column_space_basis(self.vec_matrix())), self.shift.rows * self.shift.cols)

    def image_basis(self) -> list[Mat]:
        r, c = self.out_shape
        return [unvec(b, r, c) for b in self.image().basis]

    def image_dim(self) -> int:
        return rank(self.vec_matrix())

    def in_image(self, X: Mat) -> bool:
        return self.image_contains([X])

    def image_contains(self, points: Sequence[Mat]) -> bool:
        """True iff every matrix in ``points`` is ``self(Y)`` for some ``Y``.

        One rank comparison: appending the offsets ``vec(X - shift)`` to the
        linear part's matrix must not raise its rank.
        """
        for X in points:
            if X.shape != self.out_shape:
                raise ShapeError(f"{X.rows}x{X.cols} cannot lie in the image of a map into {self.out_shape}")
        if not points:
            return True
        Lm = self.vec_matrix()
        offsets = [vec(X - self.shift) for X in points]
        return rank(hstack(Lm, *offsets)) == rank(Lm)

    def fixes(self, X: Mat) -> bool:
        return self(X) == X

    def equivalent(self, other: AffineMatMap) -> bool:
        """Same function, regardless of how the terms are written."""
        return (
            self.in_shape == other.in_shape
            and self.shift == other.shift
            and self.vec_matrix() == other.vec_matrix()
        )

    def __add__(self, other: AffineMatMap) -> AffineMatMap:
        if self.in_shape != other.in_shape:
            raise ShapeError("maps have different argument shapes")
        return AffineMatMap(self.shift + other.shift, self.terms + other.terms, self.in_shape)

    def __neg__(self) -> AffineMatMap:
        return AffineMatMap(-self.shift, tuple(Term(t.L, t.R, -t.sign) for t in self.terms), self.in_shape)

    def __sub__(self, other: AffineMatMap) -> AffineMatMap:
        return self + (-other)

    def sandwich(self, L: Mat, R: Mat) -> AffineMatMap:
        """``Y -> L @ self(Y) @ R``, expanded term by term."""
        return AffineMatMap(
            L @ self.shift @ R,
            tuple(Term(L @ t.L, t.R @ R, t.sign) for t in self.terms),
            self.in_shape,
        )


class Reason(enum.Enum):
    REPRODUCTIVE = "reproductive"
    LINEAR_PART_NOT_IDEMPOTENT = "linear part not idempotent"
    SHIFT_NOT_FIXED = "linear part does not annihilate the shift"


@dataclass(frozen=True)
class ReproReport:
    is_reproductive: bool
    reason: Reason
    witness: Mat | None = None


class Verdict(enum.Enum):
    PROVEN_NOT_REPRESENTABLE = "proven not representable"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Certificate:
    verdict: Verdict
    rank_X0: int
    bound: int


def _check_shapes(A: Mat, B: Mat, C: Mat) -> None:
    if C.shape != (A.rows, B.cols):
        raise ShapeError(
            f"A is {A.rows}x{A.cols} and B is {B.rows}x{B.cols}, so C must be "
            f"{A.rows}x{B.cols}, got {C.rows}x{C.cols}"
        )


def _check_inverses(A: Mat, B: Mat, A1: Mat, B1: Mat) -> None:
    if not is_one_inverse(A, A1):
        raise NotOneInverseError("supplied A1 is not a {1}-inverse of A")
    if not is_one_inverse(B, B1):
        raise NotOneInverseError("supplied B1 is not a {1}-inverse of B")


def _resolve_inverses(A: Mat, B: Mat, A1: Mat | None, B1: Mat | None) -> tuple[Mat, Mat]:
    A1 = canonical_one_inverse(A) if A1 is None else A1
    B1 = canonical_one_inverse(B) if B1 is None else B1
    _check_inverses(A, B, A1, B1)
    return A1, B1


def solution_set(A: Mat, B: Mat, C: Mat) -> AffineSet | Outcome:
    """All ``vec(X)`` with ``A X B = C``, via ``kron(B.T, A) vec(X) = vec(C)``."""
    _check_shapes(A, B, C)
    return solve_affine(kron(B.T, A), vec(C))


def penrose_check(A: Mat, B: Mat, C: Mat, A1: Mat, B1: Mat) -> bool:
    """``A A1 C B1 B == C`` for the supplied {1}-inverses."""
    _check_shapes(A, B, C)
    _check_inverses(A, B, A1, B1)
    return A @ A1 @ C @ B1 @ B == C


def is_consistent(A: Mat, B: Mat, C: Mat) -> bool:
    return solution_set(A, B, C) is not INCONSISTENT


def general_solution(A: Mat, B: Mat, C: Mat, A1: Mat | None = None, B1: Mat | None = None) -> AffineMatMap:
    """``Y -> A1 C B1 + Y - A1 A Y B B1``.

    Without explicit inverses the zero-block member of each {1}-inverse
    family is used.
    """
    _check_shapes(A, B, C)
    A1, B1 = _resolve_inverses(A, B, A1, B1)
    if not penrose_check(A, B, C, A1, B1):
        raise InconsistentEquationError("A X B = C has no solution")
    n, p = A.cols, B.rows
    return AffineMatMap(
        A1 @ C @ B1,
        (Term(Mat.identity(n), Mat.identity(p)), Term(A1 @ A, B @ B1, -1)),
        (n, p),
    )


def solution_from_particular(
    A: Mat, B: Mat, C: Mat, X0: Mat, A1: Mat | None = None, B1: Mat | None = None
) -> AffineMatMap:
    """``Y -> X0 + Y - A1 A Y B B1`` for a known solution ``X0``."""
    _check_shapes(A, B, C)
    if X0.shape != (A.cols, B.rows) or A @ X0 @ B != C:
        raise NotASolutionError("X0 does not satisfy A X0 B = C")
    A1, B1 = _resolve_inverses(A, B, A1, B1)
    n, p = X0.shape
    return AffineMatMap(
        X0,
        (Term(Mat.identity(n), Mat.identity(p)), Term(A1 @ A, B @ B1, -1)),
        (n, p),
    )


def residual_map(A: Mat, B: Mat, C: Mat) -> AffineMatMap:
    """``Y -> A Y B - C``."""
    _check_shapes(A, B, C)
    return AffineMatMap(-C, (Term(A, B),), (A.cols, B.rows))


def fixed_point_map(A: Mat, B: Mat, C: Mat, A1: Mat | None = None, B1: Mat | None = None) -> AffineMatMap:
    """``Y -> Y - A1 (A Y B - C) B1``; its fixed points are the solutions when any exist."""
    A1, B1 = _resolve_inverses(A, B, A1, B1)
    n, p = A.cols, B.rows
    return AffineMatMap.identity(n, p) - residual_map(A, B, C).sandwich(A1, B1)


def reproductivity_of(f: AffineMatMap) -> ReproReport:
    """Decide ``f(f(Y)) == f(Y)`` for all ``Y``.

    With ``f(Y) = S + L(Y)`` we have ``f(f(Y)) - f(Y) = L(S) + (L^2 - L)(Y)``,
    which vanishes identically iff ``L^2 = L`` and ``L(S) = 0``.  A failing
    map comes with a concrete ``Y`` on which the two sides differ.
    """
    if f.in_shape != f.out_shape:
        raise ShapeError(f"map from {f.in_shape} to {f.out_shape} cannot be composed with itself")
    Lm = f.vec_matrix()
    idempotent = Lm @ Lm == Lm
    shift_killed = f.linear(f.shift).is_zero()
    if idempotent and shift_killed:
        return ReproReport(True, Reason.REPRODUCTIVE)

    n, p = f.in_shape
    candidates = [Mat.zeros(n, p)]
    if not idempotent:
        L2 = Lm @ Lm
        k = next(k for k in range(n * p) if L2.col(k) != Lm.col(k))
        unit = Mat.column(1 if i == k else 0 for i in range(n * p))
        # Y = 0 fails only if L(S) = 0, and then the unit matrix does not cancel
        candidates.append(unvec(unit, n, p))
    witness = next(Y for Y in candidates if f(f(Y)) != f(Y))
    reason = Reason.SHIFT_NOT_FIXED if idempotent else Reason.LINEAR_PART_NOT_IDEMPOTENT
    return ReproReport(False, reason, witness)


def representability_certificate(
    A: Mat, B: Mat, C: Mat, X0: Mat
) -> Certificate:
    """Sound but incomplete test that ``X0 != A1 C B1`` for every choice of {1}-inverses.

    ``A1 C B1 = (A1 A) X0 (B B1)`` has rank at most ``min(rank A, rank B)``,
    so a particular solution of larger rank can never be written that way.
    """
    _check_shapes(A, B, C)
    if X0.shape != (A.cols, B.rows) or A @ X0 @ B != C:
        raise NotASolutionError("X0 does not satisfy A X0 B = C")
    r = rank(X0)
    bound = min(rank(A), rank(B))
    verdict = Verdict.PROVEN_NOT_REPRESENTABLE if r > bound else Verdict.INCONCLUSIVE
    return Certificate(verdict, r, bound)


def image_dimension_formula(A: Mat, B: Mat) -> int:
    """``n p - rank(A) rank(B)``: dimension of the solution set of a consistent ``A X B = C``."""
    return A.cols * B.rows - rank(A) * rank(B)


__all__ = [
    "AffineMatMap",
    "Certificate",
    "InconsistentEquationError",
    "NotASolutionError",
    "NotOneInverseError",
    "Reason",
    "ReproReport",
    "Term",
    "Verdict",
    "fixed_point_map",
    "general_solution",
    "image_dimension_formula",
    "is_consistent",
    "penrose_check",
    "representability_certificate",
    "reproductivity_of",
    "residual_map",
    "solution_from_particular",
    "solution_set",
]
