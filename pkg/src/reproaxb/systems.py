"""Solution families for related matrix equations and systems.

Covers the one-sided and sandwich equations ``AX=0``, ``XA=0``, ``AXA=A``,
``AX=A``, ``XA=A`` (two families each: one built around ``A1``, one around
``A1 A A1``/``A1 A``/``A A1``), the two-sided system ``AX=B, XD=E`` and the
commuting system ``AXA=A, AX=XA``.

Every claim about a family's image is checked against :func:`stacked_oracle`,
which vectorizes the whole system into one exact linear solve.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .axbc import AffineMatMap, NotOneInverseError, Term
from .gen_inverse import canonical_one_inverse, is_one_inverse
from .ratmat import (
    INCONSISTENT,
    AffineSet,
    Mat,
    Outcome,
    ShapeError,
    kron,
    solve_affine,
    unvec,
    vec,
    vstack,
)


@dataclass(frozen=True)
class Equation:
    """``sum(sign * L @ X @ R) = rhs``."""

    terms: tuple[Term, ...]
    rhs: Mat

    @classmethod
    def simple(cls, L: Mat, R: Mat, C: Mat) -> Equation:
        return cls((Term(L, R),), C)

    def lhs(self, X: Mat) -> Mat:
        out = Mat.zeros(*self.rhs.shape)
        for t in self.terms:
            LXR = t.L @ X @ t.R
            out = out + LXR if t.sign == 1 else out - LXR
        return out

    def holds(self, X: Mat) -> bool:
        return self.lhs(X) == self.rhs

    def vectorized(self) -> Mat:
        first = self.terms[0]
        M = Mat.zeros(self.rhs.rows * self.rhs.cols, first.L.cols * first.R.rows)
        for t in self.terms:
            K = kron(t.R.T, t.L)
            M = M + K if t.sign == 1 else M - K
        return M


@dataclass(frozen=True)
class MatrixSystem:
    equations: tuple[Equation, ...]
    shape: tuple[int, int]

    def __post_init__(self):
        n, p = self.shape
        for k, eq in enumerate(self.equations):
            r, c = eq.rhs.shape
            if not eq.terms:
                raise ValueError(f"equation {k} has no terms")
            for t in eq.terms:
                if t.L.shape != (r, n) or t.R.shape != (p, c):
                    raise ShapeError(
                        f"equation {k}: L {t.L.rows}x{t.L.cols} X({n}x{p}) R {t.R.rows}x{t.R.cols} "
                        f"cannot equal a {r}x{c} right-hand side"
                    )

    def holds(self, X: Mat) -> bool:
        return all(eq.holds(X) for eq in self.equations)


def stacked_oracle(system: MatrixSystem) -> AffineSet | Outcome:
    """Solve every equation at once as ``[kron(R.T, L)] vec(X) = [vec(C)]``."""
    n, p = system.shape
    if not system.equations:
        return solve_affine(Mat.zeros(0, n * p), Mat.zeros(0, 1))
    M = vstack(*(eq.vectorized() for eq in system.equations))
    rhs = vstack(*(vec(eq.rhs) for eq in system.equations))
    return solve_affine(M, rhs)


def oracle_matrices(points: AffineSet, shape: tuple[int, int]) -> list[Mat]:
    """The affinely spanning points of an oracle set, reshaped to matrices."""
    return [unvec(v, *shape) for v in points.spanning_points()]


class Which(str, enum.Enum):
    E1 = "E1"
    E2 = "E2"
    E3 = "E3"
    E4 = "E4"
    E5 = "E5"


def _square(A: Mat) -> int:
    if not A.is_square():
        raise ShapeError(f"A must be square, got {A.rows}x{A.cols}")
    return A.rows


def _inverse_for(A: Mat, A1: Mat | None) -> Mat:
    if A1 is None:
        return canonical_one_inverse(A)
    if not is_one_inverse(A, A1):
        raise NotOneInverseError("supplied A1 is not a {1}-inverse of A")
    return A1


def target_system(A: Mat, which: Which | str) -> MatrixSystem:
    """The equation solved by the E1..E5 families."""
    n = _square(A)
    I, Z = Mat.identity(n), Mat.zeros(n, n)
    which = Which(which)
    eq = {
        Which.E1: Equation.simple(A, I, Z),
        Which.E2: Equation.simple(I, A, Z),
        Which.E3: Equation.simple(A, A, A),
        Which.E4: Equation.simple(A, I, A),
        Which.E5: Equation.simple(I, A, A),
    }[which]
    return MatrixSystem((eq,), (n, n))


def _family(A: Mat, which: Which, A1: Mat, haveric: bool) -> AffineMatMap:
    n = A.rows
    I, Z = Mat.identity(n), Mat.zeros(n, n)
    left = A1 @ A   # A1 A
    right = A @ A1  # A A1
    ident = Term(I, I)
    if which is Which.E1:
        return AffineMatMap(Z, (ident, Term(left, I, -1)), (n, n))
    if which is Which.E2:
        return AffineMatMap(Z, (ident, Term(I, right, -1)), (n, n))
    if which is Which.E3:
        shift = A1 @ A @ A1 if haveric else A1
        return AffineMatMap(shift, (ident, Term(left, right, -1)), (n, n))
    if which is Which.E4:
        return AffineMatMap(left if haveric else I, (ident, Term(left, I, -1)), (n, n))
    return AffineMatMap(right if haveric else I, (ident, Term(I, right, -1)), (n, n))


def presic_family(A: Mat, which: Which | str, A1: Mat | None = None) -> AffineMatMap:
    """Families for E1..E5 with shifts ``0, 0, A1, I, I``.

    The E3..E5 maps are in general not reproductive: their images are the
    solution sets, but the solutions are not their fixed points.
    """
    _square(A)
    return _family(A, Which(which), _inverse_for(A, A1), haveric=False)


def haveric_family(A: Mat, which: Which | str, A1: Mat | None = None) -> AffineMatMap:
    """Families for E3..E5 with shifts ``A1 A A1``, ``A1 A``, ``A A1``; all reproductive."""
    _square(A)
    which = Which(which)
    if which in (Which.E1, Which.E2):
        raise ValueError(f"{which.value} has no primed variant; use presic_family")
    return _family(A, which, _inverse_for(A, A1), haveric=True)


class TwoSidedSolution(NamedTuple):
    general: AffineMatMap
    reproductive: AffineMatMap
    particular: Mat


def two_sided_system(A: Mat, B: Mat, D: Mat, E: Mat) -> MatrixSystem:
    """``A X = B`` and ``X D = E``."""
    n, p = A.cols, B.cols
    if B.rows != A.rows or D.rows != p or E.shape != (n, D.cols):
        raise ShapeError(
            f"A {A.rows}x{A.cols}, B {B.rows}x{B.cols}, D {D.rows}x{D.cols}, E {E.rows}x{E.cols} "
            "do not describe A X = B, X D = E for a common X"
        )
    return MatrixSystem(
        (Equation.simple(A, Mat.identity(p), B), Equation.simple(Mat.identity(n), D, E)),
        (n, p),
    )


def two_sided_solve(
    A: Mat, B: Mat, D: Mat, E: Mat, A1: Mat | None = None, D1: Mat | None = None
) -> TwoSidedSolution | Outcome:
    """Families for ``A X = B, X D = E``.

    ``general`` is ``X0 + (I - A1 A) Y (I - D D1)`` with ``X0`` the oracle's
    particular solution; ``reproductive`` replaces ``X0`` by
    ``A1 B + E D1 - A1 A E D1``.
    """
    system = two_sided_system(A, B, D, E)
    sol = stacked_oracle(system)
    if sol is INCONSISTENT:
        return INCONSISTENT
    n, p = system.shape
    A1 = _inverse_for(A, A1)
    D1 = _inverse_for(D, D1)
    X0 = unvec(sol.particular, n, p)
    In, Ip = Mat.identity(n), Mat.identity(p)
    homogeneous = (
        Term(In, Ip),
        Term(A1 @ A, Ip, -1),
        Term(In, D @ D1, -1),
        Term(A1 @ A, D @ D1),
    )
    general = AffineMatMap(X0, homogeneous, (n, p))
    reproductive = AffineMatMap(A1 @ B + E @ D1 - A1 @ A @ E @ D1, homogeneous, (n, p))
    return TwoSidedSolution(general, reproductive, X0)


class CommutingSolution(NamedTuple):
    abar: Mat
    family: AffineMatMap


def commuting_system(A: Mat) -> MatrixSystem:
    """``A X A = A`` and ``A X - X A = 0``."""
    n = _square(A)
    I = Mat.identity(n)
    commutator = Equation((Term(A, I), Term(I, A, -1)), Mat.zeros(n, n))
    return MatrixSystem((Equation.simple(A, A, A), commutator), (n, n))


def commuting_system_solve(A: Mat) -> CommutingSolution | Outcome:
    """A commuting {1}-inverse ``Abar`` and the family

    ``Y + Abar A Abar - Abar A Y - Y A Abar + Abar A Y A Abar``.

    ``Abar`` is the oracle's particular solution of the system.  Regular
    ``A`` gives ``Abar = A^-1`` and a constant family.
    """
    system = commuting_system(A)
    sol = stacked_oracle(system)
    if sol is INCONSISTENT:
        return INCONSISTENT
    n = A.rows
    abar = unvec(sol.particular, n, n)
    I = Mat.identity(n)
    left = abar @ A
    right = A @ abar
    family = AffineMatMap(
        abar @ A @ abar,
        (Term(I, I), Term(left, I, -1), Term(I, right, -1), Term(left, right)),
        (n, n),
    )
    return CommutingSolution(abar, family)
