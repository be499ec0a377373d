"""Exact rational dense matrices.

Every entry is a :class:`fractions.Fraction`, so all arithmetic, elimination
and equality tests are exact.  Matrices are immutable; the functions in this
module never mutate their arguments.

Zero-sized matrices (``0 x n`` or ``m x 0``) are allowed so that block
constructions with empty blocks compose without special cases.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

Scalar = Fraction
ScalarLike = Union[int, Fraction, str]


class ShapeError(ValueError):
    """Operands have non-conformable shapes."""


class MatrixParseError(ValueError):
    def __init__(self, source: str, line: int, message: str):
        self.source = source
        self.line = line
        super().__init__(f"{source}:{line}: {message}")


class Outcome(enum.Enum):
    """Distinguished non-error results."""

    INCONSISTENT = "inconsistent"
    NOT_REGULAR = "not regular"

    def __repr__(self) -> str:
        return self.name


INCONSISTENT = Outcome.INCONSISTENT
NOT_REGULAR = Outcome.NOT_REGULAR

_ENTRY_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def to_scalar(x: ScalarLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not _ENTRY_RE.match(s):
            raise ValueError(f"not an integer or p/q rational: {x!r}")
        return Fraction(s)
    raise TypeError(f"unsupported entry type {type(x).__name__} (floats are rejected to keep arithmetic exact)")


class Mat:
    """Dense immutable matrix over the rationals."""

    __slots__ = ("_data", "_cols")

    def __init__(self, rows: Iterable[Iterable[ScalarLike]], cols: int | None = None):
        data = tuple(tuple(to_scalar(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ShapeError("ragged rows")
            if cols is not None and cols != width:
                raise ShapeError(f"declared {cols} columns but rows have {width}")
        else:
            width = cols or 0
        self._data = data
        self._cols = width

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Mat:
        zero = Fraction(0)
        return cls._raw(tuple((zero,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n: int) -> Mat:
        one, zero = Fraction(1), Fraction(0)
        return cls._raw(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)), n)

    @classmethod
    def column(cls, values: Iterable[ScalarLike]) -> Mat:
        return cls([[v] for v in values], cols=1)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[ScalarLike]], rows: int | None = None) -> Mat:
        if not columns:
            return cls._raw(tuple(() for _ in range(rows or 0)), 0)
        return cls(zip(*columns), cols=len(columns))

    @classmethod
    def permutation(cls, order: Sequence[int]) -> Mat:
        """Row ``i`` of the result is the unit row ``e_{order[i]}``.

        Left-multiplying by it brings row ``order[i]`` of the operand to
        position ``i``.
        """
        n = len(order)
        if sorted(order) != list(range(n)):
            raise ValueError(f"not a permutation: {list(order)}")
        return cls([[1 if j == order[i] else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def _raw(cls, data: tuple, cols: int) -> Mat:
        m = object.__new__(cls)
        m._data = data
        m._cols = cols
        return m

    @property
    def rows(self) -> int:
        return len(self._data)

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self._data), self._cols)

    @property
    def T(self) -> Mat:
        return transpose(self)

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def __iter__(self) -> Iterator[tuple[Fraction, ...]]:
        return iter(self._data)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    def is_square(self) -> bool:
        return self.rows == self._cols

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Mat:
        return Mat._raw(tuple(tuple(self._data[i][j] for j in cols) for i in rows), len(cols))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self._cols, self._data))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._data)
        return f"Mat([{body}])" if self._data else f"Mat([], cols={self._cols})"

    def __str__(self) -> str:
        return format_matrix(self)

    def __add__(self, other: Mat) -> Mat:
        return add(self, other)

    def __sub__(self, other: Mat) -> Mat:
        return add(self, other, -1)

    def __neg__(self) -> Mat:
        return scale(-1, self)

    def __matmul__(self, other: Mat) -> Mat:
        return mul(self, other)

    def __mul__(self, c: ScalarLike) -> Mat:
        if isinstance(c, Mat):
            return NotImplemented
        return scale(c, self)

    __rmul__ = __mul__


def mul(A: Mat, B: Mat) -> Mat:
    if A.cols != B.rows:
        raise ShapeError(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    bcols = list(zip(*B._data)) if B.rows else [() for _ in range(B.cols)]
    data = tuple(
        tuple(sum((x * y for x, y in zip(ar, bc)), Fraction(0)) for bc in bcols)
        for ar in A._data
    )
    return Mat._raw(data, B.cols)


def add(A: Mat, B: Mat, sign: int = 1) -> Mat:
    """``A + sign*B``."""
    if A.shape != B.shape:
        raise ShapeError(f"cannot add {A.rows}x{A.cols} and {B.rows}x{B.cols}")
    if sign == 1:
        data = tuple(tuple(x + y for x, y in zip(ar, br)) for ar, br in zip(A._data, B._data))
    else:
        data = tuple(tuple(x + sign * y for x, y in zip(ar, br)) for ar, br in zip(A._data, B._data))
    return Mat._raw(data, A.cols)


def scale(c: ScalarLike, A: Mat) -> Mat:
    c = to_scalar(c)
    return Mat._raw(tuple(tuple(c * x for x in r) for r in A._data), A.cols)


def transpose(A: Mat) -> Mat:
    if A.cols == 0:
        return Mat._raw((), A.rows)
    if A.rows == 0:
        return Mat._raw(tuple(() for _ in range(A.cols)), 0)
    return Mat._raw(tuple(zip(*A._data)), A.rows)


def hstack(*blocks: Mat) -> Mat:
    if not blocks:
        raise ValueError("hstack needs at least one block")
    rows = blocks[0].rows
    if any(b.rows != rows for b in blocks):
        raise ShapeError("hstack: row counts differ: " + ", ".join(f"{b.rows}x{b.cols}" for b in blocks))
    data = tuple(tuple(x for b in blocks for x in b._data[i]) for i in range(rows))
    return Mat._raw(data, sum(b.cols for b in blocks))


def vstack(*blocks: Mat) -> Mat:
    if not blocks:
        raise ValueError("vstack needs at least one block")
    cols = blocks[0].cols
    if any(b.cols != cols for b in blocks):
        raise ShapeError("vstack: column counts differ: " + ", ".join(f"{b.rows}x{b.cols}" for b in blocks))
    return Mat._raw(tuple(r for b in blocks for r in b._data), cols)


def block(grid: Sequence[Sequence[Mat]]) -> Mat:
    return vstack(*(hstack(*row) for row in grid))


def kron(A: Mat, B: Mat) -> Mat:
    data = tuple(
        tuple(a * b for a in ar for b in br)
        for ar in A._data
        for br in B._data
    )
    return Mat._raw(data, A.cols * B.cols)


def vec(A: Mat) -> Mat:
    """Column-stacking vectorization."""
    return Mat._raw(tuple((A._data[i][j],) for j in range(A.cols) for i in range(A.rows)), 1)


def unvec(v: Mat, rows: int, cols: int) -> Mat:
    if v.cols != 1 or v.rows != rows * cols:
        raise ShapeError(f"cannot reshape a {v.rows}x{v.cols} vector into {rows}x{cols}")
    flat = [r[0] for r in v._data]
    return Mat._raw(tuple(tuple(flat[j * rows + i] for j in range(cols)) for i in range(rows)), cols)


class RowEchelon(NamedTuple):
    R: Mat
    E: Mat
    rank: int
    pivot_cols: tuple[int, ...]


def _eliminate(rows: list[list[Fraction]], track: list[list[Fraction]] | None) -> list[int]:
    """Gauss-Jordan in place; pivot is the topmost nonzero entry of the leftmost usable column."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
            if track is not None:
                track[p], track[r] = track[r], track[p]
        pv = rows[r][c]
        if pv != 1:
            rows[r] = [x / pv for x in rows[r]]
            if track is not None:
                track[r] = [x / pv for x in track[r]]
        prow = rows[r]
        trow = track[r] if track is not None else None
        for i in range(m):
            f = rows[i][c]
            if i != r and f != 0:
                rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
                if track is not None:
                    track[i] = [x - f * y for x, y in zip(track[i], trow)]
        pivots.append(c)
        r += 1
    return pivots


def rref_with_transform(M: Mat) -> RowEchelon:
    """Reduced row-echelon form ``R`` together with a regular ``E`` such that ``E @ M == R``."""
    rows = M.tolist()
    track = Mat.identity(M.rows).tolist()
    pivots = _eliminate(rows, track)
    return RowEchelon(Mat(rows, cols=M.cols), Mat(track, cols=M.rows), len(pivots), tuple(pivots))


def rref(M: Mat) -> tuple[Mat, tuple[int, ...]]:
    rows = M.tolist()
    pivots = _eliminate(rows, None)
    return Mat(rows, cols=M.cols), tuple(pivots)


def rank(M: Mat) -> int:
    return len(_eliminate(M.tolist(), None))


def inverse(M: Mat) -> Mat | Outcome:
    """Exact inverse, or ``NOT_REGULAR`` for singular input.

    Raises :class:`ShapeError` for non-square matrices.
    """
    if not M.is_square():
        raise ShapeError(f"inverse of non-square {M.rows}x{M.cols} matrix")
    red = rref_with_transform(M)
    if red.rank < M.rows:
        return NOT_REGULAR
    return red.E


@dataclass(frozen=True)
class AffineSet:
    """``{particular + sum t_i * basis[i]}`` in column-vector coordinates."""

    particular: Mat
    basis: tuple[Mat, ...]
    ambient_dim: int

    @property
    def dim(self) -> int:
        return len(self.basis)

    def point(self, coeffs: Sequence[ScalarLike]) -> Mat:
        if len(coeffs) != self.dim:
            raise ValueError(f"expected {self.dim} coefficients, got {len(coeffs)}")
        x = self.particular
        for c, b in zip(coeffs, self.basis):
            x = x + scale(c, b)
        return x

    def spanning_points(self) -> list[Mat]:
        """Affinely spanning points: the particular solution and particular + each basis vector."""
        return [self.particular] + [self.particular + b for b in self.basis]

    def contains(self, x: Mat) -> bool:
        if x.shape != (self.ambient_dim, 1):
            raise ShapeError(f"point of shape {x.rows}x{x.cols} in a {self.ambient_dim}-dimensional set")
        d = x - self.particular
        if not self.basis:
            return d.is_zero()
        return solve_affine(hstack(*self.basis), d) is not INCONSISTENT


def solve_affine(M: Mat, v: Mat) -> AffineSet | Outcome:
    """All solutions of ``M x = v``, or ``INCONSISTENT``."""
    if v.cols != 1 or v.rows != M.rows:
        raise ShapeError(f"right-hand side must be a {M.rows}x1 column, got {v.rows}x{v.cols}")
    n = M.cols
    aug = [list(r) + [b[0]] for r, b in zip(M, v)]
    pivots = _eliminate(aug, None)
    if pivots and pivots[-1] == n:
        return INCONSISTENT
    zero, one = Fraction(0), Fraction(1)
    x = [zero] * n
    for i, c in enumerate(pivots):
        x[c] = aug[i][n]
    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        b = [zero] * n
        b[f] = one
        for i, c in enumerate(pivots):
            b[c] = -aug[i][f]
        basis.append(Mat.column(b))
    return AffineSet(Mat.column(x), tuple(basis), n)


def null_space(M: Mat) -> list[Mat]:
    sol = solve_affine(M, Mat.zeros(M.rows, 1))
    assert sol is not INCONSISTENT
    return list(sol.basis)


def column_space_basis(M: Mat) -> list[Mat]:
    """Basis of the column space: nonzero rows of ``rref(M.T)`` as columns."""
    R, pivots = rref(M.T)
    return [Mat.column(R.row(i)) for i in range(len(pivots))]


def parse_matrix(text: str, source: str = "<string>") -> Mat:
    """Parse the line-oriented matrix format.

    One row per line, whitespace-separated entries, each an optionally signed
    integer or ``p/q``.  Blank lines and lines starting with ``#`` are skipped.
    """
    rows: list[list[Fraction]] = []
    width = None
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        row = []
        for tok in s.split():
            if not _ENTRY_RE.match(tok):
                raise MatrixParseError(source, lineno, f"bad entry {tok!r}")
            try:
                row.append(Fraction(tok))
            except ZeroDivisionError:
                raise MatrixParseError(source, lineno, f"zero denominator in {tok!r}") from None
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise MatrixParseError(source, lineno, f"row has {len(row)} entries, expected {width}")
        rows.append(row)
    if not rows:
        raise MatrixParseError(source, 0, "no matrix rows found")
    return Mat(rows)


def read_matrix(path: str | Path) -> Mat:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise MatrixParseError(str(path), 0, exc.strerror or str(exc)) from None
    return parse_matrix(text, str(path))


def format_matrix(M: Mat, align: bool = False) -> str:
    cells = [[str(x) for x in r] for r in M]
    if align and cells:
        width = max((len(c) for r in cells for c in r), default=0)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)
    return "\n".join(" ".join(r) for r in cells)
