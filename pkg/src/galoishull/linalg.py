"""Dense exact linear algebra over GF(q).

:class:`Matrix` stores element codes (see :mod:`galoishull.field`) row-major
and is treated as an immutable value: every operation returns a new matrix.
"""

from __future__ import annotations

from random import Random
from typing import Iterable, Sequence

from .errors import ColsMismatchError, DimensionMismatchError, FieldMismatchError
from .field import FieldCtx, FieldElement


class Matrix:
    __slots__ = ("ctx", "rows", "nrows", "ncols")

    def __init__(self, ctx: FieldCtx, rows: Iterable[Sequence[int]], ncols: int | None = None) -> None:
        rows = [list(r) for r in rows]
        if ncols is None:
            if not rows:
                raise DimensionMismatchError("column count needed for an empty matrix")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatchError("ragged rows")
        self.ctx = ctx
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def zeros(cls, ctx: FieldCtx, nrows: int, ncols: int) -> Matrix:
        return cls(ctx, [[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> Matrix:
        return cls(ctx, [[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def random(cls, ctx: FieldCtx, nrows: int, ncols: int, rng: Random) -> Matrix:
        return cls(ctx, [[rng.randrange(ctx.q) for _ in range(ncols)] for _ in range(nrows)], ncols)

    @classmethod
    def from_elements(cls, rows: Sequence[Sequence[FieldElement]]) -> Matrix:
        ctx = rows[0][0].ctx
        return cls(ctx, [[ctx.check(x) for x in r] for r in rows])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> FieldElement:
        i, j = ij
        return FieldElement(self.ctx, self.rows[i][j])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Matrix)
            and self.ctx == other.ctx
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols} over GF({self.ctx.q}))"

    def _same_field(self, other: Matrix) -> None:
        if self.ctx != other.ctx:
            raise FieldMismatchError("matrices over different fields")

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def transpose(self) -> Matrix:
        if not self.nrows:
            return Matrix(self.ctx, [[] for _ in range(self.ncols)], 0)
        return Matrix(self.ctx, [list(c) for c in zip(*self.rows)], self.nrows)

    @property
    def T(self) -> Matrix:
        return self.transpose()

    def __matmul__(self, other: Matrix) -> Matrix:
        self._same_field(other)
        if self.ncols != other.nrows:
            raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        F = self.ctx
        cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        out = []
        for r in self.rows:
            out.append([F.sum(F.mul(a, b) for a, b in zip(r, c) if a and b) for c in cols])
        return Matrix(F, out, other.ncols)

    def vstack(self, other: Matrix) -> Matrix:
        self._same_field(other)
        if self.ncols != other.ncols:
            raise ColsMismatchError(f"{self.ncols} != {other.ncols} columns")
        return Matrix(self.ctx, self.rows + other.rows, self.ncols)

    def columns(self, idx: Sequence[int]) -> Matrix:
        return Matrix(self.ctx, [[r[j] for j in idx] for r in self.rows], len(idx))

    def frobenius(self, e: int) -> Matrix:
        """Entrywise ``m_ij^(p^e)``."""
        F = self.ctx
        return Matrix(F, [[F.frobenius(a, e) for a in r] for r in self.rows], self.ncols)

    def rref(self) -> tuple[Matrix, int, list[int]]:
        """Reduced row echelon form, rank and pivot columns.

        Zero rows are kept at the bottom so the shape is preserved.
        """
        F = self.ctx
        rows = [list(r) for r in self.rows]
        pivots: list[int] = []
        r = 0
        for c in range(self.ncols):
            if r == len(rows):
                break
            piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = F.inv(rows[r][c])
            if inv != 1:
                rows[r] = [F.mul(inv, a) for a in rows[r]]
            prow = rows[r]
            for i in range(len(rows)):
                f = rows[i][c]
                if i != r and f:
                    nf = F.neg(f)
                    row = rows[i]
                    rows[i] = [
                        F.add(a, F.mul(nf, b)) if b else a for a, b in zip(row, prow)
                    ]
            pivots.append(c)
            r += 1
        return Matrix(F, rows, self.ncols), r, pivots

    def rank(self) -> int:
        return self.rref()[1]

    def row_basis(self) -> Matrix:
        """RREF basis of the row space (zero rows dropped)."""
        R, rank, _ = self.rref()
        return Matrix(self.ctx, R.rows[:rank], self.ncols)

    def null_space(self) -> Matrix:
        """RREF basis of ``{x : M x^T = 0}``."""
        F = self.ctx
        R, rank, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        basis = []
        for fc in free:
            v = [0] * self.ncols
            v[fc] = 1
            for i, pc in enumerate(pivots):
                v[pc] = F.neg(R.rows[i][fc])
            basis.append(v)
        return Matrix(F, basis, self.ncols).row_basis() if basis else Matrix(F, [], self.ncols)

    def contains_row(self, vec: Sequence[int]) -> bool:
        """Whether ``vec`` lies in the row space."""
        return self.vstack(Matrix(self.ctx, [list(vec)], self.ncols)).rank() == self.rank()

    def to_json(self) -> dict:
        F = self.ctx
        return {
            "rows": self.nrows,
            "cols": self.ncols,
            "entries": [[list(F.coeffs(a)) for a in r] for r in self.rows],
        }


def rref(M: Matrix) -> tuple[Matrix, int, list[int]]:
    return M.rref()


def null_space(M: Matrix) -> Matrix:
    return M.null_space()


def matmul(A: Matrix, B: Matrix) -> Matrix:
    return A @ B


def transpose(M: Matrix) -> Matrix:
    return M.transpose()


def entrywise_frobenius(M: Matrix, e: int) -> Matrix:
    return M.frobenius(e)


def galois_transpose(M: Matrix, e: int) -> Matrix:
    """``M^{T_e}``: the transpose of the entrywise ``p^(h-e)`` power of ``M``."""
    return M.frobenius(M.ctx.h - e).transpose()


def row_space_intersection_dim(A: Matrix, B: Matrix) -> int:
    if A.ncols != B.ncols:
        raise ColsMismatchError(f"{A.ncols} != {B.ncols} columns")
    return A.rank() + B.rank() - A.vstack(B).rank()
