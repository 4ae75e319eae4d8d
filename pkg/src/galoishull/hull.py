"""e-Galois inner products, duals and hulls.

For ``0 <= e < h`` the e-Galois inner product is ``sum x_i * y_i^(p^e)``;
``e = 0`` is the Euclidean product and ``e = h/2`` (h even) the Hermitian one.
Every hull dimension here is computed from an explicit RREF basis of the dual
and an honest row-space intersection, then cross-checked against the rank of
``G^(p^e) G^T``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import poly
from .errors import DegreeTooHighError, InvalidParamsError, LengthMismatchError, RankDeficientError
from .field import FieldCtx
from .grs import GrsCode
from .linalg import Matrix, row_space_intersection_dim


@dataclass(frozen=True)
class HullReport:
    e: int
    hull_dim: int
    dual_dim: int
    method_agreement: bool

    def to_json(self) -> dict:
        return {"e": self.e, "hull_dim": self.hull_dim, "dual_dim": self.dual_dim, "agreement": self.method_agreement}

    @classmethod
    def from_json(cls, data: dict) -> HullReport:
        return cls(int(data["e"]), int(data["hull_dim"]), int(data["dual_dim"]), bool(data["agreement"]))


def galois_inner(F: FieldCtx, x: Sequence[int], y: Sequence[int], e: int) -> int:
    if len(x) != len(y):
        raise LengthMismatchError(f"vectors of length {len(x)} and {len(y)}")
    return F.sum(F.mul(a, F.frobenius(b, e)) for a, b in zip(x, y))


def _generator(code: GrsCode | Matrix) -> Matrix:
    return code.generator_matrix() if isinstance(code, GrsCode) else code


def galois_dual_basis(G: Matrix, e: int) -> Matrix:
    """RREF basis of the e-Galois dual of the row space of ``G``."""
    e %= G.ctx.h
    if G.rank() != G.nrows:
        raise RankDeficientError(f"generator has rank {G.rank()} < {G.nrows} rows")
    return G.frobenius(e).null_space()


def hull_dim(code: GrsCode | Matrix, e: int) -> HullReport:
    G = _generator(code)
    e %= G.ctx.h
    dual = galois_dual_basis(G, e)
    by_intersection = row_space_intersection_dim(G, dual)
    by_rank = G.nrows - (G.frobenius(e) @ G.transpose()).rank()
    return HullReport(e, by_intersection, dual.nrows, by_intersection == by_rank)


def euclidean_hull_dim(code: GrsCode | Matrix) -> int:
    """Euclidean hull dimension straight from ``G`` and its null space."""
    G = _generator(code)
    return row_space_intersection_dim(G, G.null_space())


def hermitian_hull_dim(code: GrsCode | Matrix) -> HullReport:
    G = _generator(code)
    if G.ctx.h % 2:
        raise InvalidParamsError(f"Hermitian hull needs even h, got h={G.ctx.h}")
    return hull_dim(G, G.ctx.h // 2)


def in_hull(code: GrsCode | Matrix, word: Sequence[int], e: int) -> bool:
    """Brute-force subspace membership of ``word`` in ``C`` and ``C^(perp_e)``."""
    G = _generator(code)
    return G.contains_row(word) and galois_dual_basis(G, e).contains_row(word)


def lemma1_membership(code: GrsCode, f: Sequence[int], e: int) -> list[int] | None:
    """Polynomial certificate that ``encode(f)`` lies in the e-Galois hull.

    Returns the ``g`` with ``v_i^(p^e+1) f(a_i)^(p^e) = u_i g(a_i)`` for all i,
    ``deg g <= n-k-1`` (plain) or ``deg g <= n-k`` together with
    ``f_{k-1}^(p^e) = -g_{n-k}`` (extended); ``None`` when no such ``g`` exists.
    """
    F = code.ctx
    f = poly.trim(f)
    if len(f) > code.k:
        raise DegreeTooHighError(f"deg f = {len(f) - 1} exceeds k - 1 = {code.k - 1}")
    e %= F.h
    u = code.u()
    w = F.p**e + 1
    targets = [
        F.div(F.mul(F.pow(vi, w), F.frobenius(poly.evaluate(F, f, ai), e)), ui)
        for ai, vi, ui in zip(code.a, code.v, u)
    ]
    g = poly.interpolate(F, code.a, targets, u)
    n, k = code.n, code.k
    bound = n - k if code.extended else n - k - 1
    if poly.degree(g) > bound:
        return None
    if code.extended:
        lead = F.frobenius(poly.coeff(f, k - 1), e)
        if lead != F.neg(poly.coeff(g, n - k)):
            return None
    return g


def hull_basis(code: GrsCode | Matrix, e: int) -> Matrix:
    """RREF basis of the hull itself (used by reports and tests)."""
    G = _generator(code)
    dual = galois_dual_basis(G, e)
    # x in rowspace(G) ∩ rowspace(D)  <=>  x = yG = zD ; solve [G; -D]^T
    F = G.ctx
    stacked = Matrix(F, G.rows + [[F.neg(x) for x in r] for r in dual.rows], G.ncols)
    combos = stacked.transpose().null_space()
    vecs = []
    for c in combos.rows:
        y = c[: G.nrows]
        vecs.append([F.sum(F.mul(yi, r[j]) for yi, r in zip(y, G.rows)) for j in range(G.ncols)])
    if not vecs:
        return Matrix(F, [], G.ncols)
    return Matrix(F, vecs, G.ncols).row_basis()

