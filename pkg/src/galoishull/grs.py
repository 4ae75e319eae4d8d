"""Generalized Reed-Solomon codes and their extended versions.

A code is stored by its evaluation points ``a``, column multipliers ``v``,
dimension ``k`` and an ``extended`` flag.  The extended code appends one
coordinate carrying the coefficient of ``x^(k-1)``; it is always the last
column.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Sequence

from . import poly
from .errors import (
    DegreeTooHighError,
    DuplicatePointsError,
    ExtendedUnsupportedError,
    InvalidCodeError,
    TooLargeForExactError,
    ZeroMultiplierError,
)
from .field import FieldCtx, FieldElement, field_from_json
from .linalg import Matrix

EXACT_LENGTH_GUARD = 22


def u_vector_codes(F: FieldCtx, a: Sequence[int]) -> list[int]:
    """``u_i = prod_{j != i} (a_i - a_j)^-1`` for distinct points ``a``."""
    if len(set(a)) != len(a):
        raise DuplicatePointsError("evaluation points are not distinct")
    out = []
    for i, ai in enumerate(a):
        d = F.prod(F.sub(ai, aj) for j, aj in enumerate(a) if j != i)
        out.append(F.inv(d))
    return out


def u_vector(F: FieldCtx, a: Sequence[int | FieldElement]) -> list[FieldElement]:
    codes = [F.check(x) if isinstance(x, FieldElement) else x for x in a]
    return [FieldElement(F, u) for u in u_vector_codes(F, codes)]


def psi(F: FieldCtx, B: Sequence[int], x: int) -> int:
    """``prod_{b in B} (x - b)``."""
    return F.prod(F.sub(x, b) for b in B)


def delta(F: FieldCtx, B: Sequence[int], x: int) -> int:
    """The formal derivative of ``psi(B, .)`` evaluated at ``x``."""
    return poly.evaluate(F, poly.derivative(F, poly.from_roots(F, B)), x)


@dataclass(frozen=True)
class GrsCode:
    ctx: FieldCtx
    a: tuple[int, ...]
    v: tuple[int, ...]
    k: int
    extended: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "v", tuple(self.v))
        n = len(self.a)
        if len(self.v) != n:
            raise InvalidCodeError(f"{n} points but {len(self.v)} multipliers")
        if n == 0 or n > self.ctx.q:
            raise InvalidCodeError(f"need 1 <= n <= q, got n={n}")
        if any(not 0 <= x < self.ctx.q for x in self.a + self.v):
            raise InvalidCodeError("element code out of range")
        if len(set(self.a)) != n:
            raise DuplicatePointsError("evaluation points are not distinct")
        if any(x == 0 for x in self.v):
            raise ZeroMultiplierError("multiplier zero")
        if not 1 <= self.k <= n:
            raise InvalidCodeError(f"need 1 <= k <= n, got k={self.k}, n={n}")

    @property
    def n(self) -> int:
        """Number of evaluation points."""
        return len(self.a)

    @property
    def length(self) -> int:
        return self.n + 1 if self.extended else self.n

    def u(self) -> list[int]:
        return u_vector_codes(self.ctx, self.a)

    def generator_matrix(self) -> Matrix:
        F = self.ctx
        rows = []
        powers = [1] * self.n
        for j in range(self.k):
            row = [F.mul(vi, pw) for vi, pw in zip(self.v, powers)]
            if self.extended:
                row.append(1 if j == self.k - 1 else 0)
            rows.append(row)
            powers = [F.mul(pw, ai) for pw, ai in zip(powers, self.a)]
        return Matrix(F, rows, self.length)

    def encode(self, f: Sequence[int]) -> list[int]:
        """Codeword of the message polynomial ``f`` (coefficient codes)."""
        F = self.ctx
        f = poly.trim(f)
        if len(f) > self.k:
            raise DegreeTooHighError(f"deg f = {len(f) - 1} exceeds k - 1 = {self.k - 1}")
        word = [F.mul(vi, poly.evaluate(F, f, ai)) for ai, vi in zip(self.a, self.v)]
        if self.extended:
            word.append(poly.coeff(f, self.k - 1))
        return word

    def with_k(self, k: int) -> GrsCode:
        return GrsCode(self.ctx, self.a, self.v, k, self.extended)

    def to_json(self) -> dict:
        F = self.ctx
        return {
            "field": F.to_json(),
            "a": [list(F.coeffs(x)) for x in self.a],
            "v": [list(F.coeffs(x)) for x in self.v],
            "k": self.k,
            "extended": self.extended,
        }

    @classmethod
    def from_json(cls, data: dict) -> GrsCode:
        F = field_from_json(data["field"])
        a = [F.from_coeffs(c) for c in data["a"]]
        v = [F.from_coeffs(c) for c in data["v"]]
        return cls(F, a, v, int(data["k"]), bool(data.get("extended", False)))


def generator_matrix(code: GrsCode) -> Matrix:
    return code.generator_matrix()


def encode(code: GrsCode, f: Sequence[int]) -> list[int]:
    return code.encode(f)


def _all_subsets_full_rank(G: Matrix, size: int) -> bool:
    for cols in combinations(range(G.ncols), size):
        if G.columns(cols).rank() < size:
            return False
    return True


def min_distance(G: Matrix) -> int:
    """Exact minimum distance of the code spanned by the full-rank rows of ``G``.

    ``d = n - k + 1`` when every ``k`` columns are independent.  Otherwise
    ``d = n - (largest number of columns inside one hyperplane)``; an optimal
    hyperplane is spanned by ``k - 1`` independent columns, so those are
    enumerated.
    """
    k, n = G.nrows, G.ncols
    if k == 0:
        raise InvalidCodeError("the zero code has no minimum distance")
    if _all_subsets_full_rank(G, k):
        return n - k + 1
    if k == 1:
        return sum(1 for x in G.rows[0] if x)
    best = 0
    for cols in combinations(range(n), k - 1):
        sub = G.columns(cols)
        if sub.rank() < k - 1:
            continue
        span = sub.transpose()
        inside = sum(1 for j in range(n) if span.contains_row([r[j] for r in G.rows]))
        best = max(best, inside)
    return n - best


class MdsCheck(NamedTuple):
    mds: bool
    exhaustive: bool
    distance: int

    @property
    def method(self) -> str:
        return "exhaustive" if self.exhaustive else "structural"


def min_distance_exact(code: GrsCode, guard: int = EXACT_LENGTH_GUARD) -> int:
    if code.length > guard:
        raise TooLargeForExactError(f"length {code.length} exceeds exact-check guard {guard}")
    return min_distance(code.generator_matrix())


def check_mds(code: GrsCode, guard: int = EXACT_LENGTH_GUARD) -> MdsCheck:
    """MDS status; exhaustive within the guard, structural beyond it.

    The structural verdict relies on the code being an honest (extended) GRS
    code, which :class:`GrsCode` validation already guarantees.
    """
    singleton = code.length - code.k + 1
    if code.length <= guard:
        d = min_distance_exact(code, guard)
        return MdsCheck(d == singleton, True, d)
    return MdsCheck(True, False, singleton)


def is_mds(code: GrsCode, guard: int = EXACT_LENGTH_GUARD) -> bool:
    return check_mds(code, guard).mds


def dual_multipliers(code: GrsCode) -> list[int]:
    """Multipliers ``w`` with ``GRS_k(a, v)^perp = GRS_{n-k}(a, w)``."""
    if code.extended:
        raise ExtendedUnsupportedError("dual multipliers are only defined for plain GRS codes")
    if not 1 <= code.k <= code.n - 1:
        raise InvalidCodeError(f"need 1 <= k <= n-1, got k={code.k}")
    F = code.ctx
    return [F.div(ui, vi) for ui, vi in zip(code.u(), code.v)]

