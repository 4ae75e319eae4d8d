"""Entanglement-assisted quantum code parameters derived from hull dimensions.

The symbolic side (:func:`param_table`) is pure integer arithmetic and never
builds a field, so large-scale lengths cost nothing.  The measured side
(:func:`derive_eaqecc`, :func:`rank_formula_c`) works on concrete codes.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Iterator, NamedTuple

from .errors import InvalidRangesError
from .linalg import Matrix

if TYPE_CHECKING:
    from .grs import GrsCode

THEOREMS = ("5.5", "5.6", "5.7", "5.8")
CSV_COLUMNS = ("theorem", "p", "h_or_m", "e", "t", "r", "n", "k", "l", "kq", "d", "c", "mds")


def k_upper_bound(pe: int, n: int) -> int:
    """``floor((pe + n - 1) / (pe + 1))``."""
    return (pe + n - 1) // (pe + 1)


class SingletonResult(NamedTuple):
    status: str  # "satisfied", "violated" or "not-applicable"
    equality: bool

    @property
    def mds(self) -> bool:
        return self.status == "satisfied" and self.equality


def singleton_check(n: int, kq: int, d: int, c: int) -> SingletonResult:
    """Quantum Singleton bound ``n + c - kq >= 2(d - 1)``, applicable when ``2d <= n + 2``."""
    if 2 * d > n + 2:
        return SingletonResult("not-applicable", False)
    lhs, rhs = n + c - kq, 2 * (d - 1)
    return SingletonResult("satisfied" if lhs >= rhs else "violated", lhs == rhs)


@dataclass(frozen=True)
class EaqeccParams:
    n: int
    k: int
    d: int
    c: int
    p: int
    h: int
    mds: bool

    @classmethod
    def build(cls, n: int, k: int, d: int, c: int, p: int, h: int) -> EaqeccParams:
        return cls(n, k, d, c, p, h, singleton_check(n, k, d, c).mds)

    def singleton(self) -> SingletonResult:
        return singleton_check(self.n, self.k, self.d, self.c)

    def __str__(self) -> str:
        tag = " MDS" if self.mds else ""
        return f"[[{self.n},{self.k},{self.d};{self.c}]]_{self.p}^{self.h}{tag}"

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "d": self.d, "c": self.c, "p": self.p, "h": self.h, "mds": self.mds}


@dataclass(frozen=True)
class BigParamRow:
    theorem: str  # e.g. "5.5(i)" or "5.5(ii)"
    p: int
    h_or_m: int
    e: int
    t: int | None
    r: int | None
    n: int  # quantum code length
    k: int  # classical dimension
    l: int  # hull dimension (l' for part ii)
    kq: int
    d: int
    c: int
    mds: bool

    def as_strings(self) -> dict[str, str]:
        out = {}
        for col in CSV_COLUMNS:
            val = getattr(self, col)
            if isinstance(val, bool):
                out[col] = "true" if val else "false"
            else:
                out[col] = "" if val is None else str(val)
        return out

    def as_json(self) -> dict:
        out: dict = {}
        for col in CSV_COLUMNS:
            val = getattr(self, col)
            out[col] = val if isinstance(val, bool) or val is None else str(val)
        return out

    def as_params(self) -> EaqeccParams:
        h = self.h_or_m * self.e if self.theorem.startswith("5.5") else self.h_or_m
        return EaqeccParams(self.n, self.kq, self.d, self.c, self.p, h, self.mds)


# -- measured parameters ---------------------------------------------------------


def rank_formula_c(code: GrsCode | Matrix, e: int, exponent_e: int | None = None) -> int:
    """``rank(H H^{T_e})`` with ``H`` the RREF parity-check matrix of ``code``.

    ``M^{T_e}`` is the transpose of the entrywise ``p^(h-e)`` power.
    ``exponent_e`` overrides the entrywise exponent (``p^exponent_e``) to
    test the other convention.
    """
    G = code if isinstance(code, Matrix) else code.generator_matrix()
    H = G.null_space()
    if H.nrows == 0:
        return 0
    h = G.ctx.h
    power = (h - e) % h if exponent_e is None else exponent_e % h
    return (H @ H.frobenius(power).transpose()).rank()


def rank_identity_conventions(code: GrsCode | Matrix, e: int) -> dict[str, bool]:
    """Which hull the literal rank formula matches, for both exponent conventions."""
    from .hull import hull_dim

    G = code if isinstance(code, Matrix) else code.generator_matrix()
    n, k, h = G.ncols, G.nrows, G.ctx.h
    hull_e = hull_dim(code, e).hull_dim
    hull_he = hull_dim(code, (h - e) % h).hull_dim
    literal = rank_formula_c(code, e)
    swapped = rank_formula_c(code, e, exponent_e=e)
    return {
        "literal=hull_e": literal == n - k - hull_e,
        "literal=hull_h-e": literal == n - k - hull_he,
        "swapped=hull_e": swapped == n - k - hull_e,
        "swapped=hull_h-e": swapped == n - k - hull_he,
    }


def derive_eaqecc(code: GrsCode, e: int, exact_guard: int | None = None) -> tuple[EaqeccParams, EaqeccParams]:
    """Both quantum codes attached to ``code``: from ``Hull_e`` and from ``Hull_{h-e}``.

    Distances are exact within the guard; beyond it the MDS structure of the
    code gives ``d = n - k + 1`` and ``d_dual = k + 1``.
    """
    from .grs import EXACT_LENGTH_GUARD, check_mds, min_distance
    from .hull import galois_dual_basis, hull_dim

    guard = EXACT_LENGTH_GUARD if exact_guard is None else exact_guard
    F = code.ctx
    n, k, h = code.length, code.k, F.h
    e %= h
    l = hull_dim(code, e).hull_dim
    l_dual = hull_dim(code, (h - e) % h).hull_dim
    mds = check_mds(code, guard)
    d = mds.distance
    if n <= guard:
        dual = galois_dual_basis(code.generator_matrix(), e)
        d_dual = min_distance(dual) if dual.nrows else n + 1
    else:
        d_dual = k + 1
    primal = EaqeccParams.build(n, k - l, d, n - k - l, F.p, h)
    dual_side = EaqeccParams.build(n, n - k - l_dual, d_dual, k - l_dual, F.p, h)
    return primal, dual_side


# -- symbolic tables -------------------------------------------------------------


@dataclass(frozen=True)
class _Family:
    theorem: str
    p: int
    h: int
    e: int
    h_or_m: int
    t: int | None
    r: int | None
    n: int  # classical seed length (points), quantum length is n or n + 1
    extended: bool
    l_max_offset: int  # l <= k - 1 (extended families) or l <= k (5.7)


def _family(theorem: str, params: dict) -> _Family:
    def need(name: str) -> int:
        if params.get(name) is None:
            raise InvalidRangesError(f"theorem {theorem} needs parameter {name}")
        return int(params[name])

    if theorem == "5.5":
        p, m, e, t, r = need("p"), need("m"), need("e"), need("t"), need("r")
        if m < 2 or m % 2:
            raise InvalidRangesError(f"m must be even (got m={m})")
        if t < 1 or (p**e - 1) % t:
            raise InvalidRangesError(f"t must divide p^e - 1 = {p**e - 1} (got t={t})")
        if not 0 <= r <= m - 1:
            raise InvalidRangesError(f"r must satisfy r <= m-1 = {m - 1} (got r={r})")
        return _Family(theorem, p, e * m, e, m, t, r, t * p ** (e * r), True, 1)
    if theorem == "5.6":
        p, h, e, t = need("p"), need("h"), need("e"), need("t")
        if e < 1 or h % (2 * e):
            raise InvalidRangesError(f"2e must divide h (got e={e}, h={h})")
        if not 1 <= t <= p**e:
            raise InvalidRangesError(f"t must satisfy 1 <= t <= p^e = {p**e} (got t={t})")
        return _Family(theorem, p, h, e, h, t, None, t * p ** (h - e), True, 1)
    if theorem in ("5.7", "5.8"):
        p, h, e, n = need("p"), need("h"), need("e"), need("n")
        if e < 1 or h % e or (h // e) % 2 == 0:
            raise InvalidRangesError(f"h/e must be an odd integer (got h={h}, e={e})")
        if not 2 <= n <= p**h:
            raise InvalidRangesError(f"n must satisfy 2 <= n <= q (got n={n})")
        ext = theorem == "5.8"
        return _Family(theorem, p, h, e, h, None, None, n, ext, 1 if ext else 0)
    raise InvalidRangesError(f"unknown theorem {theorem!r}; expected one of {', '.join(THEOREMS)}")


def family_bounds(theorem: str, params: dict) -> dict[str, int]:
    """Code length and the dimension bounds of both parts."""
    fam = _family(theorem, params)
    return {
        "n": fam.n + 1 if fam.extended else fam.n,
        "k_max_i": k_upper_bound(fam.p**fam.e, fam.n),
        "k_max_ii": k_upper_bound(fam.p ** (fam.h - fam.e), fam.n),
    }


def param_table(
    theorem: str,
    params: dict,
    k_range: Iterable[int],
    l_range: Iterable[int] | None = None,
    parts: Iterable[str] = ("i", "ii"),
) -> Iterator[BigParamRow]:
    """Stream EAQECC rows for one theorem.

    Part (i) gives ``[[N, k-l, N-k+1; N-k-l]]`` and part (ii) the
    ``[[N, N-k-l', k+1; k-l']]`` family, where ``N`` is the quantum length
    (``n + 1`` for extended constructions).  ``l_range`` defaults to every
    admissible value and is clipped to ``0 <= l <= k - 1`` (``<= k`` for 5.7).
    """
    fam = _family(theorem, params)
    ks = list(k_range)
    ls = None if l_range is None else sorted(set(l_range))
    if ls is not None and ls and ls[0] < 0:
        raise InvalidRangesError(f"l must be >= 0 (got {ls[0]})")
    N = fam.n + 1 if fam.extended else fam.n
    bounds = {
        "i": k_upper_bound(fam.p**fam.e, fam.n),
        "ii": k_upper_bound(fam.p ** (fam.h - fam.e), fam.n),
    }
    parts = list(parts)
    for part in parts:
        if part not in bounds:
            raise InvalidRangesError(f"unknown part {part!r}")
        for k in ks:
            if not 1 <= k <= bounds[part]:
                raise InvalidRangesError(
                    f"part ({part}) requires 1 <= k <= {bounds[part]} (got k={k})"
                )
    for part in parts:
        for k in ks:
            l_top = k - fam.l_max_offset
            for l in (range(l_top + 1) if ls is None else [x for x in ls if x <= l_top]):
                if part == "i":
                    kq, d, c = k - l, N - k + 1, N - k - l
                else:
                    kq, d, c = N - k - l, k + 1, k - l
                mds = singleton_check(N, kq, d, c).mds
                yield BigParamRow(
                    f"{theorem}({part})", fam.p, fam.h_or_m, fam.e, fam.t, fam.r, N, k, l, kq, d, c, mds
                )


def rows_to_csv(rows: Iterable[BigParamRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.as_strings())
    return buf.getvalue()


def rows_to_json(rows: Iterable[BigParamRow]) -> str:
    return json.dumps([row.as_json() for row in rows], indent=1)
