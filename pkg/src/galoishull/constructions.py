"""MDS (extended) GRS codes with e-Galois hulls of prescribed dimension.

Four constructions are provided:

* :func:`thm31_construct` -- points ``omega^j + V`` for an r-dimensional
  GF(p^e)-subspace ``V`` of GF(p^(em)), ``m`` even;
* :func:`thm32_construct` -- points taken from trace cosets
  ``{x : Tr(x) = b_i}`` with ``2e | h``;
* :func:`thm41_lift` / :func:`thm42_lift` -- lifts of Euclidean-orthogonal
  (extended) GRS codes when ``h/e`` is odd.

Each returns a :class:`~galoishull.grs.GrsCode` whose hull dimension is
checked against the requested ``l`` before it is handed back (unless
``verify=False``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .eaqecc import k_upper_bound
from .errors import (
    EDoesNotDivideHError,
    ExtendedSeedRequiredError,
    HOverENotOddError,
    InvalidParamsError,
    NormEquationFailedError,
    NotInEError,
    SeedInvalidWitnessError,
    VerificationError,
)
from .field import FieldCtx, extended_gcd, field_new
from .grs import EXACT_LENGTH_GUARD, GrsCode, check_mds, u_vector_codes
from .hull import hull_dim
from .linalg import Matrix

TRACE_SCAN_LIMIT = 1 << 20


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidParamsError(message)


@dataclass(frozen=True)
class Thm31Params:
    p: int
    e: int
    m: int
    t: int
    r: int
    k: int
    l: int

    @property
    def h(self) -> int:
        return self.e * self.m

    @property
    def q(self) -> int:
        return self.p**self.h

    @property
    def n(self) -> int:
        return self.t * self.p ** (self.e * self.r)

    @property
    def s(self) -> int:
        return self.k - 1 - self.l

    @property
    def k_bound(self) -> int:
        return k_upper_bound(self.p**self.e, self.n)

    def validate(self) -> None:
        p, e, m, t, r, k, l = self.p, self.e, self.m, self.t, self.r, self.k, self.l
        _require(p >= 3 and p % 2 == 1, f"p={p} must be an odd prime")
        _require(e >= 1, f"e={e} must be >= 1")
        _require(m >= 2 and m % 2 == 0, f"m must be even (got m={m})")
        _require(t >= 1 and (p**e - 1) % t == 0, f"t must divide p^e - 1 = {p**e - 1} (got t={t})")
        _require(0 <= r <= m - 1, f"r must satisfy 0 <= r <= m-1 = {m - 1} (got r={r})")
        _require(1 <= k <= self.k_bound, f"k must satisfy 1 <= k <= {self.k_bound} (got k={k})")
        _require(0 <= l <= k - 1, f"l must satisfy 0 <= l <= k-1 = {k - 1} (got l={l})")


@dataclass(frozen=True)
class Thm32Params:
    p: int
    h: int
    e: int
    t: int
    k: int
    l: int

    @property
    def q(self) -> int:
        return self.p**self.h

    @property
    def n(self) -> int:
        return self.t * self.p ** (self.h - self.e)

    @property
    def s(self) -> int:
        return self.k - 1 - self.l

    @property
    def k_bound(self) -> int:
        return k_upper_bound(self.p**self.e, self.n)

    def validate(self) -> None:
        p, h, e, t, k, l = self.p, self.h, self.e, self.t, self.k, self.l
        _require(p >= 3 and p % 2 == 1, f"p={p} must be an odd prime")
        _require(e >= 1 and h % (2 * e) == 0, f"2e must divide h (got e={e}, h={h})")
        _require(1 <= t <= p**e, f"t must satisfy 1 <= t <= p^e = {p**e} (got t={t})")
        _require(1 <= k <= self.k_bound, f"k must satisfy 1 <= k <= {self.k_bound} (got k={k})")
        _require(0 <= l <= k - 1, f"l must satisfy 0 <= l <= k-1 = {k - 1} (got l={l})")


@dataclass(frozen=True)
class EuclideanSeed:
    """Points and multipliers of a Euclidean-orthogonal (extended) GRS code.

    Plain seeds satisfy ``v_i^2 = lam * u_i``; extended seeds satisfy
    ``v_i^2 = -u_i`` and carry ``lam = None``.
    """

    ctx: FieldCtx
    a: tuple[int, ...]
    v: tuple[int, ...]
    lam: int | None
    extended: bool

    def witness_holds(self) -> bool:
        F = self.ctx
        u = u_vector_codes(F, self.a)
        if self.extended:
            rhs = [F.neg(ui) for ui in u]
        else:
            if not self.lam:
                return False
            rhs = [F.mul(self.lam, ui) for ui in u]
        return all(F.mul(vi, vi) == r for vi, r in zip(self.v, rhs))

    @classmethod
    def from_code(cls, code: GrsCode) -> EuclideanSeed:
        """Read a seed from a code file; ``lam`` is recovered from the first point."""
        F = code.ctx
        lam = None
        if not code.extended:
            u0 = u_vector_codes(F, code.a)[0]
            lam = F.div(F.mul(code.v[0], code.v[0]), u0)
        return cls(F, code.a, code.v, lam, code.extended)


# -- helpers shared by the constructions ------------------------------------------


def _alpha(F: FieldCtx, e: int) -> int:
    alpha = F.g
    if F.pow(alpha, F.p**e + 1) == 1:
        raise InvalidParamsError(f"no alpha with alpha^(p^e+1) != 1 in GF({F.q}) for e={e}")
    return alpha


def _scale_prefix(F: FieldCtx, v: Sequence[int], s: int, alpha: int) -> list[int]:
    return [F.mul(alpha, x) if i < s else x for i, x in enumerate(v)]


def _norm_root(F: FieldCtx, c: int, e: int) -> int:
    try:
        return F.solve_norm_equation(c, e)
    except NotInEError as exc:
        raise NormEquationFailedError(str(exc)) from exc


def verify_construction(code: GrsCode, e: int, l: int, guard: int = EXACT_LENGTH_GUARD) -> None:
    """Raise :class:`VerificationError` unless ``code`` has hull dimension ``l`` and is MDS."""
    report = hull_dim(code, e)
    if not report.method_agreement:
        raise VerificationError("hull dimension methods disagree")
    if report.hull_dim != l:
        raise VerificationError(f"hull dimension {report.hull_dim} != requested l={l}")
    if not check_mds(code, guard).mds:
        raise VerificationError("constructed code is not MDS")


# -- omega^j + V points -----------------------------------------------------------


def thm31_subspace(F: FieldCtx, e: int, r: int) -> list[int]:
    """``V = span_{GF(p^e)}(x, x^2, ..., x^r)`` in lexicographic order.

    ``x`` generates GF(p^h) over GF(p), so ``1, x, ..., x^(m-1)`` are
    independent over GF(p^e) and ``V`` meets GF(p^e) only in 0.
    """
    sub = F.subfield_elements(e)
    x = F.from_coeffs([0, 1])
    basis = [F.pow(x, i) for i in range(1, r + 1)]
    V = set()
    for cs in itertools.product(sub, repeat=r):
        V.add(F.sum(F.mul(c, b) for c, b in zip(cs, basis)))
    if len(V) != (F.p**e) ** r:
        raise VerificationError("subspace generators are dependent")
    if any(g and F.in_subfield(g, e) for g in V):
        raise VerificationError("V meets GF(p^e) nontrivially")
    return F.sorted_elements(V)


def thm31_points(F: FieldCtx, e: int, t: int, r: int) -> tuple[list[int], int, list[int]]:
    """Evaluation points ``omega^j + V`` (j ascending), plus ``omega`` and ``V``."""
    V = thm31_subspace(F, e, r)
    omega = F.find_element_of_order(t, e)
    a = [F.add(F.pow(omega, j), g) for j in range(t) for g in V]
    return a, omega, V


def thm31_b(F: FieldCtx, omega: int, t: int, V: Sequence[int]) -> int:
    """``prod_{0 != g in V} g * prod_{g in V} prod_{d=1}^{t-1} (1 + g - omega^d)``."""
    first = F.prod(g for g in V if g)
    second = F.prod(F.sub(F.add(1, g), F.pow(omega, d)) for g in V for d in range(1, t))
    return F.mul(first, second)


def thm31_construct(params: Thm31Params, verify: bool = True) -> GrsCode:
    params.validate()
    p, e, t, r = params.p, params.e, params.t, params.r
    F = field_new(p, params.h)
    a, omega, V = thm31_points(F, e, t, r)
    u = u_vector_codes(F, a)
    b = thm31_b(F, omega, t, V)
    # omega^(-j0 p^(er)) * b is prod_{j != i}(a_i - a_j), i.e. 1/u_i
    per = p ** (e * r)
    for i, ui in enumerate(u):
        j0 = i // len(V)
        if F.mul(ui, F.mul(F.pow(omega, -j0 * per), b)) != 1:
            raise VerificationError(f"closed form for u_{i} does not match")
    lam = b
    targets = [F.mul(lam, ui) for ui in u]
    if not all(x and F.in_subfield(x, e) for x in targets):
        raise VerificationError("lambda * u_i is not in GF(p^e)*")
    v = [_norm_root(F, x, e) for x in targets]
    v = _scale_prefix(F, v, params.s, _alpha(F, e))
    code = GrsCode(F, a, v, params.k, extended=True)
    if verify:
        verify_construction(code, e, params.l)
    return code


# -- trace cosets -----------------------------------------------------------------


def thm32_b_values(F: FieldCtx, e: int, t: int) -> list[int]:
    """``b_1 = 0`` followed by the ``t - 1`` smallest nonzero elements of GF(p^e)."""
    sub = [x for x in F.subfield_elements(e) if x]
    if t - 1 > len(sub):
        raise InvalidParamsError(f"t={t} exceeds p^e = {F.p**e}")
    return [0] + sub[: t - 1]


def _trace_preimage_linear(F: FieldCtx, e: int, b: int) -> list[int]:
    """``{x : Tr(x) = b}`` by solving the GF(p)-linear system in coordinates."""
    Fp = field_new(F.p, 1)
    basis = [F.from_coeffs([0] * i + [1]) for i in range(F.h)]
    images = [list(F.coeffs(F.trace(x, e))) for x in basis]
    M = Matrix(Fp, images, F.h)  # row i: coordinates of Tr(basis_i)
    target = list(F.coeffs(b))
    aug = Matrix(Fp, [list(col) + [tv] for col, tv in zip(zip(*M.rows), target)], F.h + 1)
    R, rank, pivots = aug.rref()
    if F.h in pivots:
        raise InvalidParamsError("trace target outside the subfield")
    x0 = [0] * F.h
    for row, pc in zip(R.rows[:rank], pivots):
        x0[pc] = row[F.h]
    kernel = M.transpose().null_space().rows
    base = F.from_coeffs(x0)
    out = []
    for cs in itertools.product(range(F.p), repeat=len(kernel)):
        vec = [sum(c * kv[j] for c, kv in zip(cs, kernel)) % F.p for j in range(F.h)]
        out.append(F.add(base, F.from_coeffs(vec)))
    return F.sorted_elements(out)


def trace_cosets(F: FieldCtx, e: int, bs: Sequence[int], scan_limit: int = TRACE_SCAN_LIMIT) -> list[list[int]]:
    """``T_i = {x in GF(q) : Tr(x) = b_i}``, each in lexicographic order."""
    if e <= 0 or F.h % e:
        raise EDoesNotDivideHError(f"e={e} does not divide h={F.h}")
    if F.q <= scan_limit:
        buckets: dict[int, list[int]] = {b: [] for b in bs}
        for x in F.elements():
            tr = F.trace(x, e)
            if tr in buckets:
                buckets[tr].append(x)
        return [F.sorted_elements(buckets[b]) for b in bs]
    return [_trace_preimage_linear(F, e, b) for b in bs]


def thm32_construct(params: Thm32Params, verify: bool = True) -> GrsCode:
    params.validate()
    p, h, e, t = params.p, params.h, params.e, params.t
    F = field_new(p, h)
    bs = thm32_b_values(F, e, t)
    cosets = trace_cosets(F, e, bs)
    a = [x for T in cosets for x in T]
    if len(a) != params.n:
        raise VerificationError(f"trace cosets cover {len(a)} points, expected {params.n}")
    u = u_vector_codes(F, a)
    for i, ui in enumerate(u):
        j0 = i // len(cosets[0])
        # prod_{j != j0} (Tr(a_i) - b_j) is prod_{j != i}(a_i - a_j), i.e. 1/u_i
        d = F.prod(F.sub(F.trace(a[i], e), bj) for j, bj in enumerate(bs) if j != j0)
        if F.mul(ui, d) != 1:
            raise VerificationError(f"closed form for u_{i} does not match")
        if not F.in_subfield(ui, e):
            raise VerificationError(f"u_{i} is not in GF(p^e)")
    v = [_norm_root(F, ui, e) for ui in u]
    v = _scale_prefix(F, v, params.s, _alpha(F, e))
    code = GrsCode(F, a, v, params.k, extended=True)
    if verify:
        verify_construction(code, e, params.l)
    return code


# -- lifts of Euclidean seeds -----------------------------------------------------


def lift_exponent(F: FieldCtx, e: int) -> int:
    """``mu`` with ``mu (p^e + 1) + nu (q - 1) = 2``, reduced mod ``q - 1``."""
    g, mu, _ = extended_gcd(F.p**e + 1, F.q - 1)
    if g != 2:
        raise VerificationError(f"gcd(p^e+1, q-1) = {g}, expected 2")
    return mu % (F.q - 1)


def _check_lift(seed: EuclideanSeed, e: int) -> FieldCtx:
    F = seed.ctx
    if e < 1 or F.h % e or (F.h // e) % 2 == 0:
        raise HOverENotOddError(f"h/e must be an odd integer (h={F.h}, e={e})")
    if len(seed.a) < 2:
        raise InvalidParamsError("seed needs at least two points")
    if not seed.witness_holds():
        kind = "v_i^2 = -u_i" if seed.extended else "v_i^2 = lambda*u_i"
        raise SeedInvalidWitnessError(f"seed violates {kind}")
    return F


def _lifted_multipliers(seed: EuclideanSeed, e: int) -> list[int]:
    F = seed.ctx
    mu = lift_exponent(F, e)
    v = [F.pow(x, mu) for x in seed.v]
    u = u_vector_codes(F, seed.a)
    w = F.p**e + 1
    for vi, ui in zip(v, u):
        want = F.neg(ui) if seed.extended else F.mul(seed.lam, ui)
        if F.pow(vi, w) != want:
            raise VerificationError("lifted multiplier fails v'^(p^e+1) identity")
    return v


def thm41_lift(seed: EuclideanSeed, e: int, k: int, l: int, verify: bool = True) -> GrsCode:
    if seed.extended:
        raise InvalidParamsError("Theorem 4.1 lift takes a plain (non-extended) seed")
    F = _check_lift(seed, e)
    bound = k_upper_bound(F.p**e, len(seed.a))
    _require(1 <= k <= bound, f"k must satisfy 1 <= k <= {bound} (got k={k})")
    _require(0 <= l <= k, f"l must satisfy 0 <= l <= k = {k} (got l={l})")
    v = _lifted_multipliers(seed, e)
    v = _scale_prefix(F, v, k - l, _alpha(F, e))
    code = GrsCode(F, seed.a, v, k, extended=False)
    if verify:
        verify_construction(code, e, l)
    return code


def thm42_lift(seed: EuclideanSeed, e: int, k: int, l: int, verify: bool = True) -> GrsCode:
    if not seed.extended:
        raise ExtendedSeedRequiredError("Theorem 4.2 lift needs an extended seed (v_i^2 = -u_i)")
    F = _check_lift(seed, e)
    bound = k_upper_bound(F.p**e, len(seed.a))
    _require(1 <= k <= bound, f"k must satisfy 1 <= k <= {bound} (got k={k})")
    _require(0 <= l <= k - 1, f"l must satisfy 0 <= l <= k-1 = {k - 1} (got l={l})")
    v = _lifted_multipliers(seed, e)
    v = _scale_prefix(F, v, k - l - 1, _alpha(F, e))
    code = GrsCode(F, seed.a, v, k, extended=True)
    if verify:
        verify_construction(code, e, l)
    return code


# -- seed finders -----------------------------------------------------------------


def find_euclidean_seed(F: FieldCtx, a: Sequence[int], extended: bool) -> EuclideanSeed | None:
    """Multipliers making ``GRS(a, v)`` (or its extension) Euclidean-orthogonal, if any exist."""
    u = u_vector_codes(F, a)
    if extended:
        rhs = [F.neg(ui) for ui in u]
        lam = None
    else:
        chars = {F.is_square(ui) for ui in u}
        if len(chars) != 1:
            return None
        lam = 1 if chars.pop() else F.g  # g is never a square
        rhs = [F.mul(lam, ui) for ui in u]
    roots = [F.sqrt(x) for x in rhs]
    if any(r is None for r in roots):
        return None
    return EuclideanSeed(F, tuple(a), tuple(roots), lam, extended)


def mu_n_seed(F: FieldCtx, n: int) -> EuclideanSeed:
    """Plain seed on the n-th roots of unity ``zeta^0, ..., zeta^(n-1)``."""
    if n < 2 or (F.q - 1) % n:
        raise InvalidParamsError(f"n={n} must divide q-1={F.q - 1} and be >= 2")
    zeta = F.find_element_of_order(n)
    a = [F.pow(zeta, i) for i in range(n)]
    seed = find_euclidean_seed(F, a, extended=False)
    if seed is None:
        raise InvalidParamsError(f"mu_{n} in GF({F.q}) admits no Euclidean seed")
    return seed


def full_field_seed(F: FieldCtx) -> EuclideanSeed:
    """Extended seed on every field element with ``v = 1`` (all ``u_i = -1``)."""
    seed = find_euclidean_seed(F, F.sorted_elements(F.elements()), extended=True)
    if seed is None:
        raise VerificationError("full-field seed failed: u_i != -1")
    return seed
