"""Univariate polynomials over GF(q) as coefficient lists (constant term first).

Coefficients are field element codes.  The zero polynomial is ``[]``; every
function returns trimmed lists so ``len(f) - 1`` is the degree.
"""

from __future__ import annotations

from typing import Sequence

from .field import FieldCtx

Poly = list  # list[int] of element codes


def trim(f: Sequence[int]) -> list[int]:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f: Sequence[int]) -> int:
    """Degree, with ``-1`` for the zero polynomial."""
    return len(trim(f)) - 1


def coeff(f: Sequence[int], i: int) -> int:
    return f[i] if 0 <= i < len(f) else 0


def add(F: FieldCtx, f: Sequence[int], g: Sequence[int]) -> list[int]:
    n = max(len(f), len(g))
    return trim(F.add(coeff(f, i), coeff(g, i)) for i in range(n))


def sub(F: FieldCtx, f: Sequence[int], g: Sequence[int]) -> list[int]:
    n = max(len(f), len(g))
    return trim(F.sub(coeff(f, i), coeff(g, i)) for i in range(n))


def scale(F: FieldCtx, c: int, f: Sequence[int]) -> list[int]:
    return trim(F.mul(c, a) for a in f)


def mul(F: FieldCtx, f: Sequence[int], g: Sequence[int]) -> list[int]:
    f, g = trim(f), trim(g)
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
    return trim(out)


def evaluate(F: FieldCtx, f: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return acc


def from_roots(F: FieldCtx, roots: Sequence[int]) -> list[int]:
    """The monic polynomial ``prod (x - r)``."""
    out = [1]
    for r in roots:
        nr = F.neg(r)
        nxt = [0] * (len(out) + 1)
        for i, c in enumerate(out):
            nxt[i + 1] = F.add(nxt[i + 1], c)
            nxt[i] = F.add(nxt[i], F.mul(nr, c))
        out = nxt
    return out


def derivative(F: FieldCtx, f: Sequence[int]) -> list[int]:
    return trim(F.mul(F.scalar(i), c) for i, c in enumerate(f) if i > 0)


def frobenius_power(F: FieldCtx, f: Sequence[int], e: int) -> list[int]:
    """``f(x)^(p^e)``: in characteristic p this is ``sum c_i^(p^e) x^(i p^e)``."""
    step = F.p ** (e % F.h)
    f = trim(f)
    if not f:
        return []
    out = [0] * ((len(f) - 1) * step + 1)
    for i, c in enumerate(f):
        out[i * step] = F.frobenius(c, e)
    return out


def interpolate(F: FieldCtx, xs: Sequence[int], ys: Sequence[int], u: Sequence[int] | None = None) -> list[int]:
    """Lagrange interpolation through distinct ``xs``.

    ``u`` may carry the precomputed weights ``u_i = prod_{j != i} (x_i - x_j)^-1``.
    """
    if u is None:
        from .grs import u_vector_codes

        u = u_vector_codes(F, xs)
    full = from_roots(F, xs)
    out: list[int] = []
    for xi, yi, ui in zip(xs, ys, u):
        w = F.mul(yi, ui)
        if not w:
            continue
        # full / (x - xi) by synthetic division
        quo = [0] * (len(full) - 1)
        carry = 0
        for i in range(len(full) - 1, 0, -1):
            carry = F.add(full[i], F.mul(carry, xi))
            quo[i - 1] = carry
        out = add(F, out, scale(F, w, quo))
    return out
