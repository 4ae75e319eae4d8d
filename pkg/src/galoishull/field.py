"""Exact arithmetic in GF(p^h) for odd primes p.

Elements are encoded as integers ``c_0 + c_1 p + ... + c_{h-1} p^{h-1}`` where
``c_0 + c_1 x + ... + c_{h-1} x^{h-1}`` is the polynomial-basis representative
modulo the field's irreducible modulus.  All hot-path code (matrices,
polynomials, codes) works on these integers directly; :class:`FieldElement`
is a thin operator-overloading wrapper for interactive and API use.

When ``q <= dlog_limit`` the context builds exponential, logarithm and Zech
tables, which makes multiplication, powers and roots O(1).  Above the limit
arithmetic falls back to polynomial multiplication modulo the modulus.
"""

from __future__ import annotations

import functools
import itertools
import math
import os
import random
from typing import Iterable, Iterator, Sequence

from sympy import Poly, factorint, isprime, symbols

from .errors import (
    DegreeMismatchError,
    EDoesNotDivideHError,
    FieldMismatchError,
    NonPrimeError,
    NoSuchOrderError,
    NotInEError,
    ReducibleModulusError,
    UnsupportedRootError,
    ZeroInputError,
)

DEFAULT_DLOG_LIMIT = 1 << 20
MAX_FIELD_SIZE = 1 << 40
DLOG_LIMIT_ENV = "GHC_DLOG_LIMIT"

_X = symbols("x")


def _default_dlog_limit() -> int:
    raw = os.environ.get(DLOG_LIMIT_ENV)
    return int(raw) if raw else DEFAULT_DLOG_LIMIT


def _is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    return Poly(list(reversed(coeffs)), _X, modulus=p).is_irreducible


def lex_key(coeffs: Sequence[int]) -> tuple[int, ...]:
    """Sort key for "lexicographic coefficient order" (constant term first)."""
    return tuple(coeffs)


class FieldCtx:
    """The finite field GF(p^h) with a fixed irreducible modulus.

    Construction verifies that ``p`` is an odd prime, that the modulus is
    irreducible of degree ``h`` and that the chosen generator ``g`` is
    primitive.  Instances are immutable after ``__init__``.
    """

    def __init__(
        self,
        p: int,
        h: int,
        modulus: Sequence[int] | None = None,
        dlog_limit: int | None = None,
    ) -> None:
        if p < 3 or p % 2 == 0 or not isprime(p):
            raise NonPrimeError(f"p={p} is not an odd prime")
        if h < 1:
            raise DegreeMismatchError(f"extension degree h={h} must be >= 1")
        q = p**h
        if q > MAX_FIELD_SIZE:
            raise DegreeMismatchError(f"q={q} exceeds the supported size 2^40")
        self.p = p
        self.h = h
        self.q = q
        if dlog_limit is None:
            dlog_limit = _default_dlog_limit()
        self.dlog_limit = dlog_limit

        if modulus is None:
            modulus = self._smallest_irreducible()
        else:
            modulus = [int(c) % p for c in modulus]
            if len(modulus) != h + 1 or modulus[-1] != 1:
                raise DegreeMismatchError(
                    f"modulus must be monic of degree {h}: got {list(modulus)}"
                )
            if not _is_irreducible(modulus, p):
                raise ReducibleModulusError(f"modulus {modulus} is reducible over Z_{p}")
        self.modulus: tuple[int, ...] = tuple(modulus)
        self.key = (p, h, self.modulus)

        self._powers = [p**i for i in range(h)]
        self._digits = None
        if q <= 1 << 16:
            self._digits = [self._to_digits(v) for v in range(q)]

        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._zech: list[int] | None = None
        self._neg: list[int] | None = None
        self.g = self._smallest_primitive()
        if q <= dlog_limit:
            self._build_tables()

    # -- construction helpers -------------------------------------------------

    def _smallest_irreducible(self) -> list[int]:
        p, h = self.p, self.h
        for low in itertools.product(range(p), repeat=h):
            if h > 1 and low[0] == 0:
                continue  # divisible by x
            cand = list(low) + [1]
            if _is_irreducible(cand, p):
                return cand
        raise ReducibleModulusError(f"no irreducible polynomial of degree {h} found")

    def _smallest_primitive(self) -> int:
        order = self.q - 1
        primes = list(factorint(order)) if order > 1 else []
        for coeffs in itertools.product(range(self.p), repeat=self.h):
            c = self.from_coeffs(coeffs)
            if c == 0:
                continue
            if all(self._pow_slow(c, order // r) != 1 for r in primes):
                return c
        raise AssertionError("finite field without a primitive element")

    def _build_tables(self) -> None:
        q = self.q
        n = q - 1
        exp = [0] * (2 * n)
        log = [0] * q
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._mul_slow(x, self.g)
        if x != 1:
            raise AssertionError("generator does not have order q - 1")
        exp[n:] = exp[:n]
        self._exp, self._log = exp, log
        # zech[d] = log(1 + g^d), or -1 when 1 + g^d = 0
        zech = [0] * n
        for d in range(n):
            s = self._add_digits(1, exp[d])
            zech[d] = log[s] if s else -1
        self._zech = zech
        half = n // 2
        neg = [0] * q
        for v in range(1, q):
            neg[v] = exp[log[v] + half]
        self._neg = neg

    # -- representation -------------------------------------------------------

    def _to_digits(self, v: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.h):
            v, r = divmod(v, p)
            out.append(r)
        return tuple(out)

    def coeffs(self, v: int) -> tuple[int, ...]:
        """Polynomial-basis coordinates of ``v``, constant term first."""
        if self._digits is not None:
            return self._digits[v]
        return self._to_digits(v)

    def from_coeffs(self, coeffs: Iterable[int]) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.h:
            raise DegreeMismatchError(f"expected at most {self.h} coordinates, got {len(coeffs)}")
        return sum((int(c) % self.p) * w for c, w in zip(coeffs, self._powers))

    def element(self, value: int | Sequence[int] | FieldElement) -> FieldElement:
        """Wrap an integer code, a coefficient list, or an existing element."""
        if isinstance(value, FieldElement):
            self.check(value)
            return value
        if isinstance(value, int):
            if not 0 <= value < self.q:
                raise ValueError(f"element code {value} out of range for GF({self.q})")
            return FieldElement(self, value)
        return FieldElement(self, self.from_coeffs(value))

    def scalar(self, n: int) -> int:
        """Code of the prime-field constant ``n mod p``."""
        return n % self.p

    def check(self, x: FieldElement) -> int:
        if x.ctx.key != self.key:
            raise FieldMismatchError(f"element of GF({x.ctx.q}) used in GF({self.q})")
        return x.value

    @property
    def has_dlog(self) -> bool:
        return self._log is not None

    def elements(self) -> range:
        return range(self.q)

    def sorted_elements(self, values: Iterable[int]) -> list[int]:
        return sorted(values, key=lambda v: lex_key(self.coeffs(v)))

    def random_element(self, rng: random.Random, nonzero: bool = False) -> int:
        return rng.randrange(1 if nonzero else 0, self.q)

    def to_json(self) -> dict:
        return {"p": self.p, "h": self.h, "modulus": list(self.modulus)}

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, h={self.h}, modulus={list(self.modulus)})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldCtx) and other.key == self.key

    def __hash__(self) -> int:
        return hash(self.key)

    # -- arithmetic on codes --------------------------------------------------

    def _add_digits(self, a: int, b: int) -> int:
        p = self.p
        if self.h == 1:
            return (a + b) % p
        da, db = self.coeffs(a), self.coeffs(b)
        return sum(((x + y) % p) * w for x, y, w in zip(da, db, self._powers))

    def _mul_slow(self, a: int, b: int) -> int:
        p, h = self.p, self.h
        if h == 1:
            return a * b % p
        da, db = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * h - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        mod = self.modulus
        for d in range(2 * h - 2, h - 1, -1):
            c = prod[d] % p
            if c:
                for i in range(h):
                    prod[d - h + i] -= c * mod[i]
        return sum((prod[i] % p) * w for i, w in enumerate(self._powers))

    def _pow_slow(self, a: int, n: int) -> int:
        result = 1
        while n:
            if n & 1:
                result = self._mul_slow(result, a)
            a = self._mul_slow(a, a)
            n >>= 1
        return result

    def add(self, a: int, b: int) -> int:
        if self._zech is None:
            return self._add_digits(a, b)
        if a == 0:
            return b
        if b == 0:
            return a
        log = self._log
        la = log[a]
        z = self._zech[(log[b] - la) % (self.q - 1)]
        if z < 0:
            return 0
        return self._exp[la + z]

    def neg(self, a: int) -> int:
        if self._neg is not None:
            return self._neg[a]
        p = self.p
        return sum(((p - c) % p) * w for c, w in zip(self.coeffs(a), self._powers))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._log is None:
            return self._mul_slow(a, b)
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._log is None:
            return self._pow_slow(a, self.q - 2)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if n == 0 else 0
        if self._log is None:
            if n < 0:
                a, n = self._pow_slow(a, self.q - 2), -n
            return self._pow_slow(a, n % (self.q - 1))
        return self._exp[self._log[a] * n % (self.q - 1)]

    def dlog(self, a: int) -> int:
        """Discrete logarithm of ``a`` to base ``g`` (requires the table)."""
        if a == 0:
            raise ZeroInputError("discrete log of zero")
        if self._log is None:
            raise UnsupportedRootError(f"no discrete-log table for q={self.q}")
        return self._log[a]

    def sum(self, values: Iterable[int]) -> int:
        acc = 0
        for v in values:
            acc = self.add(acc, v)
        return acc

    def prod(self, values: Iterable[int]) -> int:
        acc = 1
        for v in values:
            acc = self.mul(acc, v)
        return acc

    # -- Frobenius, traces, subfields ----------------------------------------

    def frobenius(self, a: int, e: int) -> int:
        """``a^(p^e)``, with ``e`` reduced mod ``h``."""
        return self.pow(a, self.p ** (e % self.h))

    def in_subfield(self, a: int, e: int) -> bool:
        """Whether ``a`` lies in GF(p^e) (``e`` must divide ``h``)."""
        return self.frobenius(a, e) == a

    def trace(self, a: int, e: int) -> int:
        if e <= 0 or self.h % e:
            raise EDoesNotDivideHError(f"e={e} does not divide h={self.h}")
        acc = 0
        x = a
        for _ in range(self.h // e):
            acc = self.add(acc, x)
            x = self.frobenius(x, e)
        return acc

    def subfield_elements(self, e: int) -> list[int]:
        """All elements of GF(p^e), in lexicographic coefficient order."""
        if e <= 0 or self.h % e:
            raise EDoesNotDivideHError(f"e={e} does not divide h={self.h}")
        if self.has_dlog:
            step = (self.q - 1) // (self.p**e - 1)
            elems = [0] + [self._exp[j * step] for j in range(self.p**e - 1)]
        elif e == 1 or self.q <= (1 << 16):
            elems = [a for a in range(self.q) if self.in_subfield(a, e)] if e > 1 else list(range(self.p))
        else:
            raise UnsupportedRootError(f"cannot enumerate GF({self.p}^{e}) inside GF({self.q}) without tables")
        return self.sorted_elements(elems)

    # -- orders and roots -----------------------------------------------------

    def order(self, a: int) -> int:
        if a == 0:
            raise ZeroInputError("zero has no multiplicative order")
        n = self.q - 1
        if self._log is not None:
            return n // math.gcd(n, self._log[a])
        order = n
        for r, mult in factorint(n).items():
            for _ in range(mult):
                if self.pow(a, order // r) == 1:
                    order //= r
                else:
                    break
        return order

    def norm_index(self, e: int) -> int:
        """``gcd(p^e + 1, q - 1)``: the index of E in the multiplicative group."""
        return math.gcd(self.p ** (e % self.h) + 1, self.q - 1)

    def in_image_E(self, c: int, e: int) -> bool:
        if c == 0:
            raise ZeroInputError("E membership is undefined for zero")
        return self.pow(c, (self.q - 1) // self.norm_index(e)) == 1

    def is_square(self, c: int) -> bool:
        return c == 0 or self.pow(c, (self.q - 1) // 2) == 1

    def sqrt(self, c: int) -> int | None:
        """A square root of ``c`` or ``None``.

        With tables the root of smaller discrete log is returned.  Without
        tables Tonelli-Shanks is used and the lexicographically smaller of the
        two roots is returned.
        """
        if c == 0:
            return 0
        if not self.is_square(c):
            return None
        if self._log is not None:
            return self._exp[self._log[c] // 2]
        r = self._tonelli_shanks(c)
        return min(r, self.neg(r), key=lambda v: lex_key(self.coeffs(v)))

    def _tonelli_shanks(self, c: int) -> int:
        n = self.q - 1
        s, t = 0, n
        while t % 2 == 0:
            s, t = s + 1, t // 2
        z = next(x for x in range(2, self.q) if not self.is_square(x))
        m, cz, tt, r = s, self.pow(z, t), self.pow(c, t), self.pow(c, (t + 1) // 2)
        while tt != 1:
            i, x = 0, tt
            while x != 1:
                x, i = self.mul(x, x), i + 1
            b = self.pow(cz, 1 << (m - i - 1))
            m, cz = i, self.mul(b, b)
            tt, r = self.mul(tt, cz), self.mul(r, b)
        return r

    def solve_norm_equation(self, c: int, e: int) -> int:
        """Some ``v`` with ``v^(p^e + 1) = c``; smallest discrete log when tables exist."""
        if c == 0:
            raise ZeroInputError("norm equation with zero right-hand side")
        if not self.in_image_E(c, e):
            raise NotInEError(f"{self.coeffs(c)} is not a (p^{e}+1)-th power")
        n = self.q - 1
        w = self.p ** (e % self.h) + 1
        d = math.gcd(w, n)
        if self._log is not None:
            L = self._log[c]
            # s*w = L (mod n)  <=>  s*(w/d) = L/d (mod n/d)
            nd = n // d
            s = (L // d) * pow(w // d, -1, nd) % nd if nd > 1 else 0
            return self._exp[s]
        if d == 1:
            return self.pow(c, pow(w, -1, n))
        if d == 2:
            # mu*w + nu*n = 2, so (r^mu)^w = r^2 = c
            r = self.sqrt(c)
            mu = _extended_gcd(w, n)[1]
            return self.pow(r, mu)
        raise UnsupportedRootError(
            f"gcd(p^e+1, q-1)={d} needs a discrete-log table (q={self.q} > limit {self.dlog_limit})"
        )

    def find_element_of_order(self, t: int, subfield: int | None = None) -> int:
        """The element of multiplicative order exactly ``t`` with smallest discrete log.

        With ``subfield=e`` the element must lie in GF(p^e).
        """
        group = self.q - 1 if subfield is None else self.p**subfield - 1
        if subfield is not None and (subfield <= 0 or self.h % subfield):
            raise EDoesNotDivideHError(f"e={subfield} does not divide h={self.h}")
        if t < 1 or group % t:
            raise NoSuchOrderError(f"no element of order {t} in a cyclic group of order {group}")
        # g^((q-1)/t) has order t and is the smallest-dlog such element
        return self.pow(self.g, (self.q - 1) // t)


def _extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y = g = gcd(a, b)``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        k, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    return a, x0, y0


extended_gcd = _extended_gcd


@functools.lru_cache(maxsize=64)
def _cached_field(p: int, h: int, modulus: tuple[int, ...] | None, dlog_limit: int) -> FieldCtx:
    return FieldCtx(p, h, modulus, dlog_limit)


def field_new(
    p: int, h: int, modulus: Sequence[int] | None = None, dlog_limit: int | None = None
) -> FieldCtx:
    """Build (or fetch from cache) the context for GF(p^h)."""
    if dlog_limit is None:
        dlog_limit = _default_dlog_limit()
    return _cached_field(p, h, tuple(modulus) if modulus is not None else None, dlog_limit)


def field_from_json(data: dict) -> FieldCtx:
    return field_new(int(data["p"]), int(data["h"]), data.get("modulus"))


class FieldElement:
    """An element of a :class:`FieldCtx`, with arithmetic operators."""

    __slots__ = ("ctx", "value")

    def __init__(self, ctx: FieldCtx, value: int) -> None:
        self.ctx = ctx
        self.value = value

    def _code(self, other) -> int:
        if isinstance(other, FieldElement):
            return self.ctx.check(other)
        if isinstance(other, int):
            return self.ctx.scalar(other)
        return NotImplemented

    def _wrap(self, v: int) -> FieldElement:
        return FieldElement(self.ctx, v)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.ctx.coeffs(self.value)

    def __add__(self, other):
        b = self._code(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.ctx.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._code(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.ctx.sub(self.value, b))

    def __rsub__(self, other):
        b = self._code(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.ctx.sub(b, self.value))

    def __mul__(self, other):
        b = self._code(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.ctx.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._code(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.ctx.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._code(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.ctx.div(b, self.value))

    def __neg__(self) -> FieldElement:
        return self._wrap(self.ctx.neg(self.value))

    def __pow__(self, n: int) -> FieldElement:
        return self._wrap(self.ctx.pow(self.value, n))

    def inverse(self) -> FieldElement:
        return self._wrap(self.ctx.inv(self.value))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.ctx.key == other.ctx.key and self.value == other.value
        if isinstance(other, int):
            return self.value == self.ctx.scalar(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ctx.key, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"FieldElement({list(self.coeffs)}, GF({self.ctx.p}^{self.ctx.h}))"

    def __str__(self) -> str:
        text = "(" + ",".join(map(str, self.coeffs)) + ")"
        if self.value and self.ctx.has_dlog:
            text += f"=g^{self.ctx.dlog(self.value)}"
        return text


# Element-level operations.  Each accepts FieldElement arguments.

def frobenius(x: FieldElement, e: int) -> FieldElement:
    return FieldElement(x.ctx, x.ctx.frobenius(x.value, e))


def trace_to(x: FieldElement, e: int) -> FieldElement:
    return FieldElement(x.ctx, x.ctx.trace(x.value, e))


def in_image_E(c: FieldElement, e: int) -> bool:
    return c.ctx.in_image_E(c.value, e)


def solve_norm_equation(c: FieldElement, e: int) -> FieldElement:
    return FieldElement(c.ctx, c.ctx.solve_norm_equation(c.value, e))


def sqrt(c: FieldElement) -> FieldElement | None:
    r = c.ctx.sqrt(c.value)
    return None if r is None else FieldElement(c.ctx, r)


def element_order(c: FieldElement) -> int:
    return c.ctx.order(c.value)


def find_element_of_order(ctx: FieldCtx, t: int, subfield: int | None = None) -> FieldElement:
    return FieldElement(ctx, ctx.find_element_of_order(t, subfield))


def iter_subfield(ctx: FieldCtx, e: int) -> Iterator[FieldElement]:
    for v in ctx.subfield_elements(e):
        yield FieldElement(ctx, v)
