"""Prime fields F_p and their quadratic extensions F_p[x]/(x^2 - n).

Elements are exposed two ways:

* :class:`FqElem` -- a small immutable scalar with the usual operators, used
  when building explicit matrices;
* integer *codes* in ``[0, q)`` -- ``a0 * p + a1`` for degree 2 and ``a0`` for
  degree 1 -- consumed by the vectorised ``*_codes`` methods of
  :class:`FieldCtx`.  Code order is the lexicographic order on ``(a0, a1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

MAX_P = 2**15
# Lookup tables are used for the vectorised arithmetic below this size.
TABLE_LIMIT = 1024


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldCtx:
    """The field with ``q = p**degree`` elements."""

    p: int
    degree: int
    n: int | None = None  # nonresidue presenting F_p^2; None for degree 1

    def __post_init__(self):
        if self.degree not in (1, 2):
            raise FieldError(f"degree must be 1 or 2, got {self.degree}")
        if not is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")
        if self.p == 2:
            raise FieldError("characteristic 2 is not supported")
        if self.p > MAX_P:
            raise FieldError(f"p = {self.p} exceeds the cap {MAX_P}")
        if self.degree == 2:
            if self.n is None or pow(self.n, (self.p - 1) // 2, self.p) != self.p - 1:
                raise FieldError(f"{self.n} is not a quadratic nonresidue mod {self.p}")

    @property
    def q(self) -> int:
        return self.p**self.degree

    def __repr__(self):
        return f"GF({self.p}^{self.degree})" if self.degree == 2 else f"GF({self.p})"

    # -- scalars ---------------------------------------------------------

    def __call__(self, a0: int, a1: int = 0) -> FqElem:
        if self.degree == 1 and a1 % self.p:
            raise FieldError("prime field elements have no x component")
        return FqElem(self, a0 % self.p, a1 % self.p)

    @property
    def zero(self) -> FqElem:
        return FqElem(self, 0, 0)

    @property
    def one(self) -> FqElem:
        return FqElem(self, 1, 0)

    @property
    def gen(self) -> FqElem:
        """The adjoined square root ``x`` of the nonresidue."""
        if self.degree != 2:
            raise FieldError("prime field has no adjoined generator")
        return FqElem(self, 0, 1)

    def from_code(self, code: int) -> FqElem:
        code = int(code)
        if not 0 <= code < self.q:
            raise FieldError(f"code {code} out of range for {self!r}")
        if self.degree == 1:
            return FqElem(self, code, 0)
        return FqElem(self, code // self.p, code % self.p)

    def elements(self):
        for c in range(self.q):
            yield self.from_code(c)

    def prime_subfield_codes(self) -> np.ndarray:
        step = self.p if self.degree == 2 else 1
        return np.arange(self.p, dtype=np.int64) * step

    # -- vectorised arithmetic on codes ----------------------------------

    def _split(self, x):
        x = np.asarray(x, dtype=np.int64)
        if self.degree == 1:
            return x, np.zeros_like(x)
        return x // self.p, x % self.p

    def _join(self, a0, a1):
        if self.degree == 1:
            return a0
        return a0 * self.p + a1

    def _add_formula(self, x, y):
        x0, x1 = self._split(x)
        y0, y1 = self._split(y)
        return self._join((x0 + y0) % self.p, (x1 + y1) % self.p)

    def _mul_formula(self, x, y):
        p = self.p
        x0, x1 = self._split(x)
        y0, y1 = self._split(y)
        if self.degree == 1:
            return (x0 * y0) % p
        r0 = (x0 * y0 + (x1 * y1 % p) * self.n) % p
        r1 = (x0 * y1 + x1 * y0) % p
        return r0 * p + r1

    @cached_property
    def _tables(self):
        if self.q > TABLE_LIMIT:
            return None
        c = np.arange(self.q, dtype=np.int64)
        add = self._add_formula(c[:, None], c[None, :]).astype(np.int32)
        mul = self._mul_formula(c[:, None], c[None, :]).astype(np.int32)
        return add, mul

    @cached_property
    def _neg_table(self) -> np.ndarray:
        x0, x1 = self._split(np.arange(self.q, dtype=np.int64))
        return self._join((-x0) % self.p, (-x1) % self.p)

    @cached_property
    def _inv_table(self) -> np.ndarray:
        p = self.p
        finv = np.zeros(p, dtype=np.int64)
        finv[1:] = [pow(a, p - 2, p) for a in range(1, p)]
        x0, x1 = self._split(np.arange(self.q, dtype=np.int64))
        if self.degree == 1:
            return finv[x0]
        # (a0 + a1 x)^-1 = (a0 - a1 x) / (a0^2 - n a1^2)
        norm = (x0 * x0 - (x1 * x1 % p) * self.n) % p
        ninv = finv[norm]
        return self._join(x0 * ninv % p, (-x1 * ninv) % p)

    @cached_property
    def _sqrt_table(self) -> np.ndarray:
        """Smallest square root of each code, or -1."""
        c = np.arange(self.q, dtype=np.int64)
        sq = self._mul_formula(c, c)
        out = np.full(self.q, -1, dtype=np.int64)
        # reversed so the smallest root is written last
        out[sq[::-1]] = c[::-1]
        return out

    def add_codes(self, x, y):
        t = self._tables
        if t is not None:
            return t[0][x, y].astype(np.int64)
        return self._add_formula(x, y)

    def mul_codes(self, x, y):
        t = self._tables
        if t is not None:
            return t[1][x, y].astype(np.int64)
        return self._mul_formula(x, y)

    def neg_codes(self, x):
        return self._neg_table[np.asarray(x, dtype=np.int64)]

    def sub_codes(self, x, y):
        return self.add_codes(x, self.neg_codes(y))

    def inv_codes(self, x):
        x = np.asarray(x, dtype=np.int64)
        if np.any(x == 0):
            raise ZeroDivisionError("inverse of zero")
        return self._inv_table[x]

    def sqrt_codes(self, x):
        return self._sqrt_table[np.asarray(x, dtype=np.int64)]

    def is_square_codes(self, x):
        return self.sqrt_codes(x) >= 0


@dataclass(frozen=True, eq=False)
class FqElem:
    ctx: FieldCtx = field(repr=False)
    a0: int
    a1: int = 0

    @property
    def code(self) -> int:
        return self.a0 * self.ctx.p + self.a1 if self.ctx.degree == 2 else self.a0

    def _check(self, other) -> FqElem:
        if isinstance(other, int):
            return self.ctx(other)
        if not isinstance(other, FqElem):
            return NotImplemented
        if other.ctx != self.ctx:
            raise FieldError(f"mixed fields {self.ctx!r} and {other.ctx!r}")
        return other

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx(other)
        if not isinstance(other, FqElem):
            return NotImplemented
        return self.ctx == other.ctx and self.a0 == other.a0 and self.a1 == other.a1

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.degree, self.a0, self.a1))

    def __lt__(self, other):
        other = self._check(other)
        return (self.a0, self.a1) < (other.a0, other.a1)

    def __bool__(self):
        return bool(self.a0 or self.a1)

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.ctx.p
        return FqElem(self.ctx, (self.a0 + other.a0) % p, (self.a1 + other.a1) % p)

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.p
        return FqElem(self.ctx, -self.a0 % p, -self.a1 % p)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p, ctx = self.ctx.p, self.ctx
        if ctx.degree == 1:
            return FqElem(ctx, self.a0 * other.a0 % p, 0)
        r0 = (self.a0 * other.a0 + self.a1 * other.a1 * ctx.n) % p
        r1 = (self.a0 * other.a1 + self.a1 * other.a0) % p
        return FqElem(ctx, r0, r1)

    __rmul__ = __mul__

    def inverse(self) -> FqElem:
        if not self:
            raise ZeroDivisionError("division by zero in " + repr(self.ctx))
        p, ctx = self.ctx.p, self.ctx
        if ctx.degree == 1:
            return FqElem(ctx, pow(self.a0, p - 2, p), 0)
        norm = (self.a0 * self.a0 - self.a1 * self.a1 * ctx.n) % p
        ninv = pow(norm, p - 2, p)
        return FqElem(ctx, self.a0 * ninv % p, -self.a1 * ninv % p)

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.ctx.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __repr__(self):
        if self.ctx.degree == 1:
            return f"{self.a0}"
        if self.a1 == 0:
            return f"{self.a0}"
        return f"{self.a0}+{self.a1}x"


def field_arith(a: FqElem, b: FqElem, op: str) -> FqElem:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def smallest_nonresidue(p: int) -> int:
    for a in range(2, p):
        if pow(a, (p - 1) // 2, p) == p - 1:
            return a
    raise FieldError(f"no nonresidue mod {p}")


def make_field(p: int, degree: int = 1) -> FieldCtx:
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if p == 2:
        raise FieldError("characteristic 2 is not supported")
    if degree == 2:
        return FieldCtx(p, 2, smallest_nonresidue(p))
    return FieldCtx(p, degree)


def sqrt_fq(a: FqElem) -> FqElem | None:
    """Square root with the smaller code, found by scanning the field."""
    ctx = a.ctx
    if ctx.q <= 1 << 22:
        r = int(ctx.sqrt_codes(a.code))
        return None if r < 0 else ctx.from_code(r)
    for r in ctx.elements():
        if r * r == a:
            return r
    return None


def mult_order(a: FqElem) -> int:
    if not a:
        raise FieldError("zero has no multiplicative order")
    x, k = a, 1
    while x != 1:
        x = x * a
        k += 1
    return k


def find_order4(ctx: FieldCtx) -> FqElem:
    """Element of multiplicative order 4 with the smallest code."""
    if (ctx.q - 1) % 4:
        raise FieldError(f"4 does not divide q - 1 = {ctx.q - 1}")
    minus_one = -ctx.one
    for a in ctx.elements():
        if a and a * a == minus_one:
            return a
    raise AssertionError("unreachable: 4 | q - 1 guarantees an element of order 4")


def roots_of_quadratic(c2: FqElem, c1: FqElem, c0: FqElem) -> list[FqElem]:
    """All roots of ``c2 t^2 + c1 t + c0`` in the field, ascending by code."""
    ctx = c2.ctx
    c1, c0 = c2._check(c1), c2._check(c0)
    if not c2:
        raise FieldError("leading coefficient is zero")
    t = np.arange(ctx.q, dtype=np.int64)
    val = ctx.add_codes(
        ctx.mul_codes(ctx.mul_codes(t, t), c2.code),
        ctx.add_codes(ctx.mul_codes(t, c1.code), c0.code),
    )
    return [ctx.from_code(int(r)) for r in t[val == 0]]
