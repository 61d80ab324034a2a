"""2x2 matrix groups SL, PSL and PGL over a :class:`~psl2rp.gf.FieldCtx`.

Group elements are packed into int64 codes ``((a*q + b)*q + c)*q + d`` of a
canonical representative matrix; every bulk operation works on numpy arrays of
such codes.  The canonical representative is

* SL  -- the matrix itself;
* PSL -- the smaller-coded of the two lifts ``X`` and ``-X``;
* PGL -- the scalar multiple whose first nonzero entry (scan order a, b, c, d)
  is 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .gf import FieldCtx, FieldError, FqElem

KINDS = ("SL", "PSL", "PGL")
DEFAULT_ENUM_CAP = 3_000_000
# q**4 must fit in a signed 64-bit code
MAX_GROUP_Q = 55_108


class GroupError(ValueError):
    pass


class CapExceeded(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class Mat2:
    a: FqElem
    b: FqElem
    c: FqElem
    d: FqElem

    @classmethod
    def of(cls, F: FieldCtx, a, b, c, d) -> Mat2:
        conv = [x if isinstance(x, FqElem) else F(x) for x in (a, b, c, d)]
        for x in conv:
            if x.ctx != F:
                raise FieldError("entries from a different field")
        return cls(*conv)

    @classmethod
    def identity(cls, F: FieldCtx) -> Mat2:
        return cls(F.one, F.zero, F.zero, F.one)

    @property
    def field(self) -> FieldCtx:
        return self.a.ctx

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def det(self) -> FqElem:
        return self.a * self.d - self.b * self.c

    def trace(self) -> FqElem:
        return self.a + self.d

    def __mul__(self, o: Mat2) -> Mat2:
        if not isinstance(o, Mat2):
            return NotImplemented
        if o.field != self.field:
            raise FieldError("matrices over different fields")
        return Mat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __neg__(self) -> Mat2:
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def scale(self, s: FqElem) -> Mat2:
        return Mat2(self.a * s, self.b * s, self.c * s, self.d * s)

    def inverse(self) -> Mat2:
        det = self.det()
        if not det:
            raise GroupError("singular matrix has no inverse")
        s = det.inverse()
        return Mat2(self.d * s, -self.b * s, -self.c * s, self.a * s)

    def __pow__(self, k: int) -> Mat2:
        if k < 0:
            return self.inverse() ** (-k)
        result, base = Mat2.identity(self.field), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, o):
        if not isinstance(o, Mat2):
            return NotImplemented
        return self.entries() == o.entries()

    def __hash__(self):
        return hash(tuple(x.code for x in self.entries()))

    def __repr__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


def mat_ops(A: Mat2, B: Mat2 | None, op: str):
    if op == "mul":
        return A * B
    if op == "inv":
        return A.inverse()
    if op == "det":
        return A.det()
    if op == "trace":
        return A.trace()
    raise ValueError(f"unknown op {op!r}")


def fricke_comm_trace(A: Mat2, B: Mat2) -> FqElem:
    """Trace of the commutator ``A B A^-1 B^-1`` from the traces of A, B, AB."""
    if A.det() != 1 or B.det() != 1:
        raise GroupError("Fricke identity needs determinant-1 matrices")
    ta, tb, tab = A.trace(), B.trace(), (A * B).trace()
    return ta * ta + tb * tb + tab * tab - ta * tb * tab - 2


class GroupCtx:
    """An ambient group SL(2,q), PSL(2,q) or PGL(2,q)."""

    def __init__(self, field: FieldCtx, kind: str = "PSL"):
        if kind not in KINDS:
            raise GroupError(f"kind must be one of {KINDS}")
        if field.q > MAX_GROUP_Q:
            raise GroupError(f"q = {field.q} too large for packed codes")
        self.field = field
        self.kind = kind
        q = field.q
        self.q = q
        self.order = q * (q * q - 1) // (2 if kind == "PSL" else 1)
        one = field.one.code
        self.identity = int(self.canon(one, 0, 0, one))

    def __repr__(self):
        return f"{self.kind}(2,{self.q})"

    def __eq__(self, other):
        return (
            isinstance(other, GroupCtx)
            and self.kind == other.kind
            and self.field == other.field
        )

    def __hash__(self):
        return hash((self.kind, self.field))

    # -- packing -------------------------------------------------------

    def encode(self, a, b, c, d):
        q = self.q
        return ((np.asarray(a, dtype=np.int64) * q + b) * q + c) * q + d

    def decode(self, codes):
        q = self.q
        x = np.asarray(codes, dtype=np.int64)
        d = x % q
        x = x // q
        c = x % q
        x = x // q
        return x // q, x % q, c, d

    def canon(self, a, b, c, d):
        """Canonical codes of the matrices with the given entry codes."""
        F = self.field
        if self.kind == "SL":
            return self.encode(a, b, c, d)
        if self.kind == "PSL":
            x = self.encode(a, b, c, d)
            y = self.encode(F.neg_codes(a), F.neg_codes(b), F.neg_codes(c), F.neg_codes(d))
            return np.minimum(x, y)
        a, b, c, d = (np.asarray(v, dtype=np.int64) for v in (a, b, c, d))
        lead = np.where(a != 0, a, b)
        s = F.inv_codes(lead)
        return self.encode(F.mul_codes(a, s), F.mul_codes(b, s), F.mul_codes(c, s), F.mul_codes(d, s))

    # -- vectorised group operations -----------------------------------

    def mul(self, x, y):
        F = self.field
        xa, xb, xc, xd = self.decode(x)
        ya, yb, yc, yd = self.decode(y)
        m, ad = F.mul_codes, F.add_codes
        return self.canon(
            ad(m(xa, ya), m(xb, yc)),
            ad(m(xa, yb), m(xb, yd)),
            ad(m(xc, ya), m(xd, yc)),
            ad(m(xc, yb), m(xd, yd)),
        )

    def inv(self, x):
        F = self.field
        a, b, c, d = self.decode(x)
        # adjugate; a scalar multiple of the inverse, equal to it when det = 1
        return self.canon(d, F.neg_codes(b), F.neg_codes(c), a)

    def conj(self, g, x):
        """``g x g^-1``."""
        return self.mul(self.mul(g, x), self.inv(g))

    def power(self, x, k: int):
        x = np.asarray(x, dtype=np.int64)
        if k < 0:
            x, k = self.inv(x), -k
        result = np.full(x.shape, self.identity, dtype=np.int64)
        base = x
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def det_codes(self, x):
        F = self.field
        a, b, c, d = self.decode(x)
        return F.sub_codes(F.mul_codes(a, d), F.mul_codes(b, c))

    def trace_codes(self, x):
        a, _, _, d = self.decode(x)
        return self.field.add_codes(a, d)

    @property
    def order_cap(self) -> int:
        # element orders divide q-1, q+1 or 2p in these groups
        return 2 * (self.q + 1) + 2 * self.field.p

    def orders(self, x) -> np.ndarray:
        """Element orders by iterated multiplication."""
        x = np.asarray(x, dtype=np.int64)
        flat = x.ravel()
        out = np.zeros(flat.shape, dtype=np.int64)
        active = np.arange(flat.size)
        cur = flat.copy()
        for k in range(1, self.order_cap + 1):
            hit = cur == self.identity
            out[active[hit]] = k
            active, cur = active[~hit], cur[~hit]
            if not active.size:
                return out.reshape(x.shape)
            cur = self.mul(cur, flat[active])
        raise AssertionError("element order exceeded the theoretical cap")

    # -- projective line ------------------------------------------------

    @property
    def n_points(self) -> int:
        return self.q + 1

    def act(self, pts, g):
        """Right action of the element ``g`` on points of P^1.

        Point ``t < q`` is ``(t : 1)``; point ``q`` is ``(1 : 0)``.
        """
        F = self.field
        q = self.q
        a, b, c, d = (int(v) for v in self.decode(g))
        pts = np.asarray(pts, dtype=np.int64)
        fin = pts < q
        t = np.where(fin, pts, 0)
        x = np.where(fin, F.add_codes(F.mul_codes(t, a), c), a)
        y = np.where(fin, F.add_codes(F.mul_codes(t, b), d), b)
        out = np.full(pts.shape, q, dtype=np.int64)
        nz = y != 0
        if np.any(nz):
            out[nz] = F.mul_codes(x[nz], F.inv_codes(y[nz]))
        return out

    # -- scalar interface -------------------------------------------------

    def elem(self, code) -> GroupElem:
        return GroupElem(int(code), self)

    def matrix(self, code) -> Mat2:
        F = self.field
        return Mat2(*(F.from_code(int(v)) for v in self.decode(int(code))))

    def canonicalize(self, A: Mat2) -> GroupElem:
        if A.field != self.field:
            raise FieldError(f"matrix over {A.field!r}, group over {self.field!r}")
        det = A.det()
        if not det:
            raise GroupError("singular matrix")
        if self.kind != "PGL" and det != 1:
            raise GroupError(f"det = {det} != 1 in {self!r}")
        return self.elem(self.canon(*(x.code for x in A.entries())))

    @property
    def id_elem(self) -> GroupElem:
        return self.elem(self.identity)

    # -- enumeration -------------------------------------------------------

    def enumerate(self, cap: int = DEFAULT_ENUM_CAP) -> np.ndarray:
        if self.order > cap:
            raise CapExceeded(f"|{self!r}| = {self.order} exceeds cap {cap}")
        return self._all_codes

    @cached_property
    def _all_codes(self) -> np.ndarray:
        F = self.field
        q = self.q
        r = np.arange(q, dtype=np.int64)
        nz = r[1:]
        if self.kind == "PGL":
            # a = 1: any b, c with d != bc
            b, c, d = (v.ravel() for v in np.meshgrid(r, r, r, indexing="ij"))
            ok = d != F.mul_codes(b, c)
            part1 = self.encode(1 if F.degree == 1 else F.p, b[ok], c[ok], d[ok])
            # a = 0, b = 1: c != 0, any d
            c2, d2 = (v.ravel() for v in np.meshgrid(nz, r, indexing="ij"))
            part2 = self.encode(0, 1 if F.degree == 1 else F.p, c2, d2)
            codes = np.concatenate([part1, part2])
        else:
            # a != 0: d = (1 + bc) / a
            a, b, c = (v.ravel() for v in np.meshgrid(nz, r, r, indexing="ij"))
            one = F.p if F.degree == 2 else 1
            d = F.mul_codes(F.add_codes(F.mul_codes(b, c), one), F.inv_codes(a))
            part1 = self.canon(a, b, c, d)
            # a = 0: c = -1/b, any d
            b2, d2 = (v.ravel() for v in np.meshgrid(nz, r, indexing="ij"))
            c2 = F.neg_codes(F.inv_codes(b2))
            part2 = self.canon(np.zeros_like(b2), b2, c2, d2)
            codes = np.concatenate([part1, part2])
        codes = np.unique(codes)
        assert codes.size == self.order, (codes.size, self.order)
        return codes

    def index_of(self, codes) -> np.ndarray:
        allc = self._all_codes
        return np.searchsorted(allc, codes)


@dataclass(frozen=True, order=True)
class GroupElem:
    code: int
    ctx: GroupCtx = field(compare=False, repr=False)

    @property
    def rep(self) -> Mat2:
        return self.ctx.matrix(self.code)

    def __mul__(self, other: GroupElem) -> GroupElem:
        return self.ctx.elem(self.ctx.mul(self.code, other.code))

    def inverse(self) -> GroupElem:
        return self.ctx.elem(self.ctx.inv(self.code))

    def __pow__(self, k: int) -> GroupElem:
        return self.ctx.elem(self.ctx.power(self.code, k))

    def order(self) -> int:
        return element_order(self)

    def is_identity(self) -> bool:
        return self.code == self.ctx.identity

    def __repr__(self):
        return f"{self.ctx!r}{self.rep!r}"


def make_group(p: int, degree: int = 1, kind: str = "PSL") -> GroupCtx:
    from .gf import make_field

    return GroupCtx(make_field(p, degree), kind)


def canonicalize(A: Mat2, ctx: GroupCtx) -> GroupElem:
    return ctx.canonicalize(A)


def element_order(g: GroupElem) -> int:
    ctx = g.ctx
    cur = g.code
    for k in range(1, ctx.order_cap + 1):
        if cur == ctx.identity:
            return k
        cur = int(ctx.mul(cur, g.code))
    raise AssertionError("element order exceeded the theoretical cap")


def enumerate_group(ctx: GroupCtx, cap: int = DEFAULT_ENUM_CAP) -> np.ndarray:
    return ctx.enumerate(cap)
