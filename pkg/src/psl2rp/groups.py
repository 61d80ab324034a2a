"""Subgroups of a :class:`~psl2rp.psl2.GroupCtx`: closure, orders, recognition,
normalizers, maximal overgroups and the subfield subgroups.

Subgroups are stored as sorted int64 arrays of element codes.  Group orders
of generated subgroups are computed exactly with one level of orbit-stabilizer
on the projective line (the stabilizer is then closed densely), which avoids
materialising large subgroups when only generation matters.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .gf import is_prime, make_field
from .psl2 import DEFAULT_ENUM_CAP, CapExceeded, GroupCtx, GroupElem, GroupError

DEFAULT_CLOSURE_CAP = 3_000_000
RECOGNITION_CAP = 1_000_000
EXHAUSTIVE_MAX_ORDER = 10_000


def _codes(gens) -> np.ndarray:
    out = []
    for g in gens:
        out.append(g.code if isinstance(g, GroupElem) else int(g))
    return np.asarray(out, dtype=np.int64)


def member(sorted_codes: np.ndarray, codes) -> np.ndarray:
    """Vectorised membership test against a sorted code array."""
    codes = np.asarray(codes, dtype=np.int64)
    idx = np.searchsorted(sorted_codes, codes)
    idx = np.minimum(idx, sorted_codes.size - 1)
    return sorted_codes[idx] == codes


def _close(ctx: GroupCtx, gens: np.ndarray, start: np.ndarray | None = None,
           cap: int = DEFAULT_CLOSURE_CAP, stop_above: int | None = None) -> np.ndarray:
    """Sorted codes of the subgroup generated by ``start`` and ``gens``.

    ``start`` must already be closed under the generators it came with; the
    breadth-first pass right-multiplies the frontier by every generator.
    """
    gens = np.unique(gens)
    elems = np.array([ctx.identity], dtype=np.int64) if start is None else start
    frontier = elems
    while frontier.size:
        prods = np.unique(ctx.mul(frontier[:, None], gens[None, :]).ravel())
        new = prods[~member(elems, prods)]
        if not new.size:
            break
        elems = np.union1d(elems, new)
        if elems.size > cap:
            raise CapExceeded(f"closure exceeded cap {cap}")
        if stop_above is not None and elems.size > stop_above:
            break
        frontier = new
    return elems


# -- subgroup orders without materialising the subgroup --------------------

BASE_POINT_OFFSET = 0  # base point is infinity, i.e. point index q


def _orbit(ctx: GroupCtx, gens: np.ndarray):
    """Orbit of infinity with a transversal of group codes."""
    base = ctx.q
    trans = np.full(ctx.n_points, -1, dtype=np.int64)
    trans[base] = ctx.identity
    frontier = np.array([base], dtype=np.int64)
    while frontier.size:
        new_pts = []
        for s in gens:
            ims = ctx.act(frontier, s)
            fresh = trans[ims] == -1
            if not fresh.any():
                continue
            ims_f, first = np.unique(ims[fresh], return_index=True)
            src = frontier[fresh][first]
            trans[ims_f] = ctx.mul(trans[src], s)
            new_pts.append(ims_f)
        frontier = np.concatenate(new_pts) if new_pts else np.empty(0, dtype=np.int64)
    orbit = np.flatnonzero(trans >= 0)
    return orbit, trans


def _schreier_gens(ctx: GroupCtx, gens: np.ndarray, orbit, trans) -> np.ndarray:
    out = []
    u = trans[orbit]
    for s in gens:
        ims = ctx.act(orbit, s)
        out.append(ctx.mul(ctx.mul(u, s), ctx.inv(trans[ims])))
    sg = np.unique(np.concatenate(out))
    return sg[sg != ctx.identity]


def _stabilizer_order(ctx: GroupCtx, sgens: np.ndarray, target: int | None = None) -> int:
    """Order of the group generated by ``sgens`` (inside a point stabilizer).

    With ``target`` set (the full stabilizer order) stops as soon as more than
    half of it is reached and reports ``target``.
    """
    elems = np.array([ctx.identity], dtype=np.int64)
    used: list[int] = []
    for s in sgens:
        if member(elems, [s])[0]:
            continue
        used.append(int(s))
        stop = target // 2 if target is not None else None
        elems = _close(ctx, np.asarray(used, dtype=np.int64), start=elems, stop_above=stop)
        if target is not None and elems.size > target // 2:
            return target
    return int(elems.size)


def generated_order(ctx: GroupCtx, gens) -> int:
    """Exact order of the subgroup generated by ``gens``."""
    g = _codes(gens)
    g = g[g != ctx.identity]
    if not g.size:
        return 1
    orbit, trans = _orbit(ctx, g)
    sg = _schreier_gens(ctx, g, orbit, trans)
    return int(orbit.size) * _stabilizer_order(ctx, sg)


def generates(ctx: GroupCtx, gens) -> bool:
    """True iff ``gens`` generate the whole ambient group."""
    g = _codes(gens)
    g = g[g != ctx.identity]
    if not g.size:
        return ctx.order == 1
    orbit, trans = _orbit(ctx, g)
    if orbit.size < ctx.n_points:
        return False
    target = ctx.order // ctx.n_points
    sg = _schreier_gens(ctx, g, orbit, trans)
    return _stabilizer_order(ctx, sg, target) == target


# -- subgroup objects --------------------------------------------------------

class Subgroup:
    """A subgroup given by its sorted element codes and some generators."""

    def __init__(self, ctx: GroupCtx, elems: np.ndarray, gens=None):
        self.ctx = ctx
        self.elems = np.asarray(elems, dtype=np.int64)
        self._gens = None if gens is None else _codes(gens)

    @classmethod
    def full(cls, ctx: GroupCtx) -> Subgroup:
        return cls(ctx, ctx.enumerate())

    @classmethod
    def trivial(cls, ctx: GroupCtx) -> Subgroup:
        return cls(ctx, np.array([ctx.identity], dtype=np.int64), gens=[])

    @property
    def order(self) -> int:
        return int(self.elems.size)

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"Subgroup({self.ctx!r}, order={self.order})"

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and self.ctx == other.ctx
            and np.array_equal(self.elems, other.elems)
        )

    def __hash__(self):
        return hash((self.order, self.elems.tobytes()))

    @cached_property
    def key(self) -> bytes:
        return self.elems.tobytes()

    def __contains__(self, g) -> bool:
        code = g.code if isinstance(g, GroupElem) else int(g)
        return bool(member(self.elems, [code])[0])

    def contains(self, codes) -> np.ndarray:
        return member(self.elems, codes)

    def issubset(self, other: Subgroup) -> bool:
        return self.order <= other.order and bool(np.all(other.contains(self.elems)))

    def intersection(self, other: Subgroup) -> Subgroup:
        return Subgroup(self.ctx, np.intersect1d(self.elems, other.elems, assume_unique=True))

    @property
    def is_full(self) -> bool:
        return self.order == self.ctx.order

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def elements(self) -> list[GroupElem]:
        return [self.ctx.elem(c) for c in self.elems]

    @property
    def gens(self) -> np.ndarray:
        """A generating set; found greedily when not supplied."""
        if self._gens is None:
            used: list[int] = []
            span = np.array([self.ctx.identity], dtype=np.int64)
            for c in self.elems:
                if span.size == self.order:
                    break
                if member(span, [c])[0]:
                    continue
                used.append(int(c))
                span = _close(self.ctx, np.asarray(used, dtype=np.int64), start=span)
            self._gens = np.asarray(used, dtype=np.int64)
        return self._gens

    # -- structure -------------------------------------------------------

    @cached_property
    def element_orders(self) -> np.ndarray:
        return self.ctx.orders(self.elems)

    @cached_property
    def order_multiset(self) -> tuple:
        return tuple(sorted(Counter(self.element_orders.tolist()).items()))

    def _commutes_with_gens(self, codes) -> np.ndarray:
        ok = np.ones(np.shape(codes), dtype=bool)
        for g in self.gens:
            ok &= self.ctx.mul(codes, g) == self.ctx.mul(g, codes)
        return ok

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.all(self._commutes_with_gens(self.gens)))

    @cached_property
    def center_size(self) -> int:
        return int(np.count_nonzero(self._commutes_with_gens(self.elems)))

    @property
    def fingerprint(self) -> tuple:
        return (self.order, self.is_abelian, self.order_multiset, self.center_size)

    def conjugacy_classes(self) -> list[np.ndarray]:
        ctx = self.ctx
        seen = np.zeros(self.order, dtype=bool)
        classes = []
        for i in range(self.order):
            if seen[i]:
                continue
            cls = np.array([self.elems[i]], dtype=np.int64)
            frontier = cls
            while frontier.size:
                imgs = np.unique(np.concatenate([ctx.conj(g, frontier) for g in self.gens]))
                new = imgs[~member(cls, imgs)]
                cls = np.union1d(cls, new)
                frontier = new
            seen[np.searchsorted(self.elems, cls)] = True
            classes.append(cls)
        return classes

    def is_simple(self) -> bool:
        if self.order == 1:
            return False
        for cls in self.conjugacy_classes():
            if cls[0] == self.ctx.identity:
                continue
            if closure(self.ctx, cls).order != self.order:
                return False
        return True

    def is_normal_in(self, ambient: Subgroup) -> bool:
        for g in ambient.gens:
            if not np.all(self.contains(self.ctx.conj(g, self.gens))):
                return False
        return True


def closure(ctx: GroupCtx, gens, cap: int = DEFAULT_CLOSURE_CAP) -> Subgroup:
    """The subgroup generated by ``gens`` (elements or codes)."""
    g = np.unique(_codes(gens))
    if not g.size:
        return Subgroup.trivial(ctx)
    if generated_order(ctx, g) > cap:
        raise CapExceeded(f"<gens> has more than {cap} elements")
    return Subgroup(ctx, _close(ctx, g, cap=cap), gens=g)


def extend(H: Subgroup, extra) -> Subgroup:
    """``<H, extra>`` reusing the elements of H."""
    extra = _codes(extra)
    gens = np.unique(np.concatenate([H.gens, extra]))
    return Subgroup(H.ctx, _close(H.ctx, gens, start=H.elems), gens=gens)


def conjugate(H: Subgroup, g) -> Subgroup:
    """``g H g^-1``."""
    code = g.code if isinstance(g, GroupElem) else int(g)
    ctx = H.ctx
    elems = np.unique(ctx.conj(code, H.elems))
    gens = ctx.conj(code, H.gens) if H._gens is not None else None
    return Subgroup(ctx, elems, gens=gens)


def normalizer(H: Subgroup, ambient: Subgroup | None = None, chunk: int = 1 << 18) -> Subgroup:
    """``{g in ambient : g H g^-1 = H}``."""
    ctx = H.ctx
    pool = ctx.enumerate() if ambient is None else ambient.elems
    if ambient is not None and not H.issubset(ambient):
        raise GroupError("H is not contained in the ambient subgroup")
    keep = []
    for lo in range(0, pool.size, chunk):
        g = pool[lo:lo + chunk]
        ok = np.ones(g.size, dtype=bool)
        for h in H.gens:
            ok &= H.contains(ctx.conj(g, h))
        keep.append(g[ok])
    return Subgroup(ctx, np.concatenate(keep))


def double_coset(H: Subgroup, g: int, K: Subgroup | None = None, chunk: int = 1 << 21) -> np.ndarray:
    """Sorted codes of ``H g K`` (K defaults to H)."""
    K = H if K is None else K
    ctx = H.ctx
    hg = ctx.mul(H.elems, g)
    rows = max(1, chunk // max(K.order, 1))
    parts = []
    for lo in range(0, hg.size, rows):
        parts.append(np.unique(ctx.mul(hg[lo:lo + rows, None], K.elems[None, :]).ravel()))
    return np.unique(np.concatenate(parts))


def double_coset_reps(H: Subgroup, order=None, skip=None):
    """Yield ``(rep, coset)`` for the double cosets ``H g H`` with ``g`` outside H.

    ``order`` is an optional permutation of the ambient element indices that
    fixes which element represents each double coset.
    """
    ctx = H.ctx
    allc = ctx.enumerate()
    todo = np.ones(allc.size, dtype=bool)
    todo[ctx.index_of(H.elems)] = False
    if skip is not None:
        todo[ctx.index_of(skip)] = False
    seq = np.arange(allc.size) if order is None else np.asarray(order)
    for i in seq[todo[seq]]:
        if not todo[i]:
            continue
        g = int(allc[i])
        D = double_coset(H, g)
        todo[ctx.index_of(D)] = False
        yield g, D


# -- recognition -------------------------------------------------------------

@dataclass(frozen=True)
class IsoClass:
    tag: str
    param: int | None = None

    def __str__(self):
        return self.tag if self.param is None else f"{self.tag}({self.param})"

    __repr__ = __str__


CYCLIC = "Cyclic"
DIHEDRAL = "Dihedral"
KLEIN4 = IsoClass("Klein4")
SYM4 = IsoClass("Sym4")
ALT4 = IsoClass("Alt4")
ALT5 = IsoClass("Alt5")
OTHER = IsoClass("Other")

_SMALL_BY_ORDERS = {
    (12, ((1, 1), (2, 3), (3, 8))): ALT4,
    (24, ((1, 1), (2, 9), (3, 8), (4, 6))): SYM4,
    (60, ((1, 1), (2, 15), (3, 20), (5, 24))): ALT5,
}


def _psl_prime(n: int, factor: int) -> int | None:
    """Prime r >= 5 with r (r^2 - 1) / factor == n, if any."""
    r = 5
    while r * (r * r - 1) // factor <= n:
        if is_prime(r) and r * (r * r - 1) // factor == n:
            return r
        r += 1
    return None


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_dihedral(H: Subgroup) -> bool:
    n = H.order
    if n < 6 or n % 2:
        return False
    k = n // 2
    orders = H.element_orders
    cands = H.elems[orders == k]
    if not cands.size:
        return False
    cyc = closure(H.ctx, [cands[0]])
    outside = ~cyc.contains(H.elems)
    return bool(np.all(orders[outside] == 2))


def _is_affine(H: Subgroup) -> bool:
    """Elementary abelian normal Sylow subgroup with a cyclic complement."""
    n = H.order
    orders = H.element_orders
    for r in _prime_factors(n):
        pr = 1
        while n % (pr * r) == 0:
            pr *= r
        if pr == n or pr < 3:
            continue
        if np.count_nonzero(orders == r) != pr - 1:
            continue
        if np.count_nonzero(orders % r == 0) != pr - 1:
            continue
        comp = n // pr
        if (pr - 1) % comp:
            continue
        if np.any(orders == comp):
            return True
    return False


def identify(H: Subgroup) -> IsoClass:
    """Isomorphism type by fingerprint plus structural probes.

    Decision order: cyclic, Klein4, dihedral, A4/S4/A5 by element-order
    multiset, PSL2(r) (simple of order r(r^2-1)/2), PGL2(r) (centerless with a
    simple index-2 subgroup of squares), affine C_r^a x| C_m, else Other.
    """
    n = H.order
    if n > RECOGNITION_CAP:
        raise CapExceeded(f"|H| = {n} above the recognition cap")
    if n == 1:
        return IsoClass(CYCLIC, 1)
    if H.is_abelian:
        if int(H.element_orders.max()) == n:
            return IsoClass(CYCLIC, n)
        if n == 4:
            return KLEIN4
        return OTHER
    if _is_dihedral(H):
        return IsoClass(DIHEDRAL, n)
    small = _SMALL_BY_ORDERS.get((n, H.order_multiset))
    if small is not None:
        return small
    r = _psl_prime(n, 2)
    if r is not None and H.is_simple():
        return IsoClass("PSL2", r)
    r = _psl_prime(n, 1)
    if r is not None and H.center_size == 1:
        squares = closure(H.ctx, np.unique(H.ctx.mul(H.elems, H.elems)))
        if squares.order == n // 2 and squares.is_simple():
            return IsoClass("PGL2", r)
    if _is_affine(H):
        return IsoClass("AffineFrobenius", n)
    return OTHER


def expected_maximal_types(q: int) -> list[IsoClass]:
    """Types in the maximal-subgroup list of PSL(2,q) for q = p or p^2, p odd.

    The point stabilizer C_q x| C_{(q-1)/2} is reported as AffineFrobenius of
    order q(q-1)/2.  Small-q exceptions (types that stop being maximal) are not
    removed, so the list is a superset of what occurs.
    """
    p, e = None, 0
    for cand in _prime_factors(q):
        p = cand
    if p is None or p == 2:
        raise GroupError(f"unsupported q = {q}")
    t = q
    while t % p == 0:
        t //= p
        e += 1
    if t != 1 or e not in (1, 2):
        raise GroupError(f"q = {q} is not p or p^2 for an odd prime p")
    out = [
        IsoClass("AffineFrobenius", q * (q - 1) // 2),
        IsoClass(DIHEDRAL, q - 1),
        IsoClass(DIHEDRAL, q + 1),
    ]
    if e == 2:
        out.append(IsoClass("PGL2", p))
        if p % 8 in (3, 5):
            out.append(SYM4)
        if p % 10 in (3, 7):
            out.append(ALT5)
    else:
        if p % 8 in (1, 7):
            out.append(SYM4)
        if p % 8 in (3, 5) and p > 3:
            out.append(ALT4)
        if p % 10 in (1, 9):
            out.append(ALT5)
    return out


# -- maximal overgroups ---------------------------------------------------------

def maximal_overgroup(H: Subgroup, seed: int = 0) -> Subgroup:
    """A maximal subgroup containing H, by greedy extension.

    Candidates are visited in a seed-determined order, one per double coset
    of the current subgroup M; a candidate g is absorbed whenever <M, g> is
    still proper.  The result is maximal because every double coset of the
    final M was checked to generate the whole group.
    """
    ctx = H.ctx
    if H.is_full:
        raise GroupError("H is the whole group")
    order = np.random.default_rng(seed).permutation(ctx.order)
    M = H
    while True:
        grown = False
        for g, _ in double_coset_reps(M, order=order):
            if not generates(ctx, np.append(M.gens, g)):
                M = extend(M, [g])
                grown = True
                break
        if not grown:
            return M


class OvergroupSearch:
    """Exhaustive maximal overgroups, memoised over intermediate subgroups."""

    def __init__(self, ctx: GroupCtx, budget: int | None = None):
        self.ctx = ctx
        self.budget = budget
        self.tests = 0
        self._memo: dict[bytes, list[bytes]] = {}
        self._groups: dict[bytes, Subgroup] = {}

    def _intern(self, K: Subgroup) -> bytes:
        k = K.key
        self._groups.setdefault(k, K)
        return k

    def _visit(self, K: Subgroup) -> list[bytes]:
        k = self._intern(K)
        if k in self._memo:
            return self._memo[k]
        ext: dict[bytes, Subgroup] = {}
        for g, _ in double_coset_reps(K):
            self.tests += 1
            if self.budget is not None and self.tests > self.budget:
                raise CapExceeded("overgroup search budget exhausted")
            if any(g in L for L in ext.values()):
                continue
            if not generates(self.ctx, np.append(K.gens, g)):
                L = extend(K, [g])
                ext.setdefault(L.key, L)
        if not ext:
            res = [k]
        else:
            res = []
            for L in ext.values():
                for m in self._visit(L):
                    if m not in res:
                        res.append(m)
        self._memo[k] = res
        return res

    def __call__(self, H: Subgroup) -> list[Subgroup]:
        if H.is_full:
            raise GroupError("H is the whole group")
        keys = self._visit(H)
        return sorted((self._groups[k] for k in keys), key=lambda M: (M.order, M.elems[:8].tolist()))


def maximal_overgroups(H: Subgroup, budget: int | None = None) -> list[Subgroup]:
    return OvergroupSearch(H.ctx, budget)(H)


# -- all maximal subgroups of PSL(2,q) ------------------------------------------

def outer_conjugate(ctx: GroupCtx, codes) -> np.ndarray:
    """Conjugation by diag(nu, 1), nu a nonsquare, inside a PSL context."""
    if ctx.kind != "PSL":
        raise GroupError("outer conjugation is defined on PSL contexts")
    F = ctx.field
    nu = next(c for c in range(1, F.q) if not F.is_square_codes(c))
    a, b, c, d = ctx.decode(codes)
    return ctx.canon(a, F.mul_codes(b, nu), F.mul_codes(c, int(F.inv_codes(nu))), d)


def generating_pair(ctx: GroupCtx, seed: int = 0) -> np.ndarray:
    allc = ctx.enumerate()
    rng = np.random.default_rng(seed)
    while True:
        gs = rng.choice(allc, 2)
        if generates(ctx, gs):
            return gs


def pgl_orbit(H: Subgroup, gens=None) -> list[Subgroup]:
    """All conjugates of H under PGL(2,q) acting on a PSL(2,q) context."""
    ctx = H.ctx
    gens = generating_pair(ctx) if gens is None else gens
    seen = {H.key: H}
    todo = [H]
    while todo:
        K = todo.pop()
        images = [conjugate(K, g) for g in gens]
        images.append(Subgroup(ctx, np.unique(outer_conjugate(ctx, K.elems))))
        for L in images:
            if L.key not in seen:
                seen[L.key] = L
                todo.append(L)
    return sorted(seen.values(), key=lambda L: L.elems.tolist())


def _find_generated(ctx: GroupCtx, orders: tuple[int, int], target: int, seed: int) -> Subgroup:
    allc = ctx.enumerate()
    ords = ctx.orders(allc)
    pools = [allc[ords == k] for k in orders]
    rng = np.random.default_rng(seed)
    for _ in range(100_000):
        gens = [rng.choice(pool) for pool in pools]
        if generated_order(ctx, gens) == target:
            return closure(ctx, gens)
    raise GroupError(f"no subgroup of order {target} found")


def maximal_subgroup_classes(ctx: GroupCtx, seed: int = 0) -> dict[str, list[Subgroup]]:
    """Every subgroup in the maximal-subgroup classes of PSL(2,q), by type.

    Each class representative is built explicitly and its PGL(2,q) orbit is
    enumerated.  Small-q exceptions are not pruned, so a few listed groups
    may be non-maximal; every proper subgroup still lies in a listed one.
    """
    if ctx.kind != "PSL":
        raise GroupError("needs a PSL context")
    F = ctx.field
    q, one, zero = ctx.q, F.one, F.zero
    gen = next(F.from_code(c) for c in range(1, q) if _mult_order_code(F, c) == q - 1)
    diag = ctx.canon(gen.code, 0, 0, gen.inverse().code)
    unis = [ctx.canon(one.code, t.code, 0, one.code) for t in ([one, F.gen] if F.degree == 2 else [one])]
    w = ctx.canon(0, (-one).code, one.code, 0)
    reps = {
        str(IsoClass("AffineFrobenius", q * (q - 1) // 2)): closure(ctx, unis + [diag]),
        str(IsoClass(DIHEDRAL, q - 1)): closure(ctx, [diag, w]),
    }
    allc = ctx.enumerate()
    ords = ctx.orders(allc)
    torus = closure(ctx, [allc[ords == (q + 1) // 2][0]])
    reps[str(IsoClass(DIHEDRAL, q + 1))] = normalizer(torus)
    types = {str(t) for t in expected_maximal_types(q)}
    if F.degree == 2:
        reps[str(IsoClass("PGL2", F.p))] = subfield_embedding(ctx, "PGL")
    if str(ALT5) in types:
        reps[str(ALT5)] = _find_generated(ctx, (2, 3), 60, seed)
    if str(SYM4) in types and F.degree == 1:
        reps[str(SYM4)] = _find_generated(ctx, (2, 4), 24, seed)
    if str(ALT4) in types:
        reps[str(ALT4)] = _find_generated(ctx, (2, 3), 12, seed)
    gens = generating_pair(ctx, seed)
    return {k: pgl_orbit(H, gens) for k, H in reps.items()}


def _mult_order_code(F, c: int) -> int:
    x, k = c, 1
    while x != F.one.code:
        x = int(F.mul_codes(x, c))
        k += 1
    return k


# -- subfield subgroups -------------------------------------------------------

def subfield_embedding(ctx: GroupCtx, flavor: str = "PSL") -> Subgroup:
    """The subgroup PSL(2,p) or PGL(2,p) of PSL/PGL(2,p^2) over the prime field."""
    F = ctx.field
    if F.degree != 2 or ctx.kind == "SL":
        raise GroupError("subfield subgroups need a PSL/PGL context over F_p^2")
    p = F.p
    base = make_field(p, 1)
    if flavor == "PSL":
        small = GroupCtx(base, "SL")
        a, b, c, d = small.decode(small.enumerate())
        elems = ctx.canon(a * p, b * p, c * p, d * p)
    elif flavor == "PGL":
        small = GroupCtx(base, "PGL")
        a, b, c, d = (v * p for v in small.decode(small.enumerate()))
        if ctx.kind == "PSL":
            det = F.sub_codes(F.mul_codes(a, d), F.mul_codes(b, c))
            s = F.inv_codes(F.sqrt_codes(det))
            a, b, c, d = (F.mul_codes(v, s) for v in (a, b, c, d))
        elems = ctx.canon(a, b, c, d)
    else:
        raise ValueError(f"flavor must be PSL or PGL, got {flavor!r}")
    elems = np.unique(elems)
    expect = p * (p * p - 1) // (2 if flavor == "PSL" else 1)
    assert elems.size == expect, (elems.size, expect)
    return Subgroup(ctx, elems)


def in_psl(ctx: GroupCtx, codes) -> np.ndarray:
    """For a PGL context: which elements lie in the PSL subgroup (square det)."""
    if ctx.kind != "PGL":
        raise GroupError("only meaningful in a PGL context")
    return ctx.field.is_square_codes(ctx.det_codes(codes))


def psl_subgroup(ctx: GroupCtx) -> Subgroup:
    """PSL(2,q) as the index-2 subgroup of a PGL(2,q) context."""
    allc = ctx.enumerate()
    return Subgroup(ctx, allc[in_psl(ctx, allc)])


def subgroup_from_codes(ctx: GroupCtx, codes, gens=None) -> Subgroup:
    return Subgroup(ctx, np.unique(np.asarray(codes, dtype=np.int64)), gens=gens)


__all__ = [
    "ALT4", "ALT5", "CYCLIC", "DIHEDRAL", "KLEIN4", "OTHER", "SYM4", "IsoClass",
    "OvergroupSearch", "Subgroup", "closure", "conjugate", "double_coset",
    "double_coset_reps", "expected_maximal_types", "extend", "generated_order",
    "generates", "generating_pair", "identify", "in_psl", "maximal_overgroup",
    "maximal_overgroups", "maximal_subgroup_classes", "member", "normalizer",
    "outer_conjugate", "pgl_orbit", "psl_subgroup", "subfield_embedding",
    "subgroup_from_codes",
]
