"""Irredundant generating sequences and the replacement property.

A sequence ``s = (g_1, ..., g_k)`` of a group G is *irredundant* when no
``g_i`` lies in the subgroup generated by the others, and *generating* when
it generates G.  It has the *replacement property* (RP) when every
nontrivial ``g`` can be put in place of some ``g_i`` and the result still
generates G.

Two engines live here.  The exact :func:`rp_check` works for any group inside
a :class:`~psl2rp.psl2.GroupCtx`; it uses the fact that whether ``g`` can
replace ``g_i`` depends only on the double coset ``H_i g H_i`` with
``H_i = <g_j : j != i>``.  The search for m(G) and the counts of length-4
sequences run on :class:`CayleyLattice`, a Cayley table of a small group in
which irredundance and generation are decided on cyclic subgroups.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .gf import make_field
from .groups import (
    EXHAUSTIVE_MAX_ORDER,
    OvergroupSearch,
    Subgroup,
    _codes,
    closure,
    double_coset,
    generated_order,
    generates,
    maximal_overgroup,
    member,
)
from .psl2 import CapExceeded, GroupCtx, GroupElem, GroupError

DEFAULT_M_BUDGET = 2_000_000
# Whiston-Saxl style bound max(6, pi(k) + 2) for PSL(2, p^k), k <= 2
DEFAULT_M_DEPTH = 6
TABLE_MAX_ORDER = 4_000


# -- sequences -----------------------------------------------------------------

@dataclass(frozen=True)
class GenSequence:
    """An ordered tuple of element codes, optionally inside a subgroup ``ambient``.

    Without ``ambient`` the sequence is meant to generate the whole context.
    """

    ctx: GroupCtx
    items: tuple[int, ...]
    ambient: Subgroup | None = field(default=None, compare=False)

    def __post_init__(self):
        items = tuple(int(c) for c in _codes(self.items))
        object.__setattr__(self, "items", items)
        if not items:
            raise ValueError("empty sequence")
        if len(set(items)) != len(items):
            raise ValueError("sequence has repeated elements")
        if self.ambient is not None and not np.all(self.ambient.contains(items)):
            raise GroupError("sequence leaves the ambient subgroup")

    @classmethod
    def of(cls, ctx: GroupCtx, items, ambient: Subgroup | None = None) -> GenSequence:
        return cls(ctx, tuple(_codes(items)), ambient)

    def __len__(self):
        return len(self.items)

    @property
    def group_order(self) -> int:
        return self.ctx.order if self.ambient is None else self.ambient.order

    def elements(self) -> list[GroupElem]:
        return [self.ctx.elem(c) for c in self.items]

    def without(self, i: int) -> list[int]:
        return [c for j, c in enumerate(self.items) if j != i]

    def replaced(self, i: int, g: int) -> list[int]:
        out = list(self.items)
        out[i] = int(g)
        return out

    def pool(self) -> np.ndarray:
        return self.ctx.enumerate() if self.ambient is None else self.ambient.elems

    def spans(self, gens) -> bool:
        """Do ``gens`` generate the ambient group?"""
        if self.ambient is None:
            return generates(self.ctx, gens)
        return generated_order(self.ctx, gens) == self.ambient.order

    def slot_subgroup(self, i: int) -> Subgroup:
        """``H_i``, generated by every item except the i-th."""
        return closure(self.ctx, self.without(i))


@dataclass(frozen=True)
class Irredundance:
    irredundant: bool
    slot: int | None  # first slot whose item is generated by the others
    slot_orders: tuple[int, ...]  # |<g_j : j != i>| for each i

    def __bool__(self):
        return self.irredundant


def is_irredundant(s: GenSequence) -> Irredundance:
    whole = generated_order(s.ctx, s.items)
    orders = []
    bad = None
    for i in range(len(s)):
        o = generated_order(s.ctx, s.without(i)) if len(s) > 1 else 1
        orders.append(o)
        if bad is None and o == whole:
            bad = i
    return Irredundance(bad is None, bad, tuple(orders))


def is_generating(s: GenSequence) -> bool:
    return s.spans(s.items)


@dataclass
class RPWitness:
    element: int
    slot_orders: list[int]  # |<s with the witness in slot i>| for each i


@dataclass
class RPReport:
    irredundant: bool
    generating: bool
    satisfies_rp: bool | None  # None when the sequence is not irredundant generating
    witness: RPWitness | None = None
    n_failing: int = 0
    stats: dict = field(default_factory=dict)

    def to_dict(self, ctx: GroupCtx | None = None) -> dict:
        w = None
        if self.witness is not None:
            w = {"element": self.witness.element, "slot_orders": self.witness.slot_orders}
            if ctx is not None:
                w["matrix"] = [str(x) for x in ctx.matrix(self.witness.element).entries()]
        return {
            "irredundant": self.irredundant,
            "generating": self.generating,
            "satisfies_rp": self.satisfies_rp,
            "witness": w,
            "n_failing": self.n_failing,
            "stats": self.stats,
        }


def slot_orders_for(s: GenSequence, g: int) -> list[int]:
    return [generated_order(s.ctx, s.replaced(i, g)) for i in range(len(s))]


def failing_elements(s: GenSequence) -> tuple[np.ndarray, dict]:
    """Sorted codes of the nontrivial elements that fail every slot.

    For each slot only one representative per double coset ``H_i g H_i`` is
    tested.  Slots are processed from the largest ``H_i`` down and later
    slots only look at double cosets meeting the surviving candidates.
    """
    ctx = s.ctx
    pool = s.pool()
    alive = np.ones(pool.size, dtype=bool)
    alive[np.searchsorted(pool, ctx.identity)] = False
    slots = sorted(((s.slot_subgroup(i), i) for i in range(len(s))), key=lambda t: -t[0].order)
    tested = 0
    for H, _ in slots:
        fail = np.zeros(pool.size, dtype=bool)
        fail[np.searchsorted(pool, H.elems)] = True
        todo = alive & ~fail
        for i in np.flatnonzero(todo):
            if not todo[i]:
                continue
            g = int(pool[i])
            D = double_coset(H, g)
            if s.ambient is not None:
                D = D[member(pool, D)]
            idx = np.searchsorted(pool, D)
            todo[idx] = False
            tested += 1
            if not s.spans(np.append(H.gens, g)):
                fail[idx] = True
        alive &= fail
    return pool[alive], {"double_cosets_tested": tested}


def rp_check(s: GenSequence) -> RPReport:
    """Exact replacement-property verdict for ``s``.

    The witness is the failing element with the smallest code.
    """
    t0 = time.perf_counter()
    irr = bool(is_irredundant(s))
    gen = is_generating(s)
    if not (irr and gen):
        return RPReport(irr, gen, None, stats={"elapsed": time.perf_counter() - t0})
    bad, stats = failing_elements(s)
    witness = None
    if bad.size:
        g = int(bad[0])
        witness = RPWitness(g, slot_orders_for(s, g))
    stats["elements"] = int(s.group_order)
    stats["elapsed"] = time.perf_counter() - t0
    return RPReport(True, True, not bad.size, witness, int(bad.size), stats)


def element_fails_all_slots(s: GenSequence, g: int) -> tuple[bool, list[int]]:
    orders = slot_orders_for(s, g)
    return all(o < s.group_order for o in orders), orders


# -- general position ------------------------------------------------------------

def _intersect_all(subgroups) -> np.ndarray:
    elems = subgroups[0].elems
    for H in subgroups[1:]:
        elems = np.intersect1d(elems, H.elems, assume_unique=True)
    return elems


@dataclass
class GeneralPositionTuple:
    subgroups: list[Subgroup]
    common: Subgroup
    sampled: bool = False  # True when picked by seeded greedy search


def general_position_check(subgroups) -> bool:
    subgroups = list(subgroups)
    if len(subgroups) < 2:
        raise ValueError("need at least two subgroups")
    common = _intersect_all(subgroups).size
    for i in range(len(subgroups)):
        rest = subgroups[:i] + subgroups[i + 1:]
        if _intersect_all(rest).size <= common:
            return False
    return True


def _make_tuple(ctx, members, sampled) -> GeneralPositionTuple:
    if not general_position_check(members):
        raise AssertionError("maximal overgroups not in general position")
    return GeneralPositionTuple(list(members), Subgroup(ctx, _intersect_all(members)), sampled)


def slot_maximal_choices(s: GenSequence, search: OvergroupSearch | None = None) -> list[list[Subgroup]]:
    """Every maximal subgroup containing each ``H_i``."""
    if s.ambient is not None:
        raise GroupError("maximal overgroups are computed in the whole context")
    search = search or OvergroupSearch(s.ctx)
    return [search(s.slot_subgroup(i)) for i in range(len(s))]


def gp_maximal_tuples(s: GenSequence, seeds=range(8), exhaustive: bool | None = None,
                      search: OvergroupSearch | None = None,
                      limit: int = 100_000) -> list[GeneralPositionTuple]:
    """Tuples ``(M_1, ..., M_k)`` of maximal subgroups with ``M_i >= H_i``.

    Exhaustive mode (default for groups of order at most 10^4) returns every
    combination; otherwise one tuple per seed from the greedy search.
    """
    if exhaustive is None:
        exhaustive = s.group_order <= EXHAUSTIVE_MAX_ORDER
    if exhaustive:
        choices = slot_maximal_choices(s, search)
        out = []
        for combo in itertools.product(*choices):
            out.append(_make_tuple(s.ctx, combo, False))
            if len(out) >= limit:
                raise CapExceeded(f"more than {limit} maximal tuples")
        return out
    slots = [s.slot_subgroup(i) for i in range(len(s))]
    seen, out = set(), []
    for seed in seeds:
        members = [maximal_overgroup(H, seed) for H in slots]
        key = tuple(M.key for M in members)
        if key not in seen:
            seen.add(key)
            out.append(_make_tuple(s.ctx, members, True))
    return out


class Verdict(str, Enum):
    GUARANTEED = "RP guaranteed"
    LIKELY = "RP likely (sampled)"
    INCONCLUSIVE = "inconclusive"


def prop31_criterion(s: GenSequence, tuples) -> Verdict:
    """Trivial common intersection of every maximal tuple implies RP."""
    tuples = list(tuples)
    if not tuples or any(not T.common.is_trivial for T in tuples):
        return Verdict.INCONCLUSIVE
    if any(T.sampled for T in tuples):
        return Verdict.LIKELY
    return Verdict.GUARANTEED


@dataclass
class Prop32Result:
    verdict: Verdict
    closure_matches: bool
    m_matches: bool | None
    member_has_rp: bool | None
    m_value: int | None = None


def prop32_criterion(s: GenSequence, tup: GeneralPositionTuple, r: int,
                     budget: int = DEFAULT_M_BUDGET) -> Prop32Result:
    """Check the three hypotheses on the slot ``r`` member of a maximal tuple.

    ``M_r`` must equal ``<g_i : i != r>``, have m(M_r) = k - 1, and itself
    satisfy RP; RP of s then follows.
    """
    M = tup.subgroups[r]
    H = s.slot_subgroup(r)
    if H != M:
        return Prop32Result(Verdict.INCONCLUSIVE, False, None, None)
    res = max_irredundant_length(M, budget=budget)
    if not res.exhaustive:
        return Prop32Result(Verdict.INCONCLUSIVE, True, None, None, res.m)
    if res.m != len(s) - 1:
        return Prop32Result(Verdict.INCONCLUSIVE, True, False, None, res.m)
    has_rp = group_satisfies_rp(M, budget=budget)
    verdict = Verdict.GUARANTEED if has_rp else Verdict.INCONCLUSIVE
    return Prop32Result(verdict, True, True, has_rp, res.m)


# -- Cayley-table engine -----------------------------------------------------------

def _bits(mask: np.ndarray) -> int:
    return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")


class CayleyLattice:
    """A small group as a Cayley table, with memoised subgroup joins.

    Subgroups are interned as python-int bitsets over element indices;
    ``join(sid, cid)`` is the subgroup generated by subgroup ``sid`` and
    cyclic subgroup ``cid``.
    """

    def __init__(self, ctx: GroupCtx, elems: np.ndarray, chunk: int = 1 << 22):
        n = elems.size
        if n > TABLE_MAX_ORDER:
            raise CapExceeded(f"group of order {n} too large for a Cayley table")
        self.ctx = ctx
        self.elems = elems
        self.n = n
        table = np.empty((n, n), dtype=np.int32)
        rows = max(1, chunk // n)
        for lo in range(0, n, rows):
            prod = ctx.mul(elems[lo:lo + rows, None], elems[None, :])
            table[lo:lo + rows] = np.searchsorted(elems, prod)
        self.table = table
        self.e = int(np.searchsorted(elems, ctx.identity))
        self.inv = np.argmax(table == self.e, axis=1).astype(np.int32)
        self._cyclic()
        self.full_bits = (1 << n) - 1
        self._sid: dict[int, int] = {}
        self.sub_bits: list[int] = []
        self.sub_order: list[int] = []
        self.sub_gens: list[tuple[int, ...]] = []
        self._join: dict[tuple[int, int], int] = {}
        self.trivial = self._intern(1 << self.e, ())
        self.full = self._intern(self.full_bits, tuple(range(n)))

    @classmethod
    def of(cls, group: GroupCtx | Subgroup) -> CayleyLattice:
        if isinstance(group, Subgroup):
            return cls(group.ctx, group.elems)
        return cls(group, group.enumerate())

    def _cyclic(self):
        n, T = self.n, self.table
        powers = [np.arange(n)]
        cur = np.arange(n)
        order = np.zeros(n, dtype=np.int64)
        k = 1
        while True:
            order[(cur == self.e) & (order == 0)] = k
            if np.all(order):
                break
            cur = T[cur, np.arange(n)]
            powers.append(cur)
            k += 1
        self.elem_order = order
        P = np.stack(powers, axis=1)
        cid_of: dict[bytes, int] = {}
        self.elem_cid = np.empty(n, dtype=np.int64)
        self.cyc_bits, self.cyc_gen, self.cyc_order = [], [], []
        for i in range(n):
            members = np.unique(P[i, : order[i]])
            key = members.tobytes()
            c = cid_of.get(key)
            if c is None:
                c = len(self.cyc_bits)
                cid_of[key] = c
                mask = np.zeros(n, dtype=bool)
                mask[members] = True
                self.cyc_bits.append(_bits(mask))
                self.cyc_gen.append(i)
                self.cyc_order.append(int(order[i]))
            self.elem_cid[i] = c
        self.n_cyclic = len(self.cyc_bits)

    def _intern(self, bits: int, gens: tuple[int, ...]) -> int:
        sid = self._sid.get(bits)
        if sid is None:
            sid = len(self.sub_bits)
            self._sid[bits] = sid
            self.sub_bits.append(bits)
            self.sub_order.append(bin(bits).count("1"))
            self.sub_gens.append(gens)
        return sid

    def _close(self, gens: tuple[int, ...], start: np.ndarray | None) -> tuple[int, int]:
        n, T = self.n, self.table
        mask = np.zeros(n, dtype=bool)
        mask[self.e] = True
        if start is not None:
            mask |= start
        g = np.asarray(gens, dtype=np.int64)
        frontier = np.flatnonzero(mask)
        size = int(mask.sum())
        while frontier.size:
            prods = np.unique(T[np.ix_(frontier, g)])
            new = prods[~mask[prods]]
            if not new.size:
                break
            mask[new] = True
            size += new.size
            if 2 * size > n:
                return self.full_bits, size
            frontier = new
        return _bits(mask), size

    def mask(self, sid: int) -> np.ndarray:
        b = self.sub_bits[sid].to_bytes((self.n + 7) // 8, "little")
        return np.unpackbits(np.frombuffer(b, dtype=np.uint8), bitorder="little")[: self.n].astype(bool)

    def join(self, sid: int, cid: int) -> int:
        key = (sid, cid)
        out = self._join.get(key)
        if out is not None:
            return out
        if self.cyc_bits[cid] & ~self.sub_bits[sid] == 0:
            out = sid
        else:
            gens = self.sub_gens[sid] + (self.cyc_gen[cid],)
            start = None if sid == self.trivial else self.mask(sid)
            bits, _ = self._close(gens, start)
            out = self._intern(bits, gens)
        self._join[key] = out
        return out

    def contains_cyclic(self, sid: int, cid: int) -> bool:
        return self.cyc_bits[cid] & ~self.sub_bits[sid] == 0

    def span(self, cids) -> int:
        sid = self.trivial
        for c in cids:
            sid = self.join(sid, c)
        return sid

    # -- automorphisms ---------------------------------------------------------

    def inner_perms(self) -> np.ndarray:
        """Row g is the permutation x -> g x g^-1 of element indices."""
        return self._inner()

    def _inner(self) -> np.ndarray:
        T, n = self.table, self.n
        gx = T  # gx[g, x] = g x
        return T[gx, np.broadcast_to(self.inv[:, None], (n, n))]

    def cyclic_perms(self, perms: np.ndarray) -> np.ndarray:
        return self.elem_cid[perms[:, self.cyc_gen]]


def pgl_outer_perm(lat: CayleyLattice) -> np.ndarray:
    """Conjugation by diag(nu, 1), nu a nonresidue, on a PSL(2,p) lattice."""
    ctx = lat.ctx
    if ctx.kind != "PSL" or ctx.field.degree != 1 or lat.n != ctx.order:
        raise GroupError("outer diagonal automorphism needs the whole PSL(2,p)")
    F = ctx.field
    p = F.p
    nu = next(a for a in range(2, p) if pow(a, (p - 1) // 2, p) == p - 1)
    a, b, c, d = ctx.decode(lat.elems)
    img = ctx.canon(a, F.mul_codes(b, nu), F.mul_codes(c, pow(nu, p - 2, p)), d)
    return np.searchsorted(lat.elems, img)


def automorphism_perms(lat: CayleyLattice, kind: str = "inner") -> np.ndarray:
    inner = lat._inner()
    if kind == "inner":
        return inner
    if kind == "pgl":
        delta = pgl_outer_perm(lat)
        return np.concatenate([inner, inner[:, delta]])
    raise ValueError(f"unknown automorphism set {kind!r}")


# -- searching irredundant families -------------------------------------------------

@dataclass
class SearchResult:
    m: int
    exhaustive: bool
    witness: tuple[int, ...]  # element codes of a longest irredundant generating sequence
    nodes: int = 0
    families: list[tuple[int, ...]] = field(default_factory=list)  # cyclic ids, when collected


class _FamilySearch:
    """Depth-first enumeration of irredundant families of cyclic subgroups.

    A family ``(C_1, ..., C_j)`` is extended by ``C`` only when the result is
    still irredundant.  Symmetry: ``C_1`` runs over automorphism-class
    representatives and ``C_2`` over orbit representatives of the stabilizer
    of ``C_1``; the rest run over increasing ids.  Every automorphism orbit of
    families is visited at least once.
    """

    def __init__(self, lat: CayleyLattice, perms: np.ndarray, budget: int, depth: int,
                 collect_length: int | None = None):
        self.lat = lat
        self.cperm = lat.cyclic_perms(perms)
        self.budget = budget
        self.depth = depth
        self.collect_length = collect_length
        self.nodes = 0
        self.best: tuple[int, ...] = ()
        self.found: list[tuple[int, ...]] = []
        self.exhausted = False
        nontrivial = [c for c in range(lat.n_cyclic) if lat.cyc_order[c] > 1]
        self.cands = nontrivial

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise _Budget

    def run(self):
        lat = self.lat
        cls_rep = self.cperm.min(axis=0)
        try:
            for c1 in self.cands:
                if cls_rep[c1] != c1:
                    continue
                stab = self.cperm[:, c1] == c1
                orbit_rep = self.cperm[stab].min(axis=0)
                J = lat.join(lat.trivial, c1)
                self._tick()
                if J == lat.full:
                    self._record((c1,))
                    continue
                for c2 in self.cands:
                    if c2 == c1 or orbit_rep[c2] != c2:
                        continue
                    self._extend([c1], J, [lat.trivial], c2, free_from=0)
        except _Budget:
            self.exhausted = True

    def _extend(self, fam, J, L, c, free_from):
        lat = self.lat
        if lat.contains_cyclic(J, c):
            return
        self._tick()
        newL = []
        for Ci, Li in zip(fam, L):
            Lc = lat.join(Li, c)
            if lat.contains_cyclic(Lc, Ci):
                return
            newL.append(Lc)
        newL.append(J)
        fam = fam + [c]
        J2 = lat.join(J, c)
        if J2 == lat.full:
            self._record(tuple(fam))
            return
        if len(fam) >= self.depth:
            return
        fixed = set(fam[:2])
        for c3 in self.cands:
            if c3 < free_from or c3 in fixed:
                continue
            self._extend(fam, J2, newL, c3, c3 + 1)

    def _record(self, fam):
        if len(fam) > len(self.best):
            self.best = fam
        if self.collect_length is not None and len(fam) == self.collect_length:
            self.found.append(fam)


class _Budget(Exception):
    pass


def _lattice(group, lattice: CayleyLattice | None) -> CayleyLattice:
    return lattice if lattice is not None else CayleyLattice.of(group)


def max_irredundant_length(group: GroupCtx | Subgroup, budget: int = DEFAULT_M_BUDGET,
                           depth: int = DEFAULT_M_DEPTH,
                           lattice: CayleyLattice | None = None) -> SearchResult:
    """m(G), the largest length of an irredundant generating sequence.

    ``exhaustive`` is False when the node budget ran out before the search
    space was covered; ``m`` is then only a lower bound.
    """
    lat = _lattice(group, lattice)
    if lat.n == 1:
        return SearchResult(0, True, ())
    search = _FamilySearch(lat, lat._inner(), budget, depth)
    search.run()
    witness = tuple(int(lat.elems[lat.cyc_gen[c]]) for c in search.best)
    return SearchResult(len(search.best), not search.exhausted, witness, search.nodes)


def irredundant_families(group: GroupCtx | Subgroup, length: int, perms: np.ndarray | None = None,
                         budget: int = DEFAULT_M_BUDGET,
                         lattice: CayleyLattice | None = None) -> SearchResult:
    """Irredundant generating families of cyclic subgroups of one length.

    At least one family per automorphism orbit is returned (``perms`` gives
    the automorphisms as element permutations; inner by default).
    """
    lat = _lattice(group, lattice)
    perms = lat._inner() if perms is None else perms
    search = _FamilySearch(lat, perms, budget, length, collect_length=length)
    search.run()
    witness = tuple(int(lat.elems[lat.cyc_gen[c]]) for c in search.best)
    return SearchResult(len(search.best), not search.exhausted, witness, search.nodes, search.found)


def group_satisfies_rp(group: GroupCtx | Subgroup, budget: int = DEFAULT_M_BUDGET,
                       lattice: CayleyLattice | None = None) -> bool:
    """Whether every irredundant generating sequence of length m(G) has RP.

    Replacement and irredundance only see cyclic subgroups, so each family of
    cyclic subgroups (up to inner automorphism) is checked once.
    """
    lat = _lattice(group, lattice)
    m = max_irredundant_length(group, budget, lattice=lat)
    if not m.exhaustive:
        raise CapExceeded("m(G) search budget exhausted")
    fams = irredundant_families(group, m.m, budget=budget, lattice=lat)
    if not fams.exhaustive:
        raise CapExceeded("family search budget exhausted")
    return all(_family_has_rp(lat, fam) for fam in fams.families)


def _family_has_rp(lat: CayleyLattice, fam) -> bool:
    slots = [lat.span(fam[:i] + fam[i + 1:]) for i in range(len(fam))]
    for c in range(lat.n_cyclic):
        if lat.cyc_order[c] == 1:
            continue
        if not any(lat.join(H, c) == lat.full for H in slots):
            return False
    return True


# -- counting length-4 sequences up to automorphism ------------------------------------

COUNT_MAX_P = 19


@dataclass
class AutCount:
    p: int
    cyclic_families: int  # orbits of sets of cyclic subgroups
    element_sets: int  # orbits of sets of elements
    sequences: int  # orbits of ordered sequences of elements
    exhaustive: bool


def _canon_rows(perms: np.ndarray, items: np.ndarray, ordered: bool) -> tuple:
    img = perms[:, items]
    if not ordered:
        img = np.sort(img, axis=1)
    best = img[np.lexsort(img.T[::-1])[0]]
    return tuple(best.tolist())


def aut_orbit_counts(p: int, length: int = 4, budget: int = DEFAULT_M_BUDGET) -> AutCount:
    """Orbits of length-``length`` irredundant generating data of PSL(2,p) under Aut = PGL(2,p)."""
    if p > COUNT_MAX_P:
        raise GroupError(f"p = {p} above the counting cap {COUNT_MAX_P}")
    ctx = GroupCtx(make_field(p, 1), "PSL")
    lat = CayleyLattice.of(ctx)
    perms = automorphism_perms(lat, "pgl")
    res = irredundant_families(ctx, length, perms=perms, budget=budget, lattice=lat)
    cperm = lat.cyclic_perms(perms)
    fam_orbits = {_canon_rows(cperm, np.asarray(f), False) for f in res.families}
    sets, seqs = set(), set()
    for fam in fam_orbits:
        choices = [np.flatnonzero((lat.elem_cid == c) & (lat.elem_order == lat.cyc_order[c])) for c in fam]
        for pick in itertools.product(*choices):
            arr = np.asarray(pick)
            sets.add(_canon_rows(perms, arr, False))
            for perm in itertools.permutations(range(len(arr))):
                seqs.add(_canon_rows(perms, arr[list(perm)], True))
    return AutCount(p, len(fam_orbits), len(sets), len(seqs), res.exhaustive)


def count_length4_up_to_aut(p: int, budget: int = DEFAULT_M_BUDGET) -> int:
    """Length-4 irredundant generating sets of PSL(2,p), up to automorphism."""
    return aut_orbit_counts(p, 4, budget).element_sets


__all__ = [
    "AutCount", "CayleyLattice", "GenSequence", "GeneralPositionTuple", "Irredundance",
    "Prop32Result", "RPReport", "RPWitness", "SearchResult", "Verdict",
    "aut_orbit_counts", "count_length4_up_to_aut", "element_fails_all_slots",
    "failing_elements", "general_position_check", "gp_maximal_tuples",
    "group_satisfies_rp", "irredundant_families", "is_generating", "is_irredundant",
    "max_irredundant_length", "prop31_criterion", "prop32_criterion", "rp_check",
    "slot_maximal_choices", "slot_orders_for",
]
