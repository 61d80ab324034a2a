import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracle import Field, Matrices, max_irredundant, rp_failures
from psl2rp.genseq import (
    CayleyLattice,
    GenSequence,
    Verdict,
    aut_orbit_counts,
    automorphism_perms,
    failing_elements,
    general_position_check,
    gp_maximal_tuples,
    group_satisfies_rp,
    irredundant_families,
    is_generating,
    is_irredundant,
    max_irredundant_length,
    prop31_criterion,
    prop32_criterion,
    rp_check,
    slot_maximal_choices,
)
from psl2rp.groups import closure, generates, maximal_subgroup_classes
from psl2rp.psl2 import GroupError, Mat2, make_group

A5 = make_group(5)
SL3 = make_group(3, 1, "SL")


def _q8():
    F = SL3.field
    i = SL3.canonicalize(Mat2.of(F, 0, -1, 1, 0)).code
    j = SL3.canonicalize(Mat2.of(F, 1, 1, 1, -1)).code
    return i, j, closure(SL3, [i, j])


def _tuple(ctx, code):
    return tuple((int(v), 0) for v in ctx.decode(code))


def _irredundant_generating(ctx, rng, k):
    allc = ctx.enumerate()
    while True:
        items = [int(v) for v in rng.choice(allc, k, replace=False)]
        s = GenSequence.of(ctx, items)
        if is_generating(s) and is_irredundant(s):
            return s


def test_sequence_validation():
    with pytest.raises(ValueError):
        GenSequence.of(A5, [])
    with pytest.raises(ValueError):
        GenSequence.of(A5, [5, 5])
    i, j, Q = _q8()
    outside = int(SL3.enumerate()[~Q.contains(SL3.enumerate())][0])
    with pytest.raises(GroupError):
        GenSequence.of(SL3, [i, outside], Q)


def test_irredundance_reports_slot():
    i, j, Q = _q8()
    s = GenSequence.of(SL3, [i, j, int(SL3.mul(i, j))], Q)
    irr = is_irredundant(s)
    assert not irr and irr.slot == 0 and irr.slot_orders == (8, 8, 8)
    assert rp_check(s).satisfies_rp is None


@settings(max_examples=12)
@given(seed=st.integers(0, 10_000), k=st.sampled_from([2, 3]))
def test_rp_check_matches_brute_force(seed, k):
    s = _irredundant_generating(A5, np.random.default_rng(seed), k)
    M = Matrices(Field(5, 1), projective=True)
    bad = sorted(M.code(g, A5.q) for g in rp_failures(M, [_tuple(A5, c) for c in s.items]))
    codes, _ = failing_elements(s)
    assert codes.tolist() == bad
    rep = rp_check(s)
    assert rep.satisfies_rp == (not bad) and rep.n_failing == len(bad)
    if bad:
        assert rep.witness.element == bad[0]
        assert all(o < 60 for o in rep.witness.slot_orders)


def test_q8_witness_is_minus_one():
    i, j, Q = _q8()
    rep = rp_check(GenSequence.of(SL3, [i, j], Q))
    assert rep.satisfies_rp is False and rep.n_failing == 1
    assert SL3.matrix(rep.witness.element) == -Mat2.identity(SL3.field)
    assert rep.witness.slot_orders == [4, 4]


@pytest.mark.parametrize("name", ["A4", "Q8", "C6"])
def test_m_against_oracle(name):
    M = Matrices(Field(3, 1), projective=(name == "A4"))
    if name == "A4":
        ctx, H = make_group(3), None
        elems = M.elements()
    else:
        ctx = SL3
        if name == "Q8":
            H = _q8()[2]
        else:
            F = SL3.field
            # a unipotent element and -I generate a cyclic group of order 6
            H = closure(SL3, [SL3.canonicalize(Mat2.of(F, 1, 1, 0, 1)).code,
                              SL3.canonicalize(Mat2.of(F, -1, 0, 0, -1)).code])
        elems = [_tuple(ctx, c) for c in H.elems]
    group = H if H is not None else ctx
    assert max_irredundant_length(group).m == max_irredundant(M, elems)


@pytest.mark.parametrize("group,m", [("A5", 3), ("S4", 3), ("Q8", 2)])
def test_small_m_values(group, m):
    G = {"A5": A5, "S4": make_group(3, 1, "PGL"), "Q8": _q8()[2]}[group]
    res = max_irredundant_length(G)
    assert res.exhaustive and res.m == m
    ctx = G if not hasattr(G, "ctx") else G.ctx
    s = GenSequence.of(ctx, res.witness, None if G is ctx else G)
    assert is_generating(s) and is_irredundant(s)


def test_a5_satisfies_rp():
    assert group_satisfies_rp(A5)


def test_q8_fails_rp():
    assert not group_satisfies_rp(_q8()[2])


def test_lattice_join_matches_closure():
    lat = CayleyLattice.of(make_group(7))
    rng = np.random.default_rng(0)
    for _ in range(20):
        cids = [int(c) for c in rng.choice(lat.n_cyclic, 2)]
        sid = lat.span(cids)
        gens = [int(lat.elems[lat.cyc_gen[c]]) for c in cids]
        assert lat.sub_order[sid] == closure(lat.ctx, gens).order
        assert np.array_equal(lat.elems[lat.mask(sid)], closure(lat.ctx, gens).elems)


def test_automorphisms_are_permutations():
    lat = CayleyLattice.of(make_group(7))
    for kind, count in (("inner", 168), ("pgl", 336)):
        P = automorphism_perms(lat, kind)
        assert len({row.tobytes() for row in P}) == count
        T = lat.table
        for row in P[:: max(1, len(P) // 10)]:
            # automorphism: row[x y] = row[x] row[y]
            assert np.array_equal(row[T], T[np.ix_(row, row)])


def test_families_cover_orbits():
    res = irredundant_families(make_group(7), 4)
    assert res.exhaustive and res.families
    assert all(len(f) == 4 for f in res.families)


@pytest.mark.parametrize("p,sets", [(5, 0), (7, 2)])
def test_aut_orbit_counts_small(p, sets):
    c = aut_orbit_counts(p)
    assert c.exhaustive and c.element_sets == sets


def test_aut_orbit_cap():
    with pytest.raises(GroupError):
        aut_orbit_counts(23)


def test_general_position():
    ctx = make_group(7)
    S4s = maximal_subgroup_classes(ctx)["Sym4"]
    A, B = S4s[0], S4s[1]
    assert general_position_check([A, B]) == (A != B)
    with pytest.raises(ValueError):
        general_position_check([A])


def test_maximal_tuples_and_verdicts():
    s = _irredundant_generating(A5, np.random.default_rng(4), 3)
    choices = slot_maximal_choices(s)
    assert all(choices)
    tuples = gp_maximal_tuples(s, exhaustive=True)
    for T in tuples:
        for i, M in enumerate(T.subgroups):
            assert closure(A5, s.without(i)).issubset(M)
            assert not M.is_full
    v = prop31_criterion(s, tuples)
    assert v in (Verdict.GUARANTEED, Verdict.INCONCLUSIVE)
    if v is Verdict.GUARANTEED:
        assert rp_check(s).satisfies_rp
    if tuples:
        r = prop32_criterion(s, tuples[0], 0)
        assert isinstance(r.verdict, Verdict)
