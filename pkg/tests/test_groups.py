import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracle import Field, Matrices
from psl2rp.groups import (
    ALT5,
    KLEIN4,
    SYM4,
    IsoClass,
    OvergroupSearch,
    closure,
    conjugate,
    double_coset,
    double_coset_reps,
    expected_maximal_types,
    generated_order,
    generates,
    identify,
    maximal_overgroup,
    maximal_subgroup_classes,
    normalizer,
    outer_conjugate,
    pgl_orbit,
    psl_subgroup,
    subfield_embedding,
)
from psl2rp.psl2 import CapExceeded, GroupError, make_group

PSL7 = make_group(7)


def _tuple(ctx, code):
    p = ctx.field.p
    if ctx.field.degree == 1:
        return tuple((int(v), 0) for v in ctx.decode(code))
    return tuple((int(v) // p, int(v) % p) for v in ctx.decode(code))


@given(data=st.data(), pd=st.sampled_from([(7, 1), (3, 2), (11, 1)]))
def test_closure_matches_oracle(data, pd):
    ctx = make_group(*pd)
    allc = ctx.enumerate()
    gens = [int(allc[data.draw(st.integers(0, allc.size - 1))]) for _ in range(2)]
    M = Matrices(Field(*pd), projective=True)
    ref = sorted(M.code(A, ctx.q) for A in M.closure([_tuple(ctx, g) for g in gens]))
    H = closure(ctx, gens)
    assert np.array_equal(H.elems, ref)
    assert generated_order(ctx, gens) == H.order


@pytest.mark.parametrize("seed", range(5))
def test_generated_order_in_large_group(seed):
    ctx = make_group(7, 2)
    rng = np.random.default_rng(seed)
    allc = ctx.enumerate()
    inv = allc[ctx.orders(allc) == 2]
    gens = rng.choice(inv, 2)
    assert generated_order(ctx, gens) == closure(ctx, gens).order
    gens = rng.choice(allc, 2)
    assert generated_order(ctx, gens) in (ctx.order,) or generated_order(ctx, gens) == closure(ctx, gens).order


def test_klein_and_dihedral_tags():
    allc = PSL7.enumerate()
    inv = allc[PSL7.orders(allc) == 2]
    a = int(inv[0])
    comm = inv[(PSL7.mul(inv, a) == PSL7.mul(a, inv)) & (inv != a)]
    assert identify(closure(PSL7, [a, int(comm[0])])) == KLEIN4
    tags = {str(identify(closure(PSL7, [a, int(b)]))) for b in inv}
    # two involutions generate a dihedral group; no product has order 7
    assert tags == {"Cyclic(2)", "Klein4", "Dihedral(6)", "Dihedral(8)"}


def test_big_tags():
    assert identify(psl_subgroup(make_group(7, 1, "PGL"))) == IsoClass("PSL2", 7)
    full = closure(make_group(7, 1, "PGL"), make_group(7, 1, "PGL").enumerate()[:50])
    assert identify(full) == IsoClass("PGL2", 7)
    ctx = make_group(11)
    A5 = maximal_subgroup_classes(ctx)[str(ALT5)][0]
    assert identify(A5) == ALT5
    B = maximal_subgroup_classes(PSL7)["AffineFrobenius(21)"][0]
    assert identify(B) == IsoClass("AffineFrobenius", 21)


@pytest.mark.parametrize("q,types", [
    (7, ["AffineFrobenius(21)", "Dihedral(6)", "Dihedral(8)", "Sym4"]),
    (11, ["AffineFrobenius(55)", "Dihedral(10)", "Dihedral(12)", "Alt4", "Alt5"]),
    (49, ["AffineFrobenius(1176)", "Dihedral(48)", "Dihedral(50)", "PGL2(7)", "Alt5"]),
    (121, ["AffineFrobenius(7260)", "Dihedral(120)", "Dihedral(122)", "PGL2(11)", "Sym4"]),
])
def test_expected_maximal_types(q, types):
    assert [str(t) for t in expected_maximal_types(q)] == types


def test_expected_maximal_types_rejects():
    for q in (8, 27, 15):
        with pytest.raises(GroupError):
            expected_maximal_types(q)


def test_maximal_classes_psl7():
    classes = maximal_subgroup_classes(PSL7)
    assert {k: len(v) for k, v in classes.items()} == {
        "AffineFrobenius(21)": 8, "Dihedral(6)": 28, "Dihedral(8)": 21, "Sym4": 14}
    # each PSL class has |G : N(H)| members; the two S4 classes fuse under PGL
    for k, groups in classes.items():
        index = PSL7.order // normalizer(groups[0]).order
        assert len(groups) == (2 if k == "Sym4" else 1) * index


@pytest.mark.slow
def test_maximal_classes_psl49():
    classes = maximal_subgroup_classes(make_group(7, 2))
    assert {k: len(v) for k, v in classes.items()} == {
        "AffineFrobenius(1176)": 50, "Dihedral(48)": 1225, "Dihedral(50)": 1176,
        "PGL2(7)": 350, "Alt5": 1960}


def test_overgroups_of_d8():
    allc = PSL7.enumerate()
    D8 = next(H for H in maximal_subgroup_classes(PSL7)["Dihedral(8)"])
    tops = OvergroupSearch(PSL7)(D8)
    assert [str(identify(M)) for M in tops] == ["Sym4", "Sym4"]
    M = maximal_overgroup(D8, seed=3)
    assert M.order == 24 and D8.issubset(M)
    outside = allc[~M.contains(allc)]
    assert all(generates(PSL7, np.append(M.gens, g)) for g in outside)


def test_normalizer_and_conjugate():
    allc = PSL7.enumerate()
    inv = allc[PSL7.orders(allc) == 2]
    a = int(inv[0])
    b = int(inv[(PSL7.mul(inv, a) == PSL7.mul(a, inv)) & (inv != a)][0])
    V = closure(PSL7, [a, b])
    assert identify(normalizer(V)) == SYM4
    g = int(allc[100])
    C = conjugate(V, g)
    assert identify(C) == KLEIN4
    assert np.all(C.contains(PSL7.conj(g, V.elems)))


def test_double_cosets_partition():
    H = closure(PSL7, [PSL7.enumerate()[5], PSL7.enumerate()[17]])
    if H.is_full:
        H = maximal_subgroup_classes(PSL7)["Sym4"][0]
    seen = set(H.elems.tolist())
    for g, D in double_coset_reps(H):
        assert not seen.intersection(D.tolist())
        assert np.array_equal(D, double_coset(H, g))
        inter = H.intersection(conjugate(H, g)).order
        assert D.size == H.order * H.order // inter
        seen.update(D.tolist())
    assert len(seen) == PSL7.order


def test_outer_conjugation_is_automorphism():
    rng = np.random.default_rng(0)
    x, y = rng.choice(PSL7.enumerate(), (2, 100))
    assert np.array_equal(outer_conjugate(PSL7, PSL7.mul(x, y)),
                          PSL7.mul(outer_conjugate(PSL7, x), outer_conjugate(PSL7, y)))
    with pytest.raises(GroupError):
        outer_conjugate(make_group(7, 1, "SL"), x)


def test_s4_classes_fuse_under_pgl():
    S4 = maximal_subgroup_classes(PSL7)["Sym4"][0]
    assert len(pgl_orbit(S4)) == 14


def test_subfield_embeddings():
    ctx = make_group(7, 2)
    P, G = subfield_embedding(ctx, "PSL"), subfield_embedding(ctx, "PGL")
    assert (P.order, G.order) == (168, 336)
    assert P.issubset(G)
    assert identify(P) == IsoClass("PSL2", 7)
    with pytest.raises(GroupError):
        subfield_embedding(PSL7)


def test_closure_cap():
    ctx = make_group(7, 2)
    with pytest.raises(CapExceeded):
        closure(ctx, ctx.enumerate()[1:40], cap=1000)
