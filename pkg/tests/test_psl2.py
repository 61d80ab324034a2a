import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracle import Field, Matrices
from psl2rp.gf import make_field
from psl2rp.psl2 import (
    CapExceeded,
    GroupCtx,
    GroupError,
    Mat2,
    element_order,
    fricke_comm_trace,
    make_group,
)

SMALL = [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2)]


def _oracle(p, degree, kind):
    return Matrices(Field(p, degree), projective=(kind == "PSL"))


@pytest.mark.parametrize("p,degree", SMALL)
@pytest.mark.parametrize("kind", ["SL", "PSL"])
def test_enumeration_matches_oracle(p, degree, kind):
    ctx = make_group(p, degree, kind)
    M = _oracle(p, degree, kind)
    ref = sorted(M.code(A, ctx.q) for A in M.elements())
    assert np.array_equal(ctx.enumerate(), ref)


@pytest.mark.parametrize("p,degree,kind,order", [
    (5, 1, "PSL", 60), (7, 1, "PSL", 168), (7, 1, "PGL", 336), (3, 1, "SL", 24),
    (7, 2, "PSL", 58800), (11, 2, "PSL", 885720), (3, 2, "PGL", 720),
])
def test_orders(p, degree, kind, order):
    ctx = make_group(p, degree, kind)
    assert ctx.order == order
    if order < 100_000:
        assert ctx.enumerate().size == order


@given(data=st.data(), pd=st.sampled_from(SMALL), kind=st.sampled_from(["SL", "PSL"]))
def test_mul_inv_orders_match_oracle(data, pd, kind):
    ctx = make_group(*pd, kind)
    M = _oracle(*pd, kind)
    allc = ctx.enumerate()
    i, j = data.draw(st.integers(0, allc.size - 1)), data.draw(st.integers(0, allc.size - 1))
    x, y = int(allc[i]), int(allc[j])
    A, B = (tuple((int(v) // pd[0], int(v) % pd[0]) if pd[1] == 2 else (int(v), 0)
                  for v in ctx.decode(c)) for c in (x, y))
    assert int(ctx.mul(x, y)) == M.code(M.mul(A, B), ctx.q)
    assert int(ctx.mul(x, ctx.inv(x))) == ctx.identity
    assert int(ctx.orders(x)) == M.order(A) == element_order(ctx.elem(x))


@pytest.mark.parametrize("kind", ["SL", "PSL", "PGL"])
def test_group_axioms_vectorised(kind):
    ctx = make_group(5, 1, kind)
    g = ctx.enumerate()
    rng = np.random.default_rng(0)
    a, b, c = (rng.choice(g, 200) for _ in range(3))
    assert np.array_equal(ctx.mul(ctx.mul(a, b), c), ctx.mul(a, ctx.mul(b, c)))
    assert np.all(ctx.mul(a, ctx.identity) == a)
    assert np.array_equal(ctx.power(a, 7), ctx.mul(ctx.power(a, 3), ctx.power(a, 4)))


def test_psl_identifies_negatives():
    ctx = make_group(7, 1, "PSL")
    F = ctx.field
    A = Mat2.of(F, 1, 2, 3, 0)
    assert ctx.canonicalize(A) == ctx.canonicalize(-A)
    assert make_group(7, 1, "SL").canonicalize(A) != make_group(7, 1, "SL").canonicalize(-A)


def test_pgl_identifies_scalars():
    ctx = make_group(7, 1, "PGL")
    F = ctx.field
    A = Mat2.of(F, 1, 2, 3, 1)
    assert ctx.canonicalize(A) == ctx.canonicalize(A.scale(F(3)))


def test_canonicalize_errors():
    F = make_field(7)
    with pytest.raises(GroupError):
        make_group(7).canonicalize(Mat2.of(F, 1, 1, 1, 1))
    with pytest.raises(GroupError):
        make_group(7).canonicalize(Mat2.of(F, 2, 0, 0, 1))
    with pytest.raises(GroupError):
        GroupCtx(F, "GL")


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        make_group(11, 2).enumerate(cap=1000)


def test_action_on_projective_line():
    ctx = make_group(7, 1, "PSL")
    pts = np.arange(ctx.n_points)
    rng = np.random.default_rng(1)
    for g, h in rng.choice(ctx.enumerate(), (20, 2)):
        img = ctx.act(pts, int(g))
        assert sorted(img) == list(pts)
        # right action: points move by g then h
        assert np.array_equal(ctx.act(img, int(h)), ctx.act(pts, int(ctx.mul(g, h))))


@given(data=st.data(), pd=st.sampled_from([(5, 1), (13, 1), (7, 2), (11, 2)]))
def test_fricke_identity(data, pd):
    ctx = make_group(*pd, "SL")
    allc = ctx.enumerate()
    x, y = (int(allc[data.draw(st.integers(0, allc.size - 1))]) for _ in range(2))
    A, B = ctx.matrix(x), ctx.matrix(y)
    comm = A * B * A.inverse() * B.inverse()
    assert fricke_comm_trace(A, B) == comm.trace()


def test_fricke_rejects_det_not_one():
    F = make_field(7)
    with pytest.raises(GroupError):
        fricke_comm_trace(Mat2.of(F, 2, 0, 0, 1), Mat2.identity(F))


@pytest.mark.parametrize("p,degree", [(5, 1), (7, 1), (13, 1), (5, 2)])
def test_trace_order_rules(p, degree):
    """Trace 0 gives order 4, trace 1 order 6 (bar -I in characteristic 3)."""
    ctx = make_group(p, degree, "SL")
    g = ctx.enumerate()
    tr, orders = ctx.trace_codes(g), ctx.orders(g)
    assert np.all(orders[tr == 0] == 4)
    assert np.all(orders[tr == ctx.field.one.code] == 6)


def test_trace_one_in_characteristic_three():
    ctx = make_group(3, 1, "SL")
    g = ctx.enumerate()
    hit = g[ctx.trace_codes(g) == 1]
    assert sorted(set(ctx.orders(hit).tolist())) == [2, 6]
    minus = ctx.canonicalize(-Mat2.identity(ctx.field)).code
    assert set(hit[ctx.orders(hit) == 2].tolist()) == {minus}


@pytest.mark.parametrize("p", [11, 19, 29])
def test_golden_trace_orders(p):
    """t^2 - t - 1 = 0: order 10 in SL(2,p), order 5 after projection."""
    sl, psl = make_group(p, 1, "SL"), make_group(p, 1, "PSL")
    g = sl.enumerate()
    ts = [t for t in range(p) if (t * t - t - 1) % p == 0]
    assert len(ts) == 2
    sel = g[np.isin(sl.trace_codes(g), ts)]
    assert set(sl.orders(sel).tolist()) == {10}
    proj = [psl.canonicalize(sl.matrix(int(c))).code for c in sel[:50]]
    assert set(psl.orders(proj).tolist()) == {5}
