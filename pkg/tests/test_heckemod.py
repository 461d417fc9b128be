import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from klspecht import heckemod
from klspecht.heckemod import (
    act_generator,
    act_inverse_generator,
    act_word,
    bar_vector,
    invert_unitriangular,
    is_identity,
    kl_table,
    mat_mul,
    parabolic_context,
)
from klspecht.laurent import ONE, Q, QINV, ZERO, LaurentPoly
from klspecht.weyl import SignedPerm, WeylType

A3 = WeylType("A", 3)
E, S2, S2S1 = SignedPerm((1, 2, 3)), SignedPerm((1, 3, 2)), SignedPerm((3, 1, 2))


@pytest.fixture
def ctx():
    return parabolic_context(A3, (1,))


def vec(ctx, **terms):
    names = {"e": E, "s2": S2, "s2s1": S2S1}
    return heckemod.ModuleVector(ctx, {ctx.index[names[k]]: v for k, v in terms.items()})


def test_coset_reps(ctx):
    assert ctx.reps == [E, S2, S2S1]


def test_generator_action_cases(ctx):
    Me, Ms2 = ctx.basis(E), ctx.basis(S2)
    assert act_generator(Me, 1) == Me.scale(QINV)
    assert act_generator(Ms2, 1) == ctx.basis(S2S1)
    assert act_generator(Ms2, 2) == Me + Ms2.scale(QINV - Q)


def test_inverse_generator(ctx):
    Me, Ms2 = ctx.basis(E), ctx.basis(S2)
    assert act_generator(act_inverse_generator(Me, 1), 1) == Me
    assert act_inverse_generator(Me, 1) == Me.scale(Q)
    assert act_inverse_generator(Ms2, 2) == Me


def test_bar(ctx):
    Me, Ms2 = ctx.basis(E), ctx.basis(S2)
    assert bar_vector(Me) == Me
    assert bar_vector(Ms2) == Ms2 + Me.scale(Q - QINV)
    for k in range(len(ctx)):
        assert bar_vector(bar_vector(ctx.basis(k))) == ctx.basis(k)


def test_bar_is_antilinear(ctx):
    v = vec(ctx, e=Q, s2=ONE + Q * Q)
    w = bar_vector(v)
    assert w == bar_vector(ctx.basis(E)).scale(QINV) + bar_vector(ctx.basis(S2)).scale(ONE + QINV * QINV)


def test_kl_positive(ctx):
    kl = kl_table(A3, (1,), "positive")
    assert kl.kl_vector(1) == vec(ctx, s2=ONE, e=Q)
    assert kl.kl_vector(2) == vec(ctx, s2s1=ONE, s2=Q, e=Q * Q)
    # M_{s2 s1} = KL_{s2 s1} - q KL_{s2} + 0 KL_e
    assert [kl.p_entry(2, x) for x in range(3)] == [ZERO, -Q, ONE]


def test_kl_negative(ctx):
    kl = kl_table(A3, (1,), "negative")
    assert kl.kl_vector(1) == vec(ctx, s2=ONE, e=-QINV)
    assert kl.kl_vector(2) == vec(ctx, s2s1=ONE, s2=-QINV)
    assert kl.m[0][2] == ZERO


def test_single_coset():
    kl = kl_table(A3, (1, 2), "positive")
    assert kl.m == [[ONE]] and kl.p == [[ONE]]


@pytest.mark.parametrize("side", heckemod.SIDES)
@pytest.mark.parametrize("t", [WeylType("A", 4), WeylType("B", 3)], ids=str)
def test_kl_properties_full_group(t, side):
    kl = kl_table(t, (), side)
    for w in range(kl.size):
        v = kl.kl_vector(w)
        assert bar_vector(v) == v
    assert is_identity(mat_mul(kl.m, kl.p))
    assert is_identity(mat_mul(kl.p, kl.m))


def test_regular_kl_polynomials_B2():
    # for J empty every coefficient of the regular representation is a power of q on B2
    kl = kl_table(WeylType("B", 2), (), "positive")
    ctx = kl.ctx
    for x, w in itertools.product(range(kl.size), repeat=2):
        if ctx.leq(x, w):
            assert kl.m[x][w] == Q ** (ctx.length(w) - ctx.length(x))


def test_sides_are_related_by_sign_twist():
    # m^neg_{x,w}(q) = (-1)^{l(w)-l(x)} m^pos_{x,w}(q^-1) for the full Hecke algebra
    t = WeylType("B", 3)
    pos, neg = kl_table(t, (), "positive"), kl_table(t, (), "negative")
    ctx = pos.ctx
    for x, w in itertools.product(range(pos.size), repeat=2):
        sign = -1 if (ctx.length(w) - ctx.length(x)) % 2 else 1
        assert neg.m[x][w] == pos.m[x][w].bar() * sign


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=2), max_size=8))
def test_action_matches_inverse(word):
    ctx = parabolic_context(WeylType("B", 3), (0,))
    v = ctx.basis(3)
    assert act_word(act_word(v, word), list(reversed(word)), inverse=True) == v


def test_invert_unitriangular():
    m = [[ONE, Q, Q * Q], [ZERO, ONE, Q], [ZERO, ZERO, ONE]]
    p = invert_unitriangular(m)
    assert is_identity(mat_mul(m, p))
    assert p[0][2] == ZERO


def test_outputs(ctx):
    kl = kl_table(A3, (1,), "positive")
    obj = kl.to_json()
    assert obj["reps"] == [[1, 2, 3], [1, 3, 2], [3, 1, 2]]
    assert LaurentPoly.from_json(obj["m"][0][1]) == Q
    rows = kl.csv_rows()
    assert rows[0] == ["x", "w", "m", "p"]


def test_coset_cap(monkeypatch):
    monkeypatch.setenv("CAP_COSETS", "3")
    with pytest.raises(heckemod.CapExceeded):
        heckemod.ParabolicContext.build(WeylType("B", 2), ())
