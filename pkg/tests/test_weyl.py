import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from klspecht import weyl
from klspecht.weyl import CapExceeded, SignedPerm, WeylType, generator, length, weyl_group

SMALL_TYPES = [WeylType("A", d) for d in range(1, 5)] + [WeylType("B", d) for d in range(1, 4)]


def elements_of(t):
    return st.sampled_from(weyl_group(t).elements)


@pytest.mark.parametrize("t", SMALL_TYPES, ids=str)
def test_order(t):
    expected = math.factorial(t.d) * (2**t.d if t.tag == "B" else 1)
    assert len(weyl_group(t)) == expected == t.order


@pytest.mark.parametrize("t", SMALL_TYPES, ids=str)
def test_length_matches_bfs(t):
    dist = weyl.cayley_distances(t)
    assert all(dist[w] == length(t, w) for w in weyl_group(t).elements)


def test_generator_conventions():
    t = WeylType("B", 3)
    w = SignedPerm((3, -1, 2))
    # right multiplication by s_i acts on positions
    assert w.right_mul_generator(1) == SignedPerm((-1, 3, 2))
    assert w.right_mul_generator(0) == SignedPerm((-3, -1, 2))
    assert w * generator(t, 2) == w.right_mul_generator(2)
    assert generator(t, 2) * w == w.left_mul_generator(2)
    assert WeylType("A", 3).generators == (1, 2)
    assert t.generators == (0, 1, 2)


def test_string_round_trip():
    w = SignedPerm.parse("|3,-1,2|")
    assert str(w) == "|3,-1,2|"
    assert w(2) == -1 and w(-2) == 1


@settings(max_examples=60)
@given(st.data())
def test_group_axioms(data):
    t = WeylType("B", 3)
    u, v, w = (data.draw(elements_of(t)) for _ in range(3))
    assert (u * v) * w == u * (v * w)
    assert u * u.inverse() == SignedPerm.identity(3)
    assert length(t, u.inverse()) == length(t, u)
    assert length(t, u * v) <= length(t, u) + length(t, v)


@settings(max_examples=60)
@given(st.data())
def test_reduced_words(data):
    t = WeylType("B", 3)
    g = weyl_group(t)
    w = data.draw(elements_of(t))
    word = g.reduced_word(w)
    assert len(word) == g.length(w)
    assert g.word_to_element(word) == w


@pytest.mark.parametrize("t", [WeylType("A", 4), WeylType("B", 3)], ids=str)
def test_bruhat_is_subword_order(t):
    g = weyl_group(t)
    for w in g.elements[:: max(1, len(g) // 12)]:
        below = weyl.subword_products(t, g.reduced_word(w))
        assert {x for x in g.elements if g.leq(x, w)} == below


def test_bruhat_examples():
    t = WeylType("A", 3)
    e, s1, s2 = SignedPerm((1, 2, 3)), generator(t, 1), generator(t, 2)
    assert weyl.bruhat_leq(t, e, s1)
    assert not weyl.bruhat_leq(t, s1, s2)
    w0 = SignedPerm((3, 2, 1))
    assert all(weyl.bruhat_leq(t, x, w0) for x in weyl_group(t).elements)


def test_all_reduced_words_of_longest_A3():
    g = weyl_group(WeylType("A", 3))
    assert sorted(g.all_reduced_words(SignedPerm((3, 2, 1)))) == [(1, 2, 1), (2, 1, 2)]


@pytest.mark.parametrize("t", SMALL_TYPES, ids=str)
def test_minimal_coset_reps(t):
    g = weyl_group(t)
    for r in range(len(t.generators) + 1):
        for J in itertools.combinations(t.generators, r):
            reps = g.minimal_coset_reps(J)
            W_J = g.parabolic_subgroup(J)
            assert len(reps) * len(W_J) == len(g)
            # every element factors uniquely as (W_J element) * (rep)
            products = {u * x for u in W_J for x in reps}
            assert len(products) == len(g)
            for x in reps:
                assert all(g.length(u * x) == g.length(u) + g.length(x) for u in W_J)


def test_reps_B3_J12():
    reps = weyl.minimal_coset_reps(WeylType("B", 3), (1, 2))
    assert len(reps) == 8


def test_invalid_inputs():
    with pytest.raises(ValueError):
        WeylType("C", 2)
    with pytest.raises(ValueError):
        WeylType("A", 0)
    with pytest.raises(ValueError):
        SignedPerm((1, 1, 2))
    with pytest.raises(ValueError):
        weyl.minimal_coset_reps(WeylType("A", 3), (0,))


def test_group_cap(monkeypatch):
    monkeypatch.setenv("CAP_GROUP_ORDER", "100")
    with pytest.raises(CapExceeded):
        weyl.weyl_group(WeylType("A", 6))
