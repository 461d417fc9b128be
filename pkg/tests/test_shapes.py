import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from klspecht import shapes
from klspecht.shapes import (
    Composition,
    Tableau,
    act_on_letters,
    check_bijection,
    composition_to_J,
    enumerate_row_standard,
    enumerate_standard,
    tableau_to_coset_rep,
    to_tabloid,
)
from klspecht.weyl import SignedPerm, WeylType, weyl_group


def A(*parts):
    return Composition("A", parts)


def B(*parts):
    return Composition("B", parts)


def brute_force_fillings(shape):
    """Every bijective (and, in type B, centro-symmetric) filling, by exhausting the letter set."""
    if shape.kind == "A":
        for perm in itertools.permutations(range(1, shape.d + 1)):
            it = iter(perm)
            yield Tableau(shape, tuple(tuple(next(it) for _ in range(p)) for p in shape.parts))
        return
    cells = sorted(shape.cells)
    for perm in itertools.permutations(range(-shape.d, shape.d + 1)):
        filling = dict(zip(cells, perm))
        if all(filling[(-i, -j)] == -x for (i, j), x in filling.items()):
            yield Tableau.from_filling(shape, filling)


def test_compositions_examples():
    assert [c.parts for c in shapes.compositions("A", 2, 4)] == [(1, 3), (2, 2), (3, 1)]
    assert {c.parts for c in shapes.compositions("B", 3, 3)} == {(1, 5, 1), (2, 3, 2), (3, 1, 3)}
    assert [c.parts for c in shapes.compositions("B", 7, 3)] == [(1,) * 7]


def test_J_examples():
    assert composition_to_J(B(2, 3, 2)) == (0, 2)
    assert composition_to_J(B(1, 5, 1)) == (0, 1)
    assert composition_to_J(B(1, 2, 1, 2, 1)) == (1,)
    assert composition_to_J(A(2, 1)) == (1,)
    assert composition_to_J(A(1, 2)) == (2,)


def test_composition_validation():
    with pytest.raises(ValueError):
        B(2, 3, 1)  # not symmetric
    with pytest.raises(ValueError):
        B(2, 2, 2)  # even middle part
    with pytest.raises(ValueError):
        A(2, 0)


@pytest.mark.parametrize(
    "shape", [A(2, 1), A(2, 2), A(3, 1), A(1, 2, 1), B(3, 1, 3), B(1, 3, 1), B(2, 1, 2), B(5)], ids=str
)
def test_row_standard_matches_brute_force(shape):
    brute = {T for T in brute_force_fillings(shape) if T.is_row_standard()}
    assert set(enumerate_row_standard(shape)) == brute
    assert {T for T in brute if T.is_standard()} == set(enumerate_standard(shape))


def test_counts():
    assert len(enumerate_row_standard(A(2, 1))) == 3
    assert len(enumerate_row_standard(B(3, 1, 3))) == 8
    assert len(enumerate_row_standard(A(4))) == 1
    assert [len(enumerate_standard(A(m, m))) for m in (2, 3)] == [2, 5]
    assert len(enumerate_standard(A(2, 2, 2))) == 5


@pytest.mark.parametrize("d", range(1, 7))
def test_hook_formula(d):
    for shape in shapes.partitions("A", d):
        assert len(enumerate_standard(shape)) == shapes.hook_count(shape)


def test_coset_rep_examples():
    shape = A(2, 1)
    images = [tableau_to_coset_rep(Tableau(shape, rows)) for rows in [((1, 2), (3,)), ((1, 3), (2,)), ((2, 3), (1,))]]
    assert images == [SignedPerm((1, 2, 3)), SignedPerm((1, 3, 2)), SignedPerm((3, 1, 2))]


def test_act_and_tabloid_examples():
    T = Tableau(A(2, 1), ((1, 2), (3,)))
    assert act_on_letters(T, SignedPerm((1, 2, 3))) == T
    swapped = act_on_letters(T, SignedPerm((3, 2, 1)))
    assert swapped.rows == ((3, 2), (1,))
    assert to_tabloid(swapped).rows == ((2, 3), (1,))


def test_type_B_action_keeps_symmetry():
    shape = B(3, 1, 3)
    for T in enumerate_row_standard(shape):
        U = act_on_letters(T, SignedPerm((-1, 2, 3)))  # s_0
        assert all(U.filling[(-i, -j)] == -x for (i, j), x in U.filling.items())
        R = to_tabloid(U)
        assert R.is_row_standard()
        assert all(sorted(a) == list(b) for a, b in zip(U.rows, R.rows))


@pytest.mark.parametrize("variant", shapes.MAP_VARIANTS)
def test_every_variant_is_defined(variant):
    # every variant is at least well defined on row-standard tableaux
    for shape in shapes.partitions("A", 3):
        _, image = check_bijection(shape, variant)
        assert len(image) == len(enumerate_row_standard(shape))


@pytest.mark.parametrize("d", range(1, 6))
def test_reference_bijection_type_A(d):
    for shape in shapes.partitions("A", d):
        assert check_bijection(shape, shapes.REFERENCE_VARIANT)[0]
        assert check_bijection(shape, "opposite-top")[0]


@pytest.mark.parametrize("shape", shapes.all_compositions("B", 3), ids=str)
def test_reference_bijection_type_B(shape):
    assert check_bijection(shape, shapes.REFERENCE_VARIANT)[0]
    assert check_bijection(shape, "opposite-top")[0]


@pytest.mark.parametrize("t", [WeylType("A", d) for d in range(2, 6)] + [WeylType("B", d) for d in (2, 3)], ids=str)
def test_opposite_is_order_reversing_involution(t):
    """opposite-top equals x -> w0_J x w0 composed with the reference map."""
    g = weyl_group(t)
    w0 = shapes.longest_element(t)
    for shape in shapes.partitions(t.tag, t.d):
        J = composition_to_J(shape)
        w0J = max(g.parabolic_subgroup(J), key=g.length)
        for T in enumerate_row_standard(shape):
            ref = tableau_to_coset_rep(T)
            assert tableau_to_coset_rep(T, "opposite-top") == w0J * ref * w0


def test_rejects_non_row_standard():
    with pytest.raises(ValueError):
        tableau_to_coset_rep(Tableau(A(2, 1), ((2, 1), (3,))))
    with pytest.raises(ValueError):
        Tableau(A(2, 1), ((1, 1), (3,)))


@settings(max_examples=30)
@given(st.sampled_from(shapes.all_compositions("B", 3)), st.data())
def test_json_round_trip(shape, data):
    T = data.draw(st.sampled_from(enumerate_row_standard(shape)))
    assert Tableau.from_json(T.to_json(), "B") == T


def test_table_labels():
    labels = {c.parts: shapes.young_subgroup_label(c) for c in shapes.all_compositions("B", 3)}
    assert labels[(7,)] == "B3"
    assert labels[(2, 3, 2)] == "S2 x S2"
    assert labels[(1,) * 7] == "e"
