import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_window_products
from consecutive_davenport.catalog import metacyclic_catalog, product_catalog
from consecutive_davenport.constructions import (
    RANK_ONE_WITNESSES,
    cyclic_free,
    extremal_free,
    metacyclic_free,
    product_interleave,
    rank_power_free,
)
from consecutive_davenport.descriptors import parse_group
from consecutive_davenport.groups import abelian, cyclic, dihedral
from consecutive_davenport.sequences import OrderedSequence, is_free, is_free_unweighted_fast
from consecutive_davenport.weights import full_weight, punctured_set, unit_nonsquares, unit_powers, unweighted


@pytest.mark.parametrize("n", range(2, 20))
def test_cyclic_free(n):
    s = cyclic_free(n)
    assert len(s) == n - 1 and is_free(s, [1])


def test_cyclic_free_rejects_trivial():
    with pytest.raises(ValueError):
        cyclic_free(1)


@pytest.mark.parametrize("desc", metacyclic_catalog(16))
def test_metacyclic_free_has_length_order_minus_one(desc):
    G = parse_group(desc)
    s = metacyclic_free(G)
    assert len(s) == G.order - 1
    assert is_free_unweighted_fast(s)
    assert is_free(s, unweighted(G.exponent))


@pytest.mark.parametrize("n", range(2, 10))
def test_metacyclic_free_degenerates_to_cyclic(n):
    assert metacyclic_free((n, 1, n, 1)).elements == cyclic_free(n).elements


def test_metacyclic_free_dihedral_word():
    assert metacyclic_free(dihedral(4)).text() == "y,y,y,x,y,y,y"
    with pytest.raises(ValueError):
        metacyclic_free(cyclic(4))


def test_interleave_example():
    s = product_interleave(cyclic_free(2), cyclic_free(3))
    assert len(s) == 5
    assert s.text() == "(1|0),(0|1),(1|0),(0|1),(1|0)"
    assert is_free(s, [1])


def test_interleave_with_empty_second_factor():
    s1 = cyclic_free(4)
    s = product_interleave(s1, OrderedSequence(cyclic(3)))
    assert len(s) == 3 and is_free(s, [1])


def test_interleave_rejects_mismatched_exponents_when_weighted():
    with pytest.raises(ValueError, match="exp"):
        product_interleave(cyclic_free(2), cyclic_free(3), full_weight(6))


def test_interleave_rejects_non_free_input():
    with pytest.raises(ValueError, match="not free"):
        product_interleave(OrderedSequence(cyclic(2), [1, 1]), cyclic_free(3))


def test_interleave_onto_abelian_table():
    s = product_interleave(cyclic_free(2), cyclic_free(4), product=abelian([2, 4]))
    assert s.group.descriptor == "A[2,4]"
    assert len(s) == 7 and is_free(s, [1])


@pytest.mark.parametrize("desc", product_catalog(24))
def test_extremal_free_on_products(desc):
    G = parse_group(desc)
    s = extremal_free(G)
    assert len(s) == G.order - 1 and is_free_unweighted_fast(s)


@pytest.mark.parametrize("desc", ["C7", "A[2,2]", "A[2,6]", "A[3,3]", "A[2,2,2]", "Q8", "M(3,4,3,2)"])
def test_extremal_free_length(desc):
    G = parse_group(desc)
    s = extremal_free(G)
    assert len(s) == G.order - 1 and is_free(s, [1])


@pytest.mark.parametrize("n, r", [(2, 1), (2, 3), (3, 2), (4, 2), (5, 3), (6, 2), (7, 2)])
def test_rank_power_free_full(n, r):
    A = full_weight(n)
    s = rank_power_free(n, r, A)
    assert len(s) == 2**r - 1
    assert is_free(s, A)


@pytest.mark.parametrize("p, r", [(5, 2), (7, 2), (11, 2), (13, 2), (3, 3)])
def test_rank_power_free_units(p, r):
    for A in (unit_powers(p, 2), unit_nonsquares(p)):
        s = rank_power_free(p, r, A)
        assert len(s) == 3**r - 1
        assert is_free(s, A)


def test_rank_power_free_cubes():
    A = unit_powers(13, 3)
    s = rank_power_free(13, 2, A)
    assert len(s) == 8 and is_free(s, A)


def test_rank_power_free_unsupported():
    with pytest.raises(ValueError, match="supports"):
        rank_power_free(6, 2, punctured_set(2, 1, 3))
    with pytest.raises(ValueError, match="modulus"):
        rank_power_free(6, 2, full_weight(5))


def test_frozen_rank_one_witnesses_are_free():
    for (family, p), elements in RANK_ONE_WITNESSES.items():
        A = {"squares": unit_powers(p, 2), "nonsquares": unit_nonsquares(p), "cubes": unit_powers(p, 3)}[family]
        assert 0 not in brute_window_products(cyclic(p), list(elements), A)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["C2", "C3", "C4", "S3", "A[2,2]", "Q8"]), st.sampled_from(["C2", "C3", "D4", "C5"]))
def test_interleave_is_free_for_any_pair(h, k):
    H, K = parse_group(h), parse_group(k)
    s = product_interleave(extremal_free(H), extremal_free(K))
    assert len(s) == H.order * K.order - 1
    assert is_free_unweighted_fast(s)
