import pytest
from sympy import primerange

from consecutive_davenport.weights import (
    WeightError,
    explicit_set,
    full_weight,
    punctured_set,
    revalidate,
    unit_nonsquares,
    unit_powers,
)


def test_full_weight():
    assert full_weight(6).weights == (1, 2, 3, 4, 5)
    assert full_weight(2).weights == (1,)
    with pytest.raises(WeightError):
        full_weight(1)


def test_unit_powers_examples():
    assert unit_powers(5, 2).weights == (1, 4)
    assert unit_nonsquares(5).weights == (2, 3)
    # x^3 mod 13 for x in 1..12, enumerated by hand: 1,8,1,12,8,8,5,5,1,12,5,12
    assert unit_powers(13, 3).weights == (1, 5, 8, 12)


def test_unit_powers_rejects_composites():
    with pytest.raises(WeightError, match="not prime"):
        unit_powers(9, 2)
    with pytest.raises(WeightError):
        unit_nonsquares(2)


def test_punctured_examples():
    A = punctured_set(2, 1, 3)
    assert A.weights == (1, 2, 4, 5) and A.modulus == 6
    B = punctured_set(2, 2, 3)
    assert B.weights == (1, 2, 4, 5, 7, 8, 9, 10, 11) and B.modulus == 12
    with pytest.raises(WeightError, match="gcd"):
        punctured_set(2, 1, 2)
    with pytest.raises(WeightError, match=">= 6"):
        punctured_set(2, 1, 1)


def test_explicit_set():
    assert explicit_set([1], 7).weights == (1,)
    assert explicit_set([2, 2, 3], 5).weights == (2, 3)
    with pytest.raises(WeightError):
        explicit_set([0], 5)
    with pytest.raises(WeightError):
        explicit_set([], 5)
    with pytest.raises(WeightError):
        explicit_set([5], 5)


def test_full_weight_sizes():
    for m in range(2, 30):
        assert len(full_weight(m)) == m - 1
    for p in primerange(2, 50):
        assert unit_powers(p, 1).weights == full_weight(p).weights


@pytest.mark.parametrize("p", list(primerange(3, 50)))
def test_squares_and_nonsquares_partition_units(p):
    sq, nsq = set(unit_powers(p, 2)), set(unit_nonsquares(p))
    assert not sq & nsq
    assert sq | nsq == set(range(1, p))
    assert len(sq) == (p - 1) // 2


@pytest.mark.parametrize("d, k, n", [(2, 1, 3), (2, 2, 3), (3, 1, 2), (3, 2, 4), (2, 3, 5), (5, 1, 7)])
def test_punctured_contents(d, k, n):
    A = punctured_set(d, k, n)
    removed = {d ** (k - i) * n for i in range(1, k + 1)}
    assert set(A) == set(range(1, d**k * n)) - removed


def test_descriptions_and_keys():
    assert full_weight(4).describe() == "full"
    assert unit_powers(13, 3).describe() == "U^3(13)"
    assert unit_nonsquares(7).describe() == "U-U2(7)"
    assert punctured_set(2, 1, 3).describe() == "punct(2,1,3)"
    assert explicit_set([3, 1], 5).describe() == "{1,3}"
    assert full_weight(4).key() == "full={1,2,3}@4"


def test_revalidate_keeps_large_weights():
    A = full_weight(6)
    B = revalidate(A, 2)
    assert B.weights == A.weights and B.modulus == 2 and B.revalidated
    assert revalidate(A, 6) is A
