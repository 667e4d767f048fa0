import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semigroups import (InfiniteAperyError, InvalidGeneratorsError,
                        NotNumericalError, make_semigroup, parse_gens)
from semigroups.semigroup import format_element, format_gens


def test_make_numerical_preserves_order_and_strips_redundant():
    S = make_semigroup([24, 26, 36, 39])
    assert S.gens == (24, 26, 36, 39)
    S2 = make_semigroup([4, 6, 10, 9])  # 10 = 4 + 6 is redundant
    assert S2.gens == (4, 6, 9)


def test_make_numerical_rejects_bad_input():
    with pytest.raises(InvalidGeneratorsError):
        make_semigroup([])
    with pytest.raises(InvalidGeneratorsError):
        make_semigroup([0, 3])
    with pytest.raises(NotNumericalError):
        make_semigroup([4, 6])  # gcd 2: complement is infinite


def test_membership_and_gaps():
    S = make_semigroup([3, 5])
    inside = {0, 3, 5, 6, 8, 9, 10, 11, 12}
    for s in range(13):
        assert S.contains(s) == (s in inside)
    assert not S.contains(-3)
    assert S.frobenius() == 7
    assert S.genus() == 4
    assert S.multiplicity == 3


def test_apery_numerical():
    S = make_semigroup([3, 4, 5])
    assert S.apery() == (0, 4, 5)
    assert S.apery(4) == (0, 3, 5, 6)
    # Apery with respect to a set of elements
    assert S.apery([3, 4]) == (0, 5)


def test_apery_base_must_be_member():
    S = make_semigroup([3, 5])
    with pytest.raises(InfiniteAperyError):
        S.apery(4)


def test_leq_partial_order():
    S = make_semigroup([4, 5, 6])
    assert S.leq(4, 10)
    assert not S.leq(5, 6)
    assert S.leq(0, 4)


def test_affine_basics():
    S = make_semigroup([(1, 0), (0, 2), (0, 3)])
    assert not S.numerical
    assert S.gens == ((1, 0), (0, 2), (0, 3))
    assert S.is_simplicial()
    assert S.ray_values() == ((1, 0), (0, 2))
    assert S.contains((3, 5))
    assert not S.contains((0, 1))
    assert not S.contains((-1, 0))
    assert S.codim == 1


def test_affine_apery_and_cm():
    S = make_semigroup([(1, 0), (0, 2), (0, 3)])
    ap = S.apery()
    assert (0, 0) in ap and (0, 3) in ap
    assert S.is_cohen_macaulay()


def test_non_simplicial_detection():
    S = make_semigroup([(1, 0, 1), (0, 1, 0), (1, 1, 0), (0, 0, 1)])
    assert not S.is_simplicial()
    with pytest.raises(NotNumericalError):
        S.frobenius()


def test_elements_upto():
    S = make_semigroup([3, 5])
    assert S.elements_upto(10) == (0, 3, 5, 6, 8, 9, 10)
    A = make_semigroup([(1, 0), (0, 2), (0, 3)])
    els = A.elements_upto(3)
    assert (0, 0) in els and (1, 2) in els and (0, 1) not in els


def test_parse_and_format_round_trip():
    assert parse_gens("24,26,36,39") == [24, 26, 36, 39]
    assert parse_gens("(1,0);(0,2)") == [(1, 0), (0, 2)]
    with pytest.raises(InvalidGeneratorsError):
        parse_gens("")
    with pytest.raises(InvalidGeneratorsError):
        parse_gens("(1,0);x")
    assert format_gens((24, 26)) == "24,26"
    assert format_element((1, 0)) == "(1,0)"


def test_is_gorenstein_numerical_symmetric():
    # <3,5> is symmetric, <3,4,5> is not
    assert make_semigroup([3, 5]).is_gorenstein()
    assert not make_semigroup([3, 4, 5]).is_gorenstein()


@given(st.sets(st.integers(2, 40), min_size=2, max_size=4))
@settings(max_examples=60, deadline=None)
def test_membership_matches_brute_force(gens):
    from math import gcd
    from functools import reduce
    gens = sorted(gens)
    if reduce(gcd, gens) != 1:
        return
    S = make_semigroup(gens)
    # brute-force closure up to a horizon
    horizon = 2 * max(gens) * max(gens)
    table = bytearray(horizon + 1)
    table[0] = 1
    for s in range(horizon + 1):
        if table[s]:
            for g in S.gens:
                if s + g <= horizon:
                    table[s + g] = 1
    for s in range(horizon + 1):
        assert S.contains(s) == bool(table[s])
