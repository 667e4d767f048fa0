from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semigroups import (FiberCapExceededError, denumerant, fiber,
                        isolated_factorizations, make_semigroup, nc,
                        r_classes)
from semigroups.factor import raw_fiber


def test_fiber_sorted_and_complete():
    S = make_semigroup([3, 4, 5])
    fib = fiber(S, 8)
    assert fib.factorizations == ((0, 2, 0), (1, 0, 1))
    assert fib.denumerant == 2
    assert denumerant(S, 8) == 2


def test_fiber_of_non_member_is_empty():
    S = make_semigroup([3, 4, 5])
    assert fiber(S, 2).denumerant == 0
    assert fiber(S, 1).factorizations == ()


def test_affine_fiber():
    S = make_semigroup([(1, 0), (0, 2), (0, 3)])
    fib = fiber(S, (0, 6))
    assert fib.factorizations == ((0, 0, 2), (0, 3, 0))
    assert fib.nc == 2


def test_r_classes_support_sharing():
    # (0,2,0) and (0,1,1) share support in coordinate 1 -> same class;
    # (2,0,0) is disjoint from both
    classes = r_classes([(0, 2, 0), (0, 1, 1), (2, 0, 0)])
    as_sets = sorted(tuple(sorted(c)) for c in classes)
    assert as_sets == [((0, 1, 1), (0, 2, 0)), ((2, 0, 0),)]


def test_r_classes_matches_transitive_closure_brute_force():
    S = make_semigroup([16, 20, 30, 45])
    for m in S.elements_upto(240):
        facts = fiber(S, m).factorizations
        if len(facts) > 50:
            continue
        fast = {frozenset(c) for c in r_classes(facts)}
        slow = _closure_classes(facts)
        assert fast == slow, m


def _closure_classes(facts):
    """O(n^2) union by repeated merging, the independent oracle."""
    groups = [{x} for x in facts]
    changed = True
    while changed:
        changed = False
        for a, b in combinations(range(len(groups)), 2):
            if groups[a] and groups[b] and any(
                    any(xi and yi for xi, yi in zip(x, y))
                    for x in groups[a] for y in groups[b]):
                groups[a] |= groups[b]
                groups[b] = set()
                changed = True
    return {frozenset(g) for g in groups if g}


def test_isolated_definition():
    S = make_semigroup([16, 20, 30, 45])
    fib = fiber(S, 80)
    assert fib.factorizations == ((0, 1, 2, 0), (0, 4, 0, 0), (5, 0, 0, 0))
    assert fib.isolated == ((5, 0, 0, 0),)
    assert isolated_factorizations(S, 80) == ((5, 0, 0, 0),)
    assert nc(S, 80) == 2


def test_fiber_cap():
    S = make_semigroup([2, 3])
    with pytest.raises(FiberCapExceededError):
        raw_fiber(S.gens, 1000, cap=3)


def test_fiber_cached_identity():
    S = make_semigroup([3, 4, 5])
    assert fiber(S, 8) is fiber(S, 8)


@given(st.sets(st.integers(2, 25), min_size=2, max_size=4),
       st.integers(0, 120))
@settings(max_examples=60, deadline=None)
def test_fiber_by_brute_force_enumeration(gens, m):
    from math import gcd
    from functools import reduce
    from itertools import product
    gens = sorted(gens)
    if reduce(gcd, gens) != 1:
        return
    S = make_semigroup(gens)
    gens = S.gens
    expected = sorted(
        combo for combo in product(*[range(m // g + 1) for g in gens])
        if sum(c * g for c, g in zip(combo, gens)) == m)
    assert list(fiber(S, m).factorizations) == expected
