import pytest

from semigroups import (IncompleteBettiError, betti_elements, fiber,
                        free_arrangement, is_complete_intersection, is_free,
                        make_semigroup, minimal_presentation,
                        presentation_cardinality)
from semigroups.betti import all_minimal_presentations
from semigroups.explore import enumerate_numerical_by_genus
from semigroups.factor import r_classes


def brute_betti_numerical(S):
    """Independent oracle: scan every element up to F + max gen + min Betti
    candidate horizon and keep those with >= 2 R-classes."""
    horizon = S.frobenius() + 2 * max(S.gens) + 1
    out = []
    for m in S.elements_upto(horizon):
        facts = fiber(S, m).factorizations
        if len(facts) >= 2 and len(r_classes(facts)) >= 2:
            out.append(m)
    return tuple(out)


def test_betti_golden_examples():
    assert betti_elements(make_semigroup([24, 26, 36, 39])).betti == \
        (72, 78, 156)
    assert betti_elements(make_semigroup([3, 4, 5])).betti == (8, 9, 10)
    assert betti_elements(make_semigroup([2, 3])).betti == (6,)


def test_betti_matches_brute_force_on_small_corpus():
    checked = 0
    for S in enumerate_numerical_by_genus(9):
        if len(S.gens) == 1 or S.frobenius() > 60:
            continue
        assert betti_elements(S).betti == brute_betti_numerical(S), S.gens
        checked += 1
    assert checked > 100


def test_fiber_example_3_9_orientation():
    # the fibers of 10 and 12 in <4,5,6>
    S = make_semigroup([4, 5, 6])
    assert fiber(S, 10).factorizations == ((0, 2, 0), (1, 0, 1))
    assert fiber(S, 12).factorizations == ((0, 0, 2), (3, 0, 0))
    assert betti_elements(S).betti == (10, 12)


def test_minimal_presentation_cardinality():
    S = make_semigroup([24, 26, 36, 39])
    pres = minimal_presentation(S)
    assert len(pres) == 3
    assert presentation_cardinality(S) == 3
    assert is_complete_intersection(S)
    # every relation joins two factorizations of the same element
    for left, right in pres:
        assert sum(l * g for l, g in zip(left, S.gens)) == \
            sum(r * g for r, g in zip(right, S.gens))


def test_not_complete_intersection():
    S = make_semigroup([3, 4, 5])
    assert presentation_cardinality(S) == 3  # codim 2, so not a CI
    assert not is_complete_intersection(S)


def test_free_and_arrangements():
    S = make_semigroup([24, 26, 36, 39])
    # free for the arrangement (24, 36, 26, 39)
    assert is_free(S, (0, 2, 1, 3))
    assert free_arrangement(S) is not None
    T = make_semigroup([3, 4, 5])
    assert free_arrangement(T) is None
    assert not is_free(T, (0, 1, 2))


def test_all_minimal_presentations_counts():
    # <4,5,6>: two Betti elements with nc=2 and two-element fibers each;
    # the presentation is unique
    S = make_semigroup([4, 5, 6])
    assert len(list(all_minimal_presentations(S))) == 1
    # <3,4,5>: each Betti element has nc = 2 with a two-element fiber, so
    # the presentation is unique as well
    T = make_semigroup([3, 4, 5])
    assert len(list(all_minimal_presentations(T))) == 1


def test_affine_betti_free_certificate():
    S = make_semigroup([(1, 0), (0, 2), (0, 3)])
    prof = betti_elements(S)
    assert prof.betti == ((0, 6),)
    assert prof.complete


def test_affine_betti_bounded_sweep():
    S = make_semigroup([(1, 0, 1), (0, 1, 0), (1, 1, 0), (0, 0, 1)])
    prof = betti_elements(S, degree_bound=8)
    assert prof.betti == ((1, 1, 1),)
    assert not prof.complete
    with pytest.raises(IncompleteBettiError):
        from semigroups.classify import _complete_betti
        _complete_betti(S, degree_bound=8)
