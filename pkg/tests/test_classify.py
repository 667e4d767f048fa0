from semigroups import (check_equivalence_theorems, classification_report,
                        free_some_arrangement, has_single_betti,
                        has_single_betti_minimal, is_alpha_rectangular,
                        is_betti_divisible, is_betti_sorted,
                        is_c_rectangular, is_free_all_arrangements,
                        is_rectangular, make_semigroup, verify_bounds)
from semigroups.classify import (admits_shaped_presentation,
                                 free_arrangement_starting_at,
                                 is_alpha_rectangular_every_generator)


def test_alpha_rectangular_goldens():
    S = make_semigroup([16, 20, 30, 45])
    flag, bounds = is_alpha_rectangular(S, 1)  # for the generator 20
    assert flag
    assert not is_alpha_rectangular(S, 0)[0]
    T = make_semigroup([4, 5, 6])
    assert is_alpha_rectangular(T, 2)[0]  # for the generator 6
    U = make_semigroup([24, 26, 36, 39])
    assert not any(is_alpha_rectangular(U, j)[0] for j in range(4))


def test_rectangular_hierarchy():
    # alpha-rectangular => c-rectangular => rectangular, never conversely
    for gens in ([16, 20, 30, 45], [4, 5, 6], [2, 3], [3, 4, 5],
                 [24, 26, 36, 39], [4, 6, 9], [6, 15, 20]):
        S = make_semigroup(gens)
        for j in range(len(S.gens)):
            a = is_alpha_rectangular(S, j)[0]
            c = is_c_rectangular(S, j)[0]
            r = is_rectangular(S, j)[0]
            assert (not a or c) and (not c or r), (gens, j)


def test_betti_sorted_and_divisible():
    assert is_betti_sorted(make_semigroup([4, 6, 9]))
    assert not is_betti_divisible(make_semigroup([4, 6, 9]))
    assert is_betti_divisible(make_semigroup([6, 15, 20]))
    assert is_betti_divisible(make_semigroup([30, 42, 105, 140]))
    assert not is_betti_sorted(make_semigroup([16, 20, 30, 45]))
    assert not is_betti_sorted(make_semigroup([3, 4, 5]))


def test_single_betti():
    assert has_single_betti(make_semigroup([2, 3])) == (True, 6)
    assert has_single_betti(make_semigroup([4, 5, 6]))[0] is False
    assert has_single_betti_minimal(make_semigroup([16, 20, 30, 45])) == \
        (True, 60)
    assert has_single_betti_minimal(make_semigroup([4, 5, 6]))[0] is False


def test_free_arrangements():
    S = make_semigroup([24, 26, 36, 39])
    arr = free_some_arrangement(S)
    assert arr is not None
    assert free_arrangement_starting_at(S, 0) is not None
    assert free_some_arrangement(make_semigroup([3, 4, 5])) is None
    # CI but not free
    assert free_some_arrangement(make_semigroup([10, 14, 15, 21])) is None


def test_free_all_arrangements_matches_betti_divisible():
    # characterization check on a mixed sample
    for gens in ([2, 3], [3, 5], [6, 15, 20], [30, 42, 105, 140],
                 [4, 6, 9], [24, 26, 36, 39], [16, 20, 30, 45],
                 [3, 4, 5], [4, 5, 6]):
        S = make_semigroup(gens)
        assert is_free_all_arrangements(S) == is_betti_divisible(S), gens


def test_classification_report_flags():
    rep = classification_report(make_semigroup([16, 20, 30, 45]))
    assert rep.flags["complete_intersection"]
    assert rep.flags["single_betti_minimal"]
    assert rep.flags["alpha_rectangular"]
    assert not rep.flags["betti_sorted"]
    rep2 = classification_report(make_semigroup([24, 26, 36, 39]))
    assert rep2.flags["free_some_arrangement"]
    assert not rep2.flags["alpha_rectangular"]


def test_shaped_presentations_staircase():
    # Betti sorted <=> staircase-shaped presentation along a cost-sorted
    # arrangement (exercised directly on a positive and a negative case)
    S = make_semigroup([4, 6, 9])
    assert admits_shaped_presentation(S, (0, 1, 2), pure_right=False,
                                      fixed_c=True)
    T = make_semigroup([3, 4, 5])
    assert not admits_shaped_presentation(T, (0, 1, 2), pure_right=False,
                                          fixed_c=True)


def test_alpha_rectangular_every_generator():
    assert is_alpha_rectangular_every_generator(make_semigroup([2, 3]))
    assert is_alpha_rectangular_every_generator(
        make_semigroup([6, 15, 20])) == \
        has_single_betti(make_semigroup([6, 15, 20]))[0]


def test_verify_bounds_all_ok_on_witnesses():
    for gens in ([2, 3], [3, 4, 5], [4, 5, 6], [4, 6, 9], [6, 15, 20],
                 [16, 20, 30, 45], [24, 26, 36, 39], [10, 14, 15, 21],
                 [30, 42, 105, 140]):
        for entry in verify_bounds(make_semigroup(gens)):
            assert entry["ok"], (gens, entry)


def test_equivalence_theorems_all_ok_on_witnesses():
    for gens in ([2, 3], [3, 4, 5], [4, 5, 6], [4, 6, 9], [6, 15, 20],
                 [16, 20, 30, 45], [24, 26, 36, 39], [10, 14, 15, 21]):
        for name, entry in check_equivalence_theorems(
                make_semigroup(gens)).items():
            assert entry["ok"], (gens, name, entry)


def test_equivalence_theorems_affine():
    S = make_semigroup([(1, 0), (0, 2), (0, 3)])
    report = check_equivalence_theorems(S)
    assert report
    for name, entry in report.items():
        assert entry["ok"], (name, entry)
