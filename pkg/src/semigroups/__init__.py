"""Factorization invariants of numerical and simplicial affine semigroups.

The package computes factorization fibers, Betti elements, isolated
factorizations, minimal presentations, the rectangular / Betti-sorted /
Betti-divisible classification, constructive generators (gluings and the
Betti-divisible parametrized family), and ships an exhaustive verification
harness for the structural theorems relating all of these.
"""

from .betti import (BettiProfile, all_minimal_presentations, betti_elements,
                    free_arrangement, is_complete_intersection, is_free,
                    minimal_presentation, presentation_cardinality)
from .classify import (ClassificationReport, check_equivalence_theorems,
                       classification_report, free_some_arrangement,
                       has_single_betti, has_single_betti_minimal,
                       is_alpha_rectangular, is_betti_divisible,
                       is_betti_isolated_divisible, is_betti_isolated_sorted,
                       is_betti_sorted, is_c_rectangular,
                       is_free_all_arrangements, is_rectangular,
                       verify_bounds)
from .constants import alpha, c_atoms, c_bar, c_star, c_value
from .construct import (betti_divisible_from_params, glue_numerical,
                        is_gluing_partition, recover_params)
from .errors import (DegreeBoundRequiredError, FiberCapExceededError,
                     IncompleteBettiError, InfiniteAperyError,
                     InfiniteSetError, InvalidGeneratorsError,
                     InvalidGluingError, InvalidParametersError,
                     NotNumericalError, NotSimplicialError,
                     SearchCapExceededError, SemigroupError)
from .explore import (Corpus, enumerate_numerical_by_genus, load_corpus,
                      min_frobenius_betti_divisible, run_theorem_harness)
from .factor import (Fiber, denumerant, fiber, isolated_factorizations, nc,
                     r_classes)
from .isolated import (IsolatedProfile, betti_minimals, ib_set, is_set,
                       isolated_profile, minimal_multi_elements)
from .semigroup import (Semigroup, format_element, format_gens,
                        make_semigroup, parse_gens)

__version__ = "0.1.0"

__all__ = [
    "BettiProfile", "ClassificationReport", "Corpus", "Fiber",
    "IsolatedProfile", "Semigroup",
    "all_minimal_presentations", "alpha", "betti_divisible_from_params",
    "betti_elements", "betti_minimals", "c_atoms", "c_bar", "c_star",
    "c_value", "check_equivalence_theorems", "classification_report",
    "denumerant", "enumerate_numerical_by_genus", "fiber",
    "free_arrangement", "free_some_arrangement", "glue_numerical",
    "has_single_betti", "has_single_betti_minimal", "ib_set",
    "is_alpha_rectangular", "is_betti_divisible",
    "is_betti_isolated_divisible", "is_betti_isolated_sorted",
    "is_betti_sorted", "is_c_rectangular", "is_complete_intersection",
    "is_free", "is_free_all_arrangements", "is_gluing_partition",
    "is_rectangular", "is_set", "isolated_factorizations",
    "isolated_profile", "load_corpus", "make_semigroup",
    "min_frobenius_betti_divisible", "minimal_multi_elements",
    "minimal_presentation", "nc", "parse_gens", "presentation_cardinality",
    "r_classes", "recover_params", "run_theorem_harness", "verify_bounds",
    "format_element", "format_gens",
    "SemigroupError", "InvalidGeneratorsError", "NotNumericalError",
    "NotSimplicialError", "InfiniteAperyError", "InfiniteSetError",
    "FiberCapExceededError", "IncompleteBettiError",
    "DegreeBoundRequiredError", "SearchCapExceededError",
    "InvalidGluingError", "InvalidParametersError",
]
