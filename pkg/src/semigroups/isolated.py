"""Isolated factorizations: I_b, I_s, Betti-minimal and minimal multi-elements.

I_b(S) collects the isolated factorizations of the Betti elements; I_s(S)
collects the factorizations of the elements with a single factorization; and
I(S) is their (disjoint) union.  For numerical semigroups everything here is
exact; for affine semigroups I_s is computed up to a bound and flagged.
"""

from . import betti as betti_mod
from . import constants, factor
from .errors import InfiniteSetError


class IsolatedProfile:
    """Summary of the isolated factorizations of a semigroup."""

    def __init__(self, ib, is_, i_total, ibetti, exhaustive):
        self.ib = ib                # tuple of factorizations
        self.is_ = is_              # tuple of factorizations
        self.i_total = i_total     # i(S) = i_s + i_b (None when not exact)
        self.ibetti = ibetti        # Betti elements with isolated factorizations
        self.exhaustive = exhaustive

    @property
    def i_b(self):
        return len(self.ib)

    @property
    def i_s(self):
        return len(self.is_)


def ib_set(S, degree_bound=None):
    """Isolated factorizations of the Betti elements, lex-sorted."""
    profile = betti_mod.betti_elements(S, degree_bound)
    out = []
    for b in profile.betti:
        out.extend(profile.fibers[b].isolated)
    return tuple(sorted(out)), profile.complete


def is_set(S, bound=None):
    """Factorizations of the single-factorization elements.

    Numerical: exact (the set is finite once S has a Betti element, and it is
    contained in Ap(S; min Betti)).  Raises InfiniteSetError when S has no
    Betti element.  Affine: enumerated over elements of coordinate sum
    <= bound, second return value False (not exhaustive).
    """
    if S.numerical:
        profile = betti_mod.betti_elements(S)
        if not profile.betti:
            raise InfiniteSetError(
                "every element factors uniquely; I_s is infinite")
        b1 = profile.betti[0]
        out = []
        for w in S.apery(b1):
            fib = factor.fiber(S, w)
            if fib.denumerant == 1:
                out.append(fib.factorizations[0])
        return tuple(sorted(out)), True
    if bound is None:
        raise InfiniteSetError(
            "affine I_s needs an explicit enumeration bound")
    out = []
    for m in S.elements_upto(bound):
        fib = factor.fiber(S, m)
        if fib.denumerant == 1:
            out.append(fib.factorizations[0])
    return tuple(sorted(out)), False


def isolated_profile(S, degree_bound=None, bound=None):
    if degree_bound is None and bound is None:
        hit = getattr(S, "_iso_profile", None)
        if hit is not None:
            return hit
        result = _isolated_profile(S, None, None)
        S._iso_profile = result
        return result
    return _isolated_profile(S, degree_bound, bound)


def _isolated_profile(S, degree_bound, bound):
    ib, complete = ib_set(S, degree_bound)
    try:
        is_, exhaustive = is_set(S, bound)
    except InfiniteSetError:
        # no Betti element (numerical) or no enumeration bound (affine):
        # I_s is not finitely enumerable here, report the I_b part only
        is_, exhaustive = (), False
    profile = betti_mod.betti_elements(S, degree_bound)
    total = len(ib) + len(is_) if (complete and exhaustive) else None
    return IsolatedProfile(ib, is_, total, profile.ibetti,
                           complete and exhaustive)


def betti_minimals(S, degree_bound=None):
    """Minimal Betti elements with respect to the semigroup order."""
    profile = betti_mod.betti_elements(S, degree_bound)
    bs = profile.betti
    return tuple(b for b in bs
                 if not any(b2 != b and S.leq(b2, b) for b2 in bs))


def minimal_multi_elements(S, bound=None):
    """Elements with several factorizations all of whose atom-predecessors
    factor uniquely.  Computed by a direct scan, independent of the Betti
    machinery (every such element lies below max(gens) + max Ap(S; n_1) for
    numerical semigroups)."""
    if S.numerical:
        limit = max(S.gens) + max(S.apery(S.gens[0]))
    else:
        if bound is None:
            raise InfiniteSetError(
                "affine minimal multi-element scan needs a bound")
        limit = bound
    out = []
    for m in S.elements_upto(limit):
        if factor.denumerant(S, m) < 2:
            continue
        ok = True
        for g in S.gens:
            prev = m - g if S.numerical else tuple(a - b
                                                   for a, b in zip(m, g))
            if S.contains(prev) and factor.denumerant(S, prev) != 1:
                ok = False
                break
        if ok:
            out.append(m)
    return tuple(out)


def c_atoms(S):
    """The set C(M) with its constants; see constants.c_atoms."""
    return constants.c_atoms(S)
