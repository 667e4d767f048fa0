"""Betti elements, minimal presentations and complete intersections."""

from . import constants, factor
from .errors import DegreeBoundRequiredError, IncompleteBettiError


class BettiProfile:
    """Betti elements of a semigroup with their fibers.

    Attributes:
        betti: sorted tuple of Betti elements.
        fibers: dict element -> Fiber for every Betti element.
        complete: False when the set was computed by a bounded sweep and may
            miss elements beyond the bound.
        free_arrangement: witness arrangement (tuple of generator indices)
            when completeness was certified via freeness, else None.
    """

    def __init__(self, betti, fibers, complete, free_arrangement=None):
        self.betti = tuple(betti)
        self.fibers = fibers
        self.complete = complete
        self.free_arrangement = free_arrangement

    @property
    def ibetti(self):
        """Betti elements with at least one isolated factorization."""
        return tuple(b for b in self.betti if self.fibers[b].isolated)

    def nc_sum(self):
        return sum(f.nc for f in self.fibers.values())

    def presentation_cardinality(self):
        return sum(f.nc - 1 for f in self.fibers.values())


def betti_elements(S, degree_bound=None, fiber_cap=factor.DEFAULT_FIBER_CAP):
    """Compute the Betti elements of S.

    Numerical semigroups: exact, via the candidate set
    {w + n_i : w in Ap(S; n_1) \\ {0}}.

    Affine semigroups: exact when some arrangement is free (then
    Betti = {c_i^* n_i}); otherwise a bounded sweep over elements of
    coordinate sum <= degree_bound, flagged incomplete.
    """
    cached = getattr(S, "_betti_profile", None)
    if cached is not None and (cached.complete or degree_bound is None):
        return cached
    if S.numerical:
        profile = _betti_numerical(S, fiber_cap)
    else:
        profile = _betti_affine(S, degree_bound, fiber_cap)
    if degree_bound is None or profile.complete:
        S._betti_profile = profile
    return profile


def _betti_numerical(S, fiber_cap):
    n1 = S.gens[0]
    candidates = set()
    for w in S.apery(n1):
        if w:
            for g in S.gens:
                candidates.add(w + g)
    fibers = {}
    betti = []
    for m in sorted(candidates):
        fib = factor.fiber(S, m, fiber_cap)
        if fib.nc >= 2:
            betti.append(m)
            fibers[m] = fib
    return BettiProfile(betti, fibers, True)


def free_arrangement(S):
    """Search for an arrangement (rays first) for which S is free.

    Returns the arrangement as a tuple of generator indices, or None.  The
    search walks orderings of the non-ray generators, pruning by prefix set
    (the freeness condition at each position depends only on the set of
    earlier generators).
    """
    if S.simplicial_rays is None:
        return None
    rays = tuple(S.simplicial_rays)
    nonrays = S.nonray_indices()
    dead = set()

    def extend(prefix, remaining):
        if not remaining:
            return prefix
        key = frozenset(prefix)
        if key in dead:
            return None
        for idx in remaining:
            arrangement = prefix + (idx,)
            pos = len(prefix)
            if constants.c_bar(S, arrangement, pos) == \
                    constants.c_star(S, arrangement, pos):
                found = extend(arrangement,
                               tuple(j for j in remaining if j != idx))
                if found is not None:
                    return found
        dead.add(key)
        return None

    return extend(rays, nonrays)


def is_free(S, arrangement=None):
    """Whether S is free for the given arrangement (default: stored order,
    rays first)."""
    if arrangement is None:
        arrangement = constants.default_arrangement(S)
    arrangement = tuple(arrangement)
    for pos in range(S.rank, len(arrangement)):
        if constants.c_bar(S, arrangement, pos) != \
                constants.c_star(S, arrangement, pos):
            return False
    return True


def _betti_affine(S, degree_bound, fiber_cap):
    arr = free_arrangement(S)
    if arr is not None:
        betti = set()
        for pos in range(S.rank, len(arr)):
            betti.add(tuple(constants.c_star(S, arr, pos) * x
                            for x in S.gens[arr[pos]]))
        fibers = {b: factor.fiber(S, b, fiber_cap) for b in betti}
        return BettiProfile(sorted(betti), fibers, True, free_arrangement=arr)
    bound = degree_bound
    if bound is None:
        if S.simplicial_rays is None:
            raise DegreeBoundRequiredError(
                "no freeness certificate; pass an explicit degree bound")
        arr0 = constants.default_arrangement(S)
        bound = 2 * sum(constants.c_star(S, arr0, pos) *
                        sum(S.gens[arr0[pos]])
                        for pos in range(S.rank, len(arr0)))
    betti = []
    fibers = {}
    for m in S.elements_upto(bound):
        fib = factor.fiber(S, m, fiber_cap)
        if fib.nc >= 2:
            betti.append(m)
            fibers[m] = fib
    return BettiProfile(sorted(betti), fibers, False)


def minimal_presentation(S, degree_bound=None):
    """A canonical minimal presentation: for each Betti element, a star of
    relations pairing the lex-smallest factorization of the lex-smallest
    R-class with the lex-smallest factorization of every other R-class.

    Returns a tuple of (x, y) factorization pairs with x < y lexicographically.
    """
    profile = betti_elements(S, degree_bound)
    if not profile.complete:
        raise IncompleteBettiError(
            "minimal presentation needs the exact Betti set")
    relations = []
    for b in profile.betti:
        classes = profile.fibers[b].classes
        root = classes[0][0]
        for cls in classes[1:]:
            pair = tuple(sorted((root, cls[0])))
            relations.append(pair)
    return tuple(relations)


def presentation_cardinality(S, degree_bound=None):
    profile = betti_elements(S, degree_bound)
    if not profile.complete:
        raise IncompleteBettiError(
            "presentation cardinality needs the exact Betti set")
    return profile.presentation_cardinality()


def is_complete_intersection(S, degree_bound=None):
    """Complete intersection: presentation cardinality equals codimension."""
    return presentation_cardinality(S, degree_bound) == S.codim


def all_minimal_presentations(S, degree_bound=None, cap=200000):
    """Iterate over every minimal presentation of S.

    A minimal presentation chooses, for each Betti element, a spanning tree
    over the R-classes and one representative pair per tree edge.  The
    iteration order is deterministic.  Mostly useful for small semigroups
    (the shape checks of the theorem harness); `cap` guards the blow-up.
    """
    profile = betti_elements(S, degree_bound)
    if not profile.complete:
        raise IncompleteBettiError("presentations need the exact Betti set")
    per_betti = []
    for b in profile.betti:
        classes = profile.fibers[b].classes
        k = len(classes)
        choices = []
        for tree in _spanning_trees(k):
            for reps in _edge_reps(tree, classes):
                choices.append(reps)
                if len(choices) > cap:
                    raise IncompleteBettiError(
                        "too many minimal presentations to enumerate")
        per_betti.append(choices)

    def emit(i, acc):
        if i == len(per_betti):
            yield tuple(acc)
            return
        for choice in per_betti[i]:
            yield from emit(i + 1, acc + list(choice))

    yield from emit(0, [])


def _spanning_trees(k):
    """All spanning trees of the complete graph on k nodes, as edge tuples."""
    if k == 1:
        return [()]
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    trees = []
    for combo in _combinations(edges, k - 1):
        parent = list(range(k))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        ok = True
        for a, b in combo:
            ra, rb = find(a), find(b)
            if ra == rb:
                ok = False
                break
            parent[rb] = ra
        if ok:
            trees.append(combo)
    return trees


def _combinations(seq, k):
    from itertools import combinations
    return combinations(seq, k)


def _edge_reps(tree, classes):
    """All ways to choose one (x, y) representative pair per tree edge."""
    pools = []
    for a, b in tree:
        pools.append([tuple(sorted((x, y)))
                      for x in classes[a] for y in classes[b]])

    def emit(i, acc):
        if i == len(pools):
            yield tuple(acc)
            return
        for pair in pools[i]:
            yield from emit(i + 1, acc + [pair])

    yield from emit(0, [])
