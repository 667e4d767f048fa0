"""Structural classification predicates and theorem-equivalence checks.

Every predicate works on a ``Semigroup`` descriptor and, when sensible,
returns a witness (an arrangement, an exponent box, a presentation)
alongside the boolean.  ``check_equivalence_theorems`` evaluates each
multi-way characterization theorem condition-by-condition so that the
search harness can detect a "mixed" vector (some conditions true, others
false), which would falsify the theorem on that semigroup.
"""

from itertools import combinations, permutations, product
from math import prod

from . import constants, factor
from .betti import (betti_elements, free_arrangement,
                    is_complete_intersection, is_free)
from .errors import IncompleteBettiError, NotNumericalError
from .isolated import betti_minimals, isolated_profile, minimal_multi_elements

__all__ = [
    "is_free", "free_some_arrangement", "free_arrangement_starting_at",
    "is_free_all_arrangements", "is_rectangular", "is_c_rectangular",
    "is_alpha_rectangular", "is_alpha_rectangular_every_generator",
    "is_betti_sorted", "is_betti_isolated_sorted", "is_betti_divisible",
    "is_betti_isolated_divisible", "has_single_betti",
    "has_single_betti_minimal", "admits_shaped_presentation",
    "classification_report", "verify_bounds", "check_equivalence_theorems",
]


# -- helpers --------------------------------------------------------------

def _require_numerical(S, what):
    if not S.numerical:
        raise NotNumericalError(f"{what} requires a numerical semigroup")


def _nonbase_indices(S, base_idx):
    if S.numerical:
        if base_idx is None:
            base_idx = 0
        return (base_idx,), tuple(i for i in range(len(S.gens))
                                  if i != base_idx)
    return tuple(S.simplicial_rays), S.nonray_indices()


def _apery_for(S, base_idx):
    if S.numerical:
        return S.apery(S.gens[base_idx if base_idx is not None else 0])
    return S.apery()


def _box_values(S, indices, bounds):
    """All sums sum(lambda_i * n_i) with 0 <= lambda_i <= bounds[i]."""
    if S.numerical:
        vals = [0]
        for idx, bound in zip(indices, bounds):
            g = S.gens[idx]
            vals = [v + k * g for v in vals for k in range(bound + 1)]
        return vals
    dim = S.ambient_dim
    vals = [tuple([0] * dim)]
    for idx, bound in zip(indices, bounds):
        g = S.gens[idx]
        vals = [tuple(vc + k * gc for vc, gc in zip(v, g))
                for v in vals for k in range(bound + 1)]
    return vals


def _sorted_elements(S, elems):
    if S.numerical:
        return sorted(elems)
    return sorted(elems, key=lambda v: (sum(v), v))


def _scan_bound(S):
    """Scan horizon covering every Betti element and every minimal
    multi-element.  Numerical: max(gens) + max Ap(S; n_1) (anything above
    dominates a smaller multi-element).  Affine (complete Betti profile):
    a coordinate-sum horizon past every Betti element and Apery element by
    one generator, which bounds the minimal multi-elements the same way."""
    if S.numerical:
        return max(S.gens) + max(S.apery(S.gens[0]))
    profile = _complete_betti(S)
    betti_sum = max((sum(b) for b in profile.betti), default=0)
    ap_sum = max(sum(w) for w in S.apery())
    return max(betti_sum, ap_sum) + max(sum(g) for g in S.gens)


def _divides_value(S, a, b):
    """Whether b is a positive integer multiple of a (element-wise)."""
    if S.numerical:
        return b % a == 0
    k = None
    for ac, bc in zip(a, b):
        if ac == 0:
            if bc != 0:
                return False
            continue
        if bc % ac != 0:
            return False
        q = bc // ac
        if k is None:
            k = q
        elif q != k:
            return False
    return k is not None and k >= 1


def _phi(S, x):
    if S.numerical:
        return sum(c * g for c, g in zip(x, S.gens))
    total = [0] * S.ambient_dim
    for c, g in zip(x, S.gens):
        for i, gc in enumerate(g):
            total[i] += c * gc
    return tuple(total)


def _dominates(z, x):
    """z < x in the component-wise order."""
    return z != x and all(zc <= xc for zc, xc in zip(z, x))


def _scale_value(S, c, g):
    return c * g if S.numerical else tuple(c * x for x in g)


# -- freeness -------------------------------------------------------------

def _memo(S, key, compute):
    cache = getattr(S, "_classify_cache", None)
    if cache is None:
        cache = S._classify_cache = {}
    if key not in cache:
        cache[key] = compute()
    return cache[key]


_MISS = object()


def _free_completion(S, pset):
    """Ordered completion of the prefix set pset to a free arrangement, or
    None.  The freeness condition at each step (c_bar = c_star for the next
    generator over the prefix) depends only on the prefix as a set, so the
    search memoizes on subsets and is shared across all leading choices."""
    all_idx = frozenset(range(len(S.gens)))
    hit = _memo(S, ("free_complete", pset), lambda: _MISS)
    if hit is not _MISS:
        return hit
    if pset == all_idx:
        result = ()
    else:
        result = None
        base = tuple(sorted(pset))
        pos = len(pset)
        for g in sorted(all_idx - pset):
            arrangement = base + (g,)
            if constants.c_bar(S, arrangement, pos) == \
                    constants.c_star(S, arrangement, pos):
                tail = _free_completion(S, pset | {g})
                if tail is not None:
                    result = (g,) + tail
                    break
    S._classify_cache[("free_complete", pset)] = result
    return result


def free_arrangement_starting_at(S, first):
    """Search for a free arrangement whose leading generator is gens[first]
    (numerical only).  Returns the index arrangement or None."""
    _require_numerical(S, "free_arrangement_starting_at")
    tail = _free_completion(S, frozenset((first,)))
    return None if tail is None else (first,) + tail


def free_some_arrangement(S):
    """An arrangement for which S is free, or None.

    Numerical semigroups try every generator in the leading position;
    affine semigroups keep the rays first.
    """
    def compute():
        if S.numerical:
            for first in range(len(S.gens)):
                arr = free_arrangement_starting_at(S, first)
                if arr is not None:
                    return arr
            return None
        return free_arrangement(S)

    return _memo(S, "free_some", compute)


def is_free_all_arrangements(S):
    """Whether S is free for every arrangement of its minimal generators.

    Freeness for all arrangements is equivalent to: for every nonempty
    proper subset P of generators and every g outside P, the group and
    monoid multiples of g over P agree.  This collapses the e! orderings
    into e * 2^e subset checks that fail fast on small subsets.  Beyond
    embedding dimension 7 the Betti-divisible characterization is used
    instead.
    """
    _require_numerical(S, "is_free_all_arrangements")
    e = len(S.gens)
    if e == 1:
        return True
    if e > 7:
        return is_betti_divisible(S)
    for size in range(1, e):
        for prefix in combinations(range(e), size):
            for g in range(e):
                if g in prefix:
                    continue
                arrangement = prefix + (g,)
                if constants.c_bar(S, arrangement, size) != \
                        constants.c_star(S, arrangement, size):
                    return False
    return True


# -- rectangularity -------------------------------------------------------

def is_alpha_rectangular(S, base_idx=None):
    """Whether Ap(S; base) is the exponent box with bounds alpha_i.

    Returns (flag, bounds) where bounds maps generator index -> alpha_i.
    """
    _, others = _nonbase_indices(S, base_idx)
    alphas = [constants.alpha(S, i, base_idx if S.numerical else None)
              for i in others]
    ap = _apery_for(S, base_idx)
    if len(ap) != prod(a + 1 for a in alphas):
        return False, None
    box = _box_values(S, others, alphas)
    if _sorted_elements(S, box) == list(ap):
        return True, dict(zip(others, alphas))
    return False, None


def is_c_rectangular(S, base_idx=None):
    """Whether Ap(S; base) is the exponent box with bounds c_i - 1."""
    _, others = _nonbase_indices(S, base_idx)
    cs = [constants.c_value(S, i) for i in others]
    if any(c is None for c in cs):
        return False, None
    ap = _apery_for(S, base_idx)
    if len(ap) != prod(cs):
        return False, None
    bounds = [c - 1 for c in cs]
    box = _box_values(S, others, bounds)
    if _sorted_elements(S, box) == list(ap):
        return True, dict(zip(others, bounds))
    return False, None


def is_rectangular(S, base_idx=None):
    """Whether Ap(S; base) is an exponent box for some bounds mu_i.

    Valid bounds satisfy mu_i <= alpha_i and prod(mu_i + 1) = #Ap, so the
    search enumerates ordered factorizations of #Ap before comparing
    boxes.
    """
    _, others = _nonbase_indices(S, base_idx)
    ap = _apery_for(S, base_idx)
    alphas = [constants.alpha(S, i, base_idx if S.numerical else None)
              for i in others]
    ap_sorted = list(ap)

    def dfs(pos, remaining, mu):
        if pos == len(others):
            if remaining != 1:
                return None
            if _sorted_elements(S, _box_values(S, others, mu)) == ap_sorted:
                return tuple(mu)
            return None
        for d in range(1, min(alphas[pos] + 1, remaining) + 1):
            if remaining % d == 0:
                found = dfs(pos + 1, remaining // d, mu + [d - 1])
                if found is not None:
                    return found
        return None

    mu = dfs(0, len(ap), [])
    if mu is None:
        return False, None
    return True, dict(zip(others, mu))


def is_alpha_rectangular_every_generator(S):
    _require_numerical(S, "is_alpha_rectangular_every_generator")
    return all(is_alpha_rectangular(S, j)[0] for j in range(len(S.gens)))


# -- Betti orderings ------------------------------------------------------

def _complete_betti(S, degree_bound=None):
    profile = betti_elements(S, degree_bound=degree_bound)
    if not profile.complete:
        raise IncompleteBettiError(
            "the Betti profile is a bounded sweep; completeness is required")
    return profile


def _totally_ordered(S, elems, rel):
    chain = _sorted_elements(S, elems)
    return all(rel(a, b) for a, b in zip(chain, chain[1:]))


def is_betti_sorted(S, degree_bound=None):
    profile = _complete_betti(S, degree_bound)
    return _totally_ordered(S, profile.betti, S.leq)


def is_betti_isolated_sorted(S, degree_bound=None):
    profile = _complete_betti(S, degree_bound)
    return _totally_ordered(S, profile.ibetti, S.leq)


def is_betti_divisible(S, degree_bound=None):
    profile = _complete_betti(S, degree_bound)
    return _totally_ordered(S, profile.betti,
                            lambda a, b: _divides_value(S, a, b))


def is_betti_isolated_divisible(S, degree_bound=None):
    profile = _complete_betti(S, degree_bound)
    return _totally_ordered(S, profile.ibetti,
                            lambda a, b: _divides_value(S, a, b))


def has_single_betti(S, degree_bound=None):
    profile = _complete_betti(S, degree_bound)
    if len(profile.betti) == 1:
        return True, profile.betti[0]
    return False, None


def has_single_betti_minimal(S, degree_bound=None):
    mins = betti_minimals(S, degree_bound=degree_bound)
    if len(mins) == 1:
        return True, mins[0]
    return False, None


# -- shaped presentations -------------------------------------------------

def _sorted_cost_arrangements(S, cap=24):
    """Arrangements (index tuples) with c_1 n_1 <= ... <= c_e n_e.  Ties in
    the cost produce several arrangements; the list is capped."""
    e = len(S.gens)
    cost = [constants.c_value(S, i) * S.gens[i] for i in range(e)]
    order = sorted(range(e), key=lambda i: (cost[i], S.gens[i]))
    groups = []
    for i in order:
        if groups and cost[groups[-1][0]] == cost[i]:
            groups[-1].append(i)
        else:
            groups.append([i])
    out = [()]
    for group in groups:
        out = [pre + perm for pre in out for perm in permutations(group)]
        if len(out) > cap:
            out = out[:cap]
    return out


def admits_shaped_presentation(S, arrangement, pure_right, fixed_c):
    """Whether S has a minimal presentation of one of the staircase shapes.

    The relation at position p = 1..e-1 of the arrangement is
    (L_p e_{a_p}, R_p): L_p is c(a_p) when fixed_c, otherwise any b/n(a_p)
    with b a Betti element divisible by n(a_p).  R_p is supported on the
    earlier positions; with pure_right it is exactly a multiple of the
    previous generator (a multiple of that generator's own left
    coefficient), otherwise its coefficient there must be at least that
    left coefficient.  The chosen relations must form a spanning tree of
    the R-classes of each Betti element.
    """
    _require_numerical(S, "admits_shaped_presentation")
    e = len(S.gens)
    profile = _complete_betti(S)
    betti = list(profile.betti)
    if not betti:
        return e == 1
    fibers = {b: factor.fiber(S, b) for b in betti}
    need = {b: fibers[b].nc - 1 for b in betti}
    if sum(need.values()) != e - 1:
        return False

    class_of = {}
    for b in betti:
        for ci, cls in enumerate(fibers[b].classes):
            for x in cls:
                class_of[b, x] = ci

    cvals = [constants.c_value(S, i) for i in range(e)]

    def dfs(p, counts, forests, lefts):
        if p == e:
            return all(counts[b] == need[b] for b in betti)
        gi = arrangement[p]
        n = S.gens[gi]
        if fixed_c:
            left_cands = ([cvals[gi]] if cvals[gi] is not None
                          and cvals[gi] * n in need else [])
        else:
            left_cands = [b // n for b in betti if b % n == 0]
        prev = arrangement[p - 1]
        allowed = set(arrangement[:p])
        for left_coef in left_cands:
            b = left_coef * n
            if counts[b] >= need[b]:
                continue
            left = tuple(left_coef if i == gi else 0 for i in range(e))
            lc = class_of.get((b, left))
            if lc is None:
                continue
            if fixed_c and cvals[prev] is None:
                continue
            if pure_right:
                # the floor coefficient of the previous generator: c_(p-1)
                # in the c-shape, the previously chosen left coefficient in
                # the a-shape (free for the very first position)
                step = cvals[prev] if fixed_c else lefts.get(prev, 1)
                rights = []
                k = step
                while k * S.gens[prev] <= b:
                    if k * S.gens[prev] == b:
                        rights.append(tuple(k if i == prev else 0
                                            for i in range(e)))
                    k += step
            else:
                floor = cvals[prev] if fixed_c else lefts.get(prev, 0)
                rights = [y for y in fibers[b].factorizations
                          if y[prev] >= max(floor, 1)
                          and all(y[i] == 0 or i in allowed
                                  for i in range(e))]
            for right in rights:
                if right == left:
                    continue
                rc = class_of.get((b, right))
                if rc is None or rc == lc:
                    continue
                forest = forests[b]
                ra, rb = _ffind(forest, lc), _ffind(forest, rc)
                if ra == rb:
                    continue
                new_forests = dict(forests)
                new_forests[b] = dict(forest)
                new_forests[b][ra] = rb
                new_counts = dict(counts)
                new_counts[b] += 1
                new_lefts = dict(lefts)
                new_lefts[gi] = left_coef
                if dfs(p + 1, new_counts, new_forests, new_lefts):
                    return True
        return False

    return dfs(1, {b: 0 for b in betti}, {b: {} for b in betti}, {})


def _ffind(forest, x):
    while x in forest:
        x = forest[x]
    return x


# -- classification report ------------------------------------------------

class ClassificationReport:
    """Flags and witnesses for every structural family of the taxonomy."""

    __slots__ = ("flags", "witnesses")

    def __init__(self, flags, witnesses):
        self.flags = flags
        self.witnesses = witnesses

    def __repr__(self):
        on = sorted(k for k, v in self.flags.items() if v)
        return f"ClassificationReport({', '.join(on)})"


def classification_report(S, degree_bound=None):
    profile = _complete_betti(S, degree_bound)
    flags = {}
    witnesses = {}
    flags["cohen_macaulay"] = S.is_cohen_macaulay()
    flags["gorenstein"] = S.is_gorenstein()
    flags["free_for_stored"] = is_free(S)
    arr = free_some_arrangement(S)
    flags["free_some_arrangement"] = arr is not None
    if arr is not None:
        witnesses["free_arrangement"] = arr
    flags["complete_intersection"] = is_complete_intersection(
        S, degree_bound=degree_bound)
    if S.numerical:
        flags["free_all_arrangements"] = is_free_all_arrangements(S)
        rect = {}
        for kind, fn in (("rectangular", is_rectangular),
                         ("c_rectangular", is_c_rectangular),
                         ("alpha_rectangular", is_alpha_rectangular)):
            per = {}
            for j in range(len(S.gens)):
                ok, bounds = fn(S, j)
                per[j] = ok
                if ok and kind not in witnesses:
                    witnesses[kind] = {"generator": j, "bounds": bounds}
            rect[kind] = per
            flags[kind] = any(per.values())
        flags["alpha_rectangular_every_generator"] = all(
            rect["alpha_rectangular"].values())
        witnesses["rectangular_generators"] = rect
    else:
        for kind, fn in (("rectangular", is_rectangular),
                         ("c_rectangular", is_c_rectangular),
                         ("alpha_rectangular", is_alpha_rectangular)):
            ok, bounds = fn(S)
            flags[kind] = ok
            if ok:
                witnesses[kind] = {"bounds": bounds}
    flags["betti_sorted"] = is_betti_sorted(S, degree_bound)
    flags["betti_isolated_sorted"] = is_betti_isolated_sorted(S, degree_bound)
    flags["betti_divisible"] = is_betti_divisible(S, degree_bound)
    flags["betti_isolated_divisible"] = is_betti_isolated_divisible(
        S, degree_bound)
    single, b = has_single_betti(S, degree_bound)
    flags["single_betti"] = single
    if single:
        witnesses["single_betti"] = b
    single_bm, bm = has_single_betti_minimal(S, degree_bound)
    flags["single_betti_minimal"] = single_bm
    if single_bm:
        witnesses["single_betti_minimal"] = bm
    return ClassificationReport(flags, witnesses)


# -- verified inequality chains ------------------------------------------

def _chain(name, *values):
    ok = all(a <= b for a, b in zip(values, values[1:]))
    return {"name": name, "ok": ok, "values": list(values)}


def verify_bounds(S):
    """Evaluate every applicable inequality chain of the bound results."""
    out = []
    profile = _complete_betti(S)
    prof = isolated_profile(S)
    e = len(S.gens)
    if S.numerical and e == 1:
        return out
    betti = list(profile.betti)
    nc_sum = profile.nc_sum()
    ib = prof.i_b
    m = S.codim

    if S.is_simplicial() and m >= 1:
        out.append(_chain("ib_lower", m + 1, ib))

    if S.is_simplicial() and S.is_cohen_macaulay() and m >= 1:
        d = S.multiplicity if S.numerical else len(S.apery())
        out.append(_chain("ib_nc_chain", ib, nc_sum,
                          (2 * d - m) * (m - 1) + 2, d * (d - 1)))
        attained = ib == d * (d - 1)
        maximal = (m == d - 1) and all(
            factor.denumerant(S, b) == 2 for b in betti)
        out.append({"name": "ib_max_equality", "ok": attained == maximal,
                    "values": [attained, maximal]})

    if S.numerical and betti:
        cs = [constants.c_value(S, i) for i in range(e)]
        c_sum = sum(cs)
        c_prod = prod(cs)
        i_s = prof.i_s
        i_total = prof.i_total
        b1 = min(betti)
        out.append(_chain("is_chain", e + 3, c_sum - e + 2, i_s, b1))
        out.append(_chain("i_chain", 2 * e + 3, i_total, b1 + nc_sum,
                          b1 + S.multiplicity * (S.multiplicity - 1)))
        single = len(betti) == 1
        attained = i_total == b1 + nc_sum
        out.append({"name": "one_betti_total", "ok": single == attained,
                    "values": [single, attained]})
        out.append(_chain("i_upper", i_total, e + c_prod))
        out.append(_chain("is_upper", i_s, c_prod))
        conds = [i_total == e + c_prod, ib == e, i_s == c_prod]
        out.append({"name": "iso_equalities",
                    "ok": len(set(conds)) == 1, "values": conds})
    return out


# -- theorem equivalence vectors ------------------------------------------

def _entry(conditions, extra_ok=True):
    flat = [c for c in conditions if c is not None]
    ok = len(set(flat)) <= 1 and bool(extra_ok)
    return {"applicable": True, "conditions": conditions, "ok": ok}


def _skip():
    return {"applicable": False, "conditions": [], "ok": True}


def _check_isolated_characterization(S):
    """Oracle (singleton R-class) versus the domination characterization of
    non-isolated factorizations, plus the minimal-multi-vector identity
    for I_b, over a covering scan."""
    profile = _complete_betti(S)
    ib = set(isolated_profile(S).ib)
    ib_by_betti = {b: [z for z in ib if _phi(S, z) == b]
                   for b in profile.betti}
    multi_vectors = []
    for m in S.elements_upto(_scan_bound(S)):
        fib = factor.fiber(S, m)
        if fib.denumerant == 0:
            continue
        # a dominator z in Z(b) forces b <=_S m, so only those fibers matter
        divisors = [b for b in profile.betti if S.leq(b, m)]
        betti_facts = [x for b in divisors
                       for x in profile.fibers[b].factorizations]
        ib_facts = [z for b in divisors for z in ib_by_betti[b]]
        singletons = {cls[0] for cls in fib.classes if len(cls) == 1}
        for x in fib.factorizations:
            oracle = x in singletons
            dominated = any(_dominates(z, x) for z in betti_facts)
            if oracle != (not dominated):
                return _entry([False])
            if not oracle and not any(_dominates(z, x) for z in ib_facts):
                return _entry([False])  # strengthened form fails
        if fib.denumerant >= 2:
            multi_vectors.extend(fib.factorizations)
    # increasing coordinate sum: every dominator of x precedes x, and any
    # dominator is itself dominated by some already-kept minimal
    multi_vectors.sort(key=sum)
    minimals = []
    for x in multi_vectors:
        if not any(_dominates(z, x) for z in minimals):
            minimals.append(x)
    return _entry([set(minimals) == ib])


def _check_isolated_elements(S):
    """Element-level 3-way: m has a non-isolated factorization iff some
    Betti element divides it, iff some IBetti element divides it."""
    profile = _complete_betti(S)
    ibetti = profile.ibetti
    for m in S.elements_upto(_scan_bound(S)):
        fib = factor.fiber(S, m)
        if fib.denumerant == 0:
            continue
        iso = sum(1 for cls in fib.classes if len(cls) == 1)
        has_non_isolated = iso < fib.denumerant
        by_betti = any(S.leq(b, m) for b in profile.betti)
        by_ibetti = any(S.leq(b, m) for b in ibetti)
        if not has_non_isolated == by_betti == by_ibetti:
            return _entry([False])
    return _entry([True])


def _check_betti_minimal_characterizations(S):
    profile = _complete_betti(S)
    a = list(betti_minimals(S))
    ibetti = profile.ibetti
    b = _sorted_elements(S, [x for x in ibetti
                             if not any(y != x and S.leq(y, x)
                                        for y in ibetti)])
    c = _sorted_elements(S, [bb for bb in profile.betti
                             if profile.fibers[bb].nc ==
                             profile.fibers[bb].denumerant])
    d = list(minimal_multi_elements(
        S, bound=None if S.numerical else _scan_bound(S)))
    return _entry([a == b == c == d])


def _check_disjoint_betti(S):
    profile = _complete_betti(S)
    for b1 in profile.betti:
        for b2 in profile.betti:
            if b1 == b2 or not S.leq(b1, b2):
                continue
            iso2 = factor.isolated_factorizations(S, b2)
            for x in factor.fiber(S, b1).factorizations:
                for y in iso2:
                    if any(xc and yc for xc, yc in zip(x, y)):
                        return _entry([False])
    return _entry([True])


def _check_ap_b1(S):
    profile = _complete_betti(S)
    if not S.numerical or not profile.betti:
        return _skip()
    single = len(betti_minimals(S)) == 1
    b1 = min(profile.betti)
    ap_unique = all(factor.denumerant(S, w) == 1 for w in S.apery(b1))
    i_s_eq = isolated_profile(S).i_s == b1
    return _entry([single, ap_unique, i_s_eq])


def _check_b1_smallest(S):
    profile = _complete_betti(S)
    if not S.numerical or not profile.betti:
        return _skip()
    b1 = min(profile.betti)
    smallest = next(s for s in S.elements_upto(_scan_bound(S))
                    if factor.denumerant(S, s) >= 2)
    fib = profile.fibers[b1]
    return _entry([b1 == smallest and fib.nc == fib.denumerant])


def _check_thm_isolated(S):
    """The C(M) inclusions and their equality linkage."""
    prof = isolated_profile(S)
    e = len(S.gens)
    catoms = constants.c_atoms(S)
    ib = set(prof.ib)
    pure = {tuple(c if i == idx else 0 for i in range(e))
            for idx, c in catoms}
    iso_all = ib | set(prof.is_)
    first_incl = pure <= ib
    box_ok = all(all(x[idx] < c for idx, c in catoms)
                 for x in iso_all - pure)
    if not (first_incl and box_ok):
        return _entry([False])
    if not prof.exhaustive or len(catoms) < e:
        # the second set is infinite (or only windowed); only the
        # inclusions can be verified
        return _entry([True])
    cs = dict(catoms)
    box = {t for t in product(*(range(cs[i]) for i in range(e)))}
    first_eq = pure == ib
    second_eq = iso_all - pure == box
    return _entry([first_eq == second_eq])


def _check_prop_alpha(S, j=None):
    """Four-way equivalence for alpha-rectangularity at one base."""
    ap = _apery_for(S, j)
    _, others = _nonbase_indices(S, j)
    alphas = [constants.alpha(S, i, j if S.numerical else None)
              for i in others]
    maxima = [w for w in ap
              if not any(v != w and S.leq(w, v) for v in ap)]
    unique_max = len(maxima) == 1
    c1 = is_alpha_rectangular(S, j)[0]
    c2 = unique_max and factor.denumerant(S, maxima[0]) == 1
    c3 = unique_max and all(factor.denumerant(S, w) == 1 for w in ap)
    c4 = len(ap) == prod(a + 1 for a in alphas)
    return _entry([c1, c2, c3, c4])


def _check_thm_alpha_free(S, j):
    """alpha-rectangularity at base j must be realized by a free
    arrangement with c_i^* = alpha_i + 1 at every later position.
    Returns None when the hypothesis fails."""
    if not is_alpha_rectangular(S, j)[0]:
        return None
    rest = tuple(i for i in range(len(S.gens)) if i != j)
    alphas = {i: constants.alpha(S, i, j) for i in rest}

    def extend(prefix, remaining):
        if not remaining:
            return True
        for idx in remaining:
            arrangement = prefix + (idx,)
            pos = len(prefix)
            cstar = constants.c_star(S, arrangement, pos)
            if cstar == alphas[idx] + 1 and \
                    constants.c_bar(S, arrangement, pos) == cstar:
                if extend(arrangement,
                          tuple(x for x in remaining if x != idx)):
                    return True
        return False

    return extend((j,), rest)


def _check_thm_alpha_c(S, j=None):
    """Six-way equivalence between alpha- and c-rectangularity, with the
    consequence c_i = alpha_i + 1.  Returns None when some c_i does not
    exist (then the statements are vacuous for this base)."""
    _, others = _nonbase_indices(S, j)
    cs = {i: constants.c_value(S, i) for i in others}
    if any(c is None for c in cs.values()):
        return None
    ap = _apery_for(S, j)
    ap_set = set(ap)
    prof = isolated_profile(S)
    e = len(S.gens)
    others_set = set(others)
    ib_restricted = {x for x in prof.ib
                     if all(x[i] == 0 for i in range(e)
                            if i not in others_set)}
    pure = {tuple(cs[i] if k == i else 0 for k in range(e)) for i in others}
    ib_cond = ib_restricted == pure
    not_in_ap = all(_scale_value(S, cs[i], S.gens[i]) not in ap_set
                    for i in others)
    unique = all(factor.denumerant(S, w) == 1 for w in ap)
    card = len(ap) == prod(cs[i] for i in others)
    crect = is_c_rectangular(S, j)[0]
    conds = [is_alpha_rectangular(S, j)[0],
             crect and not_in_ap,
             crect and ib_cond,
             ib_cond and unique,
             ib_cond and not_in_ap,
             ib_cond and card]
    extra = True
    if conds[0]:
        extra = all(cs[i] == constants.alpha(
            S, i, j if S.numerical else None) + 1 for i in others)
    return _entry(conds, extra_ok=extra)


def _check_thm_ci_b1(S):
    profile = _complete_betti(S)
    if not profile.betti:
        return _skip()
    prof = isolated_profile(S)
    m = S.codim
    mins = betti_minimals(S)
    c1 = is_complete_intersection(S) and len(mins) == 1
    c2 = False
    if prof.i_b == m + 1:
        for b1 in mins:
            if all(profile.fibers[b].nc ==
                   len(profile.fibers[b].isolated) + 1
                   for b in profile.betti if b != b1):
                c2 = True
                break
    return _entry([c1, c2])


def _check_cor_ci_b1(S):
    """Numerical 4-way in an arrangement minimizing c_i n_i, plus the
    Betti-set and n_1 consequences."""
    if not S.numerical:
        return _skip()
    profile = _complete_betti(S)
    if not profile.betti:
        return _skip()
    e = len(S.gens)
    prof = isolated_profile(S)
    single = len(betti_minimals(S)) == 1
    cs = [constants.c_value(S, i) for i in range(e)]
    cost = [cs[i] * S.gens[i] for i in range(e)]
    low = min(cost)
    c1 = free_some_arrangement(S) is not None and single
    c2 = is_complete_intersection(S) and single
    c3 = prof.i_b == e and single
    ok = True
    for j in (i for i in range(e) if cost[i] == low):
        c4 = prof.i_b == e and is_alpha_rectangular(S, j)[0]
        conds = [c1, c2, c3, c4]
        if len(set(conds)) != 1:
            ok = False
        elif c1:
            predicted = sorted({cost[i] for i in range(e) if i != j})
            if predicted != list(profile.betti) or \
                    predicted != list(profile.ibetti) or \
                    S.gens[j] != prod(cs[i] for i in range(e) if i != j):
                ok = False
    return _entry([ok])


def _check_thm_betti_sorted_alpha(S):
    """Five-way equivalence under the Betti-isolated-sorted hypothesis,
    checked for every choice of the base generator."""
    if not S.numerical:
        return _skip()
    profile = _complete_betti(S)
    if not profile.betti or not is_betti_isolated_sorted(S):
        return _skip()
    e = len(S.gens)
    b1 = min(profile.betti)
    for j in range(e):
        cs = {i: constants.c_value(S, i) for i in range(e) if i != j}
        ap = set(S.apery(S.gens[j]))
        conds = [b1 not in ap,
                 is_alpha_rectangular(S, j)[0],
                 is_c_rectangular(S, j)[0],
                 all(cs[i] * S.gens[i] not in ap for i in cs),
                 S.gens[j] == prod(cs.values())]
        if len(set(conds)) != 1:
            return _entry([False])
    return _entry([True])


def _check_cor_betti_sorted(S):
    """Numerical 4-way: Betti sorted / Betti-isolated sorted / staircase
    presentation with c coefficients / with arbitrary coefficients."""
    if not S.numerical:
        return _skip()
    profile = _complete_betti(S)
    if not profile.betti:
        return _skip()
    c1 = is_betti_sorted(S)
    c2 = is_betti_isolated_sorted(S)
    c3 = any(admits_shaped_presentation(S, arr, pure_right=False,
                                        fixed_c=True)
             for arr in _sorted_cost_arrangements(S))
    c4 = any(admits_shaped_presentation(S, arr, pure_right=False,
                                        fixed_c=False)
             for arr in _sorted_cost_arrangements(S))
    extra = True
    if c1:
        e = len(S.gens)
        cost = sorted(constants.c_value(S, i) * S.gens[i] for i in range(e))
        predicted = sorted(set(cost[1:]))
        extra = predicted == list(profile.betti) and \
            predicted == list(profile.ibetti)
    return _entry([c1, c2, c3, c4], extra_ok=extra)


def _check_cor_betti_divisible_presen(S):
    if not S.numerical:
        return _skip()
    profile = _complete_betti(S)
    if not profile.betti:
        return _skip()
    c1 = is_betti_divisible(S)
    c2 = is_betti_isolated_divisible(S)
    c3 = any(admits_shaped_presentation(S, arr, pure_right=True,
                                        fixed_c=True)
             for arr in _sorted_cost_arrangements(S))
    c4 = any(admits_shaped_presentation(S, arr, pure_right=True,
                                        fixed_c=False)
             for arr in _sorted_cost_arrangements(S))
    return _entry([c1, c2, c3, c4])


def _check_thm_betti_divisible_generators(S):
    if not S.numerical:
        return _skip()
    from .construct import recover_params
    profile = _complete_betti(S)
    if not profile.betti:
        return _skip()
    divisible = is_betti_divisible(S)
    params = recover_params(S)
    if divisible != (params is not None):
        return _entry([divisible, params is not None])
    extra = True
    if params is not None:
        a, f = params
        p = prod(a)
        extra = sorted({fi * p for fi in f[1:]}) == list(profile.betti)
    return _entry([divisible], extra_ok=extra)


def _check_thm_betti_divisible_free(S):
    """Betti divisible / every-partition gluing (e <= 5) / free for every
    arrangement (e <= 7); unverifiable conditions are left out."""
    if not S.numerical:
        return _skip()
    from .construct import is_gluing_partition
    e = len(S.gens)
    if e == 1:
        return _skip()
    c1 = is_betti_divisible(S)
    c3 = is_free_all_arrangements(S) if e <= 7 else None
    c2 = None
    if e <= 5:
        gens = list(S.gens)
        c2 = all(
            is_gluing_partition(
                S, [gens[i] for i in range(e) if mask >> i & 1],
                [gens[i] for i in range(e) if not mask >> i & 1],
                require_divisible=True)
            for mask in range(1, (1 << e) - 1) if mask & 1)
    return _entry([c1, c2, c3])


def _check_thm_single_betti_alpha(S):
    if not S.numerical:
        return _skip()
    profile = _complete_betti(S)
    if not profile.betti:
        return _skip()
    e = len(S.gens)
    c1 = len(profile.betti) == 1
    c2 = all(is_c_rectangular(S, j)[0] for j in range(e)) and \
        isolated_profile(S).i_b == e
    c3 = is_alpha_rectangular_every_generator(S)
    return _entry([c1, c2, c3])


def check_equivalence_theorems(S):
    """Evaluate the multi-way characterization theorems independently.

    Returns a mapping from theorem id to {applicable, conditions, ok}.
    Each vector must be constant (all true or all false); a mixed vector
    is a counterexample to the corresponding theorem.
    """
    report = {}
    if S.numerical and len(S.gens) == 1:
        return report
    report["isolated_characterization"] = _check_isolated_characterization(S)
    report["isolated_elements"] = _check_isolated_elements(S)
    report["betti_minimal_characterizations"] = \
        _check_betti_minimal_characterizations(S)
    report["disjoint_betti"] = _check_disjoint_betti(S)
    report["ap_b1"] = _check_ap_b1(S)
    report["b1_smallest"] = _check_b1_smallest(S)
    report["isolated_inclusions"] = _check_thm_isolated(S)
    if S.numerical:
        e = len(S.gens)
        report["prop_alpha"] = _entry(
            [all(_check_prop_alpha(S, j)["ok"] for j in range(e))])
        free_checks = [_check_thm_alpha_free(S, j) for j in range(e)]
        applicable = [v for v in free_checks if v is not None]
        report["thm_alpha_free"] = \
            _entry([all(applicable)]) if applicable else _skip()
        c_checks = [_check_thm_alpha_c(S, j) for j in range(e)]
        report["thm_alpha_c"] = _entry(
            [all(v["ok"] for v in c_checks if v is not None)])
    else:
        report["prop_alpha"] = _check_prop_alpha(S)
        entry = _check_thm_alpha_c(S)
        report["thm_alpha_c"] = entry if entry is not None else _skip()
    report["thm_ci_b1"] = _check_thm_ci_b1(S)
    report["cor_ci_b1"] = _check_cor_ci_b1(S)
    report["thm_betti_sorted_alpha"] = _check_thm_betti_sorted_alpha(S)
    report["cor_betti_sorted"] = _check_cor_betti_sorted(S)
    report["cor_betti_divisible_presen"] = \
        _check_cor_betti_divisible_presen(S)
    report["thm_betti_divisible_generators"] = \
        _check_thm_betti_divisible_generators(S)
    report["thm_betti_divisible_free"] = _check_thm_betti_divisible_free(S)
    report["thm_single_betti_alpha"] = _check_thm_single_betti_alpha(S)
    return report
