"""Corpus enumeration and exhaustive verification searches.

The genus tree enumerates every numerical semigroup of genus <= g by
removing effective generators (minimal generators larger than the
Frobenius number), which visits each semigroup exactly once.

The minimum-Frobenius search for Betti-divisible semigroups walks the
(a, f) parametrization, which provably covers the whole family, pruning
with the assignment-independent lower bound obtained by setting every
f_i = 1.
"""

from math import gcd, prod

from . import classify
from .construct import betti_divisible_from_params
from .errors import InvalidParametersError, SearchCapExceededError
from .semigroup import make_semigroup, parse_gens

__all__ = ["Corpus", "enumerate_numerical_by_genus", "load_corpus",
           "min_frobenius_betti_divisible", "run_theorem_harness",
           "DEFAULT_CHAIN_WITNESSES"]

GENUS_CAP = 25


class Corpus:
    """A list of semigroups with provenance, deduplicated by generators."""

    __slots__ = ("semigroups", "provenance")

    def __init__(self, semigroups, provenance):
        seen = set()
        out = []
        for S in semigroups:
            key = tuple(sorted(S.gens)) if S.numerical else tuple(S.gens)
            if key not in seen:
                seen.add(key)
                out.append(S)
        self.semigroups = out
        self.provenance = provenance

    def __iter__(self):
        return iter(self.semigroups)

    def __len__(self):
        return len(self.semigroups)


def enumerate_numerical_by_genus(g_max, cap=GENUS_CAP):
    """All numerical semigroups of genus <= g_max, via the semigroup tree."""
    if g_max > cap:
        raise SearchCapExceededError(
            f"genus {g_max} exceeds the enumeration cap {cap}")
    horizon = 4 * g_max + 6  # covers every minimal generator (<= F + m)
    out = []

    def min_gens(mask):
        gens = []
        for s in range(1, horizon):
            if not mask >> s & 1:
                continue
            if any(mask >> a & 1 and mask >> (s - a) & 1
                   for a in range(1, (s // 2) + 1)):
                continue
            gens.append(s)
        return gens

    def walk(mask, frob, genus):
        gens = min_gens(mask)
        out.append(make_semigroup(gens))
        if genus == g_max:
            return
        for g in gens:
            if g > frob:
                walk(mask & ~(1 << g), g, genus + 1)

    walk((1 << horizon) - 1, 0, 0)
    return Corpus(out, f"enumerated-by-genus<={g_max}")


def load_corpus(path):
    """Corpus file: one generator list per line, '#' starts a comment."""
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                out.append(make_semigroup(parse_gens(line)))
    return Corpus(out, f"file:{path}")


# -- minimum-Frobenius Betti-divisible search -----------------------------

def _f0(values):
    """Lower bound for the Frobenius number of any family member whose a
    values form this set (attained when every f_i = 1).  Strictly grows
    when the set grows, which makes it a valid pruning bound."""
    p = prod(values)
    return sum(p * (a - 1) // a for a in values) - p


def min_frobenius_betti_divisible(edim_min, f_max, distinct_betti_min=1):
    """The Betti-divisible numerical semigroup with >= edim_min minimal
    generators and the smallest Frobenius number <= f_max.

    Returns (frobenius, S).  The search enumerates the (a, f)
    parametrization; ties are broken by the sorted generator tuple.

    ``distinct_betti_min`` restricts the search to semigroups with at
    least that many distinct Betti elements (the count equals the number
    of distinct values among f_2, ..., f_e).  With the default of 1 the
    all-f=1 subfamily is included, so for example the single-Betti
    semigroup <30,42,70,105> (Frobenius 383) beats <30,42,105,140>
    (Frobenius 523) among those with at least 4 minimal generators;
    pass 2 to exclude semigroups with a unique Betti element.
    """
    if edim_min < 2:
        raise ValueError("edim_min must be at least 2")
    best = None  # (frobenius, sorted gens, S)

    def try_params(a, f):
        nonlocal best
        if len(set(f[1:])) < distinct_betti_min:
            return
        try:
            S, _predicted = betti_divisible_from_params(a, f)
        except InvalidParametersError:
            return
        frob = S.frobenius()
        if frob > f_max:
            return
        key = (frob, tuple(sorted(S.gens)))
        if best is None or key < (best[0], best[1]):
            best = (frob, key[1], S)

    def f_chains(a, pos, f, partial_cost, n1):
        """Extend the chain f_3 | ... | f_e; partial_cost accumulates
        sum (a_i - 1) n_i over positions >= 2."""
        e = len(a)
        if partial_cost - n1 > f_max:
            return
        if pos == e:
            try_params(a, tuple(f))
            return
        p = prod(a)
        ni_unit = p // a[pos]
        q = 1
        while True:
            fi = f[pos - 1] * q
            cost = (a[pos] - 1) * fi * ni_unit
            if partial_cost + cost - n1 > f_max:
                return
            if gcd(fi, a[pos]) == 1:
                f_chains(a, pos + 1, f + [fi], partial_cost + cost, n1)
            q += 1

    def assignments(values):
        e = len(values)
        p = prod(values)
        seen = set()
        # choose a_1 and a_2 (f_1 = f_2 = 1); the rest is ordered by the
        # f chain, so only the set of remaining values matters per chain
        for i in range(e):
            for j in range(e):
                if i == j:
                    continue
                rest = [values[k] for k in range(e)
                        if k not in (i, j)]
                for perm in _permutations_dedup(rest):
                    a = (values[i], values[j]) + perm
                    if a in seen:
                        continue
                    seen.add(a)
                    n1 = p // a[0]
                    base = (a[1] - 1) * (p // a[1])
                    f_chains(list(a), 2, [1, 1], base, n1)

    def grow(values, start):
        if len(values) >= edim_min:
            assignments(values)
        if not values:
            # _f0 of a singleton is always -1; bound the first element by
            # the cheapest two-element completion (a odd pairs with 2,
            # giving _f0 = a - 2)
            for a in range(2, f_max + 3):
                grow([a], a + 1)
            return
        a = start
        while _f0(values + [a]) <= f_max:
            if all(gcd(a, v) == 1 for v in values):
                grow(values + [a], a + 1)
            a += 1

    grow([], 2)
    if best is None:
        raise SearchCapExceededError(
            f"no Betti-divisible semigroup with >= {edim_min} generators "
            f"has Frobenius number <= {f_max}")
    return best[0], best[2]


def _permutations_dedup(values):
    from itertools import permutations
    return sorted(set(permutations(values)))


# -- theorem harness ------------------------------------------------------

# Constructed witnesses for the strictness of the inclusion chain
#   single Betti < Betti divisible < Betti sorted < (CI & one Betti-minimal)
#   < alpha-rectangular (some gen) < free (some arrangement) < CI;
# small-genus corpora cannot witness the first strict inclusion (the
# smallest Betti-divisible semigroup with two Betti elements has Frobenius
# number 49), so these are verified alongside the corpus.
DEFAULT_CHAIN_WITNESSES = {
    ("betti_divisible", "single_betti"): (6, 15, 20),
    ("betti_sorted", "betti_divisible"): (4, 6, 9),
    ("ci_single_bm", "betti_sorted"): (16, 20, 30, 45),
    ("alpha_rect_some", "ci_single_bm"): (4, 5, 6),
    ("free_some", "alpha_rect_some"): (24, 26, 36, 39),
    ("complete_intersection", "free_some"): (10, 14, 15, 21),
}

_CHAIN = ["single_betti", "betti_divisible", "betti_sorted",
          "ci_single_bm", "alpha_rect_some", "free_some",
          "complete_intersection"]


def _chain_memberships(S):
    e = len(S.gens)
    flags = {
        "single_betti": classify.has_single_betti(S)[0],
        "betti_divisible": classify.is_betti_divisible(S),
        "betti_sorted": classify.is_betti_sorted(S),
        "ci_single_bm": (classify.has_single_betti_minimal(S)[0] and
                         _is_ci(S)),
        "alpha_rect_some": any(classify.is_alpha_rectangular(S, j)[0]
                               for j in range(e)),
        "free_some": classify.free_some_arrangement(S) is not None,
        "complete_intersection": _is_ci(S),
    }
    return flags


def _is_ci(S):
    from .betti import is_complete_intersection
    return is_complete_intersection(S)


def run_theorem_harness(corpus, chain_witnesses=DEFAULT_CHAIN_WITNESSES):
    """Check every bound chain, equivalence theorem and family inclusion on
    every corpus member.  Returns a report dict with the (expected empty)
    violation list and the strictness witnesses found."""
    violations = []
    witnesses = {}
    checked = 0
    for S in corpus:
        checked += 1
        if S.numerical and len(S.gens) == 1:
            continue
        for bound in classify.verify_bounds(S):
            if not bound["ok"]:
                violations.append({"gens": S.gens, "check": bound["name"],
                                   "detail": bound["values"]})
        for name, entry in classify.check_equivalence_theorems(S).items():
            if not entry["ok"]:
                violations.append({"gens": S.gens, "check": name,
                                   "detail": entry["conditions"]})
        if S.numerical:
            flags = _chain_memberships(S)
            for small, big in zip(_CHAIN, _CHAIN[1:]):
                if flags[small] and not flags[big]:
                    violations.append({
                        "gens": S.gens,
                        "check": f"chain:{small}<={big}",
                        "detail": [flags[small], flags[big]]})
                if flags[big] and not flags[small]:
                    witnesses.setdefault((big, small), S.gens)
    if chain_witnesses:
        for (big, small), gens in chain_witnesses.items():
            S = make_semigroup(list(gens))
            flags = _chain_memberships(S)
            if flags[big] and not flags[small]:
                witnesses.setdefault((big, small), S.gens)
            else:
                violations.append({"gens": S.gens,
                                   "check": f"witness:{big}>{small}",
                                   "detail": [flags[big], flags[small]]})
    missing = [pair for pair in zip(_CHAIN[1:], _CHAIN)
               if pair not in witnesses]
    return {
        "checked": checked,
        "violations": violations,
        "strictness_witnesses": {f"{b}>{s}": list(g)
                                 for (b, s), g in sorted(witnesses.items())},
        "missing_strictness": [f"{b}>{s}" for b, s in missing],
    }
