"""Factorization fibers, denumerants and R-classes.

A factorization of m over generators (n_1, ..., n_e) is an exponent tuple
x in N^e with sum x_i * n_i == m.  The fiber Z(m) is the set of all of them.
Two factorizations are linked when they share support; the connected
components of that graph on Z(m) are the R-classes.
"""

from .errors import FiberCapExceededError

DEFAULT_FIBER_CAP = 10 ** 6


def _max_multiple(m, g):
    """Largest k with m - k*g still nonnegative (componentwise for tuples)."""
    if isinstance(m, int):
        return m // g
    k = None
    for mc, gc in zip(m, g):
        if gc:
            q = mc // gc
            k = q if k is None else min(k, q)
    return k


def _vsub(m, g, k):
    if isinstance(m, int):
        return m - k * g
    return tuple(mc - k * gc for mc, gc in zip(m, g))


def _is_zero(m):
    return m == 0 if isinstance(m, int) else not any(m)


def raw_fiber(gens, m, cap=DEFAULT_FIBER_CAP):
    """All factorizations of m over gens, sorted lexicographically.

    Works for numerical data (ints) and affine data (tuples of ints) alike.
    Raises FiberCapExceededError if more than `cap` factorizations exist.
    """
    e = len(gens)
    out = []
    if e == 0:
        return ((),) if _is_zero(m) else ()

    def rec(i, rem, suffix):
        if i == 0:
            g = gens[0]
            k = _max_multiple(rem, g)
            if k is not None and _is_zero(_vsub(rem, g, k)):
                if cap is not None and len(out) >= cap:
                    raise FiberCapExceededError(m, cap)
                out.append((k,) + suffix)
            return
        g = gens[i]
        top = _max_multiple(rem, g)
        for k in range(top + 1):
            rec(i - 1, _vsub(rem, g, k), (k,) + suffix)

    if isinstance(m, int):
        if m < 0:
            return ()
    elif any(c < 0 for c in m):
        return ()
    rec(e - 1, m, ())
    out.sort()
    return tuple(out)


def r_classes(factorizations):
    """Partition factorizations into R-classes (support-sharing components).

    Returns a tuple of classes; each class is a lex-sorted tuple of
    factorizations, and classes are sorted by their smallest member.
    """
    facts = list(factorizations)
    parent = list(range(len(facts)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[rj] = ri

    first_user = {}
    for fi, x in enumerate(facts):
        for j, c in enumerate(x):
            if c:
                if j in first_user:
                    union(first_user[j], fi)
                else:
                    first_user[j] = fi
    groups = {}
    for fi in range(len(facts)):
        groups.setdefault(find(fi), []).append(facts[fi])
    classes = [tuple(sorted(g)) for g in groups.values()]
    classes.sort()
    return tuple(classes)


class Fiber:
    """The fiber Z(m) together with its R-class decomposition."""

    __slots__ = ("element", "factorizations", "classes")

    def __init__(self, element, factorizations, classes):
        self.element = element
        self.factorizations = factorizations
        self.classes = classes

    @property
    def nc(self):
        """Number of R-classes."""
        return len(self.classes)

    @property
    def denumerant(self):
        return len(self.factorizations)

    @property
    def isolated(self):
        """Factorizations forming a singleton R-class, lex-sorted."""
        return tuple(c[0] for c in self.classes if len(c) == 1)

    def __repr__(self):
        return f"Fiber({self.element!r}, nc={self.nc}, d={self.denumerant})"


def fiber(S, m, cap=DEFAULT_FIBER_CAP):
    """Fiber of m in the semigroup S, with R-classes.  Cached on S."""
    cache = S._fiber_cache
    hit = cache.get(m)
    if hit is not None:
        return hit
    facts = raw_fiber(S.gens, m, cap)
    fib = Fiber(m, facts, r_classes(facts))
    if cap == DEFAULT_FIBER_CAP:
        cache[m] = fib
    return fib


def denumerant(S, m, cap=DEFAULT_FIBER_CAP):
    """Number of factorizations of m in S."""
    return fiber(S, m, cap).denumerant


def nc(S, m, cap=DEFAULT_FIBER_CAP):
    """Number of R-classes of the fiber of m in S."""
    return fiber(S, m, cap).nc


def isolated_factorizations(S, m, cap=DEFAULT_FIBER_CAP):
    """Factorizations of m that form a singleton R-class."""
    return fiber(S, m, cap).isolated
