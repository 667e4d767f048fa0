"""Semigroup descriptors: construction, membership, Apery sets, basic invariants.

Elements of a numerical semigroup are plain ints; elements of an affine
semigroup in N^r are tuples of r ints.  Generators keep the caller's order
(minus redundant ones); all arrangement-sensitive operations honour that
stored order unless given an explicit arrangement.
"""

from itertools import combinations, product
from math import gcd

from . import linalg
from .errors import (
    InfiniteAperyError,
    InvalidGeneratorsError,
    NotNumericalError,
    NotSimplicialError,
    SearchCapExceededError,
)

_CSTAR_CAP = 10 ** 6


class SubMonoid:
    """Membership engine for the monoid generated by a fixed generator list."""

    __slots__ = ("gens", "numerical", "_table", "_memo")

    def __init__(self, gens):
        self.gens = tuple(gens)
        self.numerical = bool(self.gens) and isinstance(self.gens[0], int)
        self._table = bytearray([1])  # numerical DP table; index 0 is the identity
        self._memo = {}

    def contains(self, v):
        if self.numerical or isinstance(v, int):
            if not isinstance(v, int):
                raise InvalidGeneratorsError("numerical membership needs an int")
            if v < 0:
                return False
            t = self._table
            if v >= len(t):
                old = len(t)
                t.extend(b"\x00" * (v + 1 - old))
                for s in range(old, v + 1):
                    for g in self.gens:
                        if s >= g and t[s - g]:
                            t[s] = 1
                            break
            return bool(t[v])
        if any(c < 0 for c in v):
            return False
        if not any(v):
            return True
        return self._contains_affine(tuple(v))

    def _contains_affine(self, v):
        # Recursion depth is at most the coordinate sum of v, which stays
        # small for everything this package computes.
        memo = self._memo
        hit = memo.get(v)
        if hit is not None:
            return hit
        result = False
        for g in self.gens:
            nxt = tuple(c - gc for c, gc in zip(v, g))
            if any(c < 0 for c in nxt):
                continue
            if not any(nxt) or self._contains_affine(nxt):
                result = True
                break
        memo[v] = result
        return result


class Semigroup:
    """Descriptor for a numerical or affine semigroup.

    Attributes:
        gens: tuple of generators (ints, or tuples of ints), caller order,
            redundant generators removed.
        ambient_dim: number of coordinates (1 for numerical).
        rank: rank of the group generated by the generators.
        simplicial_rays: tuple of indices into gens of the lexicographically
            smallest generator subset spanning the rational cone, or None if
            the semigroup is not simplicial.
    """

    def __init__(self, gens, ambient_dim, rank, simplicial_rays):
        self.gens = tuple(gens)
        self.ambient_dim = ambient_dim
        self.rank = rank
        self.simplicial_rays = simplicial_rays
        self.numerical = ambient_dim == 1
        self._monoid = SubMonoid(self.gens)
        self._submonoids = {}
        self._fiber_cache = {}
        self._apery_cache = {}
        self._const_cache = {}

    # -- basic accessors -------------------------------------------------

    @property
    def embedding_dim(self):
        return len(self.gens)

    @property
    def codim(self):
        """Number of non-ray generators (e - r)."""
        return len(self.gens) - self.rank

    @property
    def multiplicity(self):
        if not self.numerical:
            raise NotNumericalError("multiplicity is a numerical invariant here")
        return min(self.gens)

    def is_simplicial(self):
        return self.simplicial_rays is not None

    def ray_values(self):
        if self.simplicial_rays is None:
            raise NotSimplicialError(f"{self} is not simplicial")
        return tuple(self.gens[i] for i in self.simplicial_rays)

    def nonray_indices(self):
        rays = set(self.simplicial_rays or ())
        return tuple(i for i in range(len(self.gens)) if i not in rays)

    # -- membership ------------------------------------------------------

    def contains(self, v):
        return self._monoid.contains(v)

    def __contains__(self, v):
        return self.contains(v)

    def leq(self, a, b):
        """Divisibility order: a <=_S b  iff  b - a lies in S."""
        if self.numerical:
            return self.contains(b - a)
        d = tuple(bc - ac for ac, bc in zip(a, b))
        return self.contains(d)

    def submonoid(self, indices):
        """Membership engine for the monoid generated by a subset of gens."""
        key = tuple(sorted(indices))  # membership is order-independent
        sm = self._submonoids.get(key)
        if sm is None:
            sm = SubMonoid(tuple(self.gens[i] for i in key))
            self._submonoids[key] = sm
        return sm

    # -- Apery sets ------------------------------------------------------

    def apery(self, base=None):
        """Apery set Ap(S; base), sorted.

        base=None uses the ray generators (the first generator for numerical
        semigroups).  Numerical semigroups accept any nonzero element or any
        finite set of nonzero elements as base.  Affine semigroups support
        exactly the ray generator set.
        """
        key = self._apery_key(base)
        hit = self._apery_cache.get(key)
        if hit is not None:
            return hit
        if self.numerical:
            result = self._apery_numerical(key)
        else:
            result = self._apery_affine(key)
        self._apery_cache[key] = result
        return result

    def _apery_key(self, base):
        if self.numerical:
            if base is None:
                return (self.gens[0],)
            if isinstance(base, int):
                return (base,)
            return tuple(sorted(set(base)))
        if base is None:
            return tuple(sorted(set(self.ray_values())))
        return tuple(sorted(set(tuple(b) for b in base)))

    def _apery_numerical(self, bases):
        if not bases or any(b <= 0 or not self.contains(b) for b in bases):
            raise InfiniteAperyError("Apery base must be a nonzero element of S")
        if len(bases) == 1:
            b = bases[0]
            out = []
            s = 0
            while len(out) < b:
                if self.contains(s) and not self.contains(s - b):
                    out.append(s)
                s += 1
            return tuple(out)
        f = self.frobenius()
        hi = f + max(bases)
        out = [s for s in range(hi + 1)
               if self.contains(s)
               and all(not self.contains(s - b) for b in bases)]
        return tuple(out)

    def _apery_affine(self, bases):
        rays = self.ray_values()
        if bases != tuple(sorted(set(rays))):
            raise InfiniteAperyError(
                "affine Apery sets are supported with respect to the ray "
                "generators only")
        nonrays = self.nonray_indices()
        arrangement = tuple(self.simplicial_rays) + nonrays
        bounds = []
        for pos in range(self.rank, len(arrangement)):
            bounds.append(self.prefix_multiple(arrangement, pos))
        seen = set()
        for combo in product(*[range(c) for c in bounds]):
            w = _zero(self.ambient_dim)
            for lam, idx in zip(combo, nonrays):
                if lam:
                    w = _vadd_scaled(w, self.gens[idx], lam)
            if w in seen:
                continue
            if all(not self.contains(_vsub(w, r)) for r in rays):
                seen.add(w)
        return tuple(sorted(seen))

    def prefix_multiple(self, arrangement, pos, cap=_CSTAR_CAP):
        """Smallest c >= 1 with c * gens[arrangement[pos]] in the monoid
        generated by the earlier generators of the arrangement (c_i^*)."""
        prefix = arrangement[:pos]
        g = self.gens[arrangement[pos]]
        sm = self.submonoid(prefix)
        step = self._group_multiple(prefix, arrangement[pos])
        if step is None:
            raise SearchCapExceededError(
                f"{g} has no multiple in the group of the prefix")
        c = step
        while c <= cap:
            target = c * g if self.numerical else _scale(g, c)
            if sm.contains(target):
                return c
            c += step
        raise SearchCapExceededError(
            f"no multiple of {g} found in prefix monoid below cap {cap}")

    def _group_multiple(self, prefix, idx):
        """Smallest c with c * gens[idx] in the group of the prefix gens."""
        g = self.gens[idx]
        if self.numerical:
            d = 0
            for i in prefix:
                d = gcd(d, self.gens[i])
            if d == 0:
                return None
            return d // gcd(d, g)
        lat = linalg.Lattice([self.gens[i] for i in prefix])
        return lat.multiple_in_lattice(g)

    # -- numerical invariants --------------------------------------------

    def frobenius(self):
        if not self.numerical:
            raise NotNumericalError("Frobenius number needs a numerical semigroup")
        ap = self.apery(self.multiplicity)
        return max(ap) - self.multiplicity

    def genus(self):
        if not self.numerical:
            raise NotNumericalError("genus needs a numerical semigroup")
        f = self.frobenius()
        return sum(1 for s in range(1, f + 1) if not self.contains(s))

    # -- Cohen-Macaulay / Gorenstein -------------------------------------

    def is_cohen_macaulay(self):
        """Finite certificate: no two distinct Apery elements (w.r.t. the
        rays) may differ by an element of the group generated by the rays."""
        if self.numerical:
            return True
        ap = self.apery()
        lat = linalg.Lattice(self.ray_values())
        for a, b in combinations(ap, 2):
            if tuple(x - y for x, y in zip(a, b)) in lat:
                return False
        return True

    def is_gorenstein(self):
        if not self.is_cohen_macaulay():
            return False
        ap = self.apery()
        maxima = [w for w in ap
                  if not any(w != v and self.leq(w, v) for v in ap)]
        return len(maxima) == 1

    # -- element iteration ----------------------------------------------

    def elements_upto(self, bound):
        """Numerical: sorted elements s <= bound.  Affine: sorted elements
        with coordinate sum <= bound."""
        if self.numerical:
            return tuple(s for s in range(bound + 1) if self.contains(s))
        seen = {_zero(self.ambient_dim)}
        frontier = [_zero(self.ambient_dim)]
        while frontier:
            nxt = []
            for v in frontier:
                for g in self.gens:
                    w = tuple(a + b for a, b in zip(v, g))
                    if sum(w) <= bound and w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        return tuple(sorted(seen))

    # -- misc ------------------------------------------------------------

    def __repr__(self):
        return f"Semigroup<{format_gens(self.gens)}>"

    def __eq__(self, other):
        return isinstance(other, Semigroup) and set(self.gens) == set(other.gens)

    def __hash__(self):
        return hash(frozenset(self.gens))


def _zero(r):
    return (0,) * r


def _scale(g, c):
    return tuple(c * x for x in g)


def _vadd_scaled(w, g, lam):
    return tuple(a + lam * b for a, b in zip(w, g))


def _vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


# -- construction ---------------------------------------------------------

def make_semigroup(raw_gens):
    """Build a semigroup descriptor from raw generators.

    Accepts ints (numerical) or equal-length tuples/lists of ints (affine).
    Order is preserved; duplicates and redundant generators are dropped.
    One-dimensional input must have gcd 1 (otherwise NotNumericalError).
    """
    gens = _normalize(raw_gens)
    numerical = isinstance(gens[0], int)
    if numerical:
        d = 0
        for g in gens:
            d = gcd(d, g)
        if d != 1:
            raise NotNumericalError(
                f"gcd of generators is {d}; not a numerical semigroup")
    gens = _strip_redundant(gens)
    if numerical:
        return Semigroup(gens, 1, 1, (0,))
    r = linalg.group_rank(gens)
    rays = _find_rays(gens, r)
    return Semigroup(gens, len(gens[0]), r, rays)


def _normalize(raw_gens):
    gens = []
    dim = None
    for g in raw_gens:
        if isinstance(g, int):
            v = g
            if dim is None:
                dim = 0  # scalar
            elif dim != 0:
                raise InvalidGeneratorsError("mixed scalar and vector generators")
            if v <= 0:
                raise InvalidGeneratorsError("generators must be positive")
        else:
            v = tuple(int(x) for x in g)
            if dim is None:
                dim = len(v)
            elif dim != len(v):
                raise InvalidGeneratorsError("generators of inconsistent dimension")
            if any(x < 0 for x in v):
                raise InvalidGeneratorsError("generator coordinates must be >= 0")
            if not any(v):
                raise InvalidGeneratorsError("the zero vector is not a generator")
            if dim == 1:
                v = v[0]
        if v not in gens:
            gens.append(v)
    if not gens:
        raise InvalidGeneratorsError("at least one generator is required")
    return gens


def _strip_redundant(gens):
    gens = list(gens)
    changed = True
    while changed:
        changed = False
        for i, g in enumerate(gens):
            others = gens[:i] + gens[i + 1:]
            if others and SubMonoid(others).contains(g):
                gens.pop(i)
                changed = True
                break
    return tuple(gens)


def _find_rays(gens, r):
    for idxs in combinations(range(len(gens)), r):
        sub = [gens[i] for i in idxs]
        if linalg.group_rank(sub) != r:
            continue
        if all(linalg.in_rational_cone(g, sub) for g in gens):
            return idxs
    return None


# -- text format ----------------------------------------------------------

def parse_gens(text):
    """Parse '24,26,36,39' (numerical) or '(1,0);(0,2);(0,3)' (affine)."""
    text = text.strip()
    if not text:
        raise InvalidGeneratorsError("empty generator list")
    if "(" in text:
        parts = [p.strip() for p in text.split(";") if p.strip()]
        gens = []
        for p in parts:
            if not (p.startswith("(") and p.endswith(")")):
                raise InvalidGeneratorsError(f"bad generator syntax: {p!r}")
            try:
                gens.append(tuple(int(x) for x in p[1:-1].split(",")))
            except ValueError as exc:
                raise InvalidGeneratorsError(f"bad generator syntax: {p!r}") from exc
        return gens
    try:
        return [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise InvalidGeneratorsError(f"bad generator syntax: {text!r}") from exc


def format_element(v):
    if isinstance(v, int):
        return str(v)
    return "(" + ",".join(str(x) for x in v) + ")"


def format_gens(gens):
    if gens and isinstance(gens[0], int):
        return ",".join(str(g) for g in gens)
    return ";".join(format_element(g) for g in gens)
