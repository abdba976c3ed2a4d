"""Backtrack searches over a stabilizer chain: normalizers, subgroup
conjugacy, and subgroup classes up to conjugacy.

Searches walk the ambient group's chain with base ``0, 1, ..., n-1``. A
partial element is described by the images of the first few base points;
branches die as soon as those images are incompatible with the orbit
structure of the groups involved (orbit lengths of the group and of its
one-point stabilizers must be preserved).
"""

from __future__ import annotations

from collections import Counter

from ..errors import InputError, ResourceError
from .chain import PermGroup
from .perm import conj, cycle_type, identity, mul

DEFAULT_DEGREE_BOUND = 12


class _OrbitData:
    """Orbit ids and sizes for a group and each of its point stabilizers."""

    def __init__(self, G: PermGroup):
        n = G.degree
        self.group = G
        self.orbit_id, self.orbit_size = self._partition(G, n)
        self._stab = {}

    @staticmethod
    def _partition(G, n):
        oid = [0] * n
        size = [0] * n
        for k, orb in enumerate(G.orbits()):
            for x in orb:
                oid[x] = k
                size[x] = len(orb)
        return oid, size

    def stab(self, x):
        d = self._stab.get(x)
        if d is None:
            S = self.group.stabilizer([x])
            d = self._partition(S, self.group.degree)
            self._stab[x] = d
        return d


class _Matcher:
    """Pruning predicate for elements g with src^g = dst."""

    def __init__(self, src: PermGroup, dst: PermGroup):
        self.src = _OrbitData(src)
        self.dst = _OrbitData(dst) if dst is not src else self.src

    def ok(self, b, gamma, pairs):
        s, d = self.src, self.dst
        if s.orbit_size[b] != d.orbit_size[gamma]:
            return False
        for bi, gi in pairs:
            if (s.orbit_id[bi] == s.orbit_id[b]) != (d.orbit_id[gi] == d.orbit_id[gamma]):
                return False
            sid, ssz = s.stab(bi)
            did, dsz = d.stab(gi)
            if ssz[b] != dsz[gamma]:
                return False
        return True


def _ambient_chain(ambient: PermGroup):
    return ambient.chain_with_base(range(ambient.degree))


def _complete(chain, level, c, pairs, matcher, leaf):
    """Depth-first completion below ``level``; returns the first leaf hit."""
    base = chain.base
    if level == len(base):
        return c if leaf(c) else None
    trans = chain.trans[level]
    b = base[level]
    for beta in sorted(trans):
        gamma = c[beta]
        if not matcher.ok(b, gamma, pairs):
            continue
        hit = _complete(chain, level + 1, mul(trans[beta], c), pairs + [(b, gamma)],
                        matcher, leaf)
        if hit is not None:
            return hit
    return None


def _check_degree(ambient, bound):
    if bound is not None and ambient.degree > bound:
        raise ResourceError(f"degree {ambient.degree} exceeds the configured bound {bound}")


def _normalizes(H: PermGroup):
    gens = H.gens

    def leaf(g):
        return all(conj(h, g) in H for h in gens)

    return leaf


def _add_generator(gens, g, degree):
    if g not in PermGroup(gens, degree):
        gens.append(g)
    return gens


def normalizer(ambient: PermGroup, H: PermGroup,
               degree_bound: int | None = DEFAULT_DEGREE_BOUND) -> PermGroup:
    """N_ambient(H) by a level-by-level backtrack over the ambient chain.

    Levels are processed bottom-up. At level i the subgroup K found so far
    already contains the full stabilizer N_(b_0..b_i); a new point gamma of
    the i-th basic orbit is searched only if it is outside the orbit of b_i
    under K's stabilizer of b_0..b_(i-1).
    """
    _check_degree(ambient, degree_bound)
    if H.degree != ambient.degree:
        raise InputError("H and the ambient group have different degrees")
    if not ambient.contains_group(H):
        raise InputError("H is not a subgroup of the ambient group")
    n = ambient.degree
    chain = _ambient_chain(ambient)
    leaf = _normalizes(H)
    matcher = _Matcher(H, H)
    found = list(H.gens)
    for g in ambient.gens:
        if leaf(g):
            _add_generator(found, g, n)
    base = chain.base
    for i in range(len(base) - 1, -1, -1):
        trans = chain.trans[i]
        if len(trans) == 1:
            continue
        b = base[i]
        fixed = [(x, x) for x in base[:i]]
        K = PermGroup(found, n).stabilizer(base[:i])
        covered = set(K.orbit_of(b))
        for gamma in sorted(trans):
            if gamma in covered:
                continue
            if not matcher.ok(b, gamma, fixed):
                continue
            g = _complete(chain, i + 1, trans[gamma], fixed + [(b, gamma)], matcher, leaf)
            if g is not None:
                found.append(g)
                K = PermGroup(found, n).stabilizer(base[:i])
                covered = set(K.orbit_of(b))
    return PermGroup(_reduce_gens(found, n), n)


def _reduce_gens(gens, n):
    out = []
    for g in gens:
        if not out or g not in PermGroup(out, n):
            out.append(g)
    return out


def normalizer_exhaustive(ambient: PermGroup, H: PermGroup, max_order: int = 10**6) -> PermGroup:
    """Oracle: test every element of the ambient group."""
    if ambient.order() > max_order:
        raise ResourceError("ambient group too large for exhaustive normalizer")
    Hset = H.element_set()
    n = ambient.degree
    gens = []
    members = set(Hset)
    for g in ambient.elements():
        if g in members:
            continue
        if all(conj(h, g) in Hset for h in H.gens):
            gens.append(g)
            members = PermGroup(list(H.gens) + gens, n).element_set()
    return PermGroup(list(H.gens) + gens, n)


def normalizer_element_set(ambient: PermGroup, H: PermGroup) -> frozenset:
    """Oracle returning N as an explicit element set (small groups)."""
    Hset = H.element_set()
    return frozenset(g for g in ambient.elements() if all(conj(h, g) in Hset for h in H.gens))


def conjugating_element(ambient: PermGroup, U: PermGroup, V: PermGroup,
                        degree_bound: int | None = DEFAULT_DEGREE_BOUND):
    """Some g in ambient with U^g = V, or None."""
    _check_degree(ambient, degree_bound)
    if U.order() != V.order():
        return None
    if sorted(map(len, U.orbits())) != sorted(map(len, V.orbits())):
        return None
    chain = _ambient_chain(ambient)

    def leaf(g):
        return all(conj(u, g) in V for u in U.gens)

    return _complete(chain, 0, identity(ambient.degree), [], _Matcher(U, V), leaf)


def are_conjugate(ambient, U, V, degree_bound=DEFAULT_DEGREE_BOUND) -> bool:
    return conjugating_element(ambient, U, V, degree_bound) is not None


def subgroup_invariant(W: PermGroup, histogram_limit: int = 2520):
    key = (W.order(), tuple(sorted(len(o) for o in W.orbits())))
    if W.order() <= histogram_limit:
        hist = Counter(cycle_type(g) for g in W.elements())
        key += (tuple(sorted(hist.items())),)
    return key


class SubgroupClasses(list):
    """List of class representatives with a completeness flag."""

    complete = True


def _canonical_sort_key(W: PermGroup):
    return (W.order(), sorted(W.gens))


def subgroups_up_to_conjugacy(ambient: PermGroup, budget: int = 5040,
                              max_classes: int = 10_000) -> SubgroupClasses:
    """One representative per conjugacy class of subgroups.

    Starts from the trivial group and repeatedly extends a representative U
    by one element g, taking g from each orbit of the action of
    ``U x N(U)`` on the ambient group by ``x -> u x`` and ``x -> x^n``.
    Elements in the same orbit give conjugate extensions, so one per orbit
    suffices; every subgroup is reached because it has a generating chain.
    New subgroups are deduplicated with :func:`conjugating_element`.

    ``budget`` bounds the ambient order; exceeding ``max_classes`` raises
    :class:`ResourceError` carrying the partial (incomplete) list.
    """
    order = ambient.order()
    if order > budget:
        raise ResourceError(f"ambient order {order} exceeds the enumeration budget {budget}",
                            partial=SubgroupClasses())
    n = ambient.degree
    elements = sorted(ambient.elements())
    index = {g: i for i, g in enumerate(elements)}
    trivial = PermGroup([], n)
    reps = [trivial]
    buckets = {subgroup_invariant(trivial): [0]}
    normalizers = {}

    def find_class(W):
        key = subgroup_invariant(W)
        for idx in buckets.get(key, []):
            if conjugating_element(ambient, reps[idx], W, None) is not None:
                return idx
        return None

    k = 0
    while k < len(reps):
        U = reps[k]
        N = normalizer(ambient, U, None)
        normalizers[k] = N
        parent = list(range(len(elements)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        movers = [(u, None) for u in U.gens] + [(None, g) for g in N.gens]
        for i, x in enumerate(elements):
            for u, g in movers:
                y = mul(u, x) if u is not None else conj(x, g)
                a, b = find(i), find(index[y])
                if a != b:
                    parent[max(a, b)] = min(a, b)
        roots = sorted({find(i) for i in range(len(elements))})
        for r in roots:
            g = elements[r]
            if g in U:
                continue
            W = PermGroup(U.gens + [g], n)
            if find_class(W) is None:
                reps.append(PermGroup(_reduce_gens(W.gens, n), n))
                buckets.setdefault(subgroup_invariant(W), []).append(len(reps) - 1)
                if len(reps) > max_classes:
                    partial = SubgroupClasses(sorted(reps, key=_canonical_sort_key))
                    partial.complete = False
                    raise ResourceError("too many subgroup classes", partial=partial)
        k += 1
    out = SubgroupClasses(sorted(reps, key=_canonical_sort_key))
    return out


def _closure(gens, start):
    """Naive closure of ``start`` under right multiplication by ``gens``."""
    seen = set(start)
    queue = list(start)
    for x in queue:
        for g in gens:
            y = mul(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def all_subgroups_exhaustive(ambient: PermGroup, max_order: int = 120):
    """Oracle: every subgroup as an element set, by naive closure.

    Independent of stabilizer chains; intended for |ambient| <= 120.
    """
    if ambient.order() > max_order:
        raise ResourceError("ambient group too large for the exhaustive oracle")
    n = ambient.degree
    elements = sorted(ambient.elements())
    e = identity(n)
    found = {frozenset([e]): []}
    queue = [frozenset([e])]
    for S in queue:
        gens = found[S]
        for g in elements:
            if g in S:
                continue
            new_gens = gens + [g]
            W = _closure(new_gens, [e])
            if W not in found:
                found[W] = new_gens
                queue.append(W)
    return found


def conjugacy_classes_of_subsets(ambient: PermGroup, subgroups):
    """Group element-set subgroups into conjugacy classes (oracle helper)."""
    elements = list(ambient.elements())
    remaining = set(subgroups)
    classes = []
    while remaining:
        S = min(remaining, key=lambda s: (len(s), sorted(s)))
        cls = {frozenset(conj(h, g) for h in S) for g in elements}
        classes.append(cls)
        remaining -= cls
    return classes
