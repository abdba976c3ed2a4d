"""Stabilizer chains (deterministic Schreier-Sims) and the PermGroup type."""

from __future__ import annotations

from math import prod

from ..errors import InputError
from .perm import check_perm, identity, inv, is_identity, mul


def _first_moved(p):
    for i, x in enumerate(p):
        if i != x:
            return i
    return None


def _orbit_transversal(point, gens, n):
    trans = {point: identity(n)}
    queue = [point]
    for beta in queue:
        u = trans[beta]
        for s in gens:
            gamma = s[beta]
            if gamma not in trans:
                trans[gamma] = mul(u, s)
                queue.append(gamma)
    return trans


class StabChain:
    """Base, strong generators per level and transversals ``{point: u}``.

    ``u`` maps the level's base point to ``point``. Built by the
    deterministic incremental Schreier-Sims algorithm, so the chain depends
    only on the generator order and the requested base prefix.
    """

    def __init__(self, gens, n, base_prefix=()):
        self.n = n
        ident = identity(n)
        gens = [g for g in dict.fromkeys(gens) if not is_identity(g)]
        base = list(dict.fromkeys(base_prefix))
        for g in gens:
            if all(g[b] == b for b in base):
                base.append(_first_moved(g))
        self.base = base
        self.strong = [[g for g in gens if all(g[b] == b for b in base[:i])]
                       for i in range(len(base))]
        self.trans = [_orbit_transversal(base[i], self.strong[i], n) for i in range(len(base))]
        i = len(base) - 1
        while i >= 0:
            jumped = False
            for beta, u in list(self.trans[i].items()):
                for s in self.strong[i]:
                    us = mul(u, s)
                    v = self.trans[i][us[self.base[i]]]
                    sg = mul(us, inv(v))
                    if sg == ident:
                        continue
                    h, j = self._strip(sg, i + 1)
                    if j < len(self.base) or h != ident:
                        if j == len(self.base):
                            self.base.append(_first_moved(h))
                            self.strong.append([])
                            self.trans.append({self.base[-1]: ident})
                        for level in range(i + 1, j + 1):
                            self.strong[level].append(h)
                            self.trans[level] = _orbit_transversal(
                                self.base[level], self.strong[level], n)
                        i = j
                        jumped = True
                        break
                if jumped:
                    break
            if not jumped:
                i -= 1

    def _strip(self, g, start=0):
        for level in range(start, len(self.base)):
            beta = g[self.base[level]]
            u = self.trans[level].get(beta)
            if u is None:
                return g, level
            g = mul(g, inv(u))
        return g, len(self.base)

    def contains(self, g):
        h, j = self._strip(g)
        return j == len(self.base) and is_identity(h)

    def order(self):
        return prod(len(t) for t in self.trans)

    def elements(self):
        """All elements; order is fixed by the chain, not lexicographic."""
        n = self.n
        levels = self.trans

        def rec(level, acc):
            if level < 0:
                yield acc
                return
            for u in levels[level].values():
                yield from rec(level - 1, mul(acc, u))

        yield from rec(len(levels) - 1, identity(n))

    def strong_generators(self):
        seen = dict()
        for level in self.strong:
            for g in level:
                seen[g] = None
        return list(seen)


class PermGroup:
    """Permutation group on ``{0, ..., degree-1}`` given by generators.

    The stabilizer chain is built on first use and cached; instances are
    treated as immutable.
    """

    def __init__(self, gens, degree=None):
        gens = [tuple(g) for g in gens]
        if degree is None:
            if not gens:
                raise InputError("degree needed for a group without generators")
            degree = len(gens[0])
        for g in gens:
            if len(g) != degree:
                raise InputError(f"generator of degree {len(g)} in a group of degree {degree}")
            check_perm(g)
        self.degree = degree
        self.gens = [g for g in gens if not is_identity(g)]
        self._chain = None
        self._chains = {}

    @property
    def chain(self) -> StabChain:
        if self._chain is None:
            self._chain = StabChain(self.gens, self.degree)
        return self._chain

    def chain_with_base(self, prefix) -> StabChain:
        prefix = tuple(prefix)
        c = self._chains.get(prefix)
        if c is None:
            c = StabChain(self.gens, self.degree, prefix)
            self._chains[prefix] = c
        return c

    def order(self) -> int:
        return self.chain.order()

    def __len__(self):
        return self.order()

    def __contains__(self, g):
        return len(g) == self.degree and self.chain.contains(tuple(g))

    def contains_group(self, other: "PermGroup") -> bool:
        return all(g in self for g in other.gens)

    def __eq__(self, other):
        if not isinstance(other, PermGroup):
            return NotImplemented
        return (self.degree == other.degree and self.order() == other.order()
                and self.contains_group(other))

    def __hash__(self):
        return hash((self.degree, self.order()))

    def elements(self):
        return self.chain.elements()

    def element_set(self):
        return frozenset(self.elements())

    def is_trivial(self):
        return not self.gens

    def orbits(self):
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen:
                continue
            orb = [i]
            seen.add(i)
            for x in orb:
                for g in self.gens:
                    y = g[x]
                    if y not in seen:
                        seen.add(y)
                        orb.append(y)
            out.append(sorted(orb))
        return out

    def orbit_of(self, point):
        return _orbit_transversal(point, self.gens, self.degree).keys()

    def stabilizer(self, points) -> "PermGroup":
        """Pointwise stabilizer of the sequence ``points``."""
        points = list(points)
        c = self.chain_with_base(points)
        k = len(points)
        gens = c.strong[k] if k < len(c.strong) else []
        return PermGroup(gens, self.degree)

    def is_normal_in(self, other: "PermGroup") -> bool:
        from .perm import conj

        return all(conj(h, g) in self for h in self.gens for g in other.gens)

    def conjugate(self, g) -> "PermGroup":
        from .perm import conj

        return PermGroup([conj(h, g) for h in self.gens], self.degree)

    def is_transitive(self):
        return len(self.orbits()) == 1

    def lex_min_coset_rep(self, x):
        """Lexicographically least element of the coset {h*x : h in self}."""
        c = self.chain_with_base(range(self.degree))
        for level in range(len(c.base)):
            trans = c.trans[level]
            if len(trans) == 1:
                continue
            beta = min(trans, key=lambda b: x[b])
            x = mul(trans[beta], x)
        return x

    def __repr__(self):
        from .perm import format_perms

        return f"PermGroup(degree={self.degree}, gens=[{format_perms(self.gens)}])"


def symmetric_group(n) -> PermGroup:
    if n <= 1:
        return PermGroup([], max(n, 1))
    gens = [tuple([1, 0] + list(range(2, n)))]
    if n > 2:
        gens.append(tuple(list(range(1, n)) + [0]))
    return PermGroup(gens, n)


def alternating_group(n) -> PermGroup:
    if n <= 2:
        return PermGroup([], max(n, 1))
    gens = []
    for k in range(2, n):
        img = list(range(n))
        img[0], img[1], img[k] = 1, k, 0
        gens.append(tuple(img))
    return PermGroup(gens, n)


def build_chain(gens, degree) -> PermGroup:
    """Validate generators of the stated degree and build their chain."""
    for g in gens:
        if len(g) != degree:
            raise InputError(f"generator of degree {len(g)} given for degree {degree}")
    G = PermGroup(gens, degree)
    G.chain
    return G
