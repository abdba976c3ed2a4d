"""Small abstract groups given by a multiplication table.

Elements are ``0 .. m-1`` and element 0 is always the identity. Tables come
from permutation groups (elements sorted lexicographically), from quotients
N/H (cosets labelled by their lexicographically least member) or from a
table file.
"""

from __future__ import annotations

from collections import Counter
from itertools import product

from ..errors import InputError, NormalityError, ParseError
from .chain import PermGroup
from .perm import format_perm, identity, mul

MAX_ORDER = 512


class AbstractGroup:
    def __init__(self, table, labels=None, check=True):
        m = len(table)
        if m == 0 or m > MAX_ORDER:
            raise InputError(f"abstract group order must be in 1..{MAX_ORDER}, got {m}")
        self.table = [list(row) for row in table]
        self.order = m
        self.labels = list(labels) if labels is not None else [str(i) for i in range(m)]
        if check:
            self.check_axioms()
        self._inverse = [row.index(0) for row in self.table]

    # -- construction ------------------------------------------------------

    @classmethod
    def from_perm_group(cls, G: PermGroup):
        elements = sorted(G.elements())
        if len(elements) > MAX_ORDER:
            raise InputError(f"group of order {len(elements)} exceeds {MAX_ORDER}")
        index = {g: i for i, g in enumerate(elements)}
        table = [[index[mul(a, b)] for b in elements] for a in elements]
        obj = cls(table, [format_perm(g) for g in elements], check=False)
        obj.perms = elements
        return obj

    @classmethod
    def from_table_text(cls, text: str):
        """Parse ``m`` then ``m`` rows of ``m`` indices; row 0 must be the identity."""
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not lines:
            raise ParseError("empty table file", line=1)
        try:
            m = int(lines[0].split()[0])
        except ValueError:
            raise ParseError("first line must be the group order", line=1, column=1) from None
        if len(lines) != m + 1:
            raise ParseError(f"expected {m} table rows, found {len(lines) - 1}", line=len(lines))
        table = []
        for r, ln in enumerate(lines[1:], start=2):
            parts = ln.split()
            if len(parts) != m:
                raise ParseError(f"row has {len(parts)} entries, expected {m}", line=r)
            try:
                row = [int(x) for x in parts]
            except ValueError:
                raise ParseError("non-integer table entry", line=r) from None
            if any(not 0 <= x < m for x in row):
                raise ParseError("table entry out of range", line=r)
            table.append(row)
        # relabel so that the identity is element 0
        e = next((i for i in range(m) if table[i] == list(range(m))), None)
        if e is None:
            raise InputError("table has no identity element")
        if e != 0:
            perm = [e] + [i for i in range(m) if i != e]
            pos = {x: k for k, x in enumerate(perm)}
            table = [[pos[table[a][b]] for b in perm] for a in perm]
        return cls(table)

    def to_table_text(self):
        lines = [str(self.order)] + [" ".join(map(str, row)) for row in self.table]
        return "\n".join(lines) + "\n"

    # -- structure -----------------------------------------------------------

    def check_axioms(self, full_limit=64, samples=4000, seed=0):
        m, t = self.order, self.table
        if t[0] != list(range(m)) or [row[0] for row in t] != list(range(m)):
            raise InputError("element 0 is not the identity")
        for row in t:
            if sorted(row) != list(range(m)):
                raise InputError("table rows must be permutations (Latin square)")
        for c in range(m):
            if sorted(t[r][c] for r in range(m)) != list(range(m)):
                raise InputError("table columns must be permutations (Latin square)")
        if m <= full_limit:
            triples = product(range(m), repeat=3)
        else:
            import random

            rng = random.Random(seed)
            triples = ((rng.randrange(m), rng.randrange(m), rng.randrange(m))
                       for _ in range(samples))
        for a, b, c in triples:
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise InputError("table is not associative")

    def mul(self, a, b):
        return self.table[a][b]

    def inverse(self, a):
        return self._inverse[a]

    def element_order(self, a):
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def order_profile(self):
        return tuple(sorted(Counter(self.element_order(a) for a in range(self.order)).items()))

    def center(self):
        t = self.table
        return [a for a in range(self.order) if all(t[a][b] == t[b][a] for b in range(self.order))]

    def is_abelian(self):
        return len(self.center()) == self.order

    def subgroup_generated(self, gens):
        seen = {0}
        queue = [0]
        for x in queue:
            for g in gens:
                y = self.table[x][g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    def derived_subgroup(self):
        t, inv_ = self.table, self._inverse
        comms = {t[t[inv_[a]][inv_[b]]][t[a][b]] for a in range(self.order) for b in range(self.order)}
        return self.subgroup_generated(sorted(comms))

    def invariants(self):
        return (self.order, self.order_profile(), len(self.center()),
                self.order // len(self.derived_subgroup()))

    def generators(self):
        """Greedy small generating set: repeatedly add an element of largest order."""
        by_order = sorted(range(1, self.order), key=lambda a: (-self.element_order(a), a))
        gens = []
        span = {0}
        for a in by_order:
            if a not in span:
                gens.append(a)
                span = self.subgroup_generated(gens)
                if len(span) == self.order:
                    break
        return gens

    def is_homomorphism(self, phi, other: "AbstractGroup") -> bool:
        t, u = self.table, other.table
        return all(phi[t[a][b]] == u[phi[a]][phi[b]]
                   for a in range(self.order) for b in range(self.order))

    def __repr__(self):
        return f"AbstractGroup(order={self.order})"


def _extend(A: AbstractGroup, B: AbstractGroup, gens, images):
    """Extend generator images to a map on <gens> by walking the Cayley graph.

    Returns the partial map (dict) or None when two paths disagree, which is
    exactly the failure of phi(x g) = phi(x) phi(g) on some edge.
    """
    phi = {0: 0}
    queue = [0]
    for x in queue:
        px = phi[x]
        for g, img in zip(gens, images):
            y = A.table[x][g]
            py = B.table[px][img]
            if y in phi:
                if phi[y] != py:
                    return None
            else:
                phi[y] = py
                queue.append(y)
    return phi


def is_isomorphic(A: AbstractGroup, B: AbstractGroup):
    """Return an isomorphism A -> B as a list ``phi`` or None.

    Invariants reject quickly; otherwise generator images are assigned by
    backtracking (only elements of matching order are tried) and each
    partial assignment is checked for consistency on the subgroup it spans.
    """
    if A.order != B.order:
        return None
    if A.invariants() != B.invariants():
        return None
    gens = A.generators()
    if not gens:
        return [0]
    orders_b = {}
    for b in range(B.order):
        orders_b.setdefault(B.element_order(b), []).append(b)
    candidates = [orders_b.get(A.element_order(g), []) for g in gens]

    def rec(k, images):
        if k == len(gens):
            phi = _extend(A, B, gens, images)
            if phi is None or len(phi) != A.order or len(set(phi.values())) != B.order:
                return None
            return [phi[a] for a in range(A.order)]
        for b in candidates[k]:
            imgs = images + [b]
            partial = _extend(A, B, gens[: k + 1], imgs)
            if partial is None or len(set(partial.values())) != len(partial):
                continue
            res = rec(k + 1, imgs)
            if res is not None:
                return res
        return None

    phi = rec(0, [])
    if phi is not None and not verify_isomorphism(A, B, phi):
        raise AssertionError("isomorphism witness failed verification")
    return phi


def verify_isomorphism(A: AbstractGroup, B: AbstractGroup, phi) -> bool:
    if len(phi) != A.order or sorted(phi) != list(range(B.order)):
        return False
    return A.is_homomorphism(phi, B)


class Quotient(AbstractGroup):
    """N/H with cosets labelled by their lexicographically least element."""

    def __init__(self, table, reps, labels):
        super().__init__(table, labels, check=False)
        self.reps = reps


def quotient(N: PermGroup, H: PermGroup) -> Quotient:
    if not N.contains_group(H):
        raise NormalityError("H is not contained in N")
    if not H.is_normal_in(N):
        raise NormalityError("H is not normal in N")
    m = N.order() // H.order()
    if m > MAX_ORDER:
        raise InputError(f"quotient order {m} exceeds {MAX_ORDER}")
    n = N.degree
    e = H.lex_min_coset_rep(identity(n))
    reps = [e]
    index = {e: 0}
    for x in reps:
        for g in N.gens:
            y = H.lex_min_coset_rep(mul(x, g))
            if y not in index:
                index[y] = len(reps)
                reps.append(y)
    if len(reps) != m:
        raise AssertionError("coset enumeration did not close at |N|/|H|")
    order_ = sorted(range(m), key=lambda i: reps[i])
    reps = [reps[i] for i in order_]
    index = {r: i for i, r in enumerate(reps)}
    table = [[index[H.lex_min_coset_rep(mul(a, b))] for b in reps] for a in reps]
    return Quotient(table, reps, [format_perm(r) for r in reps])
