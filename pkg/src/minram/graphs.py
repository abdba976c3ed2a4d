"""Simple graphs, Frucht's construction and graph automorphism groups.

``frucht_graph`` turns the coloured Cayley digraph of a group into a simple
graph: each directed edge ``u -> v`` of colour ``k`` (generator number k,
starting at 1) becomes the path ``u - a - b - v`` with a pendant path of
``2k+1`` new vertices hanging off ``a`` and one of ``2k+2`` off ``b``. For an
involution the two opposite edges collapse into one undirected gadget with
pendant paths of ``2k+1`` vertices at both ends. Vertex ``i < |G|`` is
the group element ``i``; gadget vertices follow in construction order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, ParseError, ResourceError
from .permgroup.abstract import AbstractGroup
from .permgroup.chain import PermGroup

DEFAULT_BUDGET = 64


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: tuple

    def __init__(self, n, edges):
        norm = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise InputError("loops are not allowed")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    def adjacency(self):
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def is_automorphism(self, perm) -> bool:
        es = set(self.edges)
        for u, v in self.edges:
            a, b = perm[u], perm[v]
            if (min(a, b), max(a, b)) not in es:
                return False
        return True

    def to_text(self) -> str:
        lines = [f"{self.n} {len(self.edges)}"] + [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SimpleGraph":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ParseError("empty graph file", line=1)
        try:
            n, m = map(int, lines[0].split())
        except ValueError:
            raise ParseError("first line must be 'n m'", line=1) from None
        if len(lines) - 1 != m:
            raise ParseError(f"expected {m} edges, found {len(lines) - 1}", line=len(lines))
        edges = []
        for i, ln in enumerate(lines[1:], start=2):
            try:
                u, v = map(int, ln.split())
            except ValueError:
                raise ParseError("edge line must be 'u v'", line=i) from None
            edges.append((u, v))
        return cls(n, edges)


def complete_graph(n):
    return SimpleGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(n):
    return SimpleGraph(n, [(i, i + 1) for i in range(n - 1)])


def petersen_graph():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return SimpleGraph(10, outer + spokes + inner)


# Aut = C2: the path on five vertices.
ORDER_TWO_GRAPH = path_graph(5)
# A triangle 0-1-2 with pendant edges 0-3, 1-4 and 3-5: six vertices, trivial Aut.
ASYMMETRIC_GRAPH = SimpleGraph(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (3, 5)])
# Nine vertices, Aut = C3: a triangle, a twisted 6-ring around it and three pendants.
CYCLIC_THREE_GRAPH = SimpleGraph(9, [
    (0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5), (0, 4), (1, 5), (2, 3),
    (0, 6), (1, 7), (2, 8), (3, 6), (4, 7), (5, 8)])


def cycle_graph(n):
    return SimpleGraph(n, [(i, (i + 1) % n) for i in range(n)])


def frucht_graph(G: AbstractGroup, generators) -> SimpleGraph:
    """Graph whose automorphism group is isomorphic to ``G``."""
    m = G.order
    gens = list(dict.fromkeys(int(g) for g in generators))
    if any(not 0 <= g < m for g in gens):
        raise InputError("generator index out of range")
    if len(G.subgroup_generated(gens)) != m:
        raise InputError("the given elements do not generate the group")
    if m == 1:
        return SimpleGraph(1, [])
    if m == 2:
        return ORDER_TWO_GRAPH
    gens = [g for g in gens if g != 0]
    edges = []
    count = m

    def new_vertex():
        nonlocal count
        count += 1
        return count - 1

    def pendant(at, length):
        prev = at
        for _ in range(length):
            w = new_vertex()
            edges.append((prev, w))
            prev = w

    for k, s in enumerate(gens, start=1):
        involution = G.mul(s, s) == 0
        for g in range(m):
            h = G.mul(g, s)
            if involution and h < g:
                continue
            a, b = new_vertex(), new_vertex()
            edges += [(g, a), (a, b), (b, h)]
            pendant(a, 2 * k + 1)
            pendant(b, 2 * k + 1 if involution else 2 * k + 2)
    return SimpleGraph(count, edges)


# -- automorphisms ---------------------------------------------------------


def _refine(adj, cells):
    """Equitable refinement; sub-cells are ordered by neighbour-count signature."""
    while True:
        where = {}
        for i, c in enumerate(cells):
            for v in c:
                where[v] = i
        out = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sig = {}
            for v in c:
                counts = {}
                for w in adj[v]:
                    j = where[w]
                    counts[j] = counts.get(j, 0) + 1
                sig.setdefault(tuple(sorted(counts.items())), []).append(v)
            for key in sorted(sig):
                out.append(sig[key])
        if len(out) == len(cells):
            return out
        cells = out


def _shape(cells):
    return tuple(len(c) for c in cells)


def _individualize(adj, cells, v):
    out = []
    for c in cells:
        if v in c:
            out.append([v])
            rest = [w for w in c if w != v]
            if rest:
                out.append(rest)
        else:
            out.append(c)
    return _refine(adj, out)


def _target_cell(cells):
    best = None
    for i, c in enumerate(cells):
        if len(c) > 1 and (best is None or len(c) < len(cells[best])):
            best = i
    return best


def graph_automorphisms(graph: SimpleGraph, budget: int = DEFAULT_BUDGET) -> PermGroup:
    """Aut(graph) by individualization-refinement backtracking.

    The first path fixes a base ``v_1, v_2, ...``. Levels are searched from
    the bottom up; at level i every candidate image of ``v_i`` outside the
    orbit already generated is tried, and a candidate succeeds if some
    completion below it yields a leaf permutation preserving the edges.
    """
    n = graph.n
    if n > budget:
        raise ResourceError(f"graph has {n} vertices, budget is {budget}")
    if n <= 1:
        return PermGroup([], 1)
    adj = [frozenset(s) for s in graph.adjacency()]
    root = _refine(adj, _degree_cells(adj, n))
    path = [root]
    base = []
    while True:
        t = _target_cell(path[-1])
        if t is None:
            break
        v = min(path[-1][t])
        base.append((t, v))
        path.append(_individualize(adj, path[-1], v))
    leaf0 = [c[0] for c in path[-1]]

    def complete(level, cells):
        if level == len(base):
            img = [0] * n
            for src, c in zip(leaf0, cells):
                img[src] = c[0]
            return tuple(img) if graph.is_automorphism(img) else None
        t, _ = base[level]
        for w in sorted(cells[t]):
            nxt = _individualize(adj, cells, w)
            if _shape(nxt) != _shape(path[level + 1]):
                continue
            hit = complete(level + 1, nxt)
            if hit is not None:
                return hit
        return None

    found = []
    for i in range(len(base) - 1, -1, -1):
        t, v = base[i]
        fixed = [b for _, b in base[:i]]
        K = PermGroup(found, n).stabilizer(fixed) if found else None
        covered = set(K.orbit_of(v)) if K is not None else {v}
        for w in sorted(path[i][t]):
            if w in covered:
                continue
            nxt = _individualize(adj, path[i], w)
            if _shape(nxt) != _shape(path[i + 1]):
                continue
            g = complete(i + 1, nxt)
            if g is not None:
                found.append(g)
                K = PermGroup(found, n).stabilizer(fixed)
                covered = set(K.orbit_of(v))
    return PermGroup(found, n)


def _degree_cells(adj, n):
    by_deg = {}
    for v in range(n):
        by_deg.setdefault(len(adj[v]), []).append(v)
    return [by_deg[d] for d in sorted(by_deg)]


def automorphism_group_abstract(graph: SimpleGraph, budget: int = DEFAULT_BUDGET) -> AbstractGroup:
    return AbstractGroup.from_perm_group(graph_automorphisms(graph, budget))
