"""Brute-force automorphism enumeration, independent of the refinement search.

Vertices are assigned in depth-first preorder, so every vertex after the
first in its component has an already-mapped neighbour; its image must be
a neighbour of that neighbour's image. Nothing else is pruned.
"""


def _dfs_order(n, nbrs):
    order, parent, seen = [], {}, [False] * n
    for root in sorted(range(n), key=lambda v: -len(nbrs[v])):
        if seen[root]:
            continue
        stack = [(root, None)]
        while stack:
            v, par = stack.pop()
            if seen[v]:
                continue
            seen[v] = True
            parent[v] = par
            order.append(v)
            stack.extend((w, v) for w in sorted(nbrs[v], reverse=True) if not seen[w])
    return order, parent


def brute_force_automorphisms(graph):
    n = graph.n
    nbrs = [set() for _ in range(n)]
    for u, v in graph.edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    order, parent = _dfs_order(n, nbrs)
    img = [-1] * n
    used = [False] * n
    out = []

    def extend(k):
        if k == n:
            out.append(tuple(img))
            return
        v = order[k]
        par = parent[v]
        candidates = nbrs[img[par]] if par is not None else range(n)
        for w in candidates:
            if used[w] or len(nbrs[w]) != len(nbrs[v]):
                continue
            if all((img[u] in nbrs[w]) == (u in nbrs[v]) for u in order[:k]):
                img[v] = w
                used[w] = True
                extend(k + 1)
                used[w] = False
        img[v] = -1

    extend(0)
    return sorted(out)
