"""Recipe for a field with prescribed automorphism group from a BMS triple.

A graph Delta on n vertices with Aut(Delta) = G is paired with a BMS
triple of degree n whose integral model has a single double root modulo r
(so inertia at r is generated by a transposition). The field
K = Q(alpha_1, ..., alpha_n, beta_ij) with beta_ij^r = (alpha_i - alpha_j)^2
for the edges {i, j} is declared, not verified: only the graph and the
triple carry certificates.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..galois import transposition_inertia_check
from ..graphs import (
    ASYMMETRIC_GRAPH,
    CYCLIC_THREE_GRAPH,
    SimpleGraph,
    automorphism_group_abstract,
    complete_graph,
    cycle_graph,
    frucht_graph,
    graph_automorphisms,
)
from ..permgroup import AbstractGroup, GroupSpec, is_isomorphic
from .bms import BmsTriple, bms_search

GRAPH_BUDGET = 10_000

# Small graphs tried before the Frucht construction, fewest vertices first.
SMALL_GRAPHS = (
    ("K2", complete_graph(2)),
    ("K3", complete_graph(3)),
    ("K2+2K1", SimpleGraph(4, [(0, 1)])),
    ("C4", cycle_graph(4)),
    ("K4", complete_graph(4)),
    ("asymmetric-6", ASYMMETRIC_GRAPH),
    ("C3-9", CYCLIC_THREE_GRAPH),
)


def recipe_graph(G: GroupSpec | AbstractGroup):
    """(label, graph) with Aut(graph) isomorphic to G and at least 2 vertices."""
    A = G if isinstance(G, AbstractGroup) else G.abstract()
    for label, graph in SMALL_GRAPHS:
        if graph_automorphisms(graph).order() != A.order:
            continue
        if is_isomorphic(automorphism_group_abstract(graph), A) is not None:
            return label, graph
    gens = G.default_generators() if isinstance(G, GroupSpec) else A.generators()
    return "frucht", frucht_graph(A, gens)


def _inertia_ok(triple: BmsTriple) -> bool:
    return transposition_inertia_check(triple.model, triple.r)


@dataclass
class FruchtRecipe:
    group: str
    group_abstract: AbstractGroup
    graph_source: str
    graph: SimpleGraph
    triple: BmsTriple

    @property
    def n(self):
        return self.graph.n

    def declaration(self) -> str:
        return (f"K = Q(alpha_1, ..., alpha_{self.n}, beta_ij for {{i, j}} in E), alpha_i the roots "
                f"of the trinomial, beta_ij^{self.triple.r} = (alpha_i - alpha_j)^2; "
                "Aut(K/Q) = G is declared, not verified")

    def verify(self) -> bool:
        if self.graph.n < 2 or self.triple.n != self.graph.n:
            return False
        A = automorphism_group_abstract(self.graph, GRAPH_BUDGET)
        if A.order != self.group_abstract.order or is_isomorphic(A, self.group_abstract) is None:
            return False
        return self.triple.verify() and _inertia_ok(self.triple)

    def to_json(self):
        return {
            "group": self.group,
            "graph_source": self.graph_source,
            "n": self.n,
            "graph": self.graph.to_text(),
            "triple": self.triple.to_json(),
            "radical_exponent": str(self.triple.r),
            "inertia_transposition_at_r": True,
            "declaration": self.declaration(),
            "field_automorphisms_verified": False,
        }


def frucht_field_recipe(G: GroupSpec, p_max: int = 1000, q_max: int = 1000, seed: int = 0,
                        prime_budget: int = 10_000, threads: int = 1) -> FruchtRecipe:
    label, graph = recipe_graph(G)
    triple = bms_search(graph.n, p_max, q_max, seed=seed, prime_budget=prime_budget,
                        threads=threads, accept=_inertia_ok, accept_name="inertia-at-r")
    return FruchtRecipe(G.describe(), G.abstract(), label, graph, triple)
