import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from graph_oracle import brute_force_automorphisms
from minram.errors import InputError, ParseError, ResourceError
from minram.graphs import (
    ASYMMETRIC_GRAPH,
    CYCLIC_THREE_GRAPH,
    ORDER_TWO_GRAPH,
    SimpleGraph,
    complete_graph,
    cycle_graph,
    frucht_graph,
    graph_automorphisms,
    path_graph,
    petersen_graph,
)
from minram.permgroup import AbstractGroup, GroupSpec, catalog_names, is_isomorphic


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SimpleGraph(n, [e for e, keep in zip(pairs, mask) if keep])


@pytest.mark.parametrize("graph,order", [
    (complete_graph(3), 6),
    (complete_graph(5), 120),
    (path_graph(3), 2),
    (cycle_graph(6), 12),
    (petersen_graph(), 120),
    (ASYMMETRIC_GRAPH, 1),
    (ORDER_TWO_GRAPH, 2),
    (CYCLIC_THREE_GRAPH, 3),
    (SimpleGraph(4, []), 24),
])
def test_automorphism_group_orders(graph, order):
    assert graph_automorphisms(graph).order() == order


@given(graphs())
def test_automorphisms_match_brute_force(graph):
    G = graph_automorphisms(graph)
    brute = set(brute_force_automorphisms(graph))
    assert G.order() == len(brute)
    assert set(G.elements()) == brute


@given(graphs())
def test_generators_preserve_edges_and_orbits_divide(graph):
    G = graph_automorphisms(graph)
    assert all(graph.is_automorphism(g) for g in G.gens)
    assert all(G.order() % len(orbit) == 0 for orbit in G.orbits())


@pytest.mark.parametrize("name", catalog_names(max_order=12))
def test_frucht_graph_has_prescribed_group(name):
    spec = GroupSpec.named(name)
    A = spec.abstract()
    graph = frucht_graph(A, spec.default_generators())
    Aut = graph_automorphisms(graph, budget=1000)
    assert is_isomorphic(AbstractGroup.from_perm_group(Aut), A) is not None
    assert all(A.order % len(orbit) == 0 for orbit in Aut.orbits())


def test_frucht_small_orders_and_oracle():
    C3 = GroupSpec.named("C3")
    graph = frucht_graph(C3.abstract(), C3.default_generators())
    assert len(brute_force_automorphisms(graph)) == 3
    C2 = GroupSpec.named("C2")
    assert frucht_graph(C2.abstract(), C2.default_generators()) == ORDER_TWO_GRAPH


def test_frucht_rejects_non_generating_set():
    A = GroupSpec.named("C4").abstract()
    square = A.mul(1, 1) if A.element_order(1) == 4 else None
    with pytest.raises(InputError):
        frucht_graph(A, [square if square is not None else 0])


def test_text_roundtrip():
    g = petersen_graph()
    assert SimpleGraph.from_text(g.to_text()) == g


@pytest.mark.parametrize("text,line", [
    ("", 1),
    ("3\n", 1),
    ("3 2\n0 1\n", 2),
    ("3 1\n0 x\n", 2),
])
def test_from_text_errors(text, line):
    with pytest.raises(ParseError) as exc:
        SimpleGraph.from_text(text)
    assert exc.value.line == line


def test_invalid_edges_and_budget():
    with pytest.raises(InputError):
        SimpleGraph(3, [(0, 3)])
    with pytest.raises(InputError):
        SimpleGraph(3, [(1, 1)])
    with pytest.raises(ResourceError):
        graph_automorphisms(cycle_graph(10), budget=5)


def test_random_regular_like_graphs_against_oracle():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(6, 10)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4]
        g = SimpleGraph(n, edges)
        assert graph_automorphisms(g).order() == len(brute_force_automorphisms(g))
