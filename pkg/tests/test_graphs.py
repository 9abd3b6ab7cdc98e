import pytest
from hypothesis import given, strategies as st

from hamcheck.graphs import (
    BipartiteGraph,
    Graph,
    bipartite_from_graph,
    complement,
    complete,
    complete_bipartite,
    connected_components,
    cycle,
    disjoint_union,
    empty_graph,
    from_edges,
    induced_subgraph,
    is_complete_bipartite_plus_isolated,
    is_connected,
    join,
    path,
    quasi_complement,
    relabel,
    star,
    two_coloring,
)


def random_graph(n, seed):
    import random

    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
    return from_edges(n, edges)


def test_from_edges_basics():
    g = from_edges(4, [(0, 1), (1, 2), (1, 2)])  # duplicate collapses
    assert g.edge_count() == 2
    assert g.has_edge(0, 1) and g.has_edge(2, 1)
    assert not g.has_edge(0, 3)
    assert g.degrees() == [1, 2, 1, 0]
    with pytest.raises(ValueError):
        from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        from_edges(3, [(0, 3)])


def test_standard_constructions():
    assert complete(5).edge_count() == 10
    assert cycle(6).degrees() == [2] * 6
    assert path(4).degree_sequence() == (1, 1, 2, 2)
    s = star(5)
    assert s.degree(4) == 4 and s.degrees()[:4] == [1] * 4
    assert empty_graph(3).edge_count() == 0
    b = complete_bipartite(3, 2)
    assert b.edge_count() == 6
    assert b.to_graph().degree_sequence() == (2, 2, 2, 3, 3)


def test_complement_involution():
    g = random_graph(7, 1)
    assert complement(complement(g)) == g
    assert g.edge_count() + complement(g).edge_count() == 21


def test_join_and_union_counts():
    g, h = cycle(4), complete(3)
    u = disjoint_union(g, h)
    assert u.n == 7 and u.edge_count() == 4 + 3
    j = join(g, h)
    assert j.edge_count() == 4 + 3 + 12
    assert all(j.has_edge(a, 4 + b) for a in range(4) for b in range(3))


def test_relabel_preserves_structure():
    g = random_graph(6, 2)
    perm = [3, 1, 4, 0, 5, 2]
    h = relabel(g, perm)
    for u in range(6):
        for v in range(6):
            if u != v:
                assert g.has_edge(u, v) == h.has_edge(perm[u], perm[v])


def test_induced_subgraph():
    g = cycle(5)
    h = induced_subgraph(g, [0, 1, 2])
    assert h.n == 3 and h.edge_count() == 2


def test_components_and_connectivity():
    g = disjoint_union(cycle(3), path(2))
    comps = connected_components(g)
    assert len(comps) == 2
    assert not is_connected(g)
    assert is_connected(cycle(3))
    assert not is_connected(empty_graph(2))
    assert is_connected(empty_graph(1))


def test_two_coloring():
    assert two_coloring(cycle(4)) is not None
    assert two_coloring(cycle(5)) is None
    left = two_coloring(complete_bipartite(3, 4).to_graph())
    assert left is not None
    assert bin(left).count("1") in (3, 4)


def test_bipartite_round_trip():
    b = complete_bipartite(3, 2)
    g = b.to_graph()
    left = (1 << 3) - 1  # side X sits at indices 0..2
    b2 = bipartite_from_graph(g, left)
    assert (b2.p, b2.q) == (3, 2)
    assert b2.rows == b.rows


def test_quasi_complement():
    b = complete_bipartite(3, 3)
    star_b = quasi_complement(b)
    assert star_b.edge_count() == 0
    assert quasi_complement(star_b).rows == b.rows


def test_is_complete_bipartite_plus_isolated():
    g = complete_bipartite(2, 3).to_graph()
    assert is_complete_bipartite_plus_isolated(g)
    assert is_complete_bipartite_plus_isolated(disjoint_union(g, empty_graph(2)))
    assert not is_complete_bipartite_plus_isolated(cycle(5))
    assert not is_complete_bipartite_plus_isolated(disjoint_union(g, path(2)))


@given(st.integers(2, 8), st.integers(0, 10 ** 6))
def test_degree_sum_is_twice_edges(n, seed):
    g = random_graph(n, seed)
    assert sum(g.degrees()) == 2 * g.edge_count()
