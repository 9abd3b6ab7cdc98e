import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from hamcheck.graphs import (
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    from_edges,
    path,
    star,
)
from hamcheck.spectral import (
    Relation,
    compare_threshold,
    eigen_oracle,
    q_radius,
    q_upper_bound,
    rho,
)


def random_graph(n, seed, p=0.5):
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return from_edges(n, edges)


def test_known_spectral_radii():
    assert abs(rho(complete(5)).value - 4.0) < 1e-9
    assert abs(rho(cycle(7)).value - 2.0) < 1e-9
    assert abs(rho(star(10)).value - 3.0) < 1e-9  # sqrt(n-1)
    assert abs(rho(complete_bipartite(3, 4)).value - math.sqrt(12)) < 1e-9


def test_known_q_values():
    assert abs(q_radius(complete(6)).value - 10.0) < 1e-9  # 2n-2
    assert abs(q_radius(cycle(8)).value - 4.0) < 1e-9
    assert abs(q_radius(star(5)).value - 5.0) < 1e-9  # q(K_{1,n-1}) = n


def test_power_iteration_matches_dense_oracle():
    for seed in range(30):
        g = random_graph(9, seed)
        assert abs(rho(g).value - eigen_oracle(g, "adjacency")[-1]) < 1e-8
        assert abs(q_radius(g).value - eigen_oracle(g, "signless_laplacian")[-1]) < 1e-8


def test_residual_certificate():
    est = rho(random_graph(8, 7))
    assert est.residual <= 1e-10 * max(1.0, est.value)
    assert est.iterations >= 1


def test_rho_at_most_sqrt_m_bipartite():
    # for bipartite graphs, rho <= sqrt(m)
    from hamcheck.graphs import bipartite_from_edges

    rng = random.Random(0)
    for _ in range(30):
        p, q = rng.randint(1, 5), rng.randint(1, 5)
        edges = [(x, y) for x in range(p) for y in range(q) if rng.random() < 0.5]
        b = bipartite_from_edges(p, q, edges)
        if b.edge_count() == 0:
            continue
        assert rho(b).value <= math.sqrt(b.edge_count()) + 1e-8


def test_rho_sqrt_m_equality_iff_complete_bipartite():
    b = complete_bipartite(3, 5)
    assert abs(rho(b).value - math.sqrt(15)) < 1e-9
    g = disjoint_union(b.to_graph(), from_edges(2, []))  # plus isolated vertices
    assert abs(rho(g).value - math.sqrt(15)) < 1e-9
    assert rho(path(4)).value < math.sqrt(3) - 1e-6


def test_q_upper_bound_lemma():
    # q <= 2m/(n-1) + n - 2, equality for stars and complete graphs
    for seed in range(20):
        g = random_graph(7, seed)
        assert q_radius(g).value <= q_upper_bound(g) + 1e-8
    assert abs(q_radius(star(6)).value - q_upper_bound(star(6))) < 1e-9
    assert abs(q_radius(complete(6)).value - q_upper_bound(complete(6))) < 1e-9


def test_monotone_under_edge_addition():
    g = cycle(6)
    g2 = from_edges(6, list(g.edges()) + [(0, 3)])
    assert rho(g2).value >= rho(g).value - 1e-10
    assert q_radius(g2).value >= q_radius(g).value - 1e-10


def test_disjoint_union_takes_max():
    g, h = complete(4), cycle(5)
    u = disjoint_union(g, h)
    assert abs(rho(u).value - max(rho(g).value, rho(h).value)) < 1e-9


def test_empty_and_tiny_graphs():
    assert rho(from_edges(1, [])).value == 0.0
    assert rho(from_edges(3, [])).value == 0.0
    assert q_radius(from_edges(2, [(0, 1)])).value == pytest.approx(2.0, abs=1e-10)


def test_table1_spot_values():
    from hamcheck.families import nc_member, np_member, make_family

    assert q_radius(make_family(nc_member(0))).value == pytest.approx(13.1789, abs=5e-5)
    assert q_radius(make_family(np_member(2))).value == pytest.approx(7.4641, abs=5e-5)


def test_compare_threshold():
    assert compare_threshold(5.0, 5.0).relation is Relation.BOUNDARY
    assert compare_threshold(5.0 + 1e-9, 5.0).relation is Relation.BOUNDARY
    assert compare_threshold(5.1, 5.0).relation is Relation.ABOVE
    assert compare_threshold(4.9, 5.0).relation is Relation.BELOW
    assert compare_threshold(4.9, 5.0).margin == pytest.approx(-0.1)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 10), st.integers(0, 10 ** 6))
def test_bipartite_rho_matches_full_graph(n, seed):
    rng = random.Random(seed)
    p, q = rng.randint(1, 4), rng.randint(1, 4)
    from hamcheck.graphs import bipartite_from_edges

    edges = [(x, y) for x in range(p) for y in range(q) if rng.random() < 0.5]
    b = bipartite_from_edges(p, q, edges)
    assert abs(rho(b).value - rho(b.to_graph()).value) < 1e-9
