import math
import random

import pytest

from hamcheck.conditions import (
    HAMILTONIAN,
    TRACEABLE,
    Status,
    bipartite_degree_hamiltonian,
    chvatal_hamiltonian,
    ec_ep_membership,
    edge_bound_bipartite,
    edge_bound_general,
    moon_moser_hamiltonian,
    nc_np_membership,
    q_spectral_general,
    quasi_complement_hamiltonian,
    recognize_family,
    spectral_bipartite,
    zhou_complement,
)
from hamcheck.families import (
    FamilyId,
    FamilyTag,
    NC_GRAPHS,
    NP_GRAPHS,
    kn1_plus_edge,
    knn1_plus_2e,
    knn1_plus_edge,
    kpn2_plus_4e,
    make_family,
    nc_member,
    np_member,
)
from hamcheck.graphs import (
    bipartite_from_edges,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty_graph,
    from_edges,
    join,
    relabel,
    star,
)


def cert(v):
    return dict(v.certificate)


# ---------------------------------------------------------------- chvatal

def test_chvatal_examples():
    assert chvatal_hamiltonian(complete(5)).status is Status.GUARANTEED
    k4e = kn1_plus_edge(5)  # degrees (1,3,3,3,4) up to order
    v = chvatal_hamiltonian(k4e)
    assert v.status is Status.INCONCLUSIVE and cert(v)["k"] == 1
    v = chvatal_hamiltonian(NC_GRAPHS[8])  # K2 v 3K1, degrees (2,2,2,4,4)
    assert v.status is Status.INCONCLUSIVE and cert(v)["k"] == 2
    v = chvatal_hamiltonian(cycle(5))
    assert v.status is Status.INCONCLUSIVE and cert(v)["k"] == 2
    assert chvatal_hamiltonian(complete(2)).status is Status.NOT_APPLICABLE


# ------------------------------------------------------- bipartite degree

def test_bipartite_degree_examples():
    assert bipartite_degree_hamiltonian(complete_bipartite(4, 4)).status is Status.GUARANTEED
    v = bipartite_degree_hamiltonian(kpn2_plus_4e(4, 4))
    assert v.status is Status.INCONCLUSIVE and cert(v)["k"] == 2
    c8 = bipartite_from_edges(4, 4, [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (3, 0)])
    v = bipartite_degree_hamiltonian(c8)
    assert v.status is Status.INCONCLUSIVE and cert(v)["k"] == 2
    assert bipartite_degree_hamiltonian(complete_bipartite(3, 2)).status is Status.NOT_APPLICABLE


# ------------------------------------------------------------- moon-moser

def test_moon_moser_examples():
    assert moon_moser_hamiltonian(complete_bipartite(3, 3)).status is Status.GUARANTEED
    # C6 as (3,3): degree sums of nonadjacent pairs are 4 = n+1, so the
    # condition holds (and C6 is indeed Hamiltonian)
    c6 = bipartite_from_edges(3, 3, [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 0)])
    assert moon_moser_hamiltonian(c6).status is Status.GUARANTEED
    p6 = bipartite_from_edges(3, 3, [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2)])
    v = moon_moser_hamiltonian(p6)
    assert v.status is Status.INCONCLUSIVE and cert(v)["degree_sum"] < 4
    minus_one = bipartite_from_edges(
        3, 3, [(x, y) for x in range(3) for y in range(3) if (x, y) != (0, 0)]
    )
    assert moon_moser_hamiltonian(minus_one).status is Status.GUARANTEED


# ------------------------------------------------------------ edge bounds

def test_edge_bound_bipartite_examples():
    v = edge_bound_bipartite(knn1_plus_edge(4), "hamiltonian_min_deg1")
    assert v.status is Status.EXCEPTION
    assert v.family == FamilyId(FamilyTag.KNN1_PLUS_EDGE, (4,))
    # K_{4,4} minus a perfect matching: m=12=n^2-2n+4 but not the exception
    minus_pm = bipartite_from_edges(
        4, 4, [(x, y) for x in range(4) for y in range(4) if x != y]
    )
    assert edge_bound_bipartite(minus_pm, "hamiltonian_min_deg2").status is Status.GUARANTEED
    # K_{3,3} minus two independent edges: m=7 >= 6
    minus_two = bipartite_from_edges(
        3, 3, [(x, y) for x in range(3) for y in range(3) if (x, y) not in ((0, 0), (1, 1))]
    )
    assert edge_bound_bipartite(minus_two, "traceable").status is Status.GUARANTEED
    assert edge_bound_bipartite(kpn2_plus_4e(5, 5), "hamiltonian_min_deg2").status is Status.EXCEPTION


def test_edge_bound_general_examples():
    v = edge_bound_general(NC_GRAPHS[5], HAMILTONIAN)  # K2 v (K2+2K1), m=10 > 9
    assert v.status is Status.EXCEPTION and v.family == nc_member(5)
    # K2 v (K2 + K_{1,2}) on 7 vertices: m=14 > 13.5, Hamiltonian
    inner = disjoint_union(complete(2), star(3))
    g = join(complete(2), inner)
    assert g.n == 7 and g.edge_count() == 14
    assert edge_bound_general(g, HAMILTONIAN).status is Status.GUARANTEED
    v = edge_bound_general(NP_GRAPHS[6], TRACEABLE)  # 2K2, m=2 > 1.5
    assert v.status is Status.EXCEPTION and v.family == np_member(6)
    assert edge_bound_general(cycle(6), HAMILTONIAN).status is Status.INCONCLUSIVE
    assert edge_bound_general(star(4), HAMILTONIAN).status is Status.NOT_APPLICABLE


def test_exception_requires_isomorphism_not_just_counts():
    # same n and m as K2 v 3K1 but a different (Hamiltonian) graph
    g = from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 3)])
    assert g.edge_count() == NC_GRAPHS[8].edge_count()
    assert g.degree_sequence() != NC_GRAPHS[8].degree_sequence()
    assert edge_bound_general(g, HAMILTONIAN).status is Status.GUARANTEED


# ------------------------------------------------------ spectral bipartite

def test_spectral_bipartite_examples():
    assert spectral_bipartite(complete_bipartite(4, 4), "hamiltonian_balanced").status is Status.GUARANTEED
    # the stated exception never satisfies the hypothesis: rho < sqrt(12)
    v = spectral_bipartite(kpn2_plus_4e(4, 4), "hamiltonian_balanced")
    assert v.status is Status.INCONCLUSIVE
    v = spectral_bipartite(knn1_plus_2e(4), "traceable_unbalanced")
    assert v.status in (Status.EXCEPTION, Status.INCONCLUSIVE)
    if v.status is Status.EXCEPTION:
        assert v.family == FamilyId(FamilyTag.KNN1_PLUS_2E, (4,))
    assert spectral_bipartite(complete_bipartite(5, 4), "traceable_unbalanced").status is Status.GUARANTEED
    assert spectral_bipartite(complete_bipartite(3, 3), "hamiltonian_balanced").status is Status.NOT_APPLICABLE


def test_quasi_complement_examples():
    for n in (3, 4):
        v = quasi_complement_hamiltonian(complete_bipartite(n, n))
        assert v.status is Status.GUARANTEED
    # n=2 threshold is 0 and rho(empty quasi-complement)=0: exactly at the
    # line, so the global boundary rule applies
    assert quasi_complement_hamiltonian(complete_bipartite(2, 2)).status is Status.BOUNDARY
    minus_one = bipartite_from_edges(
        4, 4, [(x, y) for x in range(4) for y in range(4) if (x, y) != (0, 0)]
    )
    assert quasi_complement_hamiltonian(minus_one).status is Status.BOUNDARY
    c8 = bipartite_from_edges(4, 4, [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (3, 0)])
    assert quasi_complement_hamiltonian(c8).status is Status.INCONCLUSIVE
    assert quasi_complement_hamiltonian(complete_bipartite(3, 2)).status is Status.NOT_APPLICABLE


# ----------------------------------------------------------- q-conditions

def test_q_spectral_examples():
    v = q_spectral_general(NC_GRAPHS[2], "hamiltonian_tight")  # K3 v 4K1
    assert v.status is Status.EXCEPTION and v.family == nc_member(2)
    v = q_spectral_general(star(5), "traceable_tight")  # q = 5 = 2n-5 exactly
    assert v.status is Status.EXCEPTION
    assert v.family == FamilyId(FamilyTag.STAR, (5,))
    assert abs(cert(v)["margin"]) <= 1e-8
    assert q_spectral_general(complete(6), "yu_fan_hamiltonian").status is Status.GUARANTEED
    v = q_spectral_general(kn1_plus_edge(6), "yu_fan_hamiltonian")
    assert v.status is Status.EXCEPTION
    # published statement misses this graph; the checker must not claim Guaranteed
    v = q_spectral_general(NC_GRAPHS[5], "hamiltonian_tight")  # K2 v (K2+2K1), n=6
    assert v.status is Status.EXCEPTION and v.family == nc_member(5)
    v = q_spectral_general(NP_GRAPHS[2], "yu_connected_traceable")  # K2 v 4K1, n=6
    assert v.status is Status.EXCEPTION
    v = q_spectral_general(star(4), "yu_connected_traceable")  # q = 4 = threshold
    assert v.status is Status.EXCEPTION
    assert q_spectral_general(disjoint_union(cycle(3), cycle(3)), "yu_connected_traceable").status is Status.NOT_APPLICABLE


def test_strict_threshold_boundary_is_unresolved():
    # q(C4) = 4 = 2n-4 exactly; the Yu-Fan Hamiltonian bound is strict
    v = q_spectral_general(cycle(4), "yu_fan_hamiltonian")
    assert v.status is Status.BOUNDARY
    # the traceable counterpart is non-strict, and C4 matches no exception
    v = q_spectral_general(cycle(4), "yu_fan_traceable")
    assert v.status is Status.GUARANTEED or v.status is Status.BOUNDARY


# ------------------------------------------------------------------- zhou

def test_zhou_examples():
    assert zhou_complement(complete(5), HAMILTONIAN).status is Status.GUARANTEED
    v = zhou_complement(join(complete(1), disjoint_union(complete(2), complete(2))), HAMILTONIAN)
    assert v.status is Status.EXCEPTION  # EC type (a)
    # q(complement C5) = q(C5) = 4 = n-1 exactly: reported Boundary, not Guaranteed
    assert zhou_complement(cycle(5), HAMILTONIAN).status is Status.BOUNDARY
    assert zhou_complement(complete(2), HAMILTONIAN).status is Status.NOT_APPLICABLE
    v = zhou_complement(empty_graph(2), TRACEABLE)
    assert v.status is Status.EXCEPTION  # 2K1 is 0-regular of degree n/2-1


def test_ec_ep_membership():
    assert ec_ep_membership(join(complete(1), disjoint_union(complete(2), complete(2))), "EC")
    assert ec_ep_membership(cycle(6), "EP")  # 2-regular of degree n/2-1
    assert ec_ep_membership(disjoint_union(complete(3), complete(2)), "EP")  # two cliques
    assert ec_ep_membership(cycle(5), "EC") is None  # connected complement, no join
    # K5 is not in EC: K4 is 3-regular, not (5-1)/2 - 1 = 1-regular, and
    # K1 v K4 has one complete component, not two
    assert ec_ep_membership(complete(5), "EC") is None
    assert ec_ep_membership(cycle(7), "EP") is None


def test_nc_np_membership():
    assert nc_np_membership(complete_bipartite(3, 2).to_graph()) == nc_member(7)
    assert nc_np_membership(complete_bipartite(4, 2).to_graph()) == np_member(3)
    assert nc_np_membership(cycle(5)) is None


def test_recognize_family_label_invariance():
    rng = random.Random(3)
    for fid in (nc_member(4), np_member(5), FamilyId(FamilyTag.KN1_PLUS_EDGE, (5,))):
        base = make_family(fid)
        g = base.to_graph() if hasattr(base, "to_graph") else base
        for _ in range(10):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert recognize_family(relabel(g, perm), fid)
    # degree multiset mismatch rejects quickly
    c8 = bipartite_from_edges(4, 4, [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (3, 0)])
    assert not recognize_family(c8, FamilyId(FamilyTag.KPN2_PLUS_4E, (4, 4)))
    assert recognize_family(kpn2_plus_4e(4, 4), FamilyId(FamilyTag.KPN2_PLUS_4E, (4, 4)))


def test_monotone_guaranteed_under_edge_addition():
    # edge_bound_general(Hamiltonian): adding an edge never demotes Guaranteed
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(5, 7)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.8]
        g = from_edges(n, edges)
        if g.min_degree() < 2:
            continue
        if edge_bound_general(g, HAMILTONIAN).status is not Status.GUARANTEED:
            continue
        non_edges = [(i, j) for i in range(n) for j in range(i + 1, n) if not g.has_edge(i, j)]
        if not non_edges:
            continue
        g2 = from_edges(n, edges + [non_edges[0]])
        assert edge_bound_general(g2, HAMILTONIAN).status is not Status.INCONCLUSIVE


def test_verdict_invariants():
    # Exception implies family set and isomorphic to the input
    samples = [
        (edge_bound_general(NC_GRAPHS[8], HAMILTONIAN), NC_GRAPHS[8]),
        (q_spectral_general(star(5), "traceable_tight"), star(5)),
    ]
    for v, g in samples:
        assert v.status is Status.EXCEPTION
        assert v.family is not None
        assert recognize_family(g, v.family)
