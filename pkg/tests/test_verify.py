import math

import pytest

from hamcheck.verify import (
    THEOREMS,
    SoundnessReport,
    enumerate_bipartite,
    enumerate_graphs,
    sizes_for,
    soundness,
    table1_report,
    theorem_ids,
    tightness_search,
)


def test_enumeration_counts():
    seen = []
    assert enumerate_graphs(3, 0, seen.append) == 8  # 2^3 labeled graphs
    assert len(seen) == 8
    assert len({g.adj for g in seen}) == 8
    assert enumerate_graphs(4, 0, lambda g: None) == 64
    assert enumerate_graphs(4, 1, lambda g: None) == 41  # no isolated vertices
    assert enumerate_graphs(4, 3, lambda g: None) == 1  # K4 only


def test_enumeration_bipartite_counts():
    assert enumerate_bipartite(2, 2, 0, lambda b: None) == 16
    assert enumerate_bipartite(2, 2, 2, lambda b: None) == 1  # K_{2,2}
    assert enumerate_bipartite(3, 2, 1, lambda b: None) == 25


def test_enumeration_caps():
    with pytest.raises(ValueError):
        enumerate_graphs(9, 0, lambda g: None)
    with pytest.raises(ValueError):
        enumerate_bipartite(6, 5, 0, lambda b: None)


def test_registry_complete():
    ids = theorem_ids()
    assert len(ids) == 19
    assert "lemma-3.4" in ids and "zhou-complement-traceable" in ids
    for spec in THEOREMS.values():
        assert spec.kind in ("general", "bip_balanced", "bip_unbalanced")


def test_sizes_respect_caps():
    assert sizes_for(THEOREMS["lemma-3.4"], 6) == [3, 4, 5, 6]
    assert sizes_for(THEOREMS["lemma-2.6"], 6) == [4]  # 5*5 > 16 cells
    assert sizes_for(THEOREMS["spectral-bipartite-traceable-unbalanced"], 6) == [3]


def test_unknown_theorem():
    with pytest.raises(KeyError):
        soundness("bogus")
    with pytest.raises(KeyError):
        tightness_search("bogus")


def test_soundness_small_sample():
    r = soundness("lemma-2.5", sizes=[2, 3])
    assert r.passed
    assert r.graphs_scanned == 16 + 512
    assert r.hypothesis_hits == r.guaranteed_confirmed + r.exceptions_matched + r.boundary_cases
    assert r.exceptions_by_family.get("knn1-plus-e(2)", 0) > 0
    d = r.to_dict()
    assert d["passed"] and d["violations"] == []


def test_soundness_chvatal_n5():
    r = soundness("chvatal", sizes=[5])
    assert r.passed and r.graphs_scanned == 1024
    assert r.guaranteed_confirmed > 0


def test_report_merge():
    a = SoundnessReport("x", [4], graphs_scanned=10, hypothesis_hits=2,
                        guaranteed_confirmed=2, exceptions_by_family={"f": 1})
    b = SoundnessReport("x", [5], graphs_scanned=20, violations=["bad"],
                        exceptions_by_family={"f": 2, "g": 1})
    a.merge(b)
    assert a.graphs_scanned == 30
    assert a.exceptions_by_family == {"f": 3, "g": 1}
    assert not a.passed
    assert sorted(a.sizes) == [4, 5]


def test_parallel_matches_serial():
    serial = soundness("tight-q-traceable", sizes=[5])
    parallel = soundness("tight-q-traceable", sizes=[5], jobs=2)
    assert serial.to_dict() == parallel.to_dict()


def test_table1_rows():
    rows = table1_report()
    assert len(rows) == 18
    names = [row[0] for row in rows]
    assert names[0] == "K4 v 5K1" and names[-1] == "K1,3"
    assert all(diff <= 5e-5 for _, _, _, diff in rows)
    with pytest.raises(ValueError):
        table1_report(0.0)


def test_tightness_vacuous_exception():
    # the balanced spectral Hamiltonian exception never meets its own bound
    out = tightness_search("spectral-bipartite-hamiltonian", max_n=4)
    excs = {e["family"]: e for e in out["exceptions"]}
    vac = excs["kpn2-plus-4e(4,4)"]
    assert vac["value"] < math.sqrt(12)
    assert not vac["hypothesis_satisfied"]


def test_tightness_real_exceptions_satisfy_bound():
    out = tightness_search("tight-q-hamiltonian", max_n=6)
    excs = {e["family"]: e for e in out["exceptions"]}
    assert excs["NC[8] K2 v 3K1"]["hypothesis_satisfied"]
    assert excs["NC[5] K2 v (K2 + 2K1)"]["hypothesis_satisfied"]
    miss = out["best_near_miss"]
    assert miss is None or miss["deficit"] > 0


def test_tightness_requires_numeric_hypothesis():
    with pytest.raises(ValueError):
        tightness_search("chvatal")
