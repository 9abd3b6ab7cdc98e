"""Exhaustive labeled enumeration and machine-checked soundness reports.

Every labeled graph in range is scanned; cheap necessary conditions
(edge count, degrees, a batched dense-eigenvalue screen with a safety
guard well above the comparison tolerance) cut the candidate set before
the full checker and the Hamiltonicity oracle run. Labeled enumeration
over-counts isomorphic copies, which is harmless for soundness claims.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Optional

import numpy as np

from . import conditions as cond
from .conditions import HAMILTONIAN, TRACEABLE, Status, Verdict
from .families import (
    FamilyId,
    FamilyTag,
    NC_NAMES,
    NP_NAMES,
    make_family,
    nc_member,
    np_member,
)
from .graph6 import write_graph6
from .graphs import BipartiteGraph, Graph
from .oracle import is_hamiltonian, is_traceable
from .spectral import eigen_oracle, q_radius

SCREEN_GUARD = 1e-6
CHUNK = 1 << 16
MAX_ENUM_N = 8
MAX_BIP_CELLS = 25
DEFAULT_MAX_N = 6
DEFAULT_BIP_CELLS = 16


# ------------------------------------------------------------ enumeration

def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def _graph_from_mask(n: int, pairs: list[tuple[int, int]], mask: int) -> Graph:
    adj = [0] * n
    k = 0
    while mask:
        if mask & 1:
            i, j = pairs[k]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        mask >>= 1
        k += 1
    return Graph(n, tuple(adj))


def _bip_from_mask(p: int, q: int, mask: int) -> BipartiteGraph:
    full = (1 << q) - 1
    rows = tuple((mask >> (x * q)) & full for x in range(p))
    return BipartiteGraph(p, q, rows)


def _mask_table(nbits: int, lo: int, hi: int):
    """Yield (masks, bits) chunks covering [lo, hi)."""
    shifts = np.arange(nbits, dtype=np.int64)
    for start in range(lo, hi, CHUNK):
        stop = min(start + CHUNK, hi)
        masks = np.arange(start, stop, dtype=np.int64)
        bits = ((masks[:, None] >> shifts) & 1).astype(np.int16)
        yield masks, bits


def enumerate_graphs(n: int, delta_min: int, visit: Callable[[Graph], None]) -> int:
    """Visit every labeled simple graph on n vertices with min degree >= delta_min."""
    if n > MAX_ENUM_N:
        raise ValueError(f"enumeration capped at n <= {MAX_ENUM_N}")
    pairs = _pairs(n)
    nbits = len(pairs)
    inc = np.zeros((nbits, n), dtype=np.int16)
    for k, (i, j) in enumerate(pairs):
        inc[k, i] = inc[k, j] = 1
    count = 0
    for masks, bits in _mask_table(max(nbits, 1), 0, 1 << nbits):
        if delta_min > 0:
            keep = (bits @ inc).min(axis=1) >= delta_min
            masks = masks[keep]
        count += len(masks)
        for mask in masks:
            visit(_graph_from_mask(n, pairs, int(mask)))
    return count


def enumerate_bipartite(
    p: int, q: int, delta_min: int, visit: Callable[[BipartiteGraph], None]
) -> int:
    """Visit every labeled biadjacency matrix with all degrees >= delta_min."""
    if p * q > MAX_BIP_CELLS:
        raise ValueError(f"bipartite enumeration capped at p*q <= {MAX_BIP_CELLS}")
    nbits = p * q
    count = 0
    for masks, bits in _mask_table(nbits, 0, 1 << nbits):
        if delta_min > 0:
            deg_x = bits.reshape(-1, p, q).sum(axis=2).min(axis=1)
            deg_y = bits.reshape(-1, p, q).sum(axis=1).min(axis=1)
            keep = (deg_x >= delta_min) & (deg_y >= delta_min)
            masks = masks[keep]
        count += len(masks)
        for mask in masks:
            visit(_bip_from_mask(p, q, int(mask)))
    return count


# ------------------------------------------------------------- reports

@dataclass
class SoundnessReport:
    theorem_id: str
    sizes: list
    graphs_scanned: int = 0
    hypothesis_hits: int = 0
    guaranteed_confirmed: int = 0
    exceptions_matched: int = 0
    boundary_cases: int = 0
    violations: list = field(default_factory=list)
    exceptions_by_family: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def merge(self, other: "SoundnessReport") -> None:
        self.graphs_scanned += other.graphs_scanned
        self.hypothesis_hits += other.hypothesis_hits
        self.guaranteed_confirmed += other.guaranteed_confirmed
        self.exceptions_matched += other.exceptions_matched
        self.boundary_cases += other.boundary_cases
        self.violations.extend(other.violations)
        for name, count in other.exceptions_by_family.items():
            self.exceptions_by_family[name] = self.exceptions_by_family.get(name, 0) + count
        for size in other.sizes:
            if size not in self.sizes:
                self.sizes.append(size)

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "sizes": self.sizes,
            "graphs_scanned": self.graphs_scanned,
            "hypothesis_hits": self.hypothesis_hits,
            "guaranteed_confirmed": self.guaranteed_confirmed,
            "exceptions_matched": self.exceptions_matched,
            "boundary_cases": self.boundary_cases,
            "violations": list(self.violations),
            "exceptions_by_family": dict(self.exceptions_by_family),
            "passed": self.passed,
        }

    def summary_line(self) -> str:
        return (
            f"{self.theorem_id}: scanned={self.graphs_scanned} hits={self.hypothesis_hits} "
            f"guaranteed={self.guaranteed_confirmed} exceptions={self.exceptions_matched} "
            f"boundary={self.boundary_cases} violations={len(self.violations)} "
            f"[{'PASS' if self.passed else 'FAIL'}]"
        )


# ------------------------------------------------------- theorem registry

@dataclass(frozen=True)
class TheoremSpec:
    theorem_id: str
    kind: str                # general | bip_balanced | bip_unbalanced
    prop: str
    min_n: int
    delta_min: tuple[int, int]   # (side X, side Y); equal entries for general
    checker: Callable
    strict: bool = False
    # hypothesis quantity: (kind, threshold(n), direction); kind in
    # m | q | rho | rho_star | q_complement, direction in ge | gt | le
    hyp: Optional[tuple[str, Callable[[int], float], str]] = None
    m_min: Optional[Callable[[int], int]] = None
    exceptions_for: Callable[[int], list[FamilyId]] = lambda n: []


def _ceil_eps(x: float) -> int:
    return math.ceil(x - 1e-9)


THEOREMS: dict[str, TheoremSpec] = {}


def _register(spec: TheoremSpec) -> None:
    THEOREMS[spec.theorem_id] = spec


_register(TheoremSpec(
    "chvatal", "general", HAMILTONIAN, 3, (0, 0),
    cond.chvatal_hamiltonian,
))
_register(TheoremSpec(
    "bipartite-degree", "bip_balanced", HAMILTONIAN, 2, (0, 0),
    cond.bipartite_degree_hamiltonian,
))
_register(TheoremSpec(
    "moon-moser", "bip_balanced", HAMILTONIAN, 2, (0, 0),
    cond.moon_moser_hamiltonian,
))
_register(TheoremSpec(
    "lemma-2.5", "bip_balanced", HAMILTONIAN, 2, (1, 1),
    partial(cond.edge_bound_bipartite, target="hamiltonian_min_deg1"),
    hyp=("m", lambda n: n * n - n + 1, "ge"),
    m_min=lambda n: n * n - n + 1,
    exceptions_for=lambda n: [FamilyId(FamilyTag.KNN1_PLUS_EDGE, (n,))],
))
_register(TheoremSpec(
    "lemma-2.6", "bip_balanced", HAMILTONIAN, 4, (2, 2),
    partial(cond.edge_bound_bipartite, target="hamiltonian_min_deg2"),
    hyp=("m", lambda n: n * n - 2 * n + 4, "ge"),
    m_min=lambda n: n * n - 2 * n + 4,
    exceptions_for=lambda n: [FamilyId(FamilyTag.KPN2_PLUS_4E, (n, n))],
))
_register(TheoremSpec(
    "lemma-2.8", "bip_balanced", TRACEABLE, 3, (1, 1),
    partial(cond.edge_bound_bipartite, target="traceable"),
    hyp=("m", lambda n: n * n - 2 * n + 3, "ge"),
    m_min=lambda n: n * n - 2 * n + 3,
))
_register(TheoremSpec(
    "spectral-bipartite-hamiltonian", "bip_balanced", HAMILTONIAN, 4, (2, 2),
    partial(cond.spectral_bipartite, target="hamiltonian_balanced"),
    hyp=("rho", lambda n: math.sqrt(n * n - 2 * n + 4), "ge"),
    m_min=lambda n: n * n - 2 * n + 4,
    exceptions_for=lambda n: [FamilyId(FamilyTag.KPN2_PLUS_4E, (n, n))],
))
_register(TheoremSpec(
    "spectral-bipartite-traceable", "bip_balanced", TRACEABLE, 3, (1, 1),
    partial(cond.spectral_bipartite, target="traceable_balanced"),
    hyp=("rho", lambda n: math.sqrt(n * n - 2 * n + 3), "ge"),
    m_min=lambda n: n * n - 2 * n + 3,
))
_register(TheoremSpec(
    "spectral-bipartite-traceable-unbalanced", "bip_unbalanced", TRACEABLE, 3, (1, 2),
    partial(cond.spectral_bipartite, target="traceable_unbalanced"),
    hyp=("rho", lambda n: math.sqrt(n * n - n + 2), "ge"),
    m_min=lambda n: n * n - n + 2,
    exceptions_for=lambda n: [
        FamilyId(FamilyTag.KPN2_PLUS_4E, (n, n + 1)),
        FamilyId(FamilyTag.KNN1_PLUS_2E, (n,)),
    ],
))
_register(TheoremSpec(
    "quasi-complement", "bip_balanced", HAMILTONIAN, 2, (0, 0),
    cond.quasi_complement_hamiltonian,
    hyp=("rho_star", lambda n: math.sqrt((n - 2) / 2), "le"),
    m_min=lambda n: _ceil_eps(n * n - n * (n - 2) / 2),
))
_register(TheoremSpec(
    "lemma-3.4", "general", HAMILTONIAN, 3, (2, 2),
    partial(cond.edge_bound_general, target=HAMILTONIAN),
    hyp=("m", lambda n: (n * n - 4 * n + 6) / 2, "gt"),
    m_min=lambda n: (n * n - 4 * n + 6) // 2 + 1,
    exceptions_for=lambda n: [nc_member(i) for i in _members_of_size(NC_NAMES, n)],
))
_register(TheoremSpec(
    "lemma-3.6", "general", TRACEABLE, 2, (1, 1),
    partial(cond.edge_bound_general, target=TRACEABLE),
    hyp=("m", lambda n: (n * n - 4 * n + 3) / 2, "gt"),
    m_min=lambda n: (n * n - 4 * n + 3) // 2 + 1,
    exceptions_for=lambda n: [np_member(i) for i in _members_of_size(NP_NAMES, n)],
))
_register(TheoremSpec(
    "tight-q-hamiltonian", "general", HAMILTONIAN, 4, (2, 2),
    partial(cond.q_spectral_general, target="hamiltonian_tight"),
    hyp=("q", lambda n: 2 * n - 5 + 3 / (n - 1), "ge"),
    m_min=lambda n: _ceil_eps(((n - 3) * (n - 1) + 3) / 2),
    exceptions_for=lambda n: {
        5: [nc_member(8)],
        6: [nc_member(5)],
        7: [nc_member(2)],
    }.get(n, []),
))
_register(TheoremSpec(
    "tight-q-traceable", "general", TRACEABLE, 4, (1, 1),
    partial(cond.q_spectral_general, target="traceable_tight"),
    hyp=("q", lambda n: float(2 * n - 5), "ge"),
    m_min=lambda n: _ceil_eps((n - 3) * (n - 1) / 2),
    exceptions_for=lambda n: {
        4: [np_member(7)],
        5: [np_member(5), FamilyId(FamilyTag.STAR, (5,))],
        6: [np_member(2)],
    }.get(n, []),
))
_register(TheoremSpec(
    "yu-fan-hamiltonian", "general", HAMILTONIAN, 3, (0, 0),
    partial(cond.q_spectral_general, target="yu_fan_hamiltonian"),
    strict=True,
    hyp=("q", lambda n: float(2 * n - 4), "gt"),
    m_min=lambda n: _ceil_eps((n - 2) * (n - 1) / 2),
    exceptions_for=lambda n: [FamilyId(FamilyTag.KN1_PLUS_EDGE, (n,))]
    + ([nc_member(8)] if n == 5 else []),
))
_register(TheoremSpec(
    "yu-fan-traceable", "general", TRACEABLE, 3, (0, 0),
    partial(cond.q_spectral_general, target="yu_fan_traceable"),
    hyp=("q", lambda n: float(2 * n - 4), "ge"),
    m_min=lambda n: _ceil_eps((n - 2) * (n - 1) / 2),
    exceptions_for=lambda n: [FamilyId(FamilyTag.KN1_PLUS_VERTEX, (n,))]
    + ([FamilyId(FamilyTag.STAR, (4,))] if n == 4 else []),
))
_register(TheoremSpec(
    "yu-connected-traceable", "general", TRACEABLE, 4, (0, 0),
    partial(cond.q_spectral_general, target="yu_connected_traceable"),
    hyp=("q", lambda n: (2 * (n - 2) ** 2 + 4) / (n - 1), "ge"),
    m_min=lambda n: _ceil_eps(((n - 2) * (n - 3) + 4) / 2),
    exceptions_for=lambda n: {
        4: [FamilyId(FamilyTag.STAR, (4,))],
        6: [np_member(2)],
        8: [np_member(0)],
    }.get(n, []),
))
_register(TheoremSpec(
    "zhou-complement-hamiltonian", "general", HAMILTONIAN, 3, (0, 0),
    partial(cond.zhou_complement, target=HAMILTONIAN),
    hyp=("q_complement", lambda n: float(n - 1), "le"),
    m_min=lambda n: _ceil_eps(n * (n - 1) / 4),
))
_register(TheoremSpec(
    "zhou-complement-traceable", "general", TRACEABLE, 1, (0, 0),
    partial(cond.zhou_complement, target=TRACEABLE),
    hyp=("q_complement", lambda n: float(n), "le"),
    m_min=lambda n: max(_ceil_eps(n * (n - 2) / 4), 0),
))


def _members_of_size(names: list[str], n: int) -> list[int]:
    from .families import NC_GRAPHS, NP_GRAPHS

    members = NC_GRAPHS if names is NC_NAMES else NP_GRAPHS
    return [i for i, g in enumerate(members) if g.n == n]


def theorem_ids() -> list[str]:
    return list(THEOREMS)


def sizes_for(spec: TheoremSpec, max_n: int, bip_cells: int = DEFAULT_BIP_CELLS) -> list[int]:
    """Side sizes (general n, or bipartite n) scanned for a theorem."""
    bip_cells = min(bip_cells, MAX_BIP_CELLS)
    if spec.kind == "general":
        return [n for n in range(spec.min_n, max_n + 1)]
    if spec.kind == "bip_balanced":
        return [n for n in range(spec.min_n, max_n + 1) if n * n <= bip_cells]
    return [n for n in range(spec.min_n, max_n + 1) if n * (n + 1) <= bip_cells]


# --------------------------------------------------------------- scanning

def _edge_matrices(n: int, pairs: list[tuple[int, int]], kind: str) -> np.ndarray:
    basis = np.zeros((len(pairs), n, n))
    for k, (i, j) in enumerate(pairs):
        basis[k, i, j] = basis[k, j, i] = 1.0
        if kind == "q":
            basis[k, i, i] += 1.0
            basis[k, j, j] += 1.0
    return basis


def _has_property(g: Graph, prop: str) -> bool:
    if prop == HAMILTONIAN:
        return is_hamiltonian(g) is not None
    return is_traceable(g) is not None


def _classify(report: SoundnessReport, spec: TheoremSpec, obj, verdict: Verdict) -> None:
    if verdict.status in (Status.INCONCLUSIVE, Status.NOT_APPLICABLE):
        return
    g = obj.to_graph() if isinstance(obj, BipartiteGraph) else obj
    report.hypothesis_hits += 1
    holds = _has_property(g, spec.prop)
    if verdict.status is Status.GUARANTEED:
        if holds:
            report.guaranteed_confirmed += 1
        else:
            report.violations.append(write_graph6(g))
    elif verdict.status is Status.EXCEPTION:
        # named exceptional graphs must lack the property; the structural
        # EC/EP classes merely fall outside the theorem and may have it
        structural = verdict.family is not None and verdict.family.tag is FamilyTag.JOIN_EXPR
        if holds and not structural:
            report.violations.append(write_graph6(g))
        else:
            report.exceptions_matched += 1
            key = str(verdict.family)
            report.exceptions_by_family[key] = report.exceptions_by_family.get(key, 0) + 1
    elif verdict.status is Status.BOUNDARY:
        # a strict hypothesis is simply unresolved at the line; a non-strict
        # one holds there, so a missing property would be a real violation
        if spec.strict or holds:
            report.boundary_cases += 1
        else:
            report.violations.append(write_graph6(g))


def _scan_general_part(theorem_id: str, n: int, lo: int, hi: int) -> SoundnessReport:
    spec = THEOREMS[theorem_id]
    report = SoundnessReport(theorem_id, [n])
    pairs = _pairs(n)
    nbits = len(pairs)
    inc = np.zeros((nbits, n), dtype=np.int16)
    for k, (i, j) in enumerate(pairs):
        inc[k, i] = inc[k, j] = 1
    m_min = spec.m_min(n) if spec.m_min else 0
    delta_min = spec.delta_min[0]
    screen = spec.hyp if spec.hyp and spec.hyp[0] != "m" and nbits > 0 else None
    basis = None
    if screen is not None:
        basis = _edge_matrices(n, pairs, "q" if screen[0].startswith("q") else "adj")
    for masks, bits in _mask_table(max(nbits, 1), lo, hi):
        report.graphs_scanned += len(masks)
        keep = bits.sum(axis=1) >= m_min
        if delta_min > 0:
            keep &= (bits @ inc).min(axis=1) >= delta_min
        masks = masks[keep]
        bits = bits[keep]
        if screen is not None and len(masks):
            kind, threshold_fn, direction = screen
            threshold = threshold_fn(n)
            weights = bits.astype(float)
            if kind == "q_complement":
                weights = 1.0 - weights
            mats = np.tensordot(weights, basis, axes=(1, 0))
            top = np.linalg.eigvalsh(mats)[:, -1]
            if direction == "le":
                masks = masks[top <= threshold + SCREEN_GUARD]
            else:
                masks = masks[top >= threshold - SCREEN_GUARD]
        for mask in masks:
            g = _graph_from_mask(n, pairs, int(mask))
            _classify(report, spec, g, spec.checker(g))
    return report


def _scan_bipartite_part(theorem_id: str, n: int, lo: int, hi: int) -> SoundnessReport:
    spec = THEOREMS[theorem_id]
    report = SoundnessReport(theorem_id, [n])
    if spec.kind == "bip_balanced":
        p = q = n
    else:
        p, q = n + 1, n
    nbits = p * q
    m_min = spec.m_min(n) if spec.m_min else 0
    dx_min, dy_min = spec.delta_min
    screen = spec.hyp if spec.hyp and spec.hyp[0] in ("rho", "rho_star") else None
    basis = None
    if screen is not None:
        cells = [(x, y) for x in range(p) for y in range(q)]
        basis = np.zeros((nbits, p + q, p + q))
        for k, (x, y) in enumerate(cells):
            basis[k, x, p + y] = basis[k, p + y, x] = 1.0
    for masks, bits in _mask_table(nbits, lo, hi):
        report.graphs_scanned += len(masks)
        keep = bits.sum(axis=1) >= m_min
        if dx_min > 0 or dy_min > 0:
            grid = bits.reshape(-1, p, q)
            keep &= grid.sum(axis=2).min(axis=1) >= dx_min
            keep &= grid.sum(axis=1).min(axis=1) >= dy_min
        masks = masks[keep]
        bits = bits[keep]
        if screen is not None and len(masks):
            kind, threshold_fn, direction = screen
            threshold = threshold_fn(n)
            weights = bits.astype(float)
            if kind == "rho_star":
                weights = 1.0 - weights
            mats = np.tensordot(weights, basis, axes=(1, 0))
            top = np.linalg.eigvalsh(mats)[:, -1]
            if direction == "le":
                masks = masks[top <= threshold + SCREEN_GUARD]
            else:
                masks = masks[top >= threshold - SCREEN_GUARD]
        for mask in masks:
            b = _bip_from_mask(p, q, int(mask))
            _classify(report, spec, b, spec.checker(b))
    return report


def _scan_part(theorem_id: str, n: int, lo: int, hi: int) -> SoundnessReport:
    spec = THEOREMS[theorem_id]
    if spec.kind == "general":
        return _scan_general_part(theorem_id, n, lo, hi)
    return _scan_bipartite_part(theorem_id, n, lo, hi)


def soundness(
    theorem_id: str,
    max_n: int = DEFAULT_MAX_N,
    sizes: Optional[list[int]] = None,
    bip_cells: int = DEFAULT_BIP_CELLS,
    jobs: int = 1,
) -> SoundnessReport:
    """Scan every labeled graph in range and verify the checker's verdicts.

    Guaranteed verdicts must be confirmed by the exact oracle; Exception
    verdicts must be refuted by it. Any disagreement lands in
    ``violations`` as a graph6 string.
    """
    if theorem_id not in THEOREMS:
        raise KeyError(f"unknown theorem id {theorem_id!r}")
    spec = THEOREMS[theorem_id]
    if sizes is None:
        sizes = sizes_for(spec, max_n, bip_cells)
    report = SoundnessReport(theorem_id, [])
    tasks = []
    for n in sizes:
        if spec.kind == "general":
            nbits = n * (n - 1) // 2
        elif spec.kind == "bip_balanced":
            nbits = n * n
        else:
            nbits = n * (n + 1)
        total = 1 << nbits
        parts = max(1, min(jobs, total // CHUNK)) if jobs > 1 else 1
        step = -(-total // parts)
        for lo in range(0, total, step):
            tasks.append((theorem_id, n, lo, min(lo + step, total)))
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_scan_part_star, tasks):
                report.merge(part)
    else:
        for task in tasks:
            report.merge(_scan_part(*task))
    report.sizes = sorted(report.sizes)
    return report


def _scan_part_star(task: tuple) -> SoundnessReport:
    return _scan_part(*task)


# ---------------------------------------------------------------- table 1

TABLE1_ROWS: list[tuple[str, FamilyId, float]] = [
    ("K4 v 5K1", nc_member(0), 13.1789),
    ("K2 v (K3 + 2K1)", nc_member(1), 9.3408),
    ("K3 v 4K1", nc_member(2), 9.7720),
    ("K1,2 v 4K1", nc_member(3), 8.8965),
    ("K2 v (K1 + K1,3)", nc_member(4), 9.3408),
    ("K2 v (K2 + 2K1)", nc_member(5), 7.7588),
    ("K1 v 2K2", nc_member(6), 5.5616),
    ("K2,3", nc_member(7), 5.0000),
    ("K2 v 3K1", nc_member(8), 6.3723),
    ("K3 v 5K1", np_member(0), 10.8990),
    ("K1 v (K3 + 2K1)", np_member(1), 6.9095),
    ("K2 v 4K1", np_member(2), 7.4641),
    ("K2,4", np_member(3), 6.0000),
    ("K1 v (K1 + K1,3)", np_member(4), 6.9095),
    ("K1 v (K2 + 2K1)", np_member(5), 5.3234),
    ("2K2", np_member(6), 2.0000),
    ("K1,4", FamilyId(FamilyTag.STAR, (5,)), 5.0000),
    ("K1,3", np_member(7), 4.0000),
]


def table1_report(tolerance: float = 5e-5) -> list[tuple[str, float, float, float]]:
    """All 18 published q values recomputed: (name, computed, published, |diff|)."""
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    rows = []
    for name, fid, published in TABLE1_ROWS:
        computed = q_radius(make_family(fid)).value
        rows.append((name, computed, published, abs(computed - published)))
    return rows


# --------------------------------------------------------------- tightness

def _hyp_value(spec: TheoremSpec, obj) -> tuple[float, float]:
    """The hypothesis quantity and its threshold, via the dense eigen oracle."""
    kind, threshold_fn, _ = spec.hyp
    if isinstance(obj, BipartiteGraph):
        n = obj.q if spec.kind == "bip_unbalanced" else obj.p
        g = obj.to_graph()
    else:
        n = obj.n
        g = obj
    threshold = threshold_fn(n)
    if kind == "m":
        return float(g.edge_count()), threshold
    if kind == "q":
        return eigen_oracle(g, "signless_laplacian")[-1], threshold
    if kind == "q_complement":
        from .graphs import complement

        return eigen_oracle(complement(g), "signless_laplacian")[-1], threshold
    if kind == "rho":
        return eigen_oracle(g, "adjacency")[-1], threshold
    if kind == "rho_star":
        from .graphs import quasi_complement

        return eigen_oracle(quasi_complement(obj), "adjacency")[-1], threshold
    raise ValueError(kind)


def tightness_search(
    theorem_id: str,
    max_n: int = DEFAULT_MAX_N,
    bip_cells: int = DEFAULT_BIP_CELLS,
) -> dict:
    """Sharpness evidence: near-miss witnesses and exception-vacuity checks.

    Near misses are graphs without the property whose hypothesis quantity
    fails by the smallest margin; the exception report states whether each
    stated exceptional graph satisfies its theorem's hypothesis at all.
    """
    if theorem_id not in THEOREMS:
        raise KeyError(f"unknown theorem id {theorem_id!r}")
    spec = THEOREMS[theorem_id]
    if spec.hyp is None:
        raise ValueError(f"{theorem_id} has no numeric hypothesis to probe")
    direction = spec.hyp[2]
    exceptions = []
    for n in sizes_for(spec, max_n, bip_cells):
        for fid in spec.exceptions_for(n):
            member = make_family(fid)
            value, threshold = _hyp_value(spec, member)
            if direction == "le":
                satisfied = value <= threshold + 1e-8
            elif direction == "gt":
                satisfied = value > threshold + 1e-8
            else:
                satisfied = value >= threshold - 1e-8
            exceptions.append({
                "family": str(fid),
                "n": n,
                "value": value,
                "threshold": threshold,
                "hypothesis_satisfied": satisfied,
            })
    best: dict | None = None

    def consider(obj) -> None:
        nonlocal best
        if isinstance(obj, BipartiteGraph):
            dx_min, dy_min = spec.delta_min
            if min(obj.degrees_x(), default=0) < dx_min:
                return
            if min(obj.degrees_y(), default=0) < dy_min:
                return
            g = obj.to_graph()
        else:
            g = obj
        if _has_property(g, spec.prop):
            return
        value, threshold = _hyp_value(spec, obj)
        deficit = threshold - value if direction != "le" else value - threshold
        if deficit <= 1e-8:
            return  # hypothesis satisfied: that is the exception report's job
        if best is None or deficit < best["deficit"]:
            best = {
                "graph6": write_graph6(g),
                "value": value,
                "threshold": threshold,
                "deficit": deficit,
            }

    for n in sizes_for(spec, max_n, bip_cells):
        if spec.kind == "general":
            enumerate_graphs(n, spec.delta_min[0], consider)
        elif spec.kind == "bip_balanced":
            enumerate_bipartite(n, n, spec.delta_min[0], consider)
        else:
            enumerate_bipartite(n + 1, n, min(spec.delta_min), consider)
    return {
        "theorem_id": theorem_id,
        "exceptions": exceptions,
        "best_near_miss": best,
    }
