"""Exact Hamiltonian cycle/path decision with witness extraction.

Subset DP over endpoint bitmasks, plus a plain backtracking solver that
shares no logic with the DP and serves as a cross-check.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .graphs import Graph, bits, connected_components

MAX_DP_N = 24
MAX_BACKTRACK_N = 12

CYCLE = "cycle"
PATH = "path"


class HamWitness(NamedTuple):
    kind: str
    order: tuple[int, ...]


def _check_witness(g: Graph, witness: HamWitness) -> None:
    order = witness.order
    assert sorted(order) == list(range(g.n)), "witness is not a permutation"
    for a, b in zip(order, order[1:]):
        assert g.has_edge(a, b), f"witness edge ({a},{b}) missing"
    if witness.kind == CYCLE:
        assert g.has_edge(order[-1], order[0]), "witness cycle does not close"


def is_hamiltonian(g: Graph) -> Optional[HamWitness]:
    """A Hamiltonian cycle if one exists, else None (n <= 24)."""
    if g.n > MAX_DP_N:
        raise ValueError(f"oracle capped at n <= {MAX_DP_N}")
    if g.n < 3 or g.min_degree() < 2 or len(connected_components(g)) > 1:
        return None
    full = (1 << g.n) - 1
    # dp[mask] = endpoints v of paths 0..v spanning mask (0 in mask)
    dp = [0] * (full + 1)
    dp[1] = 1
    adj = g.adj
    for mask in range(1, full + 1, 2):
        ends = dp[mask]
        if not ends:
            continue
        for v in bits(ends):
            for u in bits(adj[v] & ~mask):
                dp[mask | (1 << u)] |= 1 << u
    closers = dp[full] & adj[0]
    if not closers:
        return None
    order = _reconstruct(adj, dp, full, (closers & -closers).bit_length() - 1)
    witness = HamWitness(CYCLE, order)
    _check_witness(g, witness)
    return witness


def is_traceable(g: Graph) -> Optional[HamWitness]:
    """A Hamiltonian path if one exists, else None (n <= 24)."""
    if g.n > MAX_DP_N:
        raise ValueError(f"oracle capped at n <= {MAX_DP_N}")
    if g.n == 1:
        return HamWitness(PATH, (0,))
    if len(connected_components(g)) > 1:
        return None
    full = (1 << g.n) - 1
    dp = [0] * (full + 1)
    for v in range(g.n):
        dp[1 << v] = 1 << v
    adj = g.adj
    for mask in range(1, full + 1):
        ends = dp[mask]
        if not ends:
            continue
        for v in bits(ends):
            for u in bits(adj[v] & ~mask):
                dp[mask | (1 << u)] |= 1 << u
    if not dp[full]:
        return None
    order = _reconstruct(adj, dp, full, (dp[full] & -dp[full]).bit_length() - 1)
    witness = HamWitness(PATH, order)
    _check_witness(g, witness)
    return witness


def _reconstruct(adj, dp, full, last: int) -> tuple[int, ...]:
    order = [last]
    mask = full
    v = last
    while mask != (1 << v):
        prev_mask = mask ^ (1 << v)
        prevs = dp[prev_mask] & adj[v]
        v = (prevs & -prevs).bit_length() - 1
        mask = prev_mask
        order.append(v)
    order.reverse()
    return tuple(order)


def backtrack_oracle(g: Graph, kind: str) -> bool:
    """Plain DFS decision procedure, independent of the DP (n <= 12)."""
    if kind not in (CYCLE, PATH):
        raise ValueError(f"unknown witness kind {kind!r}")
    if g.n > MAX_BACKTRACK_N:
        raise ValueError(f"backtracking oracle capped at n <= {MAX_BACKTRACK_N}")
    if kind == CYCLE and g.n < 3:
        return False
    if kind == PATH and g.n == 1:
        return True
    full = (1 << g.n) - 1
    adj = g.adj

    def dfs(v: int, visited: int, start: int) -> bool:
        if visited == full:
            return kind == PATH or bool(adj[v] >> start & 1)
        rest = ~visited & full
        # dead vertex: an unvisited vertex with no way in or out
        probe = rest
        for u in bits(probe):
            if not adj[u] & (rest ^ (1 << u) | (1 << v)):
                return False
        for u in bits(adj[v] & rest):
            if dfs(u, visited | (1 << u), start):
                return True
        return False

    if kind == CYCLE:
        return dfs(0, 1, 0)
    return any(dfs(s, 1 << s, s) for s in range(g.n))
