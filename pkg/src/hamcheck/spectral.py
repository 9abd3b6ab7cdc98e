"""Largest-eigenvalue computation for A(G) and Q(G) = D(G) + A(G).

Two independent routes: deterministic power iteration (the production
path) and a dense symmetric eigendecomposition used only as an oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .graphs import BipartiteGraph, Graph

DEFAULT_TOL = 1e-10
DEFAULT_CMP_TOL = 1e-8
MAX_ITERATIONS = 1_000_000
DENSE_CAP = 64

ADJACENCY = "adjacency"
SIGNLESS_LAPLACIAN = "signless_laplacian"


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class SpectralEstimate:
    value: float
    residual: float
    iterations: int


class Relation(str, Enum):
    ABOVE = "above"
    BELOW = "below"
    BOUNDARY = "boundary"


@dataclass(frozen=True)
class ThresholdOutcome:
    relation: Relation
    margin: float


def _power_iteration(matrix: np.ndarray, tol: float, shift: float) -> SpectralEstimate:
    """Power iteration on matrix + shift*I; the shift is subtracted again.

    Start vector 1 + i*1e-6 keeps the run deterministic without being
    orthogonal to the Perron vector.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = matrix.shape[0]
    work = matrix + shift * np.eye(n)
    x = 1.0 + np.arange(n) * 1e-6
    x /= np.linalg.norm(x)
    for iteration in range(1, MAX_ITERATIONS + 1):
        y = work @ x
        lam = float(x @ y)
        residual = float(np.max(np.abs(y - lam * x)))
        value = lam - shift
        if residual <= tol * max(1.0, abs(value)):
            return SpectralEstimate(max(value, 0.0), residual, iteration)
        norm = np.linalg.norm(y)
        if norm == 0.0:
            return SpectralEstimate(0.0, 0.0, iteration)
        x = y / norm
    raise ConvergenceError(
        f"power iteration did not reach residual {tol} in {MAX_ITERATIONS} steps"
    )


def rho(g: Graph | BipartiteGraph, tol: float = DEFAULT_TOL) -> SpectralEstimate:
    """Spectral radius of the adjacency matrix.

    Runs on A + I so that the +/-rho oscillation of bipartite spectra
    cannot stall convergence.
    """
    if isinstance(g, BipartiteGraph):
        g = g.to_graph()
    return _power_iteration(g.adjacency_matrix(), tol, shift=1.0)


def q_radius(g: Graph | BipartiteGraph, tol: float = DEFAULT_TOL) -> SpectralEstimate:
    """Signless Laplacian spectral radius; Q is PSD so no shift is needed."""
    if isinstance(g, BipartiteGraph):
        g = g.to_graph()
    return _power_iteration(g.signless_laplacian(), tol, shift=0.0)


def eigen_oracle(g: Graph | BipartiteGraph, which: str = ADJACENCY) -> list[float]:
    """All eigenvalues of the chosen matrix, ascending (dense route, n <= 64)."""
    if isinstance(g, BipartiteGraph):
        g = g.to_graph()
    if g.n > DENSE_CAP:
        raise ValueError(f"dense oracle capped at n <= {DENSE_CAP}")
    if which == ADJACENCY:
        matrix = g.adjacency_matrix()
    elif which == SIGNLESS_LAPLACIAN:
        matrix = g.signless_laplacian()
    else:
        raise ValueError(f"unknown matrix kind {which!r}")
    return [float(v) for v in np.linalg.eigvalsh(matrix)]


def compare_threshold(
    est: SpectralEstimate | float, threshold: float, tol: float = DEFAULT_CMP_TOL
) -> ThresholdOutcome:
    if tol <= 0:
        raise ValueError("tol must be positive")
    value = est.value if isinstance(est, SpectralEstimate) else float(est)
    margin = value - threshold
    if abs(margin) <= tol:
        return ThresholdOutcome(Relation.BOUNDARY, margin)
    return ThresholdOutcome(Relation.ABOVE if margin > 0 else Relation.BELOW, margin)


def q_upper_bound(g: Graph) -> float:
    """2m/(n-1) + n - 2, an upper bound for q(G) on any graph with n >= 2."""
    if g.n < 2:
        raise ValueError("q upper bound needs n >= 2")
    return 2 * g.edge_count() / (g.n - 1) + g.n - 2
