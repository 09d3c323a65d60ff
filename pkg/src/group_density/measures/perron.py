"""Perron eigenvectors of nonnegative irreducible matrices by power iteration."""

from dataclasses import dataclass

import networkx as nx
import numpy as np
from loguru import logger

from group_density.core.config import settings
from group_density.core.exceptions import ConvergenceError, MeasureError


@dataclass(frozen=True)
class PerronResult:
    eigenvalue: float
    vector: np.ndarray
    steps: int
    residual: float


def is_irreducible_matrix(matrix: np.ndarray) -> bool:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(matrix.shape[0]))
    rows, cols = np.nonzero(matrix)
    graph.add_edges_from(zip(rows.tolist(), cols.tolist(), strict=True))
    return nx.is_strongly_connected(graph)


def perron_vector(
    matrix: np.ndarray,
    left: bool = False,
    tolerance: float | None = None,
    max_steps: int | None = None,
) -> PerronResult:
    """Perron eigenvalue and eigenvector normalized to sum 1.

    Iterates with M + I, which has the same eigenvectors and is primitive
    whenever M is irreducible. The stopping rule is ‖Mv − λv‖∞ ≤ tolerance·max(1, λ).

    Args:
        matrix: Square nonnegative matrix
        left: Compute the left eigenvector (vM = λv) instead of the right one

    Raises:
        MeasureError: If the matrix is not irreducible
        ConvergenceError: If the residual stays above tolerance for max_steps iterations
    """
    tolerance = tolerance or settings.POWER_ITERATION_TOLERANCE
    max_steps = max_steps or settings.POWER_ITERATION_MAX_STEPS
    m = np.asarray(matrix, dtype=np.float64)
    if left:
        m = m.T
    n = m.shape[0]
    if n == 0:
        raise MeasureError("Perron vector of an empty matrix")
    if not is_irreducible_matrix(m):
        raise MeasureError("matrix is not irreducible; Perron vector is not unique")

    shifted = m + np.eye(n)
    v = np.full(n, 1.0 / n)
    residual = np.inf
    eigenvalue = 0.0
    for step in range(1, max_steps + 1):
        w = shifted @ v
        v_next = w / w.sum()
        mv = m @ v_next
        eigenvalue = float(mv.sum())
        residual = float(np.max(np.abs(mv - eigenvalue * v_next)))
        v = v_next
        if residual <= tolerance * max(1.0, eigenvalue):
            logger.debug(f"Perron iteration converged in {step} steps (n={n}, λ={eigenvalue:.12g})")
            return PerronResult(eigenvalue, v, step, residual)
    raise ConvergenceError(f"power iteration did not converge in {max_steps} steps (residual {residual:.3e})")
