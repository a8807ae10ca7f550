"""Dynamic time warping between pose sequences.

Warping paths start at the first pair, end at the last pair and advance by
``(1, 0)``, ``(0, 1)`` or ``(1, 1)``. The accumulated table obeys

    D[i, j] = G[i, j] + min(D[i-1, j], D[i, j-1], D[i-1, j-1])

with out-of-range entries at +inf. No band constraint, no length
normalisation. DTW is symmetric and non-negative but not a metric.
"""

from __future__ import annotations

import math
from typing import Callable, Sequence

import numpy as np

from .errors import EmptySeries
from .types import TWO_PI, Pose

GroundMetric = Callable[[object, object], float]


def _angle_gap(a: float, b: float) -> float:
    """Unsigned angular difference in ``[0, pi]``."""
    gap = abs(a - b) % TWO_PI
    return min(gap, TWO_PI - gap)


def pose_ground_distance(p, q, angle_weight: float = 1.0) -> float:
    """Planar distance combined with the wrapped heading difference.

    ``p`` and ``q`` are :class:`Pose` objects or ``(x, y, alpha)`` triples.
    ``angle_weight`` converts radians to metres.
    """
    px, py, pa = p.as_tuple() if isinstance(p, Pose) else p
    qx, qy, qa = q.as_tuple() if isinstance(q, Pose) else q
    dx = px - qx
    dy = py - qy
    da = angle_weight * _angle_gap(pa, qa)
    return math.sqrt(dx * dx + dy * dy + da * da)


def euclidean_distance(u: Sequence[float], v: Sequence[float]) -> float:
    """Plain Euclidean ground metric for fixed-length vectors (e.g. twists)."""
    if len(u) != len(v):
        raise ValueError(f"vectors of length {len(u)} and {len(v)}")
    return math.sqrt(sum((a - b) * (a - b) for a, b in zip(u, v)))


def dtw_table(S: Sequence, T: Sequence, metric: GroundMetric) -> list[list[float]]:
    """Accumulated-cost table; the last entry is the DTW distance."""
    if len(S) == 0 or len(T) == 0:
        raise EmptySeries(f"series lengths {len(S)} and {len(T)}")
    inf = math.inf
    rows, cols = len(S), len(T)
    D = [[inf] * cols for _ in range(rows)]
    for i in range(rows):
        for j in range(cols):
            g = metric(S[i], T[j])
            if i == 0 and j == 0:
                D[i][j] = g
                continue
            up = D[i - 1][j] if i else inf
            left = D[i][j - 1] if j else inf
            diag = D[i - 1][j - 1] if i and j else inf
            D[i][j] = g + min(up, left, diag)
    return D


def dtw_distance(
    S: Sequence, T: Sequence, angle_weight: float = 1.0, metric: GroundMetric | None = None
) -> float:
    """Minimum warping-path cost between ``S`` and ``T``.

    The default ground metric is :func:`pose_ground_distance`; pass ``metric``
    for scalars or other vector series.
    """
    if metric is None:
        metric = lambda p, q: pose_ground_distance(p, q, angle_weight)  # noqa: E731
    return dtw_table(S, T, metric)[-1][-1]


def pose_ground_grid(A: np.ndarray, B: np.ndarray, angle_weight: float = 1.0) -> np.ndarray:
    """Ground distances between every sample of ``A`` and of ``B``.

    ``A`` has shape ``(..., k, 3)`` and ``B`` ``(..., l, 3)`` with
    broadcastable leading axes; result is ``(..., k, l)``. Uses the same
    floating-point operations as :func:`pose_ground_distance`.
    """
    A = np.asarray(A, dtype=float)[..., :, None, :]
    B = np.asarray(B, dtype=float)[..., None, :, :]
    dx = A[..., 0] - B[..., 0]
    dy = A[..., 1] - B[..., 1]
    gap = np.abs(A[..., 2] - B[..., 2]) % TWO_PI
    da = angle_weight * np.minimum(gap, TWO_PI - gap)
    return np.sqrt(dx * dx + dy * dy + da * da)


def dtw_from_grid(G: np.ndarray) -> np.ndarray:
    """DTW distances for a stack of ground grids of shape ``(..., k, l)``."""
    k, l = G.shape[-2:]
    if k == 0 or l == 0:
        raise EmptySeries(f"series lengths {k} and {l}")
    D = np.empty_like(G)
    D[..., 0, 0] = G[..., 0, 0]
    for j in range(1, l):
        D[..., 0, j] = G[..., 0, j] + D[..., 0, j - 1]
    for i in range(1, k):
        D[..., i, 0] = G[..., i, 0] + D[..., i - 1, 0]
        for j in range(1, l):
            best = np.minimum(np.minimum(D[..., i - 1, j], D[..., i, j - 1]), D[..., i - 1, j - 1])
            D[..., i, j] = G[..., i, j] + best
    return D[..., -1, -1]


def pairwise_dtw(windows: np.ndarray, angle_weight: float = 1.0) -> np.ndarray:
    """All-pairs DTW matrices for pose windows.

    ``windows`` has shape ``(..., m, k, 3)``: ``m`` agents each with ``k``
    samples. Returns ``(..., m, m)``, computed on the upper triangle and
    mirrored so the result is exactly symmetric with a zero diagonal.
    """
    windows = np.asarray(windows, dtype=float)
    m = windows.shape[-3]
    iu, ju = np.triu_indices(m, k=1)
    G = pose_ground_grid(windows[..., iu, :, :], windows[..., ju, :, :], angle_weight)
    upper = dtw_from_grid(G)
    out = np.zeros(windows.shape[:-3] + (m, m))
    out[..., iu, ju] = upper
    out[..., ju, iu] = upper
    return out
