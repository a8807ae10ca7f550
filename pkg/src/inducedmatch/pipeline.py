"""Sliding-window frame spaces and the induced matching signal.

Frame ``t`` (1-based) takes, for every agent, the poses at
``t, t + stride, ..., t + (samples - 1) * stride`` and compares agents by DTW.
The signal at ``t`` is the induced matching distance between the barcodes
of frames ``t`` and ``t + lag`` under the agent-identity bijection.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .blockfn import induced_block_function
from .dtw import pairwise_dtw
from .errors import EmptyInput, FrameOutOfRange, IndexMismatch, InvalidConfig, UnequalLengths
from .matching import induced_matching_distance
from .persistence import vr_zero_pers
from .types import DissimilaritySpace, PointBijection, Trajectory, validate_dissimilarity

# frames per vectorised DTW batch; bounds peak memory on long series
_BATCH = 256


@dataclass(frozen=True)
class WindowConfig:
    sample_count: int = 6
    intra_stride: int = 10
    compare_lag: int = 50
    q: int = 1
    angle_weight: float = 1.0

    def __post_init__(self):
        if self.sample_count < 2:
            raise InvalidConfig(f"sample_count must be >= 2, got {self.sample_count}")
        if self.intra_stride < 1 or self.compare_lag < 1:
            raise InvalidConfig("intra_stride and compare_lag must be positive")
        if isinstance(self.q, bool) or int(self.q) != self.q or self.q < 1:
            raise InvalidConfig(f"q must be an integer >= 1, got {self.q!r}")
        if self.angle_weight < 0:
            raise InvalidConfig(f"angle_weight must be non-negative, got {self.angle_weight}")

    @property
    def span(self) -> int:
        """Timesteps between the first and last sample of a window."""
        return (self.sample_count - 1) * self.intra_stride

    def frame_range(self, length: int) -> int:
        """Number of valid frames ``1..frame_range`` for a series of ``length`` samples."""
        return max(0, length - self.span)

    def signal_length(self, length: int) -> int:
        return max(0, self.frame_range(length) - self.compare_lag)


@dataclass(frozen=True)
class SignalSeries:
    frames: tuple[int, ...]
    values: tuple[float, ...]

    def __post_init__(self):
        if len(self.frames) != len(self.values):
            raise ValueError("frames and values differ in length")
        if any(b <= a for a, b in zip(self.frames, self.frames[1:])):
            raise ValueError("frame indices must be strictly increasing")

    def __len__(self) -> int:
        return len(self.frames)

    def rows(self):
        return zip(self.frames, self.values)


def pose_array(trajectories: Sequence[Trajectory]) -> np.ndarray:
    """Stack trajectories into an ``(agents, length, 3)`` array."""
    if not trajectories:
        raise EmptyInput("no trajectories")
    lengths = {len(tr) for tr in trajectories}
    if len(lengths) != 1:
        raise UnequalLengths(f"trajectory lengths {sorted(lengths)}")
    return np.stack([tr.as_array() for tr in trajectories])


def _windows(poses: np.ndarray, cfg: WindowConfig, frames: Sequence[int]) -> np.ndarray:
    """``(len(frames), agents, samples, 3)`` windows for 1-based frame indices."""
    offsets = np.arange(cfg.sample_count) * cfg.intra_stride
    idx = np.asarray(frames)[:, None] - 1 + offsets[None, :]
    return np.moveaxis(poses[:, idx, :], 0, 1)


def _check_frame(cfg: WindowConfig, length: int, t: int) -> None:
    last = cfg.frame_range(length)
    if not 1 <= t <= last:
        raise FrameOutOfRange(f"frame {t} outside 1..{last}")


def frame_space(trajectories: Sequence[Trajectory], cfg: WindowConfig, t: int) -> DissimilaritySpace:
    """DTW dissimilarity space of all agents' windows at frame ``t``."""
    poses = pose_array(trajectories)
    _check_frame(cfg, poses.shape[1], t)
    d = pairwise_dtw(_windows(poses, cfg, [t])[0], cfg.angle_weight)
    return validate_dissimilarity(d, [tr.agent for tr in trajectories])


def frame_matrices(poses: np.ndarray, cfg: WindowConfig) -> np.ndarray:
    """DTW matrices for every valid frame, shape ``(frames, agents, agents)``."""
    n_frames = cfg.frame_range(poses.shape[1])
    out = np.zeros((n_frames, poses.shape[0], poses.shape[0]))
    for start in range(0, n_frames, _BATCH):
        frames = range(start + 1, min(start + _BATCH, n_frames) + 1)
        out[start : start + len(frames)] = pairwise_dtw(_windows(poses, cfg, frames), cfg.angle_weight)
    return out


def _signal_values(mats: np.ndarray, lag: int, q: int, ts: Sequence[int]) -> list[float]:
    n = mats.shape[1]
    ident = PointBijection.identity(n)
    trees = {}

    def tree(t):
        if t not in trees:
            trees[t] = vr_zero_pers(validate_dissimilarity(mats[t - 1]))[0]
        return trees[t]

    values = []
    for t in ts:
        block = induced_block_function(tree(t), tree(t + lag), ident)
        values.append(induced_matching_distance(block, q))
    return values


def _signal_chunk(args) -> list[float]:
    return _signal_values(*args)


def matching_signal(
    trajectories: Sequence[Trajectory], cfg: WindowConfig = WindowConfig(), workers: int = 1
) -> SignalSeries:
    """Induced matching signal over every valid frame.

    With ``workers > 1`` frame chunks are farmed out to processes; output is
    ordered by frame and identical to the sequential result.
    """
    poses = pose_array(trajectories)
    count = cfg.signal_length(poses.shape[1])
    ts = list(range(1, count + 1))
    if not ts:
        return SignalSeries((), ())
    mats = frame_matrices(poses, cfg)
    if workers <= 1:
        values = _signal_values(mats, cfg.compare_lag, cfg.q, ts)
    else:
        size = -(-len(ts) // workers)
        chunks = [ts[k : k + size] for k in range(0, len(ts), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_signal_chunk, [(mats, cfg.compare_lag, cfg.q, c) for c in chunks])
            values = [v for part in parts for v in part]
    return SignalSeries(tuple(ts), tuple(values))


def summarize_signals(signals: Sequence[SignalSeries]) -> list[tuple[int, float, float, float]]:
    """Per-frame ``(t, median, p25, p75)`` across runs, linear interpolation between order statistics."""
    if not signals:
        raise EmptyInput("no signals to summarize")
    frames = signals[0].frames
    for k, s in enumerate(signals[1:], start=2):
        if s.frames != frames:
            raise IndexMismatch(f"signal {k} has different frame indices")
    stack = np.array([s.values for s in signals], dtype=float).reshape(len(signals), len(frames))
    p25, med, p75 = np.percentile(stack, [25, 50, 75], axis=0, method="linear")
    return [(t, float(m), float(lo), float(hi)) for t, m, lo, hi in zip(frames, med, p25, p75)]
