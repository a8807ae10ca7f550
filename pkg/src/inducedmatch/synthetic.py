"""Seeded synthetic fleets in a periodic corridor.

Two kinds:

``laned``
    Agents start at random positions and headings. Half head left, half
    right, each steering toward its own lane (right-movers in the lower half
    of the corridor, left-movers in the upper half). Steering noise decays
    as ``exp(-t / burn_in)`` so the fleet settles into constant-velocity
    lanes at the cruise speed.
``jittery``
    Agents keep the cruise speed but perturb their heading with fresh
    Gaussian noise every step and never settle.

``x`` wraps modulo the corridor length; ``y`` reflects off the walls.
Randomness comes from ``numpy.random.Generator(PCG64(seed))``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .trajio import TrajectoryDataset
from .types import Pose, Trajectory

KINDS = ("laned", "jittery")


@dataclass(frozen=True)
class Corridor:
    length: float = 5.0
    width: float = 3.5
    margin: float = 0.4
    speed: float = 1.2
    timestep: float = 0.1


@dataclass(frozen=True)
class LaneParams:
    burn_in: float = 30.0  # seconds; decay time of steering noise
    relax: float = 1.0  # seconds; velocity relaxation toward the lane command
    lane_gain: float = 1.0  # 1/s; lateral speed per metre of lane error
    noise: float = 1.5  # m/s per sqrt(s) at t = 0


@dataclass(frozen=True)
class JitterParams:
    heading_noise: float = 0.35  # rad per step


def _wrap(x: np.ndarray, length: float) -> np.ndarray:
    x = np.mod(x, length)
    # tiny negatives round up to exactly ``length``
    return np.where(x >= length, 0.0, x)


def _reflect(y: np.ndarray, lo: float, hi: float) -> tuple[np.ndarray, np.ndarray]:
    """Fold ``y`` back into ``[lo, hi]``; second output flags reflected entries."""
    below, above = y < lo, y > hi
    y = np.where(below, 2 * lo - y, y)
    y = np.where(above, 2 * hi - y, y)
    return np.clip(y, lo, hi), below | above


def _lanes(directions: np.ndarray, y0: np.ndarray, c: Corridor) -> np.ndarray:
    lanes = np.empty_like(y0)
    mid = c.width / 2
    bands = {1: (c.margin, mid - 0.25), -1: (mid + 0.25, c.width - c.margin)}
    for sign, (lo, hi) in bands.items():
        members = np.flatnonzero(directions == sign)
        if members.size == 0:
            continue
        targets = np.linspace(lo, hi, members.size) if members.size > 1 else np.array([(lo + hi) / 2])
        # keep vertical order so lanes are reached with little crossing
        lanes[members[np.argsort(y0[members], kind="stable")]] = targets
    return lanes


def _simulate_laned(rng: np.random.Generator, n: int, steps: int, c: Corridor, p: LaneParams):
    directions = rng.permutation(np.r_[-np.ones(n // 2), np.ones(n - n // 2)])
    x = rng.uniform(0.0, c.length, n)
    y = rng.uniform(c.margin, c.width - c.margin, n)
    heading = rng.uniform(0.0, 2 * np.pi, n)
    v = c.speed * np.stack([np.cos(heading), np.sin(heading)], axis=1)
    lanes = _lanes(directions, y, c)
    dt = c.timestep
    out = np.empty((steps, n, 3))
    for k in range(steps):
        out[k, :, 0], out[k, :, 1] = x, y
        out[k, :, 2] = np.arctan2(v[:, 1], v[:, 0])
        target = np.stack([directions * c.speed, np.clip(p.lane_gain * (lanes - y), -0.6, 0.6)], axis=1)
        scale = p.noise * np.exp(-k * dt / p.burn_in) * np.sqrt(dt)
        v = v + (target - v) * (dt / p.relax) + scale * rng.standard_normal((n, 2))
        x = _wrap(x + v[:, 0] * dt, c.length)
        y, hit = _reflect(y + v[:, 1] * dt, c.margin, c.width - c.margin)
        v[hit, 1] = -v[hit, 1]
    return out


def _simulate_jittery(rng: np.random.Generator, n: int, steps: int, c: Corridor, p: JitterParams):
    x = rng.uniform(0.0, c.length, n)
    y = rng.uniform(c.margin, c.width - c.margin, n)
    heading = rng.uniform(0.0, 2 * np.pi, n)
    dt = c.timestep
    out = np.empty((steps, n, 3))
    for k in range(steps):
        out[k, :, 0], out[k, :, 1], out[k, :, 2] = x, y, heading
        heading = heading + p.heading_noise * rng.standard_normal(n)
        x = _wrap(x + c.speed * np.cos(heading) * dt, c.length)
        y, hit = _reflect(y + c.speed * np.sin(heading) * dt, c.margin, c.width - c.margin)
        heading = np.where(hit, -heading, heading)
    return out


def gen_synthetic(
    kind: str,
    n_agents: int,
    length: int,
    seed: int,
    corridor: Corridor = Corridor(),
    lane_params: LaneParams = LaneParams(),
    jitter_params: JitterParams = JitterParams(),
) -> TrajectoryDataset:
    """Generate ``n_agents`` trajectories of ``length`` samples; same seed, same output."""
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    if n_agents < 1 or length < 1:
        raise ValueError("n_agents and length must be positive")
    rng = np.random.Generator(np.random.PCG64(seed))
    if kind == "laned":
        poses = _simulate_laned(rng, n_agents, length, corridor, lane_params)
    else:
        poses = _simulate_jittery(rng, n_agents, length, corridor, jitter_params)
    agents = tuple(
        Trajectory(f"r{i + 1}", tuple(Pose(float(px), float(py), float(pa)) for px, py, pa in poses[:, i]))
        for i in range(n_agents)
    )
    return TrajectoryDataset(agents, timestep=corridor.timestep)
