"""CSV formats for trajectories, signals, summaries and barcodes."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path
from typing import Hashable, Sequence

from .errors import DuplicateSample, EmptyInput, IndexMismatch, MissingSample, ParseError, UnequalLengths
from .pipeline import SignalSeries
from .types import Pose, Trajectory

TRAJECTORY_HEADER = ["t", "agent", "x", "y", "alpha"]


@dataclass(frozen=True)
class TrajectoryDataset:
    agents: tuple[Trajectory, ...]
    timestep: float = 0.1

    def __post_init__(self):
        object.__setattr__(self, "agents", tuple(self.agents))
        if not self.agents:
            raise EmptyInput("dataset has no agents")
        ids = [tr.agent for tr in self.agents]
        if len(set(ids)) != len(ids):
            raise ParseError("agent identifiers must be unique")
        if len({len(tr) for tr in self.agents}) != 1:
            raise UnequalLengths(f"trajectory lengths {sorted({len(tr) for tr in self.agents})}")

    @property
    def length(self) -> int:
        return len(self.agents[0])

    def __len__(self) -> int:
        return len(self.agents)

    def __iter__(self):
        return iter(self.agents)

    def __getitem__(self, k):
        return self.agents[k]


def _float(text: str, line: int, name: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise ParseError(f"line {line}: bad {name} {text!r}") from None


def read_trajectories(stream) -> TrajectoryDataset:
    reader = csv.reader(stream)
    header = next(reader, None)
    if header is None or [h.strip() for h in header] != TRAJECTORY_HEADER:
        raise ParseError(f"expected header {','.join(TRAJECTORY_HEADER)}")
    samples: dict[Hashable, dict[int, Pose]] = {}
    for line, row in enumerate(reader, start=2):
        if not row or not "".join(row).strip():
            continue
        if len(row) != 5:
            raise ParseError(f"line {line}: expected 5 fields, got {len(row)}")
        try:
            t = int(row[0])
        except ValueError:
            raise ParseError(f"line {line}: bad time index {row[0]!r}") from None
        agent = row[1].strip()
        pose = Pose(_float(row[2], line, "x"), _float(row[3], line, "y"), _float(row[4], line, "alpha"))
        per_agent = samples.setdefault(agent, {})
        if t in per_agent:
            raise DuplicateSample(f"agent {agent!r} has two samples at t={t}")
        per_agent[t] = pose
    if not samples:
        raise ParseError("no samples")
    times = sorted(set().union(*samples.values()))
    trajectories = []
    for agent, per_agent in samples.items():
        missing = [t for t in times if t not in per_agent]
        if missing:
            raise MissingSample(f"agent {agent!r} lacks t={missing[0]}")
        trajectories.append(Trajectory(agent, tuple(per_agent[t] for t in times)))
    return TrajectoryDataset(tuple(trajectories))


def load_trajectories_csv(path: str | Path) -> TrajectoryDataset:
    with open(path, newline="", encoding="utf-8") as fh:
        return read_trajectories(fh)


def write_trajectories(dataset: TrajectoryDataset | Sequence[Trajectory], stream) -> None:
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(TRAJECTORY_HEADER)
    agents = list(dataset)
    length = len(agents[0])
    for t in range(length):
        for tr in agents:
            p = tr.samples[t]
            w.writerow([t + 1, tr.agent, repr(p.x), repr(p.y), repr(p.alpha)])


def save_trajectories_csv(dataset, path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        write_trajectories(dataset, fh)


def signal_to_csv(signal: SignalSeries) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t", "distance"])
    for t, v in signal.rows():
        w.writerow([t, repr(float(v))])
    return buf.getvalue()


def read_signal_csv(path: str | Path) -> SignalSeries:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header] != ["t", "distance"]:
            raise ParseError(f"{path}: expected header t,distance")
        frames, values = [], []
        for line, row in enumerate(reader, start=2):
            if not row:
                continue
            try:
                frames.append(int(row[0]))
                values.append(float(row[1]))
            except (ValueError, IndexError):
                raise ParseError(f"{path}:{line}: malformed row") from None
    try:
        return SignalSeries(tuple(frames), tuple(values))
    except ValueError as exc:
        raise IndexMismatch(f"{path}: {exc}") from None


def summary_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t", "median", "p25", "p75"])
    for t, med, lo, hi in rows:
        w.writerow([t, repr(med), repr(lo), repr(hi)])
    return buf.getvalue()
