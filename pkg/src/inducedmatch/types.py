"""Shared domain types: dissimilarity spaces, merge trees, barcodes, poses.

Point indices are 1-based throughout (point ``k`` is row ``k - 1`` of the
matrix), so merge-tree records read the same as the usual ``z_1, ..., z_n``
notation.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

import numpy as np

from .errors import (
    AsymmetricInput,
    DuplicateLabel,
    InvalidBijection,
    NegativeValue,
    NonzeroDiagonal,
    NotSquare,
    ParseError,
)

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True, eq=False)
class DissimilaritySpace:
    """``n`` labelled points with a symmetric non-negative function.

    Zero values between distinct points are allowed and the triangle
    inequality is not assumed. Build instances with
    :func:`validate_dissimilarity`; the matrix is stored read-only.
    """

    labels: tuple
    d: np.ndarray

    @property
    def n(self) -> int:
        return len(self.labels)

    def dist(self, i: int, j: int) -> float:
        """Dissimilarity between 1-based points ``i`` and ``j``."""
        return float(self.d[i - 1, j - 1])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DissimilaritySpace):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.d, other.d)

    def __hash__(self) -> int:
        return hash((self.labels, self.d.tobytes()))


def validate_dissimilarity(matrix, labels: Iterable[Hashable] | None = None) -> DissimilaritySpace:
    """Check ``matrix`` and wrap it as a :class:`DissimilaritySpace`.

    Symmetry is checked exactly; values are stored as given. ``labels``
    defaults to ``1..n``.
    """
    if isinstance(matrix, DissimilaritySpace):
        if labels is None:
            labels = matrix.labels
        matrix = matrix.d
    d = np.array(matrix, dtype=float)
    if d.ndim != 2 or d.shape[0] != d.shape[1]:
        raise NotSquare(f"expected a square matrix, got shape {d.shape}")
    n = d.shape[0]
    labels = tuple(range(1, n + 1)) if labels is None else tuple(labels)
    if len(labels) != n:
        raise DuplicateLabel(f"{len(labels)} labels for {n} points")
    if len(set(labels)) != n:
        dup = next(k for k, c in Counter(labels).items() if c > 1)
        raise DuplicateLabel(f"label {dup!r} repeated")
    if np.isnan(d).any():
        raise NegativeValue("NaN entry")
    if (d < 0).any():
        i, j = np.argwhere(d < 0)[0]
        raise NegativeValue(f"d[{i + 1}][{j + 1}] = {d[i, j]}")
    if (np.diag(d) != 0).any():
        i = int(np.flatnonzero(np.diag(d) != 0)[0])
        raise NonzeroDiagonal(f"d[{i + 1}][{i + 1}] = {d[i, i]}")
    if not np.array_equal(d, d.T):
        i, j = np.argwhere(d != d.T)[0]
        raise AsymmetricInput(f"d[{i + 1}][{j + 1}] = {d[i, j]} but d[{j + 1}][{i + 1}] = {d[j, i]}")
    d.setflags(write=False)
    return DissimilaritySpace(labels=labels, d=d)


@dataclass(frozen=True)
class Triplet:
    """Point ``j`` dies at ``death`` into the component whose least index is ``elder``."""

    j: int
    death: float
    elder: int


@dataclass(frozen=True)
class TripletMergeTree:
    n: int
    triplets: tuple[Triplet, ...]

    def __post_init__(self):
        if len(self.triplets) != max(self.n - 1, 0):
            raise ValueError(f"{len(self.triplets)} triplets for {self.n} points")
        if sorted(t.j for t in self.triplets) != list(range(2, self.n + 1)):
            raise ValueError("each of 2..n must die exactly once")
        for t in self.triplets:
            if not 1 <= t.elder < t.j:
                raise ValueError(f"elder {t.elder} of {t.j} must be a smaller index")
            if not t.death >= 0:
                raise ValueError(f"negative death value {t.death}")

    def deaths(self) -> list[float]:
        return sorted({t.death for t in self.triplets})

    def to_json(self) -> dict:
        return {"triplets": [{"j": t.j, "death": t.death, "elder": t.elder} for t in self.triplets]}

    @classmethod
    def from_json(cls, obj: dict) -> "TripletMergeTree":
        trips = tuple(Triplet(int(r["j"]), float(r["death"]), int(r["elder"])) for r in obj["triplets"])
        return cls(n=len(trips) + 1, triplets=trips)


@dataclass(frozen=True)
class Barcode:
    """Death values with multiplicities; the class of point 1 never dies and is not stored.

    Death value 0 is kept as an ordinary bar so that zero-distance merges are
    visible to block functions.
    """

    n: int
    bars: tuple[tuple[float, int], ...] = ()

    def __post_init__(self):
        values = [v for v, _ in self.bars]
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ValueError("death values must be strictly increasing")
        if any(m < 1 for _, m in self.bars):
            raise ValueError("multiplicities must be positive")
        if values and values[0] < 0:
            raise ValueError("death values must be non-negative")
        if sum(m for _, m in self.bars) != max(self.n - 1, 0):
            raise ValueError(f"multiplicities must sum to n - 1 = {self.n - 1}")

    @classmethod
    def from_deaths(cls, deaths: Iterable[float], n: int | None = None) -> "Barcode":
        counts = Counter(float(v) for v in deaths)
        total = sum(counts.values())
        return cls(n=total + 1 if n is None else n, bars=tuple(sorted(counts.items())))

    def multiplicity(self, value: float) -> int:
        return dict(self.bars).get(value, 0)

    def values(self) -> list[float]:
        return [v for v, _ in self.bars]

    def expanded(self) -> list[float]:
        """Sorted death values, each repeated by its multiplicity."""
        return [v for v, m in self.bars for _ in range(m)]

    def representation(self) -> list[tuple[float, int]]:
        """All ``(value, copy)`` pairs with ``copy`` in ``1..multiplicity``."""
        return [(v, k) for v, m in self.bars for k in range(1, m + 1)]

    def to_json(self) -> dict:
        return {"n": self.n, "bars": [{"death": v, "multiplicity": m} for v, m in self.bars]}

    @classmethod
    def from_json(cls, obj: dict) -> "Barcode":
        bars = tuple(sorted((float(b["death"]), int(b["multiplicity"])) for b in obj["bars"]))
        return cls(n=int(obj["n"]), bars=bars)


@dataclass(frozen=True)
class PointBijection:
    """Entry ``k - 1`` is the 1-based target of source point ``k``."""

    permutation: tuple[int, ...]

    def __post_init__(self):
        perm = tuple(int(p) for p in self.permutation)
        if sorted(perm) != list(range(1, len(perm) + 1)):
            raise InvalidBijection(f"{perm} is not a permutation of 1..{len(perm)}")
        object.__setattr__(self, "permutation", perm)

    @classmethod
    def identity(cls, n: int) -> "PointBijection":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.permutation)

    def __call__(self, k: int) -> int:
        return self.permutation[k - 1]

    def inverse(self) -> "PointBijection":
        inv = [0] * self.n
        for src, dst in enumerate(self.permutation, start=1):
            inv[dst - 1] = src
        return PointBijection(tuple(inv))


def normalize_angle(alpha: float) -> float:
    """Reduce an angle into ``[0, 2*pi)``."""
    a = math.fmod(alpha, TWO_PI)
    if a < 0:
        a += TWO_PI
    # a tiny negative input rounds up to exactly 2*pi
    return 0.0 if a >= TWO_PI else a


@dataclass(frozen=True)
class Pose:
    x: float
    y: float
    alpha: float

    def __post_init__(self):
        object.__setattr__(self, "alpha", normalize_angle(float(self.alpha)))

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.alpha)


@dataclass(frozen=True)
class Trajectory:
    agent: Hashable
    samples: tuple[Pose, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "samples", tuple(self.samples))
        if not self.samples:
            raise ValueError(f"trajectory of agent {self.agent!r} is empty")

    def __len__(self) -> int:
        return len(self.samples)

    def as_array(self) -> np.ndarray:
        """``(length, 3)`` array of ``x, y, alpha``."""
        return np.array([p.as_tuple() for p in self.samples], dtype=float)


def parse_matrix_text(text: str) -> np.ndarray:
    """Parse the plain matrix format: a line with ``n`` then ``n`` rows of ``n`` reals."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty matrix file")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise ParseError(f"first line must be an integer, got {lines[0]!r}") from None
    if n < 1 or len(lines) - 1 != n:
        raise ParseError(f"expected {n} matrix rows, got {len(lines) - 1}")
    rows = []
    for k, ln in enumerate(lines[1:], start=2):
        try:
            row = [float(tok) for tok in ln.split()]
        except ValueError:
            raise ParseError(f"line {k}: non-numeric entry") from None
        if len(row) != n:
            raise ParseError(f"line {k}: expected {n} values, got {len(row)}")
        rows.append(row)
    return np.array(rows, dtype=float)


def format_matrix_text(d: Sequence[Sequence[float]] | np.ndarray) -> str:
    d = np.asarray(d, dtype=float)
    rows = [" ".join(repr(float(v)) for v in row) for row in d]
    return "\n".join([str(d.shape[0]), *rows]) + "\n"
