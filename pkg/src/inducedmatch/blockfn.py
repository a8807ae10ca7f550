"""Induced block functions between two merge trees related by a point bijection.

For death values ``a`` of the source and ``b`` of the target the block
function counts

    dim( f(K+_a) & L+_b ) - dim( f(K-_a) & L+_b  +  f(K+_a) & L-_b )

where ``K``/``L`` are the kernel subspaces of the source/target merge trees
and ``f`` relabels coordinates. Only dimensions are needed, so everything
reduces to echelon-form intersections and ranks.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field

import numpy as np

from .errors import SizeMismatch
from .gf2 import Gf2Subspace, gf2_intersection_basis
from .persistence import pair_vector, vr_zero_pers
from .types import DissimilaritySpace, PointBijection, TripletMergeTree, validate_dissimilarity


@dataclass(frozen=True)
class BlockFunction:
    """Sparse map ``(a, b) -> count`` holding only positive counts."""

    entries: dict[tuple[float, float], int] = field(default_factory=dict)

    def __post_init__(self):
        if any(c < 0 for c in self.entries.values()):
            raise ValueError("block counts must be non-negative")
        clean = {(float(a), float(b)): int(c) for (a, b), c in sorted(self.entries.items()) if c}
        object.__setattr__(self, "entries", clean)

    def __getitem__(self, key: tuple[float, float]) -> int:
        return self.entries.get(key, 0)

    def items(self):
        return self.entries.items()

    def row_marginals(self) -> dict[float, int]:
        out: dict[float, int] = {}
        for (a, _), c in self.entries.items():
            out[a] = out.get(a, 0) + c
        return out

    def col_marginals(self) -> dict[float, int]:
        out: dict[float, int] = {}
        for (_, b), c in self.entries.items():
            out[b] = out.get(b, 0) + c
        return out

    def transpose(self) -> "BlockFunction":
        return BlockFunction({(b, a): c for (a, b), c in self.entries.items()})

    def is_diagonal(self) -> bool:
        return all(a == b for a, b in self.entries)

    def to_json(self) -> dict:
        return {"entries": [{"a": a, "b": b, "count": c} for (a, b), c in self.entries.items()]}

    @classmethod
    def from_json(cls, obj: dict) -> "BlockFunction":
        return cls({(float(e["a"]), float(e["b"])): int(e["count"]) for e in obj["entries"]})


class _KernelChain:
    """Kernel vectors of one merge tree ordered by death value.

    ``K+_a`` and ``K-_a`` are prefixes of this order, so a grid value maps
    to two prefix lengths.
    """

    def __init__(self, tmt: TripletMergeTree, relabel: PointBijection | None = None):
        trips = sorted(tmt.triplets, key=lambda t: (t.death, t.j))
        if relabel is None:
            self.vectors = [pair_vector(t.elder, t.j) for t in trips]
        else:
            self.vectors = [pair_vector(relabel(t.elder), relabel(t.j)) for t in trips]
        self.deaths = [t.death for t in trips]
        self.grid = sorted(set(self.deaths) | {0.0})
        self.n = tmt.n

    def prefix(self, a: float, side: str) -> int:
        return bisect_left(self.deaths, a) if side == "minus" else bisect_right(self.deaths, a)


def induced_block_function(
    tmt_x: TripletMergeTree, tmt_z: TripletMergeTree, f: PointBijection | None = None
) -> BlockFunction:
    """Block function of the bijection ``f`` from the source points to the target points.

    ``f`` defaults to the identity. Death values of either tree may be 0.
    """
    n = tmt_x.n
    if tmt_z.n != n:
        raise SizeMismatch(f"source has {n} points, target has {tmt_z.n}")
    if f is None:
        f = PointBijection.identity(n)
    elif f.n != n:
        raise SizeMismatch(f"bijection on {f.n} points for spaces of {n} points")

    src = _KernelChain(tmt_x, relabel=f)
    dst = _KernelChain(tmt_z)

    spans: dict[tuple[str, int], Gf2Subspace] = {}

    def span(which: str, k: int) -> Gf2Subspace:
        key = (which, k)
        if key not in spans:
            chain = src if which == "x" else dst
            spans[key] = Gf2Subspace.span(n, chain.vectors[:k])
        return spans[key]

    meets: dict[tuple[int, int], Gf2Subspace] = {}

    def meet(kx: int, kz: int) -> Gf2Subspace:
        if (kx, kz) not in meets:
            meets[kx, kz] = gf2_intersection_basis(span("x", kx), span("z", kz))
        return meets[kx, kz]

    entries = {}
    for a in src.grid:
        ax_minus, ax_plus = src.prefix(a, "minus"), src.prefix(a, "plus")
        if ax_minus == ax_plus:
            # nothing dies at a: numerator equals the first denominator term
            continue
        for b in dst.grid:
            bz_minus, bz_plus = dst.prefix(b, "minus"), dst.prefix(b, "plus")
            if bz_minus == bz_plus:
                continue
            num = meet(ax_plus, bz_plus)
            if not num.dim:
                continue
            den = meet(ax_minus, bz_plus) + meet(ax_plus, bz_minus)
            assert den.issubspace(num), "denominator must lie inside numerator"
            count = num.dim - den.dim
            if count:
                entries[a, b] = count
    return BlockFunction(entries)


def block_function_of_spaces(
    x: DissimilaritySpace, z: DissimilaritySpace, f: PointBijection | None = None
) -> BlockFunction:
    return induced_block_function(vr_zero_pers(x)[0], vr_zero_pers(z)[0], f)


def delta_shift(space: DissimilaritySpace, delta: float) -> DissimilaritySpace:
    """Add ``delta`` to every off-diagonal dissimilarity."""
    if delta < 0:
        raise ValueError(f"delta must be non-negative, got {delta}")
    d = space.d + delta
    np.fill_diagonal(d, 0.0)
    return validate_dissimilarity(d, space.labels)


def min_nonexpansive_delta(
    x: DissimilaritySpace, z: DissimilaritySpace, f: PointBijection | None = None
) -> float:
    """Smallest shift after which ``f`` never increases a dissimilarity."""
    n = x.n
    if z.n != n:
        raise SizeMismatch(f"source has {n} points, target has {z.n}")
    if f is None:
        f = PointBijection.identity(n)
    elif f.n != n:
        raise SizeMismatch(f"bijection on {f.n} points for spaces of {n} points")
    p = np.asarray(f.permutation) - 1
    excess = z.d[np.ix_(p, p)] - x.d
    return max(0.0, float(excess.max())) if n else 0.0
