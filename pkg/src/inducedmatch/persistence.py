"""0-dimensional persistence of the Vietoris-Rips 1-skeleton.

Edges are swept in ascending weight with a union-find that remembers the
least point index of every component. When two components meet, the one
with the larger least index dies. Edges of equal weight are handled as one
batch: elders are assigned only after the whole batch has been merged, so
every elder is the least index of the final component at that weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from typing import Literal

from .types import Barcode, DissimilaritySpace, Triplet, TripletMergeTree


@dataclass(frozen=True, order=True)
class EdgeEvent:
    weight: float
    i: int
    j: int


def edge_events(space: DissimilaritySpace) -> list[EdgeEvent]:
    """All ``n(n-1)/2`` edges sorted by ``(weight, i, j)``."""
    d = space.d
    n = space.n
    events = [EdgeEvent(float(d[i, j]), i + 1, j + 1) for i in range(n) for j in range(i + 1, n)]
    events.sort()
    return events


class UnionFind:
    """Disjoint sets over ``1..n`` with union by size and path compression.

    Each root also stores the least index in its set.
    """

    def __init__(self, n: int):
        self.parent = list(range(n + 1))
        self.size = [1] * (n + 1)
        self.least = list(range(n + 1))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def min_index(self, x: int) -> int:
        return self.least[self.find(x)]

    def union(self, x: int, y: int) -> int | None:
        """Merge the sets of ``x`` and ``y``.

        Returns the least index of the younger set (the one that dies), or
        ``None`` if they were already joined.
        """
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return None
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        young = max(self.least[rx], self.least[ry])
        self.least[rx] = min(self.least[rx], self.least[ry])
        return young


def vr_zero_pers(space: DissimilaritySpace) -> tuple[TripletMergeTree, Barcode]:
    """Triplet merge tree and barcode of ``space``."""
    n = space.n
    uf = UnionFind(n)
    triplets: list[Triplet] = []
    for weight, batch in groupby(edge_events(space), key=lambda e: e.weight):
        dying = []
        for e in batch:
            young = uf.union(e.i, e.j)
            if young is not None:
                dying.append(young)
        for j in dying:
            triplets.append(Triplet(j=j, death=weight, elder=uf.min_index(j)))
        if len(triplets) == n - 1:
            break
    triplets.sort(key=lambda t: t.j)
    tmt = TripletMergeTree(n=n, triplets=tuple(triplets))
    return tmt, Barcode.from_deaths((t.death for t in triplets), n=n)


def pair_vector(i: int, j: int) -> int:
    """GF(2) vector ``e_i + e_j`` packed into an int (bit ``k - 1`` is coordinate ``k``)."""
    return (1 << (i - 1)) ^ (1 << (j - 1))


def kernel_basis(tmt: TripletMergeTree, a: float, side: Literal["minus", "plus"]) -> list[int]:
    """Basis of the classes killed strictly before ``a`` (minus) or by ``a`` (plus).

    Returns the packed vectors ``e_elder + e_j`` of the qualifying triplets, in
    order of ``j``. Distinct ``j`` make them linearly independent. ``a`` may
    be ``math.inf``.
    """
    if side == "minus":
        return [pair_vector(t.elder, t.j) for t in tmt.triplets if t.death < a]
    if side == "plus":
        return [pair_vector(t.elder, t.j) for t in tmt.triplets if t.death <= a]
    raise ValueError(f"side must be 'minus' or 'plus', not {side!r}")
