"""Induced matchings between barcode representations and the distances built on them."""

from __future__ import annotations

import numbers
from dataclasses import dataclass

from .blockfn import BlockFunction
from .errors import CardinalityMismatch, InvalidExponent, MarginalMismatch
from .types import Barcode

Rep = tuple[float, int]


def _check_q(q) -> int:
    if isinstance(q, bool) or not isinstance(q, numbers.Integral) or q < 1:
        raise InvalidExponent(f"q must be an integer >= 1, got {q!r}")
    return int(q)


def _root(total: float, q: int) -> float:
    return total if q == 1 else total ** (1.0 / q)


@dataclass(frozen=True)
class InducedMatching:
    pairs: tuple[tuple[Rep, Rep], ...]

    def distance(self, q: int = 1) -> float:
        q = _check_q(q)
        return _root(sum(abs(a - b) ** q for (a, _), (b, _) in self.pairs), q)

    def inverse(self) -> "InducedMatching":
        return InducedMatching(tuple(sorted((dst, src) for src, dst in self.pairs)))

    def to_json(self, q: int = 1) -> dict:
        return {
            "pairs": [{"from": [a, k], "to": [b, k2]} for (a, k), (b, k2) in self.pairs],
            "distance": self.distance(q),
            "q": q,
        }


def induced_matching(block: BlockFunction, bx: Barcode, bz: Barcode) -> InducedMatching:
    """Pair up ``Rep bx`` with ``Rep bz`` so that cell ``(a, b)`` receives ``block[a, b]`` pairs.

    Copy indices are handed out in ascending order, cells visited by ``(a, b)``.
    """
    if block.row_marginals() != dict(bx.bars):
        raise MarginalMismatch(f"row sums {block.row_marginals()} differ from source barcode {dict(bx.bars)}")
    if block.col_marginals() != dict(bz.bars):
        raise MarginalMismatch(f"column sums {block.col_marginals()} differ from target barcode {dict(bz.bars)}")
    next_src = {a: 1 for a in bx.values()}
    next_dst = {b: 1 for b in bz.values()}
    pairs = []
    for (a, b), count in sorted(block.items()):
        for _ in range(count):
            pairs.append(((a, next_src[a]), (b, next_dst[b])))
            next_src[a] += 1
            next_dst[b] += 1
    return InducedMatching(tuple(pairs))


def induced_matching_distance(block: BlockFunction, q: int = 1) -> float:
    """``(sum over cells of count * |a - b|**q) ** (1/q)``."""
    q = _check_q(q)
    return _root(sum(c * abs(a - b) ** q for (a, b), c in block.items()), q)


def sorted_wasserstein(bx: Barcode, bz: Barcode, q: int = 1) -> float:
    """q-distance of the order-preserving bijection between two equal-size barcodes.

    Bars are matched bar-to-bar (no diagonal), which is optimal among
    bijections of points on a line.
    """
    q = _check_q(q)
    if bx.n != bz.n:
        raise CardinalityMismatch(f"barcodes over {bx.n} and {bz.n} points")
    xs, zs = bx.expanded(), bz.expanded()
    return _root(sum(abs(a - b) ** q for a, b in zip(xs, zs)), q)
