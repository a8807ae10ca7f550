"""Linear algebra over GF(2) on bit vectors packed into Python ints.

Coordinate ``k`` (1-based) of a vector lives in bit ``k - 1``. Bases are kept
in reduced row-echelon form where a row's pivot is its lowest set bit; rows
are ordered by increasing pivot and each pivot bit is cleared in every other
row.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import AmbientMismatch, LengthMismatch


def pack(bits: Sequence[int]) -> int:
    """Pack a 0/1 sequence (coordinate 1 first) into an int."""
    v = 0
    for k, b in enumerate(bits):
        if b & 1:
            v |= 1 << k
    return v


def unpack(v: int, n: int) -> list[int]:
    return [(v >> k) & 1 for k in range(n)]


def lowest_bit(v: int) -> int:
    return (v & -v).bit_length() - 1


def _insert(rows: dict[int, int], v: int) -> bool:
    """Add ``v`` to the echelon basis ``rows`` (pivot bit -> row); True if independent."""
    for p, r in rows.items():
        if (v >> p) & 1:
            v ^= r
    if not v:
        return False
    p = lowest_bit(v)
    for q, r in rows.items():
        if (r >> p) & 1:
            rows[q] = r ^ v
    rows[p] = v
    return True


def rank(vectors: Iterable[int]) -> int:
    """GF(2) rank of packed vectors."""
    basis: list[int] = []
    for v in vectors:
        # xor-basis reduction: keep each basis element with a distinct top bit
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return len(basis)


def gf2_span_dim(vectors: Sequence[Sequence[int]]) -> int:
    """Rank of a collection of equal-length 0/1 vectors."""
    vectors = list(vectors)
    if not vectors:
        return 0
    length = len(vectors[0])
    for k, vec in enumerate(vectors):
        if len(vec) != length:
            raise LengthMismatch(f"vector {k} has length {len(vec)}, expected {length}")
    return rank(pack(vec) for vec in vectors)


@dataclass(frozen=True)
class Gf2Subspace:
    """Subspace of GF(2)^n held as a reduced row-echelon basis."""

    n: int
    basis: tuple[int, ...] = ()

    @classmethod
    def span(cls, n: int, vectors: Iterable[int | Sequence[int]]) -> "Gf2Subspace":
        rows: dict[int, int] = {}
        for v in vectors:
            if not isinstance(v, int):
                if len(v) != n:
                    raise LengthMismatch(f"vector of length {len(v)} in ambient dimension {n}")
                v = pack(v)
            elif v >> n:
                raise LengthMismatch(f"vector {v:#b} exceeds ambient dimension {n}")
            _insert(rows, v)
        return cls(n=n, basis=tuple(rows[p] for p in sorted(rows)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def pivots(self) -> list[int]:
        return [lowest_bit(r) for r in self.basis]

    def reduce(self, v: int) -> int:
        for r in self.basis:
            if (v >> lowest_bit(r)) & 1:
                v ^= r
        return v

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0

    def issubspace(self, other: "Gf2Subspace") -> bool:
        return all(r in other for r in self.basis)

    def __add__(self, other: "Gf2Subspace") -> "Gf2Subspace":
        _check_ambient(self, other)
        return Gf2Subspace.span(self.n, self.basis + other.basis)

    def __and__(self, other: "Gf2Subspace") -> "Gf2Subspace":
        return gf2_intersection_basis(self, other)


def _check_ambient(u: Gf2Subspace, v: Gf2Subspace) -> None:
    if u.n != v.n:
        raise AmbientMismatch(f"ambient dimensions {u.n} and {v.n} differ")


def gf2_intersection_basis(u: Gf2Subspace, v: Gf2Subspace) -> Gf2Subspace:
    """Basis of ``u & v`` by the Zassenhaus construction.

    Rows ``[x | x]`` for ``x`` in ``u`` and ``[y | 0]`` for ``y`` in ``v`` are
    reduced with the left block in the low bits; rows whose pivot falls in
    the right block carry the intersection in their right half.
    """
    _check_ambient(u, v)
    n = u.n
    if not u.basis or not v.basis:
        return Gf2Subspace(n)
    rows: dict[int, int] = {}
    for x in u.basis:
        _insert(rows, x | (x << n))
    for y in v.basis:
        _insert(rows, y)
    return Gf2Subspace.span(n, (r >> n for p, r in rows.items() if p >= n))
