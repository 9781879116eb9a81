"""GF(2) linear algebra on int bitsets, plus a small binary-code container.

Row vectors are Python ints with bit ``j`` holding column ``j``.  Matrices
that come out of the ring side are uint8 numpy arrays of 0/1; the helpers
below convert between the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import limits


def pack_rows(bits: np.ndarray) -> list[int]:
    """uint8 (rows, n) 0/1 array -> list of ints, bit j = column j."""
    bits = np.atleast_2d(np.asarray(bits, dtype=np.uint8))
    if bits.shape[1] == 0:
        return [0] * bits.shape[0]
    packed = np.packbits(bits, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def unpack_rows(rows: list[int], n: int) -> np.ndarray:
    out = np.zeros((len(rows), n), dtype=np.uint8)
    nbytes = (n + 7) // 8
    for i, r in enumerate(rows):
        if r:
            buf = np.frombuffer(r.to_bytes(nbytes, "little"), dtype=np.uint8)
            out[i] = np.unpackbits(buf, bitorder="little")[:n]
    return out


def echelon(rows: list[int]) -> list[int]:
    """Reduced basis of the row span, each pivot the lowest set bit of its row."""
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            low = r & -r
            piv = basis.get(low)
            if piv is None:
                basis[low] = r
                break
            r ^= piv
    # full reduction so the basis is canonical
    pivots = sorted(basis)
    for p in pivots:
        row = basis[p]
        for other in pivots:
            if other != p and basis[other] & p:
                basis[other] ^= row
    return [basis[p] for p in pivots]


def gf2_rank(rows: list[int]) -> int:
    return len(echelon(rows))


def in_span(vec: int, basis: list[int]) -> bool:
    """``basis`` must come from :func:`echelon`."""
    for b in basis:
        low = b & -b
        if vec & low:
            vec ^= b
    return vec == 0


def nullspace(rows: list[int], n: int) -> list[int]:
    """Basis of {x : <r, x> = 0 for all rows r} (a parity-check matrix)."""
    basis = echelon(rows)
    pivot_of = {(b & -b).bit_length() - 1: b for b in basis}
    free = [j for j in range(n) if j not in pivot_of]
    out = []
    for f in free:
        v = 1 << f
        for p, b in pivot_of.items():
            if (b >> f) & 1:
                v |= 1 << p
        out.append(v)
    return out


def span_words(basis: list[int], n: int) -> np.ndarray:
    """All 2^len(basis) words of the span as a (2^r, n) uint8 array."""
    limits.check("binary span size", 1 << len(basis))
    limits.check("binary span cells", (1 << len(basis)) * n, limits.cell_limit())
    words = np.zeros((1, n), dtype=np.uint8)
    for b in unpack_rows(list(basis), n):
        words = np.concatenate([words, words ^ b], axis=0)
    return words


def sort_unique(words: np.ndarray) -> np.ndarray:
    if len(words) == 0:
        return words
    return np.unique(words, axis=0)


@dataclass(frozen=True, eq=False)
class BinaryCode:
    """A set of binary words of common length, stored sorted and deduplicated."""

    words: np.ndarray

    def __post_init__(self) -> None:
        w = sort_unique(np.atleast_2d(np.asarray(self.words, dtype=np.uint8)))
        w.setflags(write=False)
        object.__setattr__(self, "words", w)

    @classmethod
    def from_generator(cls, gen: np.ndarray) -> "BinaryCode":
        gen = np.atleast_2d(np.asarray(gen, dtype=np.uint8))
        n = gen.shape[1]
        return cls(span_words(echelon(pack_rows(gen)), n))

    @classmethod
    def zero(cls, n: int) -> "BinaryCode":
        return cls(np.zeros((1, n), dtype=np.uint8))

    @property
    def n(self) -> int:
        return self.words.shape[1]

    def __len__(self) -> int:
        return self.words.shape[0]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryCode):
            return NotImplemented
        return self.words.shape == other.words.shape and bool(np.array_equal(self.words, other.words))

    def __hash__(self) -> int:
        return hash((self.words.shape, self.words.tobytes()))

    @cached_property
    def basis(self) -> list[int]:
        return echelon(pack_rows(self.words))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def is_linear(self) -> bool:
        """True iff the word set is exactly an F_2 subspace."""
        return len(self) == 1 << self.rank and not np.any(self.words[0])

    def issubset(self, other: "BinaryCode") -> bool:
        if self.n != other.n:
            return False
        mine = {r.tobytes() for r in self.words}
        theirs = {r.tobytes() for r in other.words}
        return mine <= theirs

    def weights(self) -> np.ndarray:
        return self.words.sum(axis=1, dtype=np.int64)

    def min_distance(self) -> int | None:
        """Minimum nonzero weight (the minimum distance when linear)."""
        w = self.weights()
        w = w[w > 0]
        return int(w.min()) if len(w) else None

    def weight_distribution(self) -> dict[int, int]:
        vals, counts = np.unique(self.weights(), return_counts=True)
        return {int(v): int(c) for v, c in zip(vals, counts)}
