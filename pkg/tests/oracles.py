"""Deliberately naive reference implementations used as test oracles.

Nothing here imports the library's arithmetic: elements are sets of
monomials, monomials are frozensets of generator indices, and codes are
Python sets of tuples built with itertools.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def monomials(q: int) -> list[frozenset[int]]:
    """All index subsets of {1..q}, ordered by their bitmask."""
    return [frozenset(i + 1 for i in range(q) if (j >> i) & 1) for j in range(1 << q)]


def to_terms(q: int, mask: int) -> set[frozenset[int]]:
    mons = monomials(q)
    return {mons[j] for j in range(1 << q) if (mask >> j) & 1}


def from_terms(q: int, terms: set[frozenset[int]]) -> int:
    mons = monomials(q)
    return sum(1 << mons.index(t) for t in terms)


def naive_mul(q: int, a: int, b: int) -> int:
    out: set[frozenset[int]] = set()
    for s in to_terms(q, a):
        for t in to_terms(q, b):
            if s & t:  # u_i^2 = 0
                continue
            out ^= {s | t}
    return from_terms(q, out)


def naive_add(a: int, b: int) -> int:
    return a ^ b


def naive_lee_image(q: int, mask: int) -> tuple[int, ...]:
    """u_A maps to the indicator of the subsets of A; extend F_2-linearly."""
    mons = monomials(q)
    bits = [0] * (1 << q)
    for A in to_terms(q, mask):
        for j, B in enumerate(mons):
            if B <= A:
                bits[j] ^= 1
    return tuple(bits)


def naive_hom_weight(q: int, mask: int, gamma: Fraction) -> Fraction:
    """gamma * (1 - (1/|U|) sum_{u unit} chi(x u)), chi = (-1)^(#terms)."""
    units = [m for m in range(1 << (1 << q)) if m & 1]
    s = sum((-1) ** bin(naive_mul(q, mask, u)).count("1") for u in units)
    return gamma * (1 - Fraction(s, len(units)))


def naive_code(q: int, rows: list[list[int]]) -> set[tuple[int, ...]]:
    size = 1 << (1 << q)
    n = len(rows[0])
    words = set()
    for coeffs in itertools.product(range(size), repeat=len(rows)):
        w = [0] * n
        for a, row in zip(coeffs, rows):
            for j, g in enumerate(row):
                w[j] ^= naive_mul(q, a, g)
        words.add(tuple(w))
    return words


def naive_weight(weights: list, word: tuple[int, ...]):
    return sum(weights[x] for x in word)


def naive_covering_radius(q: int, words: set[tuple[int, ...]], weights: list):
    size = 1 << (1 << q)
    n = len(next(iter(words)))
    best = 0
    for x in itertools.product(range(size), repeat=n):
        d = min(naive_weight(weights, tuple(a ^ b for a, b in zip(x, c))) for c in words)
        best = max(best, d)
    return best


def lee_weights(q: int) -> list[int]:
    return [sum(naive_lee_image(q, m)) for m in range(1 << (1 << q))]


def hom_weights(q: int, gamma: Fraction) -> list[Fraction]:
    return [naive_hom_weight(q, m, gamma) for m in range(1 << (1 << q))]


def hamming_weights(q: int) -> list[int]:
    return [0] + [1] * ((1 << (1 << q)) - 1)
