"""Generator matrices for the simplex, MacDonald and repetition families."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import limits
from .errors import ParameterError
from .linalg import RqMatrix
from .ring import RingSpec, RqElement, make_ring


@dataclass(frozen=True)
class ConstructionParams:
    q: int
    k: int = 1
    u: int | None = None
    n: int | None = None

    def __post_init__(self) -> None:
        if self.q < 1:
            raise ParameterError(f"q must be >= 1, got {self.q}")
        if self.k < 1:
            raise ParameterError(f"k must be >= 1, got {self.k}")
        if self.u is not None and not 1 <= self.u <= self.k - 1:
            raise ParameterError(f"need 1 <= u <= k-1, got u={self.u}, k={self.k}")
        if self.n is not None and self.n < 1:
            raise ParameterError(f"n must be >= 1, got {self.n}")


def _ring(q: int, gamma: Fraction | int | None) -> RingSpec:
    return make_ring(q, gamma)


def _check_k(k: int, least: int = 1) -> None:
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or k < least:
        raise ParameterError(f"k must be an integer >= {least}, got {k!r}")


def simplex_alpha_width(q: int, k: int) -> int:
    return 1 << ((1 << q) * k)


def simplex_beta_width(q: int, k: int) -> int:
    """Width by the block recursion w(k) = |R_q|^(k-1) + |D(R_q)| * w(k-1), w(1) = 1."""
    w = 1
    for j in range(2, k + 1):
        w = (1 << ((1 << q) * (j - 1))) + (1 << ((1 << q) - 1)) * w
    return w


def _alpha_entries(q: int, k: int) -> np.ndarray:
    size = 1 << (1 << q)
    dtype = np.uint8 if q <= 3 else np.uint16
    G = np.arange(size, dtype=dtype).reshape(1, size)
    for _ in range(2, k + 1):
        w = G.shape[1]
        top = np.tile(G, (1, size))
        bottom = np.repeat(np.arange(size, dtype=dtype), w).reshape(1, -1)
        G = np.vstack([top, bottom])
    return G


def simplex_alpha_generator(q: int, k: int, gamma: Fraction | int | None = None) -> RqMatrix:
    """k x |R_q|^k matrix whose columns are every k-tuple over R_q once.

    Built by the block recursion: G_k stacks |R_q| copies of G_{k-1} over a
    row holding each ring element (in mask order) repeated |G_{k-1}| times.
    """
    ring = _ring(q, gamma)
    _check_k(k)
    limits.check("simplex-alpha generator cells", k * simplex_alpha_width(q, k))
    return RqMatrix(ring, _alpha_entries(q, k))


def zero_divisor_masks(ring: RingSpec) -> np.ndarray:
    return np.arange(0, ring.size, 2, dtype=np.int64)


def _beta_entries(q: int, k: int) -> np.ndarray:
    ring = make_ring(q)
    dtype = ring.dtype
    if k == 1:
        return np.ones((1, 1), dtype=dtype)
    alpha = _alpha_entries(q, k - 1)
    beta = _beta_entries(q, k - 1)
    blocks = [np.vstack([np.ones((1, alpha.shape[1]), dtype=dtype), alpha])]
    for z in zero_divisor_masks(ring):
        blocks.append(np.vstack([np.full((1, beta.shape[1]), z, dtype=dtype), beta]))
    return np.hstack(blocks)


def simplex_beta_generator(q: int, k: int, gamma: Fraction | int | None = None) -> RqMatrix:
    """Type-beta generator: a unit-topped alpha block, then one beta block per zero divisor."""
    ring = _ring(q, gamma)
    _check_k(k, least=2)
    limits.check("simplex-beta generator cells", k * simplex_beta_width(q, k))
    return RqMatrix(ring, _beta_entries(q, k))


def beta_base_generator(q: int, gamma: Fraction | int | None = None) -> RqMatrix:
    """The degenerate k = 1 member, the single column (1)."""
    return RqMatrix(_ring(q, gamma), _beta_entries(q, 1))


class ConstructionDefect(AssertionError):
    """A builder's internal column-count check failed."""


def _delete_zero_top(entries: np.ndarray, k: int, u: int) -> tuple[np.ndarray, int]:
    top = entries[: k - u]
    drop = np.all(top == 0, axis=0)
    return entries[:, ~drop], int(drop.sum())


def _check_ku(k: int, u: int) -> None:
    _check_k(k, least=2)
    if isinstance(u, bool) or not isinstance(u, (int, np.integer)) or not 1 <= u <= k - 1:
        raise ParameterError(f"MacDonald codes need 1 <= u <= k-1, got u={u!r}, k={k}")


def macdonald_alpha_generator(q: int, k: int, u: int, gamma: Fraction | int | None = None) -> RqMatrix:
    """Delete from the alpha generator every column whose top k-u entries vanish."""
    _check_ku(k, u)
    G = simplex_alpha_generator(q, k, gamma)
    kept, removed = _delete_zero_top(G.entries, k, u)
    expected = 1 << ((1 << q) * u)
    if removed != expected:
        raise ConstructionDefect(f"MacDonald alpha removed {removed} columns, expected {expected}")
    return RqMatrix(G.ring, kept)


def macdonald_beta_removed(q: int, u: int) -> int:
    return (1 << (((1 << q) - 1) * (u - 1))) * ((1 << u) - 1)


def macdonald_beta_generator(q: int, k: int, u: int, gamma: Fraction | int | None = None) -> RqMatrix:
    _check_ku(k, u)
    G = simplex_beta_generator(q, k, gamma)
    kept, removed = _delete_zero_top(G.entries, k, u)
    expected = macdonald_beta_removed(q, u)
    if removed != expected:
        raise ConstructionDefect(f"MacDonald beta removed {removed} columns, expected {expected}")
    return RqMatrix(G.ring, kept)


def binary_simplex_alpha(k: int) -> np.ndarray:
    """G_1 = (0 1); G_k puts a 0...0|1...1 row over two copies of G_{k-1}."""
    _check_k(k)
    limits.check("binary simplex cells", k << k)
    G = np.array([[0, 1]], dtype=np.uint8)
    for _ in range(2, k + 1):
        w = G.shape[1]
        top = np.concatenate([np.zeros(w, np.uint8), np.ones(w, np.uint8)])[None, :]
        G = np.vstack([top, np.hstack([G, G])])
    return G


def binary_simplex_beta(k: int) -> np.ndarray:
    _check_k(k, least=2)
    limits.check("binary simplex cells", k << k)
    G = np.array([[1, 1, 0], [0, 1, 1]], dtype=np.uint8)
    for j in range(3, k + 1):
        alpha = binary_simplex_alpha(j - 1)
        top = np.concatenate([np.ones(alpha.shape[1], np.uint8), np.zeros(G.shape[1], np.uint8)])[None, :]
        G = np.vstack([top, np.hstack([alpha, G])])
    return G


def binary_macdonald(k: int, u: int) -> np.ndarray:
    """Binary simplex G_k minus the columns with zero top k-u entries."""
    _check_ku(k, u)
    kept, _ = _delete_zero_top(binary_simplex_alpha(k), k, u)
    return kept


def repetition_generator(c: RqElement, n: int) -> RqMatrix:
    if c.mask == 0:
        raise ParameterError("the repetition generator element must be nonzero")
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    limits.check("repetition length", n)
    return RqMatrix(c.ring, np.full((1, n), c.mask, dtype=c.ring.dtype))


def block_repetition_generator(q: int, n: int, gamma: Fraction | int | None = None) -> RqMatrix:
    """Every nonzero element in mask order, each repeated n times: length (|R_q|-1) n."""
    ring = _ring(q, gamma)
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    limits.check("block repetition length", (ring.size - 1) * n)
    row = np.repeat(np.arange(1, ring.size, dtype=ring.dtype), n)
    return RqMatrix(ring, row)


FAMILIES = (
    "simplex-alpha",
    "simplex-beta",
    "macdonald-alpha",
    "macdonald-beta",
    "binary-simplex-alpha",
    "binary-simplex-beta",
    "repetition",
    "block-repetition",
)


def build_family(
    family: str,
    q: int | None = None,
    k: int | None = None,
    u: int | None = None,
    n: int | None = None,
    c: str | None = None,
    gamma: Fraction | int | None = None,
) -> RqMatrix | np.ndarray:
    """Dispatch on a family name; binary families return a 0/1 array."""

    def need(name: str, value: int | None) -> int:
        if value is None:
            raise ParameterError(f"family {family} needs --{name}")
        return value

    if family == "simplex-alpha":
        return simplex_alpha_generator(need("q", q), need("k", k), gamma)
    if family == "simplex-beta":
        return simplex_beta_generator(need("q", q), need("k", k), gamma)
    if family == "macdonald-alpha":
        return macdonald_alpha_generator(need("q", q), need("k", k), need("u", u), gamma)
    if family == "macdonald-beta":
        return macdonald_beta_generator(need("q", q), need("k", k), need("u", u), gamma)
    if family == "binary-simplex-alpha":
        return binary_simplex_alpha(need("k", k))
    if family == "binary-simplex-beta":
        return binary_simplex_beta(need("k", k))
    if family == "repetition":
        ring = make_ring(need("q", q), gamma)
        if c is None:
            raise ParameterError("family repetition needs --c")
        return repetition_generator(ring.element(c), need("n", n))
    if family == "block-repetition":
        return block_repetition_generator(need("q", q), need("n", n), gamma)
    raise ParameterError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
