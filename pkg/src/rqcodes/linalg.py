"""Matrices and linear codes over R_q, their Gray images and torsion codes."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Literal, Union

import numpy as np

from . import limits
from .binary import BinaryCode, echelon, gf2_rank, pack_rows
from .errors import ParameterError
from .ring import (
    RingSpec,
    RqElement,
    hom_gray_table,
    lee_gray_table,
    make_ring,
    project_masks,
    scale_array,
)

GrayMap = Literal["lee", "hom"]


@dataclass(frozen=True, eq=False)
class RqMatrix:
    ring: RingSpec
    entries: np.ndarray

    def __post_init__(self) -> None:
        e = np.asarray(self.entries)
        if e.ndim == 1:
            e = e.reshape(1, -1)
        if e.ndim != 2:
            raise ParameterError("an RqMatrix needs a 2-d entry array")
        if e.size and (e.min() < 0 or e.max() >= self.ring.size):
            raise ParameterError(f"entries outside R_{self.ring.q}")
        e = np.ascontiguousarray(e, dtype=self.ring.dtype)
        e.setflags(write=False)
        object.__setattr__(self, "entries", e)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RqMatrix):
            return NotImplemented
        return self.ring.q == other.ring.q and np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash((self.ring.q, self.entries.shape, self.entries.tobytes()))

    def __getitem__(self, idx: tuple[int, int]) -> RqElement:
        i, j = idx
        return RqElement(self.ring, int(self.entries[i, j]))

    def row(self, i: int) -> "RqMatrix":
        return RqMatrix(self.ring, self.entries[i : i + 1])

    def hstack(self, *others: "RqMatrix") -> "RqMatrix":
        return RqMatrix(self.ring, np.hstack([self.entries] + [o.entries for o in others]))

    def with_ring(self, ring: RingSpec) -> "RqMatrix":
        """Same entries viewed in a ring of the same q (e.g. another gamma)."""
        if ring.q != self.ring.q:
            raise ParameterError("with_ring keeps q fixed")
        return RqMatrix(ring, self.entries)


@dataclass(frozen=True, eq=False)
class CodeOverRq:
    """Row span of a generator matrix; the codeword array is built on first use."""

    generator: RqMatrix

    @property
    def ring(self) -> RingSpec:
        return self.generator.ring

    @property
    def n(self) -> int:
        return self.generator.cols

    @cached_property
    def codewords(self) -> np.ndarray:
        return _enumerate(self.generator)

    @property
    def size(self) -> int:
        return self.codewords.shape[0]

    @cached_property
    def two_dim(self) -> int:
        return two_dimension(self)

    def with_ring(self, ring: RingSpec) -> "CodeOverRq":
        """Reinterpret under another gamma, sharing the enumerated words."""
        other = CodeOverRq(self.generator.with_ring(ring))
        if "codewords" in self.__dict__:
            other.__dict__["codewords"] = self.codewords
        return other


def _enumerate(G: RqMatrix) -> np.ndarray:
    ring = G.ring
    combos = ring.size**G.rows
    limits.check(f"enumeration of {G.rows}-row generator (|R_q|^rows)", combos)
    limits.check("enumeration cells (|R_q|^rows * n)", combos * G.cols, limits.cell_limit())
    words = np.zeros((1, G.cols), dtype=ring.dtype)
    for i in range(G.rows):
        multiples = np.stack([scale_array(ring.q, s, G.entries[i]) for s in range(ring.size)])
        words = (words[:, None, :] ^ multiples[None, :, :]).reshape(-1, G.cols)
        words = np.unique(words, axis=0)
    words.setflags(write=False)
    return words


def enumerate_code(G: RqMatrix) -> CodeOverRq:
    """Build the code and materialise every codeword (sorted, deduplicated)."""
    code = CodeOverRq(G)
    code.codewords  # noqa: B018 - force enumeration and its guard
    return code


def lee_image_bits(ring: RingSpec, entries: np.ndarray) -> np.ndarray:
    e = np.atleast_2d(np.asarray(entries))
    return lee_gray_table(ring.q)[e].reshape(e.shape[0], -1)


def hom_image_bits(ring: RingSpec, entries: np.ndarray, mode: str = "linear") -> np.ndarray:
    e = np.atleast_2d(np.asarray(entries))
    return hom_gray_table(ring.q, mode)[e].reshape(e.shape[0], -1)


def _image_bits(ring: RingSpec, entries: np.ndarray, map: GrayMap, mode: str) -> np.ndarray:
    if map == "lee":
        return lee_image_bits(ring, entries)
    if map == "hom":
        return hom_image_bits(ring, entries, mode)
    raise ParameterError(f"unknown Gray map {map!r}")


def f2_spanning_rows(G: RqMatrix) -> np.ndarray:
    """u_A * g_i for every monomial u_A and row g_i: an F_2 spanning set of the code."""
    ring = G.ring
    out = [scale_array(ring.q, 1 << A, G.entries[i]) for i in range(G.rows) for A in range(ring.nbits)]
    if not out:
        return np.zeros((0, G.cols), dtype=ring.dtype)
    return np.stack(out)


def two_dimension(C: CodeOverRq) -> int:
    """log2 |C|, as the F_2 rank of the Lee image of an F_2 spanning set.

    The Lee map is injective and F_2-linear, so rank of the image of the
    spanning set equals the F_2 dimension of the code.
    """
    rows = f2_spanning_rows(C.generator)
    if len(rows) == 0:
        return 0
    return gf2_rank(pack_rows(lee_image_bits(C.ring, rows)))


def gray_image_matrix(G: RqMatrix, map: GrayMap = "lee", mode: str = "linear") -> np.ndarray:
    """Replace each entry by its Gray block; entry (i, j) fills columns j*w..(j+1)*w-1."""
    return _image_bits(G.ring, G.entries, map, mode)


def gray_image_code(C: CodeOverRq, map: GrayMap = "lee", mode: str = "linear") -> BinaryCode:
    return BinaryCode(_image_bits(C.ring, C.codewords, map, mode))


def subset_mask(q: int, A: int | set[int] | frozenset[int] | tuple[int, ...]) -> int:
    """Index-set bitmask for A given as a 1-based index collection or an int."""
    if isinstance(A, (int, np.integer)):
        bits = int(A)
    else:
        bits = 0
        for i in A:
            if not 1 <= i <= q:
                raise ParameterError(f"index {i} outside 1..{q}")
            bits |= 1 << (i - 1)
    if not 0 <= bits < (1 << q):
        raise ParameterError(f"subset {A!r} outside {{1..{q}}}")
    return bits


def torsion_code(C: CodeOverRq, A: int | set[int] | frozenset[int] | tuple[int, ...] = ()) -> BinaryCode:
    """{v in F_2^n : u_A v in C}, read off the codewords with entries in {0, u_A}."""
    ua = 1 << subset_mask(C.ring.q, A)
    words = C.codewords
    keep = np.all((words == 0) | (words == ua), axis=1)
    return BinaryCode((words[keep] == ua).astype(np.uint8))


def residue_code(C: CodeOverRq, A: int | set[int] | frozenset[int] | tuple[int, ...] | None = None) -> BinaryCode:
    """{u in F_2^n : u + u_A v in C for some v in F_2^n}; A defaults to all of {1..q}.

    Read off the codewords whose entries lie in {0, 1, u_A, 1 + u_A}: their
    constant coefficients are the u's.  With A empty this degenerates to the
    words of C over {0, 1}, i.e. Tor_empty.
    """
    q = C.ring.q
    ua = 1 << subset_mask(q, tuple(range(1, q + 1)) if A is None else A)
    allowed = 1 | ua
    words = C.codewords
    keep = np.all((words & ~np.array(allowed, dtype=words.dtype)) == 0, axis=1)
    return BinaryCode((words[keep] & 1).astype(np.uint8))


def reduction_code(C: CodeOverRq) -> BinaryCode:
    """Codewords reduced modulo the maximal ideal (constant coefficients)."""
    return BinaryCode((C.codewords & 1).astype(np.uint8))


def torsion_generator(G: RqMatrix) -> np.ndarray:
    """Rows of theta*G with theta replaced by 1: the unit indicator of each entry."""
    return (G.entries & 1).astype(np.uint8)


def project_matrix(G: RqMatrix) -> RqMatrix:
    """Apply the coefficient-dropping map R_q -> R_{q-1} entrywise."""
    low = make_ring(G.ring.q - 1, G.ring.gamma) if G.ring.q >= 2 else None
    if low is None:
        raise ParameterError("projection needs q >= 2")
    return RqMatrix(low, project_masks(G.ring.q, G.entries))


Matrixish = Union[RqMatrix, np.ndarray]


def _as_array(M: Matrixish) -> np.ndarray:
    return M.entries if isinstance(M, RqMatrix) else np.atleast_2d(np.asarray(M))


def _column_counts(M: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if M.shape[1] == 0:
        return np.zeros((0, M.shape[0]), dtype=M.dtype), np.zeros(0, dtype=np.int64)
    cols, counts = np.unique(M.T.astype(np.int64), axis=0, return_counts=True)
    return cols, counts


def column_multiset_equal(M1: Matrixish, M2: Matrixish) -> bool:
    a, b = _as_array(M1), _as_array(M2)
    if a.shape[0] != b.shape[0]:
        raise ParameterError(f"row counts differ: {a.shape[0]} vs {b.shape[0]}")
    if a.shape[1] != b.shape[1]:
        return False
    ca, na = _column_counts(a)
    cb, nb = _column_counts(b)
    return ca.shape == cb.shape and bool(np.array_equal(ca, cb) and np.array_equal(na, nb))


def is_concatenation_of(M: Matrixish, B: Matrixish, copies: int) -> bool:
    a, b = _as_array(M), _as_array(B)
    if a.shape[0] != b.shape[0]:
        raise ParameterError(f"row counts differ: {a.shape[0]} vs {b.shape[0]}")
    if copies < 1 or a.shape[1] != copies * b.shape[1]:
        return False
    return column_multiset_equal(a, np.tile(b, (1, copies)))


def concatenation_multiplicity(M: Matrixish, B: Matrixish) -> int | None:
    """c such that M's columns are c copies of B's columns, or None if no such c."""
    a, b = _as_array(M), _as_array(B)
    if a.shape[0] != b.shape[0] or b.shape[1] == 0 or a.shape[1] % b.shape[1]:
        return None
    c = a.shape[1] // b.shape[1]
    if c == 0:
        return None
    return c if is_concatenation_of(a, b, c) else None


# ---------------------------------------------------------------- text format

_HEADER = re.compile(r"^rq-matrix\s+q=(\d+)\s+rows=(\d+)\s+cols=(\d+)\s*$")


def format_matrix(G: RqMatrix) -> str:
    lines = [f"rq-matrix q={G.ring.q} rows={G.rows} cols={G.cols}"]
    lines += [" ".join(str(int(v)) for v in row) for row in G.entries]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str, gamma: Fraction | int | str | None = None) -> RqMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParameterError("empty matrix text")
    m = _HEADER.match(lines[0].strip())
    if not m:
        raise ParameterError(f"bad rq-matrix header: {lines[0]!r}")
    q, rows, cols = (int(g) for g in m.groups())
    ring = make_ring(q, gamma)
    body = lines[1:]
    if len(body) != rows:
        raise ParameterError(f"header says {rows} rows, found {len(body)}")
    data = np.zeros((rows, cols), dtype=np.int64)
    for i, ln in enumerate(body):
        toks = ln.split()
        if len(toks) != cols:
            raise ParameterError(f"row {i}: expected {cols} entries, found {len(toks)}")
        try:
            data[i] = [int(t) for t in toks]
        except ValueError:
            raise ParameterError(f"row {i}: entries must be decimal masks") from None
    return RqMatrix(ring, data)


def format_binary_matrix(M: np.ndarray) -> str:
    M = np.atleast_2d(np.asarray(M, dtype=np.uint8))
    return "".join("".join(map(str, row)) + "\n" for row in M)


def binary_rank(M: np.ndarray) -> int:
    return len(echelon(pack_rows(M)))
