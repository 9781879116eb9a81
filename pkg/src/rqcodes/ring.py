"""Arithmetic in R_q = F_2[u_1, ..., u_q] / <u_i^2, u_i u_j - u_j u_i>.

An element is stored as an integer bitmask of length 2^q.  Bit ``j`` holds
the coefficient of the monomial u_A whose index set A has characteristic
vector ``j`` (bit 0 of ``j`` is u_1, bit 1 is u_2, ...).  So bit 0 is the
constant term, bit 2^q - 1 is the socle element u_1 u_2 ... u_q, and the
natural integer order of masks lists the ring as 0, 1, u1, 1+u1, u2, ...

Bulk routines work on numpy arrays of masks; :class:`RqElement` is the
small immutable wrapper used at API boundaries.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Literal

import numpy as np

from .errors import ParameterError

Q_MAX = 4
# full multiplication tables are only built while they stay small
_MUL_TABLE_MAX_Q = 3

HomMode = Literal["linear", "weight-exact"]
HOM_MODES: tuple[str, ...] = ("linear", "weight-exact")


@dataclass(frozen=True)
class RingSpec:
    q: int
    gamma: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.q, int) or not 1 <= self.q <= Q_MAX:
            raise ParameterError(f"q must be an integer in 1..{Q_MAX}, got {self.q!r}")
        if not isinstance(self.gamma, Fraction) or self.gamma <= 0:
            raise ParameterError(f"gamma must be a positive Fraction, got {self.gamma!r}")

    @property
    def nbits(self) -> int:
        """Number of monomials, 2^q (also the Lee-Gray block width)."""
        return 1 << self.q

    @property
    def size(self) -> int:
        return 1 << self.nbits

    @property
    def theta_mask(self) -> int:
        return 1 << (self.nbits - 1)

    @property
    def dtype(self) -> type:
        return np.uint8 if self.nbits <= 8 else np.uint16

    def element(self, value: int | str) -> "RqElement":
        if isinstance(value, str):
            return parse_element(self, value)
        return RqElement(self, value)

    @property
    def zero(self) -> "RqElement":
        return RqElement(self, 0)

    @property
    def one(self) -> "RqElement":
        return RqElement(self, 1)

    @property
    def theta(self) -> "RqElement":
        return RqElement(self, self.theta_mask)

    def u(self, *indices: int) -> "RqElement":
        """The monomial u_{i1} u_{i2} ... (1-based generator indices)."""
        mask = 0
        for i in indices:
            if not 1 <= i <= self.q:
                raise ParameterError(f"generator index {i} outside 1..{self.q}")
            mask |= 1 << (i - 1)
        return RqElement(self, 1 << mask)

    def with_gamma(self, gamma: Fraction | int | str) -> "RingSpec":
        return make_ring(self.q, gamma)


def make_ring(q: int, gamma: Fraction | int | str | None = None) -> RingSpec:
    """Validated ring description; ``gamma`` defaults to 2^q."""
    if isinstance(q, bool) or not isinstance(q, (int, np.integer)):
        raise ParameterError(f"q must be an integer, got {q!r}")
    q = int(q)
    if not 1 <= q <= Q_MAX:
        raise ParameterError(f"q must lie in 1..{Q_MAX} (|R_q| = 2^(2^q) must stay enumerable), got {q}")
    g = Fraction(1 << q) if gamma is None else Fraction(gamma)
    if g <= 0:
        raise ParameterError(f"gamma must be positive, got {gamma!r}")
    return RingSpec(q, g)


@dataclass(frozen=True)
class RqElement:
    ring: RingSpec
    mask: int

    def __post_init__(self) -> None:
        if isinstance(self.mask, bool) or not isinstance(self.mask, (int, np.integer)):
            raise ParameterError(f"element mask must be an integer, got {self.mask!r}")
        if not 0 <= self.mask < self.ring.size:
            raise ParameterError(f"mask {self.mask} outside R_{self.ring.q}")
        object.__setattr__(self, "mask", int(self.mask))

    def __add__(self, other: "RqElement") -> "RqElement":
        return add(self, other)

    def __mul__(self, other: "RqElement") -> "RqElement":
        return mul(self, other)

    def __int__(self) -> int:
        return self.mask

    def __str__(self) -> str:
        return render_symbolic(self)

    def __repr__(self) -> str:
        return f"RqElement(q={self.ring.q}, {render_symbolic(self)})"


def _same_ring(x: RqElement, y: RqElement) -> None:
    if x.ring.q != y.ring.q:
        raise ParameterError(f"elements of R_{x.ring.q} and R_{y.ring.q} cannot be combined")


def add(x: RqElement, y: RqElement) -> RqElement:
    _same_ring(x, y)
    return RqElement(x.ring, x.mask ^ y.mask)


def mul_masks(q: int, a: int, b: int) -> int:
    """Product of two element masks: u_A u_B = u_{A|B} when A, B are disjoint, else 0."""
    nbits = 1 << q
    out = 0
    for A in range(nbits):
        if not (a >> A) & 1:
            continue
        for B in range(nbits):
            if (b >> B) & 1 and not A & B:
                out ^= 1 << (A | B)
    return out


def mul(x: RqElement, y: RqElement) -> RqElement:
    _same_ring(x, y)
    return RqElement(x.ring, mul_masks(x.ring.q, x.mask, y.mask))


def scale_array(q: int, scalar: int, arr: np.ndarray) -> np.ndarray:
    """Multiply every mask in ``arr`` by the element ``scalar``."""
    arr = np.asarray(arr)
    if q <= _MUL_TABLE_MAX_Q:
        return mul_table(q)[scalar][arr]
    nbits = 1 << q
    wide = arr.astype(np.int64)
    out = np.zeros_like(wide)
    for A in range(nbits):
        if not (scalar >> A) & 1:
            continue
        for B in range(nbits):
            if not A & B:
                out ^= ((wide >> B) & 1) << (A | B)
    return out.astype(np.uint16)


@lru_cache(maxsize=None)
def mul_table(q: int) -> np.ndarray:
    """Full |R_q| x |R_q| multiplication table (q <= 3 only)."""
    if q > _MUL_TABLE_MAX_Q:
        raise ParameterError(f"no multiplication table for q={q}")
    size = 1 << (1 << q)
    elems = np.arange(size, dtype=np.int64)
    table = np.zeros((size, size), dtype=np.int64)
    nbits = 1 << q
    for A in range(nbits):
        # rows whose mask contains monomial A
        mono = np.zeros(size, dtype=np.int64)
        for B in range(nbits):
            if not A & B:
                mono ^= ((elems >> B) & 1) << (A | B)
        has_a = ((elems >> A) & 1).astype(bool)
        table[has_a] ^= mono
    dtype = np.uint8 if nbits <= 8 else np.uint16
    table = table.astype(dtype)
    table.setflags(write=False)
    return table


def is_unit(x: RqElement) -> bool:
    return bool(x.mask & 1)


def chi(x: RqElement) -> int:
    """Generating character (-1)^(number of nonzero coefficients)."""
    return -1 if bin(x.mask).count("1") & 1 else 1


def hom_weight_closed(x: RqElement) -> Fraction:
    if x.mask == 0:
        return Fraction(0)
    if x.mask == x.ring.theta_mask:
        return 2 * x.ring.gamma
    return x.ring.gamma


def hom_weight_character(x: RqElement) -> Fraction:
    """gamma * (1 - mean over units u of chi(x u)), summed exactly."""
    q = x.ring.q
    units = [m for m in range(x.ring.size) if m & 1]
    total = 0
    for u in units:
        total += -1 if bin(mul_masks(q, x.mask, u)).count("1") & 1 else 1
    return x.ring.gamma * (1 - Fraction(total, len(units)))


@dataclass(frozen=True)
class GrayVector:
    bits: tuple[int, ...]
    kind: str

    def __post_init__(self) -> None:
        if self.kind not in ("lee", "hom"):
            raise ParameterError(f"unknown Gray map {self.kind!r}")

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    @property
    def weight(self) -> int:
        return sum(self.bits)

    def __xor__(self, other: "GrayVector") -> "GrayVector":
        if self.kind != other.kind or len(self) != len(other):
            raise ParameterError("Gray vectors of different shape")
        return GrayVector(tuple(a ^ b for a, b in zip(self.bits, other.bits)), self.kind)


@lru_cache(maxsize=None)
def lee_gray_table(q: int) -> np.ndarray:
    """Row ``x`` is the Lee-Gray image of element mask ``x`` as 2^q bits.

    Coordinate B of the image of u_A is 1 iff B is a subset of A; extended
    linearly that is the parity of the set coefficients on supersets of B,
    i.e. a superset zeta transform over F_2.
    """
    nbits = 1 << q
    size = 1 << nbits
    masks = np.arange(size, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(nbits)) & 1).astype(np.uint8)
    for i in range(q):
        step = 1 << i
        for B in range(nbits):
            if not B & step:
                bits[:, B] ^= bits[:, B | step]
    bits.setflags(write=False)
    return bits


@lru_cache(maxsize=None)
def lee_weight_table(q: int) -> np.ndarray:
    w = lee_gray_table(q).sum(axis=1).astype(np.int64)
    w.setflags(write=False)
    return w


@lru_cache(maxsize=None)
def hom_gray_table(q: int, mode: str = "linear") -> np.ndarray:
    if mode not in HOM_MODES:
        raise ParameterError(f"hom Gray mode must be one of {HOM_MODES}, got {mode!r}")
    nbits = 1 << q
    size = 1 << nbits
    lee = lee_gray_table(q)
    masks = np.arange(size, dtype=np.int64)
    theta = 1 << (nbits - 1)
    if mode == "linear":
        # x (1 + theta) = x + theta for units, x for zero divisors
        partner = np.where(masks & 1, masks ^ theta, masks)
        table = np.concatenate([lee, lee[partner]], axis=1)
    else:
        table = np.concatenate([lee, 1 - lee], axis=1)
        table[0] = 0
        table[theta] = 1
    table = np.ascontiguousarray(table, dtype=np.uint8)
    table.setflags(write=False)
    return table


def hom_weight_table(ring: RingSpec) -> list[Fraction]:
    theta = ring.theta_mask
    return [Fraction(0) if m == 0 else (2 * ring.gamma if m == theta else ring.gamma) for m in range(ring.size)]


def lee_gray(x: RqElement) -> GrayVector:
    return GrayVector(tuple(int(b) for b in lee_gray_table(x.ring.q)[x.mask]), "lee")


def lee_weight(x: RqElement) -> int:
    return int(lee_weight_table(x.ring.q)[x.mask])


def hom_gray(x: RqElement, mode: HomMode = "linear") -> GrayVector:
    return GrayVector(tuple(int(b) for b in hom_gray_table(x.ring.q, mode)[x.mask]), "hom")


def lee_gray_inverse(ring: RingSpec, bits: np.ndarray) -> np.ndarray:
    """Element masks whose Lee images are the consecutive 2^q-bit blocks of ``bits``.

    The Lee map is a bijection R_q -> F_2^(2^q), so every block has a preimage.
    """
    bits = np.asarray(bits, dtype=np.int64).reshape(-1, ring.nbits)
    key = bits @ (1 << np.arange(ring.nbits, dtype=np.int64))
    return _lee_inverse_lookup(ring.q)[key]


@lru_cache(maxsize=None)
def _lee_inverse_lookup(q: int) -> np.ndarray:
    table = lee_gray_table(q).astype(np.int64)
    keys = table @ (1 << np.arange(1 << q, dtype=np.int64))
    inv = np.empty(len(keys), dtype=np.int64)
    inv[keys] = np.arange(len(keys))
    return inv


def gamma_project(x: RqElement) -> RqElement:
    """Drop every term containing u_q; lands in R_{q-1}."""
    q = x.ring.q
    if q < 2:
        raise ParameterError("gamma_project needs q >= 2")
    low = make_ring(q - 1, x.ring.gamma)
    return RqElement(low, x.mask & ((1 << low.nbits) - 1))


def project_masks(q: int, arr: np.ndarray) -> np.ndarray:
    if q < 2:
        raise ParameterError("projection needs q >= 2")
    return np.asarray(arr) & ((1 << (1 << (q - 1))) - 1)


def elements_iter(ring: RingSpec) -> Iterator[RqElement]:
    for m in range(ring.size):
        yield RqElement(ring, m)


@lru_cache(maxsize=None)
def level_table(q: int) -> np.ndarray:
    """Filtration level of each mask: min |A| over set monomials, q+1 for zero."""
    nbits = 1 << q
    size = 1 << nbits
    degree = [bin(A).count("1") for A in range(nbits)]
    out = np.full(size, q + 1, dtype=np.int64)
    for m in range(1, size):
        out[m] = min(degree[A] for A in range(nbits) if (m >> A) & 1)
    out.setflags(write=False)
    return out


def classify_filtration_level(x: RqElement) -> int:
    return int(level_table(x.ring.q)[x.mask])


def monomial_name(A: int) -> str:
    if A == 0:
        return "1"
    return "".join(f"u{i + 1}" for i in range(A.bit_length()) if (A >> i) & 1)


def render_symbolic(x: RqElement) -> str:
    if x.mask == 0:
        return "0"
    return "+".join(monomial_name(A) for A in range(x.ring.nbits) if (x.mask >> A) & 1)


def render_decimal(x: RqElement) -> str:
    return str(x.mask)


_TERM = re.compile(r"^(?:1|(?:u\d+)+)$")


def parse_element(ring: RingSpec, text: str) -> RqElement:
    """Parse a decimal mask ("3"), a symbolic sum ("1+u1"), or "theta"."""
    s = text.strip().replace(" ", "").replace("*", "")
    if not s:
        raise ParameterError("empty element text")
    if s.isdigit():
        return RqElement(ring, int(s))
    if s.lower() in ("theta", "θ"):
        return ring.theta
    if s == "0":
        return ring.zero
    mask = 0
    for term in s.split("+"):
        if not _TERM.match(term):
            raise ParameterError(f"cannot parse term {term!r} in {text!r}")
        if term == "1":
            A = 0
        else:
            A = 0
            for idx in re.findall(r"u(\d+)", term):
                i = int(idx)
                if not 1 <= i <= ring.q:
                    raise ParameterError(f"u{i} does not exist in R_{ring.q}")
                if A & (1 << (i - 1)):
                    # u_i^2 = 0
                    A = -1
                    break
                A |= 1 << (i - 1)
            if A < 0:
                continue
        mask ^= 1 << A
    return RqElement(ring, mask)
