"""Weight distributions, codeword type counts and exact covering radii."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Union

import numpy as np

from . import limits
from .binary import echelon, nullspace, pack_rows, unpack_rows
from .errors import ParameterError, ResourceLimitError
from .linalg import CodeOverRq, f2_spanning_rows, lee_image_bits
from .ring import RingSpec, lee_gray_inverse, lee_weight_table, level_table

Metric = Literal["hamming", "lee", "hom"]
METRICS: tuple[str, ...] = ("hamming", "lee", "hom")
Weight = Union[int, Fraction]

# profile-DP refuses codes larger than this
PROFILE_DP_MAX_CODEWORDS = 64
PROFILE_DP_MAX_FRONTIER = 8192
# auto dispatch: exhaustive scans below the first figure (cells of |R_q|^n x |C| x n)
# are taken outright; up to the second only when profile DP does not apply
EXHAUSTIVE_CHEAP_WORK = 2**26
EXHAUSTIVE_MAX_WORK = 2**30
GRAY_SYNDROME_MAX_REDUNDANCY = 26


def _norm(value: Fraction) -> Weight:
    return int(value) if value.denominator == 1 else value


def weight_table(ring: RingSpec, metric: str) -> tuple[np.ndarray, int]:
    """Integer weights of every element scaled by a common denominator.

    Returns ``(table, den)`` with true weight = table[mask] / den.
    """
    if metric == "hamming":
        t = np.ones(ring.size, dtype=np.int64)
        t[0] = 0
        return t, 1
    if metric == "lee":
        return np.asarray(lee_weight_table(ring.q), dtype=np.int64), 1
    if metric == "hom":
        g = ring.gamma
        t = np.full(ring.size, g.numerator, dtype=np.int64)
        t[0] = 0
        t[ring.theta_mask] = 2 * g.numerator
        return t, g.denominator
    raise ParameterError(f"unknown metric {metric!r}; choose from {METRICS}")


def max_symbol_weight(ring: RingSpec, metric: str) -> Weight:
    t, den = weight_table(ring, metric)
    return _norm(Fraction(int(t.max()), den))


def weight_of(ring: RingSpec, word: np.ndarray, metric: str) -> Weight:
    t, den = weight_table(ring, metric)
    return _norm(Fraction(int(t[np.asarray(word)].sum()), den))


@dataclass(frozen=True)
class WeightDistribution:
    weight_fn: str
    counts: dict

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def nonzero_weights(self) -> list:
        return [w for w in self.counts if w != 0]

    def min_nonzero(self) -> Weight | None:
        nz = self.nonzero_weights()
        return min(nz) if nz else None

    def as_json(self) -> dict[str, int]:
        return {str(w): c for w, c in sorted(self.counts.items())}


def _weight_fn_label(ring: RingSpec, metric: str) -> str:
    return f"hom(gamma={ring.gamma})" if metric == "hom" else metric


def weight_distribution(C: CodeOverRq, metric: str = "lee", gamma: Fraction | int | None = None) -> WeightDistribution:
    ring = C.ring if gamma is None else C.ring.with_gamma(gamma)
    t, den = weight_table(ring, metric)
    w = t[C.codewords].sum(axis=1, dtype=np.int64)
    vals, counts = np.unique(w, return_counts=True)
    dist = {_norm(Fraction(int(v), den)): int(c) for v, c in zip(vals, counts)}
    return WeightDistribution(_weight_fn_label(ring, metric), dist)


def count_types(C: CodeOverRq) -> dict[int, int]:
    """Codewords per filtration level (min level over components), levels 0..q+1."""
    q = C.ring.q
    lv = level_table(q)[C.codewords]
    per_word = lv.min(axis=1) if C.n else np.full(C.size, q + 1)
    return {j: int((per_word == j).sum()) for j in range(q + 2)}


@dataclass(frozen=True)
class CoveringRadiusResult:
    metric: str
    value: Weight
    engine: str
    certificate: tuple[int, ...]

    def as_json(self) -> dict:
        return {
            "metric": self.metric,
            "radius": str(self.value) if isinstance(self.value, Fraction) else self.value,
            "engine": self.engine,
            "certificate": list(self.certificate),
        }


def distance_to_code(C: CodeOverRq, x, metric: str = "lee") -> Weight:
    t, den = weight_table(C.ring, metric)
    x = np.asarray(x, dtype=np.int64).reshape(1, -1)
    if x.shape[1] != C.n:
        raise ParameterError(f"vector length {x.shape[1]} != code length {C.n}")
    d = t[x ^ C.codewords.astype(np.int64)].sum(axis=1).min()
    return _norm(Fraction(int(d), den))


# ------------------------------------------------------------ exhaustive engine


def _digits(idx: np.ndarray, base: int, n: int) -> np.ndarray:
    powers = base ** np.arange(n, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % base


def covering_radius_exhaustive(C: CodeOverRq, metric: str = "lee", workers: int = 1) -> CoveringRadiusResult:
    """Max over all of R_q^n of the distance to the nearest codeword."""
    ring = C.ring
    n = C.n
    total = ring.size**n
    limits.check("exhaustive covering radius (|R_q|^n)", total)
    t, den = weight_table(ring, metric)
    W = C.codewords.astype(np.int64)
    M = W.shape[0]
    chunk = max(1, min(total, (1 << 22) // max(1, M * max(n, 1))))
    starts = list(range(0, total, chunk))

    def scan(start: int) -> tuple[int, int]:
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        X = _digits(idx, ring.size, n)
        dist = np.zeros((len(idx), M), dtype=np.int64)
        for i in range(n):
            dist += t[X[:, i, None] ^ W[None, :, i]]
        nearest = dist.min(axis=1)
        j = int(np.argmax(nearest))
        return int(nearest[j]), int(idx[j])

    if workers > 1 and len(starts) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(scan, starts))
    else:
        parts = [scan(s) for s in starts]
    # first chunk wins ties, so the certificate is the smallest maximiser
    best_val, best_idx = parts[0]
    for val, idx in parts[1:]:
        if val > best_val:
            best_val, best_idx = val, idx
    cert = tuple(int(v) for v in _digits(np.array([best_idx]), ring.size, n)[0])
    return CoveringRadiusResult(metric, _norm(Fraction(best_val, den)), "exhaustive", cert)


# ------------------------------------------------------------ profile DP engine


def _pareto_max(V: np.ndarray, pool: int = 1024) -> np.ndarray:
    """Indices of rows of V not dominated by another row (duplicates already removed).

    Rows are visited by decreasing sum, so a row can only be dominated by an
    earlier one; dominance is transitive, hence "dominated by any earlier row"
    equals "dominated by a kept row" and each block is filtered in one shot.
    Only the first ``pool`` kept rows are used as witnesses: a dominated row
    may survive, which costs time but never exactness.
    """
    order = np.argsort(-V.sum(axis=1), kind="stable")
    kept: list[np.ndarray] = []
    K = np.empty((0, V.shape[1]), dtype=V.dtype)
    block = max(64, (1 << 22) // max(1, V.shape[1] * 256))
    for s in range(0, len(order), block):
        idx = order[s : s + block]
        B = V[idx]
        dom = np.zeros(len(idx), dtype=bool)
        step = max(1, (1 << 24) // max(1, len(idx) * V.shape[1]))
        for k0 in range(0, min(len(K), pool), step):
            dom |= np.all(K[k0 : min(k0 + step, pool), None, :] >= B[None, :, :], axis=2).any(axis=0)
        inner = np.all(B[:, None, :] >= B[None, :, :], axis=2)
        np.fill_diagonal(inner, False)
        dom |= np.triu(inner, 1).any(axis=0)
        idx, B = idx[~dom], B[~dom]
        kept.append(idx)
        if len(K) < pool:
            K = np.vstack([K, B])
    return np.concatenate(kept).astype(np.int64) if kept else np.zeros(0, dtype=np.int64)


def _greedy_lower_bound(W: np.ndarray, t: np.ndarray, size: int, seed: int = 0, starts: int = 48) -> tuple[int, np.ndarray]:
    """Deterministic local search for a far-away vector; returns (distance, vector).

    Single-coordinate moves are accepted when they raise the minimum distance
    or keep it while reducing how many codewords attain it.
    """
    M, n = W.shape
    rng = np.random.default_rng(seed)
    best_val, best_x = -1, np.zeros(n, dtype=np.int64)
    symbols = np.arange(size, dtype=np.int64)
    contrib = [t[symbols[:, None] ^ W[None, :, i]] for i in range(n)]  # (size, M) each
    inits = [np.zeros(n, dtype=np.int64)] + [rng.integers(0, size, n) for _ in range(starts - 1)]
    for x in inits:
        dist = t[x[None, :] ^ W].sum(axis=1)
        score = (int(dist.min()), -int((dist == dist.min()).sum()))
        improved = True
        while improved:
            improved = False
            for i in range(n):
                cand = (dist - contrib[i][x[i]])[None, :] + contrib[i]
                mins = cand.min(axis=1)
                ties = (cand == mins[:, None]).sum(axis=1)
                s = int(np.lexsort((ties, -mins))[0])
                new = (int(mins[s]), -int(ties[s]))
                if new > score:
                    x[i], dist, score = s, cand[s], new
                    improved = True
        if score[0] > best_val:
            best_val, best_x = score[0], x.copy()
    return best_val, best_x


def _translation_table(W: np.ndarray) -> np.ndarray | None:
    """P[c, c'] = index of W[c] + W[c'], or None when the word set is not closed."""
    index = {row.tobytes(): j for j, row in enumerate(W)}
    M = len(W)
    P = np.empty((M, M), dtype=np.int64)
    for c in range(M):
        for j, row in enumerate(W[c] ^ W):
            k = index.get(row.tobytes())
            if k is None:
                return None
            P[c, j] = k
    return P


def _canonical_profiles(S: np.ndarray, P: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Lexicographically least translate of each profile and the shift producing it.

    The profile of x + c is S[P[c]], so translates of one prefix collapse onto
    a single representative.
    """
    F, M = S.shape
    out = np.empty_like(S)
    shift = np.empty(F, dtype=np.int64)
    chunk = max(1, (1 << 22) // (M * M))
    for s0 in range(0, F, chunk):
        T = S[s0 : s0 + chunk][:, P]  # (f, M shifts, M)
        live = np.ones(T.shape[:2], dtype=bool)
        big = np.iinfo(np.int64).max
        for j in range(M):
            col = np.where(live, T[:, :, j], big)
            live &= col == col.min(axis=1, keepdims=True)
            if not (live.sum(axis=1) > 1).any():
                break
        pick = np.argmax(live, axis=1)
        shift[s0 : s0 + chunk] = pick
        out[s0 : s0 + chunk] = T[np.arange(len(T)), pick]
    return out, shift


def covering_radius_profile_dp(
    C: CodeOverRq, metric: str = "lee", max_frontier: int | None = None
) -> CoveringRadiusResult:
    """Exact covering radius by a coordinate sweep over Pareto-maximal distance profiles.

    A state is the vector of partial distances to every codeword.  States
    dominated componentwise can never finish with a larger minimum, states
    whose optimistic completion cannot beat a known lower bound are dropped,
    and components are capped at the running upper bound.  Because the code
    is closed under addition, a prefix and its translates by codeword prefixes
    have permuted profiles and equal best completions; only one is kept.
    """
    ring = C.ring
    cap_states = PROFILE_DP_MAX_FRONTIER if max_frontier is None else max_frontier
    W = C.codewords.astype(np.int64)
    M, n = W.shape
    if M > PROFILE_DP_MAX_CODEWORDS:
        raise ResourceLimitError(f"profile DP needs |C| <= {PROFILE_DP_MAX_CODEWORDS}, got {M}")
    t, den = weight_table(ring, metric)
    if n == 0:
        return CoveringRadiusResult(metric, 0, "profile_dp", ())
    maxw = int(t.max())
    lb, lb_x = _greedy_lower_bound(W, t, ring.size)
    symbols = np.arange(ring.size, dtype=np.int64)
    # min_c (s_c + D_c) <= mean_c (s_c + D_c); bound the suffix part of the
    # mean column by column (scaled by M to stay in integers)
    col_best = np.array([int(t[symbols[:, None] ^ W[None, :, j]].sum(axis=1).max()) for j in range(n)])
    suffix_mean = np.concatenate([np.cumsum(col_best[::-1])[::-1], [0]])
    P = _translation_table(W)

    frontier = np.zeros((1, M), dtype=np.int64)
    history: list[tuple[np.ndarray, np.ndarray, np.ndarray]] = []
    for i in range(n):
        contrib = t[symbols[:, None] ^ W[None, :, i]]  # (size, M)
        cand = (frontier[:, None, :] + contrib[None, :, :]).reshape(-1, M)
        parent = np.repeat(np.arange(len(frontier)), ring.size)
        sym = np.tile(symbols, len(frontier))
        remaining = (n - 1 - i) * maxw
        optimistic = cand.min(axis=1) + remaining
        # M * min <= sum, so the averaged bound is floor((sum + suffix) / M)
        averaged = (cand.sum(axis=1) + suffix_mean[i + 1]) // M
        optimistic = np.minimum(optimistic, averaged)
        alive = optimistic > lb
        if not alive.any():
            frontier = cand[:0]
            break
        cand, parent, sym, optimistic = cand[alive], parent[alive], sym[alive], optimistic[alive]
        cap = int(optimistic.max())
        np.minimum(cand, cap, out=cand)
        if P is not None:
            cand, shift = _canonical_profiles(cand, P)
        else:
            shift = np.zeros(len(cand), dtype=np.int64)
        cand, first = np.unique(cand, axis=0, return_index=True)
        parent, sym, shift = parent[first], sym[first], shift[first]
        if len(cand) > 4 * cap_states:
            raise ResourceLimitError(f"profile DP frontier exceeded {cap_states} states")
        keep = _pareto_max(cand)
        keep.sort()
        frontier, parent, sym, shift = cand[keep], parent[keep], sym[keep], shift[keep]
        if len(frontier) > cap_states:
            raise ResourceLimitError(f"profile DP frontier exceeded {cap_states} states")
        history.append((parent, sym, shift))

    if len(history) == n and len(frontier):
        mins = frontier.min(axis=1)
        j = int(np.argmax(mins))
        if mins[j] > lb:
            chain = []
            for layer in range(n - 1, -1, -1):
                parent, sym, shift = history[layer]
                chain.append((int(sym[j]), int(shift[j])))
                j = int(parent[j])
            x = np.zeros(n, dtype=np.int64)
            for layer, (a, c) in enumerate(reversed(chain)):
                # the stored state is (parent prefix, a) translated by codeword c
                x[layer] = a
                x[: layer + 1] ^= W[c, : layer + 1]
            lb, lb_x = int(mins.max()), x
    # capped components never exceed the true distance's min, so recompute exactly
    exact = int(t[lb_x[None, :] ^ W].sum(axis=1).min())
    return CoveringRadiusResult(metric, _norm(Fraction(exact, den)), "profile_dp", tuple(int(v) for v in lb_x))


# --------------------------------------------------------- Gray syndrome engine


def binary_covering_radius(generator: np.ndarray, n: int | None = None) -> tuple[int, np.ndarray]:
    """Hamming covering radius of the binary row span, by BFS over syndromes.

    Returns the radius and a coset leader of maximal weight.
    """
    gen = np.atleast_2d(np.asarray(generator, dtype=np.uint8))
    n = gen.shape[1] if n is None else n
    basis = echelon(pack_rows(gen)) if gen.size else []
    r = n - len(basis)
    if r > GRAY_SYNDROME_MAX_REDUNDANCY:
        raise ResourceLimitError(f"syndrome space 2^{r} exceeds guard 2^{GRAY_SYNDROME_MAX_REDUNDANCY}")
    if r == 0:
        return 0, np.zeros(n, dtype=np.uint8)
    H = unpack_rows(nullspace(basis, n), n)  # (r, n)
    col_syn = (H.astype(np.int64) << np.arange(r, dtype=np.int64)[:, None]).sum(axis=0)
    nsyn = 1 << r
    dist = np.full(nsyn, -1, dtype=np.int16)
    via = np.full(nsyn, -1, dtype=np.int32)
    dist[0] = 0
    frontier = np.array([0], dtype=np.int64)
    depth = 0
    step = max(1, (1 << 22) // max(1, n))
    while len(frontier):
        nxt_parts = []
        for s in range(0, len(frontier), step):
            f = frontier[s : s + step]
            cand = (f[:, None] ^ col_syn[None, :]).ravel()
            cols = np.tile(np.arange(n, dtype=np.int32), len(f))
            fresh = dist[cand] < 0
            cand, cols = cand[fresh], cols[fresh]
            cand, first = np.unique(cand, return_index=True)
            cols = cols[first]
            fresh = dist[cand] < 0
            cand, cols = cand[fresh], cols[fresh]
            dist[cand] = depth + 1
            via[cand] = cols
            nxt_parts.append(cand)
        nxt = np.concatenate(nxt_parts) if nxt_parts else np.zeros(0, dtype=np.int64)
        if len(nxt) == 0:
            break
        depth += 1
        frontier = np.sort(nxt)
    radius = int(dist.max())
    syn = int(np.flatnonzero(dist == radius)[0])
    leader = np.zeros(n, dtype=np.uint8)
    while syn:
        c = int(via[syn])
        leader[c] ^= 1
        syn ^= int(col_syn[c])
    return radius, leader


def covering_radius_gray_syndrome(C: CodeOverRq) -> CoveringRadiusResult:
    """Lee covering radius as the Hamming covering radius of the Lee image."""
    ring = C.ring
    N = C.n * ring.nbits
    rows = f2_spanning_rows(C.generator)
    gen = lee_image_bits(ring, rows) if len(rows) else np.zeros((0, N), dtype=np.uint8)
    if len(rows) == 0:
        gen = np.zeros((1, N), dtype=np.uint8)
    radius, leader = binary_covering_radius(gen, N)
    cert = lee_gray_inverse(ring, leader) if N else np.zeros(0, dtype=np.int64)
    return CoveringRadiusResult("lee", radius, "gray_syndrome", tuple(int(v) for v in cert))


# ------------------------------------------------------------------ dispatching

ENGINES = ("exhaustive", "profile_dp", "gray_syndrome")


def covering_radius(
    C: CodeOverRq,
    metric: str = "lee",
    engine: str = "auto",
    workers: int = 1,
    max_frontier: int | None = None,
) -> CoveringRadiusResult:
    if metric not in METRICS:
        raise ParameterError(f"unknown metric {metric!r}")
    if engine == "exhaustive":
        return covering_radius_exhaustive(C, metric, workers)
    if engine == "profile_dp":
        return covering_radius_profile_dp(C, metric, max_frontier)
    if engine == "gray_syndrome":
        if metric != "lee":
            raise ParameterError("the Gray syndrome engine handles the Lee metric only")
        return covering_radius_gray_syndrome(C)
    if engine != "auto":
        raise ParameterError(f"unknown engine {engine!r}")
    ring = C.ring
    if metric == "lee":
        redundancy = C.n * ring.nbits - C.two_dim
        if redundancy <= GRAY_SYNDROME_MAX_REDUNDANCY:
            return covering_radius_gray_syndrome(C)
    space = ring.size**C.n
    work = space * C.size * max(C.n, 1)
    if space <= limits.enum_limit() and work <= EXHAUSTIVE_CHEAP_WORK:
        return covering_radius_exhaustive(C, metric, workers)
    if C.size <= PROFILE_DP_MAX_CODEWORDS:
        return covering_radius_profile_dp(C, metric, max_frontier)
    if space <= limits.enum_limit() and work <= EXHAUSTIVE_MAX_WORK:
        return covering_radius_exhaustive(C, metric, workers)
    raise ResourceLimitError(
        f"no exact engine applies (n={C.n}, |C|={C.size}, metric={metric}); covering radius refused"
    )


def covering_radius_bound_compose(r0: Weight, r1: Weight) -> Weight:
    """r0 + r1: an upper bound for the stacked code and a lower bound for the juxtaposition."""
    return r0 + r1


def max_distance(ring: RingSpec, n: int, metric: str) -> Weight:
    """Largest distance any vector can have from anything: n * max symbol weight."""
    return max_symbol_weight(ring, metric) * n


__all__ = [
    "CoveringRadiusResult",
    "WeightDistribution",
    "binary_covering_radius",
    "count_types",
    "covering_radius",
    "covering_radius_bound_compose",
    "covering_radius_exhaustive",
    "covering_radius_gray_syndrome",
    "covering_radius_profile_dp",
    "distance_to_code",
    "max_distance",
    "weight_distribution",
    "weight_table",
]

