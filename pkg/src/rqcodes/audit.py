"""Closed-form claims about the simplex/MacDonald/repetition families, checked by brute force.

Every claim is data: an id, an anchor, a parameter domain, a formula for the
claimed value and an oracle that computes the true value at that point.  The
runner never edits a formula; it only reports how each one fares.

Verdicts
--------
``agree``            claimed == computed
``mismatch``         they differ
``infeasible-claim`` the claimed value is impossible on its face (a count that
                     is not a non-negative integer, a distance beyond
                     n * max symbol weight, ...) -- decided without the oracle
``skipped-guard``    a resource guard refused the oracle, or the formula has
                     no single reading at this point
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Iterable

import numpy as np

from .analysis import (
    count_types,
    covering_radius,
    covering_radius_exhaustive,
    covering_radius_gray_syndrome,
    max_distance,
    weight_distribution,
    weight_table,
)
from .binary import BinaryCode
from .constructions import (
    binary_macdonald,
    binary_simplex_alpha,
    binary_simplex_beta,
    block_repetition_generator,
    macdonald_alpha_generator,
    macdonald_beta_generator,
    repetition_generator,
    simplex_alpha_generator,
    simplex_beta_generator,
)
from .errors import ResourceLimitError
from .linalg import (
    CodeOverRq,
    RqMatrix,
    concatenation_multiplicity,
    enumerate_code,
    gray_image_code,
    gray_image_matrix,
    project_matrix,
    residue_code,
    torsion_code,
    torsion_generator,
)
from .ring import (
    chi,
    elements_iter,
    hom_gray_table,
    hom_weight_character,
    hom_weight_closed,
    is_unit,
    lee_gray_table,
    make_ring,
    mul,
    scale_array,
)

AGREE = "agree"
MISMATCH = "mismatch"
INFEASIBLE = "infeasible-claim"
SKIPPED = "skipped-guard"
VERDICTS = (AGREE, MISMATCH, INFEASIBLE, SKIPPED)

PARAM_ORDER = ("q", "k", "u", "e", "n", "c", "m", "n0", "n1")


def pow2(e: int | Fraction) -> Fraction:
    """2^e as an exact Fraction (e may be negative)."""
    e = Fraction(e)
    if e.denominator != 1:
        raise ValueError(f"non-integer exponent {e}")
    return Fraction(2) ** int(e)


# ---------------------------------------------------------------- budget


@dataclass(frozen=True)
class AuditBudget:
    """Which parameter points run.  ``max_frontier`` bounds profile-DP work per covering radius."""

    max_q: int = 2
    max_k: int = 3
    max_n: int = 3
    max_frontier: int = 2048
    workers: int = 1

    def qs(self, least: int = 1) -> range:
        return range(least, self.max_q + 1)

    def ks(self, least: int = 1) -> range:
        return range(least, self.max_k + 1)

    def ns(self) -> range:
        return range(1, self.max_n + 1)


# ---------------------------------------------------------------- outcomes


@dataclass(frozen=True)
class Outcome:
    claimed: Any
    computed: Any
    verdict: str
    note: str = ""


def _is_count(x: Any) -> bool:
    x = Fraction(x)
    return x.denominator == 1 and x >= 0


def _eq(claimed: Any, computed: Any, note: str = "") -> Outcome:
    return Outcome(claimed, computed, AGREE if claimed == computed else MISMATCH, note)


def _value_check(
    claimed: Fraction | int,
    oracle: Callable[[], Any],
    *,
    ceiling: Fraction | int | None = None,
    integral: bool = True,
    note: str = "",
) -> Outcome:
    """Compare one number, applying the face-value feasibility filter first."""
    c = Fraction(claimed)
    reason = None
    if integral and c.denominator != 1:
        reason = "claimed value is not an integer"
    elif c < 0:
        reason = "claimed value is negative"
    elif ceiling is not None and c > ceiling:
        reason = f"claimed value exceeds the ceiling {_plain(ceiling)}"
    if reason is not None:
        try:
            computed = oracle()
        except ResourceLimitError:
            computed = None
        return Outcome(c, computed, INFEASIBLE, _join(note, reason))
    return _eq(c, oracle(), note)


def _distribution_check(
    claimed: dict, dist: dict, ceiling: Fraction | int, note: str = "", complete: bool = True
) -> Outcome:
    """Compare listed (weight -> count) pairs with the oracle's distribution.

    A complete claim (one that states A(0) = 1 and so purports to give the
    whole distribution) must match exactly; a partial one only at its weights.
    """
    for w, cnt in claimed.items():
        if not _is_count(cnt):
            return Outcome(claimed, dist, INFEASIBLE, _join(note, f"count at weight {_plain(w)} is not a non-negative integer"))
        if cnt and (Fraction(w) < 0 or Fraction(w) > ceiling):
            return Outcome(claimed, dist, INFEASIBLE, _join(note, f"weight {_plain(w)} outside [0, {_plain(ceiling)}]"))
    ok = all(dist.get(_plain(w), 0) == cnt for w, cnt in claimed.items())
    if complete:
        listed = {_plain(w) for w, cnt in claimed.items() if cnt}
        ok = ok and set(dist) <= listed
    return Outcome(claimed, dist, AGREE if ok else MISMATCH, note)


def _join(*parts: str) -> str:
    return "; ".join(p for p in parts if p)


def _plain(x: Any) -> Any:
    """Fractions that are integers become ints, everything else unchanged."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    if isinstance(x, np.integer):
        return int(x)
    return x


# ---------------------------------------------------------------- claims


@dataclass(frozen=True)
class AuditClaim:
    id: str
    source: str
    points: Callable[[AuditBudget], list[dict]]
    run: Callable[[dict, str, AuditBudget], Outcome]
    normalizations: tuple[str, ...] = ("-",)
    formula: str = ""


@dataclass(frozen=True)
class AuditEntry:
    claim: str
    source: str
    params: dict
    normalization: str
    claimed: Any
    computed: Any
    verdict: str
    note: str = ""

    def sort_key(self) -> tuple:
        return (self.claim, _params_key(self.params), self.normalization)

    def as_json(self) -> dict:
        return {
            "claim": self.claim,
            "source": self.source,
            "params": {k: self.params[k] for k in PARAM_ORDER if k in self.params},
            "normalization": self.normalization,
            "claimed": to_jsonable(self.claimed),
            "computed": to_jsonable(self.computed),
            "verdict": self.verdict,
            "note": self.note,
        }


def _params_key(params: dict) -> tuple:
    return tuple((k, params[k]) for k in PARAM_ORDER if k in params)


def to_jsonable(v: Any) -> Any:
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, dict):
        items = sorted(v.items(), key=lambda kv: _sort_scalar(kv[0]))
        return {str(to_jsonable(k)): to_jsonable(x) for k, x in items}
    if isinstance(v, (list, tuple)):
        return [to_jsonable(x) for x in v]
    return v


def _sort_scalar(k: Any) -> tuple:
    if isinstance(k, (int, Fraction, np.integer)):
        return (0, Fraction(k), "")
    return (1, Fraction(0), str(k))


@dataclass
class AuditReport:
    entries: list[AuditEntry] = field(default_factory=list)

    def as_json(self) -> list[dict]:
        return [e.as_json() for e in self.entries]

    def to_json(self) -> str:
        return json.dumps(self.as_json(), indent=1, sort_keys=False) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        cols = ["claim", "source", "params", "normalization", "claimed", "computed", "verdict", "note"]
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for row in self.as_json():
            w.writerow(
                [
                    row["claim"],
                    row["source"],
                    json.dumps(row["params"], separators=(",", ":")),
                    row["normalization"],
                    json.dumps(row["claimed"], separators=(",", ":")),
                    json.dumps(row["computed"], separators=(",", ":")),
                    row["verdict"],
                    row["note"],
                ]
            )
        return buf.getvalue()

    def to_text(self) -> str:
        lines = []
        for e in self.as_json():
            params = " ".join(f"{k}={v}" for k, v in e["params"].items())
            norm = "" if e["normalization"] == "-" else f" [{e['normalization']}]"
            lines.append(f"{e['claim']:<24} {params:<22} {e['verdict']:<16}{norm}")
        lines.append(self.summary_line())
        return "\n".join(lines) + "\n"

    def counts(self) -> dict[str, int]:
        return {v: sum(1 for e in self.entries if e.verdict == v) for v in VERDICTS}

    def summary_line(self) -> str:
        c = self.counts()
        return f"{len(self.entries)} entries: " + ", ".join(f"{c[v]} {v}" for v in VERDICTS)

    def claims(self) -> set[str]:
        return {e.claim for e in self.entries}

    def find(self, claim: str, **params: int) -> list[AuditEntry]:
        return [
            e for e in self.entries if e.claim == claim and all(e.params.get(k) == v for k, v in params.items())
        ]

    def has_mismatch(self) -> bool:
        return any(e.verdict == MISMATCH for e in self.entries)


# ---------------------------------------------------------------- cached oracles


@lru_cache(maxsize=None)
def _generator(family: str, q: int, k: int = 0, u: int = 0, n: int = 0, c: int = 0) -> RqMatrix:
    if family == "sa":
        return simplex_alpha_generator(q, k)
    if family == "sb":
        return simplex_beta_generator(q, k)
    if family == "ma":
        return macdonald_alpha_generator(q, k, u)
    if family == "mb":
        return macdonald_beta_generator(q, k, u)
    if family == "rep":
        return repetition_generator(make_ring(q).element(c), n)
    if family == "block":
        return block_repetition_generator(q, n)
    raise KeyError(family)


@lru_cache(maxsize=None)
def _code(family: str, q: int, k: int = 0, u: int = 0, n: int = 0, c: int = 0) -> CodeOverRq:
    return enumerate_code(_generator(family, q, k, u, n, c))


@lru_cache(maxsize=None)
def _dist(key: tuple, metric: str, gamma: Fraction | None = None) -> dict:
    return dict(weight_distribution(_code(*key), metric, gamma).counts)


_RADII: dict[tuple, Fraction | ResourceLimitError] = {}


def _radius(key: tuple, metric: str, max_frontier: int) -> Fraction:
    """Covering radius with gamma = 2^q for the hom metric; refusals are remembered too."""
    slot = (key, metric, max_frontier)
    if slot not in _RADII:
        try:
            _RADII[slot] = Fraction(covering_radius(_code(*key), metric, max_frontier=max_frontier).value)
        except ResourceLimitError as exc:
            _RADII[slot] = exc
    got = _RADII[slot]
    if isinstance(got, ResourceLimitError):
        raise got
    return got


def _gamma(norm: str, q: int) -> Fraction:
    if "gamma=2^(q-1)" in norm:
        return Fraction(1 << (q - 1))
    return Fraction(1 << q)


def _hom_radius(key: tuple, q: int, norm: str, budget: AuditBudget) -> Fraction:
    # hom weights are gamma times a fixed table, so radii scale linearly in gamma
    return _radius(key, "hom", budget.max_frontier) * _gamma(norm, q) / (1 << q)


def _ceiling(q: int, n: int, metric: str, norm: str = "-") -> Fraction:
    ring = make_ring(q, _gamma(norm, q) if metric == "hom" else None)
    return Fraction(max_distance(ring, n, metric))


GAMMAS = ("gamma=2^q", "gamma=2^(q-1)")


def _iter_project(G: RqMatrix) -> RqMatrix:
    while G.ring.q > 1:
        G = project_matrix(G)
    return G


def _row_weights(G: RqMatrix, scalar: int, metric: str, gamma: Fraction | None = None) -> list:
    ring = G.ring if gamma is None else G.ring.with_gamma(gamma)
    t, den = weight_table(ring, metric)
    out = []
    for i in range(G.rows):
        row = scale_array(ring.q, scalar, G.entries[i])
        out.append(_plain(Fraction(int(t[row].sum()), den)))
    return out


# ---------------------------------------------------------------- point sets


def _alpha_points(b: AuditBudget) -> list[dict]:
    return [{"q": q, "k": k} for q in b.qs() for k in b.ks()]


def _beta_points(b: AuditBudget) -> list[dict]:
    return [{"q": q, "k": k} for q in b.qs() for k in b.ks(2)]


def _proj_points(family_points: Callable[[AuditBudget], list[dict]]) -> Callable[[AuditBudget], list[dict]]:
    return lambda b: [p for p in family_points(b) if p["q"] >= 2]


def _mac_points(b: AuditBudget) -> list[dict]:
    return [{"q": q, "k": k, "u": u} for q in b.qs() for k in b.ks(2) for u in range(1, k)]


def _mac_e_points(b: AuditBudget) -> list[dict]:
    return [dict(p, e=e) for p in _mac_points(b) for e in range(p["u"] + 1, p["k"] + 1)]


def _ring_points(b: AuditBudget) -> list[dict]:
    return [{"q": q} for q in range(1, min(b.max_q, 3) + 1)]


def _type1_elements(q: int) -> list[int]:
    ring = make_ring(q)
    if q <= 2:
        return [c for c in range(1, ring.size) if c != ring.theta_mask]
    # one representative per monomial plus the all-ones element
    reps = [1 << A for A in range(ring.nbits - 1)] + [ring.size - 1]
    return sorted(set(reps))


def _rep1_points(b: AuditBudget) -> list[dict]:
    return [{"q": q, "n": n, "c": c} for q in b.qs() for n in b.ns() for c in _type1_elements(q)]


def _rep2_points(b: AuditBudget) -> list[dict]:
    return [{"q": q, "n": n} for q in b.qs() for n in b.ns()]


def _block_points(b: AuditBudget) -> list[dict]:
    return [{"q": q, "n": n} for q in b.qs() for n in b.ns()]


def _type_points(family_points: Callable[[AuditBudget], list[dict]]) -> Callable[[AuditBudget], list[dict]]:
    return lambda b: [dict(p, m=m) for p in family_points(b) for m in range(0, p["q"] + 1)]


def _with_unit_coordinate(words: np.ndarray) -> np.ndarray:
    return words[np.any(words & 1, axis=1)]


# ---------------------------------------------------------------- ring claims


def _run_units(p: dict, norm: str, b: AuditBudget) -> Outcome:
    ring = make_ring(p["q"])
    units = sum(1 for x in elements_iter(ring) if is_unit(x))
    claimed = {"units": pow2(ring.nbits - 1), "non-units": pow2(ring.nbits - 1)}
    return _eq(claimed, {"units": units, "non-units": ring.size - units})


def _run_charsum(p: dict, norm: str, b: AuditBudget) -> Outcome:
    ring = make_ring(p["q"])
    elems = list(elements_iter(ring))
    bad = 0
    for x in elems:
        if x.mask in (0, ring.theta_mask):
            continue
        if sum(chi(mul(a, x)) for a in elems) != 0:
            bad += 1
    return _eq({"nonzero sums": 0}, {"nonzero sums": bad})


def _run_hom_weight(p: dict, norm: str, b: AuditBudget) -> Outcome:
    ring = make_ring(p["q"], _gamma(norm, p["q"]))
    diff = sum(1 for x in elements_iter(ring) if hom_weight_closed(x) != hom_weight_character(x))
    return _eq({"disagreements": 0}, {"disagreements": diff})


# ---------------------------------------------------------------- Gray-image parameter claims


def _gray_params(C: CodeOverRq, map: str, mode: str) -> dict:
    img = gray_image_code(C, map, mode)
    return {"linear": img.is_linear(), "dimension": img.rank, "min_distance": img.min_distance()}


def _small_codes(b: AuditBudget) -> list[dict]:
    pts = [{"q": q, "k": k} for q in b.qs() for k in range(1, min(b.max_k, 2) + 1)]
    return [p for p in pts if (1 << (1 << p["q"])) ** p["k"] <= 1 << 16]


def _run_lee_length(p: dict, norm: str, b: AuditBudget) -> Outcome:
    q, k = p["q"], p["k"]
    C = _code("sa", q, k)
    claimed = pow2(1 << q) * C.n
    return _eq(claimed, gray_image_code(C, "lee").n, "image length of S^alpha")


def _run_lee_params(p: dict, norm: str, b: AuditBudget) -> Outcome:
    q, k = p["q"], p["k"]
    C = _code("sa", q, k)
    d_lee = min(w for w in _dist(("sa", q, k), "lee") if w)
    claimed = {"linear": True, "dimension": C.two_dim, "min_distance": d_lee}
    return _eq(claimed, _gray_params(C, "lee", "linear"), "image of S^alpha")


def _run_hom_length(p: dict, norm: str, b: AuditBudget) -> Outcome:
    q, k = p["q"], p["k"]
    C = _code("sa", q, k)
    claimed = pow2(1 << (q + 1)) * C.n
    return _eq(claimed, gray_image_code(C, "hom", norm.split("=")[1]).n, "image length of S^alpha")


def _run_hom_params(p: dict, norm: str, b: AuditBudget) -> Outcome:
    q, k = p["q"], p["k"]
    C = _code("sa", q, k)
    d_hom = min(w for w in _dist(("sa", q, k), "hom") if w)
    claimed = {"linear": True, "dimension": C.two_dim, "min_distance": d_hom}
    return _eq(claimed, _gray_params(C, "hom", norm.split("=")[1]), "image of S^alpha, gamma=2^q")


# ---------------------------------------------------------------- covering-radius generalities


def _transfer_points(b: AuditBudget) -> list[dict]:
    pts = [{"q": 1, "n": n, "c": c} for n in range(1, 4) for c in (1, 2, 3)]
    pts += [{"q": 2, "n": n, "c": c} for n in (1, 2) for c in (1, 2, 8, 15)]
    return [p for p in pts if p["q"] <= b.max_q]


def _run_transfer(p: dict, norm: str, b: AuditBudget) -> Outcome:
    C = _code("rep", p["q"], n=p["n"], c=p["c"])
    brute = covering_radius_exhaustive(C, "lee").value
    return _eq(brute, covering_radius_gray_syndrome(C).value, "exhaustive Lee radius vs Hamming radius of the image")


def _compose_points(b: AuditBudget) -> list[dict]:
    return [{"q": 1, "n0": n0, "n1": n1} for n0 in (1, 2) for n1 in (1, 2)]


def _run_compose(p: dict, norm: str, b: AuditBudget) -> Outcome:
    ring = make_ring(1)
    G0 = repetition_generator(ring.theta, p["n0"])
    G1 = repetition_generator(ring.one, p["n1"])
    r0 = covering_radius_exhaustive(enumerate_code(G0), "lee").value
    r1 = covering_radius_exhaustive(enumerate_code(G1), "lee").value
    if norm == "stacked-upper":
        z0 = np.zeros((1, p["n0"]), dtype=ring.dtype)
        z1 = np.zeros((1, p["n1"]), dtype=ring.dtype)
        G = RqMatrix(ring, np.vstack([np.hstack([z0, G1.entries]), np.hstack([G0.entries, z1])]))
        r = covering_radius_exhaustive(enumerate_code(G), "lee").value
        ok = r <= r0 + r1
    else:
        G = G0.hstack(G1)
        r = covering_radius_exhaustive(enumerate_code(G), "lee").value
        ok = r >= r0 + r1
    return Outcome(
        {"bound": r0 + r1, "relation": "<=" if norm == "stacked-upper" else ">="},
        {"radius": r},
        AGREE if ok else MISMATCH,
        "C0 = theta-repetition, C1 = 1-repetition, Lee metric",
    )


# ---------------------------------------------------------------- row-weight claims (alpha)


def _fermat_product(q: int) -> int:
    """3 * 5 * 17 * ... over the first q Fermat numbers, i.e. 2^(2^q) - 1."""
    out = 1
    for i in range(q):
        out *= (1 << (1 << i)) + 1
    return out


def _run_rows_ham(p: dict, norm: str, b: AuditBudget) -> Outcome:
    q, k = p["q"], p["k"]
    G = _generator("sa", q, k)
    claimed = _fermat_product(q) * pow2((1 << q) * k - (1 << q))
    computed = sorted(set(_row_weights(G, 1, "hamming")))
    return _eq([claimed], computed, "the product read as the first q Fermat numbers")


def _run_rows_ham_ui(p: dict, norm: str, b: AuditBudget) -> Outcome:
    q, k = p["q"], p["k"]
    G = _generator("sa", q, k)
    computed = sorted({w for i in range(q) for w in _row_weights(G, 1 << (1 << i), "hamming")})
    claimed = f"3*5*17*257*...*2^({(1 << q) * k - (1 << (q - 1))})"
    return Outcome(claimed, computed, SKIPPED, "the extent of the Fermat product is not stated; no single reading")


def _run_rows_ham_theta(p: dict, norm: str, b: AuditBudget) -> Outcome:
    q, k = p["q"], p["k"]
    G = _generator("sa", q, k)
    ring = G.ring
    return _eq([pow2((1 << q) * k - 1)], sorted(set(_row_weights(G, ring.theta_mask, "hamming"))))


def _monomial_scalars(q: int) -> list[int]:
    """1, u_1, ..., u_q and u_1...u_q as masks."""
    ring = make_ring(q)
    return sorted({1} | {1 << (1 << i) for i in range(q)} | {ring.theta_mask})


def _run_rows_lee(p: dict, norm: str, b: AuditBudget) -> Outcome:
    q, k = p["q"], p["k"]
    G = _generator("sa", q, k)
    computed = sorted({w for s in _monomial_scalars(q) for w in _row_weights(G, s, "lee")})
    return _eq([pow2((1 << q) * k + q - 1)], computed)


def _run_rows_hom(p: dict, norm: str, b: AuditBudget) -> Outcome:
    q, k = p["q"], p["k"]
    G = _generator("sa", q, k)
    g = _gamma(norm, q)
    computed = sorted({w for s in _monomial_scalars(q) for w in _row_weights(G, s, "hom", g)})
    return _eq([pow2((1 << q) * k)], computed)


def _run_occurrences_alpha(p: dict, norm: str, b: AuditBudget) -> Outcome:
    q, k = p["q"], p["k"]
    C = _code("sa", q, k)
    words = _with_unit_coordinate(C.codewords)
    size = C.ring.size
    counts = set()
    for w in words:
        counts |= set(np.bincount(w.astype(np.int64), minlength=size).tolist())
    return _eq([pow2((1 << q) * (k - 1))], sorted(counts), "occurrence counts over codewords with a unit coordinate")


# ---------------------------------------------------------------- type counts and distributions (alpha)


def _run_types(p: dict, norm: str, b: AuditBudget) -> Outcome:
    q, k, m = p["q"], p["k"], p["m"]
    claimed = pow2((m - 1) * k) * ((1 << k) - 1)
    level = q + 1 - m
    counts = count_types(_code("sa", q, k))
    note = "type m read as least filtration level q+1-m (m=0: the zero word)"
    return _value_check(claimed, lambda: counts[level], note=note)


def _run_alpha_ham(p: dict, norm: str, b: AuditBudget) -> Outcome:
    q, k, m = p["q"], p["k"], p["m"]
    weight = pow2((1 << q) * k - m) * ((1 << m) - 1)
    count = pow2((m - 1) * k) * ((1 << m) - 1)
    n = _generator("sa", q, k).cols
    return _distribution_check({weight: count}, _dist(("sa", q, k), "hamming"), _ceiling(q, n, "hamming"), complete=False)


def _run_alpha_lee(p: dict, norm: str, b: AuditBudget) -> Outcome:
    q, k = p["q"], p["k"]
    n = _generator("sa", q, k).cols
    claimed = {0: 1, pow2((1 << q) * k + q - 1): pow2((1 << q) * k) - 1}
    return _distribution_check(claimed, _dist(("sa", q, k), "lee"), _ceiling(q, n, "lee"))


def _run_alpha_hom(p: dict, norm: str, b: AuditBudget) -> Outcome:
    q, k = p["q"], p["k"]
    n = _generator("sa", q, k).cols
    g = _gamma(norm, q)
    claimed = {0: 1, pow2((1 << q) * k): pow2((1 << q) * k) - 1}
    return _distribution_check(claimed, _dist(("sa", q, k), "hom", g), _ceiling(q, n, "hom", norm))


# ---------------------------------------------------------------- structural (concatenation) claims


def _multiplicity_check(claimed: Fraction | int, M, B, note: str = "") -> Outcome:
    c = Fraction(claimed)
    computed = concatenation_multiplicity(M, B)
    if c.denominator != 1 or c < 1:
        return Outcome(c, computed, INFEASIBLE, _join(note, "copy count is not a positive integer"))
    return _eq(c, computed, note)


def _run_torsion_alpha(p: dict, norm: str, b: AuditBudget) -> Outcome:
    q, k = p["q"], p["k"]
    G = _generator("sa", q, k)
    T = torsion_generator(G)
    same = torsion_code(_code("sa", q, k), tuple(range(1, q + 1))) == BinaryCode.from_generator(T)
    note = "torsion generator vs copies of the binary simplex G_k" + ("" if same else "; torsion code != span of generator")
    return _multiplicity_check(pow2(((1 << q) - 1) * k), T, binary_simplex_alpha(k), note)


def _run_residue(p: dict, norm: str, b: AuditBudget) -> Outcome:
    q, k = p["q"], p["k"]
    C = _code("sa", q, k)
    literal = torsion_code(C, ())
    formula = residue_code(C)
    note = "|Tor_empty(C)| vs |{u : u + u_theta v in C}|"
    if literal != formula:
        note += "; the two readings of the residue code differ"
    return _eq(len(literal), len(formula), note)


def _run_projection(family: str) -> Callable[[dict, str, AuditBudget], Outcome]:
    def run(p: dict, norm: str, b: AuditBudget) -> Outcome:
        q, k, u = p["q"], p["k"], p.get("u", 0)
        top = _generator(family, q, k, u)
        low = _generator_low(family, q - 1, k, u)
        if norm.startswith("proof"):
            claimed = pow2(2 * k)
        else:
            claimed = pow2((1 << (q - 1)) * k)
        return _multiplicity_check(claimed, project_matrix(top), low)

    return run


def _generator_low(family: str, q: int, k: int, u: int) -> RqMatrix:
    return _generator(family, q, k, u)


def _run_iterated(family: str) -> Callable[[dict, str, AuditBudget], Outcome]:
    def run(p: dict, norm: str, b: AuditBudget) -> Outcome:
        q, k, u = p["q"], p["k"], p.get("u", 0)
        top = _generator(family, q, k, u)
        low = _generator(family, 1, k, u)
        if norm == "reading=2^(q-1)k":
            claimed = pow2((1 << (q - 1)) * k)
        elif norm == "reading=2^(q(q-1)/2)k":
            claimed = pow2(pow2(Fraction(q * (q - 1), 2)) * k)
        else:  # exponent 2^(q(q-1)k/2)
            claimed = pow2(pow2(Fraction(q * (q - 1) * k, 2)))
        return _multiplicity_check(claimed, _iter_project(top), low)

    return run


def _run_gray_copies(family: str, map: str, binary: Callable[[int, int], np.ndarray], claimed_fn) -> Callable:
    def run(p: dict, norm: str, b: AuditBudget) -> Outcome:
        q, k, u = p["q"], p["k"], p.get("u", 0)
        G = _generator(family, q, k, u)
        img = gray_image_matrix(G, map, "linear")
        return _multiplicity_check(claimed_fn(q, k, u), img, binary(k, u), f"{map} image of the generator, linear mode")

    return run


def _image_width(q: int, map: str) -> int:
    return (1 << q) * (2 if map == "hom" else 1)


def _image_min_weight(C: CodeOverRq, map: str) -> int | None:
    """Least nonzero Hamming weight of the (linear-mode) Gray image, from per-symbol weights.

    Both maps are injective and F_2-linear, so the image's nonzero words are
    exactly the images of nonzero codewords.
    """
    table = lee_gray_table(C.ring.q) if map == "lee" else hom_gray_table(C.ring.q, "linear")
    w = table.sum(axis=1, dtype=np.int64)[C.codewords].sum(axis=1)
    w = w[w > 0]
    return int(w.min()) if len(w) else None


def _run_gray_params(family: str, map: str, length_fn, dmin_fn) -> Callable:
    def run(p: dict, norm: str, b: AuditBudget) -> Outcome:
        q, k, u = p["q"], p["k"], p.get("u", 0)
        C = _code(family, q, k, u)
        claimed = {"length": length_fn(q, k, u), "min_distance": dmin_fn(q, k, u)}
        computed = {"length": C.n * _image_width(q, map), "min_distance": _image_min_weight(C, map)}
        for key, v in claimed.items():
            if Fraction(v).denominator != 1 or v < 0:
                return Outcome(claimed, computed, INFEASIBLE, f"claimed {key} is not a non-negative integer")
        return _eq(claimed, computed, f"{map} image code, linear mode")

    return run


# ---------------------------------------------------------------- beta row claims


def _run_beta_rows_counts(p: dict, norm: str, b: AuditBudget) -> Outcome:
    q, k = p["q"], p["k"]
    G = _generator("sb", q, k)
    size = G.ring.size
    units, zd = set(), set()
    for row in G.entries:
        bc = np.bincount(row.astype(np.int64), minlength=size)
        units.add(int(bc[1::2].sum()))
        zd |= set(bc[0::2].tolist())
    claimed = {
        "unit entries": [pow2((1 << q) * (k - 1))],
        "each zero divisor": [pow2(((1 << q) - 1) * (k - 2)) * ((1 << (k - 1)) - 1)],
    }
    return _eq(claimed, {"unit entries": sorted(units), "each zero divisor": sorted(zd)}, "over all rows")


def _run_beta_codeword_counts(p: dict, norm: str, b: AuditBudget) -> Outcome:
    q, k = p["q"], p["k"]
    C = _code("sb", q, k)
    size = C.ring.size
    units, zd = set(), set()
    for w in _with_unit_coordinate(C.codewords):
        bc = np.bincount(w.astype(np.int64), minlength=size)
        units.add(int(bc[1::2].sum()))
        zd |= set(bc[0::2].tolist())
    claimed = {
        "unit entries": [pow2((1 << q) * (k - 1))],
        "each zero divisor": [pow2(((1 << q) - 1) * (k - 2)) * ((1 << (k - 1)) - 1)],
    }
    return _eq(claimed, {"unit entries": sorted(units), "each zero divisor": sorted(zd)}, "codewords with a unit coordinate")


def _run_beta_rows_ham(p: dict, norm: str, b: AuditBudget) -> Outcome:
    q, k = p["q"], p["k"]
    G = _generator("sb", q, k)
    claimed = f"2^({((1 << q) - 1) * (k - 1) - (1 << q)})*(3*5*17*257*...*(2^{k}-1)+1)"
    return Outcome(claimed, _row_weights(G, 1, "hamming"), SKIPPED, "the product's factors are not determined; no single reading")


def _run_beta_row1_lee(p: dict, norm: str, b: AuditBudget) -> Outcome:
    q, k = p["q"], p["k"]
    G = _generator("sb", q, k)
    s = 1 << q
    claimed = pow2(s * (k - 1)) + pow2(s * k - (s - 1)) - pow2(4 * k - (s - 2))
    return _value_check(claimed, lambda: _row_weights(G, 1, "lee")[0], ceiling=_ceiling(q, G.cols, "lee"), note="first row")


def _run_beta_rows_hom(p: dict, norm: str, b: AuditBudget) -> Outcome:
    q, k = p["q"], p["k"]
    G = _generator("sb", q, k)
    claimed = pow2(((1 << q) - 1) * k - 1) * ((1 << k) - 1)
    return _eq([claimed], sorted(set(_row_weights(G, 1, "hom", _gamma(norm, q)))))


def _run_torsion_beta(p: dict, norm: str, b: AuditBudget) -> Outcome:
    q, k = p["q"], p["k"]
    T = torsion_generator(_generator("sb", q, k))
    return _multiplicity_check(pow2(((1 << q) - 1) * (k - 2)), T, binary_simplex_beta(k), "torsion generator vs copies of the binary type-beta simplex")


def _run_beta_ham(p: dict, norm: str, b: AuditBudget) -> Outcome:
    q, k, m = p["q"], p["k"], p["m"]
    weight = pow2(((1 << q) - 1) * (k - 1)) * (pow2(k - m) * ((1 << m) - 1) + (pow2(1 - m) - 1))
    count = pow2((m - 1) * k) * ((1 << m) - 1)
    n = _generator("sb", q, k).cols
    return _distribution_check({weight: count}, _dist(("sb", q, k), "hamming"), _ceiling(q, n, "hamming"), complete=False)


def _run_beta_hom(p: dict, norm: str, b: AuditBudget) -> Outcome:
    q, k = p["q"], p["k"]
    n = _generator("sb", q, k).cols
    claimed = {0: 1, pow2(((1 << q) - 1) * k - 1) * ((1 << k) - 1): (1 << k) * (pow2(((1 << q) - 1) * k) - 1)}
    return _distribution_check(claimed, _dist(("sb", q, k), "hom", _gamma(norm, q)), _ceiling(q, n, "hom", norm))


# ---------------------------------------------------------------- MacDonald claims


def _mac_key(family: str, p: dict) -> tuple:
    return (family, p["q"], p["k"], p["u"])


def _run_mac_torsion(family: str) -> Callable:
    def run(p: dict, norm: str, b: AuditBudget) -> Outcome:
        q, k, u = p["q"], p["k"], p["u"]
        s = 1 << q
        T = torsion_code(_code(family, q, k, u), tuple(range(1, q + 1)))
        if family == "ma":
            length = pow2(s * k) - pow2(s * u)
            d = pow2(s * k - 1) - pow2(s * u - 1)
            top = pow2(s * k - 1)
        else:
            length = pow2((s - 1) * (k - 1)) * ((1 << k) - 1) - pow2((s - 1) * (u - 1)) * ((1 << u) - 1)
            d = pow2(s * k - s) - pow2(s * u - s)
            top = pow2(s * k - s)
        if norm == "parameters":
            claimed = {"length": length, "dimension": k, "min_distance": d}
            computed = {"length": T.n, "dimension": T.rank, "min_distance": T.min_distance()}
            return _eq(claimed, computed, "torsion code (coefficient of u_1...u_q)")
        claimed = {0: 1, d: pow2(k) - pow2(k - u), top: pow2(k - u) - 1}
        return _distribution_check(claimed, T.weight_distribution(), Fraction(T.n), "torsion code weight distribution")

    return run


def _run_mac_weights(family: str, metric: str) -> Callable:
    def run(p: dict, norm: str, b: AuditBudget) -> Outcome:
        q, k, u = p["q"], p["k"], p["u"]
        s = 1 << q
        n = _generator(family, q, k, u).cols
        if metric == "hamming":
            claimed = {0: 1, pow2(s * k - 1) - pow2(s * u - 1): pow2(k) - pow2(k - u), pow2(s * k - 1): pow2(k - u) - 1}
            dist = _dist(_mac_key(family, p), "hamming")
        else:
            claimed = {
                0: 1,
                pow2(s * k + 1): pow2(s * (k - u)) - 1,
                pow2(s * k + 1) - pow2(s * u + 1): pow2(s * (k - u)) * (pow2(s * u) - 1),
            }
            g = _gamma(norm, q) if metric == "hom" else None
            dist = _dist(_mac_key(family, p), metric, g)
        return _distribution_check(claimed, dist, _ceiling(q, n, metric, norm))

    return run


def _mac_alpha_copies(extra: int) -> Callable:
    def f(q: int, k: int, u: int) -> Fraction:
        s = 1 << q
        return (pow2(s * k + q + extra) - pow2(s * u + q + extra)) / ((1 << k) - (1 << u))

    return f


def _mac_beta_len(extra: int) -> Callable:
    def f(q: int, k: int, u: int) -> Fraction:
        s = 1 << q
        return pow2((s - 1) * (k - 1) + q + extra) * ((1 << k) - 1) - pow2((s - 1) * (u - 1) + q + extra) * ((1 << u) - 1)

    return f


def _binary_mac(k: int, u: int) -> np.ndarray:
    return binary_macdonald(k, u)


# ---------------------------------------------------------------- covering radii


def _radius_check(key: tuple, q: int, n: int, metric: str, claimed: Fraction, norm: str, b: AuditBudget, note: str = "") -> Outcome:
    if metric == "hom":
        oracle = lambda: _hom_radius(key, q, norm, b)  # noqa: E731
    else:
        oracle = lambda: _radius(key, metric, b.max_frontier)  # noqa: E731
    return _value_check(claimed, oracle, ceiling=_ceiling(q, n, metric, norm), integral=False, note=note)


def _run_rep_radius(theta: bool, metric: str) -> Callable:
    def run(p: dict, norm: str, b: AuditBudget) -> Outcome:
        q, n = p["q"], p["n"]
        c = make_ring(q).theta_mask if theta else p["c"]
        key = ("rep", q, 0, 0, n, c)
        if theta and metric == "hom":
            claimed = pow2(q + 1) * n
        else:
            claimed = pow2(q) * n
        return _radius_check(key, q, n, metric, claimed, norm, b)

    return run


def _run_block_radius(metric: str) -> Callable:
    def run(p: dict, norm: str, b: AuditBudget) -> Outcome:
        q, n = p["q"], p["n"]
        s = 1 << q
        key = ("block", q, 0, 0, n, 0)
        length = (pow2(s) - 1) * n
        claimed = pow2(s + q) * n if metric == "hom" else (pow2(s) - 1) * pow2(q - 1) * n
        return _radius_check(key, q, int(length), metric, claimed, norm, b)

    return run


def _run_family_radius(family: str, metric: str, formula: Callable) -> Callable:
    def run(p: dict, norm: str, b: AuditBudget) -> Outcome:
        q, k, u = p["q"], p["k"], p.get("u", 0)
        key = (family, q, k, u, 0, 0)
        n = _generator(family, q, k, u).cols
        return _radius_check(key, q, n, metric, formula(q, k, u, norm), norm, b)

    return run


def _sb_hom_formula(q: int, k: int, u: int, norm: str) -> Fraction:
    s = 1 << q
    if norm.startswith("reading=A"):
        inner = pow2(s) * (k - pow2(-q))
    else:
        inner = pow2(s) * k - pow2(-q)
    return pow2(s * (k - 2) + q) * (inner + 4 - pow2(-q + 1))


def _run_mac_radius_bound(family: str) -> Callable:
    def run(p: dict, norm: str, b: AuditBudget) -> Outcome:
        q, k, u, e = p["q"], p["k"], p["u"], p["e"]
        s = 1 << q
        if family == "ma":
            head = pow2(s * k) - pow2(s * u)
        else:
            head = pow2((s - 1) * (k - 1)) * ((1 << k) - 1) - pow2((s - 1) * (u - 1)) * ((1 << u) - 1)
        try:
            r_k = _hom_radius((family, q, k, u, 0, 0), q, norm, b)
            r_e = _hom_radius((family, q, e, u, 0, 0), q, norm, b)
        except ResourceLimitError as exc:
            return Outcome(f"r(k) <= {head} + r(e)", None, SKIPPED, str(exc))
        bound = head + r_e
        return Outcome({"bound": bound}, {"radius": r_k}, AGREE if r_k <= bound else MISMATCH, "upper-bound claim")

    return run


# ---------------------------------------------------------------- catalog


def _s(q: int) -> int:
    return 1 << q


CATALOG: tuple[AuditClaim, ...] = (
    # ring
    AuditClaim("prop-2.2-units", "Proposition 2.2", _ring_points, _run_units, formula="|U| = |D| = 2^(2^q-1)"),
    AuditClaim("lem-2.6-charsum", "Lemma 2.6", _ring_points, _run_charsum, formula="sum_a chi(a x) = 0 for x not in {0, theta}"),
    AuditClaim("thm-2.7-hom-weight", "Theorem 2.7", _ring_points, _run_hom_weight, GAMMAS, "w_hom = 0 / 2 gamma / gamma"),
    AuditClaim("lem-2.3-length", "Lemma 2.3", _small_codes, _run_lee_length, formula="Lee image length 2^(2^q) n"),
    AuditClaim("lem-2.3-params", "Lemma 2.3", _small_codes, _run_lee_params, formula="Lee image linear, dim = 2-dim, d = d_Lee"),
    AuditClaim("lem-2.8-length", "Lemma 2.8", _small_codes, _run_hom_length, ("mode=linear", "mode=weight-exact"), "hom image length 2^(2^(q+1)) n"),
    AuditClaim("lem-2.8-params", "Lemma 2.8", _small_codes, _run_hom_params, ("mode=linear", "mode=weight-exact"), "hom image linear, dim = 2-dim, d = d_hom"),
    AuditClaim("prop-2.12-transfer", "Proposition 2.12", _transfer_points, _run_transfer, formula="r_Lee(C) = r_Ham(Lee image)"),
    AuditClaim("prop-2.13-compose", "Proposition 2.13", _compose_points, _run_compose, ("stacked-upper", "concatenation-lower"), "r <= r0 + r1 / r_c >= r0 + r1"),
    # simplex alpha
    AuditClaim("rem-3.2-i-ham", "Remark 3.2(i)", _alpha_points, _run_rows_ham, formula="w_Ham(l_i) = (2^(2^q)-1) 2^(2^q k - 2^q)"),
    AuditClaim("rem-3.2-i-ham-ui", "Remark 3.2(i)", _alpha_points, _run_rows_ham_ui, formula="w_Ham(u_j l_i) = Fermat product * 2^(2^q k - 2^(q-1))"),
    AuditClaim("rem-3.2-i-ham-theta", "Remark 3.2(i)", _alpha_points, _run_rows_ham_theta, formula="w_Ham(theta l_i) = 2^(2^q k - 1)"),
    AuditClaim("rem-3.2-ii-lee", "Remark 3.2(ii)", _alpha_points, _run_rows_lee, formula="w_Lee(m l_i) = 2^(2^q k + q - 1)"),
    AuditClaim("rem-3.2-iii-hom", "Remark 3.2(iii)", _alpha_points, _run_rows_hom, GAMMAS, "w_hom(m l_i) = 2^(2^q k)"),
    AuditClaim("lem-3.3-occurrences", "Lemma 3.3", _alpha_points, _run_occurrences_alpha, formula="each element 2^(2^q (k-1)) times"),
    AuditClaim("lem-3.4-types", "Lemma 3.4", _type_points(_alpha_points), _run_types, formula="#type m = 2^((m-1)k)(2^k-1)"),
    AuditClaim("thm-3.5-i", "Theorem 3.5(i)", _type_points(_alpha_points), _run_alpha_ham, formula="A_Ham(2^(2^q k-m)(2^m-1)) = 2^((m-1)k)(2^m-1)"),
    AuditClaim("thm-3.5-ii", "Theorem 3.5(ii)", _alpha_points, _run_alpha_lee, formula="A_Lee(2^(2^q k+q-1)) = 2^(2^q k)-1"),
    AuditClaim("thm-3.5-iii", "Theorem 3.5(iii)", _alpha_points, _run_alpha_hom, GAMMAS, "A_hom(2^(2^q k)) = 2^(2^q k)-1"),
    AuditClaim("eq-1-residue", "Section 2, Eq. (1)", _alpha_points, _run_residue, formula="Tor_empty(C) = Res(C)"),
    AuditClaim("lem-3.6-torsion", "Lemma 3.6", _alpha_points, _run_torsion_alpha, formula="torsion = 2^((2^q-1)k) copies of G_k"),
    AuditClaim("thm-3.7-projection", "Theorem 3.7", _proj_points(_alpha_points), _run_projection("sa"), formula="Gamma_q(G) = 2^(2^(q-1)k) copies"),
    AuditClaim(
        "thm-3.8-iterated",
        "Theorem 3.8",
        _proj_points(_alpha_points),
        _run_iterated("sa"),
        ("reading=2^(q-1)k", "reading=2^(q(q-1)/2)k"),
        "iterated projection = 2^(2^(...)k) copies of G_(1,k)",
    ),
    AuditClaim(
        "thm-3.10-copies",
        "Theorem 3.10",
        _alpha_points,
        _run_gray_copies("sa", "lee", lambda k, u: binary_simplex_alpha(k), lambda q, k, u: pow2((_s(q) - 1) * k + q)),
        formula="Lee image = 2^((2^q-1)k+q) binary simplex copies",
    ),
    AuditClaim(
        "thm-3.10-params",
        "Theorem 3.10",
        _alpha_points,
        _run_gray_params("sa", "lee", lambda q, k, u: pow2(_s(q) * k + q), lambda q, k, u: pow2(_s(q) * k + q - 1)),
        formula="[2^(2^q k+q), ., 2^(2^q k+q-1)]",
    ),
    AuditClaim(
        "thm-3.11-copies",
        "Theorem 3.11",
        _alpha_points,
        _run_gray_copies("sa", "hom", lambda k, u: binary_simplex_alpha(k), lambda q, k, u: pow2((_s(q) - 1) * k + q + 1)),
        formula="hom image = 2^((2^q-1)k+q+1) binary simplex copies",
    ),
    AuditClaim(
        "thm-3.11-params",
        "Theorem 3.11",
        _alpha_points,
        _run_gray_params("sa", "hom", lambda q, k, u: pow2(_s(q) * k + q + 1), lambda q, k, u: pow2(_s(q) * k + q)),
        formula="[2^(2^q k+q+1), ., 2^(2^q k+q)]",
    ),
    # simplex beta
    AuditClaim("prop-4.2-i", "Proposition 4.2(i)", _beta_points, _run_beta_rows_counts, formula="row entry counts"),
    AuditClaim("prop-4.2-ii", "Proposition 4.2(ii)", _beta_points, _run_beta_rows_ham, formula="w_Ham(l_j) product expression"),
    AuditClaim("prop-4.2-lee", "Proposition 4.2", _beta_points, _run_beta_row1_lee, formula="w_Lee(l_1) = 2^(2^q(k-1)) + 2^(2^q k-(2^q-1)) - 2^(4k-(2^q-2))"),
    AuditClaim("prop-4.2-iii", "Proposition 4.2(iii)", _beta_points, _run_beta_rows_hom, GAMMAS, "w_hom(l_j) = 2^((2^q-1)k-1)(2^k-1)"),
    AuditClaim("prop-4.3-occurrences", "Proposition 4.3", _beta_points, _run_beta_codeword_counts, formula="codeword entry counts"),
    AuditClaim("lem-4.4-torsion", "Lemma 4.4", _beta_points, _run_torsion_beta, formula="torsion = 2^((2^q-1)(k-2)) copies of the type-beta binary simplex"),
    AuditClaim("thm-4.5-i", "Theorem 4.5(i)", _type_points(_beta_points), _run_beta_ham, formula="A_Ham(...) = 2^((m-1)k)(2^m-1)"),
    AuditClaim("thm-4.5-ii", "Theorem 4.5(ii)", _beta_points, _run_beta_hom, GAMMAS, "A_hom(2^((2^q-1)k-1)(2^k-1)) = 2^k(2^((2^q-1)k)-1)"),
    AuditClaim(
        "thm-4.6-projection",
        "Theorem 4.6",
        _proj_points(_beta_points),
        _run_projection("sb"),
        ("statement=2^(2^(q-1)k)", "proof=2^(2k)"),
        "Gamma_q(G^beta) = copies of G^beta over R_(q-1)",
    ),
    AuditClaim(
        "thm-4.7-iterated",
        "Theorem 4.7",
        _proj_points(_beta_points),
        _run_iterated("sb"),
        ("reading=2^(q-1)k", "reading=2^(q(q-1)/2)k"),
        "iterated projection of G^beta",
    ),
    AuditClaim(
        "thm-4.8-copies",
        "Theorem 4.8",
        _beta_points,
        _run_gray_copies("sb", "lee", lambda k, u: binary_simplex_beta(k), lambda q, k, u: pow2((pow2(_s(q)) - 1) * (k - 1) + q)),
        formula="Lee image = 2^((2^(2^q)-1)(k-1)+q) copies",
    ),
    AuditClaim(
        "thm-4.8-params",
        "Theorem 4.8",
        _beta_points,
        _run_gray_params(
            "sb",
            "lee",
            lambda q, k, u: pow2((pow2(_s(q)) - 1) * (k - 1) + q) * ((1 << k) - 1),
            lambda q, k, u: pow2(((1 << (q - 1)) - 2) * k + q),
        ),
        formula="[2^((2^(2^q)-1)(k-1)+q)(2^k-1), ., 2^((2^(q-1)-2)k+q)]",
    ),
    AuditClaim(
        "thm-4.9-copies",
        "Theorem 4.9",
        _beta_points,
        _run_gray_copies("sb", "hom", lambda k, u: binary_simplex_beta(k), lambda q, k, u: pow2((pow2(_s(q)) - 1) * (k - 1) + q + 1)),
        formula="hom image = 2^((2^(2^q)-1)(k-1)+q+1) copies",
    ),
    AuditClaim(
        "thm-4.9-params",
        "Theorem 4.9",
        _beta_points,
        _run_gray_params(
            "sb",
            "hom",
            lambda q, k, u: pow2((pow2(_s(q)) - 1) * (k - 1) + q + 1) * ((1 << k) - 1),
            lambda q, k, u: pow2((pow2(_s(q)) - 2) * (k - 1) + q + 1),
        ),
        formula="[2^((2^(2^q)-1)(k-1)+q+1)(2^k-1), ., 2^((2^(2^q)-2)(k-1)+q+1)]",
    ),
    # MacDonald
    AuditClaim("thm-5.1-alpha", "Theorem 5.1", _proj_points(_mac_points), _run_projection("ma"), formula="Gamma_q(M^alpha) = 2^(2^(q-1)k) copies"),
    AuditClaim("thm-5.1-beta", "Theorem 5.1", _proj_points(_mac_points), _run_projection("mb"), formula="Gamma_q(M^beta) = 2^(2^(q-1)k) copies"),
    AuditClaim("thm-5.2-alpha", "Theorem 5.2", _proj_points(_mac_points), _run_iterated("ma"), ("exponent=2^(q(q-1)k/2)",), "iterated projection of M^alpha"),
    AuditClaim("thm-5.2-beta", "Theorem 5.2", _proj_points(_mac_points), _run_iterated("mb"), ("exponent=2^(q(q-1)k/2)",), "iterated projection of M^beta"),
    AuditClaim("thm-5.3-torsion", "Theorem 5.3", _mac_points, _run_mac_torsion("ma"), ("parameters", "distribution"), "torsion of M^alpha"),
    AuditClaim("thm-5.4-i", "Theorem 5.4(i)", _mac_points, _run_mac_weights("ma", "hamming"), formula="Hamming distribution of M^alpha"),
    AuditClaim("thm-5.4-ii", "Theorem 5.4(ii)", _mac_points, _run_mac_weights("ma", "lee"), formula="Lee distribution of M^alpha"),
    AuditClaim("thm-5.4-iii", "Theorem 5.4(iii)", _mac_points, _run_mac_weights("ma", "hom"), GAMMAS, "hom distribution of M^alpha"),
    AuditClaim("thm-5.5-torsion", "Theorem 5.5", _mac_points, _run_mac_torsion("mb"), ("parameters", "distribution"), "torsion of M^beta"),
    AuditClaim(
        "thm-5.6-copies",
        "Theorem 5.6",
        _mac_points,
        _run_gray_copies("ma", "lee", _binary_mac, _mac_alpha_copies(0)),
        formula="Lee image of M^alpha = (2^(2^q k+q)-2^(2^q u+q))/(2^k-2^u) binary MacDonald copies",
    ),
    AuditClaim(
        "thm-5.6-params",
        "Theorem 5.6",
        _mac_points,
        _run_gray_params(
            "ma", "lee", lambda q, k, u: pow2(_s(q) * k + q) - pow2(_s(q) * u + q), lambda q, k, u: pow2(_s(q) * k + q - 1) - pow2(_s(q) * u + q - 1)
        ),
        formula="[2^(2^q k+q)-2^(2^q u+q), ., 2^(2^q k+q-1)-2^(2^q u+q-1)]",
    ),
    AuditClaim(
        "thm-5.7-copies",
        "Theorem 5.7",
        _mac_points,
        _run_gray_copies("ma", "hom", _binary_mac, _mac_alpha_copies(1)),
        formula="hom image of M^alpha copies",
    ),
    AuditClaim(
        "thm-5.7-params",
        "Theorem 5.7",
        _mac_points,
        _run_gray_params(
            "ma", "hom", lambda q, k, u: pow2(_s(q) * k + q + 1) - pow2(_s(q) * u + q + 1), lambda q, k, u: pow2(_s(q) * k + q) - pow2(_s(q) * u + q)
        ),
        formula="[2^(2^q k+q+1)-2^(2^q u+q+1), ., 2^(2^q k+q)-2^(2^q u+q)]",
    ),
    AuditClaim(
        "thm-5.8-copies",
        "Theorem 5.8",
        _mac_points,
        _run_gray_copies("mb", "lee", _binary_mac, lambda q, k, u: _mac_beta_len(0)(q, k, u) / ((1 << k) - (1 << u))),
        formula="Lee image of M^beta copies",
    ),
    AuditClaim(
        "thm-5.8-params",
        "Theorem 5.8",
        _mac_points,
        _run_gray_params("mb", "lee", _mac_beta_len(0), _mac_beta_len(-1)),
        formula="Lee image of M^beta parameters",
    ),
    AuditClaim(
        "thm-5.9-copies",
        "Theorem 5.9",
        _mac_points,
        _run_gray_copies("mb", "hom", _binary_mac, lambda q, k, u: _mac_beta_len(1)(q, k, u) / ((1 << k) - (1 << u))),
        formula="hom image of M^beta copies",
    ),
    AuditClaim(
        "thm-5.9-params",
        "Theorem 5.9",
        _mac_points,
        _run_gray_params("mb", "hom", _mac_beta_len(1), _mac_beta_len(0)),
        formula="hom image of M^beta parameters",
    ),
    # repetition codes
    AuditClaim("thm-6.1-i-lee", "Theorem 6.1(i)", _rep1_points, _run_rep_radius(False, "lee"), formula="r_Lee(C_c) = 2^q n"),
    AuditClaim("thm-6.1-i-hom", "Theorem 6.1(i)", _rep1_points, _run_rep_radius(False, "hom"), GAMMAS, "r_hom(C_c) = 2^q n"),
    AuditClaim("thm-6.1-ii-lee", "Theorem 6.1(ii)", _rep2_points, _run_rep_radius(True, "lee"), formula="r_Lee(C_theta) = 2^q n"),
    AuditClaim("thm-6.1-ii-hom", "Theorem 6.1(ii)", _rep2_points, _run_rep_radius(True, "hom"), GAMMAS, "r_hom(C_theta) = 2^(q+1) n"),
    AuditClaim("thm-6.2-lee", "Theorem 6.2", _block_points, _run_block_radius("lee"), formula="r_Lee = (2^(2^q)-1) 2^(q-1) n"),
    AuditClaim("thm-6.2-hom", "Theorem 6.2", _block_points, _run_block_radius("hom"), GAMMAS, "r_hom = 2^(2^q+q) n"),
    # covering radii of the families
    AuditClaim(
        "thm-7.1-i",
        "Theorem 7.1(i)",
        _alpha_points,
        _run_family_radius("sa", "hom", lambda q, k, u, norm: k * pow2(_s(q) * k + q)),
        GAMMAS,
        "r_hom(S^alpha) = k 2^(2^q k+q)",
    ),
    AuditClaim(
        "thm-7.1-ii",
        "Theorem 7.1(ii)",
        _alpha_points,
        _run_family_radius("sa", "lee", lambda q, k, u, norm: pow2((_s(q) + 1) * k + 1)),
        formula="r_Lee(S^alpha) = 2^((2^q+1)k+1)",
    ),
    AuditClaim(
        "thm-7.2-i",
        "Theorem 7.2(i)",
        _beta_points,
        _run_family_radius("sb", "hom", _sb_hom_formula),
        tuple(f"{r},{g}" for r in ("reading=A", "reading=B") for g in GAMMAS),
        "r_hom(S^beta); A: 2^(2^q)(k-2^-q), B: 2^(2^q)k - 2^-q",
    ),
    AuditClaim(
        "thm-7.2-ii",
        "Theorem 7.2(ii)",
        _beta_points,
        _run_family_radius("sb", "lee", lambda q, k, u, norm: pow2((_s(q) - 1) * (k - 1) + q - 1) * ((1 << k) - 1)),
        formula="r_Lee(S^beta) = 2^((2^q-1)(k-1)+q-1)(2^k-1)",
    ),
    AuditClaim("thm-7.3-i", "Theorem 7.3(i)", _mac_e_points, _run_mac_radius_bound("ma"), GAMMAS, "r_hom(M(k,u)) <= 2^(2^q k)-2^(2^q u)+r_hom(M(e,u))"),
    AuditClaim(
        "thm-7.3-ii",
        "Theorem 7.3(ii)",
        _mac_points,
        _run_family_radius("ma", "lee", lambda q, k, u, norm: pow2(_s(q) * k + q - 1) - pow2(_s(q) * u + q - 1)),
        formula="r_Lee(M^alpha) = 2^(2^q k+q-1)-2^(2^q u+q-1)",
    ),
    AuditClaim("thm-7.4-i", "Theorem 7.4(i)", _mac_e_points, _run_mac_radius_bound("mb"), GAMMAS, "r_hom(M^beta(k,u)) <= len + r_hom(M^beta(e,u))"),
    AuditClaim(
        "thm-7.4-ii",
        "Theorem 7.4(ii)",
        _mac_points,
        _run_family_radius("mb", "lee", lambda q, k, u, norm: _mac_beta_len(-1)(q, k, u)),
        formula="r_Lee(M^beta) = 2^((2^q-1)(k-1)+q-1)(2^k-1)-2^((2^q-1)(u-1)+q-1)(2^u-1)",
    ),
)

# claims decided by comparing column multisets of matrix images
STRUCTURAL_IDS = frozenset(
    c.id
    for c in CATALOG
    if c.id.endswith(("-copies", "-projection", "-iterated")) or c.id.startswith(("lem-3.6", "lem-4.4", "thm-5.1", "thm-5.2"))
)


def catalog_ids() -> list[str]:
    return sorted(c.id for c in CATALOG)


# ---------------------------------------------------------------- runner


def _evaluate(claim: AuditClaim, params: dict, norm: str, budget: AuditBudget) -> AuditEntry:
    try:
        out = claim.run(params, norm, budget)
    except ResourceLimitError as exc:
        out = Outcome(None, None, SKIPPED, str(exc))
    return AuditEntry(claim.id, claim.source, dict(params), norm, out.claimed, out.computed, out.verdict, out.note)


def _tasks(claims: Iterable[AuditClaim], budget: AuditBudget) -> list[tuple[AuditClaim, dict, str]]:
    tasks = []
    for claim in claims:
        points = claim.points(budget)
        if not points:
            # keep every claim visible even when the budget excludes all its points
            tasks.append((claim, {}, "-"))
            continue
        for p in points:
            for norm in claim.normalizations:
                tasks.append((claim, p, norm))
    return tasks


def _run(claims: Iterable[AuditClaim], budget: AuditBudget) -> AuditReport:
    tasks = _tasks(claims, budget)

    def one(task: tuple[AuditClaim, dict, str]) -> AuditEntry:
        claim, p, norm = task
        if not p:
            return AuditEntry(claim.id, claim.source, {}, norm, claim.formula, None, SKIPPED, "no parameter point within the budget")
        return _evaluate(claim, p, norm, budget)

    if budget.workers > 1:
        with ThreadPoolExecutor(max_workers=budget.workers) as pool:
            entries = list(pool.map(one, tasks))
    else:
        entries = [one(t) for t in tasks]
    entries.sort(key=AuditEntry.sort_key)
    return AuditReport(entries)


def run_audit(budget: AuditBudget | None = None) -> AuditReport:
    """Evaluate every catalog claim at every budgeted parameter point."""
    return _run(CATALOG, budget or AuditBudget())


def run_claims(ids: Iterable[str], budget: AuditBudget | None = None) -> AuditReport:
    """Evaluate only the named catalog claims."""
    wanted = set(ids)
    unknown = wanted - set(catalog_ids())
    if unknown:
        raise KeyError(f"unknown claim ids: {sorted(unknown)}")
    return _run([c for c in CATALOG if c.id in wanted], budget or AuditBudget())


def structural_checks(budget: AuditBudget | None = None) -> AuditReport:
    """Only the concatenation/projection claims (column-multiset comparisons)."""
    return _run([c for c in CATALOG if c.id in STRUCTURAL_IDS], budget or AuditBudget())


__all__ = [
    "AGREE",
    "CATALOG",
    "INFEASIBLE",
    "MISMATCH",
    "SKIPPED",
    "VERDICTS",
    "AuditBudget",
    "AuditClaim",
    "AuditEntry",
    "AuditReport",
    "catalog_ids",
    "run_audit",
    "run_claims",
    "structural_checks",
]
