from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import hamming_weights, hom_weights, lee_weights, naive_code, naive_covering_radius, naive_weight
from rqcodes.analysis import (
    count_types,
    covering_radius,
    covering_radius_bound_compose,
    distance_to_code,
    max_distance,
    weight_distribution,
)
from rqcodes.constructions import (
    block_repetition_generator,
    macdonald_alpha_generator,
    repetition_generator,
    simplex_alpha_generator,
    simplex_beta_generator,
)
from rqcodes.errors import ParameterError, ResourceLimitError
from rqcodes.linalg import RqMatrix, enumerate_code
from rqcodes.ring import make_ring

R1 = make_ring(1)


def small_codes():
    """(label, code) pairs small enough for every engine."""
    out = []
    for n in (1, 2, 3):
        out.append((f"C_theta n={n}", enumerate_code(repetition_generator(R1.theta, n))))
    for n in (1, 2, 3):
        out.append((f"C_1 n={n}", enumerate_code(repetition_generator(R1.one, n))))
    for n in (2, 3):
        out.append((f"C_u1 n={n}", enumerate_code(repetition_generator(R1.u(1), n))))
    out.append(("S_alpha(1,1)", enumerate_code(simplex_alpha_generator(1, 1))))
    out.append(("S_beta(1,2)", enumerate_code(simplex_beta_generator(1, 2))))
    out.append(("block n=1", enumerate_code(block_repetition_generator(1, 1))))
    out.append(("block n=2", enumerate_code(block_repetition_generator(1, 2))))
    return out


SMALL = small_codes()


# ---------------------------------------------------------------- weight distributions


@pytest.mark.parametrize("q,k", [(1, 1), (1, 2), (2, 1)])
def test_distributions_match_naive(q, k):
    G = simplex_alpha_generator(q, k)
    words = naive_code(q, G.entries.tolist())
    C = enumerate_code(G)
    for metric, table in (("lee", lee_weights(q)), ("hamming", hamming_weights(q)), ("hom", hom_weights(q, Fraction(2**q)))):
        expect = {}
        for w in words:
            x = naive_weight(table, w)
            expect[x] = expect.get(x, 0) + 1
        assert weight_distribution(C, metric).counts == expect


@pytest.mark.parametrize("q,k", [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)])
def test_alpha_lee_distribution_is_constant_weight(q, k):
    # [PAPER] every nonzero codeword has Lee weight 2^(2^q k + q - 1)
    dist = weight_distribution(enumerate_code(simplex_alpha_generator(q, k)), "lee")
    assert dist.counts == {0: 1, 2 ** (2**q * k + q - 1): 2 ** (2**q * k) - 1}


def test_distribution_json_and_totals():
    C = enumerate_code(simplex_alpha_generator(1, 1))
    d = weight_distribution(C, "lee")
    assert d.as_json() == {"0": 1, "4": 3}
    assert d.total == C.size and d.min_nonzero() == 4
    half = weight_distribution(C, "hom", gamma=Fraction(1))
    assert half.counts == {0: 1, 4: 3}  # gamma + 2 gamma + gamma


def test_unknown_metric():
    C = enumerate_code(simplex_alpha_generator(1, 1))
    with pytest.raises(ParameterError):
        weight_distribution(C, "euclid")
    with pytest.raises(ParameterError):
        covering_radius(C, "euclid")


@pytest.mark.parametrize("q,k", [(1, 2), (2, 1)])
def test_type_counts_sum_to_size(q, k):
    C = enumerate_code(simplex_alpha_generator(q, k))
    t = count_types(C)
    assert sum(t.values()) == C.size
    assert t[q + 1] == 1  # the zero word


# ---------------------------------------------------------------- covering radius


@pytest.mark.parametrize("label,C", SMALL, ids=[s[0] for s in SMALL])
def test_engines_agree_lee(label, C):
    # [DERIVED] brute force over tuples with independently built weights
    words = {tuple(w) for w in C.codewords.tolist()}
    expect = naive_covering_radius(1, words, lee_weights(1))
    got = {e: covering_radius(C, "lee", e) for e in ("exhaustive", "profile_dp", "gray_syndrome")}
    assert {r.value for r in got.values()} == {expect}
    for r in got.values():
        assert distance_to_code(C, r.certificate, "lee") == expect


@pytest.mark.parametrize("label,C", SMALL[:8], ids=[s[0] for s in SMALL[:8]])
def test_engines_agree_hom(label, C):
    words = {tuple(w) for w in C.codewords.tolist()}
    expect = naive_covering_radius(1, words, hom_weights(1, Fraction(2)))
    assert covering_radius(C, "hom", "exhaustive").value == expect
    assert covering_radius(C, "hom", "profile_dp").value == expect
    with pytest.raises(ParameterError):
        covering_radius(C, "hom", "gray_syndrome")


def test_repetition_theta_radius_n1():
    r = covering_radius(enumerate_code(repetition_generator(R1.theta, 1)), "lee")
    assert r.value == 1
    assert r.as_json()["radius"] == 1


def test_q2_profile_dp():
    # S_alpha(2,1) is beyond the exhaustive guard; the DP answers and its
    # certificate is checked by a direct distance computation
    C = enumerate_code(simplex_alpha_generator(2, 1))
    r = covering_radius(C, "lee")
    assert r.engine == "profile_dp"
    assert distance_to_code(C, r.certificate, "lee") == r.value
    with pytest.raises(ResourceLimitError):
        covering_radius(C, "lee", "exhaustive")


def test_q2_small_code_all_engines():
    C = enumerate_code(repetition_generator(make_ring(2).theta, 2))
    vals = {covering_radius(C, "lee", e).value for e in ("exhaustive", "profile_dp", "gray_syndrome")}
    words = {tuple(w) for w in C.codewords.tolist()}
    assert vals == {naive_covering_radius(2, words, lee_weights(2))}


def test_radius_bounds():
    C = enumerate_code(block_repetition_generator(1, 2))
    r = covering_radius(C, "lee").value
    assert 0 <= r <= max_distance(C.ring, C.n, "lee")
    assert covering_radius_bound_compose(2, 3) == 5


def test_macdonald_radius_runs():
    C = enumerate_code(macdonald_alpha_generator(1, 2, 1))
    r = covering_radius(C, "lee")
    assert distance_to_code(C, r.certificate, "lee") == r.value


# ---------------------------------------------------------------- invariants


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_distance_is_translation_invariant(data):
    C = enumerate_code(simplex_beta_generator(1, 2))
    x = np.array(data.draw(st.lists(st.integers(0, 3), min_size=C.n, max_size=C.n)))
    c = C.codewords[data.draw(st.integers(0, C.size - 1))].astype(np.int64)
    for metric in ("lee", "hom", "hamming"):
        assert distance_to_code(C, x, metric) == distance_to_code(C, x ^ c, metric)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=1, max_size=3))
def test_radius_of_random_repetition_like_codes(row):
    C = enumerate_code(RqMatrix(R1, np.array([row])))
    words = {tuple(w) for w in C.codewords.tolist()}
    expect = naive_covering_radius(1, words, lee_weights(1))
    assert covering_radius(C, "lee", "profile_dp").value == expect
    assert covering_radius(C, "lee", "gray_syndrome").value == expect


def test_hom_radius_scales_with_gamma():
    G = repetition_generator(R1.theta, 2)
    r4 = covering_radius(enumerate_code(G), "hom").value
    r1 = covering_radius(enumerate_code(G.with_ring(make_ring(1, 1))), "hom").value
    assert r4 == 2 * r1
