from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import naive_hom_weight, naive_lee_image, naive_mul
from rqcodes.errors import ParameterError
from rqcodes.ring import (
    chi,
    classify_filtration_level,
    elements_iter,
    gamma_project,
    hom_gray_table,
    hom_weight_character,
    hom_weight_closed,
    is_unit,
    lee_gray_inverse,
    lee_gray_table,
    lee_weight,
    make_ring,
    mul,
    mul_masks,
    mul_table,
    parse_element,
    render_symbolic,
    scale_array,
)


def elements(q):
    return st.integers(0, (1 << (1 << q)) - 1)


# ---------------------------------------------------------------- arithmetic


@pytest.mark.parametrize("q", [1, 2])
def test_mul_matches_naive_oracle(q):
    # [DERIVED] set-of-monomials multiplication
    size = 1 << (1 << q)
    for a in range(size):
        for b in range(size):
            assert mul_masks(q, a, b) == naive_mul(q, a, b)


def test_mul_table_q3_matches_scalar_mul():
    rng = np.random.default_rng(0)
    T = mul_table(3)
    for a, b in rng.integers(0, 256, size=(500, 2)):
        assert T[a, b] == mul_masks(3, int(a), int(b)) == naive_mul(3, int(a), int(b))


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_ring_axioms_q3(data):
    q = 3
    a, b, c = (data.draw(elements(q)) for _ in range(3))
    m = lambda x, y: mul_masks(q, x, y)  # noqa: E731
    assert m(a, b) == m(b, a)
    assert m(a, m(b, c)) == m(m(a, b), c)
    assert m(a, b ^ c) == m(a, b) ^ m(a, c)
    assert m(a, 1) == a


@pytest.mark.parametrize("q", [1, 2, 3])
def test_generators_square_to_zero_and_theta_is_socle(q):
    R = make_ring(q)
    for i in range(1, q + 1):
        assert mul(R.u(i), R.u(i)) == R.zero
    prod = R.one
    for i in range(1, q + 1):
        prod = mul(prod, R.u(i))
    assert prod == R.theta
    # theta is absorbed by units and killed by non-units
    for x in elements_iter(R):
        assert mul(x, R.theta) == (R.theta if is_unit(x) else R.zero)


@pytest.mark.parametrize("q", [1, 2, 3])
def test_units_have_inverses(q):
    R = make_ring(q)
    T = mul_table(q)
    units = [m for m in range(R.size) if m & 1]
    assert len(units) == 2 ** (2**q - 1)
    for u in units:
        assert 1 in T[u]
    for z in range(0, R.size, 2):
        assert 1 not in T[z]


def test_scale_array_agrees_with_mul():
    q = 2
    arr = np.arange(16)
    for s in range(16):
        assert list(scale_array(q, s, arr)) == [mul_masks(q, s, int(x)) for x in arr]


# ---------------------------------------------------------------- weights and maps


@pytest.mark.parametrize("q", [1, 2, 3])
@pytest.mark.parametrize("gexp", [None, -1, 0])
def test_hom_weight_formulas_agree(q, gexp):
    gamma = 1 if gexp is None else Fraction(2) ** (q + gexp)
    R = make_ring(q, gamma)
    for x in elements_iter(R):
        assert hom_weight_character(x) == hom_weight_closed(x)
    # [DERIVED] independent character sum on a sample
    for m in (0, 1, 2, R.theta_mask, R.size - 1):
        assert hom_weight_closed(R.element(m)) == naive_hom_weight(q, m, Fraction(gamma))


@pytest.mark.parametrize("q", [1, 2, 3])
def test_character_sum_vanishes_off_zero(q):
    R = make_ring(q)
    elems = list(elements_iter(R))
    for x in elems:
        s = sum(chi(mul(a, x)) for a in elems)
        # the sum runs over the whole ring, so it also vanishes at theta
        assert s == (R.size if x.mask == 0 else 0)


@pytest.mark.parametrize("q", [1, 2, 3])
def test_lee_table_matches_subset_definition(q):
    T = lee_gray_table(q)
    for m in range(0, 1 << (1 << q), 1 if q < 3 else 7):
        assert tuple(T[m]) == naive_lee_image(q, m)


@pytest.mark.parametrize("q", [1, 2, 3])
def test_lee_weight_of_monomials(q):
    # [PAPER] w_Lee(u_A) = 2^|A|
    R = make_ring(q)
    for A in range(R.nbits):
        assert lee_weight(R.element(1 << A)) == 2 ** bin(A).count("1")


@pytest.mark.parametrize("q", [1, 2])
def test_lee_map_linear_bijective(q):
    T = lee_gray_table(q).astype(np.int64)
    size = T.shape[0]
    for a in range(size):
        for b in range(size):
            assert np.array_equal(T[a ^ b], T[a] ^ T[b])
    assert len({tuple(r) for r in T}) == size
    R = make_ring(q)
    assert list(lee_gray_inverse(R, T.reshape(-1))) == list(range(size))


def test_lee_images_q1_match_known_values():
    # [TRIVIAL] bit B of the image is the parity of the coefficients on supersets of B
    assert [tuple(r) for r in lee_gray_table(1)] == [(0, 0), (1, 0), (1, 1), (0, 1)]


@pytest.mark.parametrize("q", [1, 2, 3])
def test_hom_maps(q):
    R = make_ring(q)
    lin = hom_gray_table(q, "linear").astype(np.int64)
    exact = hom_gray_table(q, "weight-exact").astype(np.int64)
    assert lin.shape[1] == exact.shape[1] == 2 ** (q + 1)
    for a in range(R.size):
        for b in range(0, R.size, 1 if q < 3 else 17):
            assert np.array_equal(lin[a ^ b], lin[a] ^ lin[b])
    # the weight-exact profile: 0, 2^q on the bulk, 2^(q+1) on theta
    w = exact.sum(axis=1)
    assert set(w.tolist()) == {0, 2**q, 2 ** (q + 1)}
    assert w[0] == 0 and w[R.theta_mask] == 2 ** (q + 1)
    if q <= 2:
        assert np.array_equal(lin.sum(axis=1), w)


def test_hom_linear_mode_not_weight_exact_at_q3():
    w = hom_gray_table(3, "linear").sum(axis=1)
    assert set(w.tolist()) != {0, 8, 16}


def test_hom_bad_mode():
    with pytest.raises(ParameterError):
        hom_gray_table(1, "nope")


# ---------------------------------------------------------------- misc


@pytest.mark.parametrize("text,mask", [("0", 0), ("1", 1), ("u1", 2), ("1+u1", 3), ("theta", 8), ("u1u2", 8), ("u1*u2+u2", 12), ("u1u1", 0)])
def test_parse_element(text, mask):
    assert parse_element(make_ring(2), text).mask == mask


@given(elements(2))
def test_render_parse_round_trip(m):
    R = make_ring(2)
    x = R.element(m)
    assert parse_element(R, render_symbolic(x)) == x


def test_parse_rejects_unknown_generator():
    with pytest.raises(ParameterError):
        parse_element(make_ring(1), "u2")


def test_filtration_levels_q2():
    R = make_ring(2)
    levels = [classify_filtration_level(x) for x in elements_iter(R)]
    assert levels[0] == 3
    assert all(levels[m] == 0 for m in range(1, 16, 2))
    assert levels[R.theta_mask] == 2
    assert levels[2] == levels[4] == levels[6] == 1


def test_gamma_projection_is_a_ring_map():
    R = make_ring(2)
    for a in elements_iter(R):
        for b in elements_iter(R):
            assert gamma_project(mul(a, b)) == mul(gamma_project(a), gamma_project(b))
            assert gamma_project(a + b) == gamma_project(a) + gamma_project(b)


def test_default_gamma():
    assert make_ring(2).gamma == 4
    with pytest.raises(ParameterError):
        make_ring(0)
