import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lahkit.errors import ConsistencyError, ParameterError
from lahkit.polynomials import (
    STANDARD,
    BasisTag,
    Polynomial,
    a_poly,
    b_poly,
    convert,
    derivative,
    evaluate,
    factorial_poly,
    falling,
    lah_order_poly,
    lah_order_poly_step,
    lr_row_poly,
    lr_row_poly_step,
    q_poly,
    q_step,
    rising,
    row_poly_hl,
    row_poly_hl_step,
    transition_matrix,
)
from lahkit.triangles import OLAH, STIRLING1, STIRLING2, lah_order, signed_value, stirling1_hl, stirling2_hl

std = Polynomial.standard


def expand_product(roots):
    """Coefficients of prod (x - a) by brute-force subset sums."""
    n = len(roots)
    coeffs = [0] * (n + 1)
    for picked in itertools.product((0, 1), repeat=n):
        term = 1
        for a, take in zip(roots, picked):
            if not take:
                term *= -a
        coeffs[sum(picked)] += term
    return std(coeffs)


def test_factorial_poly_examples():
    assert factorial_poly("rising", 4, 2) == std([0, 36, 49, 14, 1])
    assert factorial_poly("rising", 0, 3) == std([1])
    assert factorial_poly("falling", 3, 2) == std([0, 4, -5, 1])
    with pytest.raises(ParameterError):
        factorial_poly("sideways", 2, 1)


@pytest.mark.parametrize("n", range(7))
@pytest.mark.parametrize("s", [1, 2, 3])
def test_factorial_poly_against_subset_expansion(n, s):
    assert factorial_poly("rising", n, s) == expand_product([-(i**s) for i in range(n)])
    assert factorial_poly("falling", n, s) == expand_product([i**s for i in range(n)])


def test_eval_examples():
    assert evaluate(factorial_poly("rising", 4, 2), 1) == 100
    assert evaluate(Polynomial.zero(), 123) == 0
    assert evaluate(Polynomial(falling(2), (0, 100, 140, 28, 1)), 1) == 100
    assert Polynomial(rising(2), (0, 0, 0, 0, 1))(1) == 100


def test_canonical_trim():
    p = std([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert std([0, 0]).coeffs == ()
    assert std([0, 0]).degree == -1


def test_transition_matrix_examples():
    m = transition_matrix(rising(2), falling(2), 7)
    assert m.entries[6] == (0, 44200, 85800, 31460, 3300, 110, 1)
    assert transition_matrix(STANDARD, STANDARD, 5).is_identity()
    assert transition_matrix(rising(2), STANDARD, 4).entries[3] == (0, 4, 5, 1)


def test_transition_matrix_families():
    s, N = 3, 8
    fam = {
        (rising(s), STANDARD): lambda n, k: stirling1_hl(n, k, s),
        (STANDARD, falling(s)): lambda n, k: stirling2_hl(n, k, s),
        (rising(s), falling(s)): lambda n, k: lah_order(n, k, s),
        (falling(s), STANDARD): lambda n, k: signed_value(STIRLING1, n, k, s),
        (STANDARD, rising(s)): lambda n, k: signed_value(STIRLING2, n, k, s),
        (falling(s), rising(s)): lambda n, k: signed_value(OLAH, n, k, s),
    }
    for (a, b), f in fam.items():
        m = transition_matrix(a, b, N)
        assert m.is_lower_unitriangular()
        assert m.entries[0] == (1,) + (0,) * (N - 1)
        assert m.entries[1][1] == 1
        for n in range(N):
            for k in range(n + 1):
                assert m.entries[n][k] == f(n, k)


def test_mismatched_levels():
    with pytest.raises(ParameterError):
        transition_matrix(rising(2), falling(3), 4)
    with pytest.raises(ParameterError):
        convert(Polynomial.basis_element(rising(2), 2), falling(3))
    # routing through the standard basis is the supported path
    p = Polynomial.basis_element(rising(2), 3)
    q = convert(convert(p, STANDARD), falling(3))
    for x in range(-4, 5):
        assert evaluate(p, x) == evaluate(q, x)


def test_convert_examples():
    e4 = Polynomial.basis_element(rising(2), 4)
    assert convert(e4, falling(2)).coeffs == (0, 100, 140, 28, 1)
    p = Polynomial(falling(3), (5, -2, 7))
    assert convert(p, falling(3)) is p
    x3 = convert(std([0, 0, 0, 1]), falling(2))
    assert x3.coeffs == (0, 1, 5, 1)
    # x + 5 x(x-1) + x(x-1)(x-4) == x^3, expanded by hand
    assert std([0, 1]) + 5 * std([0, -1, 1]) + std([0, 4, -5, 1]) == std([0, 0, 0, 1])


def test_factorial_expansion_identities():
    for s in range(1, 4):
        for n in range(9):
            # rising factorial expanded in x^k has coefficients stirling1_hl(n, k)
            assert factorial_poly("rising", n, s).coeffs == tuple(stirling1_hl(n, k, s) for k in range(n + 1))
            # x^n = sum_k stirling2_hl(n, k) * falling_k, summed in the standard basis
            total = Polynomial.zero()
            for k in range(n + 1):
                total = total + stirling2_hl(n, k, s) * factorial_poly("falling", k, s)
            assert total == Polynomial.basis_element(STANDARD, n)


def test_derivative_examples():
    assert derivative(std([0, 0, 0, 14, 1])) == std([0, 0, 42, 4])
    assert derivative(std([7])) == Polynomial.zero()
    assert derivative(factorial_poly("rising", 4, 2), 2) == std([98, 84, 12])
    with pytest.raises(ParameterError):
        derivative(Polynomial(rising(2), (0, 1)))


def test_exact_division():
    assert std([0, 0, 3, 1]).divide_by_x_power(2) == std([3, 1])
    with pytest.raises(ConsistencyError):
        std([0, 1, 3]).divide_by_x_power(2)


def test_row_poly_examples():
    assert row_poly_hl(1, 5) == std([0, 1])
    assert row_poly_hl(4, 2) == std([0, 576, 536, 56, 1])
    assert row_poly_hl(3, 3) == std([0, 216, 72, 1])
    assert row_poly_hl_step(std([0, 1]), 1, 1) == std([0, 2, 1])
    assert row_poly_hl_step(std([0, 1]), 1, 2) == std([0, 4, 1])
    assert row_poly_hl_step(std([0, 4, 1]), 2, 2) == std([0, 36, 20, 1])


def test_q_examples():
    assert q_poly(1, 4) == std([0, 0, 1])
    assert q_poly(2, 2) == std([0, 0, 0, 4, 1])
    assert q_poly(3, 2) == std([0, 0, 0, 0, 36, 20, 1])
    assert q_step(std([0, 0, 1]), 1, 2) == std([0, 0, 0, 4, 1])
    assert q_step(std([0, 0, 1]), 1, 1) == std([0, 0, 0, 2, 1])
    assert q_step(q_poly(2, 2), 2, 2) == q_poly(3, 2)


def test_a_examples():
    assert a_poly(1, 2) == std([0, 0, 4])
    assert a_poly(1, 1) == std([0, 0, 2])
    assert a_poly(2, 2) == std([0, 0, 0, 36, 16])
    with pytest.raises(ParameterError):
        a_poly(1, 2, form="other")


def test_order_poly_examples():
    assert lah_order_poly(4, 2) == std([0, 100, 140, 28, 1])
    assert lah_order_poly(1, 9) == std([0, 1])
    assert lah_order_poly(3, 3) == std([0, 18, 18, 1])
    assert lah_order_poly_step(std([0, 1]), 1, 2) == std([0, 2, 1])
    assert lah_order_poly_step(std([0, 2, 1]), 2, 2) == std([0, 10, 10, 1])
    assert lah_order_poly_step(std([0, 1]), 1, 4) == std([0, 2, 1])


def test_b_examples():
    assert b_poly(1, 3) == std([0, 1])
    assert b_poly(2, 2) == std([0, 2, 4])
    assert b_poly(2, 2, "derivative") == std([0, 2, 4])


def test_lr_row_examples():
    assert lr_row_poly(4, 2, 1) == std([0, 576, 536, 56, 1])
    assert lr_row_poly(2, 3, 2) == std([0, 0, 1])
    assert lr_row_poly(3, 1, 2) == std([0, 0, 4, 1])
    with pytest.raises(ParameterError):
        lr_row_poly(1, 2, 2)


@pytest.mark.parametrize("s", range(1, 5))
def test_steppers_agree(s):
    for n in range(1, 8):
        assert row_poly_hl_step(row_poly_hl(n, s), n, s) == row_poly_hl(n + 1, s)
        assert q_step(q_poly(n, s), n, s) == q_poly(n + 1, s)
        assert lah_order_poly_step(lah_order_poly(n, s), n, s) == lah_order_poly(n + 1, s)
        assert a_poly(n, s) == a_poly(n, s, "derivative")
        assert b_poly(n, s) == b_poly(n, s, "derivative")
        for r in range(0, 4):
            if n >= max(r, 1):
                assert lr_row_poly_step(lr_row_poly(n, s, r), n, s) == lr_row_poly(n + 1, s, r)


def test_text_and_json_round_trip():
    big = 10**80 + 7
    p = Polynomial(falling(3), (0, -big, 5))
    assert p.to_text() == f"basis=falling:3 coeffs=[0,{-big},5]"
    assert Polynomial.from_text(p.to_text()) == p
    doc = p.to_json()
    assert f'"{-big}"' in doc
    assert Polynomial.from_json(doc) == p
    assert Polynomial.from_text("basis=standard coeffs=[]") == Polynomial.zero()
    assert std([1, 2]).to_json() == '{"basis":"standard","level":null,"coeffs":["1","2"]}'


@pytest.mark.parametrize("text", ["basis=up:2 coeffs=[1]", "basis=rising coeffs=[1]", "basis=standard coeffs=1,2", "coeffs=[1]"])
def test_bad_text(text):
    with pytest.raises(ParameterError):
        Polynomial.from_text(text)


def test_basis_parse():
    assert BasisTag.parse("standard") == STANDARD
    assert BasisTag.parse("rising:2") == rising(2)
    with pytest.raises(ParameterError):
        BasisTag.parse("falling:0")


bases = st.integers(1, 4).flatmap(lambda s: st.sampled_from([STANDARD, rising(s), falling(s)]))


@settings(max_examples=100)
@given(
    bases,
    st.integers(1, 4),
    st.lists(st.integers(-50, 50), max_size=9),
    st.sampled_from(["standard", "rising", "falling"]),
    st.integers(-5, 5),
)
def test_conversion_preserves_values(basis, s, coeffs, target_name, x):
    level = basis.s or s
    target = STANDARD if target_name == "standard" else BasisTag(target_name, level)
    p = Polynomial(basis, tuple(coeffs))
    q = convert(p, target)
    assert evaluate(p, x) == evaluate(q, x)
    assert convert(q, basis) == p
