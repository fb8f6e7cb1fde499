import pytest
from hypothesis import given, strategies as st

from mubkit.cyclotomic import (
    CyclotomicInt,
    common_order,
    cyclotomic_polynomial,
    reduction_matrix,
    root_of_unity,
    totient,
)
from oracles import cyclotomic_by_mobius, numeric

ORDERS = [1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 16, 20, 24, 27, 30]


@pytest.mark.parametrize("n", range(1, 61))
def test_cyclotomic_polynomial_matches_mobius_product(n):
    assert cyclotomic_polynomial(n) == cyclotomic_by_mobius(n)


def test_phi12():
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert totient(12) == 4


def test_roots_sum_to_zero_for_order_three():
    assert 1 + root_of_unity(3) + root_of_unity(3, 2) == 0


def test_reduction_matrix_rows_are_root_powers():
    r = reduction_matrix(12)
    assert r.shape == (12, 4)
    for k in range(12):
        assert tuple(r[k]) == root_of_unity(12, k).coeffs
    with pytest.raises(ValueError):
        r[0, 0] = 5


def test_abs_squared_example():
    z = 1 + 2 * root_of_unity(3)
    assert z.abs_squared() == 3


def test_high_power_of_root():
    assert root_of_unity(12, 3) ** 32 == 1
    assert root_of_unity(12) ** 6 == -1


def test_text_form():
    assert str(1 - 2 * root_of_unity(12, 3)) == "1 - 2*z12^3"
    assert str(root_of_unity(4)) == "z4"
    assert str(-root_of_unity(4)) == "-z4"
    assert str(CyclotomicInt(5)) == "0"
    assert str(CyclotomicInt(8, [0, 0, -3])) == "-3*z8^2"


def test_order_mismatch_raises():
    with pytest.raises(ValueError):
        root_of_unity(3) + root_of_unity(4)


def test_immutable():
    z = root_of_unity(5)
    with pytest.raises(AttributeError):
        z.order = 7


def test_rescale_and_common_order():
    a, b = common_order(root_of_unity(3), root_of_unity(4))
    assert a.order == b.order == 12
    assert a == root_of_unity(12, 4)
    assert b == root_of_unity(12, 3)
    with pytest.raises(ValueError):
        root_of_unity(4).rescale(6)


def test_root_exponent():
    for k in range(9):
        assert root_of_unity(9, k).root_exponent() == k
    assert (1 + root_of_unity(9)).root_exponent() is None


def test_integer_equality_and_as_integer():
    assert CyclotomicInt.integer(7, 5) == 7
    assert root_of_unity(5).as_integer() is None
    assert hash(CyclotomicInt(4, [1, 2])) == hash(CyclotomicInt(4, [1, 2, 0, 0, 0]))


def test_negative_power_rejected():
    with pytest.raises(ValueError):
        root_of_unity(5) ** -1


# -- property suites ----------------------------------------------------------------


@st.composite
def same_order(draw, count=3):
    n = draw(st.sampled_from(ORDERS))
    phi = totient(n)
    coeff = st.lists(st.integers(-6, 6), min_size=phi, max_size=phi)
    return [CyclotomicInt(n, draw(coeff)) for _ in range(count)]


@given(same_order())
def test_ring_axioms(xs):
    a, b, c = xs
    zero, one = CyclotomicInt.integer(0, a.order), CyclotomicInt.integer(1, a.order)
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + zero == a and a * one == a
    assert a - a == zero


@given(same_order())
def test_conjugation_is_involutive_ring_automorphism(xs):
    a, b, _ = xs
    assert a.conjugate().conjugate() == a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()


@given(same_order())
def test_abs_squared_is_multiplicative_and_real(xs):
    a, b, _ = xs
    assert (a * b).abs_squared() == a.abs_squared() * b.abs_squared()
    s = a.abs_squared()
    assert s.conjugate() == s


@given(same_order())
def test_arithmetic_agrees_with_complex_embedding(xs):
    a, b, _ = xs
    assert abs(numeric(a * b) - numeric(a) * numeric(b)) < 1e-6
    assert abs(numeric(a.conjugate()) - numeric(a).conjugate()) < 1e-6


@given(st.sampled_from(ORDERS), st.integers(1, 4), st.lists(st.integers(-5, 5), min_size=1, max_size=12))
def test_rescale_is_a_ring_embedding(n, factor, coeffs):
    a = CyclotomicInt(n, coeffs)
    m = n * factor
    assert (a * a).rescale(m) == a.rescale(m) * a.rescale(m)
    assert abs(numeric(a.rescale(m)) - numeric(a)) < 1e-6
