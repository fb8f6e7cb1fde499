import numpy as np
import pytest
from hypothesis import given, strategies as st

from mubkit.cyclotomic import CyclotomicInt, root_of_unity, totient
from mubkit.vectors import (
    Basis,
    ExactMatrix,
    StateVector,
    abs_squared_array,
    canonical_phase,
    computational_basis,
    gram,
    lift,
    mat_mul,
    outer,
    ring_conj,
    ring_matmul,
    ring_reduce,
)
from oracles import numeric


@st.composite
def vector_pairs(draw):
    n = draw(st.sampled_from([1, 2, 3, 4, 5, 6, 8, 12]))
    d = draw(st.integers(1, 5))
    phi = totient(n)

    def vec():
        entries = [CyclotomicInt(n, draw(st.lists(st.integers(-4, 4), min_size=phi, max_size=phi))) for _ in range(d)]
        return StateVector(tuple(entries), draw(st.integers(1, 9)))

    return vec(), vec()


@given(vector_pairs())
def test_vectorized_gram_matches_scalar_inner_product(pair):
    u, v = pair
    g = gram([u], [v], u.order)
    ip = u.inner(v)
    assert tuple(int(x) for x in g[0, 0]) == ip.coeffs
    ipr, sq = abs_squared_array([u], [v], u.order)
    assert tuple(int(x) for x in sq[0, 0]) == ip.abs_squared().coeffs


def test_large_coefficients_switch_to_python_ints():
    big = CyclotomicInt(4, [2**40, 3])
    v = StateVector((big, big, big))
    g = gram([v], [v])
    assert g.dtype == object
    assert int(g[0, 0, 0]) == v.norm_sq().coeffs[0]


def test_ring_conj_matches_scalar():
    z = CyclotomicInt(5, [1, 2, 0, -3])
    arr = lift([[z]], 5)
    back = ring_reduce(ring_conj(arr))[0, 0]
    assert tuple(int(x) for x in back) == z.conjugate().coeffs


def test_state_vector_basics():
    v = StateVector.from_exponents([0, 1, None], 3, 3)
    assert v.dim == 3 and v.order == 3
    assert not v.is_unit()
    w = StateVector.from_exponents([0, 1], 3, 2)
    assert w.is_unit()
    assert str(w) == "(1, z3)/sqrt(2)"
    t = w.tensor(StateVector.from_exponents([0, 2], 4, 2))
    assert t.order == 12 and t.scale_sq == 4 and t.dim == 4
    with pytest.raises(ValueError):
        StateVector(())
    with pytest.raises(ValueError):
        StateVector((CyclotomicInt.integer(1),), 0)


def test_mixed_orders_are_unified():
    v = StateVector((root_of_unity(3), root_of_unity(4)))
    assert v.order == 12


def test_canonical_phase():
    v = StateVector.from_exponents([2, 3, 0], 4, 3)
    c = canonical_phase(v)
    assert c.entries[0] == 1
    assert c.entries[1] == root_of_unity(4, 1)
    odd = StateVector((CyclotomicInt(4, [1, 1]), CyclotomicInt.integer(1, 4)))
    assert canonical_phase(odd) == odd


def test_basis_orthonormality_and_tensor_order():
    b = computational_basis(3)
    assert b.is_orthonormal()
    t = b.tensor(computational_basis(2))
    assert t.vectors[1 * 2 + 1] == StateVector.basis_state(6, 3)
    bad = Basis((StateVector.basis_state(2, 0), StateVector.basis_state(2, 0)))
    assert bad.orthonormality_failures() == [(0, 1), (1, 0)]
    with pytest.raises(ValueError):
        Basis(())


def test_exact_matrix_normalisation_and_ops():
    m = ExactMatrix.from_ints([[2, 4], [6, 8]], denominator=4)
    assert m.denominator == 2
    assert [[e.as_integer() for e in r] for r in m.entries] == [[1, 2], [3, 4]]
    neg = ExactMatrix.from_ints([[1]], denominator=-3)
    assert neg.denominator == 3 and neg.entries[0][0] == -1
    i2 = ExactMatrix.identity(2)
    assert (m @ i2) == m
    assert (m + m).denominator == 1
    assert m.dagger().entries[0][1] == 3
    x = ExactMatrix.from_ints([[0, 1], [1, 0]])
    assert x.power(2) == i2
    assert str(i2) == "[1, 0]\n[0, 1]"
    with pytest.raises(ValueError):
        mat_mul(ExactMatrix.identity(2), ExactMatrix.identity(3))
    with pytest.raises(ZeroDivisionError):
        ExactMatrix.from_ints([[1]], denominator=0)


@given(vector_pairs())
def test_outer_product_matches_numeric(pair):
    u, v = pair
    o = outer(u, v)
    for i, a in enumerate(u.entries):
        for j, b in enumerate(v.entries):
            assert abs(numeric(o.entries[i][j]) - numeric(a) * numeric(b).conjugate()) < 1e-6
