import pytest

from mubkit.cyclotomic import root_of_unity
from mubkit.mub import mub_set
from mubkit.pauli import (
    clock_op,
    diagonalizes,
    eigenvalue,
    pauli_family,
    pauli_mub_correspondence,
    shift_op,
)
from mubkit.vectors import ExactMatrix, StateVector, computational_basis, mat_mul


def test_shift_and_clock_act_as_defined():
    d = 5
    x, z = shift_op(d), clock_op(d)
    for n in range(d):
        e = StateVector.basis_state(d, n, d)
        assert eigenvalue(z, e) == root_of_unity(d, n)
        moved = [row[n] for row in x.entries]
        assert moved.index(1) == (n + 1) % d


@pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
def test_weyl_commutation(d):
    x, z = shift_op(d), clock_op(d)
    lhs = mat_mul(z, x)
    rhs = mat_mul(x, z).scalar(root_of_unity(d))
    assert lhs == rhs
    assert x.power(d) == ExactMatrix.identity(d, d)


def test_family_names():
    assert [name for name, _ in pauli_family(3)] == ["Z", "X", "XZ", "XZ^2"]


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_perfect_matching(p):
    rep = pauli_mub_correspondence(p)
    assert rep.passed
    assert rep.matching[0] == "Z"
    assert sorted(rep.matching.values()) == sorted(name for name, _ in pauli_family(p))
    for i, name in rep.matching.items():
        assert name in rep.candidates[i]
        assert all(lam is not None for lam in rep.eigenvalues[i])


def test_qubit_matching_is_z_x_xz():
    rep = pauli_mub_correspondence(2)
    assert rep.matching == {0: "Z", 1: "X", 2: "XZ"}


def test_non_eigenvector_and_non_diagonalized_basis():
    x = shift_op(3)
    assert eigenvalue(x, StateVector.basis_state(3, 0)) is None
    assert not diagonalizes(x, computational_basis(3))


def test_incomplete_set_has_no_matching():
    rep = pauli_mub_correspondence(3, mub_set(3, "fourier"))
    assert not rep.passed


def test_rejects_composite():
    with pytest.raises(ValueError):
        pauli_mub_correspondence(4)
