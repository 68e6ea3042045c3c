from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from laplace_spectra.errors import CapacityError, InputError
from laplace_spectra.exactmath import Matrix, Polynomial, is_perfect_square
from laplace_spectra.rootsystem import system_from_spec
from laplace_spectra.spectrum import casimir
from laplace_spectra.su2lab import (
    DEFAULT_SCHEDULE,
    KappaMatrix,
    casimir_scalar,
    certify_generic_simple,
    check_homomorphism,
    crit_a,
    crit_b,
    crit_c,
    d_operator,
    g0,
    invariant_subspace,
    irrep_matrices,
    is_diagonalizable_real,
    p_v,
    su2_basis,
    su2_type,
)
from oracles import resultant_from_roots, spin_matrices

ID = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_basis_is_g0_orthonormal():
    basis = su2_basis()
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            assert g0(x, y) == (1 if i == j else 0)


@pytest.mark.parametrize("m", range(13))
def test_bracket_homomorphism(m):
    check_homomorphism(irrep_matrices(m))


@pytest.mark.parametrize("m", range(9))
def test_casimir_scalar_against_spin_matrices(m):
    bundle = d_operator(ID, m)
    scalar = Fraction(m * (m + 2))
    assert bundle.d_matrix == Matrix.identity(m + 1).scale(scalar)
    # rho(u_k) = 2i J_k, so -sum rho(u_k)^2 = 4 J^2
    assert all(4 * x == scalar for x in spin_matrices(m))
    assert casimir_scalar(m) == scalar


def test_spin_half_diagonal_kappa():
    bundle = d_operator([[1, 0, 0], [0, 2, 0], [0, 0, 3]], 1)
    assert bundle.char_poly == Polynomial([36, -12, 1])


def test_casimir_ratio_is_constant():
    rs = system_from_spec("A1")
    ratios = {casimir_scalar(m) / casimir(rs, rs.from_dynkin([m]))[1] for m in range(1, 9)}
    assert ratios == {2}


def test_criteria_frozen_values():
    assert crit_b(1, ID) == 0
    assert crit_c(1, ID) == 4
    # p_0 = t and p_2 = (t - 8)^3 at kappa = Id
    assert crit_a(0, 2, ID) == resultant_from_roots(1, [0], 1, [8, 8, 8]) == -512
    # with K the maximal torus V_2^K is the zero-weight line, so p_2 = t - 8
    assert crit_a(0, 2, ID, "torus") == -8
    assert p_v(ID, 1, "torus") is None


def test_invariant_subspace_dimensions():
    assert [len(invariant_subspace(("u3",), m)) for m in range(7)] == [1, 0, 1, 0, 1, 0, 1]
    assert len(invariant_subspace((), 4)) == 5


def test_input_errors():
    with pytest.raises(InputError):
        KappaMatrix.of([[1, 2, 0], [0, 1, 0], [0, 0, 1]])
    with pytest.raises(InputError):
        KappaMatrix.parse("1,0;0,1,0;0,0,1")
    with pytest.raises(CapacityError):
        irrep_matrices(65)
    with pytest.raises(CapacityError):
        certify_generic_simple(13)
    with pytest.raises(InputError):
        certify_generic_simple(2, subgroup="borel")


def test_su2_types():
    assert [su2_type(m) for m in range(4)] == ["real", "quaternionic", "real", "quaternionic"]


@pytest.mark.parametrize("kappa", DEFAULT_SCHEDULE, ids=range(len(DEFAULT_SCHEDULE)))
def test_schedule_is_positive_definite_and_diagonalizable(kappa):
    k = KappaMatrix.of(kappa)
    assert k.positive
    for m in range(6):
        bundle = d_operator(k, m)
        assert is_diagonalizable_real(bundle)
        if m % 2:
            assert is_perfect_square(bundle.char_poly).is_square


def spd():
    entries = st.integers(-2, 2)
    return st.tuples(entries, entries, entries, entries, entries, entries).map(
        lambda e: [[e[0], e[1], e[2]], [0, e[3], e[4]], [0, 0, e[5]]]).map(
        lambda u: [[sum(u[k][i] * u[k][j] for k in range(3)) + (1 if i == j else 0)
                    for j in range(3)] for i in range(3)])


@settings(max_examples=20)
@given(spd(), st.sampled_from([1, 3, 5]))
def test_quaternionic_doubling(kappa, m):
    bundle = d_operator(kappa, m)
    assert is_perfect_square(bundle.char_poly).is_square
    assert crit_b(m, kappa) == 0


@settings(max_examples=20)
@given(spd(), st.integers(0, 5))
def test_operator_is_real_symmetric_psd(kappa, m):
    bundle = d_operator(kappa, m)
    d = bundle.d_matrix
    # self-adjoint for the invariant form on monomials, <x^(m-k) y^k> ~ 1/binom(m, k)
    h = Matrix.diag([Fraction(1, comb(m, k)) for k in range(m + 1)]).as_gaussian()
    assert h @ d == d.adjoint() @ h
    assert bundle.char_poly.is_real()
    assert is_diagonalizable_real(bundle)


def test_certificate_m6():
    cert = certify_generic_simple(6)
    assert cert.verdict and cert.status == "certified"
    assert all(w.value is not None and not w.value.is_zero() for w in cert.witnesses)
    assert cert.common_witness is not None
    items = {w.item for w in cert.witnesses}
    assert items == {1, 2, 3}


def test_torus_certificate_skips_non_equivariant_samples():
    cert = certify_generic_simple(6, subgroup="torus")
    assert cert.verdict
    assert [s["sample_index"] for s in cert.skipped_samples] == [1, 2, 3, 4, 5, 6]
    assert [m for m, _ in cert.reps] == [0, 2, 4, 6]
