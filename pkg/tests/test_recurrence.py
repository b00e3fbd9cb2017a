import math

import numpy as np
import pytest

from heunlame.tools.darboux import LameProblem, family_by_name, family_expansion
from heunlame.tools.expansions import power_seed
from heunlame.tools.heun import HeunParams
from heunlame.tools.recurrence import (
    GammaFactors,
    RecurrenceForm,
    ThreeTermCoeffs,
    antidiagonal_similarity_check,
    arscott_check,
    backward_minimal_solve,
    characteristic_det,
    characteristic_matrix,
    characteristic_roots,
    continued_fraction,
    continued_fraction_residual,
    continued_fraction_roots,
    detect_truncation,
    forward_solve,
    minimal_ratio_limits,
    rescale,
    row_residuals,
)
from heunlame.utils.errors import DomainError, PivotError


def generic_coeffs():
    return ThreeTermCoeffs(
        alpha=lambda n: 1.0 + n,
        beta=lambda n: 2.0 * n - 3.0,
        gamma=lambda n: 0.5 * n + 1.0,
        weight=lambda n: 1.0 + 0.1 * n,
        label="generic",
    )


def lame_family(name, l="1/2", m="3/2", k2=0.5):
    prob = LameProblem.create(l, m, k2)
    spec = family_by_name(l, m, name)
    e = family_expansion(prob, spec.group, spec.index)
    return prob, e, prob.energy_coeffs(e.coeffs)


# ----------------------------------------------------------------------------
# forward solve and truncation
# ----------------------------------------------------------------------------


def test_forward_solve_constant_solution():
    c = ThreeTermCoeffs(alpha=lambda n: 1.0, beta=lambda n: -1.0, gamma=lambda n: 0.0)
    b = forward_solve(c, 6).b
    assert list(b) == [1.0] * 7
    assert np.all(row_residuals(c, b)[:-1] == 0.0)


def test_forward_solve_r3_first_row():
    c = ThreeTermCoeffs(
        alpha=lambda n: 1.0,
        beta=lambda n: 2.0,
        gamma=lambda n: 1.0,
        alpha_minus1=-2.0,
        form=RecurrenceForm.R3,
    )
    b = forward_solve(c, 3).b
    assert b[1] == 0.0
    assert b[2] == -1.0


def test_forward_solve_pivot():
    c = ThreeTermCoeffs(alpha=lambda n: n - 2.0, beta=lambda n: 1.0, gamma=lambda n: 1.0)
    with pytest.raises(PivotError) as info:
        forward_solve(c, 5)
    assert info.value.index == 2


def test_detect_truncation_factorized():
    # gamma_n = n - 2 vanishes at n = 2, so N = 1
    factors = GammaFactors(1, (-2,))
    c = ThreeTermCoeffs.from_factors(lambda n: 1.0, lambda n: 0.0, factors)
    assert detect_truncation(c, 100) == 1
    assert detect_truncation(c, 1) is None
    never = ThreeTermCoeffs.from_factors(lambda n: 1.0, lambda n: 0.0, GammaFactors(1, (1,)))
    assert detect_truncation(never, 100) is None


def test_detect_truncation_by_scan():
    c = ThreeTermCoeffs(alpha=lambda n: 1.0, beta=lambda n: 0.0, gamma=lambda n: n - 3.0)
    assert detect_truncation(c, 50) == 2


# ----------------------------------------------------------------------------
# characteristic problem
# ----------------------------------------------------------------------------


def test_characteristic_det_small_orders():
    c = generic_coeffs()
    lam = 0.7
    b = [c.beta_at(n, lam) for n in range(3)]
    al = [c.alpha(n) for n in range(3)]
    ga = [c.gamma(n) for n in range(3)]
    assert math.isclose(characteristic_det(c, 0, lam), b[0], rel_tol=1e-14)
    assert math.isclose(characteristic_det(c, 1, lam), b[0] * b[1] - al[0] * ga[1], rel_tol=1e-14)
    d2 = b[0] * b[1] * b[2] - al[1] * b[0] * ga[2] - al[0] * b[2] * ga[1]
    assert math.isclose(characteristic_det(c, 2, lam), d2, rel_tol=1e-13)
    assert math.isclose(np.linalg.det(characteristic_matrix(c, 2, lam)), d2, rel_tol=1e-12)


def test_characteristic_roots_symmetric_case():
    c = ThreeTermCoeffs(
        alpha=lambda n: 1.0,
        beta=lambda n: float(n * n),
        gamma=lambda n: 1.0,
        weight=lambda n: 1.0,
    )
    assert arscott_check(c, 4)
    result = characteristic_roots(c, 4)
    expected = np.sort(np.linalg.eigvalsh(characteristic_matrix(c, 4)))
    assert result.arscott_ok
    assert np.allclose(np.sort(result.eigenvalues), expected, atol=1e-12)
    assert all(r < 1e-10 for r in result.residuals)


def test_characteristic_roots_by_scan():
    # det = L^2 - 3L + 1 with alpha_0 gamma_1 < 0
    c = ThreeTermCoeffs(
        alpha=lambda n: 1.0,
        beta=lambda n: 3.0 * n,
        gamma=lambda n: -1.0,
        weight=lambda n: 1.0,
    )
    result = characteristic_roots(c, 1)
    assert not result.arscott_ok
    expected = [(3 - math.sqrt(5)) / 2, (3 + math.sqrt(5)) / 2]
    assert np.allclose(result.eigenvalues, expected, atol=1e-9)


def test_arscott_needs_a_weight():
    c = ThreeTermCoeffs(alpha=lambda n: 1.0, beta=lambda n: 0.0, gamma=lambda n: 1.0)
    with pytest.raises(DomainError):
        arscott_check(c, 2)
    assert arscott_check(generic_coeffs(), 0)


def test_lame_truncated_spectrum():
    _, e, c = lame_family("Psi_tilde_5")
    assert e.truncation == 1
    result = characteristic_roots(c, 1)
    assert np.allclose(np.sort(result.eigenvalues), [1.125, 4.125], atol=1e-10)


# ----------------------------------------------------------------------------
# continued fraction and minimal solutions
# ----------------------------------------------------------------------------


def test_continued_fraction_depth_zero():
    c = generic_coeffs()
    value, perturbed = continued_fraction(c, 0.4, 0)
    assert value == c.beta_eff(0, 0.4)
    assert not perturbed
    assert continued_fraction_residual(c, 0.4, 0) == abs(c.beta_eff(0, 0.4))


def test_continued_fraction_vanishes_on_the_truncated_spectrum():
    _, _, c = lame_family("Psi_tilde_5")
    for E in (1.125, 4.125):
        assert continued_fraction_residual(c, E, 6) < 1e-9
    assert continued_fraction_residual(c, 2.5, 6) > 1e-2


def test_continued_fraction_roots():
    _, _, c = lame_family("Psi_tilde_5")
    roots = continued_fraction_roots(c, 0.0, 6.0, 6)
    assert np.allclose(roots, [1.125, 4.125], atol=1e-9)
    with pytest.raises(DomainError):
        continued_fraction_roots(c, 2.0, 2.0, 6)


@pytest.mark.parametrize("a", [2.0, 4.0])
def test_minimal_ratio_limits(a):
    c = power_seed(HeunParams(a, 0.3, 0.4, 0.9, 0.6, 0.8))
    t1, t2 = minimal_ratio_limits(c)
    assert abs(t1 - 1.0 / a) < 1e-6
    assert abs(t2 - 1.0) < 1e-6


def test_minimal_ratio_equal_modulus():
    c = power_seed(HeunParams(-1.0, 0.3, 0.4, 0.9, 0.6, 0.8))
    with pytest.raises(DomainError):
        minimal_ratio_limits(c)


def test_backward_solve_trivial_order():
    assert list(backward_minimal_solve(generic_coeffs(), 0).b) == [1.0]


def test_backward_solve_matches_finite_solution():
    _, _, c = lame_family("Psi_tilde_5")
    E = 4.125
    forward = forward_solve(c, 1, E).b
    backward = backward_minimal_solve(c, 1, E).b
    assert np.allclose(forward, backward, atol=1e-10)


# ----------------------------------------------------------------------------
# similarity and rescaling
# ----------------------------------------------------------------------------


def test_antidiagonal_similarity():
    toeplitz = ThreeTermCoeffs(
        alpha=lambda n: 1.0, beta=lambda n: 2.0, gamma=lambda n: 1.0, weight=lambda n: 1.0
    )
    assert antidiagonal_similarity_check(toeplitz, toeplitz, 4)
    c = generic_coeffs()
    assert not antidiagonal_similarity_check(c, c, 3)
    with pytest.raises(DomainError):
        antidiagonal_similarity_check(c, c, -1)


def test_rescale_keeps_the_characteristic_polynomial():
    c = generic_coeffs()
    r = rescale(c, -0.5, [1.5])
    for lam in (0.0, 0.3, 2.0):
        assert math.isclose(characteristic_det(c, 4, lam), characteristic_det(r, 4, lam), rel_tol=1e-10, abs_tol=1e-9)
    with pytest.raises(DomainError):
        rescale(c, 0, [1.5])
