from fractions import Fraction

import pytest

from heunlame.tools.expansions import (
    che_expansion,
    convergence_region,
    erdelyi_expansion,
    evaluate,
    evaluate_jet,
    group_coefficients,
    hyp_series_initial,
    hyp_series_M17,
    hyp_series_one,
    ince_identity_gap,
    power_seed,
    power_series_one,
    power_series_origin,
    trigonometric_lame,
)
from heunlame.tools.heun import CHEParams, HeunParams, SeriesGroup, che_ode_residual, heun_ode_residual
from heunlame.tools.recurrence import RecurrenceForm, forward_solve
from heunlame.tools.verify import GENERIC
from heunlame.utils.errors import DomainError

HALF = Fraction(1, 2)
CHE = CHEParams(0.6, 0.9, 0.4, 1.3, 0.7)


# ----------------------------------------------------------------------------
# seeds and groups
# ----------------------------------------------------------------------------


def test_power_seed_coefficients():
    a, q, al, be, ga, de = GENERIC.as_tuple()
    c = power_seed(GENERIC)
    for n in range(5):
        assert abs(c.alpha(n) - a * (n + ga) * (n + 1)) < 1e-12
        lin = a * (ga + de - 1) + al + be - de
        assert abs(c.beta(n) - (-(a + 1) * n * n - lin * n - q)) < 1e-12
        assert abs(c.gamma(n) - (n + al - 1) * (n + be - 1)) < 1e-12


@pytest.mark.parametrize(
    "group,weight",
    [
        (SeriesGroup.POWER_ORIGIN, 1.0),
        (SeriesGroup.POWER_ONE, -1.0),
        (SeriesGroup.HYP_M17, -1.0),
        (SeriesGroup.HYP_ONE, -1.0),
        (SeriesGroup.HYP_INITIAL, 1.0),
    ],
)
def test_spectral_weight_follows_the_substitution(group, weight):
    e = group_coefficients(GENERIC, group, 1)
    assert e.coeffs.weight(0) == weight
    assert e.group is group


def test_unsupported_group():
    with pytest.raises(DomainError):
        group_coefficients(GENERIC, SeriesGroup.ERDELYI, 1)


def test_hyp_m17_gamma():
    _, _, al, be, ga, de = GENERIC.as_tuple()
    c = hyp_series_M17(GENERIC, 1).coeffs
    for n in range(5):
        assert abs(c.gamma(n) - (n + al - 1) * (n + al - de) * (n + al - be)) < 1e-12


def test_hyp_at_one_gamma():
    _, _, al, be, ga, de = GENERIC.as_tuple()
    c = hyp_series_one(GENERIC, 1).coeffs
    for n in range(5):
        assert abs(c.gamma(n) - (n + al - 1) * (n + al - ga) * (n + al + be - ga - de)) < 1e-12


def test_a_equal_one_gives_two_term_recurrences():
    p = HeunParams(1.0, 0.3, 0.4, 0.9, 0.6, 0.8)
    for e in (power_series_one(p, 1), hyp_series_M17(p, 1)):
        assert all(e.coeffs.alpha(n) == 0.0 for n in range(6))


def test_exact_truncation():
    p = HeunParams(2.5, 0.3, Fraction(-2), 0.7, 0.6, 0.8)
    assert power_series_origin(p, 1).truncation == 2
    assert power_series_origin(GENERIC, 1).truncation is None


# ----------------------------------------------------------------------------
# solutions
# ----------------------------------------------------------------------------


@pytest.mark.parametrize("build", [hyp_series_initial, lambda p: hyp_series_M17(p, 1)])
def test_hypergeometric_series_solve_the_equation(build):
    e = build(GENERIC)
    for x in (0.1, 0.2, 0.3):
        assert heun_ode_residual(lambda y: evaluate_jet(e, y), GENERIC, x) < 1e-8


def test_prefactor_only_evaluation():
    e = power_series_origin(GENERIC, 2)
    x = 0.3
    assert abs(evaluate(e, x, coefficients=[1.0]) - x ** (1 - GENERIC.gamma)) < 1e-14
    assert evaluate(power_series_origin(GENERIC, 1), x, coefficients=[1.0]) == 1.0


def test_infinite_series_outside_its_disk():
    with pytest.raises(DomainError):
        evaluate(power_series_origin(GENERIC, 1), 1.5)


def test_ince_identity():
    p = HeunParams(4, 0.41, 0.37, 1.19, 0.63, 0.77)
    xs = [0.1, 0.3, 0.5, 0.7]
    for i in range(1, 5):
        assert ince_identity_gap(p, i, xs) < 1e-9
    with pytest.raises(DomainError):
        ince_identity_gap(p, 5, xs)
    with pytest.raises(DomainError):
        ince_identity_gap(p, 1, [1.2])


# ----------------------------------------------------------------------------
# convergence
# ----------------------------------------------------------------------------


def test_convergence_beyond_the_unit_disk():
    p = HeunParams(4, 0.41, 0.37, 1.19, 0.63, 0.77)
    region = convergence_region(power_series_origin(p, 1))
    assert region.radius == 4.0
    assert region.local_radius == 1.0
    assert "eps'" in region.boundary_condition
    assert region.contains(0.9)
    assert not region.contains(2.0)
    assert region.contains(2.0, minimal=True)


@pytest.mark.parametrize("delta,ok", [(1.2, True), (0.8, False)])
def test_boundary_convergence_inside_the_unit_disk(delta, ok):
    p = HeunParams(0.5, 0.2, 0.37, 1.19, 0.63, delta)
    region = convergence_region(power_series_origin(p, 3))
    assert region.radius == 1.0
    assert "delta'" in region.boundary_condition
    assert region.boundary_ok is ok


def test_no_convergence_table_for_erdelyi():
    with pytest.raises(DomainError):
        convergence_region(erdelyi_expansion(GENERIC))


# ----------------------------------------------------------------------------
# Erdelyi, Svartholm and confluent series
# ----------------------------------------------------------------------------


def test_erdelyi_perturbed_first_row():
    e = erdelyi_expansion(HeunParams(2.5, 0.3, 0.6, 1.1, 0.5, 0.7))
    assert e.coeffs.form is RecurrenceForm.R3
    assert abs(e.coeffs.alpha_minus1 - 0.01) < 1e-14


def test_svartholm_branch_form():
    p = HeunParams(2.5, 0.3, 0.6, 1.1, 0.4, 0.6)
    assert erdelyi_expansion(p, "svartholm").coeffs.form is RecurrenceForm.R2
    assert erdelyi_expansion(p).coeffs.form is RecurrenceForm.R1


def test_trigonometric_lame_coefficients():
    p = HeunParams(2, 0, 1.25, -0.75, HALF, HALF)
    c = trigonometric_lame(p).coeffs
    for n in range(5):
        assert abs(c.alpha(n) + (n + 1 - 1.25) * (n + 1 + 0.75) / 4) < 1e-14
    assert c.form is RecurrenceForm.R2
    assert abs(c.alpha_minus1 + 1.25 * -0.75 / 4) < 1e-15
    with pytest.raises(DomainError):
        trigonometric_lame(GENERIC)


def test_confluent_power_series():
    e = che_expansion(CHE)
    b = forward_solve(e.coeffs, 1).b
    assert abs(b[1] + CHE.sigma / CHE.gamma) < 1e-15
    for x in (0.1, 0.25, 0.4):
        assert che_ode_residual(lambda y: evaluate_jet(e, y), CHE, x) < 1e-8


def test_confluent_hypergeometric_gamma():
    c = che_expansion(CHE, "hyp").coeffs
    for n in range(1, 5):
        assert abs(c.gamma(n) + CHE.rho * (n + CHE.alpha - 1) * (n + CHE.alpha - CHE.delta)) < 1e-12


def test_confluent_errors():
    with pytest.raises(DomainError):
        che_expansion(CHE, "bogus")
    with pytest.raises(DomainError):
        che_expansion(CHEParams(0.6, 0.9, 0.4, 0, 0.7))
