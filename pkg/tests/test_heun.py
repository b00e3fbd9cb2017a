import pytest

from heunlame.tools.expansions import evaluate_jet, power_series_origin
from heunlame.tools.heun import (
    ArgMap,
    CHEParams,
    HeunParams,
    Prefactor,
    SeriesGroup,
    compose,
    confluent_limit,
    degenerate_reduction,
    heun_ode_residual,
    heun_operator_residual,
    homotopy,
    make_params,
    moebius,
    reduce_to_hypergeometric,
    two_term_indices,
)
from heunlame.tools.verify import GENERIC, REDUCTION_CASES
from heunlame.utils.errors import DomainError


def close_params(p, r, tol=1e-12):
    return all(abs(float(x) - float(y)) <= tol for x, y in zip(p.as_tuple(), r.as_tuple()))


def test_make_params_rejects_merged_singularities():
    for a in (0, 1):
        with pytest.raises(DomainError):
            make_params(a, 0.1, 0.2, 0.3, 0.4, 0.5)
    p = make_params(2.0, 0.1, 0.2, 0.3, 0.4, 0.5)
    assert abs(p.epsilon - (0.2 + 0.3 + 1 - 0.4 - 0.5)) < 1e-15


def test_homotopy_two():
    p = GENERIC
    t = homotopy(p, 2)
    a, q, al, be, ga, de = p.as_tuple()
    assert t.params.gamma == 2 - ga
    assert abs(t.params.q - (q - (ga - 1) * (de * a + p.epsilon))) < 1e-15
    assert (t.params.alpha, t.params.beta) == (be - ga + 1, al - ga + 1)
    assert t.prefactor.x_exp == 1 - ga
    assert t.arg_map is ArgMap.IDENTITY


def test_homotopy_one_is_identity():
    t = homotopy(GENERIC, 1)
    assert t.steps == ()
    assert t.params == GENERIC
    assert t.prefactor.trivial


def test_homotopy_index_range():
    for i in (0, 9):
        with pytest.raises(DomainError):
            homotopy(GENERIC, i)


def test_homotopy_two_is_an_involution():
    t = homotopy(GENERIC, 2)
    back = compose(t, homotopy(t.params, 2))
    assert close_params(back.params, GENERIC)
    assert back.prefactor is not None
    assert abs(float(back.prefactor.x_exp)) < 1e-12


def test_moebius_one_minus_x_is_an_involution():
    m = moebius(GENERIC, "M49")
    assert m.arg_map is ArgMap.ONE_MINUS_X
    assert m.prefactor.trivial
    back = compose(m, moebius(m.params, "M49"))
    assert back.arg_map is ArgMap.IDENTITY
    assert back.steps == ()
    assert close_params(back.params, GENERIC)


def test_moebius_m17_parameters():
    a, q, al, be, ga, de = GENERIC.as_tuple()
    m = moebius(GENERIC, "m17")
    assert close_params(m.params, HeunParams(1 - a, -q + al * ga, al, -be + ga + de, ga, de))
    assert m.prefactor.one_minus_x_over_a_exp == -al
    assert m.arg_map is ArgMap.M17
    with pytest.raises(DomainError):
        moebius(GENERIC, "M99")


def test_prefactors_of_different_equations_do_not_multiply():
    with pytest.raises(DomainError):
        Prefactor(2.0, 0.5).times(Prefactor(3.0, 0.5))


@pytest.mark.parametrize("i", range(1, 9))
def test_homotopic_solutions_solve_the_source_equation(i):
    t = homotopy(GENERIC, i)
    inner = power_series_origin(t.params, 1)
    for x in (0.1, 0.2, 0.3, 0.4, 0.5):
        res = heun_ode_residual(lambda y: t.evaluate(lambda z: evaluate_jet(inner, z), y), GENERIC, x)
        assert res < 1e-8


@pytest.mark.parametrize("which,xs", [("M49", (0.6, 0.7, 0.8, 0.9)), ("M17", (0.1, 0.2, 0.3))])
def test_fractional_substitutions_solve_the_source_equation(which, xs):
    m = moebius(GENERIC, which)
    inner = power_series_origin(m.params, 1)
    for x in xs:
        res = heun_ode_residual(lambda y: m.evaluate(lambda z: evaluate_jet(inner, z), y), GENERIC, x)
        assert res < 1e-8


def test_residual_rejects_singular_points():
    for x in (0.0, 1.0, float(GENERIC.a)):
        with pytest.raises(DomainError):
            heun_ode_residual(lambda y: (1.0, 0.0, 0.0), GENERIC, x)


def test_operator_residual_accepts_tuples():
    # H = 1 solves the equation iff alpha beta x = q
    assert heun_operator_residual((1.0, 0.0, 0.0), 2.0, 0.0, 0.0, 1.0, 0.5, 0.5, 0.3) == 0.0


@pytest.mark.parametrize("case", sorted(REDUCTION_CASES))
def test_reductions_are_recognised_and_solve_the_equation(case):
    params, _ = REDUCTION_CASES[case]
    red = reduce_to_hypergeometric(params)
    assert red is not None and red.case_id == case
    for x in (0.15, 0.3, 0.45):
        assert heun_ode_residual(red.evaluate, params, x) < 1e-9


def test_generic_parameters_do_not_reduce():
    assert reduce_to_hypergeometric(GENERIC) is None


def test_degenerate_reductions():
    for a, case in ((0.0, 1), (1.0, 4)):
        args = (a, 0.4 if a else -0.3, 0.7, 0.45, 0.6, 0.8)
        red = degenerate_reduction(*args)
        assert red.case_id == case
        for x in (0.2, 0.5):
            assert heun_operator_residual(red.evaluate(x), *args, x) < 1e-9
    with pytest.raises(DomainError):
        degenerate_reduction(0.5, 0.1, 0.7, 0.45, 0.6, 0.8)


def test_two_term_indices_collapse_beta():
    params, _ = REDUCTION_CASES[2]
    indices = two_term_indices(params, SeriesGroup.POWER_ORIGIN)
    assert indices == {1, 2, 7, 8}
    for i in indices:
        beta = power_series_origin(params, i).coeffs.beta
        assert all(abs(beta(n)) < 1e-12 for n in range(8))
    assert two_term_indices(GENERIC, SeriesGroup.POWER_ORIGIN) == frozenset()


def test_confluent_limit():
    c = confluent_limit(GENERIC, 1.3, 0.7)
    assert c == CHEParams(GENERIC.gamma, GENERIC.delta, GENERIC.alpha, 1.3, 0.7)
    with pytest.raises(DomainError):
        confluent_limit(GENERIC, 0, 0.7)
