import math
from fractions import Fraction

import numpy as np
import pytest
from scipy import special

from heunlame.tools.darboux import (
    FamilyKind,
    HypergeometricContinuation,
    LameProblem,
    Parity,
    Period,
    Potential,
    SchrodingerScaling,
    associated_lame_residual,
    as_rational,
    build_eigenfunction,
    build_infinite_eigenfunction,
    classify_finite_series,
    closed_form_eigenfunction,
    complex_phase,
    darboux_to_heun,
    degeneracy_pairs,
    degenerate_indices,
    family_by_name,
    family_expansion,
    generation_gap,
    heun_to_darboux,
    infinite_families,
    infinite_spectrum,
    lame_power_table,
    one_term_energy,
    parity_period_verify,
    parse_family,
    phase_power_form,
    potential_to_heun,
    scale_energy,
    spectrum,
    symmetry_map,
    two_term_energies,
)
from heunlame.tools.heun import SeriesGroup
from heunlame.tools.recurrence import truncation_points
from heunlame.tools.specfun import gamma, jacobi
from heunlame.utils.config import get_settings
from heunlame.utils.errors import ConfigError, DomainError, SpectrumError
from heunlame.utils.jets import Jet

HALF = Fraction(1, 2)


def energies(l, m, k2, name):
    prob = LameProblem.create(l, m, k2)
    spec = family_by_name(l, m, name)
    return prob, spec, [float(v) for v in spectrum(prob, spec).eigenvalues]


# ----------------------------------------------------------------------------
# parameters and potentials
# ----------------------------------------------------------------------------


def test_as_rational():
    assert as_rational("1/2") == HALF
    assert as_rational(" -3/2 ") == Fraction(-3, 2)
    assert as_rational(2) == Fraction(2)
    assert as_rational(0.5) == HALF
    assert as_rational("1.5") == Fraction(3, 2)
    assert isinstance(as_rational(0.1234567891234), float)
    for bad in ("abc", "1/0", "inf"):
        with pytest.raises(ConfigError):
            as_rational(bad)


def test_problem_domain():
    for k2 in (0.0, 1.0, 1.5):
        with pytest.raises(DomainError):
            LameProblem.create(HALF, 1, k2)
    prob = LameProblem.create("1/2", "3/2", 0.5)
    with pytest.raises(DomainError):
        prob.require_energy()
    with pytest.raises(DomainError):
        associated_lame_residual(prob, Jet(1.0), 0.3)


def test_heun_parameters_of_the_problem():
    prob = LameProblem.create("1/2", "3/2", 0.5)
    p = prob.heun_params(2.0)
    assert p.alpha == 0 and p.beta == 2
    assert p.gamma == p.delta == HALF
    assert p.a == 2.0
    assert abs(p.q - (2.25 / 4 - 1.0)) < 1e-15


def test_darboux_round_trip():
    prob = LameProblem.create("1/2", "3/2", 0.5)
    p = prob.heun_params(2.0)
    d = heun_to_darboux(p, 0.5)
    assert abs(d.h - 2.0) < 1e-12
    assert d.mu == prob.m and d.lam == prob.l
    assert d.nu1 == 0 and d.nu2 == 0
    back = darboux_to_heun(d)
    assert all(abs(float(x) - float(y)) < 1e-12 for x, y in zip(back.as_tuple(), p.as_tuple()))
    with pytest.raises(DomainError):
        heun_to_darboux(p, 0.3)


def test_potential_strengths():
    constant, strengths = Potential.v1(1).terms(0.5)
    assert constant == -13.0
    products = [float(s) * (float(s) + 1) for s in strengths]
    assert products == [0.0, 0.0, 2.0, 12.0]

    pot = Potential.v4(0.25, 0.25, 0.25, 0.0)
    constant, strengths = pot.terms(0.4)
    assert constant == 0.0
    assert all(abs(float(s) * (float(s) + 1)) < 1e-15 for s in strengths)
    assert abs(pot.value(0.7, 0.4)) < 1e-15


def test_custom_potential():
    pot = Potential.custom(1.0, 2.0, 0.0, 0.0, 6.0)
    _, strengths = pot.terms(0.5)
    assert np.allclose(strengths, [1.0, 0.0, 0.0, 2.0])
    with pytest.raises(DomainError):
        Potential.custom(0.0, -1.0, 0.0, 0.0, 0.0).terms(0.5)


def test_associated_lame_potential():
    prob = LameProblem.create("1/2", "3/2", 0.6)
    pot = Potential.v3(prob.l, prob.m)
    for u in (0.2, 0.9, 1.7):
        assert abs(pot.value(u, 0.6) - prob.potential(u)) < 1e-12
    p = potential_to_heun(pot, 0.6, 3.0)
    q = prob.heun_params(3.0)
    assert all(abs(float(x) - float(y)) < 1e-12 for x, y in zip(p.as_tuple(), q.as_tuple()))
    assert LameProblem.from_potential(pot, 0.6) == prob
    with pytest.raises(DomainError):
        LameProblem.from_potential(Potential.v1(1), 0.6)


def test_schrodinger_scaling():
    assert scale_energy(SchrodingerScaling(M=2.0, E_phys=3.0, kappa=2.0)) == 3.0
    with pytest.raises(DomainError):
        scale_energy(SchrodingerScaling(M=0.0, E_phys=1.0))


# ----------------------------------------------------------------------------
# classification
# ----------------------------------------------------------------------------


def test_parse_family():
    assert parse_family("psi_tilde_5") == (FamilyKind.SN_TILDE, 5)
    assert parse_family("Psi_hyp_7") == (FamilyKind.HYP_CN, 7)
    assert parse_family("Phi_4") == (FamilyKind.INFINITE, 4)
    for bad in ("Phi_9", "foo_1", "psi_ring", "psi_ring_x"):
        with pytest.raises(ConfigError):
            parse_family(bad)


def test_classification_at_half_three_halves():
    by_name = {s.name: s for s in classify_finite_series("1/2", "3/2")}
    assert by_name["Psi_ring_1"].N == 0
    assert by_name["Psi_tilde_5"].N == 1
    assert by_name["Psi_tilde_8"].N == 0
    assert all(by_name[n].arscott_ok for n in ("Psi_ring_1", "Psi_tilde_5", "Psi_tilde_8"))


@pytest.mark.parametrize(
    "l,m,name,parity,period",
    [
        (1, 0, "psi_ring_5", Parity.EVEN, Period.TWO_K),
        (0, 2, "Psi_tilde_8", Parity.ODD, Period.TWO_K),
        (-2, 0, "psi_tilde_1", Parity.EVEN, Period.TWO_K),
    ],
)
def test_family_labels(l, m, name, parity, period):
    spec = family_by_name(l, m, name)
    assert (spec.parity, spec.period) == (parity, period)
    assert spec.to_dict()["family"] == name


def test_infinite_families():
    assert [s.index for s in infinite_families("1/2", "3/2")] == [2, 3, 4, 6, 7]
    with pytest.raises(DomainError):
        family_by_name("1/2", "3/2", "Phi_1")


@pytest.mark.parametrize("l,m", [("-3/2", "-3/2"), ("-3/2", "1/2"), ("1/2", "3/2"), (0, 2)])
def test_sn_and_cn_series_are_not_both_admissible(l, m):
    specs = classify_finite_series(l, m)
    sn_ok = {s.index for s in specs if s.group is SeriesGroup.POWER_ORIGIN and s.arscott_ok}
    cn_ok = {s.index for s in specs if s.group is SeriesGroup.POWER_ONE and s.arscott_ok}
    assert not sn_ok & cn_ok


def test_one_term_admissibility_follows_alpha_gamma_sign():
    prob = LameProblem.create("-3/2", "-3/2", 0.5)
    for spec in classify_finite_series(prob.l, prob.m):
        if spec.N != 0 or spec.kind.hypergeometric:
            continue
        c = prob.energy_coeffs(family_expansion(prob, spec.group, spec.index).coeffs)
        assert spec.arscott_ok == (float(c.alpha(0)) * c.gamma_eff(0) > 0.0)


def _truncating(l, m, group):
    prob = LameProblem.create(l, m, 0.5)
    out = set()
    for i in range(1, 9):
        try:
            e = family_expansion(prob, group, i)
        except DomainError:
            continue
        if truncation_points(e.coeffs, get_settings().max_terms):
            out.add(i)
    return out


@pytest.mark.parametrize(
    "l,m,group",
    [
        (1, "1/2", SeriesGroup.HYP_M17),
        ("1/2", 1, SeriesGroup.HYP_ONE),
        ("1/2", "3/2", SeriesGroup.HYP_M17),
        ("1/2", "3/2", SeriesGroup.HYP_ONE),
    ],
)
def test_every_truncating_hypergeometric_family_is_listed(l, m, group):
    listed = {s.index for s in classify_finite_series(l, m) if s.group is group}
    assert listed == _truncating(l, m, group)


def test_unsettled_continuation_keeps_the_family(monkeypatch):
    def unsettled(self):
        raise DomainError("no period of the form 2K, 4K or 8K")

    monkeypatch.setattr(HypergeometricContinuation, "labels", unsettled)
    hyp = [s for s in classify_finite_series(1, "1/2") if s.kind.hypergeometric]
    assert {s.index for s in hyp} == _truncating(1, "1/2", SeriesGroup.HYP_M17)
    assert all(s.period is Period.UNDETERMINED for s in hyp)
    assert hyp[0].to_dict()["period"] == "undetermined"


@pytest.mark.parametrize("group", [SeriesGroup.POWER_ORIGIN, SeriesGroup.POWER_ONE])
@pytest.mark.parametrize("i", range(1, 9))
@pytest.mark.parametrize("l,m,k2", [("3/2", "-5/2", 0.37), (1, 3, 0.6), ("-1/3", "2/5", 0.25)])
def test_closed_form_table_matches_transformation_route(group, i, l, m, k2):
    prob = LameProblem.create(l, m, k2)
    for E in (0.0, 3.7):
        assert generation_gap(prob, group, i, E) < 1e-12


def test_closed_form_table_entries():
    l, m, k2, E = Fraction(1), Fraction(3), 0.6, 1.3
    prob = LameProblem.create(l, m, k2)
    a = 1.0 / k2

    plain = lame_power_table(prob, SeriesGroup.POWER_ONE, 1)
    n = 2
    expected = (a - 2) * n * n - 2 * n - E / (4 * k2) + (12 - 2) / 4
    assert plain.beta_at(n, E) == pytest.approx(expected, abs=1e-12)

    full = lame_power_table(prob, SeriesGroup.POWER_ONE, 8)
    slope = full.beta_at(2) - full.beta_at(1) - 3 * (a - 2)
    assert slope == pytest.approx(2 * a + 1 - 3, abs=1e-12)

    sn_side = lame_power_table(prob, SeriesGroup.POWER_ONE, 2)
    cn_side = lame_power_table(prob, SeriesGroup.POWER_ONE, 3)
    assert sn_side.alpha(1) == pytest.approx((1 - a) * 2 * 1.5, abs=1e-12)
    assert cn_side.alpha(1) == pytest.approx((1 - a) * 2 * 2.5, abs=1e-12)

    origin = lame_power_table(prob, SeriesGroup.POWER_ORIGIN, 1)
    assert origin.alpha(0) == pytest.approx(a / 2, abs=1e-12)
    assert float(origin.gamma(1)) == pytest.approx(float((l - m + 1) / 2 * ((l + m + 2) / 2)), abs=1e-12)


def test_closed_form_table_rejects_other_groups():
    prob = LameProblem.create(1, "1/2", 0.5)
    with pytest.raises(DomainError):
        lame_power_table(prob, SeriesGroup.HYP_M17, 1)
    with pytest.raises(DomainError):
        lame_power_table(prob, SeriesGroup.POWER_ORIGIN, 9)


# ----------------------------------------------------------------------------
# spectra and eigenfunctions
# ----------------------------------------------------------------------------


def test_ground_state_in_closed_form():
    k2 = 0.5
    prob, spec, values = energies("1/2", "3/2", k2, "Psi_ring_1")
    assert values == pytest.approx([9 * k2 / 4], abs=1e-12)
    psi = build_eigenfunction(prob.at(values[0]), spec)
    for u in (0.1, 0.8, 1.9, 3.3):
        dn = special.ellipj(u, k2)[2]
        assert abs(psi(u) - dn**1.5) < 1e-12
        assert psi.residual(u) < 1e-10


def test_two_by_two_spectrum():
    _, _, values = energies("1/2", "3/2", 0.5, "Psi_tilde_5")
    assert values == pytest.approx([1.125, 4.125], abs=1e-10)


def test_quadratic_energies():
    k2 = 0.3
    _, _, values = energies("1/2", "7/2", k2, "Psi_ring_1")
    root = math.sqrt(4 + 25 * k2 * k2 - 4 * k2)
    assert values == pytest.approx([2 + 29 * k2 / 4 - root, 2 + 29 * k2 / 4 + root], abs=1e-10)


def test_excited_state_shape():
    prob, spec, values = energies("1/2", "3/2", 0.5, "Psi_tilde_5")
    psi = build_eigenfunction(prob.at(values[1]), spec)
    ratios = []
    for u in (0.3, 0.6, 1.3):
        sn, cn, dn = jacobi(u, 0.5)
        ratios.append(psi(u) / (dn**-0.5 * (1 - 2 * cn * cn)))
    assert max(ratios) - min(ratios) < 1e-9 * abs(ratios[0])
    assert parity_period_verify(psi).passed


def test_energy_must_be_in_the_spectrum():
    prob, spec, values = energies("1/2", "3/2", 0.5, "Psi_tilde_5")
    with pytest.raises(SpectrumError):
        build_eigenfunction(prob.at(values[0] + 0.5), spec)
    with pytest.raises(DomainError):
        build_eigenfunction(prob, spec)
    with pytest.raises(DomainError):
        spectrum(LameProblem.create(0, 2, 0.5), spec)


def test_one_term_hypergeometric_energy():
    prob, spec, values = energies(1, "1/2", 0.5, "psi_hyp_1")
    assert spec.N == 0
    assert values == pytest.approx([2.375], abs=1e-12)
    assert one_term_energy(prob) == 2.375
    with pytest.raises(DomainError):
        one_term_energy(LameProblem.create(1, 0, 0.5))


# ----------------------------------------------------------------------------
# infinite series
# ----------------------------------------------------------------------------


def test_infinite_spectra_coincide():
    prob = LameProblem.create("1/2", "3/2", 0.5)
    two = infinite_spectrum(prob, 2, (0.0, 20.0))
    six = infinite_spectrum(prob, 6, (-1.0, 25.0))
    assert two
    for E in two[:3]:
        assert min(abs(E - F) for F in six) < 1e-8
    with pytest.raises(DomainError):
        infinite_spectrum(prob, 1, (0.0, 20.0))


def test_infinite_eigenfunction():
    prob = LameProblem.create("1/2", "3/2", 0.5)
    E = infinite_spectrum(prob, 2, (0.0, 20.0))[0]
    psi = build_infinite_eigenfunction(prob.at(E), 2)
    assert psi(0.0) == 0.0
    assert psi.spec.kind is FamilyKind.INFINITE
    for u in (0.4, 1.1):
        assert psi.residual(u) < 1e-7
    with pytest.raises(SpectrumError):
        build_infinite_eigenfunction(prob.at(E + 0.37), 2)


# ----------------------------------------------------------------------------
# degeneracy and symmetries
# ----------------------------------------------------------------------------


def test_degenerate_pairs():
    k2 = 0.5
    pairs = degeneracy_pairs(0, "3/2", k2)
    assert {(p.first.name, p.second.name) for p in pairs} == {
        ("psi_hyp_1", "psi_hyp_6"),
        ("psi_hyp_4", "psi_hyp_7"),
    }
    assert all(p.verified and p.similar for p in pairs)
    expected = two_term_energies(LameProblem.create(0, "3/2", k2))
    assert expected == pytest.approx([1.0089745962, 2.7410254038], abs=1e-9)
    for p in pairs:
        assert p.energies == pytest.approx(expected, abs=1e-9)
        assert p.other_energies == pytest.approx(expected, abs=1e-9)
        assert all(abs(w) > 1e-6 for w in p.wronskians)
    with pytest.raises(DomainError):
        degeneracy_pairs("1/2", "3/2", 0.5)


def test_one_term_degenerate_pairs_are_distinct_functions():
    pairs = degeneracy_pairs(1, "1/2", 0.5)
    assert {(p.first.index, p.second.index) for p in pairs} == {(1, 6), (4, 7)}
    for p in pairs:
        assert p.verified
        assert p.energies == pytest.approx([2.375], abs=1e-12)
        assert abs(p.wronskians[0]) > 1e-6


def test_cn_side_degenerate_pairs():
    pairs = degeneracy_pairs("1/2", 1, 0.5)
    assert {(p.first.name, p.second.name) for p in pairs} == {
        ("Psi_hyp_5", "Psi_hyp_7"),
        ("Psi_hyp_6", "Psi_hyp_8"),
    }
    for p in pairs:
        assert p.verified
        assert p.energies == pytest.approx([2.375], abs=1e-12)


@pytest.mark.parametrize(
    "l,m,expected",
    [
        (0, "3/2", ((1, 6), (4, 7))),
        (0, "-3/2", ((5, 2), (8, 3))),
        ("1/2", 1, ((5, 7), (6, 8))),
        ("-3/2", 1, ((1, 3), (2, 4))),
    ],
)
def test_degenerate_indices(l, m, expected):
    assert degenerate_indices(l, m) == expected


def test_degenerate_indices_outside_regime():
    for l, m in (("1/2", "3/2"), (1, 2), (0, "-1/2")):
        with pytest.raises(DomainError):
            degenerate_indices(l, m)


@pytest.mark.parametrize("k2", [0.2, 0.5, 0.9])
@pytest.mark.parametrize("p", [0, 1, 2])
def test_two_term_energies_solve_the_truncated_recurrence(p, k2):
    prob = LameProblem.create(p, "3/2", k2)
    c = prob.energy_coeffs(family_expansion(prob, SeriesGroup.HYP_M17, 1).coeffs)
    for E in two_term_energies(prob):
        det = c.beta_eff(0, E) * c.beta_eff(1, E) - float(c.alpha(0)) * c.gamma_eff(1)
        scale = 1.0 + abs(c.beta_eff(0, E) * c.beta_eff(1, E))
        assert abs(det) < 1e-9 * scale
    assert two_term_energies(LameProblem.create("3/2", p, k2)) == pytest.approx(
        two_term_energies(prob), abs=1e-14
    )


def test_two_term_energies_limits():
    for p in (0, 1, 3):
        low, high = two_term_energies(LameProblem.create(p, "3/2", 1 - 1e-12))
        assert low == pytest.approx(p * p + p + 1.5, abs=1e-5)
        assert high == pytest.approx(p * p + p + 3.5, abs=1e-5)
    low, high = two_term_energies(LameProblem.create(0, "3/2", 1e-12))
    assert (low, high) == pytest.approx((0.25, 2.25), abs=1e-6)
    with pytest.raises(DomainError):
        two_term_energies(LameProblem.create(0, "1/2", 0.5))


def test_negating_l_and_m():
    spec = family_by_name(1, 0, "psi_ring_5")
    mapped = symmetry_map(spec, "negate_lm")
    assert mapped.name == "psi_ring_1"
    assert (mapped.l, mapped.m) == (-2, -1)
    back = symmetry_map(mapped, "negate_lm")
    assert (back.name, back.l, back.m) == (spec.name, spec.l, spec.m)

    k2 = 0.5
    first, _, e1 = energies(1, 0, k2, "psi_ring_5")
    second, _, e2 = energies(-2, -1, k2, "psi_ring_1")
    assert e1 == pytest.approx(e2, abs=1e-12)
    f = build_eigenfunction(first.at(e1[0]), spec)
    g = build_eigenfunction(second.at(e2[0]), mapped)
    for u in (0.3, 1.4):
        dn = jacobi(u, k2).dn
        assert abs(f(u) - 1 / dn) < 1e-12
        assert abs(g(u) - 1 / dn) < 1e-12


def test_shift_by_K():
    mapped = symmetry_map(family_by_name(1, "1/2", "psi_hyp_1"), "shift_K")
    assert mapped.name == "Psi_hyp_5"
    assert (mapped.l, mapped.m) == (HALF, 1)
    with pytest.raises(DomainError):
        symmetry_map(family_by_name("1/2", "3/2", "Psi_ring_1"), "shift_K")


# ----------------------------------------------------------------------------
# closed forms
# ----------------------------------------------------------------------------


def test_closed_form_matches_phase_power():
    prob = LameProblem.create(1, "1/2", 0.4)
    spec = family_by_name(1, "1/2", "psi_hyp_1")
    for u in (0.1, 0.6, 1.2):
        value = closed_form_eigenfunction(prob, spec, u) * gamma(0.5)
        assert abs(value - phase_power_form(1.0, 0.4, u)) < 1e-12
        assert abs(abs(complex_phase(u, 0.4)) - 1.0) < 1e-14


def test_closed_form_is_an_eigenfunction():
    prob, spec, values = energies(1, "1/2", 0.4, "psi_hyp_1")
    psi = build_eigenfunction(prob.at(values[0]), spec)
    ratios = [psi(u) / closed_form_eigenfunction(prob, spec, u) for u in (0.2, 0.7, 1.1)]
    assert max(ratios) - min(ratios) < 1e-8 * abs(ratios[0])


def test_no_closed_form():
    prob = LameProblem.create("1/2", "3/2", 0.5)
    with pytest.raises(DomainError):
        closed_form_eigenfunction(prob, family_by_name("1/2", "3/2", "Psi_ring_1"), 0.3)
