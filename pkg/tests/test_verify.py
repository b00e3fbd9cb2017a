from fractions import Fraction

import pytest

from heunlame.tools.darboux import LameProblem, build_eigenfunction, family_by_name, spectrum
from heunlame.tools.specfun import elliptic_K
from heunlame.tools.verify import (
    SUITES,
    CheckResult,
    VerificationReport,
    _lame_residual,
    golden_energies,
    run_suites,
    suite_degeneracy,
)
from heunlame.utils.config import get_settings
from heunlame.utils.errors import ConfigError


@pytest.mark.parametrize("name", list(SUITES))
def test_suite_passes(name):
    report = run_suites([name])
    assert report.checks
    assert report.passed, [c.to_dict() for c in report.failures]
    assert {c.suite for c in report.checks} == {name}


def test_unknown_suite():
    with pytest.raises(ConfigError):
        run_suites(["specfun", "bogus"])


def test_golden_values():
    assert golden_energies(Fraction(3, 2), 0.5) == pytest.approx([1.125, 4.125])
    assert golden_energies(Fraction(5, 2), 0.0) == pytest.approx([1.0, 1.0, 9.0])


def test_report_records():
    ok = CheckResult("specfun", "a", True, value=1e-15, limit=1e-12)
    bad = CheckResult("specfun", "b", False, detail="DomainError: x")
    report = VerificationReport([ok, bad])
    assert not report.passed
    assert report.failures == [bad]
    doc = report.to_dict()
    assert (doc["total"], doc["failed"]) == (2, 1)
    assert doc["checks"][1]["value"] is None
    assert set(doc["checks"][0]) == {"suite", "name", "passed", "value", "limit", "seconds", "detail"}


def test_residual_leaves_out_the_quarter_period():
    k2 = 0.5
    prob = LameProblem.create(0, 2, k2)
    spec = family_by_name(0, 2, "psi_tilde_2")
    for E in spectrum(prob, spec).eigenvalues:
        psi = build_eigenfunction(prob.at(E), spec)
        assert _lame_residual(psi, elliptic_K(k2)) < get_settings().residual_tol


def test_degeneracy_detail_carries_energies():
    by_name = {c.name: c for c in suite_degeneracy()}
    check = by_name["l=1 m=1/2"]
    assert check.passed
    assert "E=[2.375] vs [2.375]" in check.detail
    assert "closed form [2.375]" in check.detail
    assert "similar=True" in check.detail
