import math

import pytest

from heunlame.utils.config import Settings, load_settings, override_settings
from heunlame.utils.errors import (
    ConfigError,
    DivergenceError,
    DomainError,
    HeunlameError,
    PivotError,
    PoleError,
    SolverError,
    SpectrumError,
)
from heunlame.utils.jets import Jet, lift


# ----------------------------------------------------------------------------
# settings
# ----------------------------------------------------------------------------


def test_defaults_without_overrides():
    assert load_settings({}) == Settings()


def test_environment_overrides():
    s = load_settings(
        {
            "HEUNLAME_RESIDUAL_TOL": "1e-9",
            "HEUNLAME_MAX_TERMS": "1e3",
            "HEUNLAME_VERBOSE": "yes",
            "UNRELATED": "x",
        }
    )
    assert s.residual_tol == 1e-9
    assert s.max_terms == 1000 and isinstance(s.max_terms, int)
    assert s.verbose is True
    assert load_settings({"HEUNLAME_VERBOSE": "off"}).verbose is False


@pytest.mark.parametrize(
    "key,value",
    [
        ("HEUNLAME_RESIDUAL_TOL", "small"),
        ("HEUNLAME_RESIDUAL_TOL", "-1e-9"),
        ("HEUNLAME_MAX_TERMS", "0"),
        ("HEUNLAME_VERBOSE", "maybe"),
    ],
)
def test_invalid_environment_values(key, value):
    with pytest.raises(ConfigError):
        load_settings({key: value})


def test_override_settings():
    base = Settings()
    s = override_settings(base, residual_tol="1e-6", verbose=True)
    assert s.residual_tol == 1e-6 and s.verbose
    assert base.residual_tol == 1e-8
    with pytest.raises(ConfigError):
        override_settings(base, nonsense="1")
    assert set(s.as_dict()) >= {"snap_tol", "truncation_tol", "max_terms"}


# ----------------------------------------------------------------------------
# errors
# ----------------------------------------------------------------------------


def test_error_hierarchy():
    assert issubclass(PoleError, DomainError)
    assert issubclass(SpectrumError, SolverError)
    for cls in (ConfigError, DomainError, DivergenceError, PivotError, SolverError):
        assert issubclass(cls, HeunlameError)
    assert issubclass(DomainError, ValueError)
    err = PivotError(3)
    assert err.index == 3 and "alpha_3" in str(err)


# ----------------------------------------------------------------------------
# jets
# ----------------------------------------------------------------------------


def test_jet_arithmetic():
    x = Jet.variable(0.7)
    f = (3.0 * x * x - 1.0) / (x + 2.0)
    # f = (3x^2 - 1)/(x + 2)
    assert f.value == pytest.approx((3 * 0.49 - 1) / 2.7)
    assert f.d1 == pytest.approx((3 * 0.49 + 12 * 0.7 + 1) / 2.7**2)
    assert f.d2 == pytest.approx(22 / 2.7**3)


def test_jet_powers():
    x = Jet.variable(2.0)
    assert (x**0).value == 1.0 and (x**0).d1 == 0.0
    r = x**0.5
    assert r.d1 == pytest.approx(0.5 / math.sqrt(2.0))
    assert r.d2 == pytest.approx(-0.25 * 2.0**-1.5)
    with pytest.raises(ValueError):
        Jet.variable(-1.0) ** 0.5
    with pytest.raises(ZeroDivisionError):
        Jet.variable(0.0) ** -1
    s = Jet.variable(-2.0).signed_power(3)
    assert s.value == -8.0 and s.d1 == 12.0


def test_lift_and_apply():
    assert lift(2.5).d1 == 0.0
    x = Jet.variable(0.3)
    assert lift(x) is x
    s = x.apply(math.sin(0.3), math.cos(0.3), -math.sin(0.3))
    assert s.d2 == pytest.approx(-math.sin(0.3))
