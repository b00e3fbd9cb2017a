import csv
import io
import json

import pytest
from scipy import special

from heunlame.cli import EXIT_CONFIG, EXIT_OK, EXIT_SOLVER, EXIT_VERIFY, main, parse_grid, parse_tolerances
from heunlame.tools.specfun import elliptic_K
from heunlame.utils.config import get_settings
from heunlame.utils.errors import ConfigError


def rows_of(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_spectrum_csv(capsys):
    code = main(["spectrum", "--l", "1/2", "--m", "3/2", "--k2", "0.5", "--family", "Psi_tilde_5"])
    assert code == EXIT_OK
    rows = rows_of(capsys.readouterr().out)
    assert [r["family"] for r in rows] == ["Psi_tilde_5", "Psi_tilde_5"]
    assert [float(r["energy"]) for r in rows] == pytest.approx([1.125, 4.125], abs=1e-10)
    assert all(r["N"] == "1" and r["arscott_ok"] == "true" for r in rows)


def test_eigenfunction_table_to_file(tmp_path):
    out = tmp_path / "tables" / "psi.csv"
    code = main(
        ["eigenfunction", "--l", "1/2", "--m", "3/2", "--family", "Psi_ring_1", "--grid", "0:2K:5", "--out", str(out)]
    )
    assert code == EXIT_OK
    rows = rows_of(out.read_text(encoding="utf-8"))
    assert len(rows) == 5
    K = elliptic_K(0.5)
    assert float(rows[-1]["u"]) == pytest.approx(2 * K, abs=1e-15)
    for r in rows:
        u = float(r["u"])
        assert abs(float(r["psi"]) - special.ellipj(u, 0.5)[2] ** 1.5) < 1e-12
        assert float(r["ode_residual"]) < 1e-10


def test_two_point_grid(capsys):
    code = main(["eigenfunction", "--l", "1/2", "--m", "3/2", "--family", "Psi_ring_1", "--grid", "0:1:2"])
    assert code == EXIT_OK
    assert len(rows_of(capsys.readouterr().out)) == 2


def test_classify_json(capsys):
    code = main(["classify", "--l=-2", "--m", "0", "--format", "json"])
    assert code == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == 1
    assert doc["command"] == "classify"
    assert doc["params"]["l"] == "-2"
    assert "psi_tilde_1" in {r["family"] for r in doc["rows"]}


def test_verify_selected_suite(capsys):
    assert main(["verify", "--only", "specfun"]) == EXIT_OK
    rows = rows_of(capsys.readouterr().out)
    assert rows and {r["suite"] for r in rows} == {"specfun"}


def test_verify_failure_exit_code(capsys):
    code = main(["verify", "--only", "svartholm", "--tol", "residual_tol=1e-300"])
    assert code == EXIT_VERIFY
    assert "svartholm" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["spectrum", "--l", "1/2", "--m", "3/2", "--k2", "1.5"],
        ["spectrum", "--l", "abc", "--m", "3/2"],
        ["spectrum", "--l", "1/2"],
        ["eigenfunction", "--l", "1/2", "--m", "3/2"],
        ["eigenfunction", "--l", "1/2", "--m", "3/2", "--family", "Psi_ring_1", "--grid", "0:1:1"],
        ["eigenfunction", "--l", "1/2", "--m", "3/2", "--family", "Psi_ring_1", "--index", "3"],
        ["verify", "--only", "bogus"],
        ["verify", "--tol", "bogus=1"],
        ["verify", "--tol", "residual_tol"],
    ],
)
def test_configuration_errors(argv, capsys):
    assert main(argv) == EXIT_CONFIG
    assert "❌" in capsys.readouterr().err


def test_energy_outside_the_spectrum(capsys):
    code = main(["eigenfunction", "--l", "1/2", "--m", "3/2", "--family", "Psi_ring_1", "--energy", "2.0"])
    assert code == EXIT_SOLVER
    assert "solver failure" in capsys.readouterr().err


def test_tolerance_override_is_installed(capsys):
    main(["classify", "--l", "1", "--m", "0", "--tol", "residual_tol=1e-9"])
    assert get_settings().residual_tol == 1e-9


def test_parse_grid():
    K = elliptic_K(0.5)
    assert parse_grid("0:2K:3", 0.5).values() == pytest.approx([0.0, K, 2 * K])
    assert parse_grid("-K:0.5K:2", 0.5).values() == pytest.approx([-K, 0.5 * K])
    for bad in ("0:1", "0:x:3", "0:1:many", "0:1:1"):
        with pytest.raises(ConfigError):
            parse_grid(bad, 0.5)


def test_parse_tolerances():
    assert parse_tolerances(["residual_tol=1e-9", " max_terms = 100 "]) == {
        "residual_tol": "1e-9",
        "max_terms": "100",
    }
    with pytest.raises(ConfigError):
        parse_tolerances(["residual_tol"])
