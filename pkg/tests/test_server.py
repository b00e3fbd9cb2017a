import pytest
from scipy import special

from heunlame import server


def test_classify_parameters():
    out = server.classify_parameters("1/2", "3/2")
    names = {f["family"] for f in out["families"]}
    assert {"Psi_ring_1", "Psi_tilde_5"} <= names
    assert any(n.startswith("Phi_") for n in names)


def test_compute_spectrum():
    out = server.compute_spectrum("1/2", "3/2", 0.5, "Psi_tilde_5")
    assert [r["energy"] for r in out["rows"]] == pytest.approx([1.125, 4.125], abs=1e-10)
    assert all(r["family"] == "Psi_tilde_5" for r in out["rows"])


def test_infinite_series_energies():
    out = server.infinite_series_energies("1/2", "3/2", 0.5, 2, 0.0, 20.0)
    assert out["family"] == "Phi_2"
    assert out["energies"] == sorted(out["energies"])
    assert "error" in server.infinite_series_energies("1/2", "3/2", 0.5, 1, 0.0, 20.0)


def test_tabulate_eigenfunction():
    out = server.tabulate_eigenfunction("1/2", "3/2", 0.5, "Psi_ring_1", u_max=1.0, points=3)
    assert out["energy"] == pytest.approx(1.125, abs=1e-10)
    assert [r["u"] for r in out["rows"]] == pytest.approx([0.0, 0.5, 1.0])
    for r in out["rows"]:
        assert abs(r["psi"] - special.ellipj(r["u"], 0.5)[2] ** 1.5) < 1e-12


@pytest.mark.parametrize(
    "call",
    [
        lambda: server.classify_parameters("abc", "3/2"),
        lambda: server.compute_spectrum("1/2", "3/2", 1.5),
        lambda: server.compute_spectrum("1/2", "3/2", 0.5, "Psi_bogus_9"),
        lambda: server.tabulate_eigenfunction("1/2", "3/2", 0.5, "Psi_ring_1", points=1),
        lambda: server.run_verification(["bogus"]),
    ],
)
def test_errors_come_back_as_records(call):
    out = call()
    assert set(out) == {"error"}


def test_run_verification():
    out = server.run_verification(["specfun"])
    assert out["passed"] and out["failed"] == 0
