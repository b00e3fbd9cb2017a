"""
heunlame command line

    heunlame spectrum --l 1/2 --m 3/2 --k2 0.5
    heunlame eigenfunction --l 1/2 --m 3/2 --k2 0.5 --family Psi_ring_1 --grid 0:2K:41
    heunlame classify --l=-2 --m 0
    heunlame verify --only golden

Negative rationals need the --l=-1/2 form. Tables go to stdout or --out;
progress lines go to stderr with --verbose.

Exit codes: 0 ok, 1 verification failure, 2 configuration error, 3 solver failure.
"""

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from . import __version__
from .tools.darboux import (
    FamilyKind,
    LameProblem,
    as_rational,
    build_eigenfunction,
    build_infinite_eigenfunction,
    classify_finite_series,
    family_by_name,
    family_expansion,
    infinite_families,
    infinite_spectrum,
    spectrum,
)
from .tools.recurrence import row_residuals
from .tools.specfun import elliptic_K
from .tools.verify import SUITES, run_suites
from .utils.config import get_settings, override_settings, set_settings
from .utils.console import status
from .utils.errors import ConfigError, DomainError, HeunlameError, SolverError

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_CONFIG = 2
EXIT_SOLVER = 3

COMMANDS = ("spectrum", "eigenfunction", "classify", "verify")
SCHEMA = 1


# ============================================================================
# JOB CONFIGURATION
# ============================================================================


@dataclass(frozen=True)
class Grid:
    """Evenly spaced u values; endpoints may be written in units of K ("1.5K")."""

    u_min: float
    u_max: float
    points: int

    def values(self) -> List[float]:
        step = (self.u_max - self.u_min) / (self.points - 1)
        return [self.u_min + j * step for j in range(self.points)]


def _parse_u(text: str, K: float) -> float:
    text = text.strip()
    try:
        if text.upper().endswith("K"):
            factor = text[:-1].strip()
            return (float(factor) if factor not in ("", "+", "-") else float(f"{factor}1")) * K
        return float(text)
    except ValueError:
        raise ConfigError(f"grid endpoint {text!r} is not a number or a multiple of K") from None


def parse_grid(text: str, k2: float) -> Grid:
    """
    "umin:umax:n" with n >= 2.

    Raises:
        ConfigError: malformed text or fewer than two points
    """
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigError(f"--grid must be umin:umax:n (got {text!r})")
    K = elliptic_K(k2)
    u_min, u_max = _parse_u(parts[0], K), _parse_u(parts[1], K)
    try:
        points = int(parts[2])
    except ValueError:
        raise ConfigError(f"grid point count must be an integer (got {parts[2]!r})") from None
    if points < 2:
        raise ConfigError(f"grid needs at least 2 points (got {points})")
    return Grid(u_min, u_max, points)


@dataclass
class JobConfig:
    """
    One CLI job.

    Attributes:
        command: spectrum, eigenfunction, classify or verify
        l, m: exact where given as p/q or snapped decimals
        k2: modulus squared, 0 < k2 < 1
        family: family name (psi_ring_i, ..., Phi_i)
        energy: eigenfunction energy; defaults to spectrum entry `index`
        grid: eigenfunction sample points
        out: output path, stdout when None
        fmt: csv or json
        only: verification suites to run
        tolerances: NAME=VALUE settings overrides
    """

    command: str
    l: Any = None
    m: Any = None
    k2: float = 0.5
    family: Optional[str] = None
    energy: Optional[float] = None
    index: int = 0
    grid: Optional[Grid] = None
    out: Optional[Path] = None
    fmt: str = "csv"
    only: List[str] = field(default_factory=list)
    tolerances: Dict[str, str] = field(default_factory=dict)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heunlame",
        description="Heun series solutions and associated Lame spectra.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--l", dest="l", help="l as p/q or decimal")
    parser.add_argument("--m", dest="m", help="m as p/q or decimal")
    parser.add_argument("--k2", type=float, default=0.5, help="k^2 in (0, 1) (default 0.5)")
    parser.add_argument("--family", help="e.g. psi_ring_1, Psi_tilde_5, psi_hyp_6, Phi_4")
    parser.add_argument("--energy", type=float, help="energy for eigenfunction (default: from spectrum)")
    parser.add_argument("--index", type=int, default=0, help="spectrum entry used when --energy is absent")
    parser.add_argument("--grid", default="0:2K:41", help="umin:umax:n, endpoints may use K (default 0:2K:41)")
    parser.add_argument("--out", type=Path, help="output file (default stdout)")
    parser.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
    parser.add_argument(
        "--only", action="append", default=[], help=f"suite to verify (repeatable): {', '.join(SUITES)}"
    )
    parser.add_argument("--tol", action="append", default=[], metavar="NAME=VALUE", help="settings override")
    parser.add_argument("--verbose", action="store_true", help="progress lines on stderr")
    parser.add_argument("--version", action="version", version=f"heunlame {__version__}")
    return parser


def parse_tolerances(items: Sequence[str]) -> Dict[str, str]:
    tolerances = {}
    for item in items:
        name, sep, value = item.partition("=")
        if not sep:
            raise ConfigError(f"--tol expects NAME=VALUE (got {item!r})")
        tolerances[name.strip()] = value.strip()
    return tolerances


def config_from_args(args: argparse.Namespace, tolerances: Dict[str, str]) -> JobConfig:
    """
    Validate parsed arguments.

    Raises:
        ConfigError: missing l/m, k2 outside (0, 1), bad grid, tolerance or suite
    """
    cfg = JobConfig(command=args.command, k2=args.k2, family=args.family, energy=args.energy,
                    index=args.index, out=args.out, fmt=args.fmt, tolerances=tolerances)
    for item in args.only:
        cfg.only.extend(s.strip() for s in item.split(",") if s.strip())
    unknown = [s for s in cfg.only if s not in SUITES]
    if unknown:
        raise ConfigError(f"Unknown suite(s) {', '.join(unknown)}; expected one of {', '.join(SUITES)}")

    if cfg.command == "verify":
        return cfg
    if not 0.0 < cfg.k2 < 1.0:
        raise ConfigError(f"--k2 must lie in (0, 1) (got {cfg.k2:g})")
    if args.l is None or args.m is None:
        raise ConfigError(f"{cfg.command} needs --l and --m")
    cfg.l = as_rational(args.l, "l")
    cfg.m = as_rational(args.m, "m")
    if cfg.command == "eigenfunction":
        if not cfg.family:
            raise ConfigError("eigenfunction needs --family")
        cfg.grid = parse_grid(args.grid, cfg.k2)
    return cfg


# ============================================================================
# OUTPUT
# ============================================================================


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "%.17g" % value
    if value is None:
        return ""
    return str(value)


def render(cfg: JobConfig, columns: Sequence[str], rows: List[Dict[str, Any]]) -> str:
    """CSV with a header row, or JSON with a top-level schema version."""
    if cfg.fmt == "json":
        params = {"k2": cfg.k2}
        if cfg.l is not None:
            params.update(l=str(cfg.l), m=str(cfg.m))
        if cfg.family:
            params["family"] = cfg.family
        doc = {"schema": SCHEMA, "command": cfg.command, "params": params, "rows": rows}
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(c)) for c in columns])
    return buf.getvalue()


def emit(cfg: JobConfig, columns: Sequence[str], rows: List[Dict[str, Any]]) -> None:
    text = render(cfg, columns, rows)
    if cfg.out is None:
        sys.stdout.write(text)
        return
    cfg.out.parent.mkdir(parents=True, exist_ok=True)
    cfg.out.write_text(text, encoding="utf-8")
    status(f"Wrote {len(rows)} rows to {cfg.out}", "✅")


# ============================================================================
# COMMANDS
# ============================================================================


SPECTRUM_COLUMNS = ("family", "N", "parity", "period", "arscott_ok", "energy", "residual")
EIGENFUNCTION_COLUMNS = ("u", "psi", "ode_residual")
CLASSIFY_COLUMNS = ("family", "N", "parity", "period", "arscott_ok", "centre")
VERIFY_COLUMNS = ("suite", "name", "passed", "value", "limit", "seconds", "detail")


def _problem(cfg: JobConfig) -> LameProblem:
    return LameProblem(cfg.l, cfg.m, cfg.k2)


def _phi_rows(prob: LameProblem, index: int) -> List[Dict[str, Any]]:
    spec = next(s for s in infinite_families(prob.l, prob.m) if s.index == index)
    rows = []
    for E in infinite_spectrum(prob, index):
        psi = build_infinite_eigenfunction(prob.at(E), index)
        c = prob.energy_coeffs(family_expansion(prob, spec.group, index).coeffs)
        rows.append(
            {
                "family": spec.name,
                "N": None,
                "parity": spec.parity.value,
                "period": spec.period.value,
                "arscott_ok": False,
                "energy": float(E),
                "residual": float(row_residuals(c, psi.b, E)[0]),
            }
        )
    return rows


def run_spectrum(cfg: JobConfig) -> int:
    prob = _problem(cfg)
    if cfg.family:
        specs = [family_by_name(prob.l, prob.m, cfg.family)]
    else:
        specs = classify_finite_series(prob.l, prob.m)
    rows: List[Dict[str, Any]] = []
    for spec in specs:
        if spec.kind is FamilyKind.INFINITE:
            rows.extend(_phi_rows(prob, spec.index))
            continue
        result = spectrum(prob, spec)
        for E, residual in zip(result.eigenvalues, result.residuals):
            rows.append(
                {
                    "family": spec.name,
                    "N": spec.N,
                    "parity": spec.parity.value,
                    "period": spec.period.value,
                    "arscott_ok": spec.arscott_ok,
                    "energy": float(E),
                    "residual": float(residual),
                }
            )
    emit(cfg, SPECTRUM_COLUMNS, rows)
    return EXIT_OK


def _energies(prob: LameProblem, spec) -> List[float]:
    if spec.kind is FamilyKind.INFINITE:
        return infinite_spectrum(prob, spec.index)
    return [float(v) for v in spectrum(prob, spec).eigenvalues]


def run_eigenfunction(cfg: JobConfig) -> int:
    prob = _problem(cfg)
    spec = family_by_name(prob.l, prob.m, cfg.family)
    energy = cfg.energy
    if energy is None:
        energies = _energies(prob, spec)
        if not 0 <= cfg.index < len(energies):
            raise ConfigError(f"--index {cfg.index} outside the {len(energies)} energies of {spec.name}")
        energy = energies[cfg.index]
    at = prob.at(energy)
    if spec.kind is FamilyKind.INFINITE:
        psi = build_infinite_eigenfunction(at, spec.index)
    else:
        psi = build_eigenfunction(at, spec)
    rows = [{"u": u, "psi": value, "ode_residual": res} for u, value, res in psi.table(cfg.grid.values())]
    emit(cfg, EIGENFUNCTION_COLUMNS, rows)
    return EXIT_OK


def run_classify(cfg: JobConfig) -> int:
    specs = classify_finite_series(cfg.l, cfg.m) + infinite_families(cfg.l, cfg.m)
    rows = []
    for spec in specs:
        row = spec.to_dict()
        row["infinite"] = spec.kind is FamilyKind.INFINITE
        rows.append(row)
    emit(cfg, CLASSIFY_COLUMNS + ("infinite",), rows)
    return EXIT_OK


def run_verify(cfg: JobConfig) -> int:
    report = run_suites(cfg.only or None)
    emit(cfg, VERIFY_COLUMNS, [c.to_dict() for c in report.checks])
    for failure in report.failures:
        print(f"❌ {failure.suite}: {failure.name} {failure.detail}".rstrip(), file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_VERIFY


RUNNERS = {
    "spectrum": run_spectrum,
    "eigenfunction": run_eigenfunction,
    "classify": run_classify,
    "verify": run_verify,
}


# ============================================================================
# MAIN ENTRY POINT
# ============================================================================


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        tolerances = parse_tolerances(args.tol)
        overrides: Dict[str, Any] = dict(tolerances)
        if args.verbose:
            overrides["verbose"] = True
        set_settings(override_settings(get_settings(), **overrides))
        cfg = config_from_args(args, tolerances)
        return RUNNERS[cfg.command](cfg)
    except (ConfigError, DomainError) as exc:
        print(f"❌ {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except SolverError as exc:
        print(f"❌ solver failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except HeunlameError as exc:
        print(f"❌ {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
