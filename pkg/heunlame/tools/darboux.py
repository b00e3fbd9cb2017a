"""
Darboux and associated Lame problems

    psi'' + [E - m(m+1) k^2 sn^2 u - l(l+1) k^2 cn^2 u / dn^2 u] psi = 0

With x = sn^2 u and a = 1/k^2 the equation is the Heun equation for
H(x) = dn^{-(l+1)} psi, with alpha = (l-m+1)/2, beta = (l+m+2)/2,
gamma = delta = 1/2 and q = (l+1)^2/4 - E/(4k^2). Every finite eigenfunction
is one of the 32 local expansions of `expansions` that truncates; the energy
enters the recurrence only through q, so the spectra come straight out of
the characteristic problem of the truncated recurrence.

Families:
    psi_ring_i / psi_tilde_i   power series in sn^2 u
    Psi_ring_i / Psi_tilde_i   power series in cn^2 u
    psi_hyp_i                  hypergeometric series in (1-k^2) sd^2 u, centred at 0
    Psi_hyp_i                  hypergeometric series in cn^2 u, centred at K
    Phi_i                      infinite power series in sn^2 u (minimal solution)

ring/tilde records which gamma factor stops the series.
"""

import cmath
import math
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..utils.config import get_settings
from ..utils.console import status, warn
from ..utils.errors import ConfigError, DomainError, SpectrumError
from ..utils.jets import Jet
from .expansions import Basis, BasisKind, SeriesExpansion, group_coefficients, sum_series
from .heun import HeunParams, Prefactor, SeriesGroup
from .recurrence import (
    GammaFactors,
    SpectralResult,
    ThreeTermCoeffs,
    antidiagonal_similarity_check,
    arscott_check,
    backward_minimal_solve,
    characteristic_roots,
    continued_fraction_roots,
    detect_truncation,
    rescale,
    row_residuals,
    truncation_points,
)
from .specfun import (
    Connection,
    closed_form_F,
    elliptic_K,
    gamma,
    hyp2f1_connection,
    hyp2f1_jet,
    jacobi_jets,
)

Real = Union[float, Fraction]

# classification does not depend on the modulus; any k^2 in (0, 1) will do
_REFERENCE_K2 = 0.5
_HALF = Fraction(1, 2)
_SPECTRUM_MATCH = 1e-9
_ROW_RESIDUAL_MAX = 1e-7
_WRONSKIAN_MIN = 1e-6
_WRONSKIAN_POINT = 0.37


# ============================================================================
# RATIONAL PARAMETERS
# ============================================================================


def as_rational(value: Union[Real, int, str], name: str = "value") -> Real:
    """
    Exact l, m for the integrality analysis.

    "p/q" strings and ints become Fractions; floats within snap_tol of a
    fraction with denominator <= 1000 are snapped (with a warning when the
    input was not already exact). Anything else stays a float and is treated
    as generic.

    Raises:
        ConfigError: unparsable string
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            try:
                return Fraction(text)
            except (ValueError, ZeroDivisionError):
                raise ConfigError(f"{name} must be a rational 'p/q' (got {value!r})") from None
        try:
            value = float(text)
        except ValueError:
            raise ConfigError(f"{name} must be a number or 'p/q' (got {value!r})") from None
    x = float(value)
    if not math.isfinite(x):
        raise ConfigError(f"{name} must be finite (got {value!r})")
    snapped = Fraction(x).limit_denominator(1000)
    if abs(float(snapped) - x) <= get_settings().snap_tol:
        if float(snapped) != x:
            warn(f"{name} = {x!r} snapped to {snapped}")
        return snapped
    status(f"{name} = {x!r} kept as a generic real", "🔍")
    return x


def _is_integer(x: Real) -> bool:
    return isinstance(x, Fraction) and x.denominator == 1


def _is_half_odd(x: Real) -> bool:
    return isinstance(x, Fraction) and x.denominator == 2


def _fmt(x: Real) -> str:
    return str(x) if isinstance(x, Fraction) else f"{x:g}"


# ============================================================================
# DARBOUX FORM AND POTENTIALS
# ============================================================================


def _strength(product: Real, name: str) -> float:
    """Root s >= -1/2 of s(s+1) = product."""
    disc = 0.25 + float(product)
    if disc < -1e-14:
        raise DomainError(f"{name} strength {float(product):g} is below -1/4; no real Darboux form")
    return -0.5 + math.sqrt(max(disc, 0.0))


@dataclass(frozen=True)
class DarbouxParams:
    """
    U'' + [h - mu(mu+1) k^2 sn^2 - nu1(nu1+1)/sn^2 - nu2(nu2+1) dn^2/cn^2
           - lam(lam+1) k^2 cn^2/dn^2] U = 0
    """

    h: float
    mu: Real
    nu1: Real
    nu2: Real
    lam: Real
    k2: float

    @property
    def products(self) -> Tuple[float, float, float, float]:
        return tuple(float(s) * (float(s) + 1.0) for s in (self.mu, self.nu1, self.nu2, self.lam))

    def potential(self, u: float) -> float:
        sn, cn, dn = (j.value for j in jacobi_jets(u, self.k2))
        p_mu, p_nu1, p_nu2, p_lam = self.products
        k2 = self.k2
        return (
            p_mu * k2 * sn * sn
            + p_nu1 / (sn * sn)
            + p_nu2 * dn * dn / (cn * cn)
            + p_lam * k2 * cn * cn / (dn * dn)
        )

    def residual(self, U: Jet, u: float) -> float:
        """Relative residual of the Darboux equation for the jet U at u."""
        w = self.h - self.potential(u)
        scale = abs(U.d2) + abs(w * U.value)
        return abs(U.d2 + w * U.value) / max(scale, 1e-300)


def _check_a(p: HeunParams, k2: float) -> None:
    if not 0.0 < k2 < 1.0:
        raise DomainError(f"k^2 must lie in (0, 1) (got {k2:g})")
    a = float(p.a)
    if abs(a - 1.0 / k2) > 1e-12 * max(1.0, abs(a)):
        raise DomainError(f"Heun parameter a = {a:.15g} does not match 1/k^2 = {1.0 / k2:.15g}")


def heun_to_darboux(p: HeunParams, k2: float) -> DarbouxParams:
    """
    Darboux form of the Heun equation under x = sn^2 u, a = 1/k^2.

    Raises:
        DomainError: a != 1/k^2
    """
    _check_a(p, k2)
    ga, de, ep = p.gamma, p.delta, p.epsilon
    q = float(p.q)
    gf, df, ef = float(ga), float(de), float(ep)
    h = (gf + df) ** 2 + 1.0 - 2.0 * gf - 2.0 * df - (4.0 * q - (gf + ef) ** 2 - 1.0 + 2.0 * gf + 2.0 * ef) * k2
    return DarbouxParams(
        h=h,
        mu=abs(p.alpha - p.beta) - _HALF,
        nu1=abs(ga - 1) - _HALF,
        nu2=abs(de - 1) - _HALF,
        lam=abs(ep - 1) - _HALF,
        k2=k2,
    )


def darboux_to_heun(d: DarbouxParams) -> HeunParams:
    """Heun parameters with gamma = 1/2 - nu1, delta = 1/2 - nu2, eps = lam + 3/2."""
    ga = _HALF - d.nu1
    de = _HALF - d.nu2
    ep = d.lam + 3 * _HALF
    s = ga + de + ep - 1
    al = (s - d.mu - _HALF) / 2
    be = (s + d.mu + _HALF) / 2
    gf, df, ef = float(ga), float(de), float(ep)
    k2 = d.k2
    four_q = (gf + ef) ** 2 + 1.0 - 2.0 * gf - 2.0 * ef + ((gf + df) ** 2 + 1.0 - 2.0 * gf - 2.0 * df - d.h) / k2
    return HeunParams(1.0 / k2, four_q / 4.0, al, be, ga, de)


def darboux_prefactor(p: HeunParams) -> Prefactor:
    """U = sn^(gamma-1/2) cn^(delta-1/2) dn^(eps-1/2) H(sn^2 u)."""
    return Prefactor(
        p.a,
        (2 * p.gamma - 1) / 4,
        (2 * p.delta - 1) / 4,
        (2 * p.epsilon - 1) / 4,
    )


class PotentialKind(Enum):
    V1 = "V1"
    V2 = "V2"
    V3 = "V3"
    V4 = "V4"
    CUSTOM = "custom"


@dataclass(frozen=True)
class Potential:
    """
    V(u) = constant + mu(mu+1) k^2 sn^2 + nu1(nu1+1)/sn^2 + nu2(nu2+1) dn^2/cn^2
           + lam(lam+1) k^2 cn^2/dn^2

    Build with the v1..v4 and custom constructors; `terms` resolves the
    constant (which may depend on k^2) and the strengths.
    """

    kind: PotentialKind
    params: Tuple[Real, ...]

    @classmethod
    def v1(cls, l: Real) -> "Potential":
        return cls(PotentialKind.V1, (l,))

    @classmethod
    def v2(cls, l: Real) -> "Potential":
        return cls(PotentialKind.V2, (l,))

    @classmethod
    def v3(cls, l: Real, m: Real) -> "Potential":
        return cls(PotentialKind.V3, (l, m))

    @classmethod
    def v4(cls, a: Real, b: Real, c: Real, l: Real) -> "Potential":
        return cls(PotentialKind.V4, (a, b, c, l))

    @classmethod
    def custom(
        cls, constant: float, sn2: float, inv_sn2: float, dn2_over_cn2: float, cn2_over_dn2: float
    ) -> "Potential":
        """Raw coefficients; the k^2 factors of the sn^2 and cn^2/dn^2 terms are implied."""
        return cls(PotentialKind.CUSTOM, (constant, sn2, inv_sn2, dn2_over_cn2, cn2_over_dn2))

    def terms(self, k2: float) -> Tuple[float, Tuple[Real, Real, Real, Real]]:
        """
        (constant, (mu, nu1, nu2, lam)).

        Raises:
            DomainError: a custom coefficient below -1/4
        """
        kind, ps = self.kind, self.params
        if kind is PotentialKind.V1:
            (l,) = ps
            return -2.0 * k2 - float((l + 2) * (l + 3)), (0, 0, 1, l + 2)
        if kind is PotentialKind.V2:
            (l,) = ps
            return -float((l + 2) * (l + 3)), (0, 1, 0, l + 2)
        if kind is PotentialKind.V3:
            l, m = ps
            return 0.0, (m, 0, 0, l)
        if kind is PotentialKind.V4:
            a, b, c, l = (float(v) for v in ps)
            s = a + b + c + l
            constant = (
                -4.0 * (a - 0.25) * (a - 0.75)
                - 4.0 * (a + c + l) * (a + 2.0 * b + c + l - 1.0) * k2
                - 8.0 * (b - 0.25) * (b - 0.75) * k2
            )
            return constant, (2 * a - 1.5, 2 * b - 1.5, 2 * c - 1.5, 2 * s - 1.5)
        constant, *products = ps
        names = ("k^2 sn^2", "1/sn^2", "dn^2/cn^2", "k^2 cn^2/dn^2")
        strengths = tuple(_strength(v, n) for v, n in zip(products, names))
        return float(constant), strengths

    def value(self, u: float, k2: float) -> float:
        constant, strengths = self.terms(k2)
        d = DarbouxParams(0.0, *strengths, k2=k2)
        return constant + d.potential(u)


def potential_to_heun(pot: Potential, k2: float, energy: float) -> HeunParams:
    """
    Heun parameters of psi'' + [E - V(u)] psi = 0 for one of the potentials.

    The Darboux constant is h = E - constant, so q is linear in E. For V3
    the result is alpha = (l-m+1)/2, beta = (l+m+2)/2, gamma = delta = 1/2,
    q = (l+1)^2/4 - E/(4k^2).
    """
    if not 0.0 < k2 < 1.0:
        raise DomainError(f"k^2 must lie in (0, 1) (got {k2:g})")
    constant, strengths = pot.terms(k2)
    return darboux_to_heun(DarbouxParams(energy - constant, *strengths, k2=k2))


# ============================================================================
# SCHRODINGER SCALING
# ============================================================================


@dataclass(frozen=True)
class SchrodingerScaling:
    """Physical constants of -hbar^2/(2M) d^2/dx^2 + V with u = kappa x."""

    M: float
    E_phys: float
    hbar: float = 1.0
    kappa: float = 1.0


def scale_energy(s: SchrodingerScaling) -> float:
    """
    Dimensionless energy 2 M E / (hbar^2 kappa^2).

    Raises:
        DomainError: M, hbar or kappa not positive
    """
    for name in ("M", "hbar", "kappa"):
        if not getattr(s, name) > 0:
            raise DomainError(f"{name} must be positive (got {getattr(s, name)!r})")
    return 2.0 * s.M * s.E_phys / (s.hbar * s.hbar * s.kappa * s.kappa)


# ============================================================================
# ASSOCIATED LAME PROBLEM
# ============================================================================


@dataclass(frozen=True)
class LameProblem:
    """
    Associated Lame problem at (l, m, k^2), optionally at a fixed energy.

    l and m are Fractions whenever they were given exactly (see as_rational).
    """

    l: Real
    m: Real
    k2: float
    energy: Optional[float] = None

    def __post_init__(self):
        if not 0.0 < float(self.k2) < 1.0:
            raise DomainError(f"k^2 must lie in (0, 1) (got {float(self.k2):g})")

    @classmethod
    def create(cls, l, m, k2: float, energy: Optional[float] = None) -> "LameProblem":
        return cls(as_rational(l, "l"), as_rational(m, "m"), float(k2), energy)

    @classmethod
    def from_potential(cls, pot: Potential, k2: float) -> "LameProblem":
        if pot.kind is not PotentialKind.V3:
            raise DomainError(f"{pot.kind.value} is not an associated Lame potential")
        l, m = pot.params
        return cls.create(l, m, k2)

    def at(self, energy: float) -> "LameProblem":
        return replace(self, energy=float(energy))

    @property
    def a(self) -> float:
        return 1.0 / self.k2

    def heun_params(self, energy: float = 0.0) -> HeunParams:
        l, m = self.l, self.m
        q = float((l + 1) ** 2) / 4.0 - energy / (4.0 * self.k2)
        return HeunParams(self.a, q, (l - m + 1) / 2, (l + m + 2) / 2, _HALF, _HALF)

    def energy_coeffs(self, c: ThreeTermCoeffs) -> ThreeTermCoeffs:
        """
        The recurrence of an expansion built at E = 0 with E as its spectral
        parameter. q = q0 - E/(4k^2), so a q-weight w becomes -w/(4k^2).
        """
        if c.weight is None:
            raise DomainError(f"{c.label or 'recurrence'} has no spectral parameter")
        w, scale = c.weight, -1.0 / (4.0 * self.k2)
        return replace(c, weight=lambda n: float(w(n)) * scale)

    def potential(self, u: float) -> float:
        sn, cn, dn = (j.value for j in jacobi_jets(u, self.k2))
        l, m = float(self.l), float(self.m)
        return m * (m + 1.0) * self.k2 * sn * sn + l * (l + 1.0) * self.k2 * cn * cn / (dn * dn)

    def require_energy(self) -> float:
        if self.energy is None:
            raise DomainError("this operation needs the problem at a fixed energy")
        return float(self.energy)

    def __str__(self) -> str:
        out = f"l={_fmt(self.l)} m={_fmt(self.m)} k2={self.k2:g}"
        return out if self.energy is None else f"{out} E={self.energy:.12g}"


def associated_lame_residual(prob: LameProblem, psi: Jet, u: float) -> float:
    """Relative residual |psi'' + (E - V) psi| / (|psi''| + |E - V| |psi|)."""
    w = prob.require_energy() - prob.potential(u)
    scale = abs(psi.d2) + abs(w * psi.value)
    if scale == 0.0:
        return 0.0
    return abs(psi.d2 + w * psi.value) / scale


def wronskian(f: Jet, g: Jet) -> float:
    return f.value * g.d1 - f.d1 * g.value


# ============================================================================
# FAMILIES
# ============================================================================


class FamilyKind(Enum):
    SN_RING = "psi_ring"
    SN_TILDE = "psi_tilde"
    CN_RING = "Psi_ring"
    CN_TILDE = "Psi_tilde"
    HYP_SD = "psi_hyp"
    HYP_CN = "Psi_hyp"
    INFINITE = "Phi"

    @property
    def group(self) -> SeriesGroup:
        return _KIND_GROUP[self]

    @property
    def hypergeometric(self) -> bool:
        return self in (FamilyKind.HYP_SD, FamilyKind.HYP_CN)


_KIND_GROUP = {
    FamilyKind.SN_RING: SeriesGroup.POWER_ORIGIN,
    FamilyKind.SN_TILDE: SeriesGroup.POWER_ORIGIN,
    FamilyKind.CN_RING: SeriesGroup.POWER_ONE,
    FamilyKind.CN_TILDE: SeriesGroup.POWER_ONE,
    FamilyKind.HYP_SD: SeriesGroup.HYP_M17,
    FamilyKind.HYP_CN: SeriesGroup.HYP_ONE,
    FamilyKind.INFINITE: SeriesGroup.POWER_ORIGIN,
}

FINITE_GROUPS = (
    SeriesGroup.POWER_ORIGIN,
    SeriesGroup.POWER_ONE,
    SeriesGroup.HYP_M17,
    SeriesGroup.HYP_ONE,
)


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"
    UNDETERMINED = "undetermined"

    @property
    def sign(self) -> int:
        return {Parity.EVEN: 1, Parity.ODD: -1}.get(self, 0)


class Period(Enum):
    """
    2K: psi(u+2K) = psi(u). 4K: psi(u+2K) = -psi(u). 8K: psi(u+4K) = -psi(u).
    undetermined: the continuation through the period did not settle on any
    of these (hypergeometric families only).
    """

    TWO_K = "2K"
    FOUR_K = "4K"
    EIGHT_K = "8K"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class EigenfunctionSpec:
    """
    One named family at (l, m).

    Attributes:
        kind: family kind (see FamilyKind)
        index: transformation index 1..8
        l, m: the problem parameters
        N: truncation order (None for Phi families)
        parity: parity about the expansion centre
        period: see Period
        arscott_ok: real-and-distinct criterion of the truncated recurrence
        centre: expansion centre in units of K (0, or 1 for Psi_hyp)
    """

    kind: FamilyKind
    index: int
    l: Real
    m: Real
    N: Optional[int]
    parity: Parity
    period: Period
    arscott_ok: bool = False
    centre: int = 0

    @property
    def name(self) -> str:
        return f"{self.kind.value}_{self.index}"

    @property
    def group(self) -> SeriesGroup:
        return self.kind.group

    def to_dict(self) -> Dict[str, object]:
        return {
            "family": self.name,
            "l": _fmt(self.l),
            "m": _fmt(self.m),
            "N": self.N,
            "parity": self.parity.value,
            "period": self.period.value,
            "arscott_ok": self.arscott_ok,
            "centre": f"{self.centre}K" if self.centre else "0",
        }


def parse_family(name: str) -> Tuple[FamilyKind, int]:
    """
    "psi_tilde_5" -> (FamilyKind.SN_TILDE, 5).

    Raises:
        ConfigError: unknown kind or index outside 1..8
    """
    kind_text, sep, index_text = name.strip().rpartition("_")
    kinds = {k.value: k for k in FamilyKind}
    if not sep or kind_text not in kinds or not index_text.isdigit():
        raise ConfigError(
            f"Unknown family {name!r}; expected <kind>_<i> with kind one of {', '.join(kinds)}"
        )
    index = int(index_text)
    if not 1 <= index <= 8:
        raise ConfigError(f"family index must be 1..8 (got {index})")
    return kinds[kind_text], index


def family_expansion(prob: LameProblem, group: SeriesGroup, i: int) -> SeriesExpansion:
    """Expansion i of a group for the problem at E = 0; E enters through energy_coeffs."""
    return group_coefficients(prob.heun_params(), group, i)


# powers (sn, cn) of the prefactor and whether it carries dn^(-2l-1)
_POWER_FAMILIES = {
    1: (0, 0, False),
    2: (1, 0, False),
    3: (0, 1, False),
    4: (1, 1, False),
    5: (0, 0, True),
    6: (1, 0, True),
    7: (0, 1, True),
    8: (1, 1, True),
}


def lame_power_table(prob: LameProblem, group: SeriesGroup, i: int) -> ThreeTermCoeffs:
    """
    Closed-form recurrence of the i-th sn^2 (PowerAt0) or cn^2 (PowerAt1)
    series of the associated Lame equation, with E as spectral parameter.

    For psi = dn^{l+1} sn^r cn^s dn^{-(2l+1)t} sum_n b_n z^n put
    r1 = r/2, r2 = s/2, r3 = -t(l+1/2), S = r1 + r2 + r3, a = 1/k^2 and

        q' = (l+1)^2/4 - E/(4k^2) + r1(a/2 + l + 3/2) + a r2/2 + r3/2
             + 2a r1 r2 + 2 r1 r3
        A = (l-m+1)/2 + S,  B = (l+m+2)/2 + S

    z = sn^2:  alpha_n = a(n+1)(n+1/2+2r1)
               beta_n  = -(a+1)n^2 - [2a(r1+r2) + l + 1 + 2S - 2r2]n - q'
    z = cn^2:  alpha_n = (1-a)(n+1)(n+1/2+2r2)
               beta_n  = (a-2)n^2 - [2(1-a)(r1+r2) + l + 1 + 2S - 2r1]n + q' - AB
    both:      gamma_n = (n+A-1)(n+B-1)

    The cn^2 alpha carries the cn power, so i = 2 (sn dn^{l+1}) has
    (n+1/2)(n+1) and i = 3 (cn dn^{l+1}) has (n+3/2)(n+1).

    Raises:
        DomainError: group other than PowerAt0/PowerAt1, or i outside 1..8
    """
    if group not in (SeriesGroup.POWER_ORIGIN, SeriesGroup.POWER_ONE):
        raise DomainError(f"no closed-form Lame table for {group.value}")
    if i not in _POWER_FAMILIES:
        raise DomainError(f"family index must be 1..8 (got {i})")
    r, s, t = _POWER_FAMILIES[i]
    l, m = prob.l, prob.m
    r1, r2 = Fraction(r, 2), Fraction(s, 2)
    r3 = -(l + _HALF) if t else Fraction(0)
    S = r1 + r2 + r3
    A = (l - m + 1) / 2 + S
    B = (l + m + 2) / 2 + S
    a = prob.a
    shift = float((l + 1) ** 2 / 4 + r1 * (l + 3 * _HALF) + r3 / 2 + 2 * r1 * r3)
    q0 = shift + a * float(r1 / 2 + r2 / 2 + 2 * r1 * r2)
    factors = GammaFactors(1, (A - 1, B - 1))
    label = f"Lame {group.value}^({i})"

    if group is SeriesGroup.POWER_ORIGIN:
        lin = 2.0 * a * float(r1 + r2) + float(l + 1 + 2 * S - 2 * r2)
        alpha = lambda n: a * (n + 1) * (n + 0.5 + float(2 * r1))
        beta = lambda n: -(a + 1.0) * n * n - lin * n - q0
        sign = -1.0
    else:
        lin = 2.0 * (1.0 - a) * float(r1 + r2) + float(l + 1 + 2 * S - 2 * r1)
        const = q0 - float(A * B)
        alpha = lambda n: (1.0 - a) * (n + 1) * (n + 0.5 + float(2 * r2))
        beta = lambda n: (a - 2.0) * n * n - lin * n + const
        sign = 1.0
    # beta_n(E) = beta_n - E w with w = -+1/(4k^2)
    w = sign / (4.0 * prob.k2)
    return ThreeTermCoeffs.from_factors(alpha, beta, factors, weight=lambda n: w, label=label)


def generation_gap(prob: LameProblem, group: SeriesGroup, i: int, energy: float = 0.0, n_max: int = 6) -> float:
    """
    Largest relative difference between lame_power_table and the
    transformation-route expansion over alpha_n, beta_n(E), gamma_n, n <= n_max.
    """
    direct = lame_power_table(prob, group, i)
    routed = prob.energy_coeffs(family_expansion(prob, group, i).coeffs)
    worst = 0.0
    for n in range(n_max + 1):
        pairs = (
            (float(direct.alpha(n)), float(routed.alpha(n))),
            (direct.beta_at(n, energy), routed.beta_at(n, energy)),
            (float(direct.gamma(n)), float(routed.gamma(n))),
        )
        for x, y in pairs:
            worst = max(worst, abs(x - y) / max(1.0, abs(x)))
    if worst > 1e-12:
        warn(f"{direct.label} at {prob}: closed-form table and transformation route differ by {worst:.3e}")
    return worst


def _prefactor(e: SeriesExpansion) -> Prefactor:
    return e.prefactor or Prefactor(e.params.a)


def _elliptic_exponents(pref: Prefactor) -> Tuple[int, int]:
    """Integer powers of sn and cn in the prefactor at x = sn^2 u."""
    out = []
    for exp in (pref.x_exp, pref.one_minus_x_exp):
        twice = 2 * float(exp)
        if abs(twice - round(twice)) > 1e-9:
            raise DomainError(f"prefactor power {twice:g} of sn or cn is not an integer")
        out.append(int(round(twice)))
    return out[0], out[1]


def _power_labels(pref: Prefactor) -> Tuple[Parity, Period]:
    sn_e, cn_e = _elliptic_exponents(pref)
    parity = Parity.ODD if sn_e % 2 else Parity.EVEN
    period = Period.FOUR_K if (sn_e + cn_e) % 2 else Period.TWO_K
    return parity, period


def _kind_for(group: SeriesGroup, factor: int) -> FamilyKind:
    if group is SeriesGroup.POWER_ORIGIN:
        return FamilyKind.SN_RING if factor == 0 else FamilyKind.SN_TILDE
    if group is SeriesGroup.POWER_ONE:
        return FamilyKind.CN_RING if factor == 0 else FamilyKind.CN_TILDE
    if group is SeriesGroup.HYP_M17:
        return FamilyKind.HYP_SD
    return FamilyKind.HYP_CN


def _arscott_ok(c: ThreeTermCoeffs, N: int) -> bool:
    """
    arscott_check for N >= 1. A one-term series has no product to test and
    takes the sign of alpha_0 gamma_0 instead, so that an sn^2 series and the
    cn^2 series of the same index (alpha of opposite sign, same gamma) are
    never both admissible.
    """
    if N == 0:
        return float(c.alpha(0)) * c.gamma_eff(0) > 0.0
    return arscott_check(c, N)


def _centre_parity(e: SeriesExpansion, centre: int) -> Parity:
    """Parity about the centre read off the prefactor; the basis terms are even there."""
    try:
        sn_e, cn_e = _elliptic_exponents(_prefactor(e))
    except DomainError:
        return Parity.UNDETERMINED
    own = cn_e if centre else sn_e
    return Parity.ODD if own % 2 else Parity.EVEN


def _describe(prob: LameProblem, group: SeriesGroup, i: int) -> Optional[EigenfunctionSpec]:
    """The finite family (group, i) at prob, or None when it does not truncate."""
    try:
        e = family_expansion(prob, group, i)
    except DomainError:
        return None
    points = truncation_points(e.coeffs, get_settings().max_terms)
    if not points:
        return None
    # smaller N wins; on a tie the first factor (ring)
    N, factor = points[0]
    kind = _kind_for(group, factor)
    ok = _arscott_ok(prob.energy_coeffs(e.coeffs), N)
    if kind.hypergeometric:
        centre = 0 if group is SeriesGroup.HYP_M17 else 1
        try:
            parity, period = HypergeometricContinuation(e, N + 1).labels()
        except DomainError as exc:
            parity, period = _centre_parity(e, centre), Period.UNDETERMINED
            status(f"{kind.value}_{i} at {prob}: period undetermined ({exc})", "⚠️")
    else:
        parity, period = _power_labels(_prefactor(e))
        centre = 0
    return EigenfunctionSpec(kind, i, prob.l, prob.m, N, parity, period, ok, centre)


def _reference(l, m) -> LameProblem:
    return LameProblem.create(l, m, _REFERENCE_K2)


def classify_finite_series(l, m) -> List[EigenfunctionSpec]:
    """
    Every finite-series family at (l, m): sn^2- and cn^2-series, then the
    hypergeometric families, each with N, parity, period and arscott_ok.

    When both gamma factors of a power series truncate, the smaller N is
    taken (the series stops at the first vanishing gamma).
    """
    prob = _reference(l, m)
    status(f"Classifying l={_fmt(prob.l)} m={_fmt(prob.m)}", "🔍")
    found = []
    for group in FINITE_GROUPS:
        for i in range(1, 9):
            spec = _describe(prob, group, i)
            if spec is not None:
                found.append(spec)
    status(f"{len(found)} finite families", "✅")
    return found


def _infinite_spec(prob: LameProblem, i: int) -> EigenfunctionSpec:
    e = family_expansion(prob, SeriesGroup.POWER_ORIGIN, i)
    if detect_truncation(e.coeffs, get_settings().max_terms) is not None:
        raise DomainError(
            f"Phi_{i} at l={_fmt(prob.l)} m={_fmt(prob.m)} truncates; a finite family exists instead"
        )
    parity, period = _power_labels(_prefactor(e))
    return EigenfunctionSpec(FamilyKind.INFINITE, i, prob.l, prob.m, None, parity, period)


def infinite_families(l, m) -> List[EigenfunctionSpec]:
    """Phi_i families (i = 1..8) whose sn^2 power series does not truncate."""
    prob = _reference(l, m)
    out = []
    for i in range(1, 9):
        try:
            out.append(_infinite_spec(prob, i))
        except DomainError:
            continue
    return out


def describe_family(l, m, kind: FamilyKind, index: int) -> EigenfunctionSpec:
    """
    Spec of a named family at (l, m).

    Raises:
        DomainError: a finite kind that does not truncate at (l, m), or a
            power family whose truncation belongs to the other gamma factor
    """
    prob = _reference(l, m)
    if kind is FamilyKind.INFINITE:
        return _infinite_spec(prob, index)
    spec = _describe(prob, kind.group, index)
    if spec is None or spec.kind is not kind:
        raise DomainError(
            f"{kind.value}_{index} has no finite series at l={_fmt(prob.l)} m={_fmt(prob.m)}"
        )
    return spec


def family_by_name(l, m, name: str) -> EigenfunctionSpec:
    kind, index = parse_family(name)
    return describe_family(l, m, kind, index)


# ============================================================================
# HYPERGEOMETRIC FAMILIES ACROSS THE PERIOD
# ============================================================================


@dataclass(frozen=True)
class _TermMonodromy:
    """
    Reflection of one basis term through the z = 1 point, in the basis
    A (even about the centre) and B (odd about the centre):
    f(2K - s) = (cA, cB) [[P, Q], [R, -P]] (A(s), B(s)).
    """

    connection: Connection
    P: float
    Q: float
    R: float

    def row(self, j: int) -> Tuple[float, float]:
        """(cA, cB) of the term continued by j half-periods 2K."""
        if j == 0:
            return 1.0, 0.0
        P, Q, R = self.P, self.Q, self.R
        # translation by 2K is reflection times s -> -s
        step = np.array([[P, -Q], [R, P]]) if j > 0 else np.array([[P, Q], [-R, P]])
        row = np.array([1.0, 0.0]) @ np.linalg.matrix_power(step, abs(j))
        return float(row[0]), float(row[1])


class HypergeometricContinuation:
    """
    A finite hypergeometric expansion as a function of u on the whole line.

    The basis z^n F~(n+a, b; n+c; z) is even about the expansion centre and
    only represents the solution for |u - centre| <= K. Further out each term
    is carried through z = 1 by its connection coefficients and evaluated
    back on the fundamental interval; a period 2K translation acts on every
    term by a fixed 2x2 matrix.

    With c - a - b < 0 the terms are first rewritten by Euler's transformation
    so the singular (1-z)^(c-a-b) power sits in the prefactor, where it
    cancels against the elliptic factors.
    """

    def __init__(self, e: SeriesExpansion, n_terms: int):
        if e.group not in (SeriesGroup.HYP_M17, SeriesGroup.HYP_ONE):
            raise DomainError(f"{e.label} is not a hypergeometric family of the Lame problem")
        self.expansion = e
        self.group = e.group
        self.centre = 0 if e.group is SeriesGroup.HYP_M17 else 1
        a_heun = e.params.a
        k2 = 1.0 / float(a_heun)
        self.kp = math.sqrt(1.0 - k2)

        basis = e.basis
        pref = _prefactor(e)
        e_exp = 1 - e.seed_params.delta
        if float(e_exp) < 0:
            a, b, c = basis.a, basis.b, basis.c
            basis = Basis(BasisKind.HYPERGEOMETRIC, c - b, c - a, c)
            if self.group is SeriesGroup.HYP_M17:
                extra = Prefactor(a_heun, 0, e_exp, -e_exp)
            else:
                extra = Prefactor(a_heun, e_exp, 0, 0)
            pref = pref.times(extra)
            e_exp = -e_exp
        self.basis = basis
        self.e = float(e_exp)
        if abs(self.e - round(self.e)) < 1e-9:
            raise DomainError(f"{e.label}: c-a-b = {self.e:g} is an integer (logarithmic case)")
        self.prefactor = pref

        # with c > 1 the odd solution carries t^{-1}; one power of t is moved
        # out of the prefactor so every evaluated piece stays finite
        self.strip = basis.c > 1.0
        if self.strip:
            if self.group is SeriesGroup.HYP_M17:
                shift = Prefactor(a_heun, -_HALF, 0, _HALF)
                self.scale = 1.0 / self.kp
            else:
                shift = Prefactor(a_heun, 0, -_HALF, 0)
                self.scale = 1.0
            self.stripped = pref.times(shift)
        else:
            self.stripped = pref
            self.scale = 1.0

        self.terms = [self._term(n) for n in range(max(n_terms, 1))]

    def _term(self, n: int) -> _TermMonodromy:
        a, b, c = self.basis.a + n, self.basis.b, self.basis.c + n
        conn = hyp2f1_connection(a, b, c)
        det = conn.a1 * conn.b2 - conn.a2 * conn.b1
        if abs(det) < 1e-300:
            raise DomainError(f"{self.expansion.label}: degenerate connection at n = {n}")
        P = (conn.a1 * conn.b2 + conn.a2 * conn.b1) / det
        Q = -2.0 * conn.a1 * conn.a2 / det
        R = 2.0 * conn.b1 * conn.b2 / det
        return _TermMonodromy(conn, P, Q, R)

    def labels(self) -> Tuple[Parity, Period]:
        """
        Parity about the centre and period.

        Raises:
            DomainError: the terms are not all carried to a multiple of themselves
        """
        sn_e, cn_e = _elliptic_exponents(self.prefactor)
        own = cn_e if self.centre else sn_e
        parity = Parity.ODD if own % 2 else Parity.EVEN
        P = self.terms[0].P
        scale = 1.0 + max(abs(t.Q) for t in self.terms)
        if all(abs(t.P) < 1e-9 for t in self.terms):
            return parity, Period.EIGHT_K
        if all(abs(t.P - P) < 1e-9 and abs(t.Q) < 1e-9 * scale for t in self.terms) and abs(abs(P) - 1.0) < 1e-9:
            sign = (1 if P > 0 else -1) * (-1) ** (sn_e + cn_e)
            return parity, Period.TWO_K if sign > 0 else Period.FOUR_K
        raise DomainError(f"{self.expansion.label}: no period of the form 2K, 4K or 8K")

    def _local(self, u0: float, k2: float) -> Tuple[Jet, Jet]:
        sn, cn, dn = jacobi_jets(u0, k2)
        if self.group is SeriesGroup.HYP_M17:
            return self.kp * sn / dn, cn / dn
        return cn, sn

    def jet(self, u: float, b: Sequence[float], l: Real, k2: float, K: float) -> Jet:
        s = u - self.centre * K
        j = int(round(s / (2.0 * K)))
        s0 = s - 2.0 * K * j
        t, r = self._local(self.centre * K + s0, k2)
        z = t * t
        direct = z.value < 0.5
        if not direct:
            w = r * r
            sign_t = 1.0 if t.value >= 0 else -1.0
        a, bb, c, e = self.basis.a, self.basis.b, self.basis.c, self.e
        t_pow = 2.0 - 2.0 * c + (1.0 if self.strip else 0.0)

        total = Jet.constant(0.0)
        for n, bn in enumerate(b):
            if bn == 0.0:
                continue
            term = self.terms[n]
            cA, cB = term.row(j)
            if direct:
                A = self.basis.term(n, z)
                if self.strip:
                    A = A * t
                piece = cA * A
                if cB != 0.0:
                    G = hyp2f1_jet(a - c + 1.0, bb - c - n + 1.0, 2.0 - c - n, z)
                    piece = piece + cB * (t.signed_power(t_pow) * G)
            else:
                zn = z**n
                V1 = zn * hyp2f1_jet(a + n, bb, 1.0 - e, w)
                V2 = zn * r.signed_power(2.0 * e) * hyp2f1_jet(c - a, n + c - bb, 1.0 + e, w)
                conn = term.connection
                A = conn.a1 * V1 + conn.a2 * V2
                B = conn.b1 * V1 + conn.b2 * V2
                if self.strip:
                    A = A * t
                    B = B * t.abs()
                else:
                    B = B * sign_t
                piece = cA * A + cB * B
            total = total + float(bn) * piece

        sn, cn, dn = jacobi_jets(u, k2)
        outer = (dn ** float(l + 1)) * self.stripped.elliptic_jet(sn, cn, dn)
        sign = -1.0 if (self.strip and j % 2) else 1.0
        return (sign * self.scale) * outer * total


# ============================================================================
# EIGENFUNCTIONS
# ============================================================================


class Eigenfunction:
    """
    psi(u) = dn^{l+1} u * prefactor(sn, cn, dn) * sum_n b_n basis_n(z(u)).

    Build through `build_eigenfunction` or `build_infinite_eigenfunction`.
    """

    def __init__(
        self,
        prob: LameProblem,
        spec: EigenfunctionSpec,
        expansion: SeriesExpansion,
        b: Sequence[float],
    ):
        self.prob = prob
        self.spec = spec
        self.expansion = expansion
        self.b = np.asarray(b, dtype=float)
        self.K = elliptic_K(prob.k2)
        self.hyp = HypergeometricContinuation(expansion, len(self.b)) if spec.kind.hypergeometric else None
        self._pref = _prefactor(expansion)

    @property
    def energy(self) -> float:
        return self.prob.require_energy()

    def jet(self, u: float) -> Jet:
        u = float(u)
        k2 = self.prob.k2
        if self.hyp is not None:
            return self.hyp.jet(u, self.b, self.prob.l, k2, self.K)
        sn, cn, dn = jacobi_jets(u, k2)
        z = cn * cn if self.expansion.group is SeriesGroup.POWER_ONE else sn * sn
        series = sum_series(self.expansion, z, self.b)
        return (dn ** float(self.prob.l + 1)) * self._pref.elliptic_jet(sn, cn, dn) * series

    def __call__(self, u: float) -> float:
        return self.jet(u).value

    def residual(self, u: float) -> float:
        return associated_lame_residual(self.prob, self.jet(u), u)

    def table(self, us: Sequence[float]) -> List[Tuple[float, float, float]]:
        """(u, psi, ODE residual) rows."""
        rows = []
        for u in us:
            j = self.jet(u)
            rows.append((float(u), j.value, associated_lame_residual(self.prob, j, u)))
        return rows

    def max_abs(self, samples: int = 64) -> float:
        """max |psi| on interior points of (0, 4K) that avoid the multiples of K."""
        us = [(2 * i + 1) * 2.0 * self.K / samples for i in range(samples)]
        return max(abs(self(u)) for u in us)


def _spec_problem(prob: LameProblem, spec: EigenfunctionSpec) -> None:
    if Fraction(spec.l) != Fraction(prob.l) or Fraction(spec.m) != Fraction(prob.m):
        raise DomainError(
            f"{spec.name} was classified at l={_fmt(spec.l)} m={_fmt(spec.m)}, not at {prob}"
        )


def spectrum(prob: LameProblem, spec: EigenfunctionSpec) -> SpectralResult:
    """
    Energies of a finite family: the roots of its truncated characteristic
    problem with E as spectral parameter.

    Raises:
        DomainError: Phi family, or a spec from other (l, m)
        SolverError: propagated from the root finder
    """
    if spec.kind is FamilyKind.INFINITE:
        raise DomainError(f"{spec.name} is an infinite series; use infinite_spectrum")
    _spec_problem(prob, spec)
    e = family_expansion(prob, spec.group, spec.index)
    if e.truncation is None:
        raise DomainError(f"{spec.name} does not truncate at {prob}")
    result = characteristic_roots(prob.energy_coeffs(e.coeffs), e.truncation)
    status(f"{spec.name}: E = {', '.join(f'{v:.12g}' for v in result.eigenvalues)}", "✅")
    return result


def build_eigenfunction(prob: LameProblem, spec: EigenfunctionSpec) -> Eigenfunction:
    """
    Eigenfunction of a finite family at prob.energy.

    Raises:
        SpectrumError: prob.energy is not within 1e-9 of a root of the family
    """
    energy = prob.require_energy()
    result = spectrum(prob, spec)
    if len(result) == 0:
        raise SpectrumError(f"{spec.name} has no real energies at {prob}")
    idx = int(np.argmin(np.abs(result.eigenvalues - energy)))
    root = float(result.eigenvalues[idx])
    if abs(root - energy) > _SPECTRUM_MATCH * max(1.0, abs(root)):
        raise SpectrumError(
            f"E = {energy:.12g} is not an energy of {spec.name} (nearest {root:.12g})"
        )
    e = family_expansion(prob, spec.group, spec.index)
    return Eigenfunction(prob.at(root), spec, e, result.vectors[idx].b)


def eigenfunction(prob: LameProblem, spec: EigenfunctionSpec, u: float) -> float:
    return build_eigenfunction(prob, spec)(u)


def eigenfunction_jet(prob: LameProblem, spec: EigenfunctionSpec, u: float) -> Jet:
    return build_eigenfunction(prob, spec).jet(u)


# ============================================================================
# INFINITE SERIES
# ============================================================================


def _minimal_terms(k2: float) -> int:
    # b_n ~ k^{2n} and sn^2 <= 1
    n = math.ceil(math.log(1e-17) / math.log(k2)) + 10
    return min(n, get_settings().max_terms)


def _phi_coeffs(prob: LameProblem, i: int) -> Tuple[SeriesExpansion, ThreeTermCoeffs]:
    e = family_expansion(prob, SeriesGroup.POWER_ORIGIN, i)
    if e.truncation is not None:
        raise DomainError(f"Phi_{i} truncates at {prob}; a finite family exists instead")
    return e, prob.energy_coeffs(e.coeffs)


def _default_window(prob: LameProblem) -> Tuple[float, float]:
    energies = [0.0]
    for spec in classify_finite_series(prob.l, prob.m):
        try:
            energies.extend(float(v) for v in spectrum(prob, spec).eigenvalues)
        except DomainError:
            continue
    m = float(prob.m)
    return min(energies) - 10.0, max(energies) + 10.0 * (1.0 + prob.k2 * m * m)


def infinite_spectrum(
    prob: LameProblem, i: int, window: Optional[Tuple[float, float]] = None
) -> List[float]:
    """
    Energies of Phi_i in a window, from sign changes of the continued fraction
    of its recurrence (tail closed with the minimal ratio k^2).

    The default window runs from the lowest finite energy minus 10 to the
    highest plus 10 (1 + k^2 m^2). Sign changes through poles are rejected.

    Raises:
        DomainError: Phi_i truncates at (l, m)
    """
    _, c = _phi_coeffs(prob, i)
    k2 = prob.k2
    depth = min(max(60, math.ceil(math.log(1e-17) / math.log(k2)) + 20), get_settings().max_terms)
    lo, hi = window if window is not None else _default_window(prob)
    roots = continued_fraction_roots(c, lo, hi, depth, k2)
    status(f"Phi_{i}: {len(roots)} energies in [{lo:.6g}, {hi:.6g}]", "✅")
    return roots


def build_infinite_eigenfunction(
    prob: LameProblem, i: int, n_terms: Optional[int] = None
) -> Eigenfunction:
    """
    Phi_i at prob.energy from the minimal solution of its recurrence.

    Raises:
        DomainError: Phi_i truncates at (l, m)
        SpectrumError: the first row of the recurrence is not satisfied, i.e.
            prob.energy is not an energy of Phi_i
    """
    energy = prob.require_energy()
    e, c = _phi_coeffs(prob, i)
    n_terms = n_terms or _minimal_terms(prob.k2)
    b = backward_minimal_solve(c, n_terms, energy).b
    first_row = row_residuals(c, b, energy)[0]
    if first_row > _ROW_RESIDUAL_MAX:
        raise SpectrumError(
            f"E = {energy:.12g} is not an energy of Phi_{i} (first-row residual {first_row:.2e})"
        )
    parity, period = _power_labels(_prefactor(e))
    spec = EigenfunctionSpec(FamilyKind.INFINITE, i, prob.l, prob.m, None, parity, period)
    return Eigenfunction(prob, spec, e, b)


def infinite_eigenfunction(prob: LameProblem, i: int, u: float) -> float:
    return build_infinite_eigenfunction(prob, i)(u)


def infinite_depth_change(prob: LameProblem, i: int, samples: int = 64) -> float:
    """
    Relative change of Phi_i on [0, 4K] when the number of series terms is
    doubled; small values mean the eigenfunction is bounded and resolved.
    """
    n = _minimal_terms(prob.k2)
    first = build_infinite_eigenfunction(prob, i, n)
    second = build_infinite_eigenfunction(prob, i, min(2 * n, get_settings().max_terms))
    K = first.K
    us = [4.0 * K * j / (samples - 1) for j in range(samples)]
    a = np.array([first(u) for u in us])
    b = np.array([second(u) for u in us])
    scale = max(float(np.max(np.abs(b))), 1e-300)
    return float(np.max(np.abs(a - b))) / scale


# ============================================================================
# PARITY AND PERIOD
# ============================================================================


@dataclass
class ParityReport:
    """
    Numeric parity/period check.

    Attributes:
        parity_deviation: max |psi(2c - u) - s psi(u)| / max |psi|
        period_deviation: max deviation of the period relation / max |psi|
        worst_u: sample point of the larger deviation
        passed: both deviations below the tolerance
    """

    spec: EigenfunctionSpec
    parity_deviation: float
    period_deviation: float
    worst_u: float
    passed: bool

    def to_dict(self) -> Dict[str, object]:
        return {
            "family": self.spec.name,
            "parity": self.spec.parity.value,
            "period": self.spec.period.value,
            "parity_deviation": self.parity_deviation,
            "period_deviation": self.period_deviation,
            "worst_u": self.worst_u,
            "passed": self.passed,
        }


def parity_period_verify(
    psi: Eigenfunction, samples: int = 40, tol: float = 1e-10
) -> ParityReport:
    """
    Check psi(2c - u) = +-psi(u) about the expansion centre c and the period
    relation of the spec's label on u = (2i+1) K / samples, i < samples.
    An undetermined label is not checked (its deviation stays 0).
    """
    spec, K = psi.spec, psi.K
    centre = spec.centre * K
    us = [(2 * i + 1) * K / samples for i in range(samples)]
    values = [psi(u) for u in us]
    scale = max(max(abs(v) for v in values), 1e-300)

    worst_u, worst = us[0], -1.0
    parity_dev = period_dev = 0.0
    for u, v in zip(us, values):
        if spec.parity is Parity.UNDETERMINED:
            d_par = 0.0
        else:
            d_par = abs(psi(2.0 * centre - u) - spec.parity.sign * v) / scale
        if spec.period is Period.TWO_K:
            d_per = abs(psi(u + 2.0 * K) - v) / scale
        elif spec.period is Period.FOUR_K:
            d_per = abs(psi(u + 2.0 * K) + v) / scale
        elif spec.period is Period.EIGHT_K:
            d_per = abs(psi(u + 4.0 * K) + v) / scale
        else:
            d_per = 0.0
        parity_dev = max(parity_dev, d_par)
        period_dev = max(period_dev, d_per)
        if max(d_par, d_per) > worst:
            worst_u, worst = u, max(d_par, d_per)
    passed = parity_dev < tol and period_dev < tol
    status(
        f"{spec.name}: parity dev {parity_dev:.2e}, period dev {period_dev:.2e}",
        "✅" if passed else "❌",
    )
    return ParityReport(spec, parity_dev, period_dev, worst_u, passed)


# ============================================================================
# DEGENERACY
# ============================================================================


@dataclass
class DegeneratePair:
    """
    Two hypergeometric families with one energy set and independent
    eigenfunctions.

    Attributes:
        energies: sorted spectrum of the first family
        other_energies: sorted spectrum of the second family
        similar: the truncated recurrences are antidiagonally similar after rescaling
        wronskians: Wronskian at u = 0.37K of the unit-normalized pair, per energy
        verified: similar, spectra agree and every Wronskian is bounded away from 0
    """

    first: EigenfunctionSpec
    second: EigenfunctionSpec
    energies: List[float] = field(default_factory=list)
    other_energies: List[float] = field(default_factory=list)
    similar: bool = False
    wronskians: List[float] = field(default_factory=list)
    verified: bool = False

    def to_dict(self) -> Dict[str, object]:
        return {
            "first": self.first.name,
            "second": self.second.name,
            "N": self.first.N,
            "energies": self.energies,
            "other_energies": self.other_energies,
            "similar": self.similar,
            "wronskians": self.wronskians,
            "verified": self.verified,
        }


def _hyp_group(l: Real, m: Real) -> SeriesGroup:
    if _is_integer(l) and _is_half_odd(m) and m != -_HALF:
        return SeriesGroup.HYP_M17
    if _is_integer(m) and _is_half_odd(l) and l != -_HALF:
        return SeriesGroup.HYP_ONE
    raise DomainError(
        f"l={_fmt(l)} m={_fmt(m)} is outside the hypergeometric finite-series regime "
        "(one of l, m an integer and the other half-odd, not -1/2)"
    )


def _similar(prob: LameProblem, first: SeriesExpansion, second: SeriesExpansion, N: int) -> bool:
    """Rescale `second` by (-1/a')^n and Gamma factors, then compare antidiagonally."""
    c_first = prob.energy_coeffs(first.coeffs)
    c_second = prob.energy_coeffs(second.coeffs)
    factors = second.coeffs.gamma_factors
    points = truncation_points(second.coeffs, N + 2)
    if factors is None or not points:
        return False
    cut = points[0][1]
    shifts = [r + 1 for j, r in enumerate(factors.roots) if j != cut]
    ratio = -1.0 / float(second.seed_params.a)
    return antidiagonal_similarity_check(c_first, rescale(c_second, ratio, shifts), N)


def _unit(psi: Eigenfunction) -> float:
    return max(psi.max_abs(), 1e-300)


# paired indices for (m > 0, m < 0) of psi_hyp and (l > 0, l < 0) of Psi_hyp;
# the negative-side pairs are the i <-> i+4 images of the positive ones
_DEGENERATE_INDICES = {
    SeriesGroup.HYP_M17: (((1, 6), (4, 7)), ((5, 2), (8, 3))),
    SeriesGroup.HYP_ONE: (((5, 7), (6, 8)), ((1, 3), (2, 4))),
}


def degenerate_indices(l, m) -> Tuple[Tuple[int, int], ...]:
    """
    Index pairs of the degenerate hypergeometric families at (l, m).

    Raises:
        DomainError: (l, m) outside the hypergeometric finite-series regime
    """
    l, m = as_rational(l, "l"), as_rational(m, "m")
    group = _hyp_group(l, m)
    positive, negative = _DEGENERATE_INDICES[group]
    sign_param = m if group is SeriesGroup.HYP_M17 else l
    return positive if sign_param > 0 else negative


def degeneracy_pairs(l, m, k2: float = _REFERENCE_K2) -> List[DegeneratePair]:
    """
    The degenerate pairs of hypergeometric families at (l, m): (1, 6) and
    (4, 7) of psi_hyp for m > 0, their i <-> i+4 images for m < 0, and the
    Psi_hyp pairs reached by u -> u + K with l <-> m. Each pair is checked
    for antidiagonal similarity of the rescaled recurrences, equal spectra
    and nonzero Wronskians at k^2.

    Raises:
        DomainError: (l, m) outside the hypergeometric finite-series regime
    """
    prob = LameProblem.create(l, m, k2)
    group = _hyp_group(prob.l, prob.m)
    kind = FamilyKind.HYP_SD if group is SeriesGroup.HYP_M17 else FamilyKind.HYP_CN
    specs = {s.index: s for s in classify_finite_series(prob.l, prob.m) if s.kind is kind}
    tol = _SPECTRUM_MATCH
    K = elliptic_K(k2)

    pairs = []
    for i, j in degenerate_indices(prob.l, prob.m):
        if i not in specs or j not in specs:
            status(f"{kind.value}_{i} ~ {kind.value}_{j}: no finite series at {prob}", "⚠️")
            continue
        first, second = specs[i], specs[j]
        s1 = np.sort(spectrum(prob, first).eigenvalues)
        s2 = np.sort(spectrum(prob, second).eigenvalues)
        pair = DegeneratePair(first, second, [float(v) for v in s1], other_energies=[float(v) for v in s2])
        if first.N == second.N:
            e1, e2 = family_expansion(prob, group, i), family_expansion(prob, group, j)
            pair.similar = _similar(prob, e1, e2, first.N) or _similar(prob, e2, e1, first.N)
        agree = len(s1) == len(s2) and all(
            abs(x - y) <= tol * (1.0 + abs(x)) for x, y in zip(s1, s2)
        )
        if agree:
            u = _WRONSKIAN_POINT * K
            for E in s1:
                f = build_eigenfunction(prob.at(E), first)
                g = build_eigenfunction(prob.at(E), second)
                w = wronskian(f.jet(u), g.jet(u)) / (_unit(f) * _unit(g))
                pair.wronskians.append(float(w))
        pair.verified = (
            pair.similar
            and agree
            and bool(pair.wronskians)
            and all(abs(w) > _WRONSKIAN_MIN for w in pair.wronskians)
        )
        status(
            f"{first.name} ~ {second.name}: {'verified' if pair.verified else 'NOT verified'}",
            "✅" if pair.verified else "❌",
        )
        pairs.append(pair)
    return pairs


# ============================================================================
# SYMMETRIES
# ============================================================================


class SymmetryKind(Enum):
    NEGATE_LM = "negate_lm"
    SHIFT_K = "shift_K"


def _u_exponents(e: SeriesExpansion, l: Real) -> Tuple[float, float, float]:
    pref = _prefactor(e)
    return (
        2.0 * float(pref.x_exp),
        2.0 * float(pref.one_minus_x_exp),
        2.0 * float(pref.one_minus_x_over_a_exp) + float(l) + 1.0,
    )


def symmetry_map(spec: EigenfunctionSpec, which: Union[SymmetryKind, str]) -> EigenfunctionSpec:
    """
    negate_lm: the same kind at (-l-1, -m-1) with index i <-> i+4; the two
        equations coincide and so do the eigenfunctions.
    shift_K: the partner at (m, l) of a hypergeometric family, with
        psi(u + K) at (l, m) proportional to the partner at u.

    Raises:
        DomainError: shift_K of a family that is not hypergeometric, or no
            partner found
    """
    which = SymmetryKind(which) if isinstance(which, str) else which
    if which is SymmetryKind.NEGATE_LM:
        index = spec.index + 4 if spec.index <= 4 else spec.index - 4
        return describe_family(-spec.l - 1, -spec.m - 1, spec.kind, index)

    if not spec.kind.hypergeometric:
        raise DomainError(f"shift_K maps hypergeometric families only (got {spec.name})")
    source = family_expansion(_reference(spec.l, spec.m), spec.group, spec.index)
    sn_e, cn_e, dn_e = _u_exponents(source, spec.l)
    # sn(u+K) = cd u, cn(u+K) = -k' sd u, dn(u+K) = k'/dn u
    target_exps = (cn_e, sn_e, -sn_e - cn_e - dn_e)
    target_kind = FamilyKind.HYP_CN if spec.kind is FamilyKind.HYP_SD else FamilyKind.HYP_SD
    target_prob = _reference(spec.m, spec.l)
    for i in range(1, 9):
        try:
            e = family_expansion(target_prob, target_kind.group, i)
        except DomainError:
            continue
        exps = _u_exponents(e, target_prob.l)
        same_basis = (
            abs(e.basis.a - source.basis.a) < 1e-9
            and abs(e.basis.b - source.basis.b) < 1e-9
            and abs(e.basis.c - source.basis.c) < 1e-9
        )
        if same_basis and all(abs(x - y) < 1e-9 for x, y in zip(exps, target_exps)):
            return describe_family(target_prob.l, target_prob.m, target_kind, i)
    raise DomainError(f"no shift_K partner of {spec.name} at l={_fmt(spec.m)} m={_fmt(spec.l)}")


# ============================================================================
# ELEMENTARY CLOSED FORMS
# ============================================================================


def _closed_sd(l: float, k2: float, index: int, u: float) -> float:
    """The m = 1/2 forms of psi_hyp_1 and psi_hyp_6 at u (|u| < 2K)."""
    sn, cn, dn = (j.value for j in jacobi_jets(u, k2))
    kp = math.sqrt(1.0 - k2)
    w = 1j * kp * sn / dn  # z = (1-k^2) sd^2 = -w^2
    if index == 1:
        value = math.sqrt(dn) * closed_form_F("A", (l + 0.5) / 2.0, w) / gamma(0.5)
    else:
        value = sn / math.sqrt(dn) * closed_form_F("C", -(l - 0.5) / 2.0, w) / gamma(1.5)
    value = complex(value)
    if abs(value.imag) > 1e-10 * max(1.0, abs(value.real)):
        raise DomainError(f"closed form left an imaginary part {value.imag:.3e}")
    return value.real


def closed_form_eigenfunction(prob: LameProblem, spec: EigenfunctionSpec, u: float) -> float:
    """
    Elementary closed forms of the one-term hypergeometric families, built
    with complex intermediates:

        m = 1/2: psi_hyp_1 = sqrt(dn) Re[((cn + i k' sn)/dn)^(l+1/2)] / Gamma(1/2)
                 psi_hyp_6 = sn/sqrt(dn) F~(-(l-1/2)/2, (l+3/2)/2; 3/2; (1-k^2) sd^2)
        l = 1/2: Psi_hyp_5, Psi_hyp_7 as the above at (m, l) and u + K

    Valid for |u - centre + (K for Psi)| < 2K. Normalization is that of the
    series with b_0 = 1 up to a constant.

    Raises:
        DomainError: other families or parameters
    """
    if spec.kind is FamilyKind.HYP_SD and spec.index in (1, 6) and Fraction(prob.m) == _HALF:
        return _closed_sd(float(prob.l), prob.k2, spec.index, u)
    if spec.kind is FamilyKind.HYP_CN and spec.index in (5, 7) and Fraction(prob.l) == _HALF:
        K = elliptic_K(prob.k2)
        return _closed_sd(float(prob.m), prob.k2, 1 if spec.index == 5 else 6, u + K)
    raise DomainError(f"no closed form for {spec.name} at {prob}")


def one_term_energy(prob: LameProblem) -> float:
    """E = (l+1/2)^2 + k^2/4 at m = 1/2, or (m+1/2)^2 + k^2/4 at l = 1/2."""
    if Fraction(prob.m) == _HALF:
        return (float(prob.l) + 0.5) ** 2 + prob.k2 / 4.0
    if Fraction(prob.l) == _HALF:
        return (float(prob.m) + 0.5) ** 2 + prob.k2 / 4.0
    raise DomainError(f"one-term closed-form energy needs l or m = 1/2 (got {prob})")


def two_term_energies(prob: LameProblem) -> List[float]:
    """
    Shared energies of the two-term degenerate pairs at m = 3/2 (p = l) or
    l = 3/2 (p = m):

        E = p^2 + p + 5/4 + 5k^2/4 -+ sqrt(4(1-k^2)(p+1/2)^2 + k^4)

    These are the roots of beta_0 beta_1 - alpha_0 gamma_1 for psi_hyp_1.
    They tend to the Poschl-Teller levels p^2 + p + 3/2 and p^2 + p + 7/2
    as k^2 -> 1.
    """
    if Fraction(prob.m) == Fraction(3, 2):
        p = float(prob.l)
    elif Fraction(prob.l) == Fraction(3, 2):
        p = float(prob.m)
    else:
        raise DomainError(f"two-term closed-form energies need l or m = 3/2 (got {prob})")
    k2 = prob.k2
    base = p * p + p + 1.25 + 1.25 * k2
    root = math.sqrt(4.0 * (1.0 - k2) * (p + 0.5) ** 2 + k2 * k2)
    return [base - root, base + root]


def complex_phase(u: float, k2: float) -> complex:
    """(cn u + i k' sn u) / dn u, of unit modulus."""
    sn, cn, dn = (j.value for j in jacobi_jets(u, k2))
    return complex(cn, math.sqrt(1.0 - k2) * sn) / dn


def phase_power_form(l: float, k2: float, u: float) -> float:
    """sqrt(dn) Re[e^{i theta (l+1/2)}] with e^{i theta} = complex_phase(u)."""
    dn = jacobi_jets(u, k2)[2].value
    z = cmath.exp((l + 0.5) * cmath.log(complex_phase(u, k2)))
    return math.sqrt(dn) * z.real
