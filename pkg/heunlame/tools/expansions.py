"""
Series expansions of Heun and confluent Heun solutions

Each expansion is a three-term recurrence for its coefficients plus a term
basis: powers of x or 1-x, regularized hypergeometric functions, or the
Erdelyi / Svartholm polynomial families.

The 32 local expansions (four groups of eight) are not tabulated one by one.
They are produced from two seeds, the power series and the hypergeometric
series at x = 0, by carrying the seed through T_i and, for three of the
groups, a fractional substitution (M49 or M17). The closed-form tables are
then a consequence of the parameter algebra in `heun`.

The spectral parameter of every Heun expansion is a shift of the accessory
parameter: coefficients are evaluated at q = p.q + L. For the confluent
expansions it is a shift of sigma.
"""

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable, Optional, Sequence, Tuple, Union

import numpy as np

from ..utils.config import get_settings
from ..utils.console import status
from ..utils.errors import DivergenceError, DomainError
from ..utils.jets import Jet, lift
from .heun import (
    ArgMap,
    CHEParams,
    HeunParams,
    Prefactor,
    SeriesGroup,
    TransformedSolution,
    compose,
    homotopy,
    moebius,
)
from .recurrence import (
    GammaFactors,
    RecurrenceForm,
    ThreeTermCoeffs,
    backward_minimal_solve,
    detect_truncation,
    forward_solve,
)
from .specfun import hyp2f1_jet, hyp2f1_regularized_jet

Params = Union[HeunParams, CHEParams]

# groups built by the transformation route, with the substitution that follows T_i
_ROUTES = {
    SeriesGroup.POWER_ORIGIN: None,
    SeriesGroup.POWER_ONE: "M49",
    SeriesGroup.HYP_M17: "M17",
    SeriesGroup.HYP_ONE: "M49",
}


def _near(u, v) -> bool:
    return abs(float(u) - float(v)) <= get_settings().snap_tol


def _nonpositive_integer(x) -> bool:
    x = float(x)
    return x <= get_settings().snap_tol and _near(x, round(x))


def _snap(x: float) -> float:
    nearest = float(round(x))
    return nearest if _near(x, nearest) else x


# ============================================================================
# TERM BASES
# ============================================================================


class BasisKind(Enum):
    POWER = "z^n"
    HYPERGEOMETRIC = "z^n F~(n+a, b; n+c; z)"
    ERDELYI = "F(n+a, -n+b; c; z)"
    FOURIER = "cos(2nz)"


@dataclass(frozen=True)
class Basis:
    """
    Term basis of a series. Parameters a, b, c are only used by the
    hypergeometric kinds.
    """

    kind: BasisKind
    a: float = 0.0
    b: float = 0.0
    c: float = 0.0

    def term(self, n: int, z: Jet) -> Jet:
        if self.kind is BasisKind.POWER:
            return z**n
        if self.kind is BasisKind.HYPERGEOMETRIC:
            return (z**n) * hyp2f1_regularized_jet(n + self.a, self.b, n + self.c, z)
        if self.kind is BasisKind.ERDELYI:
            return hyp2f1_jet(n + self.a, -n + self.b, self.c, z)
        w = 2.0 * n
        v = z.value
        return z.apply(math.cos(w * v), -w * math.sin(w * v), -w * w * math.cos(w * v))

    def __str__(self) -> str:
        if self.kind in (BasisKind.POWER, BasisKind.FOURIER):
            return self.kind.value
        return f"{self.kind.value} with a={self.a:g}, b={self.b:g}, c={self.c:g}"


# ============================================================================
# EXPANSION RECORDS
# ============================================================================


@dataclass(frozen=True)
class SeriesExpansion:
    """
    H(x) = prefactor(x) * sum_n b_n basis_n(z(x)).

    Attributes:
        group: which family the expansion belongs to
        index: transformation index i (1..8) where applicable
        params: parameters of the equation being solved
        seed_params: parameters the coefficient formulas were evaluated with
        coeffs: recurrence for b_n
        prefactor: x^p (1-x)^q (1-x/a)^r, None for no prefactor
        arg_map: z as a function of x
        basis: term basis in z
        truncation: N with gamma_{N+1} = 0, if any
        label: name used in messages
    """

    group: SeriesGroup
    index: Optional[int]
    params: Params
    seed_params: Params
    coeffs: ThreeTermCoeffs
    prefactor: Optional[Prefactor]
    arg_map: ArgMap
    basis: Basis
    truncation: Optional[int] = None
    label: str = ""

    @property
    def a(self) -> float:
        return float(self.params.a) if isinstance(self.params, HeunParams) else math.inf

    def argument(self, x: Union[Jet, float]) -> Union[Jet, float]:
        if self.arg_map is ArgMap.IDENTITY:
            return x
        return self.arg_map.apply(x, self.a)


@dataclass(frozen=True)
class ConvergenceRegion:
    """
    Disk |z| < radius in the expansion's own argument z.

    Attributes:
        variable: the argument z as a function of x
        radius: radius for the minimal (eigenvalue) solution
        local_radius: radius for a forward-solved solution at arbitrary q
        boundary_ok: whether the minimal solution also converges on |z| = radius
        boundary_condition: the predicate boundary_ok was decided on
    """

    variable: str
    radius: float
    local_radius: float
    boundary_ok: bool
    boundary_condition: str

    def contains(self, z: float, minimal: bool = False) -> bool:
        r = self.radius if minimal else self.local_radius
        size = abs(z)
        if size < r * (1.0 - 1e-12):
            return True
        return minimal and self.boundary_ok and size <= r * (1.0 + 1e-12)


# ============================================================================
# SEED TABLES
# ============================================================================


def _constant(value: float) -> Callable[[int], float]:
    return lambda n: value


def power_seed(p: HeunParams, weight: float = 1.0, label: str = "") -> ThreeTermCoeffs:
    """
    Power series around x = 0:

        alpha_n = a(n+gamma)(n+1)
        beta_n  = -(a+1)n^2 - [a(gamma+delta-1) + alpha + beta - delta]n - q
        gamma_n = (n+alpha-1)(n+beta-1)
    """
    a, q, al, be, ga, de = (float(v) for v in p.as_tuple())
    lin = a * (ga + de - 1.0) + al + be - de
    factors = GammaFactors(1, (p.alpha - 1, p.beta - 1))
    return ThreeTermCoeffs(
        alpha=lambda n: a * (n + ga) * (n + 1),
        beta=lambda n: -(a + 1.0) * n * n - lin * n - q,
        gamma=factors,
        weight=_constant(weight),
        gamma_factors=factors,
        label=label or "power seed",
    )


def hyp_seed(p: HeunParams, weight: float = 1.0, label: str = "") -> ThreeTermCoeffs:
    """
    Series in x^n F~(n+alpha, gamma+delta-alpha-1; n+gamma; x) around x = 0:

        alpha_n = a(n+1)
        beta_n  = -(a+1)n^2 - [a(2alpha+1-gamma-delta) + alpha + beta - delta]n
                  - q - a alpha(alpha+1-gamma-delta)
        gamma_n = (n+alpha-1)(n+alpha-delta)(n+alpha+beta-gamma-delta)
    """
    a, q, al, be, ga, de = (float(v) for v in p.as_tuple())
    lin = a * (2.0 * al + 1.0 - ga - de) + al + be - de
    const = q + a * al * (al + 1.0 - ga - de)
    factors = GammaFactors(
        1, (p.alpha - 1, p.alpha - p.delta, p.alpha + p.beta - p.gamma - p.delta)
    )
    return ThreeTermCoeffs(
        alpha=lambda n: a * (n + 1),
        beta=lambda n: -(a + 1.0) * n * n - lin * n - const,
        gamma=factors,
        weight=_constant(weight),
        gamma_factors=factors,
        label=label or "hypergeometric seed",
    )


def _hyp_basis(p: HeunParams) -> Basis:
    al, ga, de = float(p.alpha), float(p.gamma), float(p.delta)
    return Basis(BasisKind.HYPERGEOMETRIC, al, ga + de - al - 1.0, ga)


@dataclass(frozen=True)
class _Ratio:
    """
    coef * prod(n + num) / prod(n + den) with equal roots cancelled, so that
    removable 0/0 entries take their limiting value.
    """

    coef: float
    num: Tuple[float, ...] = ()
    den: Tuple[float, ...] = ()

    @classmethod
    def make(cls, coef: float, num: Sequence[float], den: Sequence[float]) -> "_Ratio":
        num = [float(v) for v in num]
        den_left = []
        for d in den:
            hit = next((j for j, v in enumerate(num) if abs(v - float(d)) <= 1e-12), None)
            if hit is None:
                den_left.append(float(d))
            else:
                num.pop(hit)
        return cls(float(coef), tuple(num), tuple(den_left))

    def __call__(self, n: int) -> float:
        if self.coef == 0.0:
            return 0.0
        den = 1.0
        for d in self.den:
            den *= n + d
        if den == 0.0:
            raise DomainError(f"vanishing denominator at n = {n}; parameter set is excluded")
        out = self.coef
        for c in self.num:
            out *= n + c
        return out / den


def _check_denominators(ratios: Sequence[_Ratio], start: int, label: str) -> None:
    # roots at -n for some n >= start make the recurrence undefined there
    for r in ratios:
        if r.coef == 0.0:
            continue
        for d in r.den:
            if _near(d, round(d)) and -round(d) >= start:
                raise DomainError(f"{label}: coefficient denominator vanishes at n = {-round(d)}")


def erdelyi_seed(p: HeunParams) -> ThreeTermCoeffs:
    """
    Series in F(n+alpha, -n+gamma+delta-1-alpha; gamma; x), with s = 2alpha-gamma-delta:

        alpha_n = -(n+1)(n+1+alpha-beta)(n+1+alpha-gamma)(n+2+alpha-gamma-delta)
                  / ((2n+2+s)(2n+3+s))
        beta_n  = (1/2-a)[n(n+s+1) + alpha(alpha+1-gamma-delta)] - q + alpha beta/2
                  + (gamma-delta)/8 [2alpha+2beta-gamma-delta
                  + (gamma+delta-2) s (2beta-gamma-delta) / ((2n+s)(2n+2+s))]
        gamma_n = -(n+s)(n+alpha-delta)(n+alpha-1)(n+alpha+beta-gamma-delta)
                  / ((2n+s)(2n+s-1))

    s = -1 gives form r2 and s = 0 form r3; alpha_{-1} is the n -> -1 limit of alpha_n.
    """
    a, q, al, be, ga, de = (float(v) for v in p.as_tuple())
    s = _snap(2.0 * al - ga - de)
    label = "Erdelyi (lambda=alpha)"
    if _nonpositive_integer(ga):
        raise DomainError(f"{label}: gamma = {ga:g} is a non-positive integer")
    if _nonpositive_integer(2.0 + s):
        raise DomainError(f"{label}: 2+2alpha-gamma-delta = {2.0 + s:g} is a non-positive integer")
    alpha_r = _Ratio.make(
        -0.25, (1.0, 1.0 + al - be, 1.0 + al - ga, 2.0 + al - ga - de), (1.0 + s / 2.0, (3.0 + s) / 2.0)
    )
    tail_r = _Ratio.make((ga + de - 2.0) * s * (2.0 * be - ga - de) / 4.0, (), (s / 2.0, 1.0 + s / 2.0))
    gamma_r = _Ratio.make(-0.25, (s, al - de, al - 1.0, al + be - ga - de), (s / 2.0, (s - 1.0) / 2.0))
    _check_denominators([alpha_r, tail_r], 0, label)
    _check_denominators([gamma_r], 1, label)
    base = al * (al + 1.0 - ga - de)
    half_ab = 0.5 * al * be
    head = 2.0 * al + 2.0 * be - ga - de

    def beta(n: int) -> float:
        return (0.5 - a) * (n * (n + s + 1.0) + base) - q + half_ab + (ga - de) / 8.0 * (head + tail_r(n))

    form = RecurrenceForm.R1
    if _near(s, -1.0):
        form = RecurrenceForm.R2
    elif _near(s, 0.0):
        form = RecurrenceForm.R3
    return ThreeTermCoeffs(
        alpha=alpha_r,
        beta=beta,
        gamma=gamma_r,
        weight=_constant(1.0),
        alpha_minus1=alpha_r(-1) if form is not RecurrenceForm.R1 else 0.0,
        form=form,
        label=label,
    )


def svartholm_seed(p: HeunParams) -> ThreeTermCoeffs:
    """
    Series in F(n+gamma+delta-1, -n; gamma; x), with s = gamma+delta:

        alpha_n = -(n+1)(n+s-alpha)(n+s-beta)(n+delta) / ((2n+s)(2n+s+1))
        beta_n  = (1/2-a) n(n+s-1) - q + alpha beta/2 + (gamma-delta)/8 [2alpha+2beta-s
                  + (s-2)(2alpha-s)(2beta-s) / ((2n+s-2)(2n+s))]
        gamma_n = -(n+alpha-1)(n+beta-1)(n+s-2)(n+gamma-1) / ((2n+s-3)(2n+s-2))

    s = 1 gives form r2 and s = 2 form r3.
    """
    a, q, al, be, ga, de = (float(v) for v in p.as_tuple())
    s = _snap(ga + de)
    label = "Svartholm"
    if _nonpositive_integer(ga):
        raise DomainError(f"{label}: gamma = {ga:g} is a non-positive integer")
    if _nonpositive_integer(s):
        raise DomainError(f"{label}: gamma+delta = {s:g} is a non-positive integer")
    alpha_r = _Ratio.make(-0.25, (1.0, s - al, s - be, de), (s / 2.0, (s + 1.0) / 2.0))
    tail_r = _Ratio.make(
        (s - 2.0) * (2.0 * al - s) * (2.0 * be - s) / 4.0, (), ((s - 2.0) / 2.0, s / 2.0)
    )
    gamma_r = _Ratio.make(-0.25, (al - 1.0, be - 1.0, s - 2.0, ga - 1.0), ((s - 3.0) / 2.0, (s - 2.0) / 2.0))
    _check_denominators([alpha_r, tail_r], 0, label)
    _check_denominators([gamma_r], 1, label)
    half_ab = 0.5 * al * be
    head = 2.0 * al + 2.0 * be - s

    def beta(n: int) -> float:
        return (0.5 - a) * n * (n + s - 1.0) - q + half_ab + (ga - de) / 8.0 * (head + tail_r(n))

    form = RecurrenceForm.R1
    if _near(s, 1.0):
        form = RecurrenceForm.R2
    elif _near(s, 2.0):
        form = RecurrenceForm.R3
    return ThreeTermCoeffs(
        alpha=alpha_r,
        beta=beta,
        gamma=gamma_r,
        weight=_constant(1.0),
        alpha_minus1=alpha_r(-1) if form is not RecurrenceForm.R1 else 0.0,
        form=form,
        label=label,
    )


def _require_rho(c: CHEParams) -> None:
    if c.rho == 0:
        raise DomainError("confluent Heun expansions require rho != 0")


def baber_seed(c: CHEParams) -> ThreeTermCoeffs:
    """
    Confluent power series:
        (n+gamma)(n+1) b_{n+1} - [n^2 + (gamma+delta-1-rho)n - sigma] b_n - rho(n+alpha-1) b_{n-1} = 0
    """
    _require_rho(c)
    ga, de, rho, sigma = (float(v) for v in (c.gamma, c.delta, c.rho, c.sigma))
    lin = ga + de - 1.0 - rho
    factors = GammaFactors(-c.rho, (c.alpha - 1,))
    return ThreeTermCoeffs(
        alpha=lambda n: (n + ga) * (n + 1),
        beta=lambda n: -(n * n + lin * n - sigma),
        gamma=factors,
        weight=_constant(-1.0),
        gamma_factors=factors,
        label="confluent power series",
    )


def fisher_seed(c: CHEParams) -> ThreeTermCoeffs:
    """
    Confluent series in x^n F~(n+alpha, gamma+delta-alpha-1; n+gamma; x):
        (n+1) b_{n+1} - [n^2 + (2alpha+1-gamma-delta-rho)n - sigma + alpha(alpha+1-gamma-delta)] b_n
            - rho(n+alpha-1)(n+alpha-delta) b_{n-1} = 0
    """
    _require_rho(c)
    ga, de, al, rho, sigma = (float(v) for v in (c.gamma, c.delta, c.alpha, c.rho, c.sigma))
    lin = 2.0 * al + 1.0 - ga - de - rho
    const = al * (al + 1.0 - ga - de) - sigma
    factors = GammaFactors(-c.rho, (c.alpha - 1, c.alpha - c.delta))
    return ThreeTermCoeffs(
        alpha=lambda n: n + 1.0,
        beta=lambda n: -(n * n + lin * n + const),
        gamma=factors,
        weight=_constant(-1.0),
        gamma_factors=factors,
        label="confluent hypergeometric series",
    )


def che_erdelyi_seed(c: CHEParams) -> ThreeTermCoeffs:
    """Confluent limit of erdelyi_seed (coefficients divided by a, a -> inf)."""
    _require_rho(c)
    ga, de, al, rho, sigma = (float(v) for v in (c.gamma, c.delta, c.alpha, c.rho, c.sigma))
    s = _snap(2.0 * al - ga - de)
    label = "confluent Erdelyi (lambda=alpha)"
    if _nonpositive_integer(ga) or _nonpositive_integer(2.0 + s):
        raise DomainError(f"{label}: excluded parameter set (gamma = {ga:g}, 2alpha-gamma-delta = {s:g})")
    alpha_r = _Ratio.make(
        -rho / 4.0, (1.0, 1.0 + al - ga, 2.0 + al - ga - de), (1.0 + s / 2.0, (3.0 + s) / 2.0)
    )
    tail_r = _Ratio.make((ga + de - 2.0) * (ga + de - 2.0 * al) / 4.0, (), (s / 2.0, 1.0 + s / 2.0))
    gamma_r = _Ratio.make(rho / 4.0, (s, al - de, al - 1.0), (s / 2.0, (s - 1.0) / 2.0))
    _check_denominators([alpha_r, tail_r], 0, label)
    _check_denominators([gamma_r], 1, label)
    base = al * (al + 1.0 - ga - de)

    def beta(n: int) -> float:
        return (
            -n * (n + s + 1.0) - base + sigma - 0.5 * al * rho
            + 0.25 * rho * (ga - de) * (tail_r(n) - 1.0)
        )

    form = RecurrenceForm.R2 if _near(s, -1.0) else RecurrenceForm.R3 if _near(s, 0.0) else RecurrenceForm.R1
    return ThreeTermCoeffs(
        alpha=alpha_r,
        beta=beta,
        gamma=gamma_r,
        weight=_constant(-1.0),
        alpha_minus1=alpha_r(-1) if form is not RecurrenceForm.R1 else 0.0,
        form=form,
        label=label,
    )


def che_svartholm_seed(c: CHEParams) -> ThreeTermCoeffs:
    """Confluent limit of svartholm_seed."""
    _require_rho(c)
    ga, de, al, rho, sigma = (float(v) for v in (c.gamma, c.delta, c.alpha, c.rho, c.sigma))
    s = _snap(ga + de)
    label = "confluent Svartholm"
    if _nonpositive_integer(ga) or _nonpositive_integer(s):
        raise DomainError(f"{label}: excluded parameter set (gamma = {ga:g}, gamma+delta = {s:g})")
    alpha_r = _Ratio.make(-rho / 4.0, (1.0, s - al, de), (s / 2.0, (s + 1.0) / 2.0))
    tail_r = _Ratio.make((s - 2.0) * (2.0 * al - s) / 4.0, (), ((s - 2.0) / 2.0, s / 2.0))
    gamma_r = _Ratio.make(rho / 4.0, (al - 1.0, s - 2.0, ga - 1.0), ((s - 3.0) / 2.0, (s - 2.0) / 2.0))
    _check_denominators([alpha_r, tail_r], 0, label)
    _check_denominators([gamma_r], 1, label)

    def beta(n: int) -> float:
        return -n * (n + s - 1.0) + sigma - 0.5 * al * rho - 0.25 * rho * (ga - de) * (1.0 + tail_r(n))

    form = RecurrenceForm.R2 if _near(s, 1.0) else RecurrenceForm.R3 if _near(s, 2.0) else RecurrenceForm.R1
    return ThreeTermCoeffs(
        alpha=alpha_r,
        beta=beta,
        gamma=gamma_r,
        weight=_constant(-1.0),
        alpha_minus1=alpha_r(-1) if form is not RecurrenceForm.R1 else 0.0,
        form=form,
        label=label,
    )


# ============================================================================
# THE FOUR GROUPS
# ============================================================================


def _route(p: HeunParams, group: SeriesGroup, i: int) -> TransformedSolution:
    t = homotopy(p, i)
    which = _ROUTES[group]
    if which is None:
        return t
    return compose(t, moebius(t.params, which))


def _finish(e: SeriesExpansion) -> SeriesExpansion:
    n_max = get_settings().max_terms
    N = detect_truncation(e.coeffs, n_max)
    status(f"{e.label}: {'finite, N=' + str(N) if N is not None else 'infinite'}", "🔍")
    return replace(e, truncation=N)


def group_coefficients(p: HeunParams, group: SeriesGroup, i: int = 1) -> SeriesExpansion:
    """
    Build expansion i of a group by the transformation route.

    T_i moves the problem to the equation with parameters T_i(p); M49 or M17
    then moves the expansion point; the seed series of the resulting equation
    supplies the coefficients. Prefactors of both steps multiply.

    Args:
        p: Heun parameters of the equation being solved
        group: PowerAt0, PowerAt1, HypM17, HypAt1 or HypInitial
        i: transformation index 1..8 (ignored for HypInitial)

    Raises:
        DomainError: unsupported group, index out of range, or a basis
            c-parameter that is a non-positive integer
    """
    if group is SeriesGroup.HYP_INITIAL:
        route = TransformedSolution(p, p, (), "")
        i = 1
    elif group in _ROUTES:
        route = _route(p, group, i)
    else:
        raise DomainError(f"{group.value} expansions are not built by the transformation route")

    seed_p = route.params
    prefactor = route.prefactor
    arg_map = route.arg_map
    if prefactor is None or arg_map is None:
        raise DomainError(f"transformation chain {route.label} did not reduce to a single step")
    # the fractional substitutions send q to -q + const
    weight = 1.0 if group in (SeriesGroup.POWER_ORIGIN, SeriesGroup.HYP_INITIAL) else -1.0
    label = f"{group.value}^({i})" if group is not SeriesGroup.HYP_INITIAL else group.value

    if group in (SeriesGroup.POWER_ORIGIN, SeriesGroup.POWER_ONE):
        coeffs = power_seed(seed_p, weight, label)
        basis = Basis(BasisKind.POWER)
    else:
        if _nonpositive_integer(seed_p.gamma):
            raise DomainError(
                f"{label}: basis parameter c = {float(seed_p.gamma):g} is a non-positive integer"
            )
        coeffs = hyp_seed(seed_p, weight, label)
        basis = _hyp_basis(seed_p)

    return _finish(
        SeriesExpansion(
            group=group,
            index=i,
            params=p,
            seed_params=seed_p,
            coeffs=coeffs,
            prefactor=None if prefactor.trivial else prefactor,
            arg_map=arg_map,
            basis=basis,
            label=label,
        )
    )


def power_series_origin(p: HeunParams, i: int) -> SeriesExpansion:
    """Power series in x around x = 0, the i-th of eight."""
    return group_coefficients(p, SeriesGroup.POWER_ORIGIN, i)


def power_series_one(p: HeunParams, i: int) -> SeriesExpansion:
    """Power series in 1-x around x = 1."""
    return group_coefficients(p, SeriesGroup.POWER_ONE, i)


def hyp_series_initial(p: HeunParams) -> SeriesExpansion:
    return group_coefficients(p, SeriesGroup.HYP_INITIAL)


def hyp_series_M17(p: HeunParams, i: int) -> SeriesExpansion:
    """Hypergeometric-function series in z = (a-1)x/(a-x)."""
    return group_coefficients(p, SeriesGroup.HYP_M17, i)


def hyp_series_one(p: HeunParams, i: int) -> SeriesExpansion:
    """Hypergeometric-function series in z = 1-x."""
    return group_coefficients(p, SeriesGroup.HYP_ONE, i)


# ============================================================================
# ERDELYI, SVARTHOLM AND CONFLUENT EXPANSIONS
# ============================================================================


class ErdelyiChoice(Enum):
    ALPHA = "lambda=alpha"
    SVARTHOLM = "svartholm"


def erdelyi_expansion(p: HeunParams, choice: Union[ErdelyiChoice, str] = ErdelyiChoice.ALPHA) -> SeriesExpansion:
    """
    Expansion in F(n+lambda, -n+mu; gamma; x).

    Args:
        p: Heun parameters
        choice: lambda = alpha, mu = gamma+delta-1-alpha; or the Svartholm
            branch lambda = gamma+delta-1, mu = 0

    Raises:
        DomainError: gamma or the branch's denominators hit excluded values
    """
    choice = ErdelyiChoice(choice)
    al, ga, de = float(p.alpha), float(p.gamma), float(p.delta)
    if choice is ErdelyiChoice.ALPHA:
        coeffs = erdelyi_seed(p)
        basis = Basis(BasisKind.ERDELYI, al, ga + de - 1.0 - al, ga)
        group = SeriesGroup.ERDELYI
    else:
        coeffs = svartholm_seed(p)
        basis = Basis(BasisKind.ERDELYI, ga + de - 1.0, 0.0, ga)
        group = SeriesGroup.SVARTHOLM
    return _finish(
        SeriesExpansion(group, None, p, p, coeffs, None, ArgMap.IDENTITY, basis, label=coeffs.label)
    )


def trigonometric_lame(p: HeunParams) -> SeriesExpansion:
    """
    The Svartholm branch at gamma = delta = 1/2, where F(n, -n; 1/2; sin^2 v) = cos 2nv.

    The returned expansion is evaluated at v, not at x = sin^2 v:
        alpha_n = -(n+1-alpha)(n+1-beta)/4
        beta_n  = (1/2-a) n^2 - q + alpha beta/2
        gamma_n = -(n+alpha-1)(n+beta-1)/4,  form r2 with alpha_{-1} = -alpha beta/4

    Raises:
        DomainError: gamma or delta differ from 1/2
    """
    if not (_near(p.gamma, 0.5) and _near(p.delta, 0.5)):
        raise DomainError(
            f"trigonometric expansion needs gamma = delta = 1/2 (got {float(p.gamma):g}, {float(p.delta):g})"
        )
    coeffs = svartholm_seed(p)
    return _finish(
        SeriesExpansion(
            SeriesGroup.SVARTHOLM,
            None,
            p,
            p,
            coeffs,
            None,
            ArgMap.IDENTITY,
            Basis(BasisKind.FOURIER),
            label="trigonometric Svartholm",
        )
    )


def che_expansion(c: CHEParams, kind: str = "power") -> SeriesExpansion:
    """
    Expansions of the confluent Heun equation.

    Args:
        c: confluent parameters
        kind: "power" (series in x^n), "hyp" (series in x^n F~), or the
            confluent limits "erdelyi" / "svartholm"

    Raises:
        DomainError: rho = 0 or an unknown kind
    """
    _require_rho(c)
    ga, de, al = float(c.gamma), float(c.delta), float(c.alpha)
    if kind == "power":
        coeffs, basis, group = baber_seed(c), Basis(BasisKind.POWER), SeriesGroup.CHE_POWER
    elif kind == "hyp":
        coeffs = fisher_seed(c)
        basis = Basis(BasisKind.HYPERGEOMETRIC, al, ga + de - al - 1.0, ga)
        group = SeriesGroup.CHE_HYP
    elif kind == "erdelyi":
        coeffs = che_erdelyi_seed(c)
        basis = Basis(BasisKind.ERDELYI, al, ga + de - 1.0 - al, ga)
        group = SeriesGroup.ERDELYI
    elif kind == "svartholm":
        coeffs = che_svartholm_seed(c)
        basis = Basis(BasisKind.ERDELYI, ga + de - 1.0, 0.0, ga)
        group = SeriesGroup.SVARTHOLM
    else:
        raise DomainError(f"Unknown confluent expansion kind {kind!r}; expected power, hyp, erdelyi or svartholm")
    return _finish(SeriesExpansion(group, None, c, c, coeffs, None, ArgMap.IDENTITY, basis, label=coeffs.label))


# ============================================================================
# CONVERGENCE
# ============================================================================


def convergence_region(e: SeriesExpansion) -> ConvergenceRegion:
    """
    Disk of convergence in the expansion's argument.

    Power groups: the minimal solution converges for |z| < max(1, |a'|) where
    a' is the third singular point of the seed equation; on the boundary it
    converges if Re delta' < 1 (|a'| < 1) or Re eps' < 1 (|a'| > 1), primes
    denoting seed parameters. The hypergeometric groups converge on |z| <= 1
    when the basis functions do, i.e. Re delta' < 1.

    Raises:
        DomainError: Erdelyi, Svartholm or confluent expansions
    """
    group = e.group
    if group not in _ROUTES and group is not SeriesGroup.HYP_INITIAL:
        raise DomainError(f"no convergence classification for {group.value} expansions")
    sp = e.seed_params
    a_seed = abs(float(sp.a))
    variable = e.arg_map.value
    local = min(1.0, a_seed)
    delta_s, eps_s = float(sp.delta), float(sp.epsilon)
    if group in (SeriesGroup.POWER_ORIGIN, SeriesGroup.POWER_ONE):
        if a_seed < 1.0:
            return ConvergenceRegion(
                variable, 1.0, local, delta_s < 1.0, f"Re delta' < 1 (delta' = {delta_s:g})"
            )
        return ConvergenceRegion(
            variable, a_seed, local, eps_s < 1.0, f"Re eps' < 1 (eps' = {eps_s:g})"
        )
    return ConvergenceRegion(variable, 1.0, local, delta_s < 1.0, f"Re delta' < 1 (delta' = {delta_s:g})")


# ============================================================================
# EVALUATION
# ============================================================================


def sum_series(e: SeriesExpansion, z: Union[Jet, float], b: Sequence[float]) -> Jet:
    """sum_n b_n basis_n(z), without the prefactor."""
    z = lift(z)
    total = Jet.constant(0.0)
    for n, bn in enumerate(b):
        if bn != 0.0:
            total = total + float(bn) * e.basis.term(n, z)
    return total


def _magnitude(j: Jet) -> float:
    return max(abs(j.value), abs(j.d1), abs(j.d2))


def _coefficients(e: SeriesExpansion, N: int, lam: float, minimal: bool) -> np.ndarray:
    if minimal:
        return backward_minimal_solve(e.coeffs, N, lam).b
    return forward_solve(e.coeffs, N, lam).b


def _adaptive(e: SeriesExpansion, z: Jet, lam: float, minimal: bool, tol: float) -> Jet:
    max_terms = get_settings().max_terms
    size = 32
    while True:
        b = _coefficients(e, size, lam, minimal)
        total = Jet.constant(0.0)
        small = 0
        for n, bn in enumerate(b):
            term = float(bn) * e.basis.term(n, z) if bn != 0.0 else Jet.constant(0.0)
            total = total + term
            if _magnitude(term) <= tol * _magnitude(total):
                small += 1
                if small == 3:
                    return total
            else:
                small = 0
        if size >= max_terms:
            raise DivergenceError(
                f"{e.label} did not converge at z = {z.value:g} within {max_terms} terms"
            )
        size = min(2 * size, max_terms)


def evaluate_jet(
    e: SeriesExpansion,
    x: Union[Jet, float],
    N: Optional[int] = None,
    lam: float = 0.0,
    minimal: bool = False,
    tol: Optional[float] = None,
    coefficients: Optional[Sequence[float]] = None,
) -> Jet:
    """
    prefactor(x) * sum_n b_n basis_n(z(x)) with its first two x-derivatives.

    Args:
        e: the expansion
        x: point (or jet of an outer variable)
        N: truncate after b_N; defaults to e.truncation when the series is finite
        lam: spectral parameter (shift of q, or of sigma for confluent series)
        minimal: take the minimal solution of the recurrence (backward solve)
        tol: adaptive stopping tolerance, default Settings.series_tol
        coefficients: precomputed b_n (overrides N, lam and minimal)

    Raises:
        DomainError: infinite series evaluated outside its convergence region
        DivergenceError: adaptive summation did not settle within max_terms
    """
    xj = x if isinstance(x, Jet) else Jet.variable(x)
    z = lift(e.argument(xj))

    if coefficients is not None:
        total = sum_series(e, z, coefficients)
    else:
        if N is None:
            N = e.truncation
        if N is not None:
            total = sum_series(e, z, _coefficients(e, N, lam, minimal))
        else:
            if e.group in _ROUTES or e.group is SeriesGroup.HYP_INITIAL:
                region = convergence_region(e)
                if not region.contains(z.value, minimal):
                    raise DomainError(
                        f"{e.label}: |{region.variable}| = {abs(z.value):g} is outside the "
                        f"convergence disk (radius {region.radius if minimal else region.local_radius:g})"
                    )
            total = _adaptive(e, z, lam, minimal, tol or get_settings().series_tol)

    if e.prefactor is not None:
        total = e.prefactor.jet(xj) * total
    return total


def evaluate(e: SeriesExpansion, x: float, **kwargs) -> float:
    """Value of the expansion at x; keyword arguments as in evaluate_jet."""
    return evaluate_jet(e, float(x), **kwargs).value


def ince_identity_gap(p: HeunParams, i: int, xs: Sequence[float]) -> float:
    """
    max_x |H^(i+4)(x) - H^(i)(x)| / |H^(i)(x)| for the power series at the
    origin, both taken as the forward-solved local solution (b_0 = 1).

    Raises:
        DomainError: i outside 1..4, 1-eps a non-negative integer, or a point
            outside |x| < min(1, |a|)
    """
    if i not in (1, 2, 3, 4):
        raise DomainError(f"identity pairs i with i+4, i = 1..4 (got {i})")
    eps = float(p.epsilon)
    if _near(1.0 - eps, round(1.0 - eps)) and round(1.0 - eps) >= 0:
        raise DomainError(f"1-eps = {1.0 - eps:g} is a non-negative integer")
    limit = min(1.0, abs(float(p.a)))
    first = power_series_origin(p, i)
    second = power_series_origin(p, i + 4)
    gap = 0.0
    for x in xs:
        if abs(x) >= limit:
            raise DomainError(f"x = {x:g} is outside |x| < {limit:g}")
        u = evaluate(first, x)
        v = evaluate(second, x)
        gap = max(gap, abs(v - u) / max(abs(u), 1e-300))
    return gap
