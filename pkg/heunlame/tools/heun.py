"""
Heun equation parameter algebra

    H'' + (gamma/x + delta/(x-1) + eps/(x-a)) H' + (alpha*beta*x - q) / (x(x-1)(x-a)) H = 0,
    eps = alpha + beta + 1 - gamma - delta

Holds the parameter record, the eight homotopic transformations T1..T8, the
three fractional (Moebius) substitutions used to move the expansions around,
the reductions to the hypergeometric equation and the ODE residual that every
other module uses as its correctness check.

Transformations only return descriptors; nothing is mutated. A descriptor is
evaluated by handing it the jet of a solution of the transformed equation.
"""

from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import Callable, FrozenSet, Optional, Sequence, Tuple, Union

from ..utils.config import get_settings
from ..utils.errors import DomainError
from ..utils.jets import Jet, lift
from .specfun import hyp2f1_jet

Real = Union[float, Fraction]
JetLike = Union[Jet, Tuple[float, float, float]]


def _close(u: Real, v: Real) -> bool:
    return abs(float(u) - float(v)) <= get_settings().snap_tol


# ============================================================================
# PARAMETERS
# ============================================================================


@dataclass(frozen=True)
class HeunParams:
    """
    Parameters (a, q; alpha, beta, gamma, delta) of the general Heun equation.

    Exponent parameters may be Fractions; they then stay exact through every
    transformation, which is what makes truncation detection exact.
    """

    a: Real
    q: Real
    alpha: Real
    beta: Real
    gamma: Real
    delta: Real

    @property
    def epsilon(self) -> Real:
        return self.alpha + self.beta + 1 - self.gamma - self.delta

    def as_tuple(self) -> Tuple[Real, ...]:
        return (self.a, self.q, self.alpha, self.beta, self.gamma, self.delta)

    def with_q(self, q: Real) -> "HeunParams":
        return replace(self, q=q)

    def __str__(self) -> str:
        names = ("a", "q", "alpha", "beta", "gamma", "delta")
        return "H(" + ", ".join(f"{n}={float(v):.6g}" for n, v in zip(names, self.as_tuple())) + ")"


def make_params(a: Real, q: Real, alpha: Real, beta: Real, gamma: Real, delta: Real) -> HeunParams:
    """
    Validate and build a HeunParams record.

    Raises:
        DomainError: a = 0 or a = 1 (the singular point would merge with 0 or 1)
    """
    if _close(a, 0) or _close(a, 1):
        raise DomainError(f"Heun singularity a must differ from 0 and 1 (got a = {float(a):g})")
    return HeunParams(a, q, alpha, beta, gamma, delta)


# ============================================================================
# PREFACTORS AND ARGUMENT MAPS
# ============================================================================


class ArgMap(Enum):
    IDENTITY = "x"
    ONE_MINUS_X = "1-x"
    M17 = "(1-a)x/(x-a)"
    M65 = "a(x-1)/(x-a)"

    def matrix(self, a: Real) -> Tuple[float, float, float, float]:
        """Coefficients (p, q, r, s) of y = (p x + q) / (r x + s)."""
        a = float(a)
        return {
            ArgMap.IDENTITY: (1.0, 0.0, 0.0, 1.0),
            ArgMap.ONE_MINUS_X: (-1.0, 1.0, 0.0, 1.0),
            ArgMap.M17: (1.0 - a, 0.0, 1.0, -a),
            ArgMap.M65: (a, -a, 1.0, -a),
        }[self]

    def apply(self, x: Union[Jet, float], a: Real) -> Union[Jet, float]:
        p, q, r, s = self.matrix(a)
        if self is ArgMap.IDENTITY:
            return x
        if r == 0.0:
            return p * x + q
        return (p * x + q) / (r * x + s)


def _mat_mul(m2, m1):
    p2, q2, r2, s2 = m2
    p1, q1, r1, s1 = m1
    return (p2 * p1 + q2 * r1, p2 * q1 + q2 * s1, r2 * p1 + s2 * r1, r2 * q1 + s2 * s1)


def _identify(matrix, a: Real) -> Optional[ArgMap]:
    tol = 1e3 * get_settings().snap_tol
    for candidate in ArgMap:
        ref = candidate.matrix(a)
        pivot = max(range(4), key=lambda j: abs(ref[j]))
        if matrix[pivot] == 0.0:
            continue
        scale = matrix[pivot] / ref[pivot]
        if all(abs(matrix[j] - scale * ref[j]) <= tol * abs(scale) for j in range(4)):
            return candidate
    return None


@dataclass(frozen=True)
class Prefactor:
    """
    x^x_exp (1-x)^one_minus_x_exp (1-x/a)^one_minus_x_over_a_exp
    """

    a: Real
    x_exp: Real = 0
    one_minus_x_exp: Real = 0
    one_minus_x_over_a_exp: Real = 0

    @property
    def trivial(self) -> bool:
        return self.x_exp == 0 and self.one_minus_x_exp == 0 and self.one_minus_x_over_a_exp == 0

    def times(self, other: "Prefactor") -> "Prefactor":
        if not _close(self.a, other.a):
            raise DomainError("prefactors on different equations cannot be multiplied")
        return Prefactor(
            self.a,
            self.x_exp + other.x_exp,
            self.one_minus_x_exp + other.one_minus_x_exp,
            self.one_minus_x_over_a_exp + other.one_minus_x_over_a_exp,
        )

    def jet(self, x: Union[Jet, float]) -> Jet:
        x = lift(x)
        out = Jet.constant(1.0)
        if self.x_exp != 0:
            out = out * x ** float(self.x_exp)
        if self.one_minus_x_exp != 0:
            out = out * (1.0 - x) ** float(self.one_minus_x_exp)
        if self.one_minus_x_over_a_exp != 0:
            out = out * (1.0 - x / float(self.a)) ** float(self.one_minus_x_over_a_exp)
        return out

    def elliptic_jet(self, sn: Jet, cn: Jet, dn: Jet) -> Jet:
        """
        The prefactor at x = sn^2 u with a = 1/k^2: sn^{2p} cn^{2q} dn^{2r}.

        Odd integer powers keep the sign of sn and cn.
        """
        out = Jet.constant(1.0)
        if self.x_exp != 0:
            out = out * sn.signed_power(2 * self.x_exp)
        if self.one_minus_x_exp != 0:
            out = out * cn.signed_power(2 * self.one_minus_x_exp)
        if self.one_minus_x_over_a_exp != 0:
            out = out * dn ** float(2 * self.one_minus_x_over_a_exp)
        return out

    def __str__(self) -> str:
        parts = []
        if self.x_exp != 0:
            parts.append(f"x^({self.x_exp})")
        if self.one_minus_x_exp != 0:
            parts.append(f"(1-x)^({self.one_minus_x_exp})")
        if self.one_minus_x_over_a_exp != 0:
            parts.append(f"(1-x/a)^({self.one_minus_x_over_a_exp})")
        return "*".join(parts) or "1"


@dataclass(frozen=True)
class Step:
    prefactor: Prefactor
    arg_map: ArgMap


@dataclass(frozen=True)
class TransformedSolution:
    """
    H_source(x) = f(x) * H_params(y(x)), possibly as a chain of steps.

    Attributes:
        source: parameters of the equation being solved
        params: parameters of the equation whose solution is plugged in
        steps: (prefactor, argument map) pairs applied left to right
        label: human-readable name, e.g. "T2" or "M17*T3"
    """

    source: HeunParams
    params: HeunParams
    steps: Tuple[Step, ...] = field(default_factory=tuple)
    label: str = ""

    @property
    def prefactor(self) -> Optional[Prefactor]:
        if not self.steps:
            return Prefactor(self.source.a)
        if len(self.steps) == 1:
            return self.steps[0].prefactor
        return None

    @property
    def arg_map(self) -> Optional[ArgMap]:
        matrix = ArgMap.IDENTITY.matrix(self.source.a)
        for step in self.steps:
            matrix = _mat_mul(step.arg_map.matrix(step.prefactor.a), matrix)
        return _identify(matrix, self.source.a)

    def argument(self, x: Union[Jet, float]) -> Union[Jet, float]:
        for step in self.steps:
            x = step.arg_map.apply(x, step.prefactor.a)
        return x

    def evaluate(self, inner: Callable[[Jet], Jet], x: Union[Jet, float]) -> Jet:
        """
        Composite solution at x.

        Args:
            inner: jet-valued solution of the equation with self.params
            x: point (or jet) on the source equation's variable
        """
        y = x if isinstance(x, Jet) else Jet.variable(x)
        out = Jet.constant(1.0)
        for step in self.steps:
            out = out * step.prefactor.jet(y)
            y = step.arg_map.apply(y, step.prefactor.a)
        return out * inner(y)


def _simplify(steps: Sequence[Step]) -> Tuple[Step, ...]:
    out = []
    for step in steps:
        if out:
            last = out[-1]
            if last.arg_map is ArgMap.IDENTITY and _close(last.prefactor.a, step.prefactor.a):
                out[-1] = Step(last.prefactor.times(step.prefactor), step.arg_map)
                step = None
            elif step.prefactor.trivial:
                matrix = _mat_mul(
                    step.arg_map.matrix(step.prefactor.a),
                    last.arg_map.matrix(last.prefactor.a),
                )
                found = _identify(matrix, last.prefactor.a)
                if found is not None:
                    out[-1] = Step(last.prefactor, found)
                    step = None
        if step is not None:
            out.append(step)
        if out and out[-1].arg_map is ArgMap.IDENTITY and out[-1].prefactor.trivial:
            out.pop()
    return tuple(out)


def compose(first: TransformedSolution, second: TransformedSolution) -> TransformedSolution:
    """
    Apply `second` to the equation produced by `first`.

    Prefactor exponents add when the first map keeps the variable; argument
    maps compose as Moebius matrices and are recognised when they land back
    in the list of known maps.
    """
    if first.params != second.source:
        raise DomainError(
            f"cannot compose {second.label or 'transformation'} after "
            f"{first.label or 'transformation'}: parameter mismatch"
        )
    label = "*".join(s for s in (second.label, first.label) if s)
    return TransformedSolution(
        first.source, second.params, _simplify(first.steps + second.steps), label
    )


# ============================================================================
# HOMOTOPIC AND FRACTIONAL TRANSFORMATIONS
# ============================================================================


def homotopy(p: HeunParams, i: int) -> TransformedSolution:
    """
    The homotopic transformation T_i (i = 1..8).

    Args:
        p: Heun parameters
        i: transformation index

    Returns:
        Descriptor with prefactor f_i(x), the new parameters and arg map x

    Raises:
        DomainError: i outside 1..8
    """
    a, q, al, be, ga, de = p.as_tuple()
    ep = p.epsilon
    table = {
        1: ((0, 0, 0), q, (al, be, ga, de)),
        2: ((1 - ga, 0, 0), q - (ga - 1) * (de * a + ep), (be - ga + 1, al - ga + 1, 2 - ga, de)),
        3: ((0, 1 - de, 0), q - (de - 1) * ga * a, (be - de + 1, al - de + 1, ga, 2 - de)),
        4: (
            (1 - ga, 1 - de, 0),
            q - (ga + de - 2) * a - (ga - 1) * ep,
            (al - ga - de + 2, be - ga - de + 2, 2 - ga, 2 - de),
        ),
        5: ((0, 0, 1 - ep), q - ga * (al + be - ga - de), (-al + ga + de, -be + ga + de, ga, de)),
        6: (
            (1 - ga, 0, 1 - ep),
            q - de * (ga - 1) * a - al - be + de + 1,
            (-be + de + 1, -al + de + 1, 2 - ga, de),
        ),
        7: (
            (0, 1 - de, 1 - ep),
            q - ga * ((de - 1) * a + al + be - ga - de),
            (-be + ga + 1, -al + ga + 1, ga, 2 - de),
        ),
        8: (
            (1 - ga, 1 - de, 1 - ep),
            q - (ga + de - 2) * a - al - be + de + 1,
            (2 - al, 2 - be, 2 - ga, 2 - de),
        ),
    }
    if i not in table:
        raise DomainError(f"homotopic transformation index must be 1..8 (got {i})")
    exps, q_new, (al_n, be_n, ga_n, de_n) = table[i]
    new = HeunParams(a, q_new, al_n, be_n, ga_n, de_n)
    steps = () if i == 1 else (Step(Prefactor(a, *exps), ArgMap.IDENTITY),)
    return TransformedSolution(p, new, steps, f"T{i}")


def moebius(p: HeunParams, which: str) -> TransformedSolution:
    """
    Fractional substitutions

        M17: (1-x/a)^(-alpha) H[1-a, -q+alpha*gamma; alpha, -beta+gamma+delta, gamma, delta; (1-a)x/(x-a)]
        M49: H[1-a, -q+alpha*beta; alpha, beta, delta, gamma; 1-x]
        M65: (1-x/a)^(-alpha) H[a, q-alpha(beta-delta); alpha, -beta+gamma+delta, delta, gamma; a(x-1)/(x-a)]
    """
    a, q, al, be, ga, de = p.as_tuple()
    which = which.upper()
    if which == "M17":
        new = HeunParams(1 - a, -q + al * ga, al, -be + ga + de, ga, de)
        step = Step(Prefactor(a, 0, 0, -al), ArgMap.M17)
    elif which == "M49":
        new = HeunParams(1 - a, -q + al * be, al, be, de, ga)
        step = Step(Prefactor(a), ArgMap.ONE_MINUS_X)
    elif which == "M65":
        new = HeunParams(a, q - al * (be - de), al, -be + ga + de, de, ga)
        step = Step(Prefactor(a, 0, 0, -al), ArgMap.M65)
    else:
        raise DomainError(f"Unknown fractional substitution {which!r}; expected M17, M49 or M65")
    return TransformedSolution(p, new, (step,), which)


# ============================================================================
# RESIDUALS
# ============================================================================


def _as_jet(value: JetLike) -> Jet:
    if isinstance(value, Jet):
        return value
    h, h1, h2 = value
    return Jet(h, h1, h2)


def heun_operator_residual(
    h: JetLike, a: Real, q: Real, alpha: Real, beta: Real, gamma: Real, delta: Real, x: float
) -> float:
    """
    Raw residual of the Heun operator, with no validation of a.

    Returns |H'' + P H' + Q H| / max(1, |H''|).
    """
    h = _as_jet(h)
    a, q, alpha, beta, gamma, delta = (float(v) for v in (a, q, alpha, beta, gamma, delta))
    eps = alpha + beta + 1.0 - gamma - delta
    p_coef = gamma / x + delta / (x - 1.0) + eps / (x - a)
    q_coef = (alpha * beta * x - q) / (x * (x - 1.0) * (x - a))
    return abs(h.d2 + p_coef * h.d1 + q_coef * h.value) / max(1.0, abs(h.d2))


def heun_ode_residual(evaluator: Callable[[float], JetLike], p: HeunParams, x: float) -> float:
    """
    Normalized residual of a candidate Heun solution at x.

    Args:
        evaluator: x -> (H, H', H'') or a Jet
        p: Heun parameters
        x: evaluation point, not 0, 1 or a

    Raises:
        DomainError: x is a singular point
    """
    if _close(x, 0) or _close(x, 1) or _close(x, p.a):
        raise DomainError(f"x = {x:g} is a singular point of the Heun equation")
    return heun_operator_residual(evaluator(x), *p.as_tuple(), x)


# ============================================================================
# CONFLUENT LIMIT
# ============================================================================


@dataclass(frozen=True)
class CHEParams:
    """
    Confluent Heun equation
        x(x-1) S'' + [-gamma + (gamma+delta) x + rho x(x-1)] S' + (alpha rho x - sigma) S = 0
    """

    gamma: Real
    delta: Real
    alpha: Real
    rho: Real
    sigma: Real


def confluent_limit(p: HeunParams, rho: Real, sigma: Real) -> CHEParams:
    """
    Confluent limit a -> inf with beta/a -> -rho, eps/a -> -rho, q/a -> -sigma.

    gamma, delta and alpha pass through from p.

    Raises:
        DomainError: rho = 0
    """
    if rho == 0:
        raise DomainError("the confluent limit requires rho != 0")
    return CHEParams(p.gamma, p.delta, p.alpha, rho, sigma)


def che_ode_residual(evaluator: Callable[[float], JetLike], c: CHEParams, x: float) -> float:
    """Normalized residual of a candidate confluent-Heun solution at x (x not 0 or 1)."""
    if _close(x, 0) or _close(x, 1):
        raise DomainError(f"x = {x:g} is a singular point of the confluent Heun equation")
    s = _as_jet(evaluator(x))
    gamma, delta, alpha, rho, sigma = (float(v) for v in (c.gamma, c.delta, c.alpha, c.rho, c.sigma))
    w = x * (x - 1.0)
    p_coef = (-gamma + (gamma + delta) * x) / w + rho
    q_coef = (alpha * rho * x - sigma) / w
    return abs(s.d2 + p_coef * s.d1 + q_coef * s.value) / max(1.0, abs(s.d2))


# ============================================================================
# REDUCTIONS TO THE HYPERGEOMETRIC EQUATION
# ============================================================================


class ZMap(Enum):
    X = "x"
    X_SQUARED = "x^2"
    X_TWO_MINUS_X = "x(2-x)"
    RATIO_SQUARED = "(x/(2-x))^2"

    def apply(self, x: Union[Jet, float]) -> Union[Jet, float]:
        if self is ZMap.X:
            return x
        if self is ZMap.X_SQUARED:
            return x * x
        if self is ZMap.X_TWO_MINUS_X:
            return x * (2.0 - x)
        ratio = x / (2.0 - x)
        return ratio * ratio


@dataclass(frozen=True)
class HypergeometricReduction:
    """
    H(x) = prefactor(x) * F(a, b; c; z(x)) for a Heun equation whose
    parameters satisfy one of the reducible constraint sets.
    """

    case_id: int
    z_map: ZMap
    prefactor: Prefactor
    hyp_params: Tuple[Real, Real, Real]

    def evaluate(self, x: Union[Jet, float]) -> Jet:
        x = x if isinstance(x, Jet) else Jet.variable(x)
        ha, hb, hc = (float(v) for v in self.hyp_params)
        z = lift(self.z_map.apply(x))
        return self.prefactor.jet(x) * hyp2f1_jet(ha, hb, hc, z)


def reduce_to_hypergeometric(p: HeunParams) -> Optional[HypergeometricReduction]:
    """
    Detect the reducible constraint sets with a = -1 or a = 2.

    Cases (numbered with the two degenerate cases a = 0 -> 1 and a = 1 -> 4,
    see degenerate_reduction):
        2: a=-1, eps=delta, q=0                     z=x^2
        3: a=-1, alpha+beta=1+gamma, q=gamma(1-delta) (1-x)^(1-delta), z=x^2
        5: a=2, alpha+beta+1=2gamma+delta, q=alpha*beta    z=x(2-x)
        6: a=2, alpha+beta=1+delta, q=alpha*beta+(gamma-1)delta  x^(1-gamma), z=x(2-x)
        7: a=2, beta=alpha+1-delta, q=alpha*gamma   (1-x/2)^(-alpha), z=(x/(2-x))^2
        8: a=2, alpha=beta+1-delta, q=beta*gamma    (1-x/2)^(-beta),  z=(x/(2-x))^2

    Returns:
        The first matching reduction, or None
    """
    a, q, al, be, ga, de = p.as_tuple()
    ep = p.epsilon
    half = Fraction(1, 2)
    if _close(a, -1):
        if _close(ep, de) and _close(q, 0):
            return HypergeometricReduction(
                2, ZMap.X_SQUARED, Prefactor(a), (al * half, be * half, (1 + ga) * half)
            )
        if _close(al + be, 1 + ga) and _close(q, ga * (1 - de)):
            return HypergeometricReduction(
                3,
                ZMap.X_SQUARED,
                Prefactor(a, 0, 1 - de, 0),
                ((al - de + 1) * half, (be - de + 1) * half, (al + be) * half),
            )
    if _close(a, 2):
        if _close(al + be + 1, 2 * ga + de) and _close(q, al * be):
            return HypergeometricReduction(
                5, ZMap.X_TWO_MINUS_X, Prefactor(a), (al * half, be * half, ga)
            )
        if _close(al + be, 1 + de) and _close(q, al * be + (ga - 1) * de):
            return HypergeometricReduction(
                6,
                ZMap.X_TWO_MINUS_X,
                Prefactor(a, 1 - ga, 0, 0),
                ((al - ga + 1) * half, (be - ga + 1) * half, 2 - ga),
            )
        if _close(be, al + 1 - de) and _close(q, al * ga):
            return HypergeometricReduction(
                7,
                ZMap.RATIO_SQUARED,
                Prefactor(a, 0, 0, -al),
                (al * half, (ga + 2 * de - al - 1) * half, (1 + ga) * half),
            )
        if _close(al, be + 1 - de) and _close(q, be * ga):
            return HypergeometricReduction(
                8,
                ZMap.RATIO_SQUARED,
                Prefactor(a, 0, 0, -be),
                (be * half, (ga + 2 * de - be - 1) * half, (1 + ga) * half),
            )
    return None


@dataclass(frozen=True)
class DegenerateReduction:
    """
    The a = 0 and a = 1 limits, where the Heun equation has only three
    singular points:

        a = 0:  H = x^k1 F(k1+alpha, k1+beta; 2k1+gamma+eps; x)
        a = 1:  H = (1-x)^k2 F(k2+alpha, k2+beta; gamma; x)
    """

    case_id: int
    exponent: float
    hyp_params: Tuple[float, float, float]

    def evaluate(self, x: Union[Jet, float]) -> Jet:
        x = x if isinstance(x, Jet) else Jet.variable(x)
        base = x if self.case_id == 1 else 1.0 - x
        ha, hb, hc = self.hyp_params
        return base ** self.exponent * hyp2f1_jet(ha, hb, hc, x)


def degenerate_reduction(
    a: Real, q: Real, alpha: Real, beta: Real, gamma: Real, delta: Real
) -> DegenerateReduction:
    """
    Reduction of the Heun operator with a = 0 or a = 1 to the hypergeometric equation.

    Raises:
        DomainError: a is neither 0 nor 1, or the exponent is complex
    """
    a, q, alpha, beta, gamma, delta = (float(v) for v in (a, q, alpha, beta, gamma, delta))
    eps = alpha + beta + 1.0 - gamma - delta
    if _close(a, 0):
        disc = (1.0 - gamma - eps) ** 2 - 4.0 * q
        if disc < 0:
            raise DomainError("complex exponent k1: (1-gamma-eps)^2 < 4q")
        k1 = 0.5 * (1.0 - gamma - eps - disc**0.5)
        return DegenerateReduction(1, k1, (k1 + alpha, k1 + beta, 2.0 * k1 + gamma + eps))
    if _close(a, 1):
        disc = (gamma - alpha - beta) ** 2 - 4.0 * alpha * beta + 4.0 * q
        if disc < 0:
            raise DomainError("complex exponent k2: (gamma-alpha-beta)^2 - 4 alpha beta + 4q < 0")
        k2 = 0.5 * (gamma - alpha - beta - disc**0.5)
        return DegenerateReduction(4, k2, (k2 + alpha, k2 + beta, gamma))
    raise DomainError(f"degenerate reduction needs a = 0 or a = 1 (got a = {a:g})")


# ============================================================================
# TWO-TERM DEGENERATIONS
# ============================================================================


class SeriesGroup(Enum):
    POWER_ORIGIN = "PowerAt0"
    POWER_ONE = "PowerAt1"
    HYP_M17 = "HypM17"
    HYP_ONE = "HypAt1"
    HYP_INITIAL = "HypInitial"
    ERDELYI = "Erdelyi"
    SVARTHOLM = "Svartholm"
    CHE_POWER = "CHE_Power"
    CHE_HYP = "CHE_Hyp"


def two_term_indices(p: HeunParams, group: SeriesGroup) -> FrozenSet[int]:
    """
    Indices i for which the i-th expansion of a group has beta_n = 0 for all
    n, so that its recurrence collapses to two terms.
    """
    a, q, al, be, ga, de = p.as_tuple()
    ep = p.epsilon
    found = set()
    if group is SeriesGroup.POWER_ORIGIN:
        if _close(a, -1):
            if _close(ep, de) and _close(q, 0):
                found |= {1, 2, 7, 8}
            if _close(al + be, 1 + ga) and _close(q, ga * (1 - de)):
                found |= {3, 4, 5, 6}
    elif group in (SeriesGroup.POWER_ONE, SeriesGroup.HYP_M17):
        if _close(a, 2):
            if _close(al + be + 1, 2 * ga + de) and _close(q, al * be):
                found |= {1, 3, 6, 8}
            if _close(al + be, 1 + de) and _close(q, al * be + (ga - 1) * de):
                found |= {2, 4, 5, 7}
    elif group is SeriesGroup.HYP_ONE:
        if _close(a, 2):
            if _close(be, al + 1 - de) and _close(q, al * ga):
                found |= {1, 3, 6, 8}
            if _close(al, be + 1 - de) and _close(q, be * ga):
                found |= {2, 4, 5, 7}
    return frozenset(found)
