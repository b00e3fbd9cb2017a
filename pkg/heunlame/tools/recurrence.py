"""
Three-term recurrence engine

    alpha_n b_{n+1} + beta_n b_n + gamma_n b_{n-1} = 0,   n >= 0

with an optional spectral split beta_n(L) = B_n - L w_n. Provides forward and
backward (minimal-solution) solving, truncation detection, the characteristic
determinant and continued fraction, the real-spectrum test for tridiagonal
problems and the perturbed first rows used by the Erdelyi-type expansions.
"""

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.optimize import brentq

from ..utils.config import get_settings
from ..utils.console import status
from ..utils.errors import DomainError, PivotError, SolverError

Real = Union[float, Fraction]
CoeffFn = Callable[[int], Real]

_ZERO_GUARD = 1e-30
_LOG_RESCALE = 1e100


class RecurrenceForm(Enum):
    """Where an extra alpha_{-1} enters: nowhere, the n=1 row, or the n=0 row."""

    R1 = "r1"
    R2 = "r2"
    R3 = "r3"


@dataclass(frozen=True)
class GammaFactors:
    """gamma_n = scale * prod_j (n + roots_j); kept so truncation is exact."""

    scale: Real
    roots: Tuple[Real, ...]

    def __call__(self, n: int) -> Real:
        out = self.scale
        for c in self.roots:
            out = out * (n + c)
        return out


@dataclass(frozen=True)
class ThreeTermCoeffs:
    """
    Coefficient generator for a three-term recurrence.

    Attributes:
        alpha: n -> alpha_n
        beta: n -> B_n (beta_n at spectral parameter 0)
        gamma: n -> gamma_n
        weight: n -> w_n, so that beta_n(L) = B_n - L w_n; None when there is
            no spectral parameter
        alpha_minus1: extra coefficient of the perturbed forms
        form: which row alpha_minus1 modifies
        gamma_factors: factorized gamma_n when known
        label: name used in messages
    """

    alpha: CoeffFn
    beta: CoeffFn
    gamma: CoeffFn
    weight: Optional[CoeffFn] = None
    alpha_minus1: Real = 0
    form: RecurrenceForm = RecurrenceForm.R1
    gamma_factors: Optional[GammaFactors] = None
    label: str = ""

    @classmethod
    def from_factors(
        cls,
        alpha: CoeffFn,
        beta: CoeffFn,
        factors: GammaFactors,
        weight: Optional[CoeffFn] = None,
        label: str = "",
    ) -> "ThreeTermCoeffs":
        return cls(alpha, beta, factors, weight, gamma_factors=factors, label=label)

    @property
    def spectral(self) -> bool:
        return self.weight is not None

    def beta_at(self, n: int, lam: float = 0.0) -> float:
        value = self.beta(n)
        if lam and self.weight is not None:
            value = value - lam * self.weight(n)
        return value

    def beta_eff(self, n: int, lam: float = 0.0) -> float:
        """beta_n(L), with alpha_{-1} added to the n=0 row for form r3."""
        value = self.beta_at(n, lam)
        if n == 0 and self.form is RecurrenceForm.R3:
            value = value + self.alpha_minus1
        return float(value)

    def gamma_eff(self, n: int) -> float:
        """gamma_n, with alpha_{-1} added to the n=1 row for form r2."""
        value = self.gamma(n)
        if n == 1 and self.form is RecurrenceForm.R2:
            value = value + self.alpha_minus1
        return float(value)

    def at(self, lam: float) -> "ThreeTermCoeffs":
        """Freeze the spectral parameter."""
        if self.weight is None:
            return self
        beta, weight = self.beta, self.weight
        return replace(self, beta=lambda n: beta(n) - lam * weight(n), weight=None)


@dataclass
class CoefficientVector:
    b: np.ndarray
    normalized: bool = True

    def __len__(self) -> int:
        return len(self.b)


@dataclass
class SpectralResult:
    """
    Roots of a truncated characteristic problem.

    Attributes:
        eigenvalues: sorted distinct roots
        multiplicities: multiplicity of each root (1 unless clustered)
        arscott_ok: whether the real-and-distinct criterion held
        residuals: normalized determinant at each root
        vectors: coefficient vector (b_0 = 1) at each root
    """

    eigenvalues: np.ndarray
    multiplicities: List[int] = field(default_factory=list)
    arscott_ok: bool = False
    residuals: List[float] = field(default_factory=list)
    vectors: List[CoefficientVector] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.eigenvalues)


# ============================================================================
# FORWARD SOLVING AND TRUNCATION
# ============================================================================


def forward_solve(c: ThreeTermCoeffs, N: int, lam: float = 0.0) -> CoefficientVector:
    """
    b_0 = 1 and b_1..b_N from the recurrence, row by row.

    Raises:
        PivotError: alpha_n = 0 for some n < N
    """
    b = np.zeros(N + 1)
    b[0] = 1.0
    for n in range(N):
        alpha_n = float(c.alpha(n))
        if alpha_n == 0.0:
            raise PivotError(n)
        acc = c.beta_eff(n, lam) * b[n]
        if n > 0:
            acc += c.gamma_eff(n) * b[n - 1]
        b[n + 1] = -acc / alpha_n
    return CoefficientVector(b)


def row_residuals(c: ThreeTermCoeffs, b: Union[CoefficientVector, Sequence[float]], lam: float = 0.0) -> np.ndarray:
    """
    Relative residual of every row n = 0..len(b)-1, with b beyond the end taken as 0.
    """
    vec = np.asarray(b.b if isinstance(b, CoefficientVector) else b, dtype=float)
    out = np.zeros(len(vec))
    for n in range(len(vec)):
        terms = [c.beta_eff(n, lam) * vec[n]]
        if n + 1 < len(vec):
            terms.append(float(c.alpha(n)) * vec[n + 1])
        if n > 0:
            terms.append(c.gamma_eff(n) * vec[n - 1])
        scale = sum(abs(t) for t in terms)
        out[n] = abs(sum(terms)) / scale if scale > 0 else 0.0
    return out


def truncation_points(c: ThreeTermCoeffs, n_max: int) -> List[Tuple[int, int]]:
    """
    (N, j) for every factor j of a factorized gamma_n that vanishes at
    n = N+1 with N < n_max, sorted by N.
    """
    factors = c.gamma_factors
    if factors is None or factors.scale == 0:
        return []
    snap = get_settings().snap_tol
    found = []
    for j, root in enumerate(factors.roots):
        # gamma_{N+1} = 0 needs N + 1 + root = 0
        target = -root - 1
        nearest = round(target)
        exact = isinstance(target, Fraction) and target.denominator == 1
        if (exact or abs(float(target) - nearest) <= snap) and 0 <= nearest < n_max:
            found.append((int(nearest), j))
    return sorted(found)


def detect_truncation(c: ThreeTermCoeffs, n_max: int) -> Optional[int]:
    """
    Smallest N < n_max with gamma_{N+1} = 0, or None.

    Factorized gamma coefficients are checked exactly (Fraction roots) or to
    the snap tolerance; otherwise gamma_{N+1} is scanned against truncation_tol.
    """
    settings = get_settings()
    factors = c.gamma_factors
    if factors is not None:
        if factors.scale == 0:
            return 0 if n_max > 0 else None
        points = truncation_points(c, n_max)
        return points[0][0] if points else None
    for N in range(n_max):
        if abs(c.gamma_eff(N + 1)) < settings.truncation_tol:
            return N
    return None


# ============================================================================
# CHARACTERISTIC DETERMINANT AND MATRIX
# ============================================================================


def characteristic_matrix(c: ThreeTermCoeffs, N: int, lam: float = 0.0) -> np.ndarray:
    """Dense (N+1)x(N+1) tridiagonal matrix: row n holds (gamma_n, beta_n, alpha_n)."""
    m = np.zeros((N + 1, N + 1))
    for n in range(N + 1):
        m[n, n] = c.beta_eff(n, lam)
        if n < N:
            m[n, n + 1] = float(c.alpha(n))
        if n > 0:
            m[n, n - 1] = c.gamma_eff(n)
    return m


def characteristic_logdet(c: ThreeTermCoeffs, N: int, lam: float) -> Tuple[float, float]:
    """
    Sign and log-magnitude of the characteristic determinant, via
    D_k = beta_k D_{k-1} - alpha_{k-1} gamma_k D_{k-2} with running rescaling.
    """
    prev, cur = 1.0, c.beta_eff(0, lam)
    log_scale = 0.0
    for k in range(1, N + 1):
        prev, cur = cur, c.beta_eff(k, lam) * cur - float(c.alpha(k - 1)) * c.gamma_eff(k) * prev
        big = max(abs(prev), abs(cur))
        if big > _LOG_RESCALE:
            prev /= big
            cur /= big
            log_scale += math.log(big)
    if cur == 0.0:
        return 0.0, -math.inf
    return math.copysign(1.0, cur), log_scale + math.log(abs(cur))


def characteristic_det(c: ThreeTermCoeffs, N: int, lam: float) -> float:
    """
    Determinant of the truncated tridiagonal matrix at spectral parameter lam.

    N=1 gives beta_0 beta_1 - alpha_0 gamma_1.
    """
    sign, logabs = characteristic_logdet(c, N, lam)
    if sign == 0.0:
        return 0.0
    if logabs > 709.0:
        return sign * math.inf
    return sign * math.exp(logabs)


def _normalized_det(c: ThreeTermCoeffs, N: int, lam: float) -> float:
    sign, logabs = characteristic_logdet(c, N, lam)
    if sign == 0.0:
        return 0.0
    log_bound = 0.0
    for n in range(N + 1):
        row = abs(c.beta_eff(n, lam))
        if n < N:
            row += abs(float(c.alpha(n)))
        if n > 0:
            row += abs(c.gamma_eff(n))
        log_bound += math.log(max(row, 1e-300))
    return math.exp(logabs - log_bound)


# ============================================================================
# SPECTRUM
# ============================================================================


def _require_spectral(c: ThreeTermCoeffs) -> None:
    if c.weight is None:
        raise DomainError(f"recurrence {c.label or ''} has no spectral parameter")


def arscott_check(c: ThreeTermCoeffs, N: int) -> bool:
    """
    True iff alpha_{i-1} gamma_i / (w_{i-1} w_i) > 0 for i = 1..N.

    With a positive weight this is the classical alpha_{i-1} gamma_i > 0
    criterion; the roots of the truncated problem are then real and distinct.
    """
    _require_spectral(c)
    for i in range(1, N + 1):
        w0, w1 = float(c.weight(i - 1)), float(c.weight(i))
        if w0 == 0.0 or w1 == 0.0:
            return False
        if float(c.alpha(i - 1)) * c.gamma_eff(i) / (w0 * w1) <= 0.0:
            return False
    return True


def _scaled_bands(c: ThreeTermCoeffs, N: int):
    """Diagonal and off-diagonals of W^{-1} M(0), whose eigenvalues are the roots."""
    w = np.array([float(c.weight(n)) for n in range(N + 1)])
    if np.any(w == 0.0):
        raise DomainError("spectral weight vanishes; the problem is not a proper eigenproblem")
    diag = np.array([c.beta_eff(n, 0.0) for n in range(N + 1)]) / w
    upper = np.array([float(c.alpha(n)) for n in range(N)]) / w[:N]
    lower = np.array([c.gamma_eff(n) for n in range(1, N + 1)]) / w[1:]
    return diag, upper, lower


def _cluster(values: Sequence[float], tol: float) -> Tuple[List[float], List[int]]:
    roots: List[float] = []
    mult: List[int] = []
    for v in sorted(values):
        if roots and abs(v - roots[-1]) <= tol * (1.0 + abs(v)):
            k = mult[-1]
            roots[-1] = (roots[-1] * k + v) / (k + 1)
            mult[-1] = k + 1
        else:
            roots.append(v)
            mult.append(1)
    return roots, mult


def _bisect(f: Callable[[float], float], lo: float, hi: float, f_lo: float, tol: float) -> float:
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if hi - lo <= tol * max(1.0, abs(mid)):
            break
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _scan_roots(c: ThreeTermCoeffs, N: int) -> Tuple[List[float], List[int]]:
    settings = get_settings()
    diag, upper, lower = _scaled_bands(c, N)
    radii = np.zeros(N + 1)
    radii[:N] += np.abs(upper)
    radii[1:] += np.abs(lower)
    lo, hi = float(np.min(diag - radii)), float(np.max(diag + radii))
    width = max(hi - lo, 1e-8 * (1.0 + abs(hi)))
    lo, hi = lo - 1e-6 * width, hi + 1e-6 * width
    steps = 50 * (N + 1)

    def sign_det(lam: float) -> float:
        return characteristic_logdet(c, N, lam)[0]

    found: List[float] = []
    grid = np.linspace(lo, hi, steps + 1)
    prev_x, prev_s = grid[0], sign_det(grid[0])
    for x in grid[1:]:
        s = sign_det(x)
        if s == 0.0:
            found.append(float(x))
        elif prev_s != 0.0 and s != prev_s:
            found.append(_bisect(sign_det, prev_x, x, prev_s, settings.bisection_tol))
        prev_x, prev_s = x, s

    # real eigenvalues of the (non-symmetric) matrix give the expected count,
    # including even-multiplicity roots the sign scan cannot see
    dense = np.diag(diag) + np.diag(upper, 1) + np.diag(lower, -1)
    eig = np.linalg.eigvals(dense)
    scale = 1.0 + float(np.max(np.abs(eig))) if len(eig) else 1.0
    real_eig = sorted(float(e.real) for e in eig if abs(e.imag) <= 1e-7 * scale)
    expected, expected_mult = _cluster(real_eig, 1e-6)

    roots: List[float] = []
    mult: List[int] = []
    for value, k in zip(expected, expected_mult):
        near = [r for r in found if abs(r - value) <= 1e-5 * (1.0 + abs(value))]
        if near:
            roots.append(near[0])
        elif k % 2 == 0:
            roots.append(value)
        else:
            raise SolverError(
                f"bisection found no sign change near the real root {value:.12g} "
                f"of {c.label or 'the recurrence'} (N={N})"
            )
        mult.append(k)
    return _cluster_with_mult(roots, mult, settings.cluster_tol)


def _cluster_with_mult(roots: List[float], mult: List[int], tol: float) -> Tuple[List[float], List[int]]:
    out_r: List[float] = []
    out_m: List[int] = []
    for r, k in sorted(zip(roots, mult)):
        if out_r and abs(r - out_r[-1]) <= tol * (1.0 + abs(r)):
            out_m[-1] += k
        else:
            out_r.append(r)
            out_m.append(k)
    return out_r, out_m


def _null_vector(c: ThreeTermCoeffs, N: int, lam: float) -> CoefficientVector:
    try:
        return forward_solve(c, N, lam)
    except PivotError:
        _, _, vh = np.linalg.svd(characteristic_matrix(c, N, lam))
        v = vh[-1]
        if abs(v[0]) > 1e-12:
            return CoefficientVector(v / v[0])
        return CoefficientVector(v / v[np.argmax(np.abs(v))], normalized=False)


def characteristic_roots(c: ThreeTermCoeffs, N: int) -> SpectralResult:
    """
    All real roots of the truncated characteristic equation.

    When the Arscott test passes, the matrix is symmetrized by a diagonal
    similarity and handed to a symmetric tridiagonal eigensolver; otherwise
    the determinant sign is scanned over a Gershgorin window and refined by
    bisection, with clustered roots reported once with their multiplicity.

    Raises:
        SolverError: a real root could not be bracketed
    """
    _require_spectral(c)
    settings = get_settings()
    ok = arscott_check(c, N)
    if ok:
        diag, upper, lower = _scaled_bands(c, N)
        if N == 0:
            values = [float(diag[0])]
        else:
            off = np.sqrt(upper * lower)
            values = list(eigh_tridiagonal(diag, off, eigvals_only=True))
        roots, mult = _cluster(values, settings.cluster_tol)
        status(f"{c.label or 'recurrence'}: {len(roots)} roots (Arscott, N={N})", "✅")
    else:
        roots, mult = _scan_roots(c, N)
        status(f"{c.label or 'recurrence'}: {len(roots)} roots (scan, N={N})", "🔍")

    return SpectralResult(
        eigenvalues=np.array(roots, dtype=float),
        multiplicities=mult,
        arscott_ok=ok,
        residuals=[_normalized_det(c, N, r) for r in roots],
        vectors=[_null_vector(c, N, r) for r in roots],
    )


# ============================================================================
# CONTINUED FRACTIONS AND MINIMAL SOLUTIONS
# ============================================================================


def continued_fraction(c: ThreeTermCoeffs, lam: float, depth: int, tail: float = 0.0) -> Tuple[float, bool]:
    """
    beta_0 - alpha_0 gamma_1 / (beta_1 - alpha_1 gamma_2 / (... beta_depth + alpha_depth * tail)),
    evaluated bottom-up.

    Args:
        tail: estimate of b_{depth+1}/b_depth (0 truncates the fraction)

    Returns:
        (value, perturbed) where perturbed flags a zero denominator replaced by 1e-30
    """
    perturbed = False
    t = c.beta_eff(depth, lam) + float(c.alpha(depth)) * tail
    for k in range(depth - 1, -1, -1):
        if t == 0.0:
            t = _ZERO_GUARD
            perturbed = True
        t = c.beta_eff(k, lam) - float(c.alpha(k)) * c.gamma_eff(k + 1) / t
    return t, perturbed


def continued_fraction_residual(c: ThreeTermCoeffs, lam: float, depth: int) -> float:
    """|continued fraction| at lam; vanishes at the roots of the infinite problem."""
    value, perturbed = continued_fraction(c, lam, depth)
    if perturbed:
        status(f"zero denominator in continued fraction at {lam:.12g}; perturbed by 1e-30", "⚠️ ")
    return abs(value)


def continued_fraction_roots(
    c: ThreeTermCoeffs, lo: float, hi: float, depth: int, tail: float = 0.0, points: Optional[int] = None
) -> List[float]:
    """
    Roots of the continued fraction in [lo, hi], from sign changes on a
    uniform grid refined by Brent's method.

    The fraction has poles as well as zeros; a sign change whose refined
    point is larger in modulus than the bracket ends is a pole and dropped.

    Args:
        points: grid size, default 50 per unit of lam (1000 to 20000)

    Raises:
        DomainError: empty interval
    """
    if not hi > lo:
        raise DomainError(f"empty interval [{lo:g}, {hi:g}]")
    settings = get_settings()
    if points is None:
        points = int(min(20000, max(1000, 50 * (hi - lo))))

    def f(lam: float) -> float:
        return continued_fraction(c, lam, depth, tail)[0]

    grid = np.linspace(lo, hi, points + 1)
    values = [f(x) for x in grid]
    roots: List[float] = []
    for x0, x1, f0, f1 in zip(grid[:-1], grid[1:], values[:-1], values[1:]):
        if f0 == 0.0:
            root = float(x0)
        elif (f0 > 0) == (f1 > 0):
            continue
        else:
            root = float(brentq(f, x0, x1, xtol=settings.bisection_tol * max(1.0, abs(x0)), maxiter=200))
            if abs(f(root)) > abs(f0) + abs(f1):
                continue
        if roots and abs(root - roots[-1]) <= settings.cluster_tol * (1.0 + abs(root)):
            continue
        roots.append(root)
    status(f"{c.label or 'recurrence'}: {len(roots)} continued-fraction roots in [{lo:.6g}, {hi:.6g}]", "✅")
    return roots


def _leading_limit(fn: Callable[[int], float], big: int) -> float:
    a1 = float(fn(big)) / big**2
    a2 = float(fn(2 * big)) / (2 * big) ** 2
    return 2.0 * a2 - a1


def minimal_ratio_limits(c: ThreeTermCoeffs, lam: float = 0.0) -> Tuple[float, float]:
    """
    Limits of b_{n+1}/b_n for the two independent solutions.

    With A, B, C the limits of alpha_n/n^2, beta_n/n^2, gamma_n/n^2 the
    ratios solve A t^2 + B t + C = 0; the first returned root has the smaller
    modulus and belongs to the minimal solution.

    Raises:
        DomainError: growth faster than n^2, A = 0, or |t1| = |t2|
    """
    big = 100_000
    fns = (
        lambda n: float(c.alpha(n)),
        lambda n: c.beta_eff(n, lam),
        lambda n: c.gamma_eff(n),
    )
    for fn in fns:
        lo, hi = abs(fn(big)), abs(fn(2 * big))
        if lo > 0 and math.log2(hi / lo) > 2.01:
            raise DomainError("minimal-ratio analysis needs coefficients growing at most like n^2")
    A, B, C = (_leading_limit(fn, big) for fn in fns)
    if abs(A) <= 1e-12 * max(1.0, abs(B), abs(C)):
        raise DomainError("degenerate recurrence: alpha_n grows slower than n^2")
    disc = B * B - 4.0 * A * C
    if disc < 0:
        raise DomainError("ratio limits are complex conjugates with equal modulus")
    root = math.sqrt(disc)
    # numerically stable pair
    q = -0.5 * (B + math.copysign(root, B)) if B != 0 else 0.5 * root
    t_a = q / A
    t_b = C / q if q != 0 else -t_a
    t1, t2 = sorted((t_a, t_b), key=abs)
    if abs(abs(t1) - abs(t2)) <= 1e-9 * max(1.0, abs(t2)):
        raise DomainError(f"ratio limits have equal modulus ({t1:g}, {t2:g}); no minimal solution")
    return t1, t2


def _backward_vector(c: ThreeTermCoeffs, n_needed: int, start: int, seed: float, lam: float) -> np.ndarray:
    r = seed
    ratios = np.zeros(max(n_needed, 1))
    for n in range(start, 0, -1):
        denom = c.beta_eff(n, lam) + float(c.alpha(n)) * r
        if denom == 0.0:
            denom = _ZERO_GUARD
        r = -c.gamma_eff(n) / denom
        if n - 1 < n_needed:
            ratios[n - 1] = r
    b = np.ones(n_needed + 1)
    for n in range(n_needed):
        b[n + 1] = b[n] * ratios[n]
    return b


def backward_minimal_solve(c: ThreeTermCoeffs, n_needed: int, lam: float = 0.0) -> CoefficientVector:
    """
    Minimal solution b_0..b_{n_needed} (b_0 = 1) by the backward ratio recurrence.

    r_{n-1} = -gamma_n / (beta_n + alpha_n r_n), seeded with the minimal
    asymptotic ratio at N_start = max(4 n_needed, 60); N_start is doubled
    until b_{n_needed} is stable to 1e-12.

    Raises:
        SolverError: still unstable after three doublings
    """
    if n_needed == 0:
        return CoefficientVector(np.ones(1))
    try:
        seed = minimal_ratio_limits(c, lam)[0]
    except DomainError:
        seed = 0.0
    start = max(4 * n_needed, 60)
    b = _backward_vector(c, n_needed, start, seed, lam)
    for _ in range(3):
        start *= 2
        b_new = _backward_vector(c, n_needed, start, seed, lam)
        scale = np.maximum(np.abs(b_new), 1e-300)
        if np.all(np.abs(b_new - b) <= 1e-12 * scale):
            return CoefficientVector(b_new)
        b = b_new
    raise SolverError(
        f"backward recurrence for {c.label or 'the recurrence'} did not stabilize "
        f"(n_needed={n_needed}, start={start})"
    )


# ============================================================================
# SIMILARITY AND RESCALING
# ============================================================================


def antidiagonal_similarity_check(cA: ThreeTermCoeffs, cB: ThreeTermCoeffs, N: int) -> bool:
    """
    True iff M_B(L) = U M_A(L) U with U the antidiagonal unit matrix, checked at
    L = 0 and L = 1 (entries are affine in L).
    """
    if N < 0:
        raise DomainError(f"matrix order must be non-negative (got N = {N})")
    U = np.fliplr(np.eye(N + 1))
    for lam in (0.0, 1.0):
        mA = characteristic_matrix(cA, N, lam)
        mB = characteristic_matrix(cB, N, lam)
        if mA.shape != mB.shape:
            raise DomainError("dimension mismatch in antidiagonal comparison")
        target = U @ mA @ U
        scale = max(1.0, float(np.max(np.abs(target))))
        if not np.allclose(mB, target, rtol=0.0, atol=1e-10 * scale):
            return False
    return True


def rescale(c: ThreeTermCoeffs, ratio: Real, shifts: Sequence[Real]) -> ThreeTermCoeffs:
    """
    Recurrence for b^_n where b_n = ratio^n Gamma(n+s_1)...Gamma(n+s_k) b^_n.

        alpha^_n = ratio (n+s_1)...(n+s_k) alpha_n
        beta^_n  = beta_n
        gamma^_n = gamma_n / (ratio (n-1+s_1)...(n-1+s_k))

    Factorized gamma coefficients cancel exactly when each n-1+s_j is one of
    their factors.

    Raises:
        DomainError: ratio = 0 or a perturbed-form recurrence
    """
    if ratio == 0:
        raise DomainError("rescaling ratio must be non-zero")
    if c.form is not RecurrenceForm.R1:
        raise DomainError("only plain three-term recurrences can be rescaled")
    shifts = tuple(shifts)
    alpha = c.alpha

    def alpha_hat(n: int) -> Real:
        out = alpha(n) * ratio
        for s in shifts:
            out = out * (n + s)
        return out

    factors = c.gamma_factors
    if factors is not None:
        remaining = list(factors.roots)
        matched = True
        for s in shifts:
            hit = next((j for j, r in enumerate(remaining) if abs(float(r) - float(s - 1)) <= 1e-12), None)
            if hit is None:
                matched = False
                break
            remaining.pop(hit)
        if matched:
            new = GammaFactors(factors.scale / ratio, tuple(remaining))
            return replace(c, alpha=alpha_hat, gamma=new, gamma_factors=new, label=f"rescaled {c.label}")

    gamma = c.gamma

    def gamma_hat(n: int) -> Real:
        den = ratio
        for s in shifts:
            den = den * (n - 1 + s)
        return gamma(n) / den

    return replace(c, alpha=alpha_hat, gamma=gamma_hat, gamma_factors=None, label=f"rescaled {c.label}")
