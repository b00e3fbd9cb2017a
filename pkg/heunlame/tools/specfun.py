"""
Special functions for heunlame

Gamma, the Gauss hypergeometric function 2F1 (plain and regularized), the
complete elliptic integral K and the Jacobi elliptic functions sn, cn, dn.
Everything here is real-valued and self-contained; the other modules build
their series bases and elliptic prefactors on top of these.
"""

import cmath
import math
from typing import NamedTuple, Optional, Tuple, Union

from ..utils.config import get_settings
from ..utils.errors import DivergenceError, DomainError, PoleError
from ..utils.jets import Jet

# Lanczos approximation, g = 7, nine coefficients
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)

_AGM_TOL = 1e-15
_SERIES_EPS = 1e-16


class EllipticTriple(NamedTuple):
    sn: float
    cn: float
    dn: float


# ============================================================================
# GAMMA
# ============================================================================


def _nonpositive_int(x: float, tol: float) -> Optional[int]:
    """Return N when x is within tol of -N (N = 0, 1, 2, ...), else None."""
    r = round(x)
    if r <= 0 and abs(x - r) <= tol:
        return -int(r)
    return None


def gamma(x: float) -> float:
    """
    Gamma function via Lanczos (g=7) with the reflection formula for x < 0.5.

    Args:
        x: real argument, not a non-positive integer

    Returns:
        Gamma(x)

    Raises:
        PoleError: at x = 0, -1, -2, ...
    """
    x = float(x)
    if x <= 0 and x.is_integer():
        raise PoleError(f"Gamma has a pole at x = {x:g}")
    if x.is_integer() and x <= 171:
        return float(math.factorial(int(x) - 1))
    if x > 171.0:
        return math.inf
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * gamma(1.0 - x))

    x -= 1.0
    s = _LANCZOS_COEFFS[0]
    for i in range(1, len(_LANCZOS_COEFFS)):
        s += _LANCZOS_COEFFS[i] / (x + i)
    t = x + _LANCZOS_G + 0.5
    return _SQRT_2PI * math.exp((x + 0.5) * math.log(t) - t) * s


def rgamma(x: float) -> float:
    """1/Gamma(x), zero at the poles."""
    x = float(x)
    if x <= 0 and x.is_integer():
        return 0.0
    if x > 170.0:
        return math.exp(-math.lgamma(x))
    return 1.0 / gamma(x)


def pochhammer(a: float, n: int) -> float:
    out = 1.0
    for k in range(n):
        out *= a + k
    return out


def gauss_sum(a: float, b: float, c: float) -> float:
    """
    F(a,b;c;1) = Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)), for c-a-b > 0.
    """
    if c - a - b <= 0:
        raise DivergenceError(
            f"F({a:g},{b:g};{c:g};1) diverges: c-a-b = {c - a - b:g} is not positive"
        )
    return gamma(c) * gamma(c - a - b) * rgamma(c - a) * rgamma(c - b)


# ============================================================================
# GAUSS HYPERGEOMETRIC FUNCTION
# ============================================================================


def _terminating_sum(a: float, b: float, c: float, z: float, n_terms: int) -> float:
    total = 1.0
    term = 1.0
    for k in range(n_terms):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        total += term
    return total


def _power_series(a: float, b: float, c: float, z: float, max_terms: int) -> float:
    total = 1.0
    term = 1.0
    small = 0
    for k in range(max_terms):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        total += term
        if abs(term) < _SERIES_EPS * abs(total):
            small += 1
            if small == 3:
                return total
        else:
            small = 0
    raise DivergenceError(
        f"2F1({a:g},{b:g};{c:g};{z:g}) did not converge in {max_terms} terms"
    )


def hyp2f1(a: float, b: float, c: float, z: float) -> float:
    """
    Gauss hypergeometric function F(a,b;c;z) for real arguments, |z| <= 1.

    Terminating cases (a or b a non-positive integer) are summed exactly.
    For -1 <= z < -1/2 the Pfaff transformation maps the argument into
    [1/3, 1/2]; for z >= 3/4 the connection formula around z = 1 is used
    when c-a-b is not close to an integer.

    Args:
        a, b, c: parameters
        z: argument, |z| <= 1

    Returns:
        F(a,b;c;z)

    Raises:
        DomainError: |z| > 1
        PoleError: c a non-positive integer without an earlier termination
        DivergenceError: z = 1 with c-a-b <= 0
    """
    a, b, c, z = float(a), float(b), float(c), float(z)
    settings = get_settings()
    if abs(z) > 1.0:
        raise DomainError(f"2F1 is only evaluated for |z| <= 1 (got z = {z:g})")

    tol = settings.snap_tol
    na = _nonpositive_int(a, tol)
    nb = _nonpositive_int(b, tol)
    nc = _nonpositive_int(c, tol)
    degree = min((n for n in (na, nb) if n is not None), default=None)

    if nc is not None and (degree is None or degree > nc):
        raise PoleError(f"2F1 has a pole at c = {c:g}")

    if degree is not None:
        if na is not None and na == degree:
            a = -float(na)
        else:
            b = -float(nb)
        return _terminating_sum(a, b, c, z, degree)

    if z == 0.0:
        return 1.0

    if z == 1.0:
        return gauss_sum(a, b, c)

    if z < -0.5:
        # Pfaff: F(a,b;c;z) = (1-z)^(-a) F(a,c-b;c;z/(z-1))
        return (1.0 - z) ** (-a) * hyp2f1(a, c - b, c, z / (z - 1.0))

    s = c - a - b
    if z >= 0.75 and abs(s - round(s)) > 0.05:
        return _connection_at_one(a, b, c, z)

    max_terms = settings.max_terms
    if z >= 0.75:
        max_terms *= 50
    return _power_series(a, b, c, z, max_terms)


def _connection_at_one(a: float, b: float, c: float, z: float) -> float:
    s = c - a - b
    w = 1.0 - z
    first = gamma(c) * gamma(s) * rgamma(c - a) * rgamma(c - b)
    second = gamma(c) * gamma(-s) * rgamma(a) * rgamma(b)
    out = 0.0
    if first != 0.0:
        out += first * hyp2f1(a, b, 1.0 - s, w)
    if second != 0.0:
        out += second * w**s * hyp2f1(c - a, c - b, 1.0 + s, w)
    return out


class Connection(NamedTuple):
    """
    Coefficients of the two z = 0 solutions on the z = 1 basis

        V1 = F(a, b; 1-e; 1-z),   V2 = (1-z)^e F(c-a, c-b; 1+e; 1-z),   e = c-a-b

    so that F~(a,b;c;z) = a1 V1 + a2 V2 and
    z^(1-c) F(a-c+1, b-c+1; 2-c; z) = b1 V1 + b2 V2.
    """

    a1: float
    a2: float
    b1: float
    b2: float


def hyp2f1_connection(a: float, b: float, c: float) -> Connection:
    """
    Connection coefficients between the exponent bases at z = 0 and z = 1.

    Raises:
        PoleError: e = c-a-b or 2-c a non-positive integer (log case)
    """
    e = c - a - b
    g_e, g_me, g_2c = gamma(e), gamma(-e), gamma(2.0 - c)
    return Connection(
        a1=g_e * rgamma(c - a) * rgamma(c - b),
        a2=g_me * rgamma(a) * rgamma(b),
        b1=g_2c * g_e * rgamma(1.0 - a) * rgamma(1.0 - b),
        b2=g_2c * g_me * rgamma(a - c + 1.0) * rgamma(b - c + 1.0),
    )


def hyp2f1_regularized(a: float, b: float, c: float, z: float) -> float:
    """
    F~(a,b;c;z) = F(a,b;c;z) / Gamma(c), finite for every real c.

    At c = -m (m = 0, 1, ...) the limit
    (a)_{m+1} (b)_{m+1} / (m+1)! z^{m+1} F(a+m+1, b+m+1; m+2; z) is returned.
    """
    m = _nonpositive_int(float(c), get_settings().snap_tol)
    if m is None:
        return hyp2f1(a, b, c, z) * rgamma(c)
    lead = pochhammer(a, m + 1) * pochhammer(b, m + 1) / math.factorial(m + 1)
    if lead == 0.0 or z == 0.0:
        return 0.0
    return lead * z ** (m + 1) * hyp2f1(a + m + 1, b + m + 1, m + 2, z)


def euler_transform(a: float, b: float, c: float, z: float) -> float:
    """(1-z)^(c-a-b) F(c-a, c-b; c; z), which equals F(a,b;c;z) for |z| < 1."""
    return (1.0 - z) ** (c - a - b) * hyp2f1(c - a, c - b, c, z)


def hyp2f1_contiguous_pair(a: float, b: float, c: float, z: float) -> Tuple[float, float]:
    """
    Derivative dF/dz recovered from each of the two contiguous relations

        (1-z) F' = (b - (c-1)/z) F(a,b;c;z) + (c-1)/z F(a-1,b;c-1;z)
        (z-1) F' = -a F(a,b;c;z) + a(c-b)/c F(a+1,b;c+1;z)

    Returns:
        (F' from the first relation, F' from the second relation)
    """
    if z == 0.0:
        lead = a * b / c
        return lead, lead
    f = hyp2f1(a, b, c, z)
    first = b * f
    if c != 1.0:
        first += (c - 1.0) / z * (hyp2f1(a - 1.0, b, c - 1.0, z) - f)
    second = -a * f
    if a != 0.0:
        second += a * (c - b) / c * hyp2f1(a + 1.0, b, c + 1.0, z)
    return first / (1.0 - z), second / (z - 1.0)


def regularized_derivative(a: float, b: float, c: float, z: float, order: int = 1) -> float:
    """d^order/dz^order F~(a,b;c;z) = (a)_order (b)_order F~(a+order, b+order; c+order; z)."""
    scale = pochhammer(a, order) * pochhammer(b, order)
    if scale == 0.0:
        return 0.0
    return scale * hyp2f1_regularized(a + order, b + order, c + order, z)


def hyp2f1_regularized_jet(a: float, b: float, c: float, z: Jet) -> Jet:
    """F~(a,b;c;z) with first and second derivatives carried along the jet z."""
    x = z.value
    return z.apply(
        hyp2f1_regularized(a, b, c, x),
        regularized_derivative(a, b, c, x, 1),
        regularized_derivative(a, b, c, x, 2),
    )


def hyp2f1_jet(a: float, b: float, c: float, z: Jet) -> Jet:
    """F(a,b;c;z) along the jet z, using F' = ab/c F(a+1,b+1;c+1;z)."""
    x = z.value
    d1 = a * b / c
    d2 = d1 * (a + 1) * (b + 1) / (c + 1)
    return z.apply(
        hyp2f1(a, b, c, x),
        d1 * hyp2f1(a + 1, b + 1, c + 1, x) if d1 != 0.0 else 0.0,
        d2 * hyp2f1(a + 2, b + 2, c + 2, x) if d2 != 0.0 else 0.0,
    )


# ============================================================================
# ELEMENTARY CLOSED FORMS
# ============================================================================

Scalar = Union[float, complex]


def closed_form_F(kind: str, a: float, z: Scalar) -> Scalar:
    """
    Elementary right-hand sides for three 2F1 families in -z^2:

        A: F(a, -a;  1/2; -z^2)
        B: F(a, 1-a; 1/2; -z^2)
        C: F(a, 1-a; 3/2; -z^2)

    A complex z is accepted and evaluated with complex intermediates.

    Raises:
        DomainError: unknown kind, or kind C with a = 1/2
    """
    kind = kind.upper()
    complex_arg = isinstance(z, complex)
    sqrt = cmath.sqrt if complex_arg else math.sqrt
    root = sqrt(1 + z * z)
    plus, minus = root + z, root - z

    if kind == "A":
        out = 0.5 * (plus ** (2 * a) + minus ** (2 * a))
    elif kind == "B":
        out = (plus ** (2 * a - 1) + minus ** (2 * a - 1)) / (2 * root)
    elif kind == "C":
        if a == 0.5:
            raise DomainError("closed form C requires a != 1/2")
        if z == 0:
            return 1.0
        out = (plus ** (1 - 2 * a) - minus ** (1 - 2 * a)) / ((2 - 4 * a) * z)
    else:
        raise DomainError(f"Unknown closed form {kind!r}; expected A, B or C")

    if not complex_arg and isinstance(out, complex):
        out = out.real
    return out


def fourier_identity(kind: int, a: float, v: float) -> float:
    """
    Elementary values of 2F1 at sin^2 v:

        1: F(-a, a;  1/2; sin^2 v) = cos(2av)
        2: F(a, 1-a; 1/2; sin^2 v) = cos((2a-1)v) / cos v
        3: F(1-a, a; 3/2; sin^2 v) = sin((2a-1)v) / ((2a-1) sin v)
        4: F(a, 2-a; 3/2; sin^2 v) = sin((2a-2)v) / ((a-1) sin 2v)

    Removable singularities (v = 0, a = 1/2, a = 1) return the limiting value.
    """
    if kind == 1:
        return math.cos(2 * a * v)
    if kind == 2:
        return math.cos((2 * a - 1) * v) / math.cos(v)
    if kind == 3:
        w = 2 * a - 1
        if w == 0 or v == 0:
            return 1.0
        return math.sin(w * v) / (w * math.sin(v))
    if kind == 4:
        if a == 1 or v == 0:
            return 1.0
        return math.sin((2 * a - 2) * v) / ((a - 1) * math.sin(2 * v))
    raise DomainError(f"Unknown Fourier identity {kind}; expected 1..4")


# ============================================================================
# ELLIPTIC INTEGRAL AND JACOBI FUNCTIONS
# ============================================================================


def _check_modulus(k2: float) -> float:
    k2 = float(k2)
    if not 0.0 < k2 < 1.0:
        raise DomainError(f"k^2 must lie in (0, 1) (got {k2:g})")
    return k2


def _agm_ladder(k2: float):
    """Descending Landen ladder: lists a_n, c_n from a_0=1, b_0=k', c_0=k."""
    a, b, c = 1.0, math.sqrt(1.0 - k2), math.sqrt(k2)
    a_list, c_list = [a], [c]
    for _ in range(64):
        if abs(c) <= _AGM_TOL * a:
            break
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        a_list.append(a)
        c_list.append(c)
    return a_list, c_list


def elliptic_K(k2: float) -> float:
    """
    Complete elliptic integral of the first kind, K = pi / (2 agm(1, k')).

    Raises:
        DomainError: k2 outside (0, 1)
    """
    k2 = _check_modulus(k2)
    a_list, _ = _agm_ladder(k2)
    return math.pi / (2.0 * a_list[-1])


def jacobi(u: float, k2: float) -> EllipticTriple:
    """
    Jacobi elliptic functions sn, cn, dn at real u.

    The amplitude comes from the descending Landen recursion seeded by the
    AGM ladder; dn is taken as sqrt(1 - k^2 sn^2), which is positive for
    real u and well conditioned at u = K.
    """
    k2 = _check_modulus(k2)
    a_list, c_list = _agm_ladder(k2)
    period = 2.0 * math.pi / a_list[-1]  # 4K
    u = float(u) - period * round(float(u) / period)

    n = len(a_list) - 1
    phi = 2.0**n * a_list[n] * u
    for j in range(n, 0, -1):
        phi = 0.5 * (phi + math.asin(c_list[j] / a_list[j] * math.sin(phi)))

    sn = math.sin(phi)
    cn = math.cos(phi)
    dn = math.sqrt(1.0 - k2 * sn * sn)
    return EllipticTriple(sn, cn, dn)


def jacobi_sd_cd(u: float, k2: float) -> Tuple[float, float]:
    """(sd u, cd u) = (sn u / dn u, cn u / dn u)."""
    sn, cn, dn = jacobi(u, k2)
    return sn / dn, cn / dn


def jacobi_shift_K(u: float, k2: float) -> EllipticTriple:
    """(sn, cn, dn) at u + K: (cd u, -k' sd u, k' / dn u)."""
    sn, cn, dn = jacobi(u, k2)
    kp = math.sqrt(1.0 - k2)
    return EllipticTriple(cn / dn, -kp * sn / dn, kp / dn)


def jacobi_jets(u: float, k2: float) -> Tuple[Jet, Jet, Jet]:
    """sn, cn, dn as jets in u (value, d/du, d^2/du^2)."""
    sn, cn, dn = jacobi(u, k2)
    return (
        Jet(sn, cn * dn, -sn * dn * dn - k2 * sn * cn * cn),
        Jet(cn, -sn * dn, -cn * dn * dn + k2 * sn * sn * cn),
        Jet(dn, -k2 * sn * cn, -k2 * dn * (cn * cn - sn * sn)),
    )
