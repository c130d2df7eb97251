"""Self-contained special functions: Airy Ai, complex log-gamma, constants.

Everything here is implemented from scratch (series + asymptotics) so that
the rest of the package does not depend on an external special-function
library.  Accuracy targets: relative 1e-12 for Ai on |x| <= 30, 1e-12 for
exp(log_gamma) on the validated grid, 1e-14 for the constants identities.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

# switch point between Maclaurin series and asymptotic expansions
X_SWITCH = 4.5

_SQRT_PI = math.sqrt(math.pi)

# Ai(0) and -Ai'(0); Gamma(2/3), Gamma(1/3) via the Lanczos log_gamma below
# would be circular at import time, so start from the classical values.
_AI0 = 0.3550280538878172392600631860041831763980
_AIP0 = -0.2588194037928067984051835601892039634793


def _airy_series(x):
    """Maclaurin evaluation of (Ai, Ai') via the f/g solution pair."""
    # f, g solve y'' = x y with f(0)=1, f'(0)=0 and g(0)=0, g'(0)=1
    x3 = x * x * x
    # term_f(k) = (1/3)_k 3^k x^{3k} / (3k)!,   ratio x^3/((3k+2)(3k+3))
    # term_g(k) = (2/3)_k 3^k x^{3k+1}/(3k+1)!, ratio x^3/((3k+3)(3k+4))
    f_terms = [1.0]
    g_terms = [x]
    fp_terms = [0.0]
    gp_terms = [1.0]
    tf, tg = 1.0, x
    k = 0
    while True:
        tf = tf * x3 / ((3 * k + 2) * (3 * k + 3))
        tg = tg * x3 / ((3 * k + 3) * (3 * k + 4))
        k += 1
        f_terms.append(tf)
        g_terms.append(tg)
        # d/dx of x^{3k} and x^{3k+1} terms
        if x != 0.0:
            fp_terms.append(tf * 3 * k / x)
            gp_terms.append(tg * (3 * k + 1) / x)
        if abs(tf) < 1e-20 * abs(f_terms[0]) and abs(tg) < 1e-20 and k > 3:
            break
        if k > 200:
            break
    f = math.fsum(f_terms)
    g = math.fsum(g_terms)
    fp = math.fsum(fp_terms)
    gp = math.fsum(gp_terms)
    ai = _AI0 * f + _AIP0 * g
    aip = _AI0 * fp + _AIP0 * gp
    return ai, aip


def _airy_uv(nmax):
    """Coefficients u_k, v_k of the Airy asymptotic expansions."""
    u = [1.0]
    v = [1.0]
    for k in range(1, nmax + 1):
        uk = u[-1] * (6 * k - 1) * (6 * k - 3) * (6 * k - 5) / (216.0 * k * (2 * k - 1))
        u.append(uk)
        v.append(uk * (6 * k + 1) / (1 - 6 * k))
    return u, v


_U_COEF, _V_COEF = _airy_uv(20)


def _airy_asym_pos(x):
    zeta = 2.0 / 3.0 * x ** 1.5
    if zeta > 745.0:  # exp underflow: return signed zeros
        return 0.0, -0.0
    su, sv, sgn, zk = 0.0, 0.0, 1.0, 1.0
    prev = math.inf
    for k in range(len(_U_COEF)):
        term = _U_COEF[k] / zk
        if abs(term) > prev:  # divergent tail reached
            break
        su += sgn * term
        sv += sgn * _V_COEF[k] / zk
        prev = abs(term)
        sgn = -sgn
        zk *= zeta
    pre = math.exp(-zeta) / (2.0 * _SQRT_PI)
    ai = pre * su / x ** 0.25
    aip = -pre * sv * x ** 0.25
    return ai, aip


def _airy_asym_neg(x):
    z = -x
    zeta = 2.0 / 3.0 * z ** 1.5
    ce, se = math.cos(zeta - 0.25 * math.pi), math.sin(zeta - 0.25 * math.pi)
    # even/odd splits of the u and v series
    s_ue, s_uo, s_ve, s_vo = 0.0, 0.0, 0.0, 0.0
    for k in range(0, len(_U_COEF) // 2):
        sgn = -1.0 if (k % 2) else 1.0
        t_e = _U_COEF[2 * k] / zeta ** (2 * k)
        if t_e > 1.0 and k > 0:
            break
        s_ue += sgn * t_e
        s_uo += sgn * _U_COEF[2 * k + 1] / zeta ** (2 * k + 1)
        s_ve += sgn * _V_COEF[2 * k] / zeta ** (2 * k)
        s_vo += sgn * _V_COEF[2 * k + 1] / zeta ** (2 * k + 1)
    ai = (ce * s_ue + se * s_uo) / (_SQRT_PI * z ** 0.25)
    aip = (z ** 0.25 / _SQRT_PI) * (se * s_ve - ce * s_vo)
    return ai, aip


# Between the series region and the far asymptotic region neither expansion
# reaches 1e-12 in double precision (series: cancellation; asymptotics:
# divergence floor e^{-2 zeta}).  There we evaluate the integral
# representation Ai(x) = (1/pi) int cos(t^3/3 + x t) dt on the rotated ray
# t = e^{i pi/6} s, where the integrand decays like exp(-s^3/3).
X_ASYM = 9.0

_QUAD_NODES = None


def _airy_quad(x):
    global _QUAD_NODES
    if _QUAD_NODES is None:
        n, w = np.polynomial.legendre.leggauss(320)
        smax = 12.0
        _QUAD_NODES = (0.5 * smax * (n + 1.0), 0.5 * smax * w)
    s, w = _QUAD_NODES
    if x > 0:
        # contour through the saddle t = i sqrt(x):
        # Ai(x) = (e^{-zeta}/pi) int_0^inf e^{-sqrt(x) u^2} cos(u^3/3) du
        rx = math.sqrt(x)
        zeta = 2.0 / 3.0 * x ** 1.5
        g = np.exp(-rx * s * s)
        c = np.cos(s ** 3 / 3.0)
        i0 = np.dot(w, g * c)
        i2 = np.dot(w, s * s * g * c)
        pre = math.exp(-zeta) / math.pi
        ai = pre * i0
        aip = pre * (-rx * i0 - i2 / (2.0 * rx))
        return ai, aip
    rot = complex(math.cos(math.pi / 6.0), math.sin(math.pi / 6.0))
    lam = complex(-0.5, math.sqrt(3.0) / 2.0)  # = i * e^{i pi/6}
    vals = np.exp(-s ** 3 / 3.0 + (x * lam) * s)
    ai = (rot * np.dot(w, vals)).real / math.pi
    aip = (rot * lam * np.dot(w, s * vals)).real / math.pi
    return ai, aip


def _airy_both(x):
    if x != x:
        raise DomainErrorNan()
    # the f/g series loses digits to cancellation sooner on the positive side
    if -X_SWITCH <= x <= 2.5:
        return _airy_series(x)
    if abs(x) < X_ASYM:
        return _airy_quad(x)
    if x > 0:
        return _airy_asym_pos(x)
    return _airy_asym_neg(x)


class DomainErrorNan(ValueError):
    pass


def airy_ai(x):
    """Airy function Ai(x) for real x.

    Maclaurin series on |x| <= 4.5, asymptotic expansions beyond; relative
    error <= 1e-12 for |x| <= 30.  Underflows to 0 for large positive x.
    """
    return _airy_both(float(x))[0]


def airy_ai_prime(x):
    """Derivative Ai'(x) for real x; same accuracy contract as airy_ai."""
    return _airy_both(float(x))[1]


# Lanczos approximation (g = 7, n = 9), Godfrey coefficients.
_LANCZOS_G = 7.0
_LANCZOS_C = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
]


def log_gamma(z):
    """Principal branch of log Gamma(z) for complex (or real) z.

    Lanczos approximation with reflection for Re z < 1/2.  Raises
    BadParameter at nonpositive integers (poles).
    """
    from .errors import BadParameter

    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0 and z.real == int(z.real):
        raise BadParameter(f"log_gamma pole at z={z}")
    if z.real < 0.5:
        # log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z)
        return cmath.log(math.pi) - _log_sin_pi(z) - log_gamma(1.0 - z)
    z = z - 1.0
    x = complex(_LANCZOS_C[0])
    for i in range(1, len(_LANCZOS_C)):
        x += _LANCZOS_C[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return 0.5 * math.log(2.0 * math.pi) + (z + 0.5) * cmath.log(t) - t + cmath.log(x)


def _log_sin_pi(z):
    """log(sin(pi z)) computed without overflow for large |Im z|."""
    if abs(z.imag) < 20.0:
        return cmath.log(cmath.sin(math.pi * z))
    # sin(pi z) = (e^{i pi z} - e^{-i pi z}) / 2i; keep the dominant factor
    if z.imag > 0:
        return -1j * math.pi * z + cmath.log((1.0 - cmath.exp(2j * math.pi * z)) / (-2j))
    return 1j * math.pi * z + cmath.log((cmath.exp(-2j * math.pi * z) - 1.0) / (-2j) * -1.0)


def gamma_ratio(a, b):
    """Gamma(a)/Gamma(b) via log_gamma, for complex a, b."""
    return cmath.exp(log_gamma(a) - log_gamma(b))


@dataclass(frozen=True)
class Constants:
    """Closed-form constants of the large-gap expansions."""

    zeta_prime_minus1: float
    glaisher_log: float
    c0: float
    c2_alpha0: float


def _zeta_prime_2(nterms=60):
    """zeta'(2) = -sum log(n)/n^2 by Euler-Maclaurin."""
    n = nterms
    s = -math.fsum(math.log(k) / k ** 2 for k in range(2, n))
    f = math.log(n) / n ** 2
    fp = (1.0 - 2.0 * math.log(n)) / n ** 3
    fppp = (26.0 - 24.0 * math.log(n)) / n ** 5
    tail = (math.log(n) + 1.0) / n + 0.5 * f - fp / 12.0 + fppp / 720.0
    return s - tail


def constants():
    """Constants of the asymptotic formulas, computed from scratch.

    zeta'(-1) is obtained from the functional equation
    zeta'(-1) = zeta(-1) [ln(2 pi) - 1 + gamma - zeta'(2)/zeta(2)], with
    zeta'(2) summed by Euler-Maclaurin.
    """
    zeta2 = math.pi ** 2 / 6.0
    zp2 = _zeta_prime_2()
    zpm1 = (-1.0 / 12.0) * (math.log(2.0 * math.pi) - 1.0 + np.euler_gamma - zp2 / zeta2)
    return Constants(
        zeta_prime_minus1=zpm1,
        glaisher_log=1.0 / 12.0 - zpm1,
        c0=math.log(2.0) / 24.0 + zpm1,
        c2_alpha0=-math.log(2.0) / 6.0 + 3.0 * zpm1,
    )


def c1_constant(alpha):
    """The constant of the large-gap expansion on the symmetric interval."""
    return -(alpha ** 2 + 5.0 / 24.0) * math.log(2.0) + 2.0 * constants().zeta_prime_minus1
