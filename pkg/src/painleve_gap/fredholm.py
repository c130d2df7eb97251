"""Gauss-Legendre quadrature and Nystrom Fredholm determinants.

det(I - K) on an interval is approximated by the determinant of the
m x m matrix  I - sqrt(w_i) K(x_i, x_j) sqrt(w_j)  on Gauss-Legendre
nodes.  Semi-infinite domains are truncated (truncation_point); kernels
with an excluded interior point or a diagonal singularity are handled by
composite panels, optionally with a power-graded substitution.
"""

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import lu_factor
from scipy.optimize import brentq

from .errors import BadParameter, SingularMatrix


@dataclass(frozen=True)
class Quadrature:
    """Nodes/weights of a quadrature rule on interval (a, b)."""

    nodes: np.ndarray
    weights: np.ndarray
    interval: tuple

    def __post_init__(self):
        object.__setattr__(self, "nodes", np.asarray(self.nodes, dtype=float))
        object.__setattr__(self, "weights", np.asarray(self.weights, dtype=float))


@dataclass(frozen=True)
class LogDetResult:
    """log det(I - K) with the method used and an error estimate."""

    log_value: float
    method: str
    error_estimate: float
    params: object = None


def gauss_legendre(m, interval):
    """Gauss-Legendre rule with m nodes on [a, b]; exact for degree 2m-1."""
    a, b = interval
    if m < 1:
        raise BadParameter("need m >= 1 quadrature nodes")
    if not a < b:
        raise BadParameter(f"empty interval ({a}, {b})")
    x, w = np.polynomial.legendre.leggauss(int(m))
    nodes = 0.5 * (b - a) * x + 0.5 * (b + a)
    weights = 0.5 * (b - a) * w
    return Quadrature(nodes=nodes, weights=weights, interval=(a, b))


def graded_gauss(m, interval, toward):
    """Gauss rule with nodes power-clustered toward one endpoint.

    Substitutes x = a + (b-a) u^2 (or mirrored), which regularizes
    |x - endpoint|^(-1/2)-type integrable singularities.
    """
    a, b = interval
    base = gauss_legendre(m, (0.0, 1.0))
    u, w = base.nodes, base.weights
    if toward == "left":
        nodes = a + (b - a) * u ** 2
        weights = 2.0 * (b - a) * u * w
    elif toward == "right":
        nodes = b - (b - a) * u[::-1] ** 2
        weights = 2.0 * (b - a) * u[::-1] * w[::-1]
    else:
        raise BadParameter("toward must be 'left' or 'right'")
    return Quadrature(nodes=nodes, weights=weights, interval=(a, b))


def composite(rules):
    """Concatenate panel rules into one Quadrature (nodes kept ascending)."""
    nodes = np.concatenate([r.nodes for r in rules])
    weights = np.concatenate([r.weights for r in rules])
    order = np.argsort(nodes)
    a = min(r.interval[0] for r in rules)
    b = max(r.interval[1] for r in rules)
    return Quadrature(nodes=nodes[order], weights=weights[order], interval=(a, b))


def truncation_point(spec, eps):
    """Upper cutoff T for a soft-edge kernel on (s, infinity).

    Returns T >= s with exp(-(4/3)(T+t)^{3/2}) |T|^{2 alpha} <= eps, so that
    the determinant on (s, T) differs from (s, infinity) by o(eps).
    """
    if eps <= 0.0:
        raise BadParameter("eps must be positive")
    t = getattr(spec, "t", 0.0)
    alpha = getattr(spec, "alpha", 0.0)
    s = spec.interval[0] if hasattr(spec, "interval") else -math.inf

    def g(T):
        return -(4.0 / 3.0) * max(T + t, 0.0) ** 1.5 + 2.0 * alpha * math.log(max(abs(T), 1e-300)) - math.log(eps)

    lo = max(1.0, -t + 1e-6)
    hi = lo + 1.0
    while g(hi) > 0.0 and hi < 1e6:
        hi *= 2.0
    root = brentq(g, lo, hi, xtol=1e-10) if g(lo) > 0.0 else lo
    return max(root, s)


def nystrom_logdet(kernel, interval=None, m=64, quadrature=None, params=None):
    """log det(I - K) by the Nystrom method.

    `kernel(X, Y)` must accept numpy arrays (broadcast) and implement its own
    diagonal rule at X == Y.  Either an interval (plain Gauss rule of size m)
    or an explicit composite `quadrature` may be given.  The error estimate
    compares against the same rule at half the node count.
    """
    if quadrature is None:
        if interval is None:
            raise BadParameter("need interval or quadrature")
        quadrature = gauss_legendre(m, interval)
        half = gauss_legendre(max(4, m // 2), interval)
    else:
        half = _thin(quadrature)
    value = _logdet_on(kernel, quadrature)
    value_half = _logdet_on(kernel, half)
    return LogDetResult(
        log_value=value,
        method="nystrom",
        error_estimate=abs(value - value_half),
        params=params,
    )


def _thin(quadrature):
    """A half-resolution rule on the same interval for error estimation."""
    a, b = quadrature.interval
    return gauss_legendre(max(4, len(quadrature.nodes) // 2), (a, b))


def _logdet_on(kernel, quadrature):
    x = quadrature.nodes
    w = quadrature.weights
    if np.any(w <= 0.0):
        raise BadParameter("quadrature weights must be positive")
    K = np.asarray(kernel(x[:, None], x[None, :]), dtype=float)
    sw = np.sqrt(w)
    A = np.eye(len(x)) - sw[:, None] * K * sw[None, :]
    return lu_logdet(A)


def lu_logdet(A):
    """log |det A| via partially pivoted LU; raises if det A <= 0."""
    lu, piv = lu_factor(A, check_finite=True)
    diag = np.diag(lu)
    if np.any(diag == 0.0):
        raise SingularMatrix("zero pivot: det(I - K) vanishes")
    sign = 1.0 if (np.sum(piv != np.arange(len(piv))) % 2 == 0) else -1.0
    sign *= math.prod(1.0 if d > 0 else -1.0 for d in diag)
    if sign < 0:
        raise SingularMatrix("negative determinant for a gap-probability kernel")
    return float(np.sum(np.log(np.abs(diag))))
