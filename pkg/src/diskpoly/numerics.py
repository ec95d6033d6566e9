"""Scalar special functions and Gaussian quadrature rules.

The evaluation routes and transform identities in this package reduce to a
small zoo of classical ingredients: Pochhammer symbols, terminating and
convergent Gauss hypergeometric series, Jacobi polynomials, incomplete beta
integrals, and Gauss rules on an interval.  They are implemented here from
scratch in plain float arithmetic so the higher-level cross-checks do not
silently share code with the oracles used to test them.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import DomainError, NonConvergentError, PoleAtCError

__all__ = [
    "pochhammer",
    "hyp2f1",
    "jacobi_p",
    "incomplete_beta",
    "gauss_legendre",
    "gauss_jacobi_radial",
    "QuadratureRule",
]

# Tolerance for detecting a nonpositive-integer parameter, i.e. a series
# that terminates.  Values this close to an integer are treated as exact.
_INT_TOL = 1e-9


def pochhammer(a: float, k: int) -> float:
    """Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1."""
    if k < 0:
        raise DomainError(f"pochhammer needs k >= 0, got {k}")
    r = 1.0
    for i in range(k):
        r *= a + i
    return r


def _nonpos_int(v: float) -> int | None:
    """Return k >= 0 such that v rounds to -k, or None."""
    r = round(v)
    if r <= 0 and abs(v - r) <= _INT_TOL:
        return -r
    return None


def _terminating_terms(k: int, a: float, b: float, c: float, x: float) -> list[float]:
    """The k+1 terms of the terminating series sum_{j=0..k} (a)_j (b)_j x^j / ((c)_j j!)."""
    terms = [1.0]
    t = 1.0
    for j in range(k):
        if abs(c + j) <= _INT_TOL:
            raise PoleAtCError(
                f"denominator parameter c={c} hits a nonpositive integer at term {j + 1}"
            )
        t *= (a + j) * (b + j) / ((c + j) * (j + 1)) * x
        terms.append(t)
    return terms


def hyp2f1(a: float, b: float, c: float, x: float,
           tol: float = 1e-15, max_terms: int = 10**6) -> float:
    """Gauss hypergeometric function 2F1(a, b; c; x) for real arguments.

    If a or b is within 1e-9 of a nonpositive integer the series terminates
    and is summed exactly (the offending parameter rounded to that integer);
    otherwise the power series is summed for |x| < 1 to relative tolerance
    ``tol``.  Raises PoleAtCError if c hits a nonpositive integer before the
    series terminates, NonConvergentError for a non-terminating call with
    |x| >= 1 or one exceeding ``max_terms``.
    """
    ka = _nonpos_int(a)
    kb = _nonpos_int(b)
    if ka is not None or kb is not None:
        k = min(k for k in (ka, kb) if k is not None)
        aa = float(round(a)) if ka is not None else a
        bb = float(round(b)) if kb is not None else b
        return math.fsum(_terminating_terms(k, aa, bb, c, x))
    if abs(x) >= 1.0:
        raise NonConvergentError(f"2F1 series does not converge at |x| = {abs(x)} >= 1")
    acc = 1.0
    t = 1.0
    for j in range(max_terms):
        if abs(c + j) <= _INT_TOL:
            raise PoleAtCError(
                f"denominator parameter c={c} hits a nonpositive integer at term {j + 1}"
            )
        t *= (a + j) * (b + j) / ((c + j) * (j + 1)) * x
        acc += t
        if abs(t) <= tol * abs(acc):
            return acc
    raise NonConvergentError(f"2F1 series did not converge in {max_terms} terms")


def jacobi_p(n: int, alpha: float, beta: float, x: float) -> float:
    """Jacobi polynomial P_n^(alpha, beta)(x) by the three-term recurrence.

    Valid for alpha, beta > -1, where the recurrence denominators stay
    positive for every n.
    """
    if n < 0:
        raise DomainError(f"jacobi_p needs n >= 0, got {n}")
    if alpha <= -1 or beta <= -1:
        raise DomainError(f"jacobi_p needs alpha, beta > -1, got ({alpha}, {beta})")
    if n == 0:
        return 1.0
    s = alpha + beta
    p0 = 1.0
    p1 = (alpha + 1) + (s + 2) * (x - 1) / 2
    for k in range(2, n + 1):
        c1 = 2 * k * (k + s) * (2 * k + s - 2)
        c2 = (2 * k + s - 1) * ((2 * k + s) * (2 * k + s - 2) * x + alpha * alpha - beta * beta)
        c4 = 2 * (k + alpha - 1) * (k + beta - 1) * (2 * k + s)
        p0, p1 = p1, (c2 * p1 - c4 * p0) / c1
    return p1


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights for a fixed quadrature rule.

    ``kind`` is "interval" (nodes strictly inside ``bounds``, weights
    positive) or "periodic" (equispaced angles on [0, 2pi) with uniform
    weight 2pi/N).
    """

    nodes: np.ndarray
    weights: np.ndarray
    kind: str
    bounds: tuple[float, float]

    def __post_init__(self):
        if len(self.nodes) != len(self.weights) or len(self.nodes) == 0:
            raise DomainError("quadrature rule needs matching, nonempty nodes and weights")
        if self.kind == "interval":
            lo, hi = self.bounds
            if not (np.all(self.nodes > lo) and np.all(self.nodes < hi)):
                raise DomainError("interval rule has nodes outside its open interval")
            if not np.all(self.weights > 0):
                raise DomainError("interval rule has nonpositive weights")
        elif self.kind == "periodic":
            n = len(self.nodes)
            expect = 2 * np.pi * np.arange(n) / n
            if not (np.allclose(self.nodes, expect) and np.allclose(self.weights, 2 * np.pi / n)):
                raise DomainError("periodic rule must be the uniform trapezoid rule")
        else:
            raise DomainError(f"unknown rule kind {self.kind!r}")

    def integrate(self, f) -> float | complex:
        return np.sum(self.weights * f(self.nodes))


def _legendre_pair(n: int, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Legendre P_n and P_n' at the points x (|x| < 1)."""
    p0 = np.ones_like(x)
    p1 = x.copy()
    for k in range(1, n):
        p0, p1 = p1, ((2 * k + 1) * x * p1 - k * p0) / (k + 1)
    dp = n * (x * p1 - p0) / (x * x - 1)
    return p1, dp


@lru_cache(maxsize=None)
def gauss_legendre(n: int) -> QuadratureRule:
    """Gauss-Legendre rule on (-1, 1), exact for polynomials of degree 2n-1.

    Nodes are found by Newton iteration from the Chebyshev-angle initial
    guesses; each root is polished to machine precision.
    """
    if n < 1:
        raise DomainError(f"gauss_legendre needs n >= 1, got {n}")
    x = np.cos(np.pi * (np.arange(1, n + 1) - 0.25) / (n + 0.5))
    for _ in range(100):
        p, dp = _legendre_pair(n, x)
        dx = p / dp
        x -= dx
        if np.max(np.abs(dx)) < 1e-15:
            break
    else:
        raise NonConvergentError(f"Newton iteration for {n}-point rule did not settle")
    p, dp = _legendre_pair(n, x)
    w = 2.0 / ((1 - x * x) * dp * dp)
    order = np.argsort(x)
    return QuadratureRule(x[order], w[order], "interval", (-1.0, 1.0))


@lru_cache(maxsize=None)
def gauss_jacobi_radial(n: int, gamma: float) -> QuadratureRule:
    """Gauss rule on (0, 1) for the weight (1 - t)^gamma dt, gamma > -1.

    Built by the Golub-Welsch method: the symmetric tridiagonal matrix of
    the monic Jacobi (alpha=gamma, beta=0) recurrence is diagonalized and
    the rule is mapped from (-1, 1) onto (0, 1).  Total weight is the
    exact moment 1/(gamma + 1).
    """
    if n < 1:
        raise DomainError(f"gauss_jacobi_radial needs n >= 1, got {n}")
    if gamma <= -1:
        raise DomainError(f"weight exponent must exceed -1, got {gamma}")
    g = float(gamma)
    diag = np.empty(n)
    diag[0] = -g / (g + 2)
    k = np.arange(1, n, dtype=float)
    if n > 1:
        diag[1:] = -(g * g) / ((2 * k + g) * (2 * k + g + 2))
    off = np.sqrt(4 * k**2 * (k + g) ** 2 / ((2 * k + g) ** 2 * ((2 * k + g) ** 2 - 1)))
    x, v = eigh_tridiagonal(diag, off)
    # moment of (1-x)^g on (-1,1) is 2^(g+1)/(g+1); the map t=(x+1)/2
    # contributes 2^(-g-1), leaving total mass 1/(g+1)
    w = v[0, :] ** 2 / (g + 1)
    t = (x + 1) / 2
    return QuadratureRule(t, w, "interval", (0.0, 1.0))


def _beta_complete(a: float, b: float) -> float:
    return math.exp(math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b))


def _beta_series_head(a: float, b: float, t0: float) -> float:
    """Exact small-t expansion of int_0^t0 t^(a-1)(1-t)^(b-1) dt.

    Expands (1-t)^(b-1) about t=0; converges geometrically for t0 < 1/2.
    """
    acc = 0.0
    c = 1.0
    i = 0
    while True:
        term = c * t0 ** (a + i) / (a + i)
        acc += term
        if abs(term) <= 1e-18 * abs(acc) and i > 2:
            return acc
        if i > 500:
            raise NonConvergentError("small-t beta expansion stalled")
        c *= (1 - b + i) / (i + 1)
        i += 1


def _beta_quad_check(a: float, b: float, x: float) -> float:
    """Quadrature value of int_0^x t^(a-1)(1-t)^(b-1) dt.

    The integrand has branch points at t=0 and t=1, so a single Gauss rule
    is not enough for non-integer parameters.  The first dyadic slice near
    0 is summed by an exact series and the rest is covered by panels graded
    geometrically toward both ends, each handled by a 32-point rule.
    """
    rule = gauss_legendre(32)
    half = 0.5 * (rule.nodes + 1)

    t0 = x * 2.0**-8
    acc = _beta_series_head(a, b, t0)
    # panels graded toward x as well; depth grows as x -> 1 so the last
    # panel stays short relative to its distance from the t=1 branch point
    depth = max(7, int(math.ceil(math.log2(max(x / (1 - x), 1.0)))) + 4)
    left = [x * 2.0 ** (-8 + j) for j in range(8)]             # t0 .. x/2
    right = [x - (x / 2) * 2.0 ** (-i) for i in range(1, depth + 1)]
    pts = left + right + [x]
    for lo, hi in zip(pts[:-1], pts[1:]):
        if hi <= lo:
            continue
        t = lo + (hi - lo) * half
        vals = t ** (a - 1) * (1 - t) ** (b - 1)
        acc += (hi - lo) * np.sum(rule.weights * vals) / 2
    return acc


def _beta_closed(a: float, b: float, x: float) -> float:
    return (x**a / a) * (1 - x) ** b * hyp2f1(1.0, a + b, a + 1.0, x)


def incomplete_beta(a: float, b: float, x: float, side: str = "lower",
                    check_tol: float = 1e-10) -> float:
    """Incomplete beta integral of t^(a-1)(1-t)^(b-1) over [0,x] or [x,1].

    The value comes from the closed hypergeometric form
    (x^a / a)(1-x)^b 2F1(1, a+b; a+1; x) and every interior call is
    cross-checked against composite Gauss quadrature of the defining
    integral; disagreement beyond ``check_tol`` (relative) raises
    NonConvergentError since it signals a defect in one of the routes.
    Needs a > 0 and b > -1 (b > 0 when the t=1 endpoint is involved).
    """
    if side not in ("lower", "upper"):
        raise DomainError(f"side must be 'lower' or 'upper', got {side!r}")
    if side == "upper":
        return incomplete_beta(b, a, 1.0 - x, "lower", check_tol)
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"x must lie in [0, 1], got {x}")
    if a <= 0:
        raise DomainError(f"first exponent parameter must be positive, got {a}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        if b <= 0:
            raise DomainError(f"full integral needs b > 0, got {b}")
        return _beta_complete(a, b)
    if b <= -1:
        raise DomainError(f"second exponent parameter must exceed -1, got {b}")
    if x > 0.5 and b > 0:
        # complement split keeps the series argument at most 1/2; the direct
        # form needs ~ log(tol)/log(x) terms as x -> 1 and drifts with them
        closed = _beta_complete(a, b) - _beta_closed(b, a, 1.0 - x)
    else:
        closed = _beta_closed(a, b, x)
    quad = _beta_quad_check(a, b, x)
    if abs(closed - quad) > check_tol * max(abs(closed), abs(quad)):
        raise NonConvergentError(
            f"incomplete beta routes disagree: closed={closed!r} quadrature={quad!r}"
        )
    return closed
