"""Weighted Cauchy transform over the unit disk.

The transform maps f to (1/pi) times the area integral of
f(w) (1 - |w|^2)^gamma / (w - z) over the disk.  For the monomial basis
z^q conj(z)^p u^k the angular integral collapses and leaves a single
incomplete beta integral in |z|^2; the sign of the angular charge q - p
decides whether the inner or the outer radial piece survives.  On the
polynomial family itself the transform has a strikingly simple closed
form: it trades (m, n, gamma) for (m, n-1, gamma+1) and dresses the
result with u^(gamma+1).  Every route here is checked against the others
in the test suite, with a brute-force 2D oracle as the final arbiter.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NonConvergentError, NZeroError
from .numerics import gauss_legendre, hyp2f1, incomplete_beta
from .zernike import ZernikeParams, eval_explicit, monomial_coeffs

__all__ = [
    "cauchy_monomial_closed",
    "cauchy_monomial_2f1",
    "cauchy_zernike_closed",
    "cauchy_zernike_quad",
    "cauchy_direct_2d",
    "cauchy_direct_2d_adaptive",
    "CauchyInput",
    "cauchy_transform",
]


def _check_monomial(p: int, q: int, k: int, gamma: float):
    if not all(isinstance(v, int) and v >= 0 for v in (p, q, k)):
        raise DomainError(f"monomial exponents must be nonnegative integers, got ({p}, {q}, {k})")
    if not (math.isfinite(gamma) and gamma > -1):
        raise DomainError(f"weight exponent must be finite and > -1, got {gamma!r}")


def cauchy_monomial_closed(p: int, q: int, k: int, gamma: float, z: complex) -> complex:
    """Transform of conj(z)^p z^q u^k via incomplete beta integrals.

    The angular charge chi = q - p picks the branch: for chi <= 0 only the
    radial part inside |z| contributes, for chi > 0 only the part outside.
    At z = 0 the value is the full beta integral when the result charge
    chi - 1 vanishes, and zero otherwise.
    """
    _check_monomial(p, q, k, gamma)
    z = complex(z)
    r2 = z.real * z.real + z.imag * z.imag
    if r2 >= 1.0:
        raise DomainError(f"transform point must lie inside the disk, |z| = {math.sqrt(r2):g}")
    chi = q - p
    if z == 0:
        if chi == 1:
            return complex(incomplete_beta(p + 1, gamma + k + 1, 1.0))
        return 0j
    if chi <= 0:
        return -incomplete_beta(p + 1, gamma + k + 1, r2) / z ** (1 - chi)
    return z ** (chi - 1) * incomplete_beta(p + 1, gamma + k + 1, r2, "upper")


def cauchy_monomial_2f1(p: int, q: int, k: int, gamma: float, z: complex) -> complex:
    """Hypergeometric form of the monomial transform, for p >= q.

    Needs 0 < |z| <= 0.95 so the non-terminating series stays well away
    from its convergence boundary.
    """
    _check_monomial(p, q, k, gamma)
    if p < q:
        raise DomainError(f"this route needs p >= q, got ({p}, {q})")
    z = complex(z)
    r2 = z.real * z.real + z.imag * z.imag
    if z == 0 or r2 > 0.95**2:
        raise DomainError("this route needs 0 < |z| <= 0.95")
    u = 1.0 - r2
    f = hyp2f1(1.0, gamma + p + k + 2.0, p + 2.0, r2)
    return (-(z ** (q + k)) * z.conjugate() ** (p + k + 1) / (p + 1)
            * u ** (gamma + 1) * (u / r2) ** k * f)


def cauchy_zernike_closed(p: ZernikeParams, z: complex) -> complex:
    """Closed form on the polynomial family: u^(gamma+1) times the member
    at (m, n-1) for weight exponent gamma+1.  Needs n >= 1 (the transform
    of an anti-holomorphic member leaves the polynomial family)."""
    if p.n == 0:
        raise NZeroError(
            f"no closed polynomial form at n = 0 (indices ({p.m}, {p.n}))")
    z = complex(z)
    r2 = z.real * z.real + z.imag * z.imag
    if r2 > 1.0 + 1e-12:
        raise DomainError(f"transform point must lie in the closed disk, |z| = {math.sqrt(r2):g}")
    u = max(1.0 - r2, 0.0)
    shifted = ZernikeParams(p.m, p.n - 1, p.gamma + 1.0)
    return u ** (p.gamma + 1.0) * eval_explicit(shifted, z)


def cauchy_zernike_quad(p: ZernikeParams, z: complex) -> complex:
    """Coefficient-by-coefficient transform through the monomial route."""
    z = complex(z)
    acc = 0j
    for (a, b), c in sorted(monomial_coeffs(p).items()):
        acc += c * cauchy_monomial_closed(b, a, 0, p.gamma, z)
    return acc


def cauchy_direct_2d(f, gamma: float, z: complex, n_r: int = 128,
                     n_theta: int = 256) -> complex:
    """Brute-force oracle: 2D quadrature in polar coordinates centred at z.

    The radial coordinate runs from z to the boundary, which removes the
    Cauchy kernel singularity (the Jacobian cancels it exactly).  The
    sine-squared substitution clusters nodes at the rim so the weight
    factor (1 - |w|^2)^gamma is integrated accurately for fractional
    gamma.  ``f`` is called one scalar point at a time.
    """
    if not (math.isfinite(gamma) and gamma > -1):
        raise DomainError(f"weight exponent must be finite and > -1, got {gamma!r}")
    z = complex(z)
    r2 = z.real * z.real + z.imag * z.imag
    if r2 >= 1.0:
        raise DomainError("transform point must lie inside the disk")
    if n_r < 4 or n_theta < 8:
        raise DomainError("rule is too small to mean anything")
    rule = gauss_legendre(n_r)
    tau = 0.5 * (rule.nodes + 1.0)
    wtau = 0.5 * rule.weights
    sin_sq = np.sin(0.5 * np.pi * tau) ** 2
    jac = 0.5 * np.pi * np.sin(np.pi * tau)
    acc = 0j
    u0 = 1.0 - r2
    for j in range(n_theta):
        phi = 2.0 * np.pi * j / n_theta
        e = complex(math.cos(phi), math.sin(phi))
        beta = (z.conjugate() * e).real
        reach = -beta + math.sqrt(beta * beta + u0)
        ring = 0j
        for i in range(n_r):
            s = reach * sin_sq[i]
            w = z + s * e
            uw = 1.0 - (w.real * w.real + w.imag * w.imag)
            if uw <= 0.0:
                continue
            ring += wtau[i] * jac[i] * f(w) * uw**gamma
        acc += reach * ring * e.conjugate()
    return complex(acc * (2.0 * np.pi / n_theta) / np.pi)


def cauchy_direct_2d_adaptive(f, gamma: float, z: complex, rel_tol: float = 1e-7,
                              start: tuple[int, int] = (64, 64),
                              max_nodes: int = 1024) -> complex:
    """Double both grid dimensions until two passes agree to rel_tol."""
    n_r, n_theta = start
    prev = cauchy_direct_2d(f, gamma, z, n_r, n_theta)
    while max(n_r, n_theta) < max_nodes:
        n_r *= 2
        n_theta *= 2
        cur = cauchy_direct_2d(f, gamma, z, n_r, n_theta)
        if abs(cur - prev) <= rel_tol * max(abs(cur), 1e-30):
            return cur
        prev = cur
    raise NonConvergentError(f"2D rule still moving at {n_r} x {n_theta} nodes")


@dataclass(frozen=True)
class CauchyInput:
    """One transform request: either a monomial (p, q, k) or an index pair."""

    gamma: float
    z: complex
    monomial: tuple[int, int, int] | None = None
    indices: tuple[int, int] | None = None

    def __post_init__(self):
        if (self.monomial is None) == (self.indices is None):
            raise DomainError("specify exactly one of monomial or indices")


def cauchy_transform(inp: CauchyInput, route: str = "closed") -> complex:
    """Dispatch one transform by route name.

    Monomial inputs accept routes "closed" and "2f1"; index-pair inputs
    accept "closed", "quad" and "direct".
    """
    if inp.monomial is not None:
        p, q, k = inp.monomial
        if route == "closed":
            return cauchy_monomial_closed(p, q, k, inp.gamma, inp.z)
        if route == "2f1":
            return cauchy_monomial_2f1(p, q, k, inp.gamma, inp.z)
        raise DomainError(f"unknown monomial route {route!r}")
    m, n = inp.indices
    params = ZernikeParams(m, n, inp.gamma)
    if route == "closed":
        return cauchy_zernike_closed(params, inp.z)
    if route == "quad":
        return cauchy_zernike_quad(params, inp.z)
    if route == "direct":
        return cauchy_direct_2d(lambda w: eval_explicit(params, w), inp.gamma, inp.z)
    raise DomainError(f"unknown route {route!r}")
