"""Ladder operators and the twisted hyperbolic Laplacian, symbolically.

Everything in this module acts on exact expressions from the algebra
layer, so operator identities reduce to coefficient comparisons rather
than sampled evaluations.  The central object is the second-order
operator

    L_nu = -u^2 d_z d_zbar - nu u (z d_z - zbar d_zbar) + nu^2 z zbar

whose point spectrum below the continuum is nu(2m+1) - m(m+1) for
integers 0 <= m < nu - 1/2.  Eigenfunctions are built by applying the
raising operator repeatedly to the weight-dressed ground states, and a
rescaling by a u-power carries them onto the disk polynomial family.
"""

import math
from dataclasses import dataclass

from . import algebra
from .algebra import DiskExpr, add, d_z, d_zbar, max_abs_coeff, mul, scale
from .errors import DomainError
from .numerics import pochhammer
from .zernike import INDEX_CAP, ZernikeParams, explicit_expr

__all__ = [
    "SpectralParams",
    "nabla",
    "nabla_star",
    "magnetic_laplacian",
    "eigenvalue",
    "gamma_equivalent",
    "psi",
    "eigen_residual",
    "factorization_residuals",
    "bridge_pair",
]

_U = DiskExpr.u_power(1.0)
_Z = DiskExpr.z_power(1)
_ZBAR = DiskExpr.zbar_power(1)
_ZZBAR = DiskExpr({(1, 1, 0): 1.0})


@dataclass(frozen=True)
class SpectralParams:
    """Twist strength nu with an admissible level m and angular index n."""

    nu: float
    m: int
    n: int

    def __post_init__(self):
        if not (isinstance(self.nu, (int, float)) and math.isfinite(self.nu)):
            raise DomainError(f"twist strength must be finite, got {self.nu!r}")
        if self.nu <= 0.5:
            raise DomainError(f"discrete levels need nu > 1/2, got {self.nu}")
        if not isinstance(self.m, int) or self.m < 0:
            raise DomainError(f"level must be a nonnegative integer, got {self.m!r}")
        if not self.m < self.nu - 0.5:
            raise DomainError(
                f"level {self.m} is not below the continuum for nu = {self.nu}")
        if not (isinstance(self.n, int) and 0 <= self.n <= INDEX_CAP):
            raise DomainError(f"angular index must lie in [0, {INDEX_CAP}], got {self.n!r}")
        object.__setattr__(self, "nu", float(self.nu))


def nabla(alpha: float, e: DiskExpr) -> DiskExpr:
    """Raising-type ladder operator -u d_z + alpha zbar."""
    return add(scale(mul(_U, d_z(e)), -1.0), scale(mul(_ZBAR, e), alpha))


def nabla_star(alpha: float, e: DiskExpr) -> DiskExpr:
    """Formal adjoint u d_zbar + (alpha + 1) z."""
    return add(mul(_U, d_zbar(e)), scale(mul(_Z, e), alpha + 1.0))


def magnetic_laplacian(nu: float, e: DiskExpr) -> DiskExpr:
    mixed = scale(mul(mul(_U, _U), d_z(d_zbar(e))), -1.0)
    drift = add(mul(_Z, d_z(e)), scale(mul(_ZBAR, d_zbar(e)), -1.0))
    drift = scale(mul(_U, drift), -nu)
    potential = scale(mul(_ZZBAR, e), nu * nu)
    return add(add(mixed, drift), potential)


def eigenvalue(nu: float, m: int) -> float:
    return nu * (2 * m + 1) - m * (m + 1)


def gamma_equivalent(nu: float, m: int) -> float:
    """Weight exponent whose polynomial family this level rescales onto."""
    return 2 * (nu - m) - 1


def psi(sp: SpectralParams) -> DiskExpr:
    """Level-m eigenfunction: m ladder steps up from z^n u^(nu - m)."""
    e = mul(DiskExpr.z_power(sp.n), DiskExpr.u_power(sp.nu - sp.m))
    for j in range(sp.m, 0, -1):
        e = nabla(sp.nu - j, e)
    return e


def eigen_residual(sp: SpectralParams) -> float:
    """Relative coefficient residual of (L_nu - lambda) applied to psi."""
    f = psi(sp)
    lap = magnetic_laplacian(sp.nu, f)
    lam = eigenvalue(sp.nu, sp.m)
    diff = add(lap, scale(f, -lam))
    ref = max(max_abs_coeff(lap), abs(lam) * max_abs_coeff(f), 1e-300)
    return max_abs_coeff(diff) / ref


def factorization_residuals(nu: float, e: DiskExpr) -> tuple[float, float, float]:
    """Relative residuals of the two factorizations and the intertwining law.

    In order: L_nu vs nabla_star(nu) nabla(nu) - nu, L_nu vs
    nabla(nu-1) nabla_star(nu-1) + nu, and L_nu nabla(nu-1) vs
    nabla(nu-1) (L_(nu-1) + 2 nu - 1).
    """
    lap = magnetic_laplacian(nu, e)

    c1 = add(nabla_star(nu, nabla(nu, e)), scale(e, -nu))
    c2 = add(nabla(nu - 1.0, nabla_star(nu - 1.0, e)), scale(e, nu))
    lhs3 = magnetic_laplacian(nu, nabla(nu - 1.0, e))
    rhs3 = nabla(nu - 1.0, add(magnetic_laplacian(nu - 1.0, e),
                               scale(e, 2.0 * nu - 1.0)))

    def rel(x: DiskExpr, y: DiskExpr) -> float:
        ref = max(max_abs_coeff(x), max_abs_coeff(y), 1e-300)
        return max_abs_coeff(add(x, scale(y, -1.0))) / ref

    return rel(lap, c1), rel(lap, c2), rel(lhs3, rhs3)


def bridge_pair(sp: SpectralParams) -> tuple[DiskExpr, DiskExpr]:
    """Both sides of the rescaling that maps psi onto a disk polynomial.

    Returns (polynomial expression, rescaled eigenfunction): the second
    entry is (gamma+m+1)_n u^(m - nu) psi for gamma = 2(nu - m) - 1, which
    should match the first coefficient-for-coefficient.
    """
    g = gamma_equivalent(sp.nu, sp.m)
    if g <= -1:
        raise DomainError(f"equivalent weight exponent {g:g} is out of range")
    lhs = explicit_expr(ZernikeParams(sp.m, sp.n, g))
    pref = pochhammer(g + sp.m + 1, sp.n)
    rhs = scale(mul(DiskExpr.u_power(sp.m - sp.nu), psi(sp)), pref)
    return lhs, algebra.prune(rhs, 1e-13)
