"""Ladder operators and the magnetic Laplacian, symbolically.

Everything here runs on exact sparse expressions in z, conj(z) and
u = 1 - |z|^2, so the residuals printed below are coefficient-level
(no sample points, no quadrature).
"""

from diskpoly import (
    SpectralParams,
    add,
    bridge_pair,
    dump,
    eigenvalue,
    factorization_residuals,
    magnetic_laplacian,
    max_abs_coeff,
    psi,
    scale,
)

nu = 2.5
sp = SpectralParams(m=1, n=2, nu=nu)

# psi is generated by climbing with the raising operator from the
# lowest rung; applying the Laplacian must reproduce it up to the
# closed-form eigenvalue.
f = psi(sp)
print(f"psi for (m, n, nu) = ({sp.m}, {sp.n}, {nu}):")
for line in dump(f).splitlines():
    print("  " + line)

lf = magnetic_laplacian(nu, f)
lam = eigenvalue(nu, sp.m)
residual = add(lf, scale(f, -lam))
print(f"eigenvalue nu(2m+1) - m(m+1) = {lam}")
print(f"coefficient residual of (L - lambda) psi: {max_abs_coeff(residual):.3e}")

# Both ladder factorizations of L, plus the intertwining relation that
# shifts nu by one while climbing.
r1, r2, r3 = factorization_residuals(nu, f)
print("\nfactorization and intertwining residuals (relative, coefficient level):")
print(f"  L = nabla* nabla - nu        {r1:.3e}")
print(f"  L = nabla nabla* + nu        {r2:.3e}")
print(f"  L nabla = nabla (L' + 2nu-1) {r3:.3e}")

# bridge_pair returns the same function written two ways: as a weighted
# disk polynomial with gamma = 2(nu - m) - 1 and as a rescaled
# eigenfunction; they must agree coefficient for coefficient.
lhs, rhs = bridge_pair(sp)
gap = max_abs_coeff(add(lhs, scale(rhs, -1.0)))
print(f"\nspectral-vs-weighted bridge, relative coefficient gap: "
      f"{gap / max_abs_coeff(lhs):.3e}")
