"""Evaluate one disk polynomial through every route and compare.

Each route computes the same Z_{m,n}^gamma from a different starting
point: the explicit double sum, two terminating hypergeometric forms,
the Jacobi-polynomial form, the symbolic Rodrigues expression, and a
contour integral around |t| = 1.  Run it as a script; it prints the
values and the worst pairwise spread.
"""

from diskpoly import (
    ROUTES,
    ZernikeParams,
    eval_route,
    eval_explicit,
    value_at_origin,
    pochhammer,
)

p = ZernikeParams(m=3, n=2, gamma=0.5)
z = 0.35 - 0.55j

print(f"Z_({p.m},{p.n})^{p.gamma} at z = {z}")
vals = {}
for route in ROUTES:
    vals[route] = eval_route(p, z, route)
    print(f"  {route:10s} {vals[route]!r}")

spread = max(abs(a - b) for a in vals.values() for b in vals.values())
print(f"  worst pairwise spread: {spread:.3e}")

# At the origin only the diagonal m = n survives, and the value is a
# rational multiple of a Pochhammer symbol.  eval_explicit lands on it
# exactly because the off-diagonal terms vanish term by term.
print("\norigin values, m = n diagonal:")
for m in range(4):
    q = ZernikeParams(m, m, 0.5)
    got = eval_explicit(q, 0j)
    print(f"  m = n = {m}: {got.real:.6g}  (closed form {value_at_origin(q):.6g})")

# On |z| = 1 the weight factor u = 1 - |z|^2 kills every term but j = 0,
# so the modulus is the single Pochhammer number (gamma+1)_{m+n}.
import cmath

w = cmath.exp(1j * 0.83)
print(f"\nboundary modulus at z = e^(0.83i): {abs(eval_explicit(p, w)):.12g}")
print(f"(gamma+1)_(m+n)                   = {pochhammer(p.gamma + 1, p.m + p.n):.12g}")
