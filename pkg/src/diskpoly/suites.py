"""Verification suites: each one turns a family of identities into report
rows by recomputing both sides through independent routes.

Error normalization uses two scales at once.  For a parameter tuple, let
S be the largest value magnitude seen across its sample points; a pair
(a, b) contributes |a - b| / max(|a|, |b|, 0.1 S).  Dividing by the
pairwise scale gives a plain relative error away from zeros of the
function, and the 0.1 S floor keeps accidental near-zeros from blowing
up an otherwise healthy row (equivalent to an absolute tolerance one
decade under the relative one, measured against the tuple's scale).

Rows whose tolerance equals report.INFORMATIONAL are recorded for the
record and never gate a run; the suite uses them where two published
variants of an identity disagree and the point is to document both
residuals rather than assume either.

Set DISKPOLY_THREADS=k to let suites evaluate row batches on k threads;
assembly is a sorted reduction, so the output is identical either way.
"""

import math
import os
from concurrent.futures import ThreadPoolExecutor

from .algebra import add, max_abs_coeff, scale
from .cauchy import (
    cauchy_direct_2d,
    cauchy_monomial_2f1,
    cauchy_monomial_closed,
    cauchy_zernike_closed,
    cauchy_zernike_quad,
)
from .errors import DomainError, NonConvergentError
from .report import INFORMATIONAL, ReportRow, VerifyReport, checked_row, make_report
from .sampling import Lcg64, disk_points
from .spectral import (
    SpectralParams,
    bridge_pair,
    eigen_residual,
    factorization_residuals,
)
from .zernike import (
    ZernikeParams,
    eval_contour,
    eval_contour_adaptive,
    eval_explicit,
    eval_route,
    hermite,
    hermite_limit_error,
    inner_product,
    norm_squared,
)

__all__ = ["SUITE_NAMES", "run_suite", "normalized_deviation"]

DEFAULT_GAMMAS = (-0.5, 0.0, 1.0, 2.5)
DEFAULT_SEED = 2024
_TINY = 1e-250


def normalized_deviation(a: complex, b: complex, s_param: float) -> float:
    """|a - b| over the two-scale denominator described in the module doc."""
    return abs(a - b) / max(abs(a), abs(b), 0.1 * s_param, _TINY)


def _threads() -> int:
    raw = os.environ.get("DISKPOLY_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise DomainError(f"DISKPOLY_THREADS must be an integer, got {raw!r}")


def _map_tasks(fn, items):
    k = _threads()
    if k <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=k) as ex:
        return list(ex.map(fn, items))


def _fmt_gamma(g: float) -> str:
    return format(g, "g")


# ---------------------------------------------------------------- routes

def suite_routes(max_mn: int, gammas, seed: int) -> list[ReportRow]:
    pts = disk_points(seed, 6, 0.95)
    pts_contour = disk_points(seed + 1, 6, 0.8)
    combos = [(g, m, n) for g in gammas
              for m in range(max_mn + 1) for n in range(max_mn + 1)]

    def one(combo):
        g, m, n = combo
        p = ZernikeParams(m, n, g)
        ref = {z: eval_explicit(p, z) for z in pts + pts_contour}
        s = max(abs(v) for v in ref.values())
        params = f"gamma={_fmt_gamma(g)} m={m} n={n}"
        rows = []
        for route in ("gauss1", "gauss2", "jacobi", "rodrigues"):
            err = max(normalized_deviation(eval_route(p, z, route), ref[z], s)
                      for z in pts)
            rows.append(checked_row(f"{route}_vs_explicit", params, err, 1e-9))
        err = max(normalized_deviation(eval_contour_adaptive(p, z), ref[z], s)
                  for z in pts_contour)
        rows.append(checked_row("contour_vs_explicit", params, err, 1e-9))
        return rows

    return [r for rows in _map_tasks(one, combos) for r in rows]


# -------------------------------------------------------- orthogonality

def suite_orthogonality(max_mn: int, gammas, seed: int) -> list[ReportRow]:
    cap = min(max_mn, 5)
    pairs = [(m, n) for m in range(cap + 1) for n in range(cap + 1)]
    rows = []
    for g in gammas:
        norms = {mn: math.sqrt(norm_squared(ZernikeParams(*mn, g))) for mn in pairs}
        base = inner_product(ZernikeParams(0, 0, g), ZernikeParams(0, 0, g))
        ref = math.pi / (g + 1.0)
        rows.append(checked_row("norm_base", f"gamma={_fmt_gamma(g)}",
                                abs(base - ref) / ref, 1e-12))
        for i, mn1 in enumerate(pairs):
            for mn2 in pairs[i + 1:]:
                ip = inner_product(ZernikeParams(*mn1, g), ZernikeParams(*mn2, g))
                err = abs(ip) / (norms[mn1] * norms[mn2])
                params = (f"gamma={_fmt_gamma(g)} m1={mn1[0]} n1={mn1[1]}"
                          f" m2={mn2[0]} n2={mn2[1]}")
                rows.append(checked_row("inner_product_zero", params, err, 1e-11))
    return rows


# --------------------------------------------------------------- contour

def suite_contour(max_mn: int, gammas, seed: int) -> list[ReportRow]:
    pts = disk_points(seed + 2, 8, 0.8)
    combos = [(g, m, n) for g in gammas
              for m in range(max_mn + 1) for n in range(max_mn + 1)]

    def one(combo):
        g, m, n = combo
        p = ZernikeParams(m, n, g)
        ref = {z: eval_explicit(p, z) for z in pts}
        s = max(abs(v) for v in ref.values())
        params = f"gamma={_fmt_gamma(g)} m={m} n={n}"
        try:
            err = max(normalized_deviation(eval_contour_adaptive(p, z), ref[z], s)
                      for z in pts)
        except NonConvergentError:
            err = INFORMATIONAL
        fixed = max(normalized_deviation(eval_contour(p, z, 512), ref[z], s)
                    for z in pts)
        return [checked_row("contour_adaptive_vs_explicit", params, err, 1e-10),
                checked_row("contour_fixed512_vs_explicit", params, fixed, 1e-9)]

    return [r for rows in _map_tasks(one, combos) for r in rows]


# ---------------------------------------------------------------- cauchy

def suite_cauchy(max_mn: int, gammas, seed: int) -> list[ReportRow]:
    cap = min(max_mn, 5)
    pts = disk_points(seed + 3, 10, 0.8)
    rows = []

    def transform_scale(p: ZernikeParams, vals) -> float:
        return max(max(abs(v) for v in vals), _TINY)

    # index-shift identity, proven index ordering
    for g in gammas:
        for m in range(1, cap + 1):
            for n in range(1, m + 1):
                p = ZernikeParams(m, n, g)
                quad = [cauchy_zernike_quad(p, z) for z in pts]
                s = transform_scale(p, quad)
                err = max(normalized_deviation(cauchy_zernike_closed(p, z), q, s)
                          for z, q in zip(pts, quad))
                rows.append(checked_row(
                    "cauchy_shift_closed_vs_quad",
                    f"gamma={_fmt_gamma(g)} m={m} n={n}", err, 1e-9))

    # the published text states two different index patterns for the
    # complementary ordering; record both residuals, gate only the one the
    # oracles support
    for g in gammas:
        for m in range(1, cap + 1):
            for n in range(m + 1, cap + 1):
                p = ZernikeParams(m, n, g)
                quad = [cauchy_zernike_quad(p, z) for z in pts]
                s = transform_scale(p, quad)
                same = max(normalized_deviation(cauchy_zernike_closed(p, z), q, s)
                           for z, q in zip(pts, quad))
                swapped = ZernikeParams(n, m - 1, g + 1.0)
                printed = max(
                    normalized_deviation(
                        (1.0 - abs(z) ** 2) ** (g + 1.0) * eval_explicit(swapped, z),
                        q, s)
                    for z, q in zip(pts, quad))
                params = f"gamma={_fmt_gamma(g)} m={m} n={n}"
                rows.append(checked_row(
                    "cauchy_shift_same_pattern", params, same, 1e-9))
                rows.append(checked_row(
                    "cauchy_shift_swapped_pattern", params, printed, INFORMATIONAL))

    # monomial transform: hypergeometric form against the beta form
    rng = Lcg64(seed + 4)
    zs = disk_points(seed + 5, 200, 0.95)
    for i in range(200):
        a = int(rng.uniform() * 5)
        b = int(rng.uniform() * 5)
        p, q = max(a, b), min(a, b)
        k = int(rng.uniform() * 4)
        g = gammas[i % len(gammas)]
        z = zs[i]
        va = cauchy_monomial_closed(p, q, k, g, z)
        vb = cauchy_monomial_2f1(p, q, k, g, z)
        err = abs(va - vb) / max(abs(va), abs(vb), _TINY)
        rows.append(checked_row(
            "cauchy_monomial_2f1_vs_closed",
            f"gamma={_fmt_gamma(g)} i={i:03d} k={k} p={p} q={q}", err, 1e-10))

    # brute-force 2D oracle spot checks
    cases = [(1, 1), (2, 1), (1, 2), (3, 2), (2, 3), (4, 4), (2, 0), (0, 2),
             (3, 0), (5, 1)]

    def spot(item):
        i, (m, n) = item
        g = gammas[i % len(gammas)]
        z = pts[i % len(pts)]
        p = ZernikeParams(m, n, g)
        a = cauchy_zernike_quad(p, z)
        b = cauchy_direct_2d(lambda w: eval_explicit(p, w), g, z, 96, 192)
        err = abs(a - b) / max(abs(a), abs(b), _TINY)
        return checked_row("cauchy_direct2d_spotcheck",
                           f"gamma={_fmt_gamma(g)} m={m} n={n}", err, 1e-6)

    rows.extend(_map_tasks(spot, list(enumerate(cases))))
    return rows


# -------------------------------------------------------------- spectral

def _random_expr(rng: Lcg64):
    from .algebra import DiskExpr
    terms = {}
    for _ in range(1 + int(rng.uniform() * 4)):
        key = (int(rng.uniform() * 4), int(rng.uniform() * 4), int(rng.uniform() * 3))
        terms[key] = complex(rng.uniform() * 4 - 2, rng.uniform() * 4 - 2)
    offset = (0.0, 1.0, 0.5, 1.5)[int(rng.uniform() * 4)]
    return DiskExpr(terms, offset)


def suite_spectral(max_mn: int, gammas, seed: int) -> list[ReportRow]:
    rows = []
    n_cap = min(max_mn, 4)
    for nu in (2.0, 2.5, 6.0):
        m_top = min(4, math.ceil(nu - 0.5) - 1)
        for m in range(m_top + 1):
            for n in range(n_cap + 1):
                sp = SpectralParams(nu, m, n)
                rows.append(checked_row(
                    "eigen_residual", f"m={m} n={n} nu={nu:g}",
                    eigen_residual(sp), 1e-10))

    rng = Lcg64(seed + 6)
    for i in range(50):
        nu = (1.0, 2.5, 6.0)[i % 3]
        e = _random_expr(rng)
        err = max(factorization_residuals(nu, e))
        rows.append(checked_row("ladder_factorization", f"i={i:02d} nu={nu:g}",
                                err, 1e-10))

    for nu in (1.6, 2.5, 6.0):
        m_top = min(4, math.ceil(nu - 0.5) - 1)
        for m in range(m_top + 1):
            for n in range(n_cap + 1):
                lhs, rhs = bridge_pair(SpectralParams(nu, m, n))
                diff = max_abs_coeff(add(lhs, scale(rhs, -1.0)))
                ref = max(max_abs_coeff(lhs), _TINY)
                rows.append(checked_row(
                    "ladder_bridge", f"m={m} n={n} nu={nu:g}", diff / ref, 1e-10))
    return rows


# --------------------------------------------------------------- hermite

def suite_hermite(max_mn: int, gammas, seed: int) -> list[ReportRow]:
    z = disk_points(seed + 7, 1, 0.8)[0]
    rows = []
    cap = min(max_mn, 4)
    for m in range(cap + 1):
        for n in range(cap + 1):
            errs = [hermite_limit_error(m, n, z, rho) for rho in (10.0, 100.0, 1000.0)]
            if errs[0] == 0.0 and errs[1] == 0.0 and errs[2] == 0.0:
                ratio = 0.0
            elif errs[0] > 0.0 and errs[1] > 0.0:
                ratio = max(errs[1] / errs[0], errs[2] / errs[1])
            else:
                ratio = INFORMATIONAL
            rows.append(checked_row("hermite_limit_monotone", f"m={m} n={n}",
                                    ratio, 1.0))
    for m in range(min(max_mn, 6) + 1):
        for n in range(min(max_mn, 6) + 1):
            expected = float((-1) ** m * math.factorial(m)) if m == n else 0.0
            err = abs(hermite(m, n, 0j) - expected)
            rows.append(checked_row("hermite_origin_delta", f"m={m} n={n}",
                                    err, 1e-300))
    return rows


SUITES = {
    "routes": suite_routes,
    "orthogonality": suite_orthogonality,
    "contour": suite_contour,
    "cauchy": suite_cauchy,
    "spectral": suite_spectral,
    "hermite": suite_hermite,
}

SUITE_NAMES = tuple(sorted(SUITES)) + ("all",)


def run_suite(name: str, max_mn: int = 4, gammas=DEFAULT_GAMMAS,
              seed: int = DEFAULT_SEED) -> VerifyReport:
    """Build the named suite's report (or every suite under "all")."""
    if max_mn < 0 or max_mn > 8:
        raise DomainError(f"max_mn must lie in 0..8, got {max_mn}")
    _threads()  # reject a malformed DISKPOLY_THREADS before any work runs
    gammas = tuple(float(g) for g in gammas)
    if not gammas:
        raise DomainError("need at least one weight exponent")
    for g in gammas:
        if not (math.isfinite(g) and g > -1):
            raise DomainError(f"weight exponents must be finite and > -1, got {g}")
    if name == "all":
        rows = []
        for key in sorted(SUITES):
            rows.extend(SUITES[key](max_mn, gammas, seed))
        return make_report("all", rows)
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}")
    return make_report(name, SUITES[name](max_mn, gammas, seed))
