"""Tests for the weighted Cauchy transform routes.

The closed forms are checked against hand-derived special cases, against
each other, and against a brute-force 2D quadrature oracle that knows
nothing about the algebra.
"""

import math

import numpy as np
import pytest

from diskpoly import (
    CauchyInput,
    DomainError,
    NonConvergentError,
    NZeroError,
    ZernikeParams,
    cauchy_direct_2d,
    cauchy_direct_2d_adaptive,
    cauchy_monomial_2f1,
    cauchy_monomial_closed,
    cauchy_transform,
    cauchy_zernike_closed,
    cauchy_zernike_quad,
    eval_explicit,
)
from diskpoly.sampling import disk_points

Z0 = 0.35 - 0.55j
U0 = 1.0 - abs(Z0) ** 2

GAMMAS = (-0.5, 0.0, 1.0, 2.5)


def test_constant_hand_formula():
    # C(1)(z) = -(1 - u^(g+1)) / ((g+1) z), from the chi = 0 branch by hand
    for g in GAMMAS:
        for z in disk_points(7001, 5, 0.9):
            u = 1.0 - abs(z) ** 2
            ref = -(1.0 - u ** (g + 1)) / ((g + 1) * z)
            assert cauchy_monomial_closed(0, 0, 0, g, z) == pytest.approx(ref, rel=1e-14)


def test_z_hand_formula():
    # C(z)(z) = u^(g+1) / (g+1), the chi = 1 branch
    for g in GAMMAS:
        for z in disk_points(7002, 5, 0.9):
            u = 1.0 - abs(z) ** 2
            ref = u ** (g + 1) / (g + 1)
            assert cauchy_monomial_closed(0, 1, 0, g, z) == pytest.approx(ref, rel=1e-14)


def test_monomial_frozen_value():
    # frozen oracle value: cauchy_direct_2d at 384x768 nodes gave the same value
    # to 2.9e-17 absolute, and the 2f1 route to 3.9e-18, before freezing.
    v = cauchy_monomial_closed(2, 1, 1, 0.5, Z0)
    assert v == pytest.approx(0.014415689414701446 - 0.030833557914778088j, abs=1e-15)


def test_monomial_direct_2d_agreement():
    def f(p, q, k):
        return lambda w: w.conjugate() ** p * w ** q * (1.0 - abs(w) ** 2) ** k

    for (p, q, k, g) in [(2, 1, 1, 0.5), (1, 3, 0, -0.5), (0, 0, 2, 2.5), (3, 0, 1, 0.0)]:
        a = cauchy_monomial_closed(p, q, k, g, Z0)
        b = cauchy_direct_2d(f(p, q, k), g, Z0, 96, 192)
        assert abs(a - b) <= 1e-12 * max(abs(a), 1.0)


def test_monomial_2f1_matches_closed():
    pts = [z for z in disk_points(7003, 8, 0.95)]
    for (p, q, k) in [(0, 0, 0), (1, 0, 0), (2, 1, 1), (3, 3, 0), (4, 2, 2), (2, 2, 3)]:
        for g in GAMMAS:
            for z in pts:
                a = cauchy_monomial_closed(p, q, k, g, z)
                b = cauchy_monomial_2f1(p, q, k, g, z)
                assert abs(a - b) <= 1e-12 * max(abs(a), 1e-6)


def test_monomial_2f1_named_points():
    # hypergeometric route at specific points, against the beta route
    for (p, q, k, g, z) in [(1, 0, 1, 0.5, 0.4 + 0.1j), (3, 0, 0, 0.0, 0.6 + 0j)]:
        a = cauchy_monomial_closed(p, q, k, g, z)
        b = cauchy_monomial_2f1(p, q, k, g, z)
        assert abs(a - b) <= 1e-12 * max(abs(a), 1e-12)
    assert cauchy_monomial_2f1(0, 0, 0, 0.0, 0.5 + 0j) == pytest.approx(-0.5, rel=1e-14)


def test_monomial_2f1_guards():
    with pytest.raises(DomainError):
        cauchy_monomial_2f1(1, 2, 0, 0.5, Z0)  # needs p >= q
    with pytest.raises(DomainError):
        cauchy_monomial_2f1(1, 0, 0, 0.5, 0j)
    with pytest.raises(DomainError):
        cauchy_monomial_2f1(1, 0, 0, 0.5, 0.97)


def test_monomial_guards():
    with pytest.raises(DomainError):
        cauchy_monomial_closed(-1, 0, 0, 0.5, Z0)
    with pytest.raises(DomainError):
        cauchy_monomial_closed(0, 0, 0, -1.0, Z0)
    with pytest.raises(DomainError):
        cauchy_monomial_closed(0, 0, 0, 0.5, 1.0 + 0j)


def test_zernike_closed_frozen_value():
    # frozen oracle value: the monomial-reduction route agreed to 1.0e-15
    # relative and cauchy_direct_2d at 256x512 to 2.4e-16 before freezing.
    v = cauchy_zernike_closed(ZernikeParams(3, 2, 0.5), Z0)
    assert v == pytest.approx(4.504052067359833 - 9.633666921852974j, rel=1e-14)


def test_zernike_closed_simple_point():
    # (1,1) at z = 0.5: u Z_{1,0}^1(0.5) = 0.75 * 2 * 0.5
    assert cauchy_zernike_closed(ZernikeParams(1, 1, 0.0), 0.5 + 0j) == pytest.approx(
        0.75, rel=1e-14)


def test_direct_2d_simple():
    v = cauchy_direct_2d(lambda w: 1.0, 0.0, 0.5 + 0j, 64, 256)
    assert abs(v - (-0.5)) <= 1e-8
    assert cauchy_direct_2d(lambda w: 0.0, 0.0, 0.5 + 0j, 16, 32) == 0j


def test_zernike_index_shift_hand_formula():
    # For (m, n) = (1, 2) the closed form reads
    # u^(g+1) (g+3) ((g+2) - (g+3) u), worked out from the explicit sum.
    for g in GAMMAS:
        for z in disk_points(7004, 4, 0.9):
            u = 1.0 - abs(z) ** 2
            ref = u ** (g + 1) * (g + 3) * ((g + 2) - (g + 3) * u)
            assert cauchy_zernike_closed(ZernikeParams(1, 2, g), z) == pytest.approx(ref, rel=1e-13)


def test_zernike_closed_vs_quad_grid():
    # The two routes share nothing past the coefficient table, so this is
    # the index-shift identity itself, for both index orderings and m = 0.
    pts = disk_points(7005, 4, 0.8)
    for g in GAMMAS:
        for m in range(5):
            for n in range(1, 5):
                p = ZernikeParams(m, n, g)
                for z in pts:
                    a = cauchy_zernike_closed(p, z)
                    b = cauchy_zernike_quad(p, z)
                    assert abs(a - b) <= 1e-10 * max(abs(a), 1.0)


def test_zernike_direct_2d_spotchecks():
    for (m, n, g) in [(3, 2, 0.5), (1, 2, 1.0), (4, 1, 2.5)]:
        p = ZernikeParams(m, n, g)
        a = cauchy_zernike_closed(p, Z0)
        b = cauchy_direct_2d(lambda w: eval_explicit(p, w), g, Z0, 128, 256)
        assert abs(a - b) <= 1e-9 * max(abs(a), 1.0)


def test_zernike_n_zero():
    p = ZernikeParams(2, 0, 0.5)
    with pytest.raises(NZeroError):
        cauchy_zernike_closed(p, Z0)
    # the monomial route still works there; check it against the oracle
    a = cauchy_zernike_quad(p, Z0)
    b = cauchy_direct_2d(lambda w: eval_explicit(p, w), 0.5, Z0, 96, 192)
    assert abs(a - b) <= 1e-12 * max(abs(a), 1.0)


def test_z_zero_rules():
    # only angular charge chi = 1 survives at the origin
    assert cauchy_monomial_closed(0, 1, 0, 0.5, 0j) == pytest.approx(2.0 / 3.0, rel=1e-14)
    assert cauchy_monomial_closed(0, 0, 0, 0.5, 0j) == 0j
    assert cauchy_monomial_closed(0, 2, 0, 0.5, 0j) == 0j
    assert cauchy_monomial_closed(2, 1, 0, 0.5, 0j) == 0j
    # k shifts the weight: C(z u)(0) = B(1, g+2)
    assert cauchy_monomial_closed(0, 1, 1, 0.5, 0j) == pytest.approx(1.0 / 2.5, rel=1e-14)
    v = cauchy_zernike_closed(ZernikeParams(1, 2, 0.5), 0j)
    assert v == -3.5
    assert cauchy_zernike_quad(ZernikeParams(1, 2, 0.5), 0j) == pytest.approx(-3.5, rel=1e-12)


def test_angular_charge_single_mode():
    # On a centred circle the transform carries the single Fourier mode
    # n - m - 1; every other bin must vanish to rounding.
    n_ang = 64
    for (m, n) in [(1, 2), (2, 1), (0, 3), (3, 3)]:
        p = ZernikeParams(m, n, 0.5)
        vals = np.array([
            cauchy_zernike_closed(p, 0.5 * complex(math.cos(t), math.sin(t)))
            for t in (2.0 * math.pi * j / n_ang for j in range(n_ang))
        ])
        modes = np.fft.fft(vals)
        mode = (n - m - 1) % n_ang
        top = abs(modes[mode])
        rest = np.delete(np.abs(modes), mode)
        assert top > 0
        assert rest.max() <= 1e-10 * top


def test_direct_2d_adaptive():
    p = ZernikeParams(2, 2, 0.5)
    ref = cauchy_zernike_closed(p, Z0)
    v = cauchy_direct_2d_adaptive(lambda w: eval_explicit(p, w), 0.5, Z0,
                                  rel_tol=1e-8, start=(32, 32))
    assert abs(v - ref) <= 1e-7 * abs(ref)
    with pytest.raises(NonConvergentError):
        cauchy_direct_2d_adaptive(lambda w: eval_explicit(p, w), 0.5, Z0,
                                  rel_tol=1e-14, start=(8, 8), max_nodes=16)


def test_cauchy_input_validation():
    with pytest.raises(DomainError):
        CauchyInput(0.5, Z0)
    with pytest.raises(DomainError):
        CauchyInput(0.5, Z0, monomial=(1, 0, 0), indices=(1, 1))


def test_cauchy_transform_dispatch():
    inp = CauchyInput(0.5, Z0, monomial=(2, 1, 1))
    assert cauchy_transform(inp, "closed") == cauchy_monomial_closed(2, 1, 1, 0.5, Z0)
    assert cauchy_transform(inp, "2f1") == cauchy_monomial_2f1(2, 1, 1, 0.5, Z0)
    with pytest.raises(DomainError):
        cauchy_transform(inp, "direct")
    inp = CauchyInput(0.5, Z0, indices=(3, 2))
    p = ZernikeParams(3, 2, 0.5)
    assert cauchy_transform(inp, "closed") == cauchy_zernike_closed(p, Z0)
    assert cauchy_transform(inp, "quad") == cauchy_zernike_quad(p, Z0)
    d = cauchy_transform(inp, "direct")
    assert abs(d - cauchy_zernike_closed(p, Z0)) <= 1e-9 * abs(d)
    with pytest.raises(DomainError):
        cauchy_transform(inp, "nope")
