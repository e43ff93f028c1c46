"""Landen-based elliptic functions checked against quadrature oracles."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import quad
from scipy.optimize import brentq

from ceasnr.filters.elliptic import acde, asne, cde, ellipdeg, ellipk, landen, sne

MODULI = [0.0, 0.1, 0.5, 0.8, 0.95, 0.999]


def K_quad(k):
    return quad(lambda t: 1.0 / math.sqrt(1.0 - (k * math.sin(t)) ** 2), 0, math.pi / 2, epsabs=0, epsrel=1e-13)[0]


def F_quad(phi, k):
    return quad(lambda t: 1.0 / math.sqrt(1.0 - (k * math.sin(t)) ** 2), 0, phi, epsabs=0, epsrel=1e-13)[0]


def amplitude(x, k):
    """Jacobi amplitude: phi with F(phi, k) = x, for 0 <= x <= K(k)."""
    if x == 0:
        return 0.0
    return brentq(lambda p: F_quad(p, k) - x, 0.0, math.pi / 2, xtol=1e-15, rtol=1e-15)


def sn_cn_dn(x, k):
    phi = amplitude(x, k)
    return math.sin(phi), math.cos(phi), math.sqrt(1.0 - (k * math.sin(phi)) ** 2)


@pytest.mark.parametrize("k", MODULI)
def test_landen_sequence(k):
    seq = landen(k)
    assert all(b < a for a, b in zip([k] + seq, seq))
    if k > 0:
        assert seq[-1] <= 1e-14
    assert len(seq) < 10


def test_landen_domain():
    for bad in (-0.1, 1.0, 1.5):
        with pytest.raises(ValueError):
            landen(bad)


@pytest.mark.parametrize("k", MODULI)
def test_complete_integral(k):
    assert ellipk(k) == pytest.approx(K_quad(k), rel=1e-12)


def test_complete_integral_limits():
    assert ellipk(0.0) == pytest.approx(math.pi / 2, rel=1e-15)
    assert ellipk(1.0) == math.inf


@pytest.mark.parametrize("k", [0.1, 0.5, 0.9, 0.99])
@pytest.mark.parametrize("u", [0.05, 0.3, 0.5, 0.77, 0.95])
def test_real_sn_cd_against_quadrature(k, u):
    s, c, d = sn_cn_dn(u * K_quad(k), k)
    assert float(np.real(sne(u, k))) == pytest.approx(s, abs=1e-11)
    assert float(np.real(cde(u, k))) == pytest.approx(c / d, abs=1e-11)


@pytest.mark.parametrize("k", [0.2, 0.6, 0.9])
@pytest.mark.parametrize("t", [0.1, 0.4, 0.8])
def test_imaginary_argument_jacobi_transform(k, t):
    # sn(j x, k) = j sn(x, k') / cn(x, k'), with x = t K(k)
    kp = math.sqrt(1 - k * k)
    x = t * K_quad(k)
    if x >= K_quad(kp):
        pytest.skip("outside first quarter period of k'")
    s, c, _ = sn_cn_dn(x, kp)
    got = sne(1j * t, k)
    assert got.real == pytest.approx(0.0, abs=1e-11)
    assert got.imag == pytest.approx(s / c, rel=1e-10)


@pytest.mark.parametrize("k", [0.3, 0.7, 0.95])
@pytest.mark.parametrize("u", [0.2 + 0.1j, 0.5 - 0.3j, 0.8 + 0.05j])
def test_differential_equation_complex(k, u):
    # (d sn/du)^2 = K^2 (1 - sn^2)(1 - k^2 sn^2) for sn(u K)
    h = 1e-5
    deriv = (sne(u + h, k) - sne(u - h, k)) / (2 * h)
    s = sne(u, k)
    rhs = K_quad(k) ** 2 * (1 - s * s) * (1 - k * k * s * s)
    assert abs(deriv**2 - rhs) <= 1e-7 * max(1.0, abs(rhs))


@pytest.mark.parametrize("k", [0.3, 0.9])
def test_cd_is_shifted_sn(k):
    u = np.array([0.1, 0.4 + 0.2j, 0.7 - 0.1j])
    np.testing.assert_allclose(cde(u, k), sne(u + 1, k), atol=1e-12)


@settings(max_examples=60, deadline=None)
@given(u=st.floats(0.01, 0.99), v=st.floats(-0.5, 0.5), k=st.floats(0.01, 0.99))
def test_inverse_round_trip(u, v, k):
    z = complex(u, v)
    back = asne(sne(z, k), k)
    assert abs(back - z) < 1e-8
    assert abs(acde(cde(z, k), k) - z) < 1e-8


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("rp,rs", [(0.5, 30.0), (1.0, 60.0), (0.1, 40.0)])
def test_degree_equation(n, rp, rs):
    ep = math.sqrt(10 ** (rp / 10) - 1)
    es = math.sqrt(10 ** (rs / 10) - 1)
    k1 = ep / es
    k = ellipdeg(n, k1)
    assert 0 < k < 1
    lhs = n * K_quad(math.sqrt(1 - k * k)) / K_quad(k)
    rhs = K_quad(math.sqrt(1 - k1 * k1)) / K_quad(k1)
    assert lhs == pytest.approx(rhs, rel=1e-9)


def test_degree_one_is_identity():
    assert ellipdeg(1, 0.01) == 0.01
    with pytest.raises(ValueError):
        ellipdeg(0, 0.01)
