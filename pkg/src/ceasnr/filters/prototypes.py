"""Normalised analog low-pass prototypes (cutoff at 1 rad/s)."""

from dataclasses import dataclass, field

import numpy as np

from .elliptic import asne, cde, ellipdeg, sne


@dataclass(frozen=True)
class AnalogPrototype:
    """Zeros, poles and gain of a continuous-time transfer function.

    ``H(s) = gain * prod(s - zeros) / prod(s - poles)``
    """

    zeros: np.ndarray = field(default_factory=lambda: np.zeros(0, complex))
    poles: np.ndarray = field(default_factory=lambda: np.zeros(0, complex))
    gain: float = 1.0

    def __post_init__(self):
        z = np.atleast_1d(np.asarray(self.zeros, dtype=complex))
        p = np.atleast_1d(np.asarray(self.poles, dtype=complex))
        if len(z) > len(p):
            raise ValueError("improper prototype: more zeros than poles")
        if np.any(p.real >= 0):
            raise ValueError("unstable prototype: pole in the closed right half-plane")
        object.__setattr__(self, "zeros", z)
        object.__setattr__(self, "poles", p)
        object.__setattr__(self, "gain", float(self.gain))

    def response(self, w):
        """Complex response at angular frequencies ``w`` (rad/s)."""
        s = 1j * np.atleast_1d(np.asarray(w, dtype=float))
        num = np.prod(s[:, None] - self.zeros[None, :], axis=1)
        den = np.prod(s[:, None] - self.poles[None, :], axis=1)
        return self.gain * num / den

    def dc_gain(self):
        return float(abs(self.response(0.0)[0]))


def _check_order(n):
    if int(n) != n or n < 1:
        raise ValueError(f"filter order must be an integer >= 1, got {n!r}")
    return int(n)


def _ripple_eps(db):
    return np.sqrt(np.expm1(np.log(10.0) * db / 10.0))


def _normalised(zeros, poles, dc):
    """Prototype with gain chosen so that ``|H(0)| = dc``."""
    zeros = np.asarray(zeros, complex)
    poles = np.asarray(poles, complex)
    raw = np.prod(-zeros) / np.prod(-poles)
    return AnalogPrototype(zeros, poles, dc / abs(raw))


def butterworth_prototype(n):
    n = _check_order(n)
    k = np.arange(1, n + 1)
    poles = np.exp(1j * np.pi * (2 * k + n - 1) / (2 * n))
    # the formula lands real poles a rounding error off the axis
    poles = np.where(np.abs(poles.imag) < 1e-15, poles.real + 0j, poles)
    return _normalised([], poles, 1.0)


def _chebyshev_poles(n, eps):
    mu = np.arcsinh(1.0 / eps) / n
    theta = np.pi * (2 * np.arange(1, n + 1) - 1) / (2 * n)
    poles = -np.sinh(mu) * np.sin(theta) + 1j * np.cosh(mu) * np.cos(theta)
    if n % 2:
        poles[n // 2] = poles[n // 2].real
    return poles


def chebyshev1_prototype(n, rp_db):
    """Chebyshev type I with passband ripple ``rp_db`` over [0, 1] rad/s.

    Odd orders have unit DC gain; even orders start at the bottom of the
    ripple, ``10**(-rp_db/20)``.
    """
    n = _check_order(n)
    if not rp_db > 0:
        raise ValueError("passband ripple must be > 0 dB")
    eps = _ripple_eps(rp_db)
    dc = 1.0 if n % 2 else 10.0 ** (-rp_db / 20.0)
    return _normalised([], _chebyshev_poles(n, eps), dc)


def chebyshev2_prototype(n, rs_db):
    """Chebyshev type II (inverse Chebyshev) with stopband edge at 1 rad/s."""
    n = _check_order(n)
    if not rs_db > 0:
        raise ValueError("stopband attenuation must be > 0 dB")
    eps = 1.0 / _ripple_eps(rs_db)
    poles = 1.0 / _chebyshev_poles(n, eps)
    theta = np.pi * (2 * np.arange(1, n + 1) - 1) / (2 * n)
    if n % 2:
        theta = np.delete(theta, n // 2)  # cos(pi/2) = 0: zero at infinity
    zeros = 1j / np.cos(theta)
    return _normalised(zeros, poles, 1.0)


def elliptic_prototype(n, rp_db, rs_db):
    """Elliptic (Cauer) prototype with passband edge at 1 rad/s.

    Zeros sit at ``j / (k cd(u_i K))`` and poles at ``j cd((u_i - j v0) K)``
    with ``u_i = (2i - 1)/n``; ``k`` solves the degree equation for the
    requested ripples and ``v0`` comes from the inverse ``sn`` of
    ``j/eps_pass`` at the discrimination modulus. Stopband edge is ``1/k``.
    """
    n = _check_order(n)
    if not rp_db > 0:
        raise ValueError("passband ripple must be > 0 dB")
    if not rs_db > rp_db:
        raise ValueError("stopband attenuation must exceed passband ripple")
    ep = _ripple_eps(rp_db)
    es = _ripple_eps(rs_db)
    k1 = ep / es
    k = ellipdeg(n, k1)

    u = (2 * np.arange(1, n // 2 + 1) - 1) / n
    v0 = (-1j * asne(1j / ep, k1) / n).real
    zeros = 1j / (k * cde(u, k))
    poles = 1j * cde(u - 1j * v0, k)
    zeros = np.concatenate([zeros, zeros.conj()])
    poles = np.concatenate([poles, poles.conj()])
    if n % 2:
        poles = np.append(poles, (1j * sne(1j * v0, k)).real)
    dc = 1.0 if n % 2 else 10.0 ** (-rp_db / 20.0)
    return _normalised(zeros, poles, dc)


def elliptic_selectivity(n, rp_db, rs_db):
    """Passband-to-stopband edge ratio ``k`` for an elliptic design."""
    return ellipdeg(_check_order(n), _ripple_eps(rp_db) / _ripple_eps(rs_db))


def lowpass_scale(proto, cutoff_rad_s):
    """Frequency-scale a prototype (``s -> s / wc``), keeping the DC gain."""
    if not cutoff_rad_s > 0:
        raise ValueError("cutoff must be > 0 rad/s")
    wc = float(cutoff_rad_s)
    degree = len(proto.poles) - len(proto.zeros)
    return AnalogPrototype(proto.zeros * wc, proto.poles * wc, proto.gain * wc**degree)
