"""Jacobi elliptic functions by descending Landen transformations.

Everything here works with the modulus ``k`` (not the parameter ``m = k**2``)
and with arguments normalised by the complete integral, so ``cde(u, k)`` is
``cd(u*K, k)`` and ``sne(u, k)`` is ``sn(u*K, k)``. Complex arguments are
supported throughout, which the elliptic pole placement needs.
"""

import numpy as np

LANDEN_TOL = 1e-14
MAX_LANDEN_STEPS = 64


class ConvergenceError(RuntimeError):
    """Raised when a Landen sequence fails to reach tolerance."""


def landen(k, tol=LANDEN_TOL):
    """Descending Landen moduli ``k_1, k_2, ...`` starting from ``k``.

    Iteration stops once a modulus drops below ``tol``; the change between
    successive moduli is then below ``tol`` as well.
    """
    if not 0.0 <= k < 1.0:
        raise ValueError(f"modulus must be in [0, 1), got {k!r}")
    seq = []
    while k > tol:
        kp = np.sqrt((1.0 - k) * (1.0 + k))
        k = (k / (1.0 + kp)) ** 2
        seq.append(k)
        if len(seq) > MAX_LANDEN_STEPS:
            raise ConvergenceError(f"Landen sequence did not converge for k={k!r}")
    return seq


def ellipk(k, tol=LANDEN_TOL):
    """Complete elliptic integral of the first kind, K(k)."""
    if k == 1.0:
        return np.inf
    return 0.5 * np.pi * float(np.prod([1.0 + v for v in landen(k, tol)]))


def ellipk_pair(k, tol=LANDEN_TOL):
    """Return ``(K(k), K(k'))`` with ``k' = sqrt(1 - k**2)``."""
    kp = np.sqrt((1.0 - k) * (1.0 + k))
    return ellipk(k, tol), ellipk(kp, tol)


def _ascend(w, seq):
    for v in reversed(seq):
        w = (1.0 + v) * w / (1.0 + v * w * w)
    return w


def cde(u, k, tol=LANDEN_TOL):
    """``cd(u*K(k), k)`` for real or complex ``u``."""
    w = np.cos(np.asarray(u) * np.pi / 2)
    return _ascend(w, landen(k, tol))


def sne(u, k, tol=LANDEN_TOL):
    """``sn(u*K(k), k)`` for real or complex ``u``."""
    w = np.sin(np.asarray(u) * np.pi / 2)
    return _ascend(w, landen(k, tol))


def acde(w, k, tol=LANDEN_TOL):
    """Inverse of :func:`cde`: returns ``u`` with ``cd(u*K, k) = w``."""
    w = np.asarray(w, dtype=complex)
    seq = landen(k, tol)
    prev = k
    for v in seq:
        w = w / (1.0 + np.sqrt(1.0 - w * w * prev * prev)) * 2.0 / (1.0 + v)
        prev = v
    return 2.0 / np.pi * np.arccos(w)


def asne(w, k, tol=LANDEN_TOL):
    """Inverse of :func:`sne`."""
    return 1.0 - acde(w, k, tol)


def ellipdeg(n, k1, terms=7, tol=LANDEN_TOL):
    """Solve the degree equation ``n K'/K = K1'/K1`` for the modulus ``k``.

    Uses the nome of ``k1``: ``q = q1**(1/n)`` and the theta-series
    expression for ``k(q)``. ``k1`` is the discrimination modulus
    ``eps_pass / eps_stop`` and the returned ``k`` is the selectivity
    (passband edge over stopband edge).
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    if n == 1:
        return k1
    K1, K1p = ellipk_pair(k1, tol)
    q1 = np.exp(-np.pi * K1p / K1)
    q = q1 ** (1.0 / n)
    m = np.arange(1, terms + 1)
    num = 1.0 + np.sum(q ** (m * (m + 1)))
    den = 1.0 + 2.0 * np.sum(q ** (m * m))
    return float(4.0 * np.sqrt(q) * (num / den) ** 2)
