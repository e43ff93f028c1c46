"""Bilinear discretisation, biquad cascades and their analysis."""

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.integrate
import scipy.optimize
import scipy.signal

from .prototypes import (
    AnalogPrototype,
    butterworth_prototype,
    chebyshev1_prototype,
    chebyshev2_prototype,
    elliptic_prototype,
    lowpass_scale,
)

TRANSIENT_DECAY = 1e-6


class FilterFamily(str, enum.Enum):
    BUTTERWORTH = "butterworth"
    CHEBYSHEV1 = "chebyshev1"
    CHEBYSHEV2 = "chebyshev2"
    ELLIPTIC = "elliptic"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("_", "").replace(" ", "").replace("-", "")
        aliases = {
            "butter": "butterworth",
            "cheby1": "chebyshev1",
            "chebyshevi": "chebyshev1",
            "cheb1": "chebyshev1",
            "cheby2": "chebyshev2",
            "chebyshevii": "chebyshev2",
            "cheb2": "chebyshev2",
            "ellip": "elliptic",
            "cauer": "elliptic",
        }
        key = aliases.get(key, key)
        try:
            return cls(key)
        except ValueError:
            names = ", ".join(f.value for f in cls)
            raise ValueError(f"unknown filter family {value!r} (expected one of {names})") from None

    @property
    def needs_ripple(self):
        return self in (FilterFamily.CHEBYSHEV1, FilterFamily.ELLIPTIC)

    @property
    def needs_attenuation(self):
        return self in (FilterFamily.CHEBYSHEV2, FilterFamily.ELLIPTIC)


@dataclass(frozen=True)
class FilterSpec:
    """Low-pass design request.

    ``cutoff_hz`` is the -3 dB point for Butterworth, the ripple edge for
    Chebyshev I and elliptic, and the stopband edge for Chebyshev II.
    """

    family: FilterFamily
    order: int
    cutoff_hz: float
    sample_rate_hz: float
    passband_ripple_db: Optional[float] = None
    stopband_atten_db: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "family", FilterFamily.parse(self.family))
        if int(self.order) != self.order or self.order < 1:
            raise ValueError(f"order: must be an integer >= 1, got {self.order!r}")
        object.__setattr__(self, "order", int(self.order))
        if not self.sample_rate_hz > 0:
            raise ValueError("sample_rate_hz: must be > 0")
        if not 0 < self.cutoff_hz < self.sample_rate_hz / 2:
            raise ValueError(
                f"cutoff_hz: {self.cutoff_hz} Hz must lie in (0, fs/2) = (0, {self.sample_rate_hz / 2} Hz)"
            )
        rp, rs = self.passband_ripple_db, self.stopband_atten_db
        if self.family.needs_ripple and (rp is None or not rp > 0):
            raise ValueError(f"passband_ripple_db: {self.family.value} needs a ripple > 0 dB")
        if self.family.needs_attenuation and (rs is None or not rs > 0):
            raise ValueError(f"stopband_atten_db: {self.family.value} needs an attenuation > 0 dB")
        if self.family is FilterFamily.ELLIPTIC and not rs > rp:
            raise ValueError("stopband_atten_db: must exceed passband_ripple_db")

    def prototype(self):
        f = self.family
        if f is FilterFamily.BUTTERWORTH:
            return butterworth_prototype(self.order)
        if f is FilterFamily.CHEBYSHEV1:
            return chebyshev1_prototype(self.order, self.passband_ripple_db)
        if f is FilterFamily.CHEBYSHEV2:
            return chebyshev2_prototype(self.order, self.stopband_atten_db)
        return elliptic_prototype(self.order, self.passband_ripple_db, self.stopband_atten_db)


@dataclass(frozen=True)
class Biquad:
    b0: float
    b1: float
    b2: float
    a1: float
    a2: float

    @property
    def stable(self):
        return abs(self.a2) < 1 and abs(self.a1) < 1 + self.a2

    def as_row(self):
        return [self.b0, self.b1, self.b2, 1.0, self.a1, self.a2]


@dataclass(frozen=True)
class DigitalFilter:
    """Cascade of biquads followed by a scalar gain."""

    sections: tuple
    overall_gain: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "sections", tuple(self.sections))
        object.__setattr__(self, "overall_gain", float(self.overall_gain))

    @classmethod
    def identity(cls):
        return cls((Biquad(1.0, 0.0, 0.0, 0.0, 0.0),), 1.0)

    def sos(self):
        """``(n_sections, 6)`` array in scipy layout with the gain folded into section 0."""
        sos = np.array([s.as_row() for s in self.sections], dtype=float)
        sos[0, :3] *= self.overall_gain
        return sos

    def poles(self):
        out = []
        for s in self.sections:
            out.extend(np.roots([1.0, s.a1, s.a2]))
        return np.asarray(out, dtype=complex)

    @property
    def stable(self):
        return all(s.stable for s in self.sections)


def _conjugate_groups(roots, tol=1e-9):
    """Split roots into conjugate pairs (upper member kept) and real roots."""
    roots = np.asarray(roots, dtype=complex)
    scale = np.maximum(np.abs(roots), 1.0)
    is_real = np.abs(roots.imag) <= tol * scale
    reals = np.sort(roots[is_real].real)
    upper = roots[~is_real & (roots.imag > 0)]
    lower = roots[~is_real & (roots.imag < 0)]
    if len(upper) != len(lower):
        raise ValueError("complex roots are not closed under conjugation")
    for p in upper:
        if np.min(np.abs(lower - p.conjugate())) > 1e-6 * max(abs(p), 1.0):
            raise ValueError("complex roots are not closed under conjugation")
    return list(upper), list(reals)


def _groups_of_two(roots):
    """Second-order groups: each conjugate pair, then reals two at a time."""
    pairs, reals = _conjugate_groups(roots)
    groups = [np.array([p, p.conjugate()]) for p in pairs]
    # pair reals from largest magnitude down so the leftover single is the smallest
    reals = sorted(reals, key=abs, reverse=True)
    for i in range(0, len(reals) - 1, 2):
        groups.append(np.array(reals[i : i + 2], dtype=complex))
    if len(reals) % 2:
        groups.append(np.array([reals[-1]], dtype=complex))
    return groups


def zpk_to_biquads(zeros, poles, gain):
    """Pack a digital zpk with ``len(zeros) == len(poles)`` into biquads.

    Pole groups are visited from the largest radius down, each taking the
    nearest remaining zero group; sections are emitted by ascending pole
    radius.
    """
    zeros = np.asarray(zeros, dtype=complex)
    poles = np.asarray(poles, dtype=complex)
    if len(zeros) != len(poles):
        raise ValueError("digital zpk must have as many zeros as poles")
    if len(poles) == 0:
        return DigitalFilter((Biquad(1.0, 0.0, 0.0, 0.0, 0.0),), gain)

    pole_groups = sorted(_groups_of_two(poles), key=lambda g: np.max(np.abs(g)))
    # equal root counts and equal real-root parity give matching group sizes
    pools = {1: [], 2: []}
    for g in _groups_of_two(zeros):
        pools[len(g)].append(g)
    assigned = {}
    for idx in reversed(range(len(pole_groups))):
        pg = pole_groups[idx]
        pool = pools[len(pg)]
        target = pg[np.argmax(pg.imag)]
        best = min(range(len(pool)), key=lambda i: np.min(np.abs(pool[i] - target)))
        assigned[idx] = pool.pop(best)

    sections = []
    for idx, pg in enumerate(pole_groups):
        b = np.real_if_close(np.poly(assigned[idx]), tol=1e6).real
        a = np.real_if_close(np.poly(pg), tol=1e6).real
        b = np.pad(b, (0, 3 - len(b)))
        a = np.pad(a, (0, 3 - len(a)))
        sections.append(Biquad(b[0], b[1], b[2], a[1], a[2]))
    return DigitalFilter(tuple(sections), gain)


def bilinear(analog, sample_rate_hz, prewarp_hz):
    """Discretise ``analog`` with a bilinear map matched at ``prewarp_hz``.

    The map is ``s = c (z - 1)/(z + 1)`` with ``c = w_p / tan(w_p / (2 fs))``
    and ``w_p = 2 pi prewarp_hz``, so the digital response at ``prewarp_hz``
    equals the analog response at ``w_p``. Zeros at infinity land on
    ``z = -1``.
    """
    fs = float(sample_rate_hz)
    if not 0 < prewarp_hz < fs / 2:
        raise ValueError(f"prewarp frequency {prewarp_hz} Hz must lie in (0, fs/2)")
    wp = 2 * np.pi * prewarp_hz
    c = wp / np.tan(wp / (2 * fs))
    z, p = analog.zeros, analog.poles
    zd = (c + z) / (c - z)
    pd = (c + p) / (c - p)
    zd = np.concatenate([zd, -np.ones(len(p) - len(z))])
    gain = analog.gain * np.real(np.prod(c - z) / np.prod(c - p))
    return zpk_to_biquads(zd, pd, gain)


def design(spec):
    """Prototype, frequency scaling and bilinear map for a :class:`FilterSpec`."""
    proto = spec.prototype()
    scaled = lowpass_scale(proto, 2 * np.pi * spec.cutoff_hz)
    return bilinear(scaled, spec.sample_rate_hz, spec.cutoff_hz)


def frequency_response(filt, freq_hz, sample_rate_hz):
    """Complex gain of ``filt`` at ``freq_hz`` (scalar or array)."""
    f = np.asarray(freq_hz, dtype=float)
    if np.any(f < 0) or np.any(f > sample_rate_hz / 2):
        raise ValueError("frequency must lie in [0, fs/2]")
    zi = np.exp(-1j * 2 * np.pi * f / sample_rate_hz)
    h = np.full(f.shape, filt.overall_gain, dtype=complex)
    for s in filt.sections:
        h *= (s.b0 + s.b1 * zi + s.b2 * zi * zi) / (1.0 + s.a1 * zi + s.a2 * zi * zi)
    return h if h.ndim else complex(h)


def apply(filt, samples):
    """Run ``samples`` through the cascade from zero initial state."""
    x = np.asarray(samples, dtype=float)
    if not np.all(np.isfinite(x)):
        raise ValueError("input contains non-finite samples")
    if x.size == 0:
        return x.copy()
    # scipy's sosfilt is a transposed direct-form II biquad cascade
    return scipy.signal.sosfilt(filt.sos(), x)


def peak_gain(filt, sample_rate_hz, grid=8192):
    """Maximum of ``|H(f)|`` over ``[0, fs/2]``."""
    f = np.linspace(0, sample_rate_hz / 2, grid)
    mag = np.abs(frequency_response(filt, f, sample_rate_hz))
    i = int(np.argmax(mag))
    lo, hi = f[max(i - 1, 0)], f[min(i + 1, grid - 1)]
    res = scipy.optimize.minimize_scalar(
        lambda x: -abs(frequency_response(filt, x, sample_rate_hz)),
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": 1e-9 * sample_rate_hz},
    )
    return max(mag[i], -res.fun)


def equivalent_noise_bandwidth(filt, sample_rate_hz, rtol=1e-6):
    """Equivalent noise bandwidth in Hz, relative to the peak gain.

    The power response is integrated over ``[0, fs/2]`` with adaptive
    quadrature on log-spaced panels so that narrow passbands near DC are
    resolved.
    """
    fs = float(sample_rate_hz)
    if not filt.stable:
        raise ValueError("equivalent noise bandwidth diverges for an unstable filter")
    nyq = fs / 2

    def power(f):
        return abs(frequency_response(filt, f, fs)) ** 2

    edges = np.concatenate([[0.0], np.geomspace(nyq * 1e-6, nyq, 61)])
    total = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        val, _ = scipy.integrate.quad(power, a, b, epsrel=rtol, epsabs=0.0, limit=200)
        total += val
    if not math.isfinite(total):
        raise ArithmeticError("noise bandwidth integral diverged")
    return total / peak_gain(filt, fs) ** 2


def transient_length(filt, decay=TRANSIENT_DECAY):
    """Samples until the slowest pole mode decays to ``decay``.

    ``ceil(-ln(decay) / (1 - r_max))``; a filter without poles only carries
    its numerator memory.
    """
    poles = filt.poles()
    r_max = float(np.max(np.abs(poles))) if len(poles) else 0.0
    if r_max == 0.0:
        return sum(2 if s.b2 else 1 if s.b1 else 0 for s in filt.sections)
    return int(math.ceil(-math.log(decay) / (1.0 - r_max)))


def coefficient_dump(filt):
    """Plain-text coefficients: ``b0 b1 b2 a1 a2`` per line, then the gain."""
    lines = [" ".join(repr(float(v)) for v in (s.b0, s.b1, s.b2, s.a1, s.a2)) for s in filt.sections]
    lines.append(repr(float(filt.overall_gain)))
    return "\n".join(lines) + "\n"


def parse_coefficient_dump(text):
    rows = [line.split() for line in text.strip().splitlines() if line.strip()]
    if len(rows) < 2 or len(rows[-1]) != 1 or any(len(r) != 5 for r in rows[:-1]):
        raise ValueError("malformed coefficient dump")
    sections = tuple(Biquad(*map(float, r)) for r in rows[:-1])
    return DigitalFilter(sections, float(rows[-1][0]))
