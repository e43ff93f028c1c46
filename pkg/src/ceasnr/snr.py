"""Known-frequency SNR estimation on sampled waveforms."""

import enum
import math
from dataclasses import dataclass

import numpy as np

SNR_CAP_DB = 200.0
_CAP_RATIO = 10.0 ** (-SNR_CAP_DB / 10.0)


class TransientMode(str, enum.Enum):
    DISCARD = "discard"
    INCLUDE = "include"


@dataclass(frozen=True)
class SnrMeasurementPolicy:
    transient_mode: TransientMode = TransientMode.DISCARD
    min_periods: int = 50

    def __post_init__(self):
        object.__setattr__(self, "transient_mode", TransientMode(self.transient_mode))
        if int(self.min_periods) != self.min_periods or self.min_periods < 1:
            raise ValueError("min_periods: must be an integer >= 1")


@dataclass(frozen=True)
class SnrReport:
    snr_before_db: float
    snr_after_db: float
    improvement_db: float
    trials: int
    ci_halfwidth_db: float

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not self.ci_halfwidth_db >= 0:
            raise ValueError("ci_halfwidth_db must be >= 0")


@dataclass(frozen=True)
class SineFit:
    """Least-squares fit ``a sin + b cos + c`` over an integer number of periods."""

    sin_amp: float
    cos_amp: float
    offset: float
    n_used: int
    signal_power: float
    noise_power: float

    @property
    def snr_db(self):
        if self.noise_power <= _CAP_RATIO * self.signal_power:
            return SNR_CAP_DB
        if self.signal_power <= _CAP_RATIO * self.noise_power:
            return -SNR_CAP_DB
        return 10.0 * math.log10(self.signal_power / self.noise_power)


class RecordTooShort(ValueError):
    pass


def whole_period_length(n_samples, signal_freq_hz, sample_rate_hz):
    """Largest sample count ``<= n_samples`` spanning a whole number of periods.

    Returns ``(n_used, periods)``.
    """
    period = sample_rate_hz / signal_freq_hz
    periods = int(math.floor(n_samples / period + 1e-9))
    return min(n_samples, int(math.floor(periods * period + 1e-9))), periods


def fit_sine(samples, signal_freq_hz, sample_rate_hz, min_periods=1):
    x = np.asarray(samples, dtype=float)
    if not sample_rate_hz > 2 * signal_freq_hz:
        raise ValueError(
            f"sample rate {sample_rate_hz} Hz violates Nyquist for {signal_freq_hz} Hz"
        )
    n, periods = whole_period_length(len(x), signal_freq_hz, sample_rate_hz)
    if periods < min_periods:
        raise RecordTooShort(
            f"record covers {periods} whole periods of {signal_freq_hz} Hz, need {min_periods}"
        )
    x = x[:n]
    phase = 2 * math.pi * signal_freq_hz / sample_rate_hz * np.arange(n)
    basis = np.column_stack([np.sin(phase), np.cos(phase), np.ones(n)])
    coef, *_ = np.linalg.lstsq(basis, x, rcond=None)
    resid = x - basis @ coef
    a, b, c = (float(v) for v in coef)
    return SineFit(a, b, c, n, (a * a + b * b) / 2.0, float(np.mean(resid * resid)))


def estimate_snr(samples, signal_freq_hz, sample_rate_hz, policy=SnrMeasurementPolicy()):
    """SNR in dB of a tone at a known frequency.

    The record is cut to a whole number of periods, a sine, cosine and DC
    term are fitted by least squares, and signal power ``(a^2 + b^2)/2`` is
    compared with the mean squared residual. Results are clipped to
    ``+-SNR_CAP_DB`` (200 dB); a noiseless tone lands on the cap. Transient
    handling is the caller's job; ``policy`` supplies ``min_periods``.
    """
    return fit_sine(samples, signal_freq_hz, sample_rate_hz, policy.min_periods).snr_db


def improvement(before_db, after_db):
    if not (math.isfinite(before_db) and math.isfinite(after_db)):
        raise ValueError("SNR values must be finite")
    return after_db - before_db
