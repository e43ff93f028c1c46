import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ceasnr.snr import (
    SNR_CAP_DB,
    RecordTooShort,
    SnrMeasurementPolicy,
    SnrReport,
    TransientMode,
    estimate_snr,
    fit_sine,
    improvement,
    whole_period_length,
)

FS = 100e3
F = 50.0


def tone(n, amp=1.0, phase=0.0, f=F, fs=FS):
    return amp * np.sin(2 * np.pi * f * np.arange(n) / fs + phase)


def noisy_tone(true_snr_db, seed, n=100_000, sigma=1.0, phase=0.3):
    amp = math.sqrt(2 * sigma**2 * 10 ** (true_snr_db / 10))
    rng = np.random.default_rng(seed)
    return tone(n, amp, phase) + rng.normal(0, sigma, n)


class TestCalibration:
    @pytest.mark.parametrize("true_db", [-10, 0, 10, 20, 30, 40])
    def test_within_tolerance(self, true_db):
        errs = [estimate_snr(noisy_tone(true_db, s, n=100_000), F, FS) - true_db for s in range(20)]
        assert max(abs(e) for e in errs) < 0.3

    def test_unbiased(self):
        errs = [estimate_snr(noisy_tone(10.0, 1000 + s), F, FS) - 10.0 for s in range(40)]
        assert abs(np.mean(errs)) < 0.02


@pytest.mark.parametrize("phase", [0.0, 0.7, math.pi / 2, 2.5, -1.0])
def test_phase_invariance(phase):
    rng = np.random.default_rng(3)
    noise = rng.normal(0, 0.1, 100_000)
    ref = estimate_snr(tone(100_000) + noise, F, FS)
    # same noise, rotated tone: only the noise projection on the basis moves
    assert estimate_snr(tone(100_000, phase=phase) + noise, F, FS) == pytest.approx(ref, abs=0.05)


def test_dc_offset_ignored():
    x = noisy_tone(20.0, 4)
    assert estimate_snr(x + 3.0, F, FS) == pytest.approx(estimate_snr(x, F, FS), abs=1e-9)


def test_one_sample_truncation():
    x = noisy_tone(20.0, 5, n=100_001)
    assert abs(estimate_snr(x, F, FS) - estimate_snr(x[:-1], F, FS)) < 0.05


def test_non_integer_period_count():
    # 333.3 samples per period: whole-period cut must still hold calibration
    fs = 100e3
    f = 300.0
    n = 100_000
    rng = np.random.default_rng(6)
    x = math.sqrt(2) * np.sin(2 * np.pi * f * np.arange(n) / fs) + rng.normal(0, 1, n)
    assert estimate_snr(x, f, fs) == pytest.approx(0.0, abs=0.3)


def test_noise_only_is_very_negative():
    x = np.random.default_rng(7).normal(0, 1, 100_000)
    assert estimate_snr(x, F, FS) < -30


def test_pure_tone_hits_cap():
    assert estimate_snr(tone(100_000, 1e-3), F, FS) == SNR_CAP_DB


def test_degenerate_records():
    assert fit_sine(np.zeros(100_000), F, FS).noise_power == 0.0
    assert estimate_snr(np.zeros(100_000), F, FS) == SNR_CAP_DB  # 0/0 counts as noiseless
    x = np.zeros(100_000)
    x[::2] = 1.0
    x[1::2] = -1.0
    # alternating sequence at fs/2 is orthogonal to the 50 Hz basis
    assert estimate_snr(x, F, FS) == -SNR_CAP_DB


def test_fit_recovers_coefficients():
    x = 0.3 * np.sin(2 * np.pi * F * np.arange(4000) / FS) + 0.4 * np.cos(2 * np.pi * F * np.arange(4000) / FS) + 0.1
    fit = fit_sine(x, F, FS)
    assert (fit.sin_amp, fit.cos_amp, fit.offset) == pytest.approx((0.3, 0.4, 0.1), abs=1e-12)
    assert fit.signal_power == pytest.approx(0.125, rel=1e-12)
    assert fit.n_used == 4000


class TestRecordLength:
    def test_whole_period_length(self):
        assert whole_period_length(100_000, 50.0, 100e3) == (100_000, 50)
        assert whole_period_length(99_999, 50.0, 100e3) == (98_000, 49)
        assert whole_period_length(1000, 300.0, 100e3) == (1000, 3)

    def test_too_short(self):
        with pytest.raises(RecordTooShort):
            estimate_snr(tone(10_000), F, FS)  # 5 periods < 50
        assert isinstance(RecordTooShort("x"), ValueError)

    def test_nyquist(self):
        with pytest.raises(ValueError):
            fit_sine(np.zeros(100), 600.0, 1000.0)

    def test_policy_min_periods(self):
        assert estimate_snr(noisy_tone(10.0, 1, n=10_000), F, FS, SnrMeasurementPolicy(min_periods=5)) == pytest.approx(
            10.0, abs=1.0
        )
        with pytest.raises(ValueError):
            SnrMeasurementPolicy(min_periods=0)


def test_policy_modes():
    assert SnrMeasurementPolicy("include").transient_mode is TransientMode.INCLUDE
    with pytest.raises(ValueError):
        SnrMeasurementPolicy("sometimes")


@given(a=st.floats(-200, 200), b=st.floats(-200, 200))
def test_improvement_antisymmetric(a, b):
    assert improvement(a, b) == -improvement(b, a)
    assert improvement(a, a) == 0


@pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
def test_improvement_rejects_non_finite(bad):
    with pytest.raises(ValueError):
        improvement(bad, 1.0)
    with pytest.raises(ValueError):
        improvement(1.0, bad)


def test_report_validation():
    with pytest.raises(ValueError):
        SnrReport(1.0, 2.0, 1.0, 0, 0.0)
    with pytest.raises(ValueError):
        SnrReport(1.0, 2.0, 1.0, 3, -0.1)


@settings(max_examples=25, deadline=None)
@given(scale=st.floats(1e-9, 1e6))
def test_scale_invariance(scale):
    x = noisy_tone(15.0, 9, n=20_000)
    pol = SnrMeasurementPolicy(min_periods=10)
    assert estimate_snr(scale * x, F, FS, pol) == pytest.approx(estimate_snr(x, F, FS, pol), abs=1e-8)
