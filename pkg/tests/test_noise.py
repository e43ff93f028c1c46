import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ceasnr.noise import (
    BOLTZMANN_K,
    ELECTRON_CHARGE_Q,
    CONSTANTS,
    BiasModel,
    ShotNoiseSpec,
    ThermalNoiseSpec,
    base_current_from_bias,
    gen_thermal_noise,
    shot_noise_rms,
    thermal_noise_rms,
    thermal_psd_onesided,
)


def test_codata_constants():
    assert BOLTZMANN_K == 1.380649e-23
    assert ELECTRON_CHARGE_Q == 1.602176634e-19
    assert CONSTANTS.boltzmann_k == BOLTZMANN_K


class TestThermal:
    def test_ten_kilohm_example(self):
        v = thermal_noise_rms(ThermalNoiseSpec(10e3, 300.0, 10e3))
        assert v == pytest.approx(1.287e-6, rel=5e-3)

    def test_hundred_kilohm_example(self):
        v = thermal_noise_rms(ThermalNoiseSpec(100e3, 300.0, 10e3))
        assert v == pytest.approx(4.070e-6, rel=5e-3)
        assert v == pytest.approx(4.070354775692163e-06, rel=1e-12)

    def test_zero_bandwidth(self):
        assert thermal_noise_rms(ThermalNoiseSpec(1e6, 300.0, 0.0)) == 0.0

    def test_zero_resistance(self):
        assert thermal_noise_rms(ThermalNoiseSpec(0.0, 300.0, 1e4)) == 0.0

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(resistance_ohm=-1, temperature_kelvin=300, bandwidth_hz=1),
            dict(resistance_ohm=1, temperature_kelvin=0, bandwidth_hz=1),
            dict(resistance_ohm=1, temperature_kelvin=-5, bandwidth_hz=1),
            dict(resistance_ohm=1, temperature_kelvin=300, bandwidth_hz=-1),
        ],
    )
    def test_domain_errors(self, kwargs):
        with pytest.raises(ValueError):
            ThermalNoiseSpec(**kwargs)

    def test_psd_values(self):
        assert thermal_psd_onesided(10e3, 300.0) == pytest.approx(1.6567788e-16, rel=1e-12)
        assert thermal_psd_onesided(0.0, 300.0) == 0.0
        with pytest.raises(ValueError):
            thermal_psd_onesided(10.0, 0.0)

    def test_psd_times_bandwidth(self):
        assert thermal_psd_onesided(10e3, 300.0) * 1e4 == pytest.approx((1.287e-6) ** 2, rel=1e-2)

    @given(
        r=st.floats(1e-3, 1e9),
        t=st.floats(1.0, 1e4),
        c=st.floats(1e-3, 1e3),
        b=st.floats(1.0, 1e9),
    )
    def test_sqrt_r_scaling(self, r, t, c, b):
        base = thermal_noise_rms(ThermalNoiseSpec(r, t, b))
        scaled = thermal_noise_rms(ThermalNoiseSpec(c * r, t, b))
        assert scaled == pytest.approx(math.sqrt(c) * base, rel=1e-13)

    def test_power_identity_random_triples(self):
        rng = np.random.default_rng(7)
        for r, t, b in zip(10 ** rng.uniform(0, 8, 100), rng.uniform(1, 1000, 100), 10 ** rng.uniform(0, 9, 100)):
            rms = thermal_noise_rms(ThermalNoiseSpec(r, t, b))
            assert abs(rms**2 - thermal_psd_onesided(r, t) * b) <= 1e-12 * rms**2

    @given(r=st.floats(0, 1e9), t=st.floats(1, 1e4), b=st.floats(0, 1e9), d=st.floats(0, 1e6))
    def test_monotone(self, r, t, b, d):
        v = thermal_noise_rms(ThermalNoiseSpec(r, t, b))
        assert thermal_noise_rms(ThermalNoiseSpec(r + d, t, b)) >= v
        assert thermal_noise_rms(ThermalNoiseSpec(r, t + d, b)) >= v
        assert thermal_noise_rms(ThermalNoiseSpec(r, t, b + d)) >= v


class TestShot:
    def test_ten_kilohertz(self):
        i = shot_noise_rms(ShotNoiseSpec(10e-6, 1e4))
        assert i == pytest.approx(1.789e-10, rel=5e-3)

    def test_hundred_kilohertz(self):
        # about 5.7e-10 A
        i = shot_noise_rms(ShotNoiseSpec(10e-6, 1e5))
        assert i == pytest.approx(5.66e-10, rel=1e-2)
        assert 5.6e-10 < i < 5.75e-10

    def test_zero_current(self):
        assert shot_noise_rms(ShotNoiseSpec(0.0, 1e4)) == 0.0

    @pytest.mark.parametrize("ib,w", [(-1e-6, 1e4), (1e-6, -1.0)])
    def test_domain_errors(self, ib, w):
        with pytest.raises(ValueError):
            ShotNoiseSpec(ib, w)

    @given(ib=st.floats(0, 1), w=st.floats(0, 1e9), d=st.floats(0, 1e3))
    def test_monotone(self, ib, w, d):
        i = shot_noise_rms(ShotNoiseSpec(ib, w))
        assert shot_noise_rms(ShotNoiseSpec(ib + d, w)) >= i
        assert shot_noise_rms(ShotNoiseSpec(ib, w + d)) >= i


class TestBias:
    def test_default_gives_ten_microamps(self):
        assert base_current_from_bias(BiasModel(12.0, 1.13e6, 0.7)) == pytest.approx(10e-6, rel=1e-12)

    def test_kilo_ohm(self):
        assert base_current_from_bias(BiasModel(12.0, 1.13e3, 0.7)) == pytest.approx(10e-3, rel=1e-12)

    def test_vanishes_near_vbe(self):
        assert base_current_from_bias(BiasModel(0.7 + 1e-9, 1e3, 0.7)) < 1e-11

    @given(r1=st.floats(1.0, 1e8), r2=st.floats(1.0, 1e8))
    def test_strictly_decreasing(self, r1, r2):
        if r1 == r2:
            return
        lo, hi = sorted((r1, r2))
        assert base_current_from_bias(BiasModel(base_resistor_ohm=lo)) > base_current_from_bias(
            BiasModel(base_resistor_ohm=hi)
        )

    @pytest.mark.parametrize("kw", [dict(base_resistor_ohm=0.0), dict(vcc_volt=0.7), dict(vcc_volt=0.5)])
    def test_domain_errors(self, kw):
        with pytest.raises(ValueError):
            BiasModel(**kw)


class TestGenThermal:
    def test_empty(self):
        assert gen_thermal_noise(10e3, 300.0, 100e3, 0, 1).shape == (0,)

    def test_rms_and_determinism(self):
        x = gen_thermal_noise(10e3, 300.0, 100e3, 10**6, 1)
        sigma = 2.8781754637269773e-06
        assert np.sqrt(np.mean(x**2)) == pytest.approx(sigma, rel=1e-2)
        assert np.var(x) == pytest.approx(sigma**2, rel=1e-2)
        assert abs(np.mean(x)) < 4 * sigma / np.sqrt(x.size)
        y = gen_thermal_noise(10e3, 300.0, 100e3, 10**6, 1)
        assert np.array_equal(x, y)

    def test_different_seeds_uncorrelated(self):
        x = gen_thermal_noise(10e3, 300.0, 100e3, 10**6, 1)
        y = gen_thermal_noise(10e3, 300.0, 100e3, 10**6, 2)
        assert abs(np.corrcoef(x, y)[0, 1]) < 0.01

    @settings(max_examples=20, deadline=None)
    @given(seed=st.integers(0, 2**64 - 1))
    def test_any_u64_seed_reproducible(self, seed):
        a = gen_thermal_noise(1e3, 300.0, 1e3, 16, seed)
        assert np.array_equal(a, gen_thermal_noise(1e3, 300.0, 1e3, 16, seed))

    def test_band_limited_rms_matches_formula(self):
        # brick-wall the white samples to B and compare with sqrt(4kTRB)
        fs, n, b = 100e3, 2**18, 10e3
        x = gen_thermal_noise(10e3, 300.0, fs, n, 3)
        spec = np.fft.rfft(x)
        freqs = np.fft.rfftfreq(n, 1 / fs)
        spec[freqs > b] = 0
        y = np.fft.irfft(spec, n)
        assert np.sqrt(np.mean(y**2)) == pytest.approx(1.2871591976131003e-06, rel=2e-2)

    @pytest.mark.parametrize("fs,n", [(0.0, 10), (-1.0, 10), (1e3, -1)])
    def test_domain_errors(self, fs, n):
        with pytest.raises(ValueError):
            gen_thermal_noise(1e3, 300.0, fs, n, 0)
