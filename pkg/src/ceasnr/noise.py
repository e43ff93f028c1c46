"""Thermal and shot noise of the amplifier's base network."""

import math
from dataclasses import dataclass

import numpy as np
import scipy.constants

BOLTZMANN_K = scipy.constants.Boltzmann  # 1.380649e-23 J/K, exact
ELECTRON_CHARGE_Q = scipy.constants.elementary_charge  # 1.602176634e-19 C, exact


@dataclass(frozen=True)
class PhysicalConstants:
    boltzmann_k: float = BOLTZMANN_K
    electron_charge_q: float = ELECTRON_CHARGE_Q


CONSTANTS = PhysicalConstants()


def _require(cond, msg):
    if not cond:
        raise ValueError(msg)


@dataclass(frozen=True)
class ThermalNoiseSpec:
    resistance_ohm: float
    temperature_kelvin: float = 300.0
    bandwidth_hz: float = 0.0

    def __post_init__(self):
        _require(self.resistance_ohm >= 0, "resistance_ohm: must be >= 0")
        _require(self.temperature_kelvin > 0, "temperature_kelvin: must be > 0 K")
        _require(self.bandwidth_hz >= 0, "bandwidth_hz: must be >= 0")


@dataclass(frozen=True)
class ShotNoiseSpec:
    base_current_amp: float
    bandwidth_hz: float

    def __post_init__(self):
        _require(self.base_current_amp >= 0, "base_current_amp: must be >= 0")
        _require(self.bandwidth_hz >= 0, "bandwidth_hz: must be >= 0")


@dataclass(frozen=True)
class BiasModel:
    """Fixed-bias stage: a single resistor from the supply into the base."""

    vcc_volt: float = 12.0
    base_resistor_ohm: float = 1.13e6
    vbe_volt: float = 0.7

    def __post_init__(self):
        _require(self.base_resistor_ohm > 0, "base_resistor_ohm: must be > 0")
        _require(self.vcc_volt > self.vbe_volt, "vcc_volt: must exceed vbe_volt")


def thermal_psd_onesided(resistance_ohm, temperature_kelvin):
    """One-sided Johnson-Nyquist voltage PSD ``4kTR`` in V^2/Hz."""
    _require(resistance_ohm >= 0, "resistance_ohm: must be >= 0")
    _require(temperature_kelvin > 0, "temperature_kelvin: must be > 0 K")
    return 4.0 * BOLTZMANN_K * temperature_kelvin * resistance_ohm


def thermal_noise_rms(spec):
    """RMS Johnson noise voltage ``sqrt(4kTRB)`` in volts."""
    psd = thermal_psd_onesided(spec.resistance_ohm, spec.temperature_kelvin)
    return math.sqrt(psd * spec.bandwidth_hz)


def shot_noise_rms(spec):
    """RMS shot noise current ``sqrt(2 q I_B W)`` in amps."""
    return math.sqrt(2.0 * ELECTRON_CHARGE_Q * spec.base_current_amp * spec.bandwidth_hz)


def base_current_from_bias(bias):
    """``I_B = (V_CC - V_BE) / R_B`` for the fixed-bias stage."""
    return (bias.vcc_volt - bias.vbe_volt) / bias.base_resistor_ohm


def make_rng(seed):
    """PCG64 generator seeded through numpy's SeedSequence.

    ``seed`` may be an int or a sequence of ints (e.g. ``(master, trial, row)``).
    """
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def white_noise(sigma, n_samples, seed):
    """``n_samples`` i.i.d. zero-mean Gaussian samples with standard deviation ``sigma``."""
    _require(n_samples >= 0, "n_samples: must be >= 0")
    _require(sigma >= 0, "sigma: must be >= 0")
    return sigma * make_rng(seed).standard_normal(int(n_samples))


def gen_thermal_noise(resistance_ohm, temperature_kelvin, sample_rate_hz, n_samples, seed):
    """Sampled Johnson noise, white over ``[0, fs/2]``.

    Per-sample variance is ``4kTR * fs/2``, so band-limiting to any
    ``B <= fs/2`` leaves an RMS of ``sqrt(4kTRB)``.
    """
    _require(sample_rate_hz > 0, "sample_rate_hz: must be > 0")
    psd = thermal_psd_onesided(resistance_ohm, temperature_kelvin)
    return white_noise(math.sqrt(psd * sample_rate_hz / 2.0), n_samples, seed)


def gen_shot_noise(base_current_amp, sample_rate_hz, n_samples, seed):
    """Sampled shot noise current (A), white over ``[0, fs/2]``."""
    _require(sample_rate_hz > 0, "sample_rate_hz: must be > 0")
    spec = ShotNoiseSpec(base_current_amp, sample_rate_hz / 2.0)
    return white_noise(shot_noise_rms(spec), n_samples, seed)
