"""The common-emitter stage as an ideal voltage gain on source plus base noise."""

import math
from dataclasses import dataclass

import numpy as np

from .noise import (
    ELECTRON_CHARGE_Q,
    ThermalNoiseSpec,
    gen_shot_noise,
    gen_thermal_noise,
    thermal_psd_onesided,
)


@dataclass(frozen=True)
class SourceSpec:
    frequency_hz: float = 50.0
    amplitude_volt: float = 1e-3
    phase_rad: float = 0.0

    def __post_init__(self):
        if not self.frequency_hz > 0:
            raise ValueError("frequency_hz: must be > 0")
        if not self.amplitude_volt > 0:
            raise ValueError("amplitude_volt: must be > 0")


@dataclass(frozen=True)
class AmplifierSpec:
    voltage_gain: float = 100.0

    def __post_init__(self):
        if not self.voltage_gain > 0:
            raise ValueError("voltage_gain: must be > 0")


@dataclass(frozen=True)
class ShotNoiseInjection:
    """Optional shot-noise term: base current noise times a transresistance."""

    base_current_amp: float = 10e-6
    transresistance_ohm: float = 1e3


@dataclass
class ChainOutput:
    clean: np.ndarray
    noisy: np.ndarray


def gen_source(src, sample_rate_hz, n_samples):
    """``A sin(2 pi f i / fs + phase)`` for ``i = 0 .. n-1``."""
    if not sample_rate_hz > 2 * src.frequency_hz:
        raise ValueError(
            f"sample rate {sample_rate_hz} Hz violates Nyquist for a {src.frequency_hz} Hz source"
        )
    if n_samples < 0:
        raise ValueError("n_samples: must be >= 0")
    i = np.arange(int(n_samples))
    return src.amplitude_volt * np.sin(2 * math.pi * src.frequency_hz * i / sample_rate_hz + src.phase_rad)


def output_noise_rms(base_noise_rms, amp):
    """Base-referred RMS noise carried to the output by the stage gain."""
    if base_noise_rms < 0:
        raise ValueError("base noise RMS must be >= 0")
    return amp.voltage_gain * base_noise_rms


def synthesize_chain(src, amp, noise, sample_rate_hz, n_samples, seed, shot=None):
    """Clean and noisy collector waveforms.

    Thermal noise of ``noise.resistance_ohm`` at ``noise.temperature_kelvin``
    is added at the base over the full simulated band ``[0, fs/2]``; its
    ``bandwidth_hz`` is ignored here. The noise is amplified together with
    the source. ``shot`` adds an independent shot-noise voltage drawn from
    a child stream of the same seed.
    """
    s = gen_source(src, sample_rate_hz, n_samples)
    base = s + gen_thermal_noise(
        noise.resistance_ohm, noise.temperature_kelvin, sample_rate_hz, n_samples, _child(seed, 0)
    )
    if shot is not None:
        i_n = gen_shot_noise(shot.base_current_amp, sample_rate_hz, n_samples, _child(seed, 1))
        base = base + shot.transresistance_ohm * i_n
    g = amp.voltage_gain
    return ChainOutput(clean=g * s, noisy=g * base)


def _child(seed, stream):
    if isinstance(seed, (tuple, list)):
        return (*seed, stream) if stream else tuple(seed)
    return (seed, stream) if stream else seed


def injected_snr_db(src, noise, sample_rate_hz, shot=None):
    """Closed-form SNR of the noisy chain output, independent of gain."""
    sig_power = src.amplitude_volt**2 / 2.0
    var = thermal_psd_onesided(noise.resistance_ohm, noise.temperature_kelvin) * sample_rate_hz / 2.0
    if shot is not None:
        shot_psd = 2.0 * ELECTRON_CHARGE_Q * shot.base_current_amp
        var += shot.transresistance_ohm**2 * shot_psd * sample_rate_hz / 2.0
    if var == 0:
        return math.inf
    return 10.0 * math.log10(sig_power / var)


__all__ = [
    "AmplifierSpec",
    "ChainOutput",
    "ShotNoiseInjection",
    "SourceSpec",
    "ThermalNoiseSpec",
    "gen_source",
    "injected_snr_db",
    "output_noise_rms",
    "synthesize_chain",
]
