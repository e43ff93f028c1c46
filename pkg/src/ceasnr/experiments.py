"""Seeded Monte-Carlo runs, parameter sweeps and the base-resistor study.

Trial ``t`` of a run with master seed ``s`` draws its noise from
``SeedSequence((s, t, 0))`` (PCG64). Rows of a sweep reuse the same
trials, so every row sees identical noise realisations and the unfiltered
SNR is bit-identical across rows.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import List

import numpy as np

from . import filters
from .amp import AmplifierSpec, ShotNoiseInjection, SourceSpec, synthesize_chain
from .filters import FilterFamily, FilterSpec
from .noise import (
    BiasModel,
    ShotNoiseSpec,
    ThermalNoiseSpec,
    base_current_from_bias,
    shot_noise_rms,
    thermal_noise_rms,
    BOLTZMANN_K,
    ELECTRON_CHARGE_Q,
)
from .snr import SnrMeasurementPolicy, SnrReport, TransientMode, estimate_snr

ROW_STREAM = 0  # reserved row index in the per-trial seed


@dataclass(frozen=True)
class SimulationConfig:
    source: SourceSpec = field(default_factory=SourceSpec)
    amplifier: AmplifierSpec = field(default_factory=AmplifierSpec)
    thermal: ThermalNoiseSpec = field(default_factory=lambda: ThermalNoiseSpec(10e3, 300.0))
    shot_enabled: bool = False
    shot: ShotNoiseInjection = field(default_factory=ShotNoiseInjection)
    filter: FilterSpec = field(
        default_factory=lambda: FilterSpec(FilterFamily.BUTTERWORTH, 1, 600.0, 100e3, 0.5, 30.0)
    )
    sample_rate_hz: float = 100e3
    duration_s: float = 2.0
    seed: int = 0
    trials: int = 32
    policy: SnrMeasurementPolicy = field(default_factory=SnrMeasurementPolicy)

    def __post_init__(self):
        if self.filter.sample_rate_hz != self.sample_rate_hz:
            raise ValueError("filter.sample_rate_hz: must equal sample_rate_hz")
        if int(self.trials) != self.trials or self.trials < 1:
            raise ValueError("trials: must be an integer >= 1")
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed: must be an unsigned 64-bit integer")
        if not self.sample_rate_hz > 2 * self.source.frequency_hz:
            raise ValueError("sample_rate_hz: violates Nyquist for the source frequency")
        periods = self.duration_s * self.source.frequency_hz
        if periods < self.policy.min_periods:
            raise ValueError(
                f"duration_s: {self.duration_s} s holds {periods:g} periods, "
                f"fewer than min_periods={self.policy.min_periods}"
            )

    @property
    def n_samples(self):
        return int(round(self.duration_s * self.sample_rate_hz))

    def with_filter(self, **changes):
        return replace(self, filter=replace(self.filter, **changes))

    def with_mode(self, mode):
        return replace(self, policy=replace(self.policy, transient_mode=TransientMode(mode)))


@dataclass(frozen=True)
class TrialResult:
    snr_before_db: float
    snr_after_db: float

    @property
    def improvement_db(self):
        return self.snr_after_db - self.snr_before_db


@dataclass(frozen=True)
class SweepRow:
    axis_value: object
    snr_before_db: float
    snr_after_db: float
    improvement_db: float
    ci_halfwidth_db: float

    @classmethod
    def from_report(cls, value, rep):
        return cls(value, rep.snr_before_db, rep.snr_after_db, rep.improvement_db, rep.ci_halfwidth_db)


@dataclass
class SweepResult:
    axis_name: str
    rows: List[SweepRow]

    @property
    def axis(self):
        return [r.axis_value for r in self.rows]

    @property
    def improvements(self):
        return np.array([r.improvement_db for r in self.rows])

    @property
    def before(self):
        return np.array([r.snr_before_db for r in self.rows])

    @property
    def after(self):
        return np.array([r.snr_after_db for r in self.rows])


def trial_seed(master_seed, trial_index, row_index=ROW_STREAM):
    return (int(master_seed), int(trial_index), int(row_index))


def run_once(config, trial_index, filt=None):
    """One noise realisation: SNR at the collector, then after the filter.

    In ``discard`` mode the filtered record drops the first
    :func:`filters.transient_length` samples; the unfiltered record is
    always measured whole.
    """
    filt = filters.design(config.filter) if filt is None else filt
    chain = synthesize_chain(
        config.source,
        config.amplifier,
        config.thermal,
        config.sample_rate_hz,
        config.n_samples,
        trial_seed(config.seed, trial_index),
        shot=config.shot if config.shot_enabled else None,
    )
    f, fs, pol = config.source.frequency_hz, config.sample_rate_hz, config.policy
    before = estimate_snr(chain.noisy, f, fs, pol)
    y = filters.apply(filt, chain.noisy)
    if pol.transient_mode is TransientMode.DISCARD:
        y = y[filters.transient_length(filt) :]
    return TrialResult(before, estimate_snr(y, f, fs, pol))


def summarize(results):
    """Fold trial results into a report; order of ``results`` does not matter."""
    n = len(results)
    if n < 1:
        raise ValueError("need at least one trial")
    before = math.fsum(r.snr_before_db for r in results) / n
    after = math.fsum(r.snr_after_db for r in results) / n
    imp = [r.improvement_db for r in results]
    if n > 1:
        mean = math.fsum(imp) / n
        std = math.sqrt(math.fsum((v - mean) ** 2 for v in imp) / (n - 1))
        ci = 1.96 * std / math.sqrt(n)
    else:
        ci = 0.0
    return SnrReport(before, after, after - before, n, ci)


def run_trials(config, filt=None, workers=1):
    filt = filters.design(config.filter) if filt is None else filt
    indices = range(config.trials)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda t: run_once(config, t, filt), indices))
    return [run_once(config, t, filt) for t in indices]


def run_monte_carlo(config, filt=None, workers=1):
    return summarize(run_trials(config, filt, workers))


def _strictly_increasing(values, name):
    vals = list(values)
    if not vals:
        raise ValueError(f"{name}: need at least one value")
    if any(b <= a for a, b in zip(vals, vals[1:])):
        raise ValueError(f"{name}: values must be strictly increasing")
    return vals


def sweep_cutoff(config, cutoffs, workers=1):
    cutoffs = _strictly_increasing(cutoffs, "cutoffs")
    # build every spec before running anything so a bad cutoff fails fast
    configs = [config.with_filter(cutoff_hz=float(fc)) for fc in cutoffs]
    rows = [SweepRow.from_report(fc, run_monte_carlo(c, workers=workers)) for fc, c in zip(cutoffs, configs)]
    return SweepResult("cutoff_hz", rows)


def sweep_order(config, orders, workers=1):
    orders = _strictly_increasing(orders, "orders")
    configs = [config.with_filter(order=int(n)) for n in orders]
    rows = [SweepRow.from_report(n, run_monte_carlo(c, workers=workers)) for n, c in zip(orders, configs)]
    return SweepResult("order", rows)


def compare_families(config, families, workers=1):
    fams = [FilterFamily.parse(f) for f in families]
    if len(set(fams)) != len(fams):
        raise ValueError("families: duplicates are not allowed")
    configs = [config.with_filter(family=f) for f in fams]
    rows = [SweepRow.from_report(f.value, run_monte_carlo(c, workers=workers)) for f, c in zip(fams, configs)]
    return SweepResult("family", rows)


def transient_comparison(config, orders, workers=1):
    """The order sweep measured with and without the filter start-up transient."""
    return {
        mode.value: sweep_order(config.with_mode(mode), orders, workers)
        for mode in (TransientMode.DISCARD, TransientMode.INCLUDE)
    }


def predicted_improvement_db(filt, signal_freq_hz, sample_rate_hz):
    """Steady-state SNR gain of ``filt`` on a tone in white noise.

    ``10 log10((fs/2) / ENB) + 20 log10(|H(f_sig)| / |H|_peak)``.
    """
    enb = filters.equivalent_noise_bandwidth(filt, sample_rate_hz)
    h_sig = abs(filters.frequency_response(filt, signal_freq_hz, sample_rate_hz))
    peak = filters.peak_gain(filt, sample_rate_hz)
    return 10 * math.log10(sample_rate_hz / 2 / enb) + 20 * math.log10(h_sig / peak)


@dataclass(frozen=True)
class ResistorRow:
    resistance_ohm: float
    base_current_amp: float
    thermal_rms_volt: float
    shot_rms_amp: float


def sweep_base_resistor(r_values, bias=BiasModel(), temperature_kelvin=300.0, bandwidth_hz=10e3):
    """Thermal and shot noise against the base resistor of a fixed-bias stage."""
    rows = []
    for r in r_values:
        if not r > 0:
            raise ValueError("base resistor values must be > 0")
        ib = base_current_from_bias(replace(bias, base_resistor_ohm=float(r)))
        rows.append(
            ResistorRow(
                float(r),
                ib,
                thermal_noise_rms(ThermalNoiseSpec(r, temperature_kelvin, bandwidth_hz)),
                shot_noise_rms(ShotNoiseSpec(ib, bandwidth_hz)),
            )
        )
    return rows


def resistor_crossing(bias=BiasModel(), temperature_kelvin=300.0, transresistance_ohm=1.0):
    """Base resistance where thermal voltage equals ``transresistance * shot current``.

    Thermal noise grows as ``sqrt(R)`` and fixed-bias shot noise falls as
    ``1/sqrt(R)``, so the crossing is unique and independent of bandwidth:
    ``R = r_t * sqrt(q (V_CC - V_BE) / (2 k T))``. The default
    ``transresistance_ohm=1`` compares the two in plain SI magnitudes.
    """
    dv = bias.vcc_volt - bias.vbe_volt
    return transresistance_ohm * math.sqrt(ELECTRON_CHARGE_Q * dv / (2.0 * BOLTZMANN_K * temperature_kelvin))


__all__ = [
    "ResistorRow",
    "SimulationConfig",
    "SweepResult",
    "SweepRow",
    "TrialResult",
    "compare_families",
    "predicted_improvement_db",
    "resistor_crossing",
    "run_monte_carlo",
    "run_once",
    "run_trials",
    "summarize",
    "sweep_base_resistor",
    "sweep_cutoff",
    "sweep_order",
    "transient_comparison",
    "trial_seed",
]
