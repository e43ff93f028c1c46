"""
Noise budget of a common-emitter stage
======================================

Thermal noise of a resistor, shot noise of the base current, and what a
gain of 100 does to both. The last part sweeps the base resistor of a
fixed-bias stage and finds where the two noise sources trade places.
"""

# %%
# Thermal noise over a 10 kHz band at room temperature.
from ceasnr.amp import AmplifierSpec, output_noise_rms
from ceasnr.noise import ShotNoiseSpec, ThermalNoiseSpec, shot_noise_rms, thermal_noise_rms

for r in (10e3, 100e3):
    v = thermal_noise_rms(ThermalNoiseSpec(r, 300.0, 10e3))
    print(f"R = {r / 1e3:5.0f} kOhm  ->  {v * 1e6:.3f} uV rms")

# %%
# Referred to the collector, the input noise is simply multiplied by the gain.
v_in = thermal_noise_rms(ThermalNoiseSpec(10e3, 300.0, 10e3))
print(f"at the output: {output_noise_rms(v_in, AmplifierSpec(100.0)) * 1e6:.1f} uV rms")

# %%
# Shot noise of a 10 uA base current. Widening the band tenfold raises the
# noise by sqrt(10).
for w in (1e4, 1e5):
    print(f"W = {w:.0e} Hz  ->  {shot_noise_rms(ShotNoiseSpec(10e-6, w)):.3e} A rms")

# %%
# Fixed bias sets I_B = (Vcc - Vbe) / R_B, so a larger base resistor means
# more thermal noise and less shot noise. The crossing does not depend on
# bandwidth.
import numpy as np

from ceasnr.experiments import resistor_crossing, sweep_base_resistor

rows = sweep_base_resistor(np.geomspace(1.0, 1e6, 13))
print(f"{'R_B (ohm)':>10} {'I_B (A)':>11} {'thermal (V)':>12} {'shot (A)':>11}")
for row in rows:
    print(f"{row.resistance_ohm:10.3g} {row.base_current_amp:11.3e} {row.thermal_rms_volt:12.3e} {row.shot_rms_amp:11.3e}")
print(f"thermal and shot magnitudes cross at R_B = {resistor_crossing():.2f} ohm")
