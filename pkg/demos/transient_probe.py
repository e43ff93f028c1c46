"""
Does a higher order help or hurt?
=================================

A 50 Hz tone through the amplifier, then Butterworth filters of order 1, 4
and 6 at a 600 Hz cutoff. Measured in steady state, a sharper filter passes
less noise and the improvement grows with order. Measured over the whole
record, the start-up transient of a high-order filter lands inside the
measurement window and the ordering reverses.
"""

# %%
from pathlib import Path

from ceasnr.experiments import SimulationConfig, predicted_improvement_db, transient_comparison
from ceasnr.filters import design
from ceasnr.outputs import atomic_write, sweep_csv, sweep_svg

OUT = Path(__file__).with_name("output")
OUT.mkdir(exist_ok=True)
ORDERS = [1, 4, 6]

config = SimulationConfig(trials=16)

# %%
# Steady-state expectation from the noise bandwidth alone.
for n in ORDERS:
    filt = design(config.with_filter(order=n).filter)
    print(f"N={n}: ENB prediction {predicted_improvement_db(filt, 50.0, config.sample_rate_hz):6.2f} dB")

# %%
# Monte-Carlo in both measurement modes, same noise realisations.
results = transient_comparison(config, ORDERS)
for mode, res in results.items():
    print(mode)
    for row in res.rows:
        print(f"  N={row.axis_value}: {row.improvement_db:6.2f} +- {row.ci_halfwidth_db:.2f} dB")
    atomic_write(str(OUT / f"transient_{mode}.csv"), sweep_csv(res))
    atomic_write(str(OUT / f"transient_{mode}.svg"), sweep_svg(res, title=f"transient {mode}"))
