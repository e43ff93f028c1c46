"""
First-order filters of every family
===================================

At order one the families collapse: Chebyshev I and elliptic become the
same single pole, Chebyshev II has its stopband edge at the cutoff rather
than its passband edge, and Butterworth sits in between.
"""

# %%
from pathlib import Path

from ceasnr.experiments import SimulationConfig, compare_families, predicted_improvement_db
from ceasnr.filters import design
from ceasnr.outputs import atomic_write, sweep_csv

OUT = Path(__file__).with_name("output")
OUT.mkdir(exist_ok=True)
FAMILIES = ["butterworth", "chebyshev1", "chebyshev2", "elliptic"]

config = SimulationConfig(trials=12)
res = compare_families(config, FAMILIES)
for row in res.rows:
    filt = design(config.with_filter(family=row.axis_value).filter)
    pred = predicted_improvement_db(filt, 50.0, config.sample_rate_hz)
    print(
        f"{row.axis_value:<12} measured {row.improvement_db:6.2f} +- {row.ci_halfwidth_db:.2f} dB"
        f"   ENB prediction {pred:6.2f} dB"
    )

# %%
# Chebyshev II wins only because its 600 Hz is a stopband edge, so its
# passband is far narrower than the others at the same nominal cutoff. The
# narrow band also leaves few independent noise samples per record, hence
# its wider confidence interval.
atomic_write(str(OUT / "families_order1.csv"), sweep_csv(res))
