"""
Four low-pass families side by side
===================================

Fourth-order Butterworth, Chebyshev I and II, and elliptic designs at a
1 kHz edge, sampled at 100 kHz. For each one we measure passband ripple,
worst stopband level, transition width and noise bandwidth, then write the
magnitude responses as CSV next to this script.
"""

# %%
import math
from pathlib import Path

import numpy as np

from ceasnr.filters import FilterSpec, design, equivalent_noise_bandwidth, frequency_response, transient_length
from ceasnr.outputs import atomic_write, response_csv

FS, FC, N = 100e3, 1000.0, 4
OUT = Path(__file__).with_name("output")
OUT.mkdir(exist_ok=True)

freqs = np.linspace(0.0, FS / 2, 200_001)

# %%
# The cutoff means different things per family: the -3 dB point for
# Butterworth, the ripple edge for Chebyshev I and elliptic, the stopband
# edge for Chebyshev II.
print(f"{'family':<12} {'ripple dB':>9} {'stop dB':>8} {'f30/f0.5':>9} {'ENB Hz':>8} {'n_t':>6}")
for family in ("butterworth", "chebyshev1", "chebyshev2", "elliptic"):
    filt = design(FilterSpec(family, N, FC, FS, 0.5, 30.0))
    h = frequency_response(filt, freqs, FS)
    mag = np.abs(h)
    passband = mag[freqs <= FC]
    ripple = 20 * math.log10(passband.max() / passband.min())
    f_pass = freqs[np.nonzero(mag >= 10 ** (-0.5 / 20))[0].max()]
    f_stop = freqs[np.nonzero(mag > 10 ** (-30 / 20) * (1 + 1e-9))[0].max() + 1]
    stop_db = 20 * math.log10(mag[freqs >= f_stop].max())
    enb = equivalent_noise_bandwidth(filt, FS)
    print(f"{family:<12} {ripple:9.3f} {stop_db:8.2f} {f_stop / f_pass:9.3f} {enb:8.1f} {transient_length(filt):6d}")
    grid = np.geomspace(10.0, FS / 2, 400)
    atomic_write(str(OUT / f"response_{family}.csv"), response_csv(grid, frequency_response(filt, grid, FS)))

# %%
# The elliptic design buys the narrowest transition with ripple in both
# bands. Its slow poles also have the longest start-up transient.
print(f"responses written to {OUT}")
