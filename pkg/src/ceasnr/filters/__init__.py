"""Low-pass IIR design from analog prototypes, realised as biquad cascades."""

from .digital import (
    Biquad,
    DigitalFilter,
    FilterFamily,
    FilterSpec,
    apply,
    bilinear,
    coefficient_dump,
    design,
    equivalent_noise_bandwidth,
    frequency_response,
    parse_coefficient_dump,
    peak_gain,
    transient_length,
    zpk_to_biquads,
)
from .elliptic import ConvergenceError
from .prototypes import (
    AnalogPrototype,
    butterworth_prototype,
    chebyshev1_prototype,
    chebyshev2_prototype,
    elliptic_prototype,
    elliptic_selectivity,
    lowpass_scale,
)

__all__ = [
    "AnalogPrototype",
    "Biquad",
    "ConvergenceError",
    "DigitalFilter",
    "FilterFamily",
    "FilterSpec",
    "apply",
    "bilinear",
    "butterworth_prototype",
    "chebyshev1_prototype",
    "chebyshev2_prototype",
    "coefficient_dump",
    "design",
    "elliptic_prototype",
    "elliptic_selectivity",
    "equivalent_noise_bandwidth",
    "frequency_response",
    "lowpass_scale",
    "parse_coefficient_dump",
    "peak_gain",
    "transient_length",
    "zpk_to_biquads",
]
