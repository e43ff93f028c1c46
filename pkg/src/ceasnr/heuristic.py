"""Butterworth cutoff rule of thumb for post-amplifier filtering."""

import enum
from dataclasses import dataclass, replace
from typing import Optional

BRANCH_EDGE_HZ = 1000.0


class Branch(str, enum.Enum):
    BELOW_1KHZ = "below_1khz"
    AT_OR_ABOVE_1KHZ = "at_or_above_1khz"


@dataclass(frozen=True)
class CutoffRecommendation:
    cutoff_hz: float
    branch: Branch
    order: int
    signal_freq_hz: float
    valid: Optional[bool] = None  # unknown until checked against a sample rate

    @property
    def below_signal(self):
        """True when the rule puts the cutoff at or under the signal itself."""
        return self.cutoff_hz <= self.signal_freq_hz


def recommended_cutoff(filter_order, signal_freq_hz):
    """``2**(N+1) * f`` below 1 kHz, ``2**(N-2) * f`` from 1 kHz up.

    For ``N <= 2`` on the upper branch the result is at or below the
    signal frequency; it is returned as computed and flagged by
    :attr:`CutoffRecommendation.below_signal`.
    """
    if int(filter_order) != filter_order or filter_order < 1:
        raise ValueError("filter order must be an integer >= 1")
    if not signal_freq_hz > 0:
        raise ValueError("signal frequency must be > 0")
    n = int(filter_order)
    if signal_freq_hz < BRANCH_EDGE_HZ:
        return CutoffRecommendation(2.0 ** (n + 1) * signal_freq_hz, Branch.BELOW_1KHZ, n, signal_freq_hz)
    return CutoffRecommendation(2.0 ** (n - 2) * signal_freq_hz, Branch.AT_OR_ABOVE_1KHZ, n, signal_freq_hz)


def validate_recommendation(rec, sample_rate_hz):
    if not sample_rate_hz > 0:
        raise ValueError("sample rate must be > 0")
    return replace(rec, valid=rec.cutoff_hz < sample_rate_hz / 2)
