"""Noise, filtering and SNR simulation for a common-emitter amplifier chain."""

__version__ = "0.1.0"
