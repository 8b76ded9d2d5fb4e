"""The conventional chain: modulate with a complex carrier but transmit only
the real part, then demodulate by mixing and low-pass filtering.

Taking the real part splits the baseband's energy into two conjugate-mirrored
bands around +/- the carrier frequency.  Demodulation mixes one of them back
to DC, and the low-pass filter that removes the 2x-carrier image necessarily
discards the other band's half of the energy: the recovered waveform is the
baseband at half amplitude (or its conjugate, depending on the mixing
direction).
"""

from __future__ import annotations

import numpy as np

from .filters import FilterSpec, apply_filter, design_lowpass
from .signals import CarrierConfig, ComplexSignal, multiply, oscillator, real_part
from .spectrum import dft_two_sided, energy_is_zero, occupied_bandwidth, occupied_range


def _passband_bandwidth(s: ComplexSignal, f_center: float, fraction: float = 0.999) -> float:
    """Two-sided width of content sitting around +/- ``f_center``."""
    if energy_is_zero(s):
        return 0.0
    lo, hi = occupied_range(dft_two_sided(s), fraction)
    return 2.0 * max(hi - f_center, -lo - f_center, 0.0)


def real_modulate(bb: ComplexSignal, carrier: CarrierConfig) -> ComplexSignal:
    """Mix the baseband up to the carrier and keep only the real part.

    The output's imaginary part is exactly zero and its spectrum occupies
    both bands around +/- carrier, each holding half the energy.
    """
    f_c = carrier.frequency_hz
    b = occupied_bandwidth(bb)
    if b >= abs(f_c):
        raise ValueError(
            f"baseband bandwidth {b} Hz overlaps the carrier at {f_c} Hz; "
            "real-carrier modulation needs bandwidth below |carrier|"
        )
    if abs(f_c) + b / 2 >= bb.sample_rate_hz / 2:
        raise ValueError(
            f"carrier at {f_c} Hz with baseband width {b} Hz violates the "
            f"Nyquist limit for sample rate {bb.sample_rate_hz} Hz"
        )
    return real_part(multiply(bb, oscillator(carrier, bb.n, bb.sample_rate_hz)))


def real_demodulate(
    passband: ComplexSignal, carrier: CarrierConfig, lpf: FilterSpec
) -> ComplexSignal:
    """Mix a real passband signal by the given carrier and low-pass filter.

    ``carrier.frequency_hz`` is the mixing oscillator's signed frequency:
    mixing a signal that was modulated at +f with a -f carrier recovers
    baseband/2; mixing with +f recovers conj(baseband)/2.  Either way the
    image at twice the carrier is filtered off, discarding half the received
    energy.  The output is group-delay compensated and flags the filter
    transients.
    """
    if np.any(passband.samples.imag != 0.0):
        raise ValueError("real-carrier demodulation expects a real-valued passband signal")
    f_c = abs(carrier.frequency_hz)
    b = _passband_bandwidth(passband, f_c)
    if lpf.cutoff_hz >= 2 * f_c - b:
        raise ValueError(
            f"low-pass cutoff {lpf.cutoff_hz} Hz cannot reject the image at "
            f"{2 * f_c} Hz (passband width {b} Hz)"
        )
    taps = design_lowpass(lpf, passband.sample_rate_hz)
    mixed = multiply(passband, oscillator(carrier, passband.n, passband.sample_rate_hz))
    return apply_filter(mixed, taps)
