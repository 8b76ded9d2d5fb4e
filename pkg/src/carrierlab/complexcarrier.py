"""Complex-carrier chain: transmit the full complex product instead of its
real part.

Multiplying by a unit-modulus carrier translates the whole spectrum by the
signed carrier frequency and conserves energy exactly, so modulation and
demodulation are the same operation in opposite directions ("band moves"),
and the negative and positive bands can carry two independent streams at
once.  Band moves compose additively and commute, with zero shift as the
identity and the negated shift as the inverse.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .filters import FilterSpec, apply_filter, design_lowpass
from .signals import CarrierConfig, ComplexSignal, add, multiply, oscillator
from .spectrum import dft_two_sided, energy_is_zero, occupied_bandwidth, occupied_range


def complex_modulate(bb: ComplexSignal, carrier: CarrierConfig) -> ComplexSignal:
    """Shift the baseband to the carrier's signed frequency.

    Energy is conserved and the output occupies a single band (negative for
    a negative carrier, positive for a positive one).
    """
    b = occupied_bandwidth(bb)
    if abs(carrier.frequency_hz) + b / 2 >= bb.sample_rate_hz / 2:
        raise ValueError(
            f"carrier at {carrier.frequency_hz} Hz with baseband width {b} Hz "
            f"violates the Nyquist limit for sample rate {bb.sample_rate_hz} Hz"
        )
    return multiply(bb, oscillator(carrier, bb.n, bb.sample_rate_hz))


def complex_demodulate(cb: ComplexSignal, carrier: CarrierConfig) -> ComplexSignal:
    """Undo ``complex_modulate`` with the conjugate carrier (frequency and
    initial phase both negated).  No filter is involved and no energy is
    lost: the round trip reproduces the baseband to rounding error."""
    inverse = CarrierConfig(-carrier.frequency_hz, -carrier.initial_phase_rad)
    return multiply(cb, oscillator(inverse, cb.n, cb.sample_rate_hz))


def band_move(s: ComplexSignal, delta_hz: float) -> ComplexSignal:
    """Translate the whole spectrum by ``delta_hz`` (zero-phase carrier)."""
    if not energy_is_zero(s) and delta_hz != 0.0:
        lo, hi = occupied_range(dft_two_sided(s))
        nyq = s.sample_rate_hz / 2
        if lo + delta_hz < -nyq or hi + delta_hz >= nyq:
            raise ValueError(
                f"band move by {delta_hz} Hz would push content occupying "
                f"[{lo}, {hi}] Hz past the Nyquist limit"
            )
    return multiply(s, oscillator(CarrierConfig(delta_hz), s.n, s.sample_rate_hz))


@dataclass(frozen=True)
class DualMessage:
    """Two independent streams destined for the negative (stream_a) and
    positive (stream_b) bands, with a spectral guard toward DC."""

    stream_a: ComplexSignal
    stream_b: ComplexSignal
    guard_hz: float = 0.0

    def __post_init__(self) -> None:
        if self.stream_a.n != self.stream_b.n:
            raise ValueError("dual streams must have equal lengths")
        if self.stream_a.sample_rate_hz != self.stream_b.sample_rate_hz:
            raise ValueError("dual streams must share a sample rate")
        if self.guard_hz < 0:
            raise ValueError("guard_hz cannot be negative")


def dual_modulate(msg: DualMessage, f_c: float) -> ComplexSignal:
    """Carry stream A on the negative band and stream B on the positive band
    of a single complex waveform."""
    if not f_c > 0:
        raise ValueError("dual modulation carrier frequency must be positive")
    for name, stream in (("stream_a", msg.stream_a), ("stream_b", msg.stream_b)):
        b = occupied_bandwidth(stream)
        if b + 2 * msg.guard_hz > 2 * f_c:
            raise ValueError(
                f"{name} bandwidth {b} Hz plus guard {msg.guard_hz} Hz does not "
                f"fit a band at +/-{f_c} Hz"
            )
    moved_a = complex_modulate(msg.stream_a, CarrierConfig(-f_c))
    moved_b = complex_modulate(msg.stream_b, CarrierConfig(+f_c))
    return add(moved_a, moved_b)


def dual_demodulate(
    cb: ComplexSignal, f_c: float, lpf: FilterSpec
) -> tuple[ComplexSignal, ComplexSignal]:
    """Recover both streams of a dual-band signal.

    Each branch moves one band to DC and low-pass filters the other away;
    the branches are independent, so their results do not depend on
    evaluation order.
    """
    if not f_c > 0:
        raise ValueError("dual demodulation carrier frequency must be positive")
    b = 0.0
    if not energy_is_zero(cb):
        lo, hi = occupied_range(dft_two_sided(cb))
        b = 2.0 * max(hi - f_c, -lo - f_c, 0.0)
    if lpf.cutoff_hz + lpf.transition_hz > 2 * f_c - b:
        raise ValueError(
            f"low-pass cutoff {lpf.cutoff_hz} Hz + transition {lpf.transition_hz} Hz "
            f"cannot isolate one band at +/-{f_c} Hz (stream width {b} Hz)"
        )
    taps = design_lowpass(lpf, cb.sample_rate_hz)
    recovered_a = apply_filter(band_move(cb, +f_c), taps)
    recovered_b = apply_filter(band_move(cb, -f_c), taps)
    return recovered_a, recovered_b


def evm_db(recovered: ComplexSignal, reference: ComplexSignal) -> float:
    """Error vector magnitude, ``10*log10(err_energy / ref_energy)`` in dB,
    over the samples outside both signals' transient regions."""
    if recovered.n != reference.n:
        raise ValueError("EVM requires signals of equal length")
    if recovered.sample_rate_hz != reference.sample_rate_hz:
        raise ValueError("EVM requires signals at the same sample rate")
    skip = max(recovered.transient, reference.transient)
    if 2 * skip >= recovered.n:
        raise ValueError("no steady-state samples left for EVM")
    r = recovered.samples[skip : recovered.n - skip]
    ref = reference.samples[skip : reference.n - skip]
    ref_energy = float(np.sum(ref.real**2 + ref.imag**2))
    if ref_energy == 0.0:
        raise ValueError("EVM reference signal has zero energy")
    err = r - ref
    err_energy = float(np.sum(err.real**2 + err.imag**2))
    if err_energy == 0.0:
        return float("-inf")
    return float(10.0 * np.log10(err_energy / ref_energy))
