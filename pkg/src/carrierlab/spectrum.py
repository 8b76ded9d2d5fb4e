"""Two-sided spectral analysis on a signed frequency axis.

The negative half of the axis is the L-band (left/clockwise-rotating
content), the positive half the R-band; the f = 0 bin is reported
separately as DC.  Bin energies are normalized as ``|X_m|^2 / (N * fs)`` so
that spectral energy and the time-domain energy ``sum(|x|^2)/fs`` agree
(Parseval) without per-module fudge factors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .signals import ComplexSignal

WINDOWS = ("none", "hann")


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Two-sided DFT view of a signal.

    ``freq_axis_hz`` ascends from -fs/2 toward +fs/2 in steps of
    ``resolution_hz``; ``source_energy`` is the time-domain energy of the
    analyzed (possibly windowed) samples.
    """

    bins: np.ndarray
    freq_axis_hz: np.ndarray
    resolution_hz: float
    source_energy: float

    def __post_init__(self) -> None:
        bins = np.asarray(self.bins, dtype=np.complex128)
        freqs = np.asarray(self.freq_axis_hz, dtype=np.float64)
        if bins.ndim != 1 or freqs.ndim != 1:
            raise ValueError("bins and freq_axis_hz must be one-dimensional")
        if bins.size != freqs.size:
            raise ValueError("freq_axis_hz length must equal bins length")
        if not self.resolution_hz > 0:
            raise ValueError("resolution_hz must be positive")
        bins = bins.copy()
        bins.setflags(write=False)
        freqs = freqs.copy()
        freqs.setflags(write=False)
        object.__setattr__(self, "bins", bins)
        object.__setattr__(self, "freq_axis_hz", freqs)
        spectral = float(np.sum(self.bin_energies()))
        if self.source_energy > 0 and abs(spectral - self.source_energy) > 1e-9 * self.source_energy:
            raise ValueError("spectral energy does not match source_energy (Parseval violated)")

    @property
    def n(self) -> int:
        return int(self.bins.size)

    @property
    def sample_rate_hz(self) -> float:
        return self.resolution_hz * self.n

    def bin_energies(self) -> np.ndarray:
        b = self.bins
        return (b.real**2 + b.imag**2) / (self.n * self.sample_rate_hz)


@dataclass(frozen=True)
class BandEnergyReport:
    """Energy partition of a spectrum into L-band (f < 0), R-band (f > 0)
    and the DC bin, with fractions of the total."""

    l_band: float
    r_band: float
    dc: float
    total: float
    l_fraction: float
    r_fraction: float


def dft_two_sided(s: ComplexSignal, window: str = "none") -> Spectrum:
    """DFT with the axis centered so negative frequencies precede positive.

    ``window="hann"`` tapers the samples before transforming (useful for
    plotting shaped spectra); exact bin identities need ``"none"``.
    """
    if s.n < 2:
        raise ValueError("spectral analysis needs at least 2 samples")
    if window == "none":
        x = s.samples
    elif window == "hann":
        x = s.samples * np.hanning(s.n)
    else:
        raise ValueError(f"unknown window {window!r}; expected one of {WINDOWS}")
    bins = np.fft.fftshift(np.fft.fft(x))
    freqs = (np.arange(s.n) - s.n // 2) * (s.sample_rate_hz / s.n)
    source_energy = float(np.sum(x.real**2 + x.imag**2) / s.sample_rate_hz)
    return Spectrum(bins, freqs, s.sample_rate_hz / s.n, source_energy)


def band_energy(sp: Spectrum, f_lo: float, f_hi: float) -> float:
    """Energy in the half-open band ``f_lo <= f < f_hi``."""
    if not f_lo < f_hi:
        raise ValueError(f"inverted band: f_lo={f_lo} must be below f_hi={f_hi}")
    mask = (sp.freq_axis_hz >= f_lo) & (sp.freq_axis_hz < f_hi)
    return float(np.sum(sp.bin_energies()[mask]))


def band_report(sp: Spectrum) -> BandEnergyReport:
    """Partition spectral energy into L-band, R-band and DC."""
    energies = sp.bin_energies()
    total = float(np.sum(energies))
    if total <= 0.0:
        raise ValueError("cannot partition an all-zero spectrum")
    freqs = sp.freq_axis_hz
    l_band = float(np.sum(energies[freqs < 0]))
    r_band = float(np.sum(energies[freqs > 0]))
    dc = float(np.sum(energies[freqs == 0]))
    return BandEnergyReport(l_band, r_band, dc, total, l_band / total, r_band / total)


def peak_frequency(sp: Spectrum) -> float:
    """Signed frequency of the maximum-energy bin.

    Ties break toward the smaller |f|, then toward the negative frequency,
    so the result is reproducible across platforms.
    """
    energies = sp.bin_energies()
    peak = energies.max()
    if peak <= 0.0:
        raise ValueError("cannot locate a peak in an all-zero spectrum")
    candidates = sp.freq_axis_hz[energies == peak]
    order = np.lexsort((candidates, np.abs(candidates)))
    return float(candidates[order[0]])


def occupied_range(sp: Spectrum, fraction: float = 0.999) -> tuple[float, float]:
    """Frequency range holding ``fraction`` of the energy.

    Trims up to ``(1 - fraction)/2`` of the total energy from each tail and
    returns the (lowest, highest) surviving bin frequencies.
    """
    if not 0.0 < fraction <= 1.0:
        raise ValueError("fraction must lie in (0, 1]")
    energies = sp.bin_energies()
    total = float(np.sum(energies))
    if total <= 0.0:
        raise ValueError("an all-zero spectrum occupies no band")
    tail = (1.0 - fraction) / 2.0 * total
    fwd = np.cumsum(energies)
    lo = int(np.searchsorted(fwd, tail, side="right"))
    rev = np.cumsum(energies[::-1])
    hi = sp.n - 1 - int(np.searchsorted(rev, tail, side="right"))
    if lo > hi:
        lo = hi = int(np.argmax(energies))
    return float(sp.freq_axis_hz[lo]), float(sp.freq_axis_hz[hi])


def occupied_bandwidth(s: ComplexSignal, fraction: float = 0.999) -> float:
    """Two-sided occupied bandwidth of a (DC-centered) signal: twice the
    largest |f| needed to capture ``fraction`` of the energy.  Zero for an
    all-zero signal."""
    if energy_is_zero(s):
        return 0.0
    lo, hi = occupied_range(dft_two_sided(s), fraction)
    return 2.0 * max(hi, -lo, 0.0)


def energy_is_zero(s: ComplexSignal) -> bool:
    return not np.any(s.samples)


def _mirror_pairs(sp: Spectrum) -> tuple[np.ndarray, np.ndarray]:
    """Bins at (-f, +f) for f = k*resolution, k = 1..kmax."""
    center = sp.n // 2
    kmax = min(center, sp.n - 1 - center)
    if kmax < 1:
        raise ValueError("spectrum too short for mirror comparison")
    neg = sp.bins[center - 1 :: -1][:kmax]
    pos = sp.bins[center + 1 : center + 1 + kmax]
    return neg, pos


def conj_mirror_error(sp: Spectrum) -> float:
    """Max deviation from S(-f) == conj(S(+f)), relative to the peak bin.

    Zero (to rounding) for the spectrum of any real-valued signal.
    """
    neg, pos = _mirror_pairs(sp)
    peak = float(np.max(np.abs(sp.bins)))
    if peak <= 0.0:
        raise ValueError("all-zero spectrum has no mirror structure")
    return float(np.max(np.abs(neg - np.conj(pos))) / peak)


def conj_mirror_correlation(sp: Spectrum) -> float:
    """Normalized correlation between L-band bins and conjugated mirrored
    R-band bins: 1 for real-valued signals, near 0 when the two bands carry
    independent content."""
    neg, pos = _mirror_pairs(sp)
    v = np.conj(pos)
    norm = float(np.linalg.norm(neg) * np.linalg.norm(v))
    if norm == 0.0:
        return 0.0
    return float(np.abs(np.vdot(v, neg)) / norm)
