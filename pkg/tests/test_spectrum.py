"""Tests for the two-sided spectrum analyzer and band accounting."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from carrierlab import (
    CarrierConfig,
    ComplexSignal,
    add,
    band_energy,
    band_report,
    conj_mirror_correlation,
    conj_mirror_error,
    dft_two_sided,
    energy,
    multiply,
    occupied_bandwidth,
    occupied_range,
    oscillator,
    peak_frequency,
    real_part,
    scale,
)

FS = 1024.0
N = 1024


def _osc(f, n=N, fs=FS):
    return oscillator(CarrierConfig(f), n, fs)


def _signal(values, fs=FS):
    return ComplexSignal(np.asarray(values, dtype=np.complex128), fs)


complex_arrays = hnp.arrays(
    np.complex128,
    st.integers(min_value=2, max_value=256),
    elements=st.complex_numbers(max_magnitude=1e3, allow_nan=False, allow_infinity=False),
)

real_arrays = hnp.arrays(
    np.float64,
    st.integers(min_value=4, max_value=256),
    elements=st.floats(min_value=-1e3, max_value=1e3, allow_nan=False),
)


class TestDftTwoSided:
    @pytest.mark.parametrize("m", [1, 16, 100])
    @pytest.mark.parametrize("sign", [+1, -1])
    def test_on_bin_tone_concentrates_in_one_bin(self, m, sign):
        f = sign * m * FS / N
        sp = dft_two_sided(_osc(f))
        mags = np.abs(sp.bins)
        peak_idx = int(np.argmax(mags))
        assert sp.freq_axis_hz[peak_idx] == f
        others = np.delete(mags, peak_idx)
        assert np.max(others) / mags[peak_idx] < 1e-10

    def test_real_tone_splits_into_two_half_bins(self):
        f = 64.0
        complex_sp = dft_two_sided(_osc(f))
        real_sp = dft_two_sided(real_part(_osc(f)))
        peak_complex = np.max(np.abs(complex_sp.bins))
        pos = real_sp.bins[real_sp.freq_axis_hz == f][0]
        neg = real_sp.bins[real_sp.freq_axis_hz == -f][0]
        assert abs(pos) == pytest.approx(peak_complex / 2, rel=1e-12)
        assert abs(neg) == pytest.approx(peak_complex / 2, rel=1e-12)

    def test_axis_shape_and_order(self):
        sp = dft_two_sided(_signal(np.ones(8), fs=8.0))
        np.testing.assert_array_equal(sp.freq_axis_hz, np.arange(-4, 4))
        assert sp.resolution_hz == 1.0
        assert sp.n == 8

    def test_odd_length_axis(self):
        sp = dft_two_sided(_signal(np.ones(5), fs=5.0))
        np.testing.assert_array_equal(sp.freq_axis_hz, np.arange(-2, 3))

    def test_too_short_rejected(self):
        with pytest.raises(ValueError):
            dft_two_sided(_signal([1.0]))

    def test_unknown_window_rejected(self):
        with pytest.raises(ValueError):
            dft_two_sided(_osc(4.0), window="hamming")

    def test_hann_window_keeps_parseval_of_windowed_samples(self):
        s = _osc(64.0)
        sp = dft_two_sided(s, window="hann")
        windowed_energy = float(np.sum(np.abs(s.samples * np.hanning(s.n)) ** 2) / FS)
        assert sp.source_energy == pytest.approx(windowed_energy, rel=1e-12)
        spectral = float(np.sum(sp.bin_energies()))
        assert spectral == pytest.approx(sp.source_energy, rel=1e-9)


class TestParseval:
    @given(a=complex_arrays)
    def test_energy_matches_time_domain(self, a):
        s = _signal(a)
        sp = dft_two_sided(s)
        e_time = energy(s)
        e_spec = float(np.sum(sp.bin_energies()))
        assert abs(e_spec - e_time) <= 1e-9 * max(e_time, 1e-300)

    def test_full_range_band_energy_is_total(self):
        s = _signal(np.exp(1j * np.arange(64)) * np.arange(1, 65))
        sp = dft_two_sided(s)
        total = band_energy(sp, -FS / 2, FS / 2)
        assert total == pytest.approx(sp.source_energy, rel=1e-9)


class TestBandEnergy:
    def test_single_bin_interval(self):
        f = 16.0
        sp = dft_two_sided(_osc(f))
        grabbed = band_energy(sp, f - sp.resolution_hz / 2, f + sp.resolution_hz / 2)
        assert grabbed == pytest.approx(sp.source_energy, rel=1e-9)

    def test_empty_band_far_from_content(self):
        sp = dft_two_sided(_osc(16.0))
        far = band_energy(sp, 200.0, 300.0)
        assert far < 1e-10 * sp.source_energy

    def test_inverted_range_rejected(self):
        sp = dft_two_sided(_osc(16.0))
        with pytest.raises(ValueError):
            band_energy(sp, 10.0, -10.0)


class TestBandReport:
    def test_single_tone_is_all_r_band(self):
        report = band_report(dft_two_sided(_osc(32.0)))
        assert report.r_fraction > 1 - 1e-10
        assert report.l_fraction < 1e-10

    def test_real_tone_splits_evenly(self):
        report = band_report(dft_two_sided(real_part(_osc(32.0))))
        assert report.l_fraction == pytest.approx(0.5, abs=1e-6)
        assert report.r_fraction == pytest.approx(0.5, abs=1e-6)

    def test_partition_sums_to_total(self):
        s = _signal(np.exp(0.3j * np.arange(128) ** 1.5))
        report = band_report(dft_two_sided(s))
        assert report.l_band + report.r_band + report.dc == pytest.approx(
            report.total, rel=1e-9
        )
        assert report.l_fraction + report.r_fraction + report.dc / report.total == (
            pytest.approx(1.0, abs=1e-12)
        )

    def test_all_zero_rejected(self):
        with pytest.raises(ValueError):
            band_report(dft_two_sided(_signal(np.zeros(16))))


class TestPeakFrequency:
    @pytest.mark.parametrize("f", [96.0, -96.0])
    def test_tone_peak(self, f):
        assert peak_frequency(dft_two_sided(_osc(f))) == f

    def test_mirror_tie_breaks_negative(self):
        # a real cosine has exactly equal energy at +/- f
        sp = dft_two_sided(real_part(_osc(64.0)))
        assert peak_frequency(sp) == -64.0

    def test_tie_breaks_toward_smaller_absolute_frequency(self):
        s = add(_osc(0.0), _osc(128.0))
        assert peak_frequency(dft_two_sided(s)) == 0.0

    def test_all_zero_rejected(self):
        with pytest.raises(ValueError):
            peak_frequency(dft_two_sided(_signal(np.zeros(8))))


class TestConjugateSymmetry:
    @given(values=real_arrays)
    def test_real_signals_have_mirror_symmetry(self, values):
        if not np.any(values):
            values = values + 1.0
        sp = dft_two_sided(_signal(values))
        assert conj_mirror_error(sp) < 1e-9

    def test_real_signal_correlation_is_one(self):
        rng = np.random.default_rng(11)
        sp = dft_two_sided(_signal(rng.standard_normal(N)))
        assert conj_mirror_correlation(sp) >= 1 - 1e-9

    def test_independent_bands_decorrelate(self):
        rng = np.random.default_rng(5)
        a = _signal(rng.standard_normal(N) + 1j * rng.standard_normal(N))
        b = _signal(rng.standard_normal(N) + 1j * rng.standard_normal(N))
        dual = add(
            multiply(a, _osc(-256.0)),
            multiply(b, _osc(+256.0)),
        )
        assert conj_mirror_correlation(dft_two_sided(dual)) < 0.1


class TestShiftTheorem:
    @pytest.mark.parametrize("m", [1, 5, -17])
    def test_on_bin_shift_rolls_bins(self, m):
        rng = np.random.default_rng(23)
        s = _signal(rng.standard_normal(N) + 1j * rng.standard_normal(N))
        delta = m * FS / N
        shifted = multiply(s, _osc(delta))
        rolled = np.roll(dft_two_sided(s).bins, m)
        got = dft_two_sided(shifted).bins
        peak = np.max(np.abs(rolled))
        assert np.max(np.abs(got - rolled)) / peak < 1e-9


class TestOccupied:
    def test_tone_occupies_single_frequency(self):
        lo, hi = occupied_range(dft_two_sided(_osc(48.0)))
        assert (lo, hi) == (48.0, 48.0)

    def test_two_tones_span(self):
        s = add(_osc(-32.0), _osc(96.0))
        lo, hi = occupied_range(dft_two_sided(s))
        assert (lo, hi) == (-32.0, 96.0)

    def test_bandwidth_of_tone(self):
        assert occupied_bandwidth(_osc(48.0)) == 96.0

    def test_bandwidth_of_silence_is_zero(self):
        assert occupied_bandwidth(_signal(np.zeros(64))) == 0.0

    def test_bad_fraction_rejected(self):
        sp = dft_two_sided(_osc(48.0))
        with pytest.raises(ValueError):
            occupied_range(sp, fraction=0.0)

    def test_zero_spectrum_rejected(self):
        with pytest.raises(ValueError):
            occupied_range(dft_two_sided(_signal(np.zeros(16))))


class TestSpectrumInvariants:
    def test_mismatched_axis_rejected(self):
        from carrierlab import Spectrum

        with pytest.raises(ValueError):
            Spectrum(np.ones(4, dtype=complex), np.arange(3.0), 1.0, 4.0)

    def test_parseval_mismatch_rejected(self):
        from carrierlab import Spectrum

        with pytest.raises(ValueError):
            Spectrum(np.ones(4, dtype=complex), np.arange(-2.0, 2.0), 1.0, 99.0)

    def test_energy_scaling_under_amplitude(self):
        s = _osc(32.0)
        half = dft_two_sided(scale(s, 0.5))
        full = dft_two_sided(s)
        assert float(np.sum(half.bin_energies())) == pytest.approx(
            0.25 * float(np.sum(full.bin_energies())), rel=1e-12
        )
