"""Named end-to-end experiments with machine-checkable verdicts.

Each scenario builds a signal chain, dumps per-stage spectrum CSVs, and
evaluates a fixed set of pass/fail checks at frozen tolerances.  Reports are
plain text, one ``name: measured / threshold / pass|fail`` line per check,
ending in a single ``verdict:`` line, so they diff and grep cleanly in CI.

Everything is deterministic: a configuration (including its seeds) maps to
byte-identical artifacts and report on repeat runs.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, fields, replace
from pathlib import Path

import numpy as np

from .complexcarrier import (
    DualMessage,
    band_move,
    complex_demodulate,
    complex_modulate,
    dual_demodulate,
    dual_modulate,
    evm_db,
)
from .filters import FilterSpec, design_lowpass
from .polarization import (
    ChannelConfig,
    Handedness,
    detect_handedness,
    from_polarized,
    pair_energy,
    to_polarized,
    transmit,
)
from .realcarrier import real_demodulate, real_modulate
from .sigio import fmt, pair_csv_text, signal_csv_text, spectrum_csv_text, taps_csv_text
from .signals import (
    CarrierConfig,
    ComplexSignal,
    Constellation,
    SymbolStream,
    energy,
    generate_baseband,
    multiply,
    oscillator,
    real_part,
)
from .spectrum import band_report, conj_mirror_correlation, conj_mirror_error, dft_two_sided, peak_frequency

SCENARIOS = (
    "fig4",
    "fig5",
    "fig6",
    "fig7",
    "fig9",
    "fig10",
    "group_laws",
    "compare",
    "polarization",
)

SCENARIO_DESCRIPTIONS = {
    "fig4": "real-carrier modulation: two mirrored bands, 50/50 energy split",
    "fig5": "real-carrier demodulation: image at twice the carrier, half-amplitude recovery",
    "fig6": "complex modulation onto the negative band: single-band occupancy, energy conserved",
    "fig7": "dual modulation: independent streams on the negative and positive bands",
    "fig9": "complex modulate/demodulate round trip: lossless to rounding error",
    "fig10": "dual demodulation: both streams recovered, cross-band leakage bounded",
    "group_laws": "frequency-shift composition: additive, commutative, identity, inverse",
    "compare": "real chain vs dual complex chain: amplitude, energy and stream ledger",
    "polarization": "circular-polarization embedding with a noisy two-component channel",
}

_INT_FIELDS = {"n_samples", "seed", "channel_seed"}
_FLOAT_FIELDS = {
    "sample_rate_hz",
    "f_c_hz",
    "symbol_rate_hz",
    "guard_hz",
    "rolloff",
    "cutoff_hz",
    "transition_hz",
    "stopband_atten_db",
    "noise_sigma",
    "crosstalk",
}


@dataclass
class ScenarioConfig:
    """Inputs for one scenario run.

    Defaults put every tone exactly on a DFT bin (power-of-two rate and
    length, integer frequencies) so the chain identities hold at double
    precision.  ``cutoff_hz`` and ``transition_hz`` default to 0.75 and 0.25
    of the carrier frequency.
    """

    scenario: str = "fig9"
    sample_rate_hz: float = 65536.0
    n_samples: int = 65536
    f_c_hz: float = 8192.0
    symbol_rate_hz: float = 1024.0
    constellation: Constellation = Constellation.QPSK
    seed: int = 42
    guard_hz: float = 512.0
    rolloff: float = 0.25
    cutoff_hz: float = 0.0  # 0 -> 0.75 * f_c_hz
    transition_hz: float = 0.0  # 0 -> 0.25 * f_c_hz
    stopband_atten_db: float = 60.0
    noise_sigma: float = 0.05
    crosstalk: float = 0.0
    channel_seed: int = 777

    def __post_init__(self) -> None:
        if isinstance(self.constellation, str):
            self.constellation = Constellation.parse(self.constellation)
        if not self.cutoff_hz:
            self.cutoff_hz = 0.75 * self.f_c_hz
        if not self.transition_hz:
            self.transition_hz = 0.25 * self.f_c_hz

    def validate(self) -> None:
        """Raise ValueError naming the first violated invariant."""
        if self.scenario not in SCENARIOS:
            raise ValueError(f"unknown scenario {self.scenario!r}; see `carrierlab list`")
        if not self.sample_rate_hz > 0:
            raise ValueError("sample_rate_hz must be positive")
        if self.n_samples < 2 or self.n_samples & (self.n_samples - 1):
            raise ValueError("n_samples must be a power of two")
        if not self.f_c_hz > 0:
            raise ValueError("f_c_hz must be positive")
        if not self.symbol_rate_hz > 0:
            raise ValueError("symbol_rate_hz must be positive")
        if self.f_c_hz < 4 * self.symbol_rate_hz:
            raise ValueError("f_c_hz must be at least 4x symbol_rate_hz")
        sps = self.sample_rate_hz / self.symbol_rate_hz
        if sps != int(sps) or int(sps) < 1:
            raise ValueError("sample_rate_hz must be an integer multiple of symbol_rate_hz")
        if self.n_samples % int(sps):
            raise ValueError("n_samples must be a multiple of sample_rate_hz/symbol_rate_hz")
        if not 0.0 <= self.rolloff <= 1.0:
            raise ValueError("rolloff must lie in [0, 1]")
        if self.guard_hz < 0:
            raise ValueError("guard_hz cannot be negative")
        if self.f_c_hz + (1 + self.rolloff) * self.symbol_rate_hz / 2 >= self.sample_rate_hz / 2:
            raise ValueError("f_c_hz plus the shaped bandwidth violates the Nyquist limit")
        spec = self.filter_spec()  # FilterSpec invariants
        if spec.cutoff_hz + spec.transition_hz >= self.sample_rate_hz / 2:
            raise ValueError("cutoff_hz + transition_hz must stay below half the sample rate")
        self.channel_config()  # ChannelConfig invariants
        if self.seed < 0 or self.channel_seed < 0:
            raise ValueError("seeds must be nonnegative")

    @property
    def samples_per_symbol(self) -> int:
        return int(self.sample_rate_hz // self.symbol_rate_hz)

    def filter_spec(self) -> FilterSpec:
        return FilterSpec(self.cutoff_hz, self.transition_hz, self.stopband_atten_db)

    def channel_config(self) -> ChannelConfig:
        return ChannelConfig(self.noise_sigma, self.crosstalk, self.channel_seed)

    def to_text(self) -> str:
        """Canonical flat key = value form; also the config.txt artifact."""
        lines = ["# carrierlab scenario configuration"]
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, Constellation):
                text = value.value
            elif f.name in _FLOAT_FIELDS:
                text = fmt(value)
            else:
                text = str(value)
            lines.append(f"{f.name} = {text}")
        return "\n".join(lines) + "\n"

    def digest(self) -> str:
        """64-bit content hash of the canonical configuration."""
        return hashlib.blake2b(self.to_text().encode(), digest_size=8).hexdigest()

    @classmethod
    def from_mapping(cls, mapping: dict[str, str]) -> "ScenarioConfig":
        kwargs = {}
        valid = {f.name for f in fields(cls)}
        for key, raw in mapping.items():
            if key not in valid:
                raise ValueError(f"unknown configuration key {key!r}")
            if key in _INT_FIELDS:
                kwargs[key] = int(raw)
            elif key in _FLOAT_FIELDS:
                kwargs[key] = float(raw)
            elif key == "constellation":
                kwargs[key] = Constellation.parse(str(raw))
            else:
                kwargs[key] = str(raw)
        return cls(**kwargs)


def parse_config_text(text: str) -> dict[str, str]:
    """Parse the flat ``key = value`` format (``#`` starts a comment)."""
    mapping: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno} is not 'key = value': {raw!r}")
        key, value = line.split("=", 1)
        mapping[key.strip()] = value.strip()
    return mapping


@dataclass(frozen=True)
class Verdict:
    name: str
    measured: str
    threshold: str
    passed: bool


@dataclass
class RunReport:
    """Outcome of one scenario: artifacts written, measured quantities, and
    the pass/fail checks."""

    scenario_id: str
    config_digest: str
    artifacts: list[str]
    metrics: dict[str, float]
    verdicts: list[Verdict]

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def to_text(self) -> str:
        lines = [f"scenario: {self.scenario_id}", f"config_digest: {self.config_digest}"]
        lines.extend(f"artifact: {name}" for name in self.artifacts)
        lines.extend(f"{key}: {fmt(value)}" for key, value in self.metrics.items())
        lines.extend(
            f"{v.name}: {v.measured} / {v.threshold} / {'pass' if v.passed else 'fail'}"
            for v in self.verdicts
        )
        lines.append(f"verdict: {'pass' if self.passed else 'fail'}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "RunReport":
        scenario_id = ""
        config_digest = ""
        artifacts: list[str] = []
        metrics: dict[str, float] = {}
        verdicts: list[Verdict] = []
        final = None
        for raw in text.splitlines():
            if not raw.strip():
                continue
            key, _, rest = raw.partition(": ")
            if not _:
                raise ValueError(f"malformed report line: {raw!r}")
            if key == "scenario":
                scenario_id = rest
            elif key == "config_digest":
                config_digest = rest
            elif key == "artifact":
                artifacts.append(rest)
            elif key == "verdict":
                final = rest
            elif " / " in rest:
                parts = rest.split(" / ")
                if len(parts) != 3 or parts[2] not in ("pass", "fail"):
                    raise ValueError(f"malformed check line: {raw!r}")
                verdicts.append(Verdict(key, parts[0], parts[1], parts[2] == "pass"))
            else:
                metrics[key] = float(rest)
        if not scenario_id or final not in ("pass", "fail"):
            raise ValueError("report is missing its scenario or final verdict line")
        report = cls(scenario_id, config_digest, artifacts, metrics, verdicts)
        if report.passed != (final == "pass"):
            raise ValueError("report's final verdict contradicts its checks")
        return report


def _check_below(name: str, value: float, limit: float) -> Verdict:
    return Verdict(name, fmt(value), f"< {fmt(limit)}", bool(value < limit))


def _check_range(name: str, value: float, lo: float, hi: float) -> Verdict:
    return Verdict(name, fmt(value), f"in [{fmt(lo)}, {fmt(hi)}]", bool(lo <= value <= hi))


def _check_equals(name: str, measured: str, expected: str) -> Verdict:
    return Verdict(name, measured, f"= {expected}", measured == expected)


def _check_count(name: str, value: int, expected: int) -> Verdict:
    return Verdict(name, str(value), f"= {expected}", value == expected)


def _make_baseband(cfg: ScenarioConfig, seed: int) -> ComplexSignal:
    msg = SymbolStream.random(cfg.constellation, cfg.n_samples // cfg.samples_per_symbol, seed)
    return generate_baseband(
        msg,
        cfg.samples_per_symbol,
        "raised_cosine",
        rolloff=cfg.rolloff,
        sample_rate_hz=cfg.sample_rate_hz,
    )


def _steady_pair(x: ComplexSignal, y: ComplexSignal) -> tuple[np.ndarray, np.ndarray]:
    skip = max(x.transient, y.transient)
    if 2 * skip >= x.n:
        raise ValueError("no steady-state samples left for comparison")
    return x.samples[skip : x.n - skip], y.samples[skip : y.n - skip]


def _max_diff(a: ComplexSignal, b: ComplexSignal) -> float:
    return float(np.max(np.abs(a.samples - b.samples)))


def _build_fig4(cfg: ScenarioConfig):
    bb = _make_baseband(cfg, cfg.seed)
    pb = real_modulate(bb, CarrierConfig(cfg.f_c_hz))
    sp_bb = dft_two_sided(bb)
    sp_pb = dft_two_sided(pb)
    report = band_report(sp_pb)
    mirror_err = conj_mirror_error(sp_pb)
    metrics = {
        "energy.baseband": energy(bb),
        "energy.passband": energy(pb),
        "dc_fraction": report.dc / report.total,
        "conj_mirror_correlation": conj_mirror_correlation(sp_pb),
    }
    verdicts = [
        _check_range("l_fraction", report.l_fraction, 0.49, 0.51),
        _check_range("r_fraction", report.r_fraction, 0.49, 0.51),
        _check_below("conj_mirror_error", mirror_err, 1e-9),
    ]
    artifacts = {
        "spectrum_baseband.csv": spectrum_csv_text(sp_bb),
        "spectrum_passband.csv": spectrum_csv_text(sp_pb),
    }
    return metrics, verdicts, artifacts


def _build_fig5(cfg: ScenarioConfig):
    bb = _make_baseband(cfg, cfg.seed)
    pb = real_modulate(bb, CarrierConfig(cfg.f_c_hz))
    lpf = cfg.filter_spec()
    taps = design_lowpass(lpf, cfg.sample_rate_hz)
    mixed = multiply(pb, oscillator(CarrierConfig(-cfg.f_c_hz), pb.n, cfg.sample_rate_hz))
    recovered = real_demodulate(pb, CarrierConfig(-cfg.f_c_hz), lpf)
    conj_path = real_demodulate(pb, CarrierConfig(+cfg.f_c_hz), lpf)

    rec, ref = _steady_pair(recovered, bb)
    half_ref = ref / 2.0
    peak_rel = float(np.max(np.abs(rec - half_ref)) / np.max(np.abs(half_ref)))
    energy_ratio = float(np.sum(np.abs(rec) ** 2) / np.sum(np.abs(ref) ** 2))
    cpath, rpath = _steady_pair(conj_path, recovered)
    conj_err = float(np.max(np.abs(cpath - np.conj(rpath))) / np.max(np.abs(rpath)))

    metrics = {
        "energy.baseband": energy(bb),
        "energy.passband": energy(pb),
        "energy.recovered": energy(recovered),
        "filter.taps": float(taps.size),
    }
    verdicts = [
        _check_below("recovered_peak_rel_err", peak_rel, 1e-3),
        _check_range("recovered_energy_ratio", energy_ratio, 0.245, 0.255),
        _check_below("conjugate_path_err", conj_err, 1e-9),
    ]
    artifacts = {
        "spectrum_passband.csv": spectrum_csv_text(dft_two_sided(pb)),
        "spectrum_mixed_prefilter.csv": spectrum_csv_text(dft_two_sided(mixed)),
        "spectrum_recovered.csv": spectrum_csv_text(dft_two_sided(recovered)),
        "signal_recovered.csv": signal_csv_text(recovered),
        "filter_taps.csv": taps_csv_text(taps),
    }
    return metrics, verdicts, artifacts


def _build_fig6(cfg: ScenarioConfig):
    bb = _make_baseband(cfg, cfg.seed)
    moved = complex_modulate(bb, CarrierConfig(-cfg.f_c_hz))
    sp_moved = dft_two_sided(moved)
    report = band_report(sp_moved)
    e_bb = energy(bb)
    energy_rel_err = abs(energy(moved) - e_bb) / e_bb
    metrics = {
        "energy.baseband": e_bb,
        "energy.modulated": energy(moved),
        "r_fraction": report.r_fraction,
    }
    verdicts = [
        _check_range("l_fraction", report.l_fraction, 0.99, 1.0),
        _check_below("r_fraction", report.r_fraction, 0.01),
        _check_below("modulation_energy_rel_err", energy_rel_err, 1e-12),
    ]
    artifacts = {
        "spectrum_baseband.csv": spectrum_csv_text(dft_two_sided(bb)),
        "spectrum_modulated.csv": spectrum_csv_text(sp_moved),
    }
    return metrics, verdicts, artifacts


def _build_fig7(cfg: ScenarioConfig):
    stream_a = _make_baseband(cfg, cfg.seed)
    stream_b = _make_baseband(cfg, cfg.seed + 1)
    dual = dual_modulate(DualMessage(stream_a, stream_b, cfg.guard_hz), cfg.f_c_hz)
    sp_dual = dft_two_sided(dual)
    report = band_report(sp_dual)
    corr = conj_mirror_correlation(sp_dual)
    metrics = {
        "energy.stream_a": energy(stream_a),
        "energy.stream_b": energy(stream_b),
        "energy.dual": energy(dual),
    }
    verdicts = [
        _check_range("l_fraction", report.l_fraction, 0.45, 0.55),
        _check_range("r_fraction", report.r_fraction, 0.45, 0.55),
        _check_below("conj_mirror_correlation", corr, 0.1),
    ]
    artifacts = {
        "spectrum_stream_a.csv": spectrum_csv_text(dft_two_sided(stream_a)),
        "spectrum_stream_b.csv": spectrum_csv_text(dft_two_sided(stream_b)),
        "spectrum_dual.csv": spectrum_csv_text(sp_dual),
    }
    return metrics, verdicts, artifacts


def _build_fig9(cfg: ScenarioConfig):
    bb = _make_baseband(cfg, cfg.seed)
    carrier_l = CarrierConfig(-cfg.f_c_hz)
    carrier_r = CarrierConfig(+cfg.f_c_hz)
    moved_l = complex_modulate(bb, carrier_l)
    back_l = complex_demodulate(moved_l, carrier_l)
    moved_r = complex_modulate(bb, carrier_r)
    back_r = complex_demodulate(moved_r, carrier_r)
    e_bb = energy(bb)
    metrics = {
        "energy.baseband": e_bb,
        "energy.modulated": energy(moved_l),
        "energy.demodulated": energy(back_l),
    }
    verdicts = [
        _check_below("round_trip_max_err_l", _max_diff(back_l, bb), 1e-12),
        _check_below("round_trip_max_err_r", _max_diff(back_r, bb), 1e-12),
        _check_below("modulation_energy_rel_err", abs(energy(moved_l) - e_bb) / e_bb, 1e-12),
    ]
    artifacts = {
        "spectrum_baseband.csv": spectrum_csv_text(dft_two_sided(bb)),
        "spectrum_modulated.csv": spectrum_csv_text(dft_two_sided(moved_l)),
        "spectrum_demodulated.csv": spectrum_csv_text(dft_two_sided(back_l)),
        "signal_demodulated.csv": signal_csv_text(back_l),
    }
    return metrics, verdicts, artifacts


def _build_fig10(cfg: ScenarioConfig):
    stream_a = _make_baseband(cfg, cfg.seed)
    stream_b = _make_baseband(cfg, cfg.seed + 1)
    lpf = cfg.filter_spec()
    taps = design_lowpass(lpf, cfg.sample_rate_hz)
    dual = dual_modulate(DualMessage(stream_a, stream_b, cfg.guard_hz), cfg.f_c_hz)
    rec_a, rec_b = dual_demodulate(dual, cfg.f_c_hz, lpf)
    evm_a = evm_db(rec_a, stream_a)
    evm_b = evm_db(rec_b, stream_b)

    # cross-stream leakage: transmit A alone, measure what lands in B's branch
    silent = ComplexSignal(np.zeros(stream_b.n), cfg.sample_rate_hz)
    only_a = dual_modulate(DualMessage(stream_a, silent, cfg.guard_hz), cfg.f_c_hz)
    _, leak_branch = dual_demodulate(only_a, cfg.f_c_hz, lpf)
    leak, a_ref = _steady_pair(leak_branch, stream_a)
    leak_db = float(
        10.0 * np.log10(np.sum(np.abs(leak) ** 2) / np.sum(np.abs(a_ref) ** 2))
    )

    metrics = {
        "energy.dual": energy(dual),
        "energy.recovered_a": energy(rec_a),
        "energy.recovered_b": energy(rec_b),
        "filter.taps": float(taps.size),
    }
    verdicts = [
        _check_below("evm_a_db", evm_a, -40.0),
        _check_below("evm_b_db", evm_b, -40.0),
        _check_below("cross_leakage_db", leak_db, -40.0),
    ]
    artifacts = {
        "spectrum_dual.csv": spectrum_csv_text(dft_two_sided(dual)),
        "spectrum_recovered_a.csv": spectrum_csv_text(dft_two_sided(rec_a)),
        "spectrum_recovered_b.csv": spectrum_csv_text(dft_two_sided(rec_b)),
        "filter_taps.csv": taps_csv_text(taps),
    }
    return metrics, verdicts, artifacts


GROUP_LAW_TRIALS = 100


def _build_group_laws(cfg: ScenarioConfig):
    rng = np.random.Generator(np.random.PCG64(cfg.seed))
    f_cap = int(cfg.sample_rate_hz // 8)
    max_add = max_comm = max_ident = max_inv = 0.0
    for _ in range(GROUP_LAW_TRIALS):
        s = _make_baseband(cfg, int(rng.integers(0, 2**63)))
        # integer-Hz shifts stay exactly on the sampling grid, keeping both
        # composition orders bit-comparable in double precision
        f1 = float(rng.integers(-f_cap, f_cap + 1))
        f2 = float(rng.integers(-f_cap, f_cap + 1))
        via = band_move(band_move(s, f1), f2)
        max_add = max(max_add, _max_diff(via, band_move(s, f1 + f2)))
        max_comm = max(max_comm, _max_diff(via, band_move(band_move(s, f2), f1)))
        max_ident = max(max_ident, _max_diff(band_move(s, 0.0), s))
        max_inv = max(max_inv, _max_diff(band_move(band_move(s, f1), -f1), s))

    f0 = cfg.f_c_hz
    tone = oscillator(CarrierConfig(-f0), cfg.n_samples, cfg.sample_rate_hz)
    flipped = band_move(tone, 2 * f0)
    peak = peak_frequency(dft_two_sided(flipped))

    metrics = {"trials": float(GROUP_LAW_TRIALS)}
    verdicts = [
        _check_below("additivity_max_err", max_add, 1e-12),
        _check_below("commutativity_max_err", max_comm, 1e-12),
        _check_below("identity_max_err", max_ident, 1e-12),
        _check_below("inverse_max_err", max_inv, 1e-12),
        Verdict(
            "sign_flip_peak_hz",
            fmt(peak),
            f"= {fmt(f0)}",
            bool(abs(peak - f0) < 1e-9),
        ),
    ]
    artifacts = {
        "spectrum_tone_before.csv": spectrum_csv_text(dft_two_sided(tone)),
        "spectrum_tone_after.csv": spectrum_csv_text(dft_two_sided(flipped)),
    }
    return metrics, verdicts, artifacts


def _build_compare(cfg: ScenarioConfig):
    # both chains draw unit-average-power symbols of the same length, so the
    # configured transmit energy budget is identical
    stream_a = _make_baseband(cfg, cfg.seed)
    stream_b = _make_baseband(cfg, cfg.seed + 1)
    lpf = cfg.filter_spec()
    taps = design_lowpass(lpf, cfg.sample_rate_hz)

    # conventional chain: one stream, real passband
    passband = real_modulate(stream_a, CarrierConfig(cfg.f_c_hz))
    recovered = real_demodulate(passband, CarrierConfig(-cfg.f_c_hz), lpf)
    rec, ref = _steady_pair(recovered, stream_a)
    fit = np.vdot(ref, rec) / np.vdot(ref, ref)
    amplitude_factor = float(np.abs(fit))
    energy_ratio = float(np.sum(np.abs(rec) ** 2) / np.sum(np.abs(ref) ** 2))
    sp_pb = dft_two_sided(passband)
    rpt_pb = band_report(sp_pb)
    real_bands = int(rpt_pb.l_fraction > 0.1) + int(rpt_pb.r_fraction > 0.1)
    corr_real = conj_mirror_correlation(sp_pb)
    real_streams = 1 if corr_real > 0.9 else 2

    # proposed chain: two streams, one complex waveform
    dual = dual_modulate(DualMessage(stream_a, stream_b, cfg.guard_hz), cfg.f_c_hz)
    rec_a, rec_b = dual_demodulate(dual, cfg.f_c_hz, lpf)
    evm_a = evm_db(rec_a, stream_a)
    evm_b = evm_db(rec_b, stream_b)
    sp_dual = dft_two_sided(dual)
    rpt_dual = band_report(sp_dual)
    dual_bands = int(rpt_dual.l_fraction > 0.1) + int(rpt_dual.r_fraction > 0.1)
    corr_dual = conj_mirror_correlation(sp_dual)
    dual_streams = 1 if corr_dual > 0.9 else 2

    metrics = {
        "energy.stream_a": energy(stream_a),
        "energy.stream_b": energy(stream_b),
        "energy.real_tx": energy(passband),
        "energy.real_recovered": energy(recovered),
        "energy.dual_tx": energy(dual),
        "energy.dual_recovered_a": energy(rec_a),
        "energy.dual_recovered_b": energy(rec_b),
        "real_conj_mirror_correlation": corr_real,
        "dual_conj_mirror_correlation": corr_dual,
    }
    verdicts = [
        _check_range("real_amplitude_factor", amplitude_factor, 0.499, 0.501),
        _check_range("real_energy_ratio", energy_ratio, 0.245, 0.255),
        _check_count("real_bands_occupied", real_bands, 2),
        _check_count("real_independent_streams", real_streams, 1),
        _check_below("dual_evm_a_db", evm_a, -40.0),
        _check_below("dual_evm_b_db", evm_b, -40.0),
        _check_count("dual_bands_occupied", dual_bands, 2),
        _check_count("dual_independent_streams", dual_streams, 2),
    ]
    artifacts = {
        "spectrum_real_passband.csv": spectrum_csv_text(sp_pb),
        "spectrum_real_recovered.csv": spectrum_csv_text(dft_two_sided(recovered)),
        "spectrum_dual.csv": spectrum_csv_text(sp_dual),
        "spectrum_dual_recovered_a.csv": spectrum_csv_text(dft_two_sided(rec_a)),
        "spectrum_dual_recovered_b.csv": spectrum_csv_text(dft_two_sided(rec_b)),
        "filter_taps.csv": taps_csv_text(taps),
    }
    return metrics, verdicts, artifacts


def _build_polarization(cfg: ScenarioConfig):
    channel = cfg.channel_config()
    n, fs = cfg.n_samples, cfg.sample_rate_hz
    tone_r = oscillator(CarrierConfig(+cfg.f_c_hz), n, fs)
    tone_l = oscillator(CarrierConfig(-cfg.f_c_hz), n, fs)
    linear = real_part(tone_r)

    received = {}
    for name, sig in (("r", tone_r), ("l", tone_l), ("linear", linear)):
        received[name] = transmit(to_polarized(sig), channel)

    handed = {name: detect_handedness(pair) for name, pair in received.items()}
    round_trip = from_polarized(to_polarized(tone_r))
    bitwise = round_trip.samples.tobytes() == tone_r.samples.tobytes()
    energy_match = pair_energy(to_polarized(tone_r)) == energy(tone_r)

    metrics = {
        "energy.tone": energy(tone_r),
        "energy.pair": pair_energy(to_polarized(tone_r)),
        "channel.noise_sigma": channel.noise_sigma,
        "channel.crosstalk": channel.crosstalk,
    }
    verdicts = [
        _check_equals("handedness_r", handed["r"].value, Handedness.R.value),
        _check_equals("handedness_l", handed["l"].value, Handedness.L.value),
        _check_equals("handedness_linear", handed["linear"].value, Handedness.LINEAR.value),
        _check_equals("roundtrip_bitwise", str(bitwise).lower(), "true"),
        _check_equals("energy_match_exact", str(energy_match).lower(), "true"),
    ]
    artifacts = {
        "pair_transmitted_r.csv": pair_csv_text(received["r"]),
        "spectrum_received_r.csv": spectrum_csv_text(dft_two_sided(from_polarized(received["r"]))),
        "spectrum_received_l.csv": spectrum_csv_text(dft_two_sided(from_polarized(received["l"]))),
        "spectrum_received_linear.csv": spectrum_csv_text(
            dft_two_sided(from_polarized(received["linear"]))
        ),
    }
    return metrics, verdicts, artifacts


_BUILDERS = {
    "fig4": _build_fig4,
    "fig5": _build_fig5,
    "fig6": _build_fig6,
    "fig7": _build_fig7,
    "fig9": _build_fig9,
    "fig10": _build_fig10,
    "group_laws": _build_group_laws,
    "compare": _build_compare,
    "polarization": _build_polarization,
}


def execute_scenario(cfg: ScenarioConfig) -> tuple[RunReport, dict[str, str]]:
    """Run a scenario in memory; returns the report and artifact texts."""
    cfg.validate()
    metrics, verdicts, artifacts = _BUILDERS[cfg.scenario](cfg)
    all_artifacts = {"config.txt": cfg.to_text(), **artifacts}
    report = RunReport(
        scenario_id=cfg.scenario,
        config_digest=cfg.digest(),
        artifacts=list(all_artifacts),
        metrics=metrics,
        verdicts=verdicts,
    )
    return report, all_artifacts


def run_scenario(cfg: ScenarioConfig, out_dir: Path) -> RunReport:
    """Run a scenario and write its artifacts plus report.txt to ``out_dir``."""
    report, artifacts = execute_scenario(cfg)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, text in artifacts.items():
        (out / name).write_text(text)
    (out / "report.txt").write_text(report.to_text())
    return report


def compare_chains(cfg: ScenarioConfig) -> RunReport:
    """Energy/EVM ledger of the real-carrier chain vs the dual complex chain."""
    report, _ = execute_scenario(replace(cfg, scenario="compare"))
    return report


def _parse_artifact(path: Path) -> None:
    from . import sigio

    name = path.name
    if name == "config.txt":
        ScenarioConfig.from_mapping(parse_config_text(path.read_text()))
    elif name.startswith("spectrum"):
        sigio.read_spectrum_csv(path)
    elif name.startswith("signal"):
        sigio.read_signal_csv(path)
    elif name.startswith("pair"):
        sigio.read_pair_csv(path)
    elif name == "filter_taps.csv":
        sigio.read_taps_csv(path)
    else:
        raise ValueError(f"artifact {name} has no known schema")


def _measured_close(stored: str, fresh: str) -> bool:
    try:
        a, b = float(stored), float(fresh)
    except ValueError:
        return stored == fresh
    if a == b:
        return True
    return abs(a - b) <= 1e-9 * max(1.0, abs(a), abs(b))


def verify_run(out_dir: Path) -> tuple[bool, list[str]]:
    """Re-check an existing run: every declared artifact exists and parses,
    and re-executing the stored configuration reproduces every verdict
    (values compared at 1e-9)."""
    out = Path(out_dir)
    messages: list[str] = []
    report_path = out / "report.txt"
    if not report_path.exists():
        return False, [f"missing report: {report_path}"]
    try:
        stored = RunReport.from_text(report_path.read_text())
    except ValueError as exc:
        return False, [f"unreadable report: {exc}"]

    ok = True
    for name in stored.artifacts:
        path = out / name
        if not path.exists():
            ok = False
            messages.append(f"missing artifact: {name}")
            continue
        try:
            _parse_artifact(path)
        except ValueError as exc:
            ok = False
            messages.append(f"artifact {name} failed schema check: {exc}")

    config_path = out / "config.txt"
    if not config_path.exists():
        return False, messages + ["missing artifact: config.txt"]
    try:
        cfg = ScenarioConfig.from_mapping(parse_config_text(config_path.read_text()))
        fresh, _ = execute_scenario(cfg)
    except ValueError as exc:
        return False, messages + [f"stored configuration does not execute: {exc}"]

    if fresh.config_digest != stored.config_digest:
        ok = False
        messages.append("config digest mismatch between report and config.txt")
    if len(fresh.verdicts) != len(stored.verdicts):
        ok = False
        messages.append("verdict count differs from a fresh execution")
    else:
        for old, new in zip(stored.verdicts, fresh.verdicts):
            if old.name != new.name or not _measured_close(old.measured, new.measured):
                ok = False
                messages.append(
                    f"verdict {old.name}: stored {old.measured}, recomputed {new.measured}"
                )
            elif old.passed != new.passed:
                ok = False
                messages.append(f"verdict {old.name}: pass/fail flipped on re-execution")
    for verdict in stored.verdicts:
        if not verdict.passed:
            ok = False
            messages.append(f"verdict {verdict.name} is failing")
    return ok, messages
