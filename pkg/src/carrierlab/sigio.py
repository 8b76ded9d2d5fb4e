"""CSV serialization for signals, spectra, polarized pairs and filter taps.

Floats are written with ``repr``, i.e. the shortest decimal that round-trips
to the identical double, so dumping and re-parsing is exact and two runs of
the same configuration produce byte-identical files.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .polarization import PolarizedPair
from .signals import ComplexSignal
from .spectrum import Spectrum

SIGNAL_HEADER = "index,t_s,re,im"
SPECTRUM_HEADER = "freq_hz,re,im,magnitude,energy"
PAIR_HEADER = "index,t_s,comp_y,comp_z"
TAPS_HEADER = "k,tap"


def fmt(x: float) -> str:
    """Shortest round-trip decimal representation of a double."""
    return repr(float(x))


def signal_csv_text(s: ComplexSignal) -> str:
    t = s.time_axis()
    re = s.samples.real
    im = s.samples.imag
    rows = [SIGNAL_HEADER]
    rows.extend(f"{k},{fmt(t[k])},{fmt(re[k])},{fmt(im[k])}" for k in range(s.n))
    return "\n".join(rows) + "\n"


def spectrum_csv_text(sp: Spectrum) -> str:
    freqs = sp.freq_axis_hz
    re = sp.bins.real
    im = sp.bins.imag
    mag = np.abs(sp.bins)
    energies = sp.bin_energies()
    rows = [SPECTRUM_HEADER]
    rows.extend(
        f"{fmt(freqs[k])},{fmt(re[k])},{fmt(im[k])},{fmt(mag[k])},{fmt(energies[k])}"
        for k in range(sp.n)
    )
    return "\n".join(rows) + "\n"


def pair_csv_text(p: PolarizedPair) -> str:
    t = np.arange(p.n) / p.sample_rate_hz
    rows = [PAIR_HEADER]
    rows.extend(f"{k},{fmt(t[k])},{fmt(p.comp_y[k])},{fmt(p.comp_z[k])}" for k in range(p.n))
    return "\n".join(rows) + "\n"


def taps_csv_text(taps: np.ndarray) -> str:
    rows = [TAPS_HEADER]
    rows.extend(f"{k},{fmt(taps[k])}" for k in range(len(taps)))
    return "\n".join(rows) + "\n"


def write_signal_csv(path: Path, s: ComplexSignal) -> None:
    Path(path).write_text(signal_csv_text(s))


def write_spectrum_csv(path: Path, sp: Spectrum) -> None:
    Path(path).write_text(spectrum_csv_text(sp))


def write_pair_csv(path: Path, p: PolarizedPair) -> None:
    Path(path).write_text(pair_csv_text(p))


def write_taps_csv(path: Path, taps: np.ndarray) -> None:
    Path(path).write_text(taps_csv_text(taps))


def _parse_table(text: str, header: str, what: str) -> np.ndarray:
    lines = text.splitlines()
    if not lines or lines[0] != header:
        raise ValueError(f"malformed {what} CSV: expected header {header!r}")
    width = header.count(",") + 1
    rows = np.empty((len(lines) - 1, width), dtype=np.float64)
    for i, line in enumerate(lines[1:]):
        parts = line.split(",")
        if len(parts) != width:
            raise ValueError(f"malformed {what} CSV: row {i + 1} has {len(parts)} columns")
        try:
            rows[i] = [float(p) for p in parts]
        except ValueError:
            raise ValueError(f"malformed {what} CSV: row {i + 1} is not numeric") from None
    if rows.shape[0] == 0:
        raise ValueError(f"malformed {what} CSV: no data rows")
    return rows


def read_signal_csv(path: Path) -> dict[str, np.ndarray]:
    """Parse a signal dump into columns ``index``, ``t_s``, ``re``, ``im``."""
    rows = _parse_table(Path(path).read_text(), SIGNAL_HEADER, "signal")
    return {"index": rows[:, 0], "t_s": rows[:, 1], "re": rows[:, 2], "im": rows[:, 3]}


def read_spectrum_csv(path: Path) -> dict[str, np.ndarray]:
    rows = _parse_table(Path(path).read_text(), SPECTRUM_HEADER, "spectrum")
    return {
        "freq_hz": rows[:, 0],
        "re": rows[:, 1],
        "im": rows[:, 2],
        "magnitude": rows[:, 3],
        "energy": rows[:, 4],
    }


def read_pair_csv(path: Path) -> dict[str, np.ndarray]:
    rows = _parse_table(Path(path).read_text(), PAIR_HEADER, "polarized pair")
    return {"index": rows[:, 0], "t_s": rows[:, 1], "comp_y": rows[:, 2], "comp_z": rows[:, 3]}


def read_taps_csv(path: Path) -> np.ndarray:
    rows = _parse_table(Path(path).read_text(), TAPS_HEADER, "filter taps")
    return rows[:, 1]
