"""CSV and manifest emission.

All numeric cells are written with 15 significant digits, '.' decimal
separator and LF line endings, so repeated runs with one configuration are
byte-identical and diffable.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable

from .analysis import (FrequencyRatioReport, PeakReport, ReciprocalReport,
                       ReconstructionResult, SpiralPoint)
from .grid import MangoldtSeries
from .spectral import Spectrum, amplitude_phase

__all__ = [
    "fmt",
    "write_series_csv",
    "write_spectrum_csv",
    "write_spiral_csv",
    "write_peaks_csv",
    "write_recon_csv",
    "write_ratios_csv",
    "write_pnt_csv",
    "write_manifest",
]


def fmt(value: float) -> str:
    """One numeric cell: 15 significant digits, no exponent surprises."""
    return format(float(value), ".15g")


def _write_rows(path: Path, header: str, rows: Iterable[str]) -> int:
    count = 0
    with path.open("w", encoding="utf-8", newline="\n") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(row + "\n")
            count += 1
    return count


def write_series_csv(path: Path, series: MangoldtSeries) -> int:
    grid = series.grid
    rows = (f"{i},{fmt(grid.origin + i * grid.delta)},{fmt(v)}"
            for i, v in enumerate(series.values))
    return _write_rows(path, "index,location,value", rows)


def write_spectrum_csv(path: Path, spectrum: Spectrum) -> int:
    polar = amplitude_phase(spectrum)
    rows = (
        f"{l},{fmt(p.frequency)},{fmt(b.real)},{fmt(b.imag)},"
        f"{fmt(p.amplitude)},{fmt(p.phase)}"
        for l, (b, p) in enumerate(zip(spectrum.bins, polar))
    )
    return _write_rows(path, "l,frequency,re,im,amplitude,phase", rows)


def write_spiral_csv(path: Path, points: list[SpiralPoint]) -> int:
    rows = (f"{l},{fmt(p.frequency)},{fmt(p.x)},{fmt(p.y)}"
            for l, p in enumerate(points))
    return _write_rows(path, "l,f,x,y", rows)


def write_peaks_csv(path: Path, peaks: list[PeakReport]) -> int:
    rows = (f"{p.bin_index},{fmt(p.frequency)},{fmt(p.amplitude)},"
            f"{fmt(p.implied_gap)}" for p in peaks)
    return _write_rows(path, "l,f,amplitude,implied_gap", rows)


def write_recon_csv(path: Path, series: MangoldtSeries,
                    result: ReconstructionResult) -> int:
    rows = (
        f"{n},{fmt(orig)},{fmt(rec)},{fmt(abs(rec - orig))}"
        for n, (orig, rec) in enumerate(zip(series.values, result.values))
    )
    return _write_rows(path, "n,original,reconstructed,abs_error", rows)


def write_ratios_csv(path: Path, ratios: FrequencyRatioReport,
                     reciprocals: ReciprocalReport) -> int:
    # reciprocals run one index further than ratios; the last ratio cell is empty
    def rows():
        for i, recip in enumerate(reciprocals.reciprocals):
            t = i + 1
            ratio = fmt(ratios.ratios[i]) if i < ratios.ratios.size else ""
            yield f"{t},{ratio},{fmt(recip)}"
    return _write_rows(path, "t,ratio,reciprocal", rows())


def write_pnt_csv(path: Path, checkpoints: list[tuple[int, int, float]]) -> int:
    rows = (f"{x},{count},{fmt(ratio)}" for x, count, ratio in checkpoints)
    return _write_rows(path, "x,prime_count,ratio", rows)


def write_manifest(path: Path, manifest: dict) -> None:
    with path.open("w", encoding="utf-8", newline="\n") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=False)
        fh.write("\n")
