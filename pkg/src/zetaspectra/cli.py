"""Command-line pipeline: events -> indicator series -> spectrum -> analyses.

Every figure-worthy intermediate is emitted as CSV; a JSON manifest records
the emitted files, row counts, property-check verdicts and versions. Logs go
to stderr, data only to files. Exit status: 0 all checks pass, 1 a check
failed, 2 bad usage.
"""

from __future__ import annotations

import argparse
import platform
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .analysis import (detect_peaks, fermat_spiral, frequency_ratio_series,
                       pnt_ratio, reciprocal_series, reconstruct)
from .emit import (write_manifest, write_peaks_csv, write_pnt_csv,
                   write_ratios_csv, write_recon_csv, write_series_csv,
                   write_spectrum_csv, write_spiral_csv)
from .grid import GridSpec, MangoldtSeries, build_series
from .numtheory import (EventKind, EventSequence, EventSource, find_zeros,
                        load_zeros, sieve_primes, synthetic_train)
from .spectral import (conjugate_symmetry_check, dft, direct_bins,
                       parseval_check, periodicity_check)

EMIT_CHOICES = ("series", "spectrum", "spiral", "peaks", "recon", "ratios", "pnt")
SOURCES = ("zeros-computed", "zeros-file", "primes", "synthetic")
PNT_CHECKPOINTS = (10 ** 2, 10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6)
# the shifted-sum periodicity check costs O(N) per bin; cap the bin set
PERIODICITY_BIN_CAP = 4096


class ConfigError(ValueError):
    """Invalid run configuration (maps to exit status 2)."""


@dataclass
class RunConfig:
    source: str = "zeros-computed"
    t_max: float | None = None  # default 100 where a bound is needed
    limit: int = 100
    gap: float = 10.0
    delta: float = 1.0
    length: int | None = None
    zero_file: str | None = None
    out_dir: str = "out"
    emit: tuple[str, ...] = EMIT_CHOICES
    k_terms: int | str = "all"
    threshold_fraction: float = 0.5
    z_values: tuple[int, ...] = (1, 2, 3)
    tol: float = 1e-9

    def validate(self) -> None:
        if self.source not in SOURCES:
            raise ConfigError(f"unknown source {self.source!r}")
        if self.source == "zeros-file" and not self.zero_file:
            raise ConfigError("source zeros-file requires --zero-file")
        if self.source != "zeros-file" and self.zero_file:
            raise ConfigError("--zero-file only applies to source zeros-file")
        if self.t_max is not None and self.t_max <= 0.0:
            raise ConfigError(f"t-max must be positive, got {self.t_max}")
        if self.limit < 2:
            raise ConfigError(f"limit must be >= 2, got {self.limit}")
        if self.gap <= 0.0:
            raise ConfigError(f"gap must be positive, got {self.gap}")
        if self.delta <= 0.0:
            raise ConfigError(f"delta must be positive, got {self.delta}")
        if self.length is not None and self.length < 2:
            raise ConfigError(f"length must be >= 2, got {self.length}")
        unknown = set(self.emit) - set(EMIT_CHOICES)
        if unknown:
            raise ConfigError(f"unknown emit names: {sorted(unknown)}")
        if self.k_terms != "all":
            try:
                k = int(self.k_terms)
            except (TypeError, ValueError):
                raise ConfigError(
                    f"k-terms must be an integer or 'all', got {self.k_terms!r}"
                ) from None
            if k < 1:
                raise ConfigError(f"k-terms must be >= 1, got {k}")
            self.k_terms = k
        if not 0.0 < self.threshold_fraction <= 1.0:
            raise ConfigError(
                f"threshold must be in (0, 1], got {self.threshold_fraction}")
        if any(z < 1 for z in self.z_values):
            raise ConfigError(f"z values must be >= 1, got {self.z_values}")
        if self.tol <= 0.0:
            raise ConfigError(f"tol must be positive, got {self.tol}")


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


def _build_events(config: RunConfig) -> EventSequence:
    if config.source == "zeros-computed":
        t_max = config.t_max if config.t_max is not None else 100.0
        _log(f"computing zeta zeros up to t = {t_max}")
        return find_zeros(0.0, t_max)
    if config.source == "zeros-file":
        _log(f"loading zeros from {config.zero_file}")
        events = load_zeros(config.zero_file)
        if config.t_max is None:
            return events
        keep = events.events[events.events <= config.t_max]
        return EventSequence(keep, EventKind.ZETA_ZEROS, EventSource.FILE)
    if config.source == "primes":
        _log(f"sieving primes up to {config.limit}")
        return sieve_primes(config.limit)
    if config.length is not None:
        top = (config.length - 1) * config.delta
    else:
        top = config.t_max if config.t_max is not None else 100.0
    _log(f"synthetic impulse train, gap {config.gap}, up to {top}")
    return synthetic_train(config.gap, top)


def _checks(series: MangoldtSeries, spectrum, config: RunConfig) -> list[dict]:
    n = series.grid.length
    if n <= PERIODICITY_BIN_CAP:
        bins = None
    else:
        bins = np.unique(np.linspace(0, n - 1, PERIODICITY_BIN_CAP).astype(int))
        _log(f"periodicity check restricted to {bins.size} of {n} bins")
    checks = []
    for report in periodicity_check(series, list(config.z_values),
                                    tol=config.tol, bins=bins):
        checks.append({"name": f"periodicity_z{report.z}",
                       "pass": report.passed,
                       "max_error": report.max_abs_diff})
    sym = conjugate_symmetry_check(spectrum, tol=config.tol)
    checks.append({"name": "conjugate_symmetry", "pass": sym.passed,
                   "max_error": sym.max_asymmetry})
    par = parseval_check(series, spectrum, tol=config.tol)
    checks.append({"name": "parseval", "pass": par.passed,
                   "max_error": par.rel_error})
    return checks


def run(config: RunConfig) -> int:
    """Execute the pipeline; returns the process exit status."""
    config.validate()
    out_dir = Path(config.out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise ConfigError(f"cannot create output directory {out_dir}: {exc}")

    events = _build_events(config)
    if config.length is not None:
        grid = GridSpec(delta=config.delta, length=config.length)
    else:
        grid = GridSpec.for_events(events, delta=config.delta)
    _log(f"{len(events)} events on a grid of {grid.length} samples "
         f"(delta {grid.delta})")

    series = build_series(events, grid)
    spectrum = dft(series)
    checks = _checks(series, spectrum, config)

    files = []

    def emitted(name: str, rows: int) -> None:
        files.append({"name": name, "rows": rows})
        _log(f"wrote {name} ({rows} rows)")

    if "series" in config.emit:
        emitted("series.csv", write_series_csv(out_dir / "series.csv", series))
    if "spectrum" in config.emit:
        emitted("spectrum.csv",
                write_spectrum_csv(out_dir / "spectrum.csv", spectrum))
    if "spiral" in config.emit:
        emitted("spiral.csv",
                write_spiral_csv(out_dir / "spiral.csv", fermat_spiral(spectrum)))
    if "peaks" in config.emit:
        peaks = detect_peaks(spectrum, config.threshold_fraction)
        emitted("peaks.csv", write_peaks_csv(out_dir / "peaks.csv", peaks))
    if "recon" in config.emit:
        result = reconstruct(spectrum, config.k_terms, original=series.values)
        emitted("recon.csv",
                write_recon_csv(out_dir / "recon.csv", series, result))
    if "ratios" in config.emit:
        ratios = frequency_ratio_series(spectrum)
        recips = reciprocal_series(spectrum)
        emitted("ratios.csv",
                write_ratios_csv(out_dir / "ratios.csv", ratios, recips))
    if "pnt" in config.emit:
        checkpoints = [(x, len(sieve_primes(x)), pnt_ratio(x))
                       for x in PNT_CHECKPOINTS]
        emitted("pnt.csv", write_pnt_csv(out_dir / "pnt.csv", checkpoints))

    manifest = {
        "config_echo": {
            "source": config.source,
            "t_max": config.t_max,
            "limit": config.limit,
            "gap": config.gap,
            "delta": config.delta,
            "length": grid.length,
            "zero_file": config.zero_file,
            "out_dir": str(out_dir),
            "emit": list(config.emit),
            "k_terms": config.k_terms,
            "threshold_fraction": config.threshold_fraction,
            "z_values": list(config.z_values),
            "tol": config.tol,
        },
        "files": files,
        "checks": checks,
        "versions": {
            "zetaspectra": __version__,
            "numpy": np.__version__,
            "python": platform.python_version(),
        },
    }
    write_manifest(out_dir / "manifest.json", manifest)
    _log(f"wrote manifest.json ({len(files)} files, {len(checks)} checks)")

    failed = [c for c in checks if not c["pass"]]
    for c in failed:
        _log(f"CHECK FAILED: {c['name']} max_error {c['max_error']:.3e} "
             f"(tol {config.tol})")
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# Self test
# ---------------------------------------------------------------------------

def _selftest_fixtures() -> list[MangoldtSeries]:
    rng = np.random.default_rng(20240917)
    fixtures = []
    for n in (64, 97):
        marks = np.sort(rng.choice(n, size=n // 6, replace=False))
        values = np.zeros(n)
        values[marks] = 1.0
        fixtures.append(MangoldtSeries(values=values,
                                       grid=GridSpec(delta=1.0, length=n),
                                       marked_indices=frozenset(int(m) for m in marks)))
    train = np.zeros(60)
    train[::6] = 1.0
    fixtures.append(MangoldtSeries(values=train,
                                   grid=GridSpec(delta=0.5, length=60),
                                   marked_indices=frozenset(range(0, 60, 6))))
    return fixtures


def selftest(corrupt: str | None = None) -> int:
    """Run the embedded invariant suites on built-in fixtures.

    ``corrupt`` injects a fault into the named suite's data so its detector
    must report a failure (used to verify the detectors themselves).
    """
    fixtures = _selftest_fixtures()
    tol = 1e-9
    failures = []

    def verdict(name: str, max_err: float, bound: float) -> None:
        ok = max_err < bound
        if not ok:
            failures.append(name)
        print(f"{name}: {'pass' if ok else 'FAIL'} (max error {max_err:.3e}, "
              f"bound {bound:.1e})")

    err = 0.0
    for s in fixtures:
        spec = dft(s)
        bins = spec.bins.copy()
        if corrupt == "round_trip":
            bins[3] += 1e-3
        back = np.fft.ifft(bins).real
        err = max(err, float(np.max(np.abs(back - s.values))))
    verdict("round_trip", err, tol)

    err = 0.0
    for s in fixtures:
        base = direct_bins(s.values, np.arange(s.grid.length, dtype=float))
        if corrupt == "periodicity":
            base[1] += 1e-3
        for z in (1, 2, 3):
            shifted = direct_bins(
                s.values, np.arange(s.grid.length, dtype=float) + z * s.grid.length)
            err = max(err, float(np.max(np.abs(shifted - base))))
    verdict("periodicity", err, tol)

    err = 0.0
    for s in fixtures:
        spec = dft(s)
        bins = spec.bins.copy()
        if corrupt == "symmetry":
            bins[2] += 1e-3
        amp = np.abs(bins)[1:]
        err = max(err, float(np.max(np.abs(amp - amp[::-1]))))
    verdict("symmetry", err, tol)

    err = 0.0
    for s in fixtures:
        spec = dft(s)
        bins = spec.bins.copy()
        if corrupt == "parseval":
            bins[4] += 1e-3
        lhs = float(np.sum(s.values ** 2))
        rhs = float(np.sum(np.abs(bins) ** 2) / bins.size)
        err = max(err, abs(lhs - rhs) / max(lhs, 1.0))
    verdict("parseval", err, tol)

    err = 0.0
    for s in fixtures:
        points = fermat_spiral(dft(s))
        if corrupt == "spiral":
            p = points[5]
            points[5] = type(p)(frequency=p.frequency, x=p.x + 1e-3, y=p.y,
                                radius=p.radius)
        for p in points:
            err = max(err, abs(p.x ** 2 + p.y ** 2 - p.frequency ** 2))
    verdict("spiral", err, 1e-12)

    if failures:
        print(f"selftest FAILED: {', '.join(failures)}")
        return 1
    print("selftest passed")
    return 0


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def _parse_emit(text: str) -> tuple[str, ...]:
    if text == "all":
        return EMIT_CHOICES
    if text in ("none", ""):
        return ()
    names = tuple(part.strip() for part in text.split(",") if part.strip())
    return names


def _parse_z(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad z list: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetaspectra",
        description="Indicator series over zeta zeros or primes, their DFT "
                    "spectra, spectral property checks, and harmonic "
                    "reconstruction.")
    sub = parser.add_subparsers(dest="command")

    runp = sub.add_parser("run", help="execute the pipeline and emit CSV data")
    runp.add_argument("--source", choices=SOURCES, default="zeros-computed",
                      help="event sequence to analyse (default zeros-computed)")
    runp.add_argument("--t-max", type=float, default=None,
                      help="upper ordinate for computed zeros and synthetic "
                           "trains (default 100); clips loaded zero tables "
                           "only when given")
    runp.add_argument("--limit", type=int, default=100,
                      help="prime sieve bound for --source primes (default 100)")
    runp.add_argument("--gap", type=float, default=10.0,
                      help="event spacing for --source synthetic (default 10)")
    runp.add_argument("--delta", type=float, default=1.0,
                      help="sampling period (default 1)")
    runp.add_argument("--length", type=int, default=None,
                      help="sample count; default covers the largest event")
    runp.add_argument("--zero-file", default=None,
                      help="ordinate table for --source zeros-file")
    runp.add_argument("--out", default="out", help="output directory")
    runp.add_argument("--emit", type=_parse_emit, default=EMIT_CHOICES,
                      metavar="LIST",
                      help="comma list from "
                           f"{{{','.join(EMIT_CHOICES)}}}, or all / none "
                           "(default all)")
    runp.add_argument("--k-terms", default="all",
                      help="bins used in the reconstruction (default all)")
    runp.add_argument("--threshold", type=float, default=0.5,
                      help="peak floor as a fraction of the strongest "
                           "non-DC amplitude (default 0.5)")
    runp.add_argument("--z", type=_parse_z, default=(1, 2, 3), metavar="LIST",
                      help="periodicity shift multiples (default 1,2,3)")
    runp.add_argument("--tol", type=float, default=1e-9,
                      help="tolerance for the property checks (default 1e-9)")

    sub.add_parser("selftest",
                   help="run the embedded invariant suites on fixtures")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "selftest":
        return selftest()
    if args.command != "run":
        parser.print_help(sys.stderr)
        return 2
    config = RunConfig(
        source=args.source,
        t_max=args.t_max,
        limit=args.limit,
        gap=args.gap,
        delta=args.delta,
        length=args.length,
        zero_file=args.zero_file,
        out_dir=args.out,
        emit=args.emit,
        k_terms=args.k_terms,
        threshold_fraction=args.threshold,
        z_values=args.z,
        tol=args.tol,
    )
    try:
        return run(config)
    except ConfigError as exc:
        _log(f"usage error: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
