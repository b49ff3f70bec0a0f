import math

import numpy as np
import pytest

from zetaspectra import (GridSpec, Spectrum, amplitude_phase,
                         conjugate_symmetry_check, dft, dft_direct,
                         dft_values, idft, idft_complex, parseval_check,
                         periodicity_check)

from conftest import random_indicator, series_from_values
from oracles import dft_brute, idft_brute


def spectrum_from_bins(bins, delta=1.0):
    bins = np.asarray(bins, dtype=complex)
    grid = GridSpec(delta=delta, length=bins.size)
    return Spectrum(bins=bins, freq_step=1.0 / (bins.size * delta),
                    source_grid=grid)


# ---------------------------------------------------------------------------
# Forward transform
# ---------------------------------------------------------------------------

def test_dft_unit_impulse_at_origin():
    series = series_from_values([1, 0, 0, 0, 0, 0, 0, 0])
    spec = dft(series)
    assert np.allclose(spec.bins, np.ones(8), atol=1e-12)


def test_dft_all_zero():
    series = series_from_values(np.zeros(16))
    assert np.all(dft(series).bins == 0)


def test_dft_four_point_case():
    series = series_from_values([1, 0, 1, 0])
    spec = dft(series)
    assert np.allclose(spec.bins, [2, 0, 2, 0], atol=1e-12)
    # brute-force double loop agrees
    assert np.allclose(spec.bins, dft_brute([1, 0, 1, 0]), atol=1e-12)


@pytest.mark.parametrize("n", [4, 16, 128, 1000])
def test_fast_path_matches_direct_sum(n):
    series = random_indicator(n, np.random.default_rng(n))
    fast = dft(series).bins
    direct = dft_direct(series.values, series.grid).bins
    assert np.max(np.abs(fast - direct)) < 1e-9


def test_both_paths_match_brute_oracle():
    series = random_indicator(32, np.random.default_rng(5))
    brute = dft_brute(list(series.values))
    assert np.max(np.abs(dft(series).bins - brute)) < 1e-9
    assert np.max(np.abs(dft_direct(series.values, series.grid).bins - brute)) < 1e-9


def test_frequency_axis():
    series = random_indicator(50, np.random.default_rng(3))
    spec = dft(series)
    n, delta = 50, 1.0
    assert spec.freq_step == 1.0 / (n * delta)
    # frequencies are l * freq_step by construction
    assert np.array_equal(spec.frequencies,
                          spec.freq_step * np.arange(n, dtype=float))
    assert np.allclose(np.diff(spec.frequencies), spec.freq_step, rtol=1e-15)


def test_frequency_axis_respects_delta():
    series = random_indicator(40, np.random.default_rng(4))
    series = series_from_values(series.values, delta=0.25)
    spec = dft(series)
    assert spec.freq_step == pytest.approx(1.0 / (40 * 0.25))


def test_dft_linearity():
    rng = np.random.default_rng(17)
    grid = GridSpec(delta=1.0, length=64)
    for _ in range(5):
        a = (rng.random(64) < 0.2).astype(float)
        b = (rng.random(64) < 0.2).astype(float)
        lhs = dft_values(a + b, grid).bins
        rhs = dft_values(a, grid).bins + dft_values(b, grid).bins
        assert np.max(np.abs(lhs - rhs)) < 1e-9


def test_dc_bin_counts_marks(zeros100_series):
    spec = dft(zeros100_series)
    assert spec.bins[0].real == float(zeros100_series.mark_count)
    assert spec.bins[0].imag == 0.0


def test_parseval(zeros100_series):
    spec = dft(zeros100_series)
    report = parseval_check(zeros100_series, spec)
    assert report.passed
    assert report.time_energy == float(zeros100_series.mark_count)
    assert report.rel_error < 1e-9


# ---------------------------------------------------------------------------
# Inverse transform
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("n", [8, 64, 97, 256])
def test_round_trip(n):
    series = random_indicator(n, np.random.default_rng(n + 1))
    back = idft(dft(series))
    assert np.max(np.abs(back - series.values)) < 1e-9


def test_idft_all_zero_spectrum():
    spec = spectrum_from_bins(np.zeros(8))
    assert np.all(idft(spec) == 0)


def test_idft_four_point_case():
    spec = spectrum_from_bins([2, 0, 2, 0])
    assert np.allclose(idft(spec), [1, 0, 1, 0], atol=1e-12)
    assert np.allclose(idft_brute([2, 0, 2, 0]), [1, 0, 1, 0], atol=1e-12)


def test_idft_imag_residue_small_for_real_series():
    series = random_indicator(81, np.random.default_rng(9))
    residue = np.max(np.abs(idft_complex(dft(series)).imag))
    assert residue < 1e-9


# ---------------------------------------------------------------------------
# Polar decomposition
# ---------------------------------------------------------------------------

def test_amplitude_phase_units():
    spec = spectrum_from_bins([1 + 0j, -2j, 0j])
    polar = amplitude_phase(spec)
    assert polar[0].amplitude == 1.0 and polar[0].phase == 0.0
    assert polar[1].amplitude == 2.0
    assert polar[1].phase == pytest.approx(-math.pi / 2)
    assert polar[2].amplitude == 0.0 and polar[2].phase == 0.0


def test_amplitude_phase_reproduces_bins():
    series = random_indicator(60, np.random.default_rng(21))
    spec = dft(series)
    for value, p in zip(spec.bins, amplitude_phase(spec)):
        assert abs(p.amplitude * np.exp(1j * p.phase) - value) < 1e-12
        assert -math.pi < p.phase <= math.pi


def test_phase_range_half_open():
    polar = amplitude_phase(spectrum_from_bins([-1 + 0j, complex(-1, -0.0)]))
    for p in polar:
        assert p.phase == pytest.approx(math.pi)
        assert p.phase > -math.pi


# ---------------------------------------------------------------------------
# Periodicity
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("z", [1, 3])
def test_periodicity_random_series(z):
    series = random_indicator(101, np.random.default_rng(31))
    (report,) = periodicity_check(series, [z])
    assert report.passed
    assert report.max_abs_diff < 1e-9


def test_periodicity_impulse_n8_z2():
    series = series_from_values([0, 0, 0, 1, 0, 0, 0, 0])
    (report,) = periodicity_check(series, [2], tol=1e-12)
    assert report.max_abs_diff < 1e-12


def test_periodicity_multiple_z():
    series = random_indicator(64, np.random.default_rng(41))
    reports = periodicity_check(series, [1, 2, 3])
    assert [r.z for r in reports] == [1, 2, 3]
    assert all(r.passed for r in reports)


def test_periodicity_rejects_bad_args():
    series = random_indicator(16, np.random.default_rng(1))
    with pytest.raises(ValueError):
        periodicity_check(series, [0])
    with pytest.raises(ValueError):
        periodicity_check(series, [1], tol=0.0)


def test_periodicity_bin_subset():
    series = random_indicator(128, np.random.default_rng(51))
    (report,) = periodicity_check(series, [2], bins=np.array([0, 5, 63, 127]))
    assert report.passed


# ---------------------------------------------------------------------------
# Conjugate symmetry
# ---------------------------------------------------------------------------

def test_symmetry_real_series():
    series = random_indicator(90, np.random.default_rng(61))
    report = conjugate_symmetry_check(dft(series))
    assert report.passed
    assert report.max_asymmetry < 1e-9


def test_symmetry_four_point_case():
    report = conjugate_symmetry_check(spectrum_from_bins([2, 0, 2, 0]))
    assert report.max_asymmetry == 0.0


def test_symmetry_detects_perturbation():
    series = random_indicator(64, np.random.default_rng(71))
    bins = dft(series).bins.copy()
    bins[5] += 1e-3
    report = conjugate_symmetry_check(spectrum_from_bins(bins))
    assert not report.passed
    assert report.max_asymmetry == pytest.approx(
        abs(abs(bins[5]) - abs(bins[64 - 5])), rel=1e-12)
