"""TFE grid accumulation and CSV serialization."""

import math

import numpy as np
import pytest

from tfekit import (
    IFTrack,
    build_tfe,
    export_grid_csv,
    export_track_csv,
    gen_chirp,
    gen_delta,
    if_track,
    load_grid_csv,
    load_track_csv,
)


class TestBuildTfe:
    def test_pure_tone_single_row(self):
        fs = 8000.0
        track = if_track(gen_chirp(1000, 1000, 1.0, fs))  # Fs/8
        grid = build_tfe([track], time_bins=40, freq_bins=50)
        marginal = grid.energy.sum(axis=0)
        row = np.searchsorted(grid.freq_edges, 1000.0, "right") - 1
        assert marginal[row] == pytest.approx(grid.total_energy, rel=1e-9)

    def test_delta_concentrated(self):
        fs, n0 = 1000.0, 1999
        track = if_track(gen_delta(n0, 4000, fs))
        grid = build_tfe([track], time_bins=400, freq_bins=250)
        freq_marginal = grid.energy.sum(axis=0)
        quarter_row = np.searchsorted(grid.freq_edges, fs / 4, "right") - 1
        assert freq_marginal.argmax() == quarter_row
        assert freq_marginal[quarter_row] / freq_marginal.sum() > 0.6
        time_marginal = grid.energy.sum(axis=1)
        impulse_bin = np.searchsorted(grid.time_edges, n0 / fs, "right") - 1
        window = time_marginal[max(impulse_bin - 1, 0) : impulse_bin + 2].sum()
        assert window / time_marginal.sum() > 0.95

    def test_energy_conserved_exactly(self):
        tracks = [if_track(gen_chirp(100, 900, 1.0, 2000.0)),
                  if_track(gen_chirp(300, 500, 1.0, 2000.0))]
        grid = build_tfe(tracks, time_bins=37, freq_bins=101)
        # oracle: compensated summation over raw track energies
        expected = math.fsum(float(v) for tr in tracks for v in tr.energy)
        assert abs(grid.total_energy - expected) <= 1e-10 * expected

    def test_order_invariance(self):
        a = if_track(gen_chirp(100, 900, 1.0, 2000.0))
        b = if_track(gen_chirp(300, 500, 1.0, 2000.0))
        g1 = build_tfe([a, b], 20, 20)
        g2 = build_tfe([b, a], 20, 20)
        assert np.allclose(g1.energy, g2.energy, rtol=0, atol=1e-12 * g1.total_energy)

    def test_refinement_preserves_total(self):
        track = if_track(gen_chirp(100, 900, 1.0, 2000.0))
        base = build_tfe([track], 40, 25).total_energy
        assert build_tfe([track], 80, 25).total_energy == pytest.approx(base, rel=1e-12)
        assert build_tfe([track], 40, 50).total_energy == pytest.approx(base, rel=1e-12)

    def test_boundary_frequencies(self):
        # 0 maps to the lowest bin, Fs/2 to the top bin, out-of-range clamps
        fs = 100.0
        track = IFTrack(np.array([0.0, 50.0, -3.0, 60.0]), np.ones(4), fs)
        grid = build_tfe([track], time_bins=1, freq_bins=10)
        assert grid.energy[0, 0] == 2.0  # 0 Hz and the clamped -3 Hz
        assert grid.energy[0, -1] == 2.0  # Nyquist and the clamped 60 Hz
        assert grid.total_energy == 4.0

    def test_mismatched_tracks_rejected(self):
        a = if_track(gen_chirp(100, 900, 1.0, 2000.0))
        b = if_track(gen_chirp(100, 400, 1.0, 1000.0))
        with pytest.raises(ValueError):
            build_tfe([a, b])
        with pytest.raises(ValueError):
            build_tfe([])
        with pytest.raises(ValueError):
            build_tfe([a], time_bins=0)


class TestTrackCsv:
    def test_row_count(self, tmp_path):
        tracks = [if_track(gen_chirp(100, 900, 1.0, 2000.0)),
                  if_track(gen_chirp(300, 500, 0.5, 2000.0))]
        path = tmp_path / "tracks.csv"
        export_track_csv(tracks, path)
        lines = path.read_text().splitlines()
        assert lines[0] == "time_s,frequency_hz,energy"
        assert len(lines) - 1 == sum(len(t) for t in tracks)

    def test_empty_track_list(self, tmp_path):
        path = tmp_path / "empty.csv"
        export_track_csv([], path)
        assert path.read_text() == "time_s,frequency_hz,energy\n"
        t, f, e = load_track_csv(path)
        assert t.size == f.size == e.size == 0

    def test_round_trip_values(self, tmp_path):
        track = if_track(gen_chirp(100, 900, 1.0, 2000.0))
        path = tmp_path / "t.csv"
        export_track_csv([track], path)
        t, f, e = load_track_csv(path)
        assert np.array_equal(f, track.frequency_hz)
        assert np.array_equal(e, track.energy)
        assert np.array_equal(t, np.arange(len(track)) / track.sample_rate)

    def test_bad_header(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("nope\n1,2,3\n")
        with pytest.raises(ValueError, match="header"):
            load_track_csv(path)


class TestGridCsv:
    def test_round_trip(self, tmp_path):
        track = if_track(gen_chirp(100, 900, 1.0, 2000.0))
        grid = build_tfe([track], 25, 40)
        path = tmp_path / "grid.csv"
        export_grid_csv(grid, path)
        back = load_grid_csv(path)
        assert np.abs(back.energy - grid.energy).max() <= 1e-12 * max(grid.energy.max(), 1.0)
        assert np.array_equal(back.time_edges, grid.time_edges)
        assert np.array_equal(back.freq_edges, grid.freq_edges)

    def test_layout(self, tmp_path):
        track = if_track(gen_chirp(100, 900, 1.0, 2000.0))
        grid = build_tfe([track], 4, 3)
        path = tmp_path / "g.csv"
        export_grid_csv(grid, path)
        lines = path.read_text().splitlines()
        assert lines[0].startswith(",")  # corner then frequency edges
        assert len(lines[0].split(",")) == 1 + 4  # 3 bins -> 4 edges
        assert len(lines) == 1 + 4 + 1  # header + body rows + closing edge
        assert len(lines[1].split(",")) == 1 + 3

    def test_not_a_grid(self, tmp_path):
        path = tmp_path / "x.csv"
        path.write_text("1,2\n3,4\n5\n")
        with pytest.raises(ValueError, match="corner"):
            load_grid_csv(path)
