"""Time-frequency-energy grids and their CSV serialization.

Each track sample deposits its energy into exactly one grid cell (no
interpolation), so the grid total always equals the summed track energy
regardless of binning.
"""

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .instfreq import IFTrack

__all__ = [
    "TFEGrid",
    "build_tfe",
    "export_track_csv",
    "load_track_csv",
    "export_grid_csv",
    "load_grid_csv",
]

TRACK_HEADER = "time_s,frequency_hz,energy"


@dataclass(frozen=True)
class TFEGrid:
    """Binned time x frequency energy distribution.

    time_edges has one more entry than the grid's time rows, freq_edges one
    more than its frequency columns; energy[i, j] is the energy deposited
    into time bin i and frequency bin j.
    """

    time_edges: np.ndarray
    freq_edges: np.ndarray
    energy: np.ndarray

    def __post_init__(self):
        te = np.asarray(self.time_edges, dtype=np.float64)
        fe = np.asarray(self.freq_edges, dtype=np.float64)
        e = np.asarray(self.energy, dtype=np.float64)
        if e.shape != (te.size - 1, fe.size - 1):
            raise ValueError(
                f"energy shape {e.shape} inconsistent with {te.size - 1} time bins "
                f"and {fe.size - 1} frequency bins"
            )
        if np.any(e < 0):
            raise ValueError("grid cells must be nonnegative")
        object.__setattr__(self, "time_edges", te)
        object.__setattr__(self, "freq_edges", fe)
        object.__setattr__(self, "energy", e)

    @property
    def total_energy(self) -> float:
        return float(self.energy.sum())


def build_tfe(tracks: list[IFTrack], time_bins: int = 400, freq_bins: int = 250) -> TFEGrid:
    """Accumulate IF tracks into a time x frequency energy grid.

    Sample n of each track deposits energy[n] into the cell containing
    (n/Fs, frequency_hz[n]). The frequency axis spans [0, Fs/2]; values at
    exactly Fs/2 land in the top bin, values at 0 in the lowest, and
    anything outside (possible for conventional-mode tracks) is clamped
    into the boundary bins so energy is conserved exactly.
    """
    if not tracks:
        raise ValueError("need at least one track")
    if time_bins < 1 or freq_bins < 1:
        raise ValueError("bin counts must be at least 1")
    fs = tracks[0].sample_rate
    n = len(tracks[0])
    for tr in tracks:
        if tr.sample_rate != fs or len(tr) != n:
            raise ValueError("all tracks must share sample rate and length")
    t_total = n / fs
    time_edges = np.linspace(0.0, t_total, time_bins + 1)
    freq_edges = np.linspace(0.0, fs / 2, freq_bins + 1)
    grid = np.zeros((time_bins, freq_bins))
    t_idx = np.clip((np.arange(n) / fs / (t_total / time_bins)).astype(int), 0, time_bins - 1)
    for tr in tracks:
        f_idx = np.clip((tr.frequency_hz / ((fs / 2) / freq_bins)).astype(int), 0, freq_bins - 1)
        np.add.at(grid, (t_idx, f_idx), tr.energy)
    return TFEGrid(time_edges, freq_edges, grid)


def export_track_csv(tracks: list[IFTrack], path) -> None:
    """Write tracks as triplet rows: time_s,frequency_hz,energy.

    One row per sample per track, tracks concatenated in order; an empty
    track list produces a header-only file.
    """
    lines = [TRACK_HEADER]
    for tr in tracks:
        t = np.arange(len(tr)) / tr.sample_rate
        lines.extend(
            f"{ti:.17g},{fi:.17g},{ei:.17g}"
            for ti, fi, ei in zip(t, tr.frequency_hz, tr.energy)
        )
    Path(path).write_text("\n".join(lines) + "\n")


def load_track_csv(path) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Read a triplet CSV back as (time_s, frequency_hz, energy) arrays."""
    lines = Path(path).read_text().splitlines()
    if not lines or lines[0].strip() != TRACK_HEADER:
        raise ValueError(f"{path}: missing triplet header {TRACK_HEADER!r}")
    rows = [line.split(",") for line in lines[1:] if line.strip()]
    if not rows:
        return np.array([]), np.array([]), np.array([])
    data = np.array(rows, dtype=np.float64)
    return data[:, 0], data[:, 1], data[:, 2]


def export_grid_csv(grid: TFEGrid, path) -> None:
    """Write a grid CSV: first row the frequency edges, first column the time edges.

    Layout: line 1 is an empty corner field followed by the freq_bins+1
    frequency edges; each body line is one time edge followed by that time
    bin's energy cells; the final line is the closing time edge alone.
    """
    lines = ["," + ",".join(f"{v:.17g}" for v in grid.freq_edges)]
    for i in range(grid.energy.shape[0]):
        cells = ",".join(f"{v:.17g}" for v in grid.energy[i])
        lines.append(f"{grid.time_edges[i]:.17g},{cells}")
    lines.append(f"{grid.time_edges[-1]:.17g}")
    Path(path).write_text("\n".join(lines) + "\n")


def load_grid_csv(path) -> TFEGrid:
    """Read a grid CSV written by :func:`export_grid_csv`."""
    lines = [ln for ln in Path(path).read_text().splitlines() if ln.strip()]
    if len(lines) < 3:
        raise ValueError(f"{path}: not a grid CSV (too few lines)")
    first = lines[0].split(",")
    if first[0] != "":
        raise ValueError(f"{path}: grid CSV must start with an empty corner field")
    freq_edges = np.array(first[1:], dtype=np.float64)
    time_edges = []
    rows = []
    for line in lines[1:-1]:
        fields = line.split(",")
        time_edges.append(float(fields[0]))
        rows.append([float(v) for v in fields[1:]])
    time_edges.append(float(lines[-1]))
    return TFEGrid(np.array(time_edges), freq_edges, np.array(rows))
