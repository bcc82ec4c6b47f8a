"""tfekit: always-positive instantaneous frequency and zero-phase
filter-bank decomposition for time-frequency-energy analysis.

The pipeline: build the analytic signal, unwrap its phase, difference it,
fold negative increments back into [0, pi] rad/sample, and pair the
resulting per-sample frequency with the squared envelope. Signals can
first be split into bands, either by zero-phase spectral masking
(orthogonal components) or by an iterative zero-phase FIR ladder
(energy-preserving, tail-orthogonal components).
"""

from .analytic import (
    AnalyticSignal,
    analytic_signal,
    dft,
    hilbert_kernel,
    hilbert_kernel_fir,
    idft,
    unwrap_phase,
)
from .filterbank import (
    BandPlan,
    Decomposition,
    OrthogonalityReport,
    custom_band_plan,
    dft_decompose,
    plan_from_spec,
    plan_spec_from_json,
    uniform_band_plan,
    verify_orthogonality,
)
from .fmd import (
    FirFilter,
    LinoepReport,
    causal_filter,
    cutoffs_from_spec,
    design_fir,
    fmd_decompose,
    uniform_cutoffs,
    verify_linoep,
    zero_phase_filter,
)
from .instfreq import DiffScheme, IFTrack, conventional_if, if_track, phase_diff, positive_if
from .io import load_csv, load_wav, save_csv
from .signals import (
    NoiseSpec,
    Signal,
    chirp_true_if,
    delay_pad,
    fm_true_if,
    gen_chirp,
    gen_delta,
    gen_fm,
    gen_noise,
    mix,
    remove_mean,
)
from .tfe import TFEGrid, build_tfe, export_grid_csv, export_track_csv, load_grid_csv, load_track_csv

__version__ = "0.1.0"

__all__ = [
    "AnalyticSignal",
    "BandPlan",
    "Decomposition",
    "DiffScheme",
    "FirFilter",
    "IFTrack",
    "LinoepReport",
    "NoiseSpec",
    "OrthogonalityReport",
    "Signal",
    "TFEGrid",
    "analytic_signal",
    "build_tfe",
    "causal_filter",
    "chirp_true_if",
    "conventional_if",
    "custom_band_plan",
    "cutoffs_from_spec",
    "delay_pad",
    "design_fir",
    "dft",
    "dft_decompose",
    "export_grid_csv",
    "export_track_csv",
    "fm_true_if",
    "fmd_decompose",
    "gen_chirp",
    "gen_delta",
    "gen_fm",
    "gen_noise",
    "hilbert_kernel",
    "hilbert_kernel_fir",
    "idft",
    "if_track",
    "load_csv",
    "load_grid_csv",
    "load_track_csv",
    "load_wav",
    "mix",
    "phase_diff",
    "plan_from_spec",
    "plan_spec_from_json",
    "positive_if",
    "remove_mean",
    "save_csv",
    "uniform_band_plan",
    "uniform_cutoffs",
    "unwrap_phase",
    "verify_linoep",
    "verify_orthogonality",
    "zero_phase_filter",
]
