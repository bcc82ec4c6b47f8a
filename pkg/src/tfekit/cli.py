"""Command-line front end: generate fixtures, analyze, decompose, compare.

Subcommands
-----------
gen        write a synthetic fixture to a signal CSV
analyze    IF/TFE analysis of a signal, optionally after decomposition
decompose  split a signal into band components and write them out
compare    run two analysis configs on one input and report side by side

Configuration may come from flags and/or a JSON file (flags win). The
TFESPEC_THREADS environment variable caps worker parallelism; the current
implementation computes sequentially, which respects any cap.
"""

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .filterbank import dft_decompose, plan_from_spec, plan_spec_from_json, verify_orthogonality
from .fmd import cutoffs_from_spec, fmd_decompose, verify_linoep
from .instfreq import DiffScheme, if_track
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
)
from .tfe import build_tfe, export_grid_csv, export_track_csv

DIAGNOSTICS_SCHEMA = "tfekit-diagnostics/1"
COMPARE_SCHEMA = "tfekit-compare/1"

FIXTURES = ("chirp", "fm", "delta", "noise", "chirp-fm-mix", "five-chirps", "chirp-delayed")

FIVE_CHIRP_BANDS = [(500, 1500), (1000, 2000), (1500, 2500), (2000, 3000), (2500, 3500)]


def _fixture_defaults(name: str) -> dict:
    return {
        "chirp": dict(f0=1000.0, f1=2000.0, dur=1.0, fs=8000.0, amp=1.0),
        "fm": dict(fc=780.0, dev=200.0, fm=10.0, dur=1.0, fs=8000.0),
        "delta": dict(n0=1999, length=4000, fs=1000.0),
        "noise": dict(seed=0, mean=0.0, var=1.0, length=10240, fs=100.0),
        "chirp-fm-mix": dict(f0=1000.0, f1=2000.0, fc=780.0, dev=200.0, fm=10.0, dur=1.0, fs=8000.0),
        "five-chirps": dict(dur=2.0, fs=8000.0),
        "chirp-delayed": dict(f0=500.0, f1=1500.0, dur=1.0, delay=0.5, total_dur=1.5, fs=8000.0),
    }[name]


def _fixture_params(name: str, args) -> dict:
    params = _fixture_defaults(name)
    for key in params:
        value = getattr(args, key, None)
        if value is not None:
            params[key] = value
    return params


def make_fixture(name: str, params: dict) -> Signal:
    """Build one of the named synthetic fixtures."""
    p = params
    if name == "chirp":
        return gen_chirp(p["f0"], p["f1"], p["dur"], p["fs"], p["amp"])
    if name == "fm":
        return gen_fm(p["fc"], p["dev"], p["fm"], p["dur"], p["fs"])
    if name == "delta":
        return gen_delta(p["n0"], p["length"], p["fs"])
    if name == "noise":
        return gen_noise(NoiseSpec(p["seed"], p["mean"], p["var"], p["length"]), p["fs"])
    if name == "chirp-fm-mix":
        return mix([
            gen_chirp(p["f0"], p["f1"], p["dur"], p["fs"]),
            gen_fm(p["fc"], p["dev"], p["fm"], p["dur"], p["fs"]),
        ])
    if name == "five-chirps":
        return mix([gen_chirp(f0, f1, p["dur"], p["fs"]) for f0, f1 in FIVE_CHIRP_BANDS])
    if name == "chirp-delayed":
        base = gen_chirp(p["f0"], p["f1"], p["dur"], p["fs"])
        return mix([
            delay_pad(base, 0.0, p["total_dur"]),
            delay_pad(base, p["delay"], p["total_dur"]),
        ])
    raise ValueError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")


def fixture_ridges(name: str, params: dict, n_samples: int) -> list[np.ndarray] | None:
    """Ground-truth IF ridges of a fixture, or None when it has none."""
    p = params
    if name == "chirp":
        return [chirp_true_if(p["f0"], p["f1"], p["dur"], p["fs"])]
    if name == "fm":
        return [fm_true_if(p["fc"], p["dev"], p["fm"], p["dur"], p["fs"])]
    if name == "chirp-fm-mix":
        return [
            chirp_true_if(p["f0"], p["f1"], p["dur"], p["fs"]),
            fm_true_if(p["fc"], p["dev"], p["fm"], p["dur"], p["fs"]),
        ]
    if name == "five-chirps":
        return [chirp_true_if(f0, f1, p["dur"], p["fs"]) for f0, f1 in FIVE_CHIRP_BANDS]
    if name == "delta":
        return [np.full(n_samples, p["fs"] / 4)]
    return None


def _add_fixture_flags(parser: argparse.ArgumentParser) -> None:
    g = parser.add_argument_group("fixture parameters")
    g.add_argument("--f0", type=float, help="chirp start frequency, Hz")
    g.add_argument("--f1", type=float, help="chirp end frequency, Hz")
    g.add_argument("--fc", type=float, help="FM carrier frequency, Hz")
    g.add_argument("--dev", type=float, help="FM frequency deviation, Hz")
    g.add_argument("--fm", type=float, help="FM modulating frequency, Hz")
    g.add_argument("--dur", type=float, help="duration, s")
    g.add_argument("--amp", type=float, help="amplitude")
    g.add_argument("--n0", type=int, help="impulse sample index")
    g.add_argument("--len", dest="length", type=int, help="length in samples")
    g.add_argument("--seed", type=int, help="noise seed")
    g.add_argument("--mean", type=float, help="noise mean")
    g.add_argument("--var", type=float, help="noise variance")
    g.add_argument("--delay", type=float, help="delay of the second copy, s")
    g.add_argument("--total-dur", dest="total_dur", type=float, help="padded frame length, s")


def _add_analysis_flags(parser: argparse.ArgumentParser, prefix: str = "") -> None:
    dash = f"--{prefix}" if prefix else "--"
    dest = prefix.replace("-", "_") if prefix else ""
    g = parser.add_argument_group(f"analysis settings{' (' + prefix.rstrip('-') + ')' if prefix else ''}")
    g.add_argument(f"{dash}method", dest=f"{dest}method", type=str.lower,
                   choices=["none", "dft", "fmd-a", "fmd-b", "causal-fir"])
    g.add_argument(f"{dash}bands", dest=f"{dest}bands", type=int,
                   help="uniform band count")
    g.add_argument(f"{dash}cutoffs", dest=f"{dest}cutoffs",
                   help="comma-separated band cutoffs in Hz, last at Nyquist")
    g.add_argument(f"{dash}plan", dest=f"{dest}plan",
                   help="band plan JSON file")
    g.add_argument(f"{dash}order", dest=f"{dest}order", type=int,
                   help="FIR order for fmd/causal methods (default 256)")
    g.add_argument(f"{dash}scheme", dest=f"{dest}scheme", type=str.lower,
                   choices=["forward", "backward", "central"])
    g.add_argument(f"{dash}if", dest=f"{dest}if_mode", type=str.lower,
                   choices=["positive", "conventional"])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tfekit",
        description="Positive instantaneous frequency and zero-phase filter-bank TFE analysis",
    )
    parser.add_argument("--version", action="version", version=f"tfekit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="write a synthetic fixture to CSV")
    p_gen.add_argument("fixture", choices=FIXTURES)
    p_gen.add_argument("--fs", type=float, help="sample rate, Hz")
    _add_fixture_flags(p_gen)
    p_gen.add_argument("--out", help="output CSV path (default <fixture>.csv)")

    for name, helptext in [
        ("analyze", "IF/TFE analysis with optional decomposition"),
        ("decompose", "split a signal into band components"),
        ("compare", "run two configs on one input"),
    ]:
        p = sub.add_parser(name, help=helptext)
        src = p.add_argument_group("input")
        src.add_argument("--input", help="signal file (.csv or .wav)")
        src.add_argument("--gen", dest="fixture", choices=FIXTURES,
                         help="generate this fixture instead of reading a file")
        src.add_argument("--fs", type=float, help="sample rate, Hz (file override / fixture rate)")
        _add_fixture_flags(p)
        p.add_argument("--out-prefix", default="tfekit", help="prefix for output files")
        if name == "compare":
            p.add_argument("--config-a", help="JSON config for side A")
            p.add_argument("--config-b", help="JSON config for side B")
            _add_analysis_flags(p, "a-")
            _add_analysis_flags(p, "b-")
        else:
            p.add_argument("--config", help="JSON config file; flags win on conflict")
            _add_analysis_flags(p)
        p.add_argument("--time-bins", type=int, default=400)
        p.add_argument("--freq-bins", type=int, default=250)
    return parser


def _load_input(args) -> tuple[Signal, str | None, dict | None]:
    """Resolve the input signal; returns (signal, fixture name, fixture params)."""
    if args.input and args.fixture:
        raise ValueError("give either --input or --gen, not both")
    if args.input:
        path = Path(args.input)
        if path.suffix.lower() == ".wav":
            signal = load_wav(path)
            if args.fs is not None and args.fs != signal.sample_rate:
                signal = Signal(signal.samples, args.fs)
        else:
            signal = load_csv(path, sample_rate=args.fs)
        return signal, None, None
    if args.fixture:
        params = _fixture_params(args.fixture, args)
        if args.fs is not None:
            params["fs"] = args.fs
        return make_fixture(args.fixture, params), args.fixture, params
    raise ValueError("no input: give --input FILE or --gen FIXTURE")


def _settings(args, config_path: str | None, prefix: str = "") -> dict:
    """Merge a JSON config file with command-line flags (flags win)."""
    settings = {
        "method": "none",
        "bands": None,
        "cutoffs": None,
        "plan": None,
        "order": 256,
        "scheme": "forward",
        "if": "positive",
    }
    if config_path:
        loaded = json.loads(Path(config_path).read_text())
        if not isinstance(loaded, dict):
            raise ValueError(f"{config_path}: config must be a JSON object")
        unknown = set(loaded) - set(settings)
        if unknown:
            raise ValueError(f"{config_path}: unknown config keys {sorted(unknown)}")
        settings.update(loaded)
    flag_map = {
        "method": f"{prefix}method",
        "bands": f"{prefix}bands",
        "cutoffs": f"{prefix}cutoffs",
        "plan": f"{prefix}plan",
        "order": f"{prefix}order",
        "scheme": f"{prefix}scheme",
        "if": f"{prefix}if_mode",
    }
    for key, attr in flag_map.items():
        value = getattr(args, attr, None)
        if value is not None:
            settings[key] = value
    return settings


def _resolve_plan_spec(settings: dict) -> dict | None:
    given = [k for k in ("bands", "cutoffs", "plan") if settings.get(k) not in (None, "")]
    if len(given) > 1:
        raise ValueError(f"give only one of --bands/--cutoffs/--plan, got {given}")
    if settings.get("bands") is not None:
        return {"type": "uniform", "bands": int(settings["bands"])}
    if settings.get("cutoffs"):
        cuts = settings["cutoffs"]
        if isinstance(cuts, str):
            cuts = [float(c) for c in cuts.split(",") if c.strip()]
        return {"type": "custom", "cutoffs_hz": [float(c) for c in cuts]}
    if settings.get("plan"):
        if isinstance(settings["plan"], dict):
            return plan_spec_from_json(json.dumps(settings["plan"]))
        return plan_spec_from_json(Path(settings["plan"]).read_text())
    return None


def _run_analysis(signal: Signal, settings: dict) -> dict:
    """Decompose (optionally), track IF per component, and collect diagnostics."""
    method = settings["method"]
    plan_spec = _resolve_plan_spec(settings)
    if method == "none" and plan_spec is not None:
        raise ValueError("method 'none' forbids a band plan; pick a decomposition method")
    if method != "none" and plan_spec is None:
        raise ValueError(f"method {method!r} needs a band plan (--bands, --cutoffs or --plan)")
    scheme = DiffScheme(settings["scheme"])
    if_mode = settings["if"]

    decomposition = None
    if method == "none":
        component_signals = [signal]
    elif method == "dft":
        plan = plan_from_spec(plan_spec, len(signal), signal.sample_rate)
        decomposition = dft_decompose(signal, plan)
        component_signals = [Signal(c, signal.sample_rate) for c in decomposition.components]
    else:
        cutoffs = cutoffs_from_spec(plan_spec, signal.sample_rate)
        part = "B" if method == "fmd-b" else "A"
        if part == "A":
            cutoffs = cutoffs[::-1]
        filtering = "causal" if method == "causal-fir" else "zero-phase"
        decomposition = fmd_decompose(signal, cutoffs, settings["order"], part, filtering)
        component_signals = [Signal(c, signal.sample_rate) for c in decomposition.components]

    tracks = [if_track(s, scheme, if_mode) for s in component_signals]

    total = sum(len(t) for t in tracks)
    negative = sum(int((t.frequency_hz < 0).sum()) for t in tracks)
    diagnostics = {
        "schema": DIAGNOSTICS_SCHEMA,
        "method": method,
        "if_mode": if_mode,
        "scheme": scheme.value,
        "n_samples": len(signal),
        "sample_rate_hz": signal.sample_rate,
        "n_components": len(component_signals),
        "negative_if_fraction": negative / total,
        "reconstruction_error": None,
        "orthogonality": None,
        "linoep": None,
    }
    if decomposition is not None:
        err = np.abs(decomposition.reconstruct() - signal.samples).max()
        diagnostics["reconstruction_error"] = float(err / max(np.abs(signal.samples).max(), 1e-300))
        if method == "dft":
            rep = verify_orthogonality(decomposition)
            diagnostics["orthogonality"] = {
                "max_normalized_cross": rep.max_normalized_cross,
                "energy_ratio": rep.energy_ratio,
            }
        elif method in ("fmd-a", "fmd-b"):
            rep = verify_linoep(decomposition)
            diagnostics["linoep"] = {
                "max_tail_cross": rep.max_tail_cross,
                "energy_ratio": rep.energy_ratio,
            }
    return {"tracks": tracks, "decomposition": decomposition, "diagnostics": diagnostics}


def _ridge_error(tracks, ridges) -> float:
    """Energy-weighted mean distance (Hz) between track samples and the nearest true ridge."""
    total_energy = 0.0
    weighted = 0.0
    for tr in tracks:
        dist = np.min(
            np.stack([np.abs(tr.frequency_hz - r) for r in ridges]), axis=0
        )
        weighted += float(np.dot(dist, tr.energy))
        total_energy += float(tr.energy.sum())
    return weighted / total_energy if total_energy > 0 else 0.0


def cmd_gen(args) -> int:
    params = _fixture_params(args.fixture, args)
    if args.fs is not None:
        params["fs"] = args.fs
    signal = make_fixture(args.fixture, params)
    out = Path(args.out) if args.out else Path(f"{args.fixture}.csv")
    save_csv(signal, out)
    print(f"wrote {out} ({len(signal)} samples at {signal.sample_rate:g} Hz)")
    return 0


def cmd_analyze(args) -> int:
    signal, _, _ = _load_input(args)
    settings = _settings(args, args.config)
    result = _run_analysis(signal, settings)
    prefix = args.out_prefix
    track_path = Path(f"{prefix}_tracks.csv")
    grid_path = Path(f"{prefix}_grid.csv")
    diag_path = Path(f"{prefix}_diagnostics.json")
    export_track_csv(result["tracks"], track_path)
    grid = build_tfe(result["tracks"], args.time_bins, args.freq_bins)
    export_grid_csv(grid, grid_path)
    diagnostics = result["diagnostics"]
    diagnostics["outputs"] = {"tracks_csv": str(track_path), "grid_csv": str(grid_path)}
    diag_path.write_text(json.dumps(diagnostics, indent=2) + "\n")
    for path in (track_path, grid_path, diag_path):
        print(f"wrote {path}")
    return 0


def cmd_decompose(args) -> int:
    signal, _, _ = _load_input(args)
    settings = _settings(args, args.config)
    if settings["method"] in ("none", None):
        raise ValueError("decompose needs --method dft|fmd-a|fmd-b|causal-fir")
    result = _run_analysis(signal, settings)
    decomposition = result["decomposition"]
    prefix = args.out_prefix
    written = []
    for i, comp in enumerate(decomposition.components, start=1):
        path = Path(f"{prefix}_component_{i:03d}.csv")
        save_csv(Signal(comp, signal.sample_rate), path)
        written.append(path)
    diagnostics = result["diagnostics"]
    diagnostics["c0"] = decomposition.c0
    diagnostics["outputs"] = {"components": [str(p) for p in written]}
    diag_path = Path(f"{prefix}_diagnostics.json")
    diag_path.write_text(json.dumps(diagnostics, indent=2) + "\n")
    print(f"wrote {len(written)} components and {diag_path}")
    return 0


def cmd_compare(args) -> int:
    signal, fixture, params = _load_input(args)
    report = {"schema": COMPARE_SCHEMA, "sides": {}}
    for side in ("a", "b"):
        settings = _settings(args, getattr(args, f"config_{side}"), prefix=f"{side}_")
        result = _run_analysis(signal, settings)
        grid = build_tfe(result["tracks"], args.time_bins, args.freq_bins)
        grid_path = Path(f"{args.out_prefix}_{side}_grid.csv")
        export_grid_csv(grid, grid_path)
        entry = dict(result["diagnostics"])
        entry["grid_csv"] = str(grid_path)
        if fixture is not None:
            ridges = fixture_ridges(fixture, params, len(signal))
            if ridges is not None:
                entry["ridge_error_hz"] = _ridge_error(result["tracks"], ridges)
        report["sides"][side] = entry
        print(f"wrote {grid_path}")
    report_path = Path(f"{args.out_prefix}_compare.json")
    report_path.write_text(json.dumps(report, indent=2) + "\n")
    print(f"wrote {report_path}")
    return 0


def _thread_cap() -> int | None:
    raw = os.environ.get("TFESPEC_THREADS")
    if raw is None:
        return None
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"TFESPEC_THREADS must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"TFESPEC_THREADS must be >= 1, got {cap}")
    return cap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _thread_cap()  # validated; execution is sequential and stays within any cap
        handler = {
            "gen": cmd_gen,
            "analyze": cmd_analyze,
            "decompose": cmd_decompose,
            "compare": cmd_compare,
        }[args.command]
        return handler(args)
    except (ValueError, OSError, IndexError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
