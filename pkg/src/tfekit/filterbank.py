"""Zero-phase spectral filter bank.

A band plan partitions the nonnegative DFT bins 1..K_M into M contiguous
runs; bin 0 (the mean) is routed to the separate c0 term. Each band keeps
its bins plus their conjugate mirrors with a real 0/1 mask, so synthesis
by inverse transform is exactly zero-phase and the components are
mutually orthogonal with disjoint spectral support.
"""

import json
from dataclasses import dataclass

import numpy as np

from .analytic import dft, idft
from .signals import Signal

__all__ = [
    "BandPlan",
    "uniform_band_plan",
    "custom_band_plan",
    "plan_from_spec",
    "plan_spec_from_json",
    "Decomposition",
    "dft_decompose",
    "OrthogonalityReport",
    "verify_orthogonality",
]


def _top_bin(n: int) -> int:
    return n // 2 if n % 2 == 0 else (n - 1) // 2


@dataclass(frozen=True)
class BandPlan:
    """Ordered bin boundaries K_0=0 < K_1 < ... < K_M defining M bands.

    Band i (1-based) covers bins K_{i-1}+1 .. K_i plus their mirrors.
    K_M is N/2 for even N and (N-1)/2 for odd N.
    """

    boundaries: tuple
    signal_length: int
    sample_rate: float

    def __post_init__(self):
        bounds = tuple(int(b) for b in self.boundaries)
        if len(bounds) < 2 or bounds[0] != 0:
            raise ValueError("boundaries must start at 0 and define at least one band")
        if any(b2 <= b1 for b1, b2 in zip(bounds, bounds[1:])):
            raise ValueError(f"boundaries must be strictly increasing, got {bounds}")
        top = _top_bin(self.signal_length)
        if bounds[-1] != top:
            raise ValueError(
                f"last boundary must be {top} for length {self.signal_length}, got {bounds[-1]}"
            )
        object.__setattr__(self, "boundaries", bounds)

    @property
    def n_bands(self) -> int:
        return len(self.boundaries) - 1

    def band_bins(self, i: int) -> tuple[int, int]:
        """Inclusive positive-frequency bin range (lo, hi) of band i (0-based)."""
        return self.boundaries[i] + 1, self.boundaries[i + 1]

    def band_edges_hz(self, i: int) -> tuple[float, float]:
        """Nominal band edges in Hz (boundary bins mapped back to frequency)."""
        scale = self.sample_rate / self.signal_length
        return self.boundaries[i] * scale, self.boundaries[i + 1] * scale


def uniform_band_plan(n_bands: int, signal_length: int, sample_rate: float) -> BandPlan:
    """Split the spectrum into `n_bands` bands of (near-)equal bin count.

    Band sizes differ by at most one bin. n_bands may not exceed the
    number of available non-DC bins, floor(N/2).
    """
    top = _top_bin(signal_length)
    if not 1 <= n_bands <= signal_length // 2:
        raise ValueError(
            f"n_bands must be in [1, {signal_length // 2}] for length {signal_length}, got {n_bands}"
        )
    bounds = [(i * top) // n_bands for i in range(n_bands + 1)]
    return BandPlan(tuple(bounds), signal_length, sample_rate)


def custom_band_plan(cutoffs_hz, signal_length: int, sample_rate: float) -> BandPlan:
    """Band plan from explicit cutoff frequencies, the last at Nyquist.

    Cutoffs map to bins by round-half-up, K_i = floor(c*N/Fs + 0.5); a
    cutoff landing between bins therefore belongs to the lower band.
    Cutoffs that collapse a band to zero bins are rejected.
    """
    cutoffs = [float(c) for c in cutoffs_hz]
    if not cutoffs:
        raise ValueError("need at least one cutoff")
    if cutoffs[0] <= 0:
        raise ValueError(f"cutoffs must be positive, got {cutoffs[0]}")
    if any(c2 <= c1 for c1, c2 in zip(cutoffs, cutoffs[1:])):
        raise ValueError(f"cutoffs must be strictly increasing, got {cutoffs}")
    nyq = sample_rate / 2
    if cutoffs[-1] > nyq * (1 + 1e-12):
        raise ValueError(f"cutoff {cutoffs[-1]} Hz above Nyquist {nyq} Hz")
    if abs(cutoffs[-1] - nyq) > 1e-12 * max(1.0, nyq):
        raise ValueError(f"last cutoff must equal Nyquist ({nyq} Hz), got {cutoffs[-1]}")
    top = _top_bin(signal_length)
    bounds = [0]
    for c in cutoffs:
        k = min(int(np.floor(c * signal_length / sample_rate + 0.5)), top)
        if k <= bounds[-1]:
            raise ValueError(
                f"cutoff {c} Hz collapses a band to zero bins "
                f"(bin {k} after {bounds[-1]}); merge or widen the bands"
            )
        bounds.append(k)
    return BandPlan(tuple(bounds), signal_length, sample_rate)


def plan_from_spec(spec: dict, signal_length: int, sample_rate: float) -> BandPlan:
    """Instantiate a plan from its JSON document form.

    Accepted documents: {"type": "uniform", "bands": M} and
    {"type": "custom", "cutoffs_hz": [...]}.
    """
    kind = spec.get("type")
    if kind == "uniform":
        return uniform_band_plan(int(spec["bands"]), signal_length, sample_rate)
    if kind == "custom":
        return custom_band_plan(spec["cutoffs_hz"], signal_length, sample_rate)
    raise ValueError(f"unknown band plan type {kind!r}: expected 'uniform' or 'custom'")


def plan_spec_from_json(text: str) -> dict:
    """Parse and sanity-check a band-plan JSON document."""
    spec = json.loads(text)
    if not isinstance(spec, dict) or spec.get("type") not in ("uniform", "custom"):
        raise ValueError("band plan document must be an object with type 'uniform' or 'custom'")
    if spec["type"] == "uniform" and "bands" not in spec:
        raise ValueError("uniform band plan needs a 'bands' count")
    if spec["type"] == "custom" and "cutoffs_hz" not in spec:
        raise ValueError("custom band plan needs 'cutoffs_hz'")
    return spec


@dataclass(frozen=True)
class Decomposition:
    """Mean term c0 plus ordered component signals from one method.

    c0 + sum(components) reconstructs the analyzed signal pointwise.
    `method` tags the producing algorithm: 'dft', 'fmd-A', 'fmd-B' or
    'causal-fir'.
    """

    c0: float
    components: list
    method: str
    sample_rate: float

    def __post_init__(self):
        comps = [np.asarray(c, dtype=np.float64) for c in self.components]
        if not comps:
            raise ValueError("decomposition needs at least one component")
        n = comps[0].size
        for c in comps:
            if c.size != n:
                raise ValueError("components must share one length")
            if not np.all(np.isfinite(c)):
                raise ValueError("components must be finite")
        object.__setattr__(self, "components", comps)

    @property
    def n_components(self) -> int:
        return len(self.components)

    def reconstruct(self) -> np.ndarray:
        """c0 + sum of components."""
        return self.c0 + np.sum(self.components, axis=0)


def dft_decompose(x: Signal, plan: BandPlan) -> Decomposition:
    """Split a signal into zero-phase spectral band components.

    Each component is the inverse transform of the input spectrum masked
    to one band's bins and their mirrors; c0 is the DC bin (the sample
    mean). Imaginary residue of a synthesized component above 1e-10 of
    the signal scale indicates a broken Hermitian mask and raises.
    """
    n = len(x)
    if plan.signal_length != n:
        raise ValueError(f"plan built for length {plan.signal_length}, signal has {n}")
    spectrum = dft(x.samples)
    c0 = float(spectrum[0].real)
    residue_limit = 1e-10 * max(1.0, float(np.abs(x.samples).max()))
    components = []
    for i in range(plan.n_bands):
        lo, hi = plan.band_bins(i)
        masked = np.zeros(n, dtype=np.complex128)
        masked[lo : hi + 1] = spectrum[lo : hi + 1]
        # mirror bins; for even N the Nyquist bin has no distinct mirror
        mlo = max(n - hi, n // 2 + 1)
        mhi = n - lo
        if mlo <= mhi:
            masked[mlo : mhi + 1] = spectrum[mlo : mhi + 1]
        y = idft(masked)
        if np.abs(y.imag).max() > residue_limit:
            raise RuntimeError(
                f"band {i}: imaginary residue {np.abs(y.imag).max():.3e} exceeds "
                f"{residue_limit:.3e}; spectral mask lost Hermitian symmetry"
            )
        components.append(y.real)
    return Decomposition(c0, components, "dft", x.sample_rate)


@dataclass(frozen=True)
class OrthogonalityReport:
    """Pairwise orthogonality and energy-preservation summary."""

    max_normalized_cross: float
    energy_ratio: float


def verify_orthogonality(d: Decomposition) -> OrthogonalityReport:
    """Check mutual orthogonality and Parseval energy balance of a DFT decomposition.

    Reports max over pairs of |<y_i, y_l>| / (||y_i|| ||y_l||) and
    (sum ||y_i||^2 + N*c0^2) / ||x||^2, where x is the reconstruction.
    """
    if d.method != "dft":
        raise ValueError(f"orthogonality verification applies to 'dft' decompositions, got {d.method!r}")
    comps = np.stack(d.components)
    gram = comps @ comps.T
    norms = np.sqrt(np.diag(gram))
    denom = np.outer(norms, norms)
    denom[denom == 0] = 1.0  # zero-energy bands contribute nothing
    normalized = np.abs(gram) / denom
    np.fill_diagonal(normalized, 0.0)
    x = d.reconstruct()
    n = x.size
    energy_ratio = float((np.trace(gram) + n * d.c0**2) / np.dot(x, x))
    return OrthogonalityReport(float(normalized.max()), energy_ratio)
