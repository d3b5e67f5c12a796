"""Shared domain types: frequency grid, radar geometry, scenarios, result tensors.

Conventions used throughout the package:

* indices are 0-based internally (grids and formulas are documented 0-based),
* angles are radians internally, degrees only at config/CLI surfaces,
* complex tensors are ``complex128`` and serialize as interleaved
  (real, imag) little-endian doubles.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional

import numpy as np

DEG = np.pi / 180.0


class SynthesisKind(str, Enum):
    """Frequency-to-time synthesis map used in the observation model."""

    DFT = "dft"
    WINDOWED_DFT = "wdft"


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class FrequencyGrid:
    """Uniform grid of L normalized frequencies, f[k] = (k - L/2)/L, k = 0..L-1.

    Covers [-1/2, 1/2) half-open with exact spacing 1/L; L must be even.
    """

    L: int
    f: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "f", _freeze(np.asarray(self.f, dtype=float)))


def make_frequency_grid(L: int) -> FrequencyGrid:
    """Build the L-point normalized frequency grid; L must be even and >= 2."""
    if L < 2 or L % 2 != 0:
        raise ValueError(f"grid length must be even and >= 2, got {L}")
    f = (np.arange(L) - L // 2) / L
    return FrequencyGrid(L=int(L), f=f)


@dataclass(frozen=True)
class RadarParams:
    """Uniform-linear-array radar geometry and noise level.

    noise_std is the total standard deviation per complex sample (the
    variance noise_std**2 is split evenly between real and imaginary parts).
    """

    M: int = 128
    lambda_cw: float = 0.0318
    delta: float = 0.0165
    T: float = 4e-4
    noise_std: float = float(np.sqrt(2.5))

    def __post_init__(self):
        if self.M < 1:
            raise ValueError("element count M must be >= 1")
        for name in ("lambda_cw", "delta", "T"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.noise_std < 0:
            raise ValueError("noise_std must be nonnegative")


def steering_vector(theta: float, params: RadarParams) -> np.ndarray:
    """Array response for arrival angle theta (radians).

    Component m (0-based) is exp(-i 2 pi m delta sin(theta) / lambda_cw);
    every entry has unit magnitude.
    """
    m = np.arange(params.M)
    phase = -2j * np.pi * m * params.delta * np.sin(theta) / params.lambda_cw
    return np.exp(phase)


def steering_matrix(angles: np.ndarray, params: RadarParams) -> np.ndarray:
    """Stack steering vectors for all angles into an (M, N) matrix."""
    angles = np.asarray(angles, dtype=float)
    m = np.arange(params.M)[:, None]
    return np.exp(-2j * np.pi * m * params.delta * np.sin(angles)[None, :] / params.lambda_cw)


@dataclass(frozen=True)
class Scenario:
    """Ground-truth description of the simulated sources and the radar.

    Per-source arrays all have length N: arrival angle (radians), linear
    power, mean Doppler frequency (Hz) and Doppler width (Hz).  A ``None``
    doppler_width requests the §IV-style draw at simulation time: velocity
    widths uniform over velocity_width_range [m/s], converted to Hz via
    varsigma = 2 v / lambda_cw.
    """

    angles: np.ndarray
    power: np.ndarray
    mean_doppler: np.ndarray
    doppler_width: Optional[np.ndarray]
    radar: RadarParams
    grid: FrequencyGrid
    n_trials: int
    rng_seed: int
    velocity_width_range: tuple[float, float] = (1.0, 3.0)

    def __post_init__(self):
        angles = _freeze(np.asarray(self.angles, dtype=float))
        power = _freeze(np.asarray(self.power, dtype=float))
        mu = _freeze(np.asarray(self.mean_doppler, dtype=float))
        object.__setattr__(self, "angles", angles)
        object.__setattr__(self, "power", power)
        object.__setattr__(self, "mean_doppler", mu)
        if not (angles.shape == power.shape == mu.shape) or angles.ndim != 1:
            raise ValueError("angles, power and mean_doppler must be 1-D with equal length")
        if np.any(power < 0):
            raise ValueError("source powers must be nonnegative")
        if self.doppler_width is not None:
            w = _freeze(np.asarray(self.doppler_width, dtype=float))
            if w.shape != angles.shape:
                raise ValueError("doppler_width must match the number of sources")
            if np.any(w <= 0):
                raise ValueError("doppler widths must be positive")
            object.__setattr__(self, "doppler_width", w)
        if self.n_trials < 1:
            raise ValueError("trial count must be >= 1")
        lo, hi = self.velocity_width_range
        if not (0 < lo <= hi):
            raise ValueError("velocity_width_range must be positive and ordered")

    @property
    def N(self) -> int:
        return self.angles.size

    @property
    def L(self) -> int:
        return self.grid.L

    @property
    def J(self) -> int:
        return self.n_trials

    def with_seed(self, seed: int) -> "Scenario":
        return replace(self, rng_seed=int(seed))


@dataclass(frozen=True)
class ObservationSet:
    """J observed mixture vectors, each of length d = M*L.

    Per-trial layout stacks the M-element array snapshots per time sample:
    y[j] = (y_j[0]^T, y_j[1]^T, ..., y_j[L-1]^T)^T.
    """

    y: np.ndarray
    M: int
    L: int

    def __post_init__(self):
        y = np.asarray(self.y, dtype=complex)
        if y.ndim != 2 or y.shape[1] != self.M * self.L:
            raise ValueError(f"observations must have shape (J, M*L), got {y.shape}")
        if not np.all(np.isfinite(y.view(float))):
            raise ValueError("observations must be finite")
        object.__setattr__(self, "y", _freeze(y))

    @property
    def J(self) -> int:
        return self.y.shape[0]

    def snapshots(self) -> np.ndarray:
        """Reshape to (J, M, L) with snapshot index last."""
        J = self.J
        return self.y.reshape(J, self.L, self.M).transpose(0, 2, 1)


@dataclass(frozen=True)
class SpectralCoefficients:
    """Complex frequency components, indexed (trial j, source n, bin k)."""

    u: np.ndarray

    def __post_init__(self):
        u = np.asarray(self.u, dtype=complex)
        if u.ndim != 3:
            raise ValueError("u must have shape (J, N, L)")
        if not np.all(np.isfinite(u.view(float))):
            raise ValueError("spectral coefficients must be finite")
        object.__setattr__(self, "u", _freeze(u))

    @property
    def shape(self) -> tuple[int, int, int]:
        return self.u.shape


@dataclass(frozen=True)
class SigmaField:
    """Nonnegative latent field whose entrywise square estimates the PSD."""

    sigma: np.ndarray

    def __post_init__(self):
        s = np.asarray(self.sigma, dtype=float)
        if s.ndim != 2:
            raise ValueError("sigma must have shape (N, L)")
        if np.any(s < 0) or not np.all(np.isfinite(s)):
            raise ValueError("sigma must be finite and nonnegative")
        object.__setattr__(self, "sigma", _freeze(s))


@dataclass(frozen=True)
class PsdEstimate:
    """PSD samples on the frequency grid, shape (N, L), nonnegative."""

    S: np.ndarray

    def __post_init__(self):
        S = np.asarray(self.S, dtype=float)
        if S.ndim != 2:
            raise ValueError("PSD must have shape (N, L)")
        if np.any(S < 0) or not np.all(np.isfinite(S)):
            raise ValueError("PSD must be finite and nonnegative")
        object.__setattr__(self, "S", _freeze(S))


@dataclass(frozen=True)
class SolverConfig:
    """Tuning and iteration policy for the joint estimator.

    lam weights the block-sparsity penalty, alpha is the smoothness budget
    (l1 bound on the order-r differences of sigma), gamma is the ADMM step.
    """

    lam: float
    alpha: float
    r: int = 2
    gamma: float = 1.0
    max_iter: int = 3000
    tol_primal: float = 1e-5
    tol_dual: float = 1e-5
    synthesis_kind: SynthesisKind = SynthesisKind.DFT

    def __post_init__(self):
        if self.lam <= 0:
            raise ValueError("lam must be positive")
        if self.alpha < 0:
            raise ValueError("alpha must be nonnegative")
        if self.r < 1:
            raise ValueError("difference order r must be >= 1")
        if self.gamma <= 0:
            raise ValueError("gamma must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")
        if self.tol_primal <= 0 or self.tol_dual <= 0:
            raise ValueError("tolerances must be positive")
        object.__setattr__(self, "synthesis_kind", SynthesisKind(self.synthesis_kind))
