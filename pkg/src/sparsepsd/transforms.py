"""Synthesis operators, circular difference operators and structured solves.

All frequency-domain vectors live on the centered grid f[k] = (k - L/2)/L.
Internal FFTs use the standard 0..L-1 bin ordering; the shift between the
two orderings is handled here and nowhere else.  Every operation applies
along the last axis, so stacked (..., L) arrays work directly.
"""

from __future__ import annotations

import numpy as np

from .core import SynthesisKind

_DENSE_LIMIT = 64


def dft_analyze(x: np.ndarray) -> np.ndarray:
    """Normalized DFT onto the centered frequency grid, O(L log L).

    Equivalent to F @ x with F[k, l] = L**-0.5 * exp(-2i pi f_k l).
    """
    x = np.asarray(x, dtype=complex)
    L = x.shape[-1]
    return np.fft.fftshift(np.fft.fft(x, axis=-1), axes=-1) / np.sqrt(L)


def dft_synthesize(u: np.ndarray) -> np.ndarray:
    """Inverse of :func:`dft_analyze` (F is unitary, so this is also F^H)."""
    u = np.asarray(u, dtype=complex)
    L = u.shape[-1]
    return np.fft.ifft(np.fft.ifftshift(u, axes=-1), axis=-1) * np.sqrt(L)


def hamming_window(L: int) -> np.ndarray:
    """Symmetric Hamming window rescaled to ||w|| = sqrt(L)."""
    if L < 2:
        raise ValueError("window length must be >= 2")
    w = 0.54 - 0.46 * np.cos(2 * np.pi * np.arange(L) / (L - 1))
    return w * np.sqrt(L) / np.linalg.norm(w)


class SynthesisOperator:
    """Frequency-to-time synthesis map G with G G^H = diag(nu).

    DFT kind: G = F^H (nu = 1).  Windowed DFT kind: G = W^-1 F^H with
    W = diag(w), w the norm-sqrt(L) Hamming window (nu = 1/w**2).
    """

    def __init__(self, kind: SynthesisKind, L: int):
        kind = SynthesisKind(kind)
        if L < 2 or L % 2 != 0:
            raise ValueError(f"operator length must be even and >= 2, got {L}")
        self.kind = kind
        self.L = int(L)
        if kind is SynthesisKind.DFT:
            self.window = None
            self.nu = np.ones(L)
        else:
            self.window = hamming_window(L)
            self.nu = 1.0 / self.window**2
        self.nu.setflags(write=False)

    def synthesize(self, u: np.ndarray) -> np.ndarray:
        """Apply G: frequency components -> time samples."""
        x = dft_synthesize(u)
        if self.window is not None:
            x = x / self.window
        return x

    def analyze(self, x: np.ndarray) -> np.ndarray:
        """Apply the exact inverse G^-1 (F x, or F W x for the windowed kind)."""
        if self.window is not None:
            x = x * self.window
        return dft_analyze(x)

    def adjoint(self, x: np.ndarray) -> np.ndarray:
        """Apply the Hermitian adjoint G^H (equals analyze only for DFT)."""
        if self.window is not None:
            x = x / self.window
        return dft_analyze(x)

    def dense_matrix(self) -> np.ndarray:
        """Materialize G explicitly; test-only oracle, limited to small L."""
        if self.L > _DENSE_LIMIT:
            raise ValueError(f"dense materialization limited to L <= {_DENSE_LIMIT}")
        return self.synthesize(np.eye(self.L, dtype=complex)).T


def synthesize(G: SynthesisOperator, u: np.ndarray) -> np.ndarray:
    u = np.asarray(u, dtype=complex)
    if u.shape[-1] != G.L:
        raise ValueError(f"length mismatch: operator L={G.L}, vector {u.shape[-1]}")
    return G.synthesize(u)


def solve_identity_plus_gram(G: SynthesisOperator, b: np.ndarray) -> np.ndarray:
    """Solve (I + G^H G) z = b in O(L log L).

    Uses the Woodbury identity with G G^H = diag(nu):
    z = b - G^H diag(1/(1+nu)) G b.
    """
    b = np.asarray(b, dtype=complex)
    if b.shape[-1] != G.L:
        raise ValueError(f"length mismatch: operator L={G.L}, vector {b.shape[-1]}")
    return b - G.adjoint(G.synthesize(b) / (1.0 + G.nu))


class DifferenceOperator:
    """Order-r circular difference D^r on length-L vectors.

    D has first row (-1, 1, 0, ..., 0) with periodic wrap; it annihilates
    constants.  Being circulant, (I + (D^r)^T D^r) diagonalizes in the
    Fourier basis with eigenvalues 1 + (2 - 2 cos(2 pi k / L))^r.
    """

    def __init__(self, L: int, r: int):
        if L < 2:
            raise ValueError("length must be >= 2")
        if r < 1:
            raise ValueError("difference order must be >= 1")
        self.L = int(L)
        self.r = int(r)
        gain2 = 2.0 - 2.0 * np.cos(2 * np.pi * np.arange(L) / L)
        self._inv_eig = 1.0 / (1.0 + gain2**r)
        self._inv_eig.setflags(write=False)

    def apply(self, s: np.ndarray) -> np.ndarray:
        """Apply D^r along the last axis."""
        s = np.asarray(s)
        for _ in range(self.r):
            s = np.roll(s, -1, axis=-1) - s
        return s

    def apply_transpose(self, s: np.ndarray) -> np.ndarray:
        """Apply (D^r)^T along the last axis."""
        s = np.asarray(s)
        for _ in range(self.r):
            s = np.roll(s, 1, axis=-1) - s
        return s

    def dense_matrix(self) -> np.ndarray:
        """Materialize D^r; test-only oracle, limited to small L."""
        if self.L > _DENSE_LIMIT:
            raise ValueError(f"dense materialization limited to L <= {_DENSE_LIMIT}")
        return self.apply(np.eye(self.L)).T


def apply_difference(Dop: DifferenceOperator, s: np.ndarray) -> np.ndarray:
    s = np.asarray(s, dtype=float)
    if s.shape[-1] != Dop.L:
        raise ValueError(f"length mismatch: operator L={Dop.L}, vector {s.shape[-1]}")
    return Dop.apply(s)


def solve_identity_plus_diff_gram(Dop: DifferenceOperator, b: np.ndarray) -> np.ndarray:
    """Solve (I + (D^r)^T D^r) z = b by FFT diagonalization, O(L log L).

    The inverse transform's imaginary residue (<= ~1e-12 for real b) is
    discarded.
    """
    b = np.asarray(b, dtype=float)
    if b.shape[-1] != Dop.L:
        raise ValueError(f"length mismatch: operator L={Dop.L}, vector {b.shape[-1]}")
    return np.fft.ifft(np.fft.fft(b, axis=-1) * Dop._inv_eig, axis=-1).real
