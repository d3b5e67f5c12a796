"""Closed-form proximal and projection operators.

The central piece is the proximity operator of the perspective-type
function phi(v, sigma) = ||v||^2/(2 sigma) + (J/2) sigma (extended lower
semicontinuously to sigma = 0), evaluated via the positive root of a
depressed cubic.  The l1-ball projection and the shrinkage operators used
by the baseline estimators live here as well.
"""

from __future__ import annotations

import numpy as np

_PIVOT_SEED = 0x5DEECE66D  # fixed pivot stream keeps projections reproducible


def phi_value(v: np.ndarray, sigma: float) -> float:
    """Evaluate phi(v, sigma) with J = len(v); returns inf outside the domain."""
    v = np.atleast_1d(np.asarray(v, dtype=complex))
    J = v.size
    if sigma > 0:
        return float(np.vdot(v, v).real / (2.0 * sigma) + 0.5 * J * sigma)
    if sigma == 0 and not np.any(v):
        return 0.0
    return np.inf


def _cubic_positive_root(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Vectorized unique positive root of s^3 + p s - q = 0 for q > 0.

    Three Cardano branches keyed on Dsc = -(q/2)^2 - p^3/27; the small
    cube-root argument in the Dsc < 0 branch is formed via the conjugate
    product -(p^3/27)/(q/2 + sqrt(-Dsc)) to avoid cancellation.  One Newton
    step polishes the root (the positive root is always simple, with
    3 s^2 + p > 0 there).
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    a = 0.5 * q
    pcube = p**3 / 27.0
    disc = -(a * a) - pcube
    s = np.empty_like(a)

    neg = disc < 0
    if np.any(neg):
        t1 = a[neg] + np.sqrt(-disc[neg])
        t2 = -pcube[neg] / t1
        s[neg] = np.cbrt(t1) + np.cbrt(t2)
    zero = disc == 0
    if np.any(zero):
        s[zero] = 2.0 * np.cbrt(a[zero])
    pos = disc > 0
    if np.any(pos):
        # Dsc > 0 forces p < 0; the arctan form picks the positive root.
        s[pos] = 2.0 * np.sqrt(-p[pos] / 3.0) * np.cos(np.arctan(np.sqrt(disc[pos]) / a[pos]) / 3.0)

    fprime = 3.0 * s * s + p
    safe = fprime > 0
    resid = s**3 + p * s - q
    s = np.where(safe, s - resid / np.where(safe, fprime, 1.0), s)
    return s


def depressed_cubic_positive_root(p: float, q_coeff: float) -> float:
    """Unique positive root of s^3 + p s - q_coeff = 0; q_coeff must be > 0."""
    if q_coeff <= 0:
        raise ValueError("q_coeff must be positive")
    return float(_cubic_positive_root(np.asarray(p, float), np.asarray(q_coeff, float)))


def prox_perspective(v: np.ndarray, sigma: float, kappa: float) -> tuple[np.ndarray, float]:
    """Proximity operator of kappa*phi at the point (v, sigma), J = len(v).

    The input sigma may be any real number (ADMM feeds unconstrained sums);
    the output always satisfies sigma >= 0, with v = 0 whenever sigma = 0.
    """
    v = np.atleast_1d(np.asarray(v, dtype=complex))
    V, s = prox_perspective_field(v[:, None], np.asarray([sigma], dtype=float), kappa)
    return V[:, 0], float(s[0])


def prox_perspective_field(V: np.ndarray, sigma: np.ndarray, kappa: float) -> tuple[np.ndarray, np.ndarray]:
    """Apply prox_{kappa phi} independently over bins.

    V has shape (J, B) holding the stacked trial values per bin, sigma has
    shape (B,).  Returns arrays of the same shapes.
    """
    if kappa <= 0:
        raise ValueError("kappa must be positive")
    V = np.asarray(V, dtype=complex)
    sigma = np.asarray(sigma, dtype=float)
    J = V.shape[0]
    nv = np.sqrt((V.real**2 + V.imag**2).sum(axis=0))

    zero_point = 2.0 * kappa * sigma + nv * nv <= J * kappa * kappa
    vzero = nv == 0.0
    shift = vzero & ~zero_point
    interior = ~zero_point & ~vzero

    V_out = np.zeros_like(V)
    s_out = np.zeros_like(sigma)
    s_out[shift] = sigma[shift] - 0.5 * kappa * J
    if np.any(interior):
        p = 2.0 * sigma[interior] / kappa + 2.0 - J
        q = 2.0 * nv[interior] / kappa
        s = _cubic_positive_root(p, q)
        scale = np.maximum(1.0 - kappa * s / nv[interior], 0.0)
        V_out[:, interior] = V[:, interior] * scale
        s_out[interior] = np.maximum(sigma[interior] + 0.5 * kappa * (s * s - J), 0.0)
        # keep the domain coupling exact: sigma = 0 forces v = 0
        V_out[:, interior] *= s_out[interior] > 0
    return V_out, s_out


def project_l1_ball(z: np.ndarray, alpha: float) -> np.ndarray:
    """Euclidean projection of z (any shape, treated flat) onto ||.||_1 <= alpha.

    Expected-linear random-pivot threshold search; feasible inputs are
    returned unchanged.  The support found by the pivot recursion is
    re-summed in sorted order so the computed threshold matches the
    sort-based formulation bit for bit.
    """
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    z = np.asarray(z, dtype=float)
    a = np.abs(z).ravel()
    if a.sum() <= alpha:
        return z.copy()
    if alpha == 0:
        return np.zeros_like(z)
    t = _l1_threshold_pivot(a, alpha)
    return np.sign(z) * np.maximum(np.abs(z) - t, 0.0)


def _l1_threshold_pivot(a: np.ndarray, alpha: float) -> float:
    """Soft threshold t with sum(max(a - t, 0)) = alpha, expected O(len(a))."""
    rng = np.random.default_rng(_PIVOT_SEED)
    U = a
    s = 0.0
    rho = 0
    kept: list[np.ndarray] = []
    while U.size:
        pivot = U[rng.integers(U.size)]
        above = U >= pivot
        ds = float(U[above].sum())
        dr = int(above.sum())
        if (s + ds) - (rho + dr) * pivot < alpha:
            # residual mass at level `pivot` is below alpha, so the
            # threshold sits under pivot: everything >= pivot survives
            s += ds
            rho += dr
            kept.append(U[above])
            U = U[~above]
        else:
            Ug = U[above]
            drop = int(np.flatnonzero(Ug == pivot)[0])
            U = np.delete(Ug, drop)
    support = np.sort(np.concatenate(kept))[::-1]
    return (float(np.sum(support)) - alpha) / rho


def soft_threshold_complex(u: np.ndarray, t: float) -> np.ndarray:
    """Complex soft threshold u * max(1 - t/|u|, 0), with 0 mapped to 0."""
    if t < 0:
        raise ValueError("threshold must be nonnegative")
    u = np.asarray(u, dtype=complex)
    mag = np.abs(u)
    with np.errstate(divide="ignore", invalid="ignore"):
        factor = np.where(mag > 0, np.maximum(1.0 - t / np.where(mag > 0, mag, 1.0), 0.0), 0.0)
    return u * factor


def group_shrink(g: np.ndarray, t: float) -> np.ndarray:
    """Block shrinkage g * max(1 - t/||g||, 0) on the whole vector g."""
    if t < 0:
        raise ValueError("threshold must be nonnegative")
    g = np.asarray(g, dtype=complex)
    norm = np.linalg.norm(g)
    if norm <= t:
        return np.zeros_like(g)
    return g * (1.0 - t / norm)
