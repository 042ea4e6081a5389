"""Brute-force convex roof of the two-qubit concurrence.

Test oracle for the closed forms in quantum.entanglement. Every ensemble of m members
realizing rho is sqrt(p_i)|psi_i> = sum_j V_ij sqrt(mu_j)|e_j> for an m x r isometry V
over the eigendecomposition rho = sum_j mu_j |e_j><e_j|. With W = [sqrt(mu_j)|e_j>] and
tau = W^T (sigma_y x sigma_y) W the ensemble average concurrence is
sum_i |(V tau V^T)_ii|, which is what gets optimized.

Each restart runs Givens coordinate descent from a Haar isometry. The best restart is
then refined over all of U(m) with Powell's method on a smoothed objective,
sum_i sqrt(|z_ii|^2 + eps^2), with eps shrinking stage by stage. The smoothed value
overestimates the true one by at most m * eps.
"""

import logging
from typing import Literal

import numpy as np
import scipy.linalg as spla
import scipy.optimize as spopt

from exceptions import ConvexRoofError, MonogamyError
from models import DensityMatrix, EnsembleDecomposition, PureState
from quantum.entanglement import SIGMA_YY, require_two_qubits, square_root_factor
from quantum.state_core import random_unitary
from tolerances import ENSEMBLE_RECON_TOL

logger = logging.getLogger(__name__)

RANK_CUTOFF = 1e-12
MAX_ENSEMBLE_SIZE = 8
DEFAULT_RESTARTS = 32
DEFAULT_TOLERANCE = 1e-6
MAX_SWEEPS = 200

# Givens search: coarse (theta, phi) grid, then successive zooms around the best point
_THETA_GRID = np.linspace(0.0, np.pi / 2, 25)
_PHI_GRID = np.linspace(0.0, 2 * np.pi, 48, endpoint=False)
_ZOOM_POINTS = np.linspace(-1.0, 1.0, 9)
_ZOOM_LEVELS = 5

# maximize only runs the last stage
SMOOTHING_SCHEDULE = (1e-2, 1e-3, 1e-4, 1e-5)
REFINE_MAX_EVALUATIONS = 3000


def _rotated_pair(theta, phi, zkk: complex, zkl: complex, zll: complex):
    """|z_kk'| + |z_ll'| after v_k' = c v_k + s e^{i phi} v_l, v_l' = -s e^{-i phi} v_k + c v_l."""
    c, s = np.cos(theta), np.sin(theta)
    e = np.exp(1j * phi)
    zk = c * c * zkk + 2 * c * s * e * zkl + s * s * e * e * zll
    zl = s * s * zkk / (e * e) - 2 * c * s * zkl / e + c * c * zll
    return np.abs(zk) + np.abs(zl)


def _best_rotation(zkk: complex, zkl: complex, zll: complex, sign: float) -> tuple[float, float, float]:
    theta, phi = np.meshgrid(_THETA_GRID, _PHI_GRID, indexing="ij")
    values = sign * _rotated_pair(theta, phi, zkk, zkl, zll)
    best = np.unravel_index(np.argmin(values), values.shape)
    t0, p0, v0 = theta[best], phi[best], values[best]

    step_t, step_p = _THETA_GRID[1], _PHI_GRID[1]
    for _ in range(_ZOOM_LEVELS):
        theta, phi = np.meshgrid(t0 + step_t * _ZOOM_POINTS, p0 + step_p * _ZOOM_POINTS, indexing="ij")
        values = sign * _rotated_pair(theta, phi, zkk, zkl, zll)
        best = np.unravel_index(np.argmin(values), values.shape)
        if values[best] < v0:
            t0, p0, v0 = theta[best], phi[best], values[best]
        step_t /= 4
        step_p /= 4
    return float(t0), float(p0), float(v0)


def _diagonal(v: np.ndarray, tau: np.ndarray) -> np.ndarray:
    return np.einsum("ij,jk,ik->i", v, tau, v)


def _objective(v: np.ndarray, tau: np.ndarray) -> float:
    return float(np.sum(np.abs(_diagonal(v, tau))))


def _coordinate_descent(v: np.ndarray, tau: np.ndarray, sign: float, tolerance: float) -> tuple[np.ndarray, float]:
    m = v.shape[0]
    current = sign * _objective(v, tau)
    for sweep in range(MAX_SWEEPS):
        start = current
        for k in range(m - 1):
            for l in range(k + 1, m):
                zkk = v[k] @ tau @ v[k]
                zkl = v[k] @ tau @ v[l]
                zll = v[l] @ tau @ v[l]
                identity = sign * (abs(zkk) + abs(zll))
                theta, phi, value = _best_rotation(zkk, zkl, zll, sign)
                if value < identity:
                    c, s, e = np.cos(theta), np.sin(theta), np.exp(1j * phi)
                    v[k], v[l] = c * v[k] + s * e * v[l], -s / e * v[k] + c * v[l]
                    current += value - identity
        if start - current < tolerance:
            logger.debug("coordinate descent converged after %d sweeps", sweep + 1)
            break
    return v, sign * current


def _rotation(x: np.ndarray, m: int) -> np.ndarray:
    """exp(iH) for the Hermitian H with zero diagonal whose upper triangle is x[:k] + i x[k:].

    Diagonal phases leave every |z_ii| unchanged, so they are not parametrized.
    """
    upper = np.triu_indices(m, k=1)
    k = len(upper[0])
    h = np.zeros((m, m), dtype=complex)
    h[upper] = x[:k] + 1j * x[k:]
    return spla.expm(1j * (h + h.conj().T))


def _smoothed(x: np.ndarray, v: np.ndarray, tau: np.ndarray, sign: float, eps: float) -> float:
    z = _diagonal(_rotation(x, v.shape[0]) @ v, tau)
    return sign * float(np.sum(np.sqrt(np.abs(z) ** 2 + eps * eps)))


def _refine(v: np.ndarray, tau: np.ndarray, sign: float, tolerance: float) -> np.ndarray:
    """Powell refinement of one isometry; each stage restarts from the previous optimum."""
    m = v.shape[0]
    if m < 2:
        return v
    schedule = SMOOTHING_SCHEDULE if sign > 0 else SMOOTHING_SCHEDULE[-1:]
    refined = v
    for eps in schedule:
        result = spopt.minimize(
            _smoothed,
            np.zeros(m * (m - 1)),
            args=(refined, tau, sign, eps),
            method="Powell",
            options={"xtol": tolerance * 1e-2, "ftol": 1e-12, "maxfev": REFINE_MAX_EVALUATIONS},
        )
        refined = _rotation(result.x, m) @ refined
        logger.debug("refine eps=%.0e: %.12f after %d evaluations", eps, _objective(refined, tau), result.nfev)
    return refined if sign * _objective(refined, tau) < sign * _objective(v, tau) else v


def _pure_pair_concurrence(psi: np.ndarray) -> float:
    return float(abs(psi @ SIGMA_YY @ psi))


def _decomposition(w: np.ndarray, v: np.ndarray) -> EnsembleDecomposition:
    subnormalized = w @ v.T
    weights = np.sum(np.abs(subnormalized) ** 2, axis=0)
    keep = weights > RANK_CUTOFF
    weights, subnormalized = weights[keep], subnormalized[:, keep]
    members = [
        (float(p), PureState(n_qubits=2, amplitudes=column / np.sqrt(p)))
        for p, column in zip(weights / weights.sum(), subnormalized.T)
    ]
    return EnsembleDecomposition(members=members)


def convex_roof_oracle(
    dm: DensityMatrix,
    mode: Literal["minimize", "maximize"],
    restarts: int = DEFAULT_RESTARTS,
    ensemble_size: int | None = None,
    tolerance: float = DEFAULT_TOLERANCE,
    seed: int = 0,
) -> tuple[float, EnsembleDecomposition]:
    """Best ensemble-average concurrence found over decompositions of `dm`.

    minimize approximates the Wootters concurrence, maximize the concurrence of
    assistance. Restarts start from independent Haar isometries with seeds spawned
    from `seed`; the best one is refined before the ensemble is built.

    `ensemble_size` defaults to max(rank, 4), or 1 for a pure input. An explicit size
    is used as given and must lie in [rank, MAX_ENSEMBLE_SIZE].
    """
    require_two_qubits(dm)
    if mode not in ("minimize", "maximize"):
        raise MonogamyError(f"unknown oracle mode {mode!r}", code="E_BUDGET")
    if restarts < 1:
        raise MonogamyError(f"need at least one restart, got {restarts}", code="E_BUDGET")

    w = square_root_factor(dm)
    w = w[:, np.any(w != 0, axis=0)]
    rank = w.shape[1]
    if ensemble_size is not None:
        m = ensemble_size
    else:
        m = 1 if rank == 1 else max(rank, 4)
    if not rank <= m <= MAX_ENSEMBLE_SIZE:
        raise MonogamyError(f"ensemble size {m} outside [{rank}, {MAX_ENSEMBLE_SIZE}]", code="E_BUDGET")

    tau = w.T @ SIGMA_YY @ w
    sign = 1.0 if mode == "minimize" else -1.0
    best_value, best_v = None, None
    for index, child in enumerate(np.random.SeedSequence(seed).spawn(restarts)):
        rng = np.random.default_rng(child)
        v = np.ascontiguousarray(random_unitary(m, rng)[:, :rank])
        v, value = _coordinate_descent(v, tau, sign, tolerance)
        logger.debug("restart %d (%s): %.12f", index, mode, value)
        if best_value is None or sign * value < sign * best_value:
            best_value, best_v = value, v

    best_v = _refine(best_v, tau, sign, tolerance)
    decomposition = _decomposition(w, best_v)
    error = float(np.max(np.abs(decomposition.density_matrix() - dm.matrix)))
    if error > ENSEMBLE_RECON_TOL:
        raise ConvexRoofError(f"ensemble reconstructs rho only to {error:.3e}", reconstruction_error=error)

    average = sum(p * _pure_pair_concurrence(s.amplitudes) for p, s in decomposition.members)
    logger.info("convex roof %s over rank-%d state: %.9f (%d restarts)", mode, rank, average, restarts)
    return float(average), decomposition
