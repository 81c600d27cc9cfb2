"""Full eigendecomposition of dense real symmetric matrices.

The solver is a cyclic Jacobi sweep: deterministic, accurate to near machine
precision, and entirely adequate for the dense matrices this package builds
(a few hundred rows at most). Each call works on a private copy, so
concurrent calls on distinct inputs are safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

DEFAULT_TOL = 1e-12
DEFAULT_MAX_SWEEPS = 100


class NotConvergedError(RuntimeError):
    """Jacobi iteration exhausted its sweep budget; carries the residual."""

    def __init__(self, residual: float, sweeps: int):
        super().__init__(
            f"no convergence after {sweeps} sweeps; off-diagonal residual {residual:.3e}"
        )
        self.residual = residual


@dataclass
class Spectrum:
    """Eigenvalues sorted descending; optional orthonormal eigenvectors.

    Column i of ``vectors`` pairs with ``values[i]``. Exact ties keep their
    original column order, so repeated runs produce identical output.
    """

    values: np.ndarray
    vectors: np.ndarray | None = None

    @property
    def n(self) -> int:
        return len(self.values)


def sym_eigen(
    m: np.ndarray,
    tol: float = DEFAULT_TOL,
    max_sweeps: int = DEFAULT_MAX_SWEEPS,
    vectors: bool = True,
) -> Spectrum:
    """Diagonalize a symmetric matrix with cyclic Jacobi rotations.

    Converged when every off-diagonal magnitude drops below tol times the
    Frobenius norm of the input. Raises NotConvergedError (reporting the
    relative residual) if the sweep cap is hit first.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("square matrix required")
    n = a.shape[0]
    norm = float(np.linalg.norm(a))
    if float(np.max(np.abs(a - a.T))) > tol * max(norm, 1.0):
        raise ValueError("symmetric matrix required")
    a = (a + a.T) / 2.0
    v = np.eye(n) if vectors else None
    if n == 1 or norm == 0.0:
        return Spectrum(values=a.diagonal().copy(), vectors=v)

    thresh = tol * norm
    skip = thresh / (8 * n)  # below this a rotation cannot affect convergence
    iu = np.triu_indices(n, 1)
    off = float(np.max(np.abs(a[iu])))
    sweeps = 0
    while off > thresh:
        if sweeps >= max_sweeps:
            raise NotConvergedError(off / norm, sweeps)
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                tau = (aqq - app) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(tau, 1.0))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q]
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :]
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                # analytic values of the rotated pivot entries
                a[p, q] = a[q, p] = 0.0
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                if v is not None:
                    vp = v[:, p].copy()
                    vq = v[:, q]
                    v[:, p] = c * vp - s * vq
                    v[:, q] = s * vp + c * vq
        off = float(np.max(np.abs(a[iu])))

    vals = a.diagonal().copy()
    order = np.argsort(-vals, kind="stable")
    vals = vals[order]
    if v is not None:
        v = v[:, order]
    return Spectrum(values=vals, vectors=v)


def spectral_spread(spectrum: Spectrum) -> float:
    """Largest minus smallest eigenvalue; 0 for a 1x1 matrix."""
    if spectrum.n == 1:
        return 0.0
    return float(spectrum.values[0] - spectrum.values[-1])


def perron_vector(m: np.ndarray, tol: float = 1e-8) -> np.ndarray:
    """Positive unit eigenvector of the top eigenvalue.

    Valid for nonnegative irreducible matrices (the generalized distance
    matrix of a connected graph with alpha < 1). If the computed top
    eigenvector has entries that are negative or zero beyond tol, the input
    was not irreducible (e.g. a diagonal matrix at alpha = 1) and a
    ValueError is raised.
    """
    spec = sym_eigen(m, vectors=True)
    v = spec.vectors[:, 0].copy()
    i = int(np.argmax(np.abs(v)))
    if v[i] < 0:
        v = -v
    if np.min(v) <= tol:
        raise ValueError(
            "top eigenvector is not strictly positive; matrix is not irreducible"
        )
    return v / float(np.linalg.norm(v))


def rayleigh_lower_bound(profile) -> float:
    """Lower bound 2W/n on the top eigenvalue; tight exactly on
    transmission-regular graphs (the all-ones Rayleigh quotient)."""
    return 2.0 * profile.wiener / profile.n
