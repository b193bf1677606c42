"""Floating-point eigenvalue cross-checks.

This module is scaffolding: no public API of the package returns floats as
primary results.  It exists so exact spectra and index values can be checked
against an independent numerical route.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import DisconnectedGraphError, Graph
from .linalg import laplacian

SYMMETRY_TOL = 1e-12
ZERO_EIGENVALUE_TOL = 1e-7


@dataclass(frozen=True)
class FloatSpectrum:
    eigenvalues: tuple[float, ...]  # descending
    residual: float  # max |Av - lambda v| over computed pairs


def symmetric_eigenvalues(m: np.ndarray) -> FloatSpectrum:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("square matrix required")
    scale = max(1.0, float(np.abs(m).max()))
    if float(np.abs(m - m.T).max()) > SYMMETRY_TOL * scale:
        raise ValueError("matrix is not symmetric")
    w, v = np.linalg.eigh(m)
    residual = float(np.abs(m @ v - v * w).max()) if m.shape[0] else 0.0
    return FloatSpectrum(tuple(sorted(w.tolist(), reverse=True)), residual)


def laplacian_spectrum(g: Graph) -> FloatSpectrum:
    lap = np.array(laplacian(g).data, dtype=float)
    return symmetric_eigenvalues(lap)


def kf_from_spectrum(g: Graph) -> float:
    """Kirchhoff index as n * sum of reciprocal nonzero Laplacian eigenvalues."""
    spectrum = laplacian_spectrum(g)
    zeros = [x for x in spectrum.eigenvalues if abs(x) < ZERO_EIGENVALUE_TOL]
    if len(zeros) != 1:
        raise DisconnectedGraphError(
            f"expected one zero Laplacian eigenvalue, found {len(zeros)}"
        )
    nonzero = [x for x in spectrum.eigenvalues if abs(x) >= ZERO_EIGENVALUE_TOL]
    return g.n * sum(1.0 / x for x in nonzero)


def normalized_spectrum(g: Graph) -> FloatSpectrum:
    """Eigenvalues of D^{-1/2} L D^{-1/2}; requires minimum degree >= 1."""
    degs = g.degrees()
    if min(degs) < 1:
        raise ValueError("normalized Laplacian needs minimum degree >= 1")
    lap = np.array(laplacian(g).data, dtype=float)
    dinv_sqrt = np.diag([1.0 / np.sqrt(d) for d in degs])
    return symmetric_eigenvalues(dinv_sqrt @ lap @ dinv_sqrt)


def dkf_from_spectrum(g: Graph) -> float:
    """Degree Kirchhoff index as 2m * sum of reciprocal nonzero normalized
    eigenvalues."""
    spectrum = normalized_spectrum(g)
    zeros = [x for x in spectrum.eigenvalues if abs(x) < ZERO_EIGENVALUE_TOL]
    if len(zeros) != 1:
        raise DisconnectedGraphError(
            f"expected one zero normalized eigenvalue, found {len(zeros)}"
        )
    nonzero = [x for x in spectrum.eigenvalues if abs(x) >= ZERO_EIGENVALUE_TOL]
    return 2 * g.edge_count() * sum(1.0 / x for x in nonzero)
