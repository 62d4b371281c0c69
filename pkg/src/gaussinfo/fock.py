"""Brute-force verification in a truncated Fock basis.

Everything here works with explicit (possibly large) density matrices so the
Gaussian closed forms can be checked against direct matrix arithmetic:
thermal states, their two-mode squeezed purification, the beamsplitter
dilation of the attenuation channel, and eigenvalue-based entropy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .exceptions import NumericalFailureError, TruncationError

# Hermiticity and positivity slack for density-matrix validation.
HERMITICITY_TOL = 1e-12
EIGENVALUE_FLOOR = -1e-10

# Eigenvalues below this are dropped from the entropy sum.
ENTROPY_CUTOFF = 1e-14

# Population allowed at the top retained Fock level before attenuation refuses.
TOP_LEVEL_TOL = 1e-8

# Unitarity slack for the exponentiated beamsplitter generator.
UNITARITY_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class FockDensityMatrix:
    """A density matrix on ``modes`` copies of a ``dim``-level truncated Fock space."""

    dim: int
    modes: int
    data: np.ndarray
    trace_deficit: float


def _make_density(data: np.ndarray, dim: int, modes: int, trace_deficit: float) -> FockDensityMatrix:
    size = dim**modes
    if data.shape != (size, size):
        raise ValueError(f"density matrix must be {size}x{size}, got {data.shape}")
    herm_dev = float(np.max(np.abs(data - data.conj().T)))
    if herm_dev > HERMITICITY_TOL:
        raise ValueError(f"density matrix is not Hermitian (max deviation {herm_dev:.3e})")
    trace = float(np.trace(data).real)
    if trace > 1.0 + 1e-9 or trace < 1.0 - trace_deficit - 1e-9:
        raise ValueError(f"trace {trace!r} outside [1 - {trace_deficit!r}, 1]")
    data.setflags(write=False)
    return FockDensityMatrix(dim=dim, modes=modes, data=data, trace_deficit=trace_deficit)


def _thermal_weights(n_mean: float, dim: int) -> np.ndarray:
    p = np.empty(dim)
    p[0] = 1.0 / (n_mean + 1.0)
    ratio = n_mean / (n_mean + 1.0)
    for j in range(1, dim):
        p[j] = p[j - 1] * ratio
    return p


def _check_truncation(n_mean: float, dim: int, max_deficit) -> float:
    deficit = (n_mean / (n_mean + 1.0)) ** dim if n_mean > 0 else 0.0
    if max_deficit is not None and deficit > max_deficit:
        raise TruncationError(
            f"dim={dim} leaves truncated weight {deficit:.3e} for occupation {n_mean}, "
            f"above the requested bound {max_deficit:.1e}"
        )
    return deficit


def thermal_fock(n_mean: float, dim: int, max_deficit: float | None = None) -> FockDensityMatrix:
    """Truncated thermal state: diagonal weights ``n^j / (n+1)^(j+1)``."""
    if n_mean < 0:
        raise ValueError(f"mean occupation must be nonnegative, got {n_mean!r}")
    if dim < 2:
        raise ValueError(f"truncation dimension must be at least 2, got {dim!r}")
    deficit = _check_truncation(n_mean, dim, max_deficit)
    return _make_density(np.diag(_thermal_weights(n_mean, dim)), dim, 1, deficit)


def tmsv_fock(n_mean: float, dim: int, max_deficit: float | None = None) -> FockDensityMatrix:
    """Two-mode squeezed purification of the thermal state, as a rank-1 density matrix.

    The state vector is ``sum_j sqrt(n^j / (n+1)^(j+1)) |j, j>``; tracing out
    either mode recovers the truncated thermal state.
    """
    if n_mean < 0:
        raise ValueError(f"mean occupation must be nonnegative, got {n_mean!r}")
    if dim < 2:
        raise ValueError(f"truncation dimension must be at least 2, got {dim!r}")
    deficit = _check_truncation(n_mean, dim, max_deficit)
    amp = np.sqrt(_thermal_weights(n_mean, dim))
    psi = np.zeros(dim * dim)
    psi[np.arange(dim) * dim + np.arange(dim)] = amp
    return _make_density(np.outer(psi, psi), dim, 2, deficit)


def partial_trace(rho: FockDensityMatrix, keep: int) -> FockDensityMatrix:
    """Trace out one mode of a two-mode state, keeping mode ``keep`` (0 or 1)."""
    if rho.modes != 2:
        raise ValueError(f"partial trace expects a two-mode state, got modes={rho.modes}")
    d = rho.dim
    t = rho.data.reshape(d, d, d, d)
    if keep == 0:
        reduced = np.einsum("irjr->ij", t)
    elif keep == 1:
        reduced = np.einsum("rirj->ij", t)
    else:
        raise ValueError(f"keep must be 0 or 1, got {keep!r}")
    return _make_density(np.ascontiguousarray(reduced), d, 1, rho.trace_deficit)


def attenuation_coefficients(k: float, dim: int) -> np.ndarray:
    """Beamsplitter matrix elements ``<m, j - m| U |j, 0>`` for ``cos(theta) = k``.

    The two-mode generator ``theta (a1+ a2 - a1 a2+)`` conserves total photon
    number, so it is exponentiated blockwise on the truncated space; each
    block is checked to be unitary within ``UNITARITY_TOL``.  Row ``j`` holds
    the coefficients for input level ``j``, indexed by the output level ``m``.
    """
    if not 0.0 < k < 1.0:
        raise ValueError(f"attenuation coefficient must lie in (0, 1), got {k!r}")
    theta = math.acos(k)
    coeffs = np.zeros((dim, dim))
    coeffs[0, 0] = 1.0
    for j in range(1, dim):
        gen = np.zeros((j + 1, j + 1))
        for m in range(j):
            step = math.sqrt((m + 1) * (j - m))
            gen[m + 1, m] = step
            gen[m, m + 1] = -step
        block = scipy.linalg.expm(theta * gen)
        unit_dev = float(np.max(np.abs(block.T @ block - np.eye(j + 1))))
        if unit_dev > UNITARITY_TOL:
            raise NumericalFailureError(
                f"beamsplitter block for total number {j} deviates from unitarity by {unit_dev:.3e}"
            )
        coeffs[j, : j + 1] = block[:, j]
    return coeffs


def beamsplitter_attenuate(rho12: FockDensityMatrix, k: float, dim: int | None = None) -> FockDensityMatrix:
    """Attenuate mode 1 of a two-mode state by a beamsplitter with a vacuum ancilla.

    Applied to a (system, reference) purification this returns the joint
    (output, reference) state of the extended channel; tracing out the
    reference gives the channel output itself.
    """
    if rho12.modes != 2:
        raise ValueError(f"expected a two-mode state, got modes={rho12.modes}")
    d = rho12.dim
    if dim is not None and dim != d:
        raise ValueError(f"dim={dim} does not match the state truncation {d}")

    diag = np.diagonal(rho12.data).real.reshape(d, d)
    top_population = max(float(diag[d - 1, :].sum()), float(diag[:, d - 1].sum()))
    if top_population > TOP_LEVEL_TOL:
        raise TruncationError(
            f"top Fock level holds population {top_population:.3e}; "
            f"increase dim beyond {d} before attenuating"
        )

    coeffs = attenuation_coefficients(k, d)
    # One sparse operator on the composite (level, level') index pair applies
    # every loss branch at once: rows (m, m'), columns (m + l, m' + l).
    rows, cols, vals = [], [], []
    levels = np.arange(d)
    for lost in range(d):
        m = levels[: d - lost]
        b = coeffs[m + lost, m]
        rows.append((m[:, None] * d + m[None, :]).ravel())
        cols.append(((m[:, None] + lost) * d + (m[None, :] + lost)).ravel())
        vals.append((b[:, None] * b[None, :]).ravel())
    kraus_op = scipy.sparse.csr_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
        shape=(d * d, d * d),
    )
    paired = rho12.data.reshape(d, d, d, d).transpose(0, 2, 1, 3).reshape(d * d, d * d)
    out = kraus_op @ paired
    data = np.ascontiguousarray(
        out.reshape(d, d, d, d).transpose(0, 2, 1, 3).reshape(d * d, d * d)
    )
    deficit = max(rho12.trace_deficit, 1.0 - float(np.trace(data).real))
    return _make_density(data, d, 2, deficit)


def vn_entropy_fock(rho: FockDensityMatrix) -> float:
    """Entropy ``-sum w log w`` over the eigenvalues of the density matrix, in nats.

    Eigenvalues below ``ENTROPY_CUTOFF`` are dropped; anything below the
    negativity floor is rejected.
    """
    herm = (rho.data + rho.data.conj().T) / 2.0
    w = np.linalg.eigvalsh(herm)
    if w[0] < EIGENVALUE_FLOOR:
        raise ValueError(f"density matrix has negative eigenvalue {w[0]:.6e}")
    w = w[w > ENTROPY_CUTOFF]
    return float(max(-np.sum(w * np.log(w)), 0.0))
