"""Explicit Gaussian purifications at the correlation-matrix level.

A zero-mean state ``(alpha, delta)`` purifies to a two-sided Gaussian state
with correlation matrix ``[[alpha, C], [-C, alpha]]`` where
``C = delta sqrt(-(delta^-1 alpha)^2 - I/4)``, taken relative to the doubled
commutation matrix ``blockdiag(delta, -delta)``.  The result is pure, and
either partial state reproduces ``alpha``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import InvalidStateError, NumericalFailureError, UnsupportedInputError
from .states import (
    PURITY_TOL,
    CommutationContext,
    GaussianState,
    _max_abs,
    _readonly,
    make_gaussian_state,
    purity_defect,
    real_to_complex,
)

# Eigenvalues of the square-root operand within [-SQRT_CLAMP, 0] clamp to 0:
# pure inputs make the operand exactly zero up to floating noise.
SQRT_CLAMP = 1e-9

# Mean vectors with entries above this are rejected by purify.
MEAN_TOL = 1e-12

# Guard on the symmetry of the assembled two-sided correlation matrix.
ASSEMBLY_SYM_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class BipartiteGaussianState:
    """A Gaussian state on system plus reference, over ``blockdiag(delta, -delta)``."""

    s: int
    hbar: float
    delta: np.ndarray
    alpha12: np.ndarray

    @property
    def delta12(self) -> np.ndarray:
        z = np.zeros_like(self.delta)
        return np.block([[self.delta, z], [z, -self.delta]])

    def side_block(self, side: int) -> np.ndarray:
        n = 2 * self.s
        if side == 1:
            return self.alpha12[:n, :n]
        if side == 2:
            return self.alpha12[n:, n:]
        raise ValueError(f"side must be 1 or 2, got {side!r}")

    def cross_block(self) -> np.ndarray:
        n = 2 * self.s
        return self.alpha12[:n, n:]


def matrix_sqrt_psd(mat, tol: float = SQRT_CLAMP) -> np.ndarray:
    """PSD square root of a symmetric or Hermitian PSD matrix.

    Eigenvalues in ``[-tol, 0]`` are clamped to zero; anything below ``-tol``
    is rejected.
    """
    mat = np.asarray(mat)
    dev = _max_abs(mat - mat.conj().T)
    if dev > 1e-9 * (1.0 + _max_abs(mat)):
        raise ValueError(f"matrix is not Hermitian (max deviation {dev:.3e})")
    herm = (mat + mat.conj().T) / 2.0
    w, v = np.linalg.eigh(herm)
    if w[0] < -tol:
        raise ValueError(f"matrix has negative eigenvalue {w[0]:.6e} beyond tolerance {tol:.1e}")
    root = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
    if np.isrealobj(mat):
        return root.real
    return root


def make_bipartite_state(delta, alpha12, hbar: float) -> BipartiteGaussianState:
    """Validate a two-sided correlation matrix against ``blockdiag(delta, -delta)``."""
    delta = np.asarray(delta, dtype=float)
    alpha12 = np.asarray(alpha12, dtype=float)
    n = delta.shape[0]
    if alpha12.shape != (2 * n, 2 * n):
        raise ValueError(f"two-sided matrix must be {2 * n}x{2 * n}, got {alpha12.shape}")
    asym = _max_abs(alpha12 - alpha12.T)
    if asym > ASSEMBLY_SYM_TOL * (1.0 + _max_abs(alpha12)):
        raise InvalidStateError(f"two-sided correlation matrix is not symmetric (max deviation {asym:.3e})")
    alpha12 = (alpha12 + alpha12.T) / 2.0

    z = np.zeros_like(delta)
    delta12 = np.block([[delta, z], [z, -delta]])
    w = np.linalg.eigvalsh(alpha12 - 0.5j * delta12)
    tol = 1e-9 * (1.0 + float(np.linalg.norm(alpha12, 2)))
    if w[0] < -tol:
        raise InvalidStateError(
            f"two-sided uncertainty relation violated: min eigenvalue {w[0]:.6e}"
        )
    return BipartiteGaussianState(n // 2, float(hbar), _readonly(delta.copy()), _readonly(alpha12))


def purify(state: GaussianState) -> BipartiteGaussianState:
    """Purify a zero-mean Gaussian state by doubling it against a reference copy.

    The returned state is pure, and its side-1 block is ``alpha`` bit for bit.
    """
    if _max_abs(state.m) > MEAN_TOL:
        raise UnsupportedInputError("purification requires a zero mean vector")
    delta = np.asarray(state.delta, dtype=float)
    alpha = np.asarray(state.alpha, dtype=float)
    n = alpha.shape[0]

    k = np.linalg.solve(delta, alpha)
    operand = -(k @ k) - 0.25 * np.eye(n)
    operand = (operand + operand.T) / 2.0
    try:
        root = matrix_sqrt_psd(operand, tol=SQRT_CLAMP)
    except ValueError as exc:
        raise InvalidStateError(f"purification square root failed: {exc}") from exc

    cross = delta @ root
    alpha12 = np.block([[alpha, cross], [-cross, alpha]])
    bi = make_bipartite_state(delta, alpha12, state.hbar)

    residual = purity_residual(bi)
    if residual > PURITY_TOL:
        raise NumericalFailureError(f"purification is not pure: residual {residual:.3e}")
    return bi


def purity_residual(bi: BipartiteGaussianState) -> float:
    """Max-norm of ``(delta12^-1 alpha12)^2 + I/4``."""
    return purity_defect(bi.alpha12, bi.delta12)


def partial_state(bi: BipartiteGaussianState, side: int) -> GaussianState:
    """Partial state of one side; side 2 carries the sign-flipped commutation matrix."""
    if side == 1:
        ctx = CommutationContext(bi.s, bi.hbar, bi.delta)
    elif side == 2:
        ctx = CommutationContext(bi.s, bi.hbar, _readonly(-bi.delta))
    else:
        raise ValueError(f"side must be 1 or 2, got {side!r}")
    return make_gaussian_state(ctx, np.zeros(2 * bi.s), bi.side_block(side))


def bipartite_complex_form(bi: BipartiteGaussianState) -> np.ndarray:
    """Blockwise complex representation of ``delta12^-1 alpha12``.

    Each of the four ``2s x 2s`` blocks is mapped through the
    ``[[A, -B], [B, A]] -> A + iB`` isomorphism, giving a ``2s x 2s`` complex
    matrix.  Defined for gauge-invariant states, whose blocks have the
    required structure.
    """
    k12 = np.linalg.solve(bi.delta12, bi.alpha12)
    n = 2 * bi.s
    return np.block(
        [
            [real_to_complex(k12[:n, :n]), real_to_complex(k12[:n, n:])],
            [real_to_complex(k12[n:, :n]), real_to_complex(k12[n:, n:])],
        ]
    )
