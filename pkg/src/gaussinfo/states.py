"""Gaussian (quasifree) bosonic states at the correlation-matrix level.

A state of ``s`` modes is described by a mean vector ``m`` (length ``2s``)
and a real symmetric correlation matrix ``alpha`` (``2s x 2s``), relative to
the skew-symmetric commutation matrix ``delta`` of the canonical vector
``R = [q_1 .. q_s, p_1 .. p_s]``.  A correlation matrix is physical exactly
when the Hermitian matrix ``alpha - (i/2) delta`` is positive semidefinite.

The module also provides the block isomorphism between real matrices of the
form ``[[A, -B], [B, A]]`` and complex ``s x s`` matrices ``A + iB``, which
is how gauge-invariant states are parametrized by their mode-occupation
matrix ``N``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import InvalidStateError

# Asymmetry (relative to matrix scale) below which inputs are symmetrized
# instead of rejected; keeps downstream Hermitian eigensolvers safe.
ASYMMETRY_TOL = 1e-10

# Slack on the minimum eigenvalue of alpha - (i/2) delta, scaled by
# (1 + ||alpha||): pure states sit exactly on the boundary and must pass.
PSD_TOL = 1e-9

# Residual bound for the purity criterion ||(delta^-1 alpha)^2 + I/4||.
PURITY_TOL = 1e-8

# Tolerance for the [[A, -B], [B, A]] block-structure check.
BLOCK_TOL = 1e-9


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def _max_abs(a) -> float:
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0


@dataclass(frozen=True, eq=False)
class CommutationContext:
    """Mode count, hbar, and the commutation matrix of the canonical vector."""

    s: int
    hbar: float
    delta: np.ndarray

    def conjugate(self) -> "CommutationContext":
        """Context with the sign-flipped commutation matrix (reference-side CCR)."""
        return CommutationContext(self.s, self.hbar, _readonly(-self.delta))


@dataclass(frozen=True, eq=False)
class GaussianState:
    """A validated Gaussian state: context, mean vector, correlation matrix."""

    ctx: CommutationContext
    m: np.ndarray
    alpha: np.ndarray

    @property
    def s(self) -> int:
        return self.ctx.s

    @property
    def hbar(self) -> float:
        return self.ctx.hbar

    @property
    def delta(self) -> np.ndarray:
        return self.ctx.delta


def make_context(s: int, hbar: float = 1.0) -> CommutationContext:
    """Build the canonical commutation context for ``s`` modes.

    The commutation matrix is ``[[0, hbar I], [-hbar I, 0]]`` in the
    ``q_1 .. q_s, p_1 .. p_s`` ordering.
    """
    if not isinstance(s, (int, np.integer)) or isinstance(s, bool) or s < 1:
        raise ValueError(f"mode count must be a positive integer, got {s!r}")
    hbar = float(hbar)
    if not np.isfinite(hbar) or hbar <= 0:
        raise ValueError(f"hbar must be a positive real, got {hbar!r}")
    eye = np.eye(s)
    zero = np.zeros((s, s))
    delta = np.block([[zero, hbar * eye], [-hbar * eye, zero]])
    return CommutationContext(int(s), hbar, _readonly(delta))


def make_gaussian_state(ctx: CommutationContext, m, alpha) -> GaussianState:
    """Validate ``(m, alpha)`` against the uncertainty relation and build a state.

    ``alpha`` is symmetrized when its asymmetry is below ``ASYMMETRY_TOL``
    (relative to the matrix scale) and rejected otherwise.  The uncertainty
    relation is checked as ``min eig(alpha - (i/2) delta) >= -PSD_TOL * (1 + ||alpha||)``.
    """
    n = 2 * ctx.s
    m = np.asarray(m, dtype=float).reshape(-1)
    if m.shape != (n,):
        raise ValueError(f"mean vector must have length {n}, got {m.shape}")
    alpha = np.asarray(alpha, dtype=float)
    if alpha.shape != (n, n):
        raise ValueError(f"correlation matrix must be {n}x{n}, got {alpha.shape}")
    if not (np.all(np.isfinite(m)) and np.all(np.isfinite(alpha))):
        raise ValueError("state parameters must be finite")

    asym = _max_abs(alpha - alpha.T)
    if asym > ASYMMETRY_TOL * (1.0 + _max_abs(alpha)):
        raise ValueError(f"correlation matrix is not symmetric (max deviation {asym:.3e})")
    alpha = (alpha + alpha.T) / 2.0

    w = np.linalg.eigvalsh(alpha - 0.5j * ctx.delta)
    tol = PSD_TOL * (1.0 + float(np.linalg.norm(alpha, 2)))
    if w[0] < -tol:
        raise InvalidStateError(
            f"uncertainty relation violated: min eigenvalue of alpha - (i/2) delta "
            f"is {w[0]:.6e} (tolerance -{tol:.3e})"
        )
    return GaussianState(ctx, _readonly(m), _readonly(alpha))


def vacuum_state(ctx: CommutationContext) -> GaussianState:
    """The vacuum: zero mean and ``alpha = (hbar/2) I``."""
    n = 2 * ctx.s
    return make_gaussian_state(ctx, np.zeros(n), 0.5 * ctx.hbar * np.eye(n))


def gauge_invariant_state(ctx: CommutationContext, n_matrix) -> GaussianState:
    """Zero-mean state built from a Hermitian PSD mode-occupation matrix.

    The correlation matrix is assembled blockwise as
    ``hbar * [[Re N + I/2, -Im N], [Im N, Re N + I/2]]``.
    """
    s = ctx.s
    n_matrix = np.asarray(n_matrix, dtype=complex)
    if n_matrix.shape != (s, s):
        raise ValueError(f"occupation matrix must be {s}x{s}, got {n_matrix.shape}")
    herm_dev = _max_abs(n_matrix - n_matrix.conj().T)
    if herm_dev > 1e-10 * (1.0 + _max_abs(n_matrix)):
        raise ValueError(f"occupation matrix is not Hermitian (max deviation {herm_dev:.3e})")
    n_matrix = (n_matrix + n_matrix.conj().T) / 2.0
    wmin = float(np.linalg.eigvalsh(n_matrix)[0])
    if wmin < -1e-10 * (1.0 + _max_abs(n_matrix)):
        raise ValueError(f"occupation matrix has negative eigenvalue {wmin:.6e}")

    re = n_matrix.real + 0.5 * np.eye(s)
    im = n_matrix.imag
    alpha = ctx.hbar * np.block([[re, -im], [im, re]])
    return make_gaussian_state(ctx, np.zeros(2 * s), alpha)


def elementary_state(n_mean: float, hbar: float = 1.0) -> GaussianState:
    """One-mode gauge-invariant state with mean occupation ``n_mean``."""
    if n_mean < 0:
        raise ValueError(f"mean occupation must be nonnegative, got {n_mean!r}")
    return gauge_invariant_state(make_context(1, hbar), [[n_mean]])


def real_to_complex(mat) -> np.ndarray:
    """Map a real block matrix ``[[A, -B], [B, A]]`` to the complex matrix ``A + iB``.

    The map is an algebra isomorphism: it preserves sums and products, and
    halves the trace of symmetric inputs.  Inputs without the required block
    structure are rejected with the maximum deviation reported.
    """
    mat = np.asarray(mat, dtype=float)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] % 2:
        raise ValueError(f"expected an even-dimensional square matrix, got {mat.shape}")
    s = mat.shape[0] // 2
    a1, a2 = mat[:s, :s], mat[s:, s:]
    b1, b2 = mat[s:, :s], -mat[:s, s:]
    dev = max(_max_abs(a1 - a2), _max_abs(b1 - b2))
    if dev > BLOCK_TOL * (1.0 + _max_abs(mat)):
        raise ValueError(f"matrix lacks [[A, -B], [B, A]] block structure (max deviation {dev:.3e})")
    return (a1 + a2) / 2.0 + 1j * (b1 + b2) / 2.0


def complex_to_real(cmat) -> np.ndarray:
    """Inverse of :func:`real_to_complex`: ``C`` maps to ``[[Re C, -Im C], [Im C, Re C]]``."""
    cmat = np.atleast_2d(np.asarray(cmat, dtype=complex))
    if cmat.shape[0] != cmat.shape[1]:
        raise ValueError(f"expected a square matrix, got {cmat.shape}")
    re, im = cmat.real, cmat.imag
    return np.block([[re, -im], [im, re]])


def characteristic_function(state: GaussianState, z) -> complex:
    """Evaluate ``exp(i m.z - z.alpha.z / 2)`` at a real phase-space point ``z``."""
    z = np.asarray(z, dtype=float).reshape(-1)
    if z.shape != state.m.shape:
        raise ValueError(f"z must have length {state.m.shape[0]}, got {z.shape}")
    if not np.all(np.isfinite(z)):
        raise ValueError("z must be finite")
    return complex(np.exp(1j * (state.m @ z) - 0.5 * (z @ state.alpha @ z)))


def purity_defect(alpha, delta) -> float:
    """Max-norm of ``(delta^-1 alpha)^2 + I/4``; zero exactly for pure states."""
    alpha = np.asarray(alpha, dtype=float)
    delta = np.asarray(delta, dtype=float)
    k = np.linalg.solve(delta, alpha)
    return _max_abs(k @ k + 0.25 * np.eye(k.shape[0]))


def is_pure(state: GaussianState) -> bool:
    """Purity check via the residual of ``(delta^-1 alpha)^2 = -I/4``."""
    return purity_defect(state.alpha, state.delta) <= PURITY_TOL


def heisenberg_matrix(state: GaussianState) -> np.ndarray:
    """The matrix ``delta^-T alpha delta^-1 - alpha^-1 / 4``.

    Congruent to the uncertainty relation combined with its transpose, so it
    is positive semidefinite for every valid state, with equality exactly on
    pure states.
    """
    dinv = np.linalg.inv(state.delta)
    return dinv.T @ state.alpha @ dinv - 0.25 * np.linalg.inv(state.alpha)


def state_to_dict(state: GaussianState) -> dict:
    """Serialize to the ``{s, hbar, m, alpha}`` document used by the CLI."""
    return {
        "s": state.s,
        "hbar": state.hbar,
        "m": state.m.tolist(),
        "alpha": state.alpha.tolist(),
    }


def state_from_dict(doc: dict) -> GaussianState:
    """Rebuild and re-validate a state from its ``{s, hbar, m, alpha}`` document."""
    ctx = make_context(int(doc["s"]), float(doc.get("hbar", 1.0)))
    return make_gaussian_state(ctx, doc["m"], doc["alpha"])
