"""Von Neumann entropy of Gaussian states from the symplectic spectrum.

The eigenvalues of ``delta^-1 alpha`` are purely imaginary pairs ``+/- i a_j``
with ``a_j >= 1/2`` for physical states.  The entropy is the sum of
``(x+1) log(x+1) - x log x`` over ``x = a_j - 1/2``, and can equivalently be
written through the matrix functions ``abs`` and ``G`` evaluated on
``delta^-1 alpha``; all three routes are implemented so they can be checked
against one another.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import InvalidStateError, NumericalFailureError
from .states import GaussianState

LN2 = math.log(2.0)

# Window below 1/2 within which symplectic eigenvalues clamp to exactly 1/2,
# so boundary (pure) states contribute exactly zero entropy.  Eigensolver
# noise lands on either side of the boundary, hence the tight upper window.
SPECTRUM_CLAMP = 1e-8
SPECTRUM_CLAMP_ABOVE = 1e-12

# Pairing tolerance for +/- i a_j eigenvalues, scaled by the spectral radius.
PAIRING_TOL = 1e-8

# Eigenvector-basis condition number beyond which matrix functions refuse.
CONDITION_LIMIT = 1e8


@dataclass(frozen=True)
class EntropyValue:
    """An entropy stored in nats, convertible to bits exactly by ``1/ln 2``."""

    nats: float

    @property
    def bits(self) -> float:
        return self.nats / LN2

    def value(self, base: str = "nats") -> float:
        if base == "nats":
            return self.nats
        if base == "bits":
            return self.bits
        raise ValueError(f"unknown entropy base {base!r}")


@dataclass(frozen=True, eq=False)
class SymplecticSpectrum:
    """The values ``a_j`` sorted descending, one per mode."""

    values: np.ndarray

    @property
    def s(self) -> int:
        return len(self.values)


def thermal_entropy(x: float) -> float:
    """Entropy ``(x+1) log(x+1) - x log x`` of a thermal mode with occupation ``x``, in nats."""
    x = float(x)
    if x < 0:
        raise ValueError(f"occupation must be nonnegative, got {x!r}")
    if x == 0.0:
        return 0.0
    return (x + 1.0) * math.log1p(x) - x * math.log(x)


def squared_sympeig_entropy(a_sq: float) -> float:
    """Per-mode entropy from a squared symplectic eigenvalue.

    Equals ``thermal_entropy(sqrt(a_sq) - 1/2)``; arguments within
    ``SPECTRUM_CLAMP`` below ``1/4`` clamp to ``1/4``.
    """
    a_sq = float(a_sq)
    if a_sq < 0.25 - SPECTRUM_CLAMP:
        raise ValueError(f"squared symplectic eigenvalue {a_sq!r} is below 1/4")
    return thermal_entropy(max(math.sqrt(max(a_sq, 0.25)) - 0.5, 0.0))


def _eig_with_guard(mat: np.ndarray):
    w, basis = np.linalg.eig(mat)
    cond = float(np.linalg.cond(basis))
    if not np.isfinite(cond) or cond > CONDITION_LIMIT:
        raise NumericalFailureError(
            f"eigenbasis condition number {cond:.3e} exceeds {CONDITION_LIMIT:.0e}; "
            "matrix is defective or too close to it"
        )
    return w, basis


def matrix_abs(mat) -> np.ndarray:
    """Replace the eigenvalues of a diagonalizable matrix by their moduli.

    Computed as ``T diag(|w_j|) T^-1`` from the eigendecomposition; refuses
    matrices whose eigenvector basis is ill-conditioned.
    """
    mat = np.asarray(mat)
    w, basis = _eig_with_guard(mat)
    out = (basis * np.abs(w)) @ np.linalg.inv(basis)
    if np.isrealobj(mat):
        return out.real
    return out


def spectrum_from_matrices(alpha, delta) -> np.ndarray:
    """Symplectic spectrum of ``(alpha, delta)``: values ``a_j`` sorted descending.

    Verifies that the eigenvalues of ``delta^-1 alpha`` form ``+/- i a_j``
    pairs within ``PAIRING_TOL`` and clamps values just below ``1/2`` up to
    exactly ``1/2``.
    """
    alpha = np.asarray(alpha, dtype=float)
    delta = np.asarray(delta, dtype=float)
    k = np.linalg.solve(delta, alpha)
    w = np.linalg.eigvals(k)
    radius = float(np.max(np.abs(w)))
    tol = PAIRING_TOL * max(radius, 1e-300)
    if float(np.max(np.abs(w.real))) > tol:
        raise NumericalFailureError(
            f"eigenvalues of delta^-1 alpha are not purely imaginary "
            f"(max real part {np.max(np.abs(w.real)):.3e}, tolerance {tol:.3e})"
        )
    im = np.sort(w.imag)
    s = len(im) // 2
    neg = -im[:s]
    pos = im[s:][::-1].copy()
    if float(np.max(np.abs(neg - pos))) > tol:
        raise NumericalFailureError("eigenvalues do not pair into +/- i a_j within tolerance")
    a = (neg + pos) / 2.0
    low = a < 0.5 - SPECTRUM_CLAMP
    if np.any(low):
        raise InvalidStateError(
            f"symplectic eigenvalue {a[low][0]:.12g} is below 1/2: not a physical state"
        )
    a[(a >= 0.5 - SPECTRUM_CLAMP) & (a <= 0.5 + SPECTRUM_CLAMP_ABOVE)] = 0.5
    return a


def symplectic_spectrum(state: GaussianState) -> SymplecticSpectrum:
    """Symplectic spectrum of a Gaussian state."""
    values = spectrum_from_matrices(state.alpha, state.delta)
    values.setflags(write=False)
    return SymplecticSpectrum(values)


def entropy_from_matrices(alpha, delta) -> float:
    """Entropy in nats of the Gaussian state with the given matrices."""
    a = spectrum_from_matrices(alpha, delta)
    return float(sum(thermal_entropy(x) for x in a - 0.5))


def entropy(state: GaussianState) -> EntropyValue:
    """Von Neumann entropy of a Gaussian state, in nats.

    Zero exactly on pure states thanks to the spectrum clamp.
    """
    return EntropyValue(entropy_from_matrices(state.alpha, state.delta))


def _matrix_function(mat: np.ndarray, scalar_func) -> np.ndarray:
    w, basis = _eig_with_guard(mat)
    vals = np.array([scalar_func(x) for x in w])
    return (basis * vals) @ np.linalg.inv(basis)


def entropy_abs_form(alpha, delta) -> float:
    """Entropy as ``(1/2) tr g(abs(delta^-1 alpha) - I/2)`` via matrix functions."""
    alpha = np.asarray(alpha, dtype=float)
    delta = np.asarray(delta, dtype=float)
    k = np.linalg.solve(delta, alpha)
    b = matrix_abs(k) - 0.5 * np.eye(k.shape[0])

    def g_clamped(x):
        x = float(np.real(x))
        if x < -SPECTRUM_CLAMP:
            raise InvalidStateError(f"matrix argument has eigenvalue {x:.6e} below 0")
        return thermal_entropy(max(x, 0.0))

    return 0.5 * float(np.trace(_matrix_function(b, g_clamped)).real)


def entropy_squared_form(alpha, delta) -> float:
    """Entropy as ``(1/2) tr G(-(delta^-1 alpha)^2)`` via matrix functions."""
    alpha = np.asarray(alpha, dtype=float)
    delta = np.asarray(delta, dtype=float)
    k = np.linalg.solve(delta, alpha)
    m2 = -(k @ k)

    def big_g(x):
        return squared_sympeig_entropy(float(np.real(x)))

    return 0.5 * float(np.trace(_matrix_function(m2, big_g)).real)


def entropy_from_occupation(n_matrix) -> float:
    """Entropy ``tr g(N)`` of a gauge-invariant state from its occupation matrix."""
    n_matrix = np.asarray(n_matrix, dtype=complex)
    w = np.linalg.eigvalsh((n_matrix + n_matrix.conj().T) / 2.0)
    return float(sum(thermal_entropy(max(x, 0.0)) for x in w))
