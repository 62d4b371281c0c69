"""The one-mode attenuation/amplification channel family.

A channel with coefficient ``k`` mixes the signal mode with a vacuum
environment mode, sending a correlation matrix ``alpha`` to
``k^2 alpha + (hbar |1 - k^2| / 2) I``.  For a gauge-invariant input with
occupation ``n`` the output is again gauge-invariant with occupation
``k^2 n`` below unity and ``k^2 n + (k^2 - 1)`` above, and both the output
entropy and the entropy exchange have closed forms that are cross-checked
here against the general spectral route.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .entropy import EntropyValue, entropy, thermal_entropy
from .exceptions import NumericalFailureError, UnsupportedInputError
from .purification import BipartiteGaussianState, bipartite_complex_form, make_bipartite_state, purify
from .states import GaussianState, _max_abs, make_gaussian_state

# Max deviation of alpha from hbar (n + 1/2) I for elementary detection,
# scaled by (1 + ||alpha||).
ELEMENTARY_TOL = 1e-9

# Agreement required between closed forms and the general spectral route.
CROSSCHECK_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class ExtendedOutput:
    """Result of the channel extended by the identity on the reference side."""

    bi_out: BipartiteGaussianState
    complex_form: np.ndarray


def elementary_occupation(state: GaussianState) -> float:
    """Mean occupation of a one-mode gauge-invariant state.

    Raises ``UnsupportedInputError`` when the state is not of the form
    ``alpha = hbar (n + 1/2) I`` with zero mean.
    """
    if state.s != 1:
        raise UnsupportedInputError(f"expected a one-mode state, got s={state.s}")
    if _max_abs(state.m) > 1e-12:
        raise UnsupportedInputError("expected a zero-mean state")
    scaled = state.alpha / state.hbar
    n = 0.5 * (scaled[0, 0] + scaled[1, 1]) - 0.5
    dev = _max_abs(scaled - (n + 0.5) * np.eye(2))
    if dev > ELEMENTARY_TOL * (1.0 + _max_abs(scaled)):
        raise UnsupportedInputError(
            f"state is not gauge-invariant elementary (deviation {dev:.3e})"
        )
    return float(max(n, 0.0))


@dataclass(frozen=True)
class GaussianChannel:
    """Attenuator (k < 1), identity (k = 1) or amplifier (k > 1)."""

    k: float

    def __post_init__(self):
        if not (np.isfinite(self.k) and self.k > 0):
            raise ValueError(f"channel coefficient must be a positive real, got {self.k!r}")

    @property
    def kind(self) -> str:
        if self.k < 1.0:
            return "attenuator"
        if self.k == 1.0:
            return "identity"
        return "amplifier"

    def added_noise(self, hbar: float) -> float:
        """Variance added by the vacuum environment: ``hbar |1 - k^2| / 2``."""
        return 0.5 * hbar * abs(1.0 - self.k * self.k)

    def output_occupation(self, n_mean: float) -> float:
        """Occupation of the output for an elementary input with occupation ``n_mean``."""
        k2 = self.k * self.k
        if self.k < 1.0:
            return k2 * n_mean
        if self.k == 1.0:
            return n_mean
        return k2 * n_mean + (k2 - 1.0)

    def apply(self, state: GaussianState) -> GaussianState:
        """Transform a one-mode zero-mean state at the correlation-matrix level."""
        if state.s != 1:
            raise UnsupportedInputError(f"channel acts on one mode, got s={state.s}")
        if _max_abs(state.m) > 1e-12:
            raise UnsupportedInputError("channel supports zero-mean states only")
        k2 = self.k * self.k
        alpha_out = k2 * state.alpha + self.added_noise(state.hbar) * np.eye(2)
        return make_gaussian_state(state.ctx, np.zeros(2), alpha_out)

    def extended_apply(self, state: GaussianState) -> ExtendedOutput:
        """Apply the channel to side 1 of the purification, identity on side 2.

        Restricted to elementary inputs.  The side-1 block of the result is
        the channel output, the side-2 block is the untouched input, and the
        cross blocks scale by ``k``.
        """
        elementary_occupation(state)
        bi = purify(state)
        a12 = bi.alpha12
        k2 = self.k * self.k
        noise = self.added_noise(state.hbar)

        top = k2 * a12[:2, :2] + noise * np.eye(2)
        cross = self.k * a12[:2, 2:]
        alpha12_out = np.block([[top, cross], [cross.T, a12[2:, 2:]]])
        bi_out = make_bipartite_state(bi.delta, alpha12_out, state.hbar)
        return ExtendedOutput(bi_out=bi_out, complex_form=bipartite_complex_form(bi_out))

    def exchange_eigenvalues(self, state: GaussianState):
        """Eigenvalue pair of the extended output's complex form.

        The first eigenvalue has modulus ``1/2`` (and equals ``i/2`` exactly
        for ``k <= 1``); only the modulus of the second enters the entropy
        exchange.
        """
        cform = self.extended_apply(state).complex_form
        w = list(np.linalg.eigvals(cform))
        scale = 1.0 + max(abs(z) for z in w)
        tol = 1e-9 * scale
        near_half = [z for z in w if abs(abs(z) - 0.5) <= tol]
        if not near_half:
            raise NumericalFailureError(
                f"no exchange eigenvalue of modulus 1/2 among {w!r}"
            )
        lam1 = max(near_half, key=lambda z: z.imag)
        rest = list(w)
        rest.remove(lam1)
        lam2 = complex(rest[0])
        lam1 = complex(lam1)
        if self.k <= 1.0 and abs(lam1 - 0.5j) > tol:
            raise NumericalFailureError(f"leading exchange eigenvalue {lam1!r} deviates from i/2")
        return lam1, lam2

    def entropy_exchange(self, state: GaussianState) -> EntropyValue:
        """Entropy of the extended output, by closed form with a spectral cross-check."""
        n_mean = elementary_occupation(state)
        k2 = self.k * self.k
        if self.k < 1.0:
            closed = thermal_entropy((1.0 - k2) * n_mean)
        elif self.k == 1.0:
            closed = 0.0
        else:
            closed = thermal_entropy((k2 - 1.0) * (n_mean + 1.0))

        lam1, lam2 = self.exchange_eigenvalues(state)
        spectral = thermal_entropy(max(abs(lam1) - 0.5, 0.0)) + thermal_entropy(
            max(abs(lam2) - 0.5, 0.0)
        )
        if abs(spectral - closed) > CROSSCHECK_TOL * (1.0 + closed):
            raise NumericalFailureError(
                f"entropy exchange mismatch: closed form {closed!r}, spectral {spectral!r}"
            )
        return EntropyValue(closed)

    def output_entropy(self, state: GaussianState) -> EntropyValue:
        """Entropy of the channel output via the spectral route.

        For elementary inputs the closed form is asserted against it.
        """
        value = entropy(self.apply(state)).nats
        try:
            n_mean = elementary_occupation(state)
        except UnsupportedInputError:
            n_mean = None
        if n_mean is not None:
            closed = thermal_entropy(self.output_occupation(n_mean))
            if abs(value - closed) > CROSSCHECK_TOL * (1.0 + closed):
                raise NumericalFailureError(
                    f"output entropy mismatch: closed form {closed!r}, spectral {value!r}"
                )
        return EntropyValue(value)
