"""Mutual information, loss, noise and coherent information for the channel family.

The three entropies of a (state, channel) pair combine into

* mutual information ``I = H_in + H_out - H_exch``
* loss             ``L = H_in + H_exch - H_out``
* noise            ``N = H_out + H_exch - H_in``
* coherent information ``H_out - H_exch``

For elementary inputs the coherent information changes sign at
``k = 1/sqrt(2)``, which is located here by bisection rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .channels import GaussianChannel
from .entropy import LN2, EntropyValue, entropy_from_matrices, thermal_entropy
from .exceptions import NumericalFailureError
from .purification import BipartiteGaussianState
from .states import elementary_state

# Bisection bracket and width tolerance for the coherent-information root.
ROOT_BRACKET = (1e-6, 1.0 - 1e-6)
ROOT_TOL = 1e-10


@dataclass(frozen=True)
class InfoTriangle:
    """The three entropies and the four derived information quantities (nats)."""

    n_input: float
    k: float
    h_in: EntropyValue
    h_out: EntropyValue
    h_exch: EntropyValue
    mutual: float
    loss: float
    noise: float
    coherent: float

    def to_dict(self, base: str = "nats") -> dict:
        """The ``{N, k, entropies, quantities, base}`` document emitted by the CLI."""
        factor = 1.0 if base == "nats" else 1.0 / LN2
        if base not in ("nats", "bits"):
            raise ValueError(f"unknown entropy base {base!r}")
        return {
            "N": self.n_input,
            "k": self.k,
            "entropies": {
                "in": self.h_in.nats * factor,
                "out": self.h_out.nats * factor,
                "exch": self.h_exch.nats * factor,
            },
            "quantities": {
                "mutual": self.mutual * factor,
                "loss": self.loss * factor,
                "noise": self.noise * factor,
                "coherent": self.coherent * factor,
            },
            "base": base,
        }


def info_triangle(n_input: float, k: float, hbar: float = 1.0) -> InfoTriangle:
    """Evaluate all triangle quantities for an elementary input with occupation ``n_input``."""
    if n_input < 0:
        raise ValueError(f"input occupation must be nonnegative, got {n_input!r}")
    state = elementary_state(n_input, hbar)
    channel = GaussianChannel(k)

    h_in = thermal_entropy(n_input)
    h_out = channel.output_entropy(state).nats
    h_exch = channel.entropy_exchange(state).nats
    return InfoTriangle(
        n_input=float(n_input),
        k=float(k),
        h_in=EntropyValue(h_in),
        h_out=EntropyValue(h_out),
        h_exch=EntropyValue(h_exch),
        mutual=h_in + h_out - h_exch,
        loss=h_in + h_exch - h_out,
        noise=h_out + h_exch - h_in,
        coherent=h_out - h_exch,
    )


def mutual_correlation(bi: BipartiteGaussianState) -> float:
    """``H(side 1) + H(side 2) - H(joint)`` for any two-sided Gaussian state, in nats."""
    h1 = entropy_from_matrices(bi.side_block(1), bi.delta)
    h2 = entropy_from_matrices(bi.side_block(2), -bi.delta)
    h12 = entropy_from_matrices(bi.alpha12, bi.delta12)
    return h1 + h2 - h12


def coherent_zero_crossing(n_input: float) -> float:
    """Root of the coherent information in ``k`` on (0, 1), found by bisection.

    The sign change is located on ``ROOT_BRACKET`` and narrowed to
    ``ROOT_TOL``; no closed-form root is assumed.
    """
    if n_input <= 0:
        raise ValueError(f"input occupation must be positive, got {n_input!r}")

    def coherent(k: float) -> float:
        return info_triangle(n_input, k).coherent

    lo, hi = ROOT_BRACKET
    f_lo, f_hi = coherent(lo), coherent(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if f_lo * f_hi > 0:
        raise NumericalFailureError(
            f"no coherent-information sign change on [{lo}, {hi}] for occupation {n_input}"
        )
    while hi - lo > ROOT_TOL:
        mid = 0.5 * (lo + hi)
        f_mid = coherent(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0) == (f_hi > 0):
            hi, f_hi = mid, f_mid
        else:
            lo, f_lo = mid, f_mid
    return 0.5 * (lo + hi)
