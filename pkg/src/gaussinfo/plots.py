"""Figure rendering for sweep and triangle reports.

Matplotlib is imported lazily with the Agg backend so the data-only paths
never touch a display.
"""

from __future__ import annotations

import os


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def render_sweep_figures(rows: list[dict], n_input: float, base: str, outdir: str) -> list[str]:
    """Write the entropy and information curves of a sweep as two PNG files.

    Returns the written paths.
    """
    plt = _pyplot()
    os.makedirs(outdir, exist_ok=True)
    unit = "bits" if base == "bits" else "nats"
    ks = [r["k"] for r in rows]
    written = []

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(ks, [r["H_out"] for r in rows], label="output entropy")
    ax.plot(ks, [r["H_exch"] for r in rows], label="entropy exchange")
    ax.plot(ks, [r["H_in"] for r in rows], linestyle="--", color="gray", label="input entropy")
    ax.axvline(1.0, color="black", linewidth=0.6, alpha=0.5)
    ax.set_xlabel("channel coefficient k")
    ax.set_ylabel(f"entropy ({unit})")
    ax.set_title(f"Channel entropies, input occupation N={n_input:g}")
    ax.legend()
    fig.tight_layout()
    path = os.path.join(outdir, "sweep_entropies.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    written.append(path)

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(ks, [r["I"] for r in rows], label="mutual information")
    ax.plot(ks, [r["L"] for r in rows], label="loss")
    ax.plot(ks, [r["N_noise"] for r in rows], label="noise")
    ax.plot(ks, [r["coherent"] for r in rows], label="coherent information")
    ax.axhline(0.0, color="black", linewidth=0.6, alpha=0.5)
    ax.axvline(2.0**-0.5, color="black", linewidth=0.6, alpha=0.5, linestyle=":")
    ax.set_xlabel("channel coefficient k")
    ax.set_ylabel(f"information ({unit})")
    ax.set_title(f"Information quantities, input occupation N={n_input:g}")
    ax.legend()
    fig.tight_layout()
    path = os.path.join(outdir, "sweep_information.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    written.append(path)
    return written


def render_triangle_figure(doc: dict, outdir: str) -> str:
    """Draw the information triangle of a single ``(N, k)`` point as a PNG file.

    The three entropies are the side lengths and the information quantities
    label the vertices; the figure is qualitative and degenerates to a
    segment when one quantity vanishes.
    """
    plt = _pyplot()
    os.makedirs(outdir, exist_ok=True)
    ent = doc["entropies"]
    qty = doc["quantities"]
    a, b, c = ent["in"], ent["out"], ent["exch"]

    fig, ax = plt.subplots(figsize=(5.4, 5.0))
    if a > 0 and a + b + c > 0:
        # vertices: A-B span the input-entropy side; C is fixed by the
        # exchange (|AC| = c) and output (|BC| = b) sides.
        cx = (a * a + c * c - b * b) / (2 * a)
        cy = math_sqrt_clamped(c * c - cx * cx)
        xs = [0.0, a, cx, 0.0]
        ys = [0.0, 0.0, cy, 0.0]
        ax.plot(xs, ys, color="tab:blue")
        ax.annotate(f"H_in = {a:.4g}", ((0 + a) / 2, -0.04 * max(a, cy)), ha="center", va="top")
        ax.annotate(f"H_out = {b:.4g}", ((a + cx) / 2, cy / 2), ha="left")
        ax.annotate(f"H_exch = {c:.4g}", (cx / 2, cy / 2), ha="right")
        ax.annotate(f"noise = {qty['noise']:.4g}", (0, 0), ha="right", va="top")
        ax.annotate(f"loss = {qty['loss']:.4g}", (a, 0), ha="left", va="top")
        ax.annotate(f"mutual = {qty['mutual']:.4g}", (cx, cy), ha="center", va="bottom")
        ax.set_aspect("equal")
        margin = 0.25 * max(a, cy, 1e-9)
        ax.set_xlim(-margin, a + margin)
        ax.set_ylim(-margin, cy + margin)
    else:
        ax.text(0.5, 0.5, "degenerate triangle (zero entropies)", ha="center", va="center")
    ax.set_axis_off()
    ax.set_title(
        f"N={doc['N']:g}, k={doc['k']:g}: coherent = {qty['coherent']:.4g} {doc['base']}"
    )
    fig.tight_layout()
    path = os.path.join(outdir, "triangle.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def math_sqrt_clamped(x: float) -> float:
    return x**0.5 if x > 0 else 0.0
