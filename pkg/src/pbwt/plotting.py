"""Figures for the benchmark report."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

# reference growth drawn next to each measured curve
_EXPONENT = {"fast": 2, "naive": 3}
_COLOR = {"fast": "tab:blue", "naive": "tab:red"}


def plot_bench(rows, path, title="pBWT inversion time"):
    """Log-log plot of seconds against n, one line per algorithm, with a
    dashed n^2 / n^3 guide anchored at the smallest measured size."""
    by_algo = {}
    for n, algo, secs in rows:
        by_algo.setdefault(algo, []).append((n, secs))

    fig, ax = plt.subplots(figsize=(5.0, 3.6))
    for algo, pts in sorted(by_algo.items()):
        pts.sort()
        ns = [p[0] for p in pts]
        ts = [p[1] for p in pts]
        color = _COLOR.get(algo)
        ax.plot(ns, ts, "o-", color=color, label=algo)
        k = _EXPONENT.get(algo)
        if k and len(pts) > 1:
            n0, t0 = pts[0]
            ax.plot(ns, [t0 * (n / n0) ** k for n in ns], "--", color=color,
                    alpha=0.5, label=f"n^{k} guide")
    ax.set_xscale("log", base=2)
    ax.set_yscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("seconds")
    ax.set_title(title)
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
