"""Figures for the CLI report paths.  Everything renders off-screen to files."""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def _signed_log(v):
    v = np.asarray(v, dtype=float)
    return np.sign(v) * np.log10(1 + np.abs(v))


def plot_coefficients(series, path, title=None, log=True):
    """Stem plot of a series' coefficients; negatives drawn in red."""
    c = [int(x) for x in series.coeffs]
    n = np.arange(len(c))
    y = _signed_log(c) if log else np.asarray(c, dtype=float)
    fig, ax = plt.subplots(figsize=(8, 3.5))
    neg = np.asarray(c) < 0
    ax.vlines(n[~neg], 0, y[~neg], color="0.3", lw=0.8)
    ax.vlines(n[neg], 0, y[neg], color="tab:red", lw=1.2, label="negative")
    ax.axhline(0, color="k", lw=0.5)
    ax.set_xlabel("n")
    ax.set_ylabel("sign(a) log10(1+|a|)" if log else "coefficient")
    if title:
        ax.set_title(title)
    if neg.any():
        ax.legend(loc="upper left", frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_corrections(table, path):
    """Heatmap of correction coefficients, one row per L."""
    rows = table["rows"]
    polys = [dict(_terms(r["correction"])) for r in rows]
    width = max([max(p) for p in polys if p] + [1]) + 1
    grid = np.zeros((len(rows), width))
    for i, p in enumerate(polys):
        for e, c in p.items():
            grid[i, e] = c
    fig, ax = plt.subplots(figsize=(8, 0.25 * len(rows) + 1.5))
    im = ax.imshow(grid, aspect="auto", cmap="viridis", interpolation="nearest",
                   extent=(-0.5, width - 0.5, rows[-1]["L"] + 0.5, rows[0]["L"] - 0.5))
    ax.set_xlabel("exponent")
    ax.set_ylabel("L")
    ax.set_title(f"minimal corrections, s={table['s']}")
    fig.colorbar(im, ax=ax, label="coefficient")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def _terms(text):
    from .genfun import CorrectionPolynomial
    return CorrectionPolynomial.parse(text).terms


def plot_injection(reports, path):
    """Domain and codomain sizes per weight for an injection sweep."""
    N = [r.N for r in reports]
    fig, ax = plt.subplots(figsize=(7, 3.5))
    ax.plot(N, [r.domain_size for r in reports], "o-", label="|D| (domain)")
    ax.plot(N, [r.codomain_size for r in reports], "s-", label="|I| (codomain)")
    bad = [r.N for r in reports if not r.passed]
    if bad:
        ax.plot(bad, [r.domain_size for r in reports if not r.passed], "rx", ms=10, label="failed")
    ax.set_yscale("log")
    ax.set_xlabel("N")
    ax.set_title(f"L={reports[0].L}")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
