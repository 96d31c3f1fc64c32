"""Matplotlib rendering of analysis outputs to image files."""

import os
import tempfile
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .analysis import DispersionProfile
from .cluster import ClusterModel, assign
from .scoring import ScoredTweet

_DPI = 120
_FIGSIZE = (8.0, 5.0)


def _save_atomic(fig, path: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".png.tmp")
    os.close(fd)
    try:
        fig.savefig(tmp, format="png", dpi=_DPI)
        os.replace(tmp, path)
    finally:
        plt.close(fig)
        if os.path.exists(tmp):
            os.unlink(tmp)


def render_scatter_figure(
    records: Sequence[ScoredTweet], model: ClusterModel, path: str
) -> None:
    """Length vs. sentiment scatter, colored by cluster, centroids marked."""
    labels = [
        assign((float(r.length), r.sentiment), model.centroids) for r in records
    ]
    fig, ax = plt.subplots(figsize=_FIGSIZE)
    for c in range(model.k):
        xs = [r.length for r, a in zip(records, labels) if a == c]
        ys = [r.sentiment for r, a in zip(records, labels) if a == c]
        ax.scatter(xs, ys, s=10, alpha=0.5, label=f"cluster {c}")
    ax.scatter(
        [c[0] for c in model.centroids],
        [c[1] for c in model.centroids],
        marker="x",
        s=120,
        c="black",
        label="centroids",
    )
    ax.set_xlabel("tweet length (characters)")
    ax.set_ylabel("sentiment score")
    ax.set_title("clustered tweet sentiment scores")
    ax.legend(loc="best")
    fig.tight_layout()
    _save_atomic(fig, path)


def render_dispersion_figure(profile: DispersionProfile, path: str) -> None:
    """Per-bin mean sentiment with a +/- one-std band over length."""
    centers = []
    means = []
    stds = []
    for b in profile.bins:
        if b.count == 0:
            continue
        centers.append((b.lo + b.hi) / 2.0)
        means.append(b.mean_sentiment)
        stds.append(b.std_sentiment)
    fig, ax = plt.subplots(figsize=_FIGSIZE)
    if centers:
        band_lo = [m - s for m, s in zip(means, stds)]
        band_hi = [m + s for m, s in zip(means, stds)]
        ax.fill_between(centers, band_lo, band_hi, alpha=0.3, label="mean +/- std")
        ax.plot(centers, means, marker="o", label="mean sentiment")
        ax.legend(loc="best")
    ax.set_xlabel("tweet length (characters)")
    ax.set_ylabel("sentiment score")
    ax.set_title("sentiment dispersion by tweet length")
    fig.tight_layout()
    _save_atomic(fig, path)
