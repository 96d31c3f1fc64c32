"""Lloyd's k-means over (length, sentiment) points, plus centroid reporting.

Initialization draws k distinct instance indices from the pinned splitmix64
generator, iterations alternate nearest-centroid assignment (squared
Euclidean distance, ties to the lowest index) with mean recomputation, and
the loop stops when the assignment vector is unchanged. Clusters that
empty out are re-seeded with the point farthest from its nearest centroid.
"""

import json
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import PipelineError
from .rng import SplitMix64


class ClusterError(PipelineError):
    """Invalid clustering input or model file."""


@dataclass
class ClusterModel:
    k: int
    centroids: list[tuple[float, float]]
    assignments: list[int]
    sse: float
    iterations: int
    cluster_sizes: list[int]
    sse_history: list[float] = field(default_factory=list)

    def to_json(self) -> str:
        doc = {
            "k": self.k,
            "centroids": [[x, y] for x, y in self.centroids],
            "sizes": list(self.cluster_sizes),
            "sse": self.sse,
            "iterations": self.iterations,
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ClusterModel":
        try:
            doc = json.loads(text)
        except ValueError as exc:
            raise ClusterError(f"bad model file: {exc}") from None
        try:
            k = int(doc["k"])
            centroids = [(float(x), float(y)) for x, y in doc["centroids"]]
            sizes = [int(s) for s in doc["sizes"]]
            sse = float(doc["sse"])
            iterations = int(doc["iterations"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ClusterError(f"bad model file: {exc!r}") from None
        if k != len(centroids):
            raise ClusterError("bad model file: k does not match centroid count")
        return cls(k, centroids, [], sse, iterations, sizes)


def _as_points(points) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ClusterError("points must be an (n, 2) sequence")
    if not np.all(np.isfinite(pts)):
        raise ClusterError("points must be finite")
    return pts


def assign(point: tuple[float, float], centroids: Sequence[tuple[float, float]]) -> int:
    """Index of the nearest centroid by squared distance; ties go low."""
    if len(centroids) == 0:
        raise ClusterError("no centroids to assign to")
    px, py = point
    best = 0
    best_d = float("inf")
    for i, (cx, cy) in enumerate(centroids):
        d = (px - cx) ** 2 + (py - cy) ** 2
        if d < best_d:
            best = i
            best_d = d
    return best


def _assign_all(pts: np.ndarray, centroids: np.ndarray) -> tuple[np.ndarray, float]:
    d2 = ((pts[:, None, :] - centroids[None, :, :]) ** 2).sum(axis=2)
    labels = np.argmin(d2, axis=1)
    sse = float(d2[np.arange(len(pts)), labels].sum())
    return labels, sse


def _update_centroids(pts: np.ndarray, labels: np.ndarray, k: int) -> np.ndarray:
    centroids = np.zeros((k, 2))
    sizes = np.bincount(labels, minlength=k)
    for c in range(k):
        if sizes[c]:
            centroids[c] = pts[labels == c].mean(axis=0)
    empty = [c for c in range(k) if sizes[c] == 0]
    if empty:
        filled = centroids[sizes > 0]
        nearest_d2 = ((pts[:, None, :] - filled[None, :, :]) ** 2).sum(axis=2).min(axis=1)
        for c in empty:
            farthest = int(np.argmax(nearest_d2))
            centroids[c] = pts[farthest]
            nearest_d2[farthest] = -1.0  # each repair consumes its point
    return centroids


def lloyd(points, initial_centroids, max_iter: int = 500) -> ClusterModel:
    """Run Lloyd iterations from explicit starting centroids."""
    pts = _as_points(points)
    centroids = _as_points(initial_centroids)
    k = len(centroids)
    if k < 1:
        raise ClusterError("k must be positive")
    if k > len(pts):
        raise ClusterError(f"k={k} exceeds the number of points ({len(pts)})")
    labels, sse = _assign_all(pts, centroids)
    history = [sse]
    iterations = 0
    for _ in range(max_iter):
        centroids = _update_centroids(pts, labels, k)
        new_labels, new_sse = _assign_all(pts, centroids)
        assert new_sse <= history[-1] + 1e-9 * (1.0 + history[-1]), "SSE increased"
        history.append(new_sse)
        iterations += 1
        if np.array_equal(new_labels, labels):
            labels = new_labels
            break
        labels = new_labels
    sizes = np.bincount(labels, minlength=k)
    return ClusterModel(
        k=k,
        centroids=[(float(x), float(y)) for x, y in centroids],
        assignments=[int(i) for i in labels],
        sse=float(history[-1]),
        iterations=iterations,
        cluster_sizes=[int(s) for s in sizes],
        sse_history=[float(s) for s in history],
    )


def kmeans(
    points,
    k: int,
    seed: int = 10,
    max_iter: int = 500,
    normalize: bool = False,
) -> ClusterModel:
    """Cluster (length, sentiment) points into k groups.

    With ``normalize`` the features are min-max scaled to [0, 1] before
    clustering; centroids are reported on the original scale while the SSE
    refers to the scaled space actually optimized.
    """
    pts = _as_points(points)
    n = len(pts)
    if n < 1:
        raise ClusterError("need at least one point")
    if k < 1:
        raise ClusterError("k must be positive")
    if k > n:
        raise ClusterError(f"k={k} exceeds the number of points ({n})")
    work = pts
    lo = span = None
    if normalize:
        lo = pts.min(axis=0)
        span = pts.max(axis=0) - lo
        span[span == 0.0] = 1.0
        work = (pts - lo) / span
    rng = SplitMix64(seed)
    chosen: list[int] = []
    while len(chosen) < k:
        idx = rng.randbelow(n)
        if idx not in chosen:
            chosen.append(idx)
    model = lloyd(work, work[chosen], max_iter=max_iter)
    if normalize:
        model.centroids = [
            (float(x * span[0] + lo[0]), float(y * span[1] + lo[1]))
            for x, y in model.centroids
        ]
    return model


@dataclass
class CentroidSummary:
    full_data_mean: tuple[float, float]
    total: int
    centroids: list[tuple[float, float]]
    sizes: list[int]

    @property
    def percentages(self) -> list[float]:
        return [100.0 * size / self.total for size in self.sizes]


def centroid_summary(model: ClusterModel, points) -> CentroidSummary:
    """Full-data attribute means plus the model's per-cluster view."""
    pts = _as_points(points)
    if len(pts) == 0:
        raise ClusterError("need at least one point")
    mean = pts.mean(axis=0)
    return CentroidSummary(
        full_data_mean=(float(mean[0]), float(mean[1])),
        total=len(pts),
        centroids=list(model.centroids),
        sizes=list(model.cluster_sizes),
    )


def render_centroid_summary(summary: CentroidSummary) -> str:
    """Fixed-layout text table, numbers at 4 fractional digits."""
    headers = ["attribute", "full data"] + [
        f"cluster {i}" for i in range(len(summary.centroids))
    ]
    rows = [
        ["length", f"{summary.full_data_mean[0]:.4f}"]
        + [f"{c[0]:.4f}" for c in summary.centroids],
        ["sentiment", f"{summary.full_data_mean[1]:.4f}"]
        + [f"{c[1]:.4f}" for c in summary.centroids],
        ["instances", str(summary.total)]
        + [
            f"{size} ({round(100.0 * size / summary.total)}%)"
            for size in summary.sizes
        ],
    ]
    widths = [
        max(len(headers[col]), *(len(row[col]) for row in rows))
        for col in range(len(headers))
    ]
    lines = []
    for row in [headers] + rows:
        cells = [row[0].ljust(widths[0])] + [
            row[col].rjust(widths[col]) for col in range(1, len(row))
        ]
        lines.append("  ".join(cells).rstrip() + "\n")
    return "".join(lines)
