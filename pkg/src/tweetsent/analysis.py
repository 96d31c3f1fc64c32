"""Length-dispersion profiling, rank statistics, and the null simulator.

The headline question is whether sentiment scores spread out as tweets get
longer. ``dispersion_by_length`` quantifies the spread per length bin,
``cone_statistic`` turns it into a single rank correlation against the
clustered centroids, and ``simulate_null`` generates tweets whose term
scores are i.i.d. draws -- a world with no length-sentiment relationship,
where summed scores still widen like a random walk (std growing with the
square root of the token count).
"""

import math
from dataclasses import dataclass
from datetime import date
from typing import Sequence

import numpy as np

from .cluster import ClusterModel, assign
from .dataset import format_sentiment
from .errors import PipelineError
from .lexicon import Lexicon
from .rng import GOLDEN, MASK64, mix64, stream_outputs
from .scoring import ScoredTweet
from .textnorm import LENGTH_LIMIT


class AnalysisError(PipelineError):
    """Invalid analysis input."""


# Token count -> character-scale length for the simulator. A labeled
# conversion constant for visual comparability, not an empirical claim.
CHARS_PER_TOKEN = 6

PM1_SCORES = (-1.0, 1.0)

_SYNTHETIC_DATE = date(1970, 1, 1)


@dataclass(frozen=True)
class DispersionBin:
    lo: int
    hi: int
    count: int
    mean_sentiment: float | None
    std_sentiment: float | None


@dataclass
class DispersionProfile:
    bin_width: int
    bins: list[DispersionBin]

    def to_csv(self) -> str:
        lines = ["bin_lo,bin_hi,count,mean_sentiment,std_sentiment\n"]
        for b in self.bins:
            mean = "" if b.mean_sentiment is None else f"{b.mean_sentiment:.4f}"
            std = "" if b.std_sentiment is None else f"{b.std_sentiment:.4f}"
            lines.append(f"{b.lo},{b.hi},{b.count},{mean},{std}\n")
        return "".join(lines)


def dispersion_by_length(
    records: Sequence[ScoredTweet], bin_width: int
) -> DispersionProfile:
    """Count, mean, and population std of sentiment per length bin.

    Bins are [0, w), [w, 2w), ... and always cover at least [0, 140];
    empty bins report count 0 with undefined mean/std.
    """
    if bin_width < 1:
        raise AnalysisError("bin width must be >= 1")
    max_len = max((r.length for r in records), default=0)
    n_bins = max(LENGTH_LIMIT, max_len) // bin_width + 1
    counts = [0] * n_bins
    sums = [0.0] * n_bins
    for record in records:
        b = record.length // bin_width
        counts[b] += 1
        sums[b] += record.sentiment
    means = [sums[i] / counts[i] if counts[i] else None for i in range(n_bins)]
    sq_dev = [0.0] * n_bins
    for record in records:
        b = record.length // bin_width
        sq_dev[b] += (record.sentiment - means[b]) ** 2
    bins = []
    for i in range(n_bins):
        std = math.sqrt(sq_dev[i] / counts[i]) if counts[i] else None
        bins.append(
            DispersionBin(i * bin_width, (i + 1) * bin_width, counts[i], means[i], std)
        )
    return DispersionProfile(bin_width, bins)


def _average_ranks(values: Sequence[float]) -> list[float]:
    order = sorted(range(len(values)), key=values.__getitem__)
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        rank = (i + j) / 2 + 1  # mean of the 1-based positions i..j
        for p in range(i, j + 1):
            ranks[order[p]] = rank
        i = j + 1
    return ranks


def spearman(x: Sequence[float], y: Sequence[float]) -> float | None:
    """Spearman rank correlation with average-rank ties.

    Returns None when either variable is constant (correlation undefined).
    """
    if len(x) != len(y):
        raise AnalysisError("input length mismatch")
    n = len(x)
    if n < 2:
        raise AnalysisError("need at least 2 observations")
    rx = _average_ranks(list(x))
    ry = _average_ranks(list(y))
    mx = sum(rx) / n
    my = sum(ry) / n
    sxx = sum((a - mx) ** 2 for a in rx)
    syy = sum((b - my) ** 2 for b in ry)
    if sxx == 0.0 or syy == 0.0:
        return None
    sxy = sum((a - mx) * (b - my) for a, b in zip(rx, ry))
    return sxy / math.sqrt(sxx * syy)


def cone_statistic(
    records: Sequence[ScoredTweet], model: ClusterModel
) -> float | None:
    """Rank correlation between tweet length and the absolute distance of
    its sentiment from the assigned cluster's sentiment centroid.

    Positive values mean longer tweets sit further from their centroid,
    i.e. the scatter widens with length. None when undefined.
    """
    if len(records) < 3:
        raise AnalysisError("need at least 3 records")
    lengths = [float(r.length) for r in records]
    residuals = []
    for record in records:
        c = assign((float(record.length), record.sentiment), model.centroids)
        residuals.append(abs(record.sentiment - model.centroids[c][1]))
    return spearman(lengths, residuals)


@dataclass(frozen=True)
class NullModelConfig:
    n_tweets: int
    min_len: int = 1
    max_len: int = 23
    scores: tuple[float, ...] = PM1_SCORES
    rng_seed: int = 0


def scores_from_lexicon(lexicon: Lexicon) -> tuple[float, ...]:
    """Empirical score pool: entry scores ordered by term, for determinism."""
    pool = tuple(lexicon.score(term) for term in sorted(lexicon.terms()))
    if not pool:
        raise AnalysisError("lexicon has no scores to draw from")
    return pool


def simulate_null(cfg: NullModelConfig) -> list[ScoredTweet]:
    """Generate synthetic tweets with i.i.d. term scores.

    Per tweet: draw a token count m uniformly from [min_len, max_len], then
    m i.i.d. scores from the pool; sentiment is their sum and length is
    m * CHARS_PER_TOKEN. One splitmix64 stream is consumed sequentially
    (one draw for m, then one per token); the per-token draws are evaluated
    in bulk from their precomputed stream positions.
    """
    if cfg.n_tweets < 1:
        raise AnalysisError("n_tweets must be >= 1")
    if cfg.min_len < 1 or cfg.max_len < cfg.min_len:
        raise AnalysisError("need 1 <= min_len <= max_len")
    if not cfg.scores:
        raise AnalysisError("empty score distribution")
    span = cfg.max_len - cfg.min_len + 1
    seed = cfg.rng_seed & MASK64
    token_counts = np.empty(cfg.n_tweets, dtype=np.int64)
    starts = np.empty(cfg.n_tweets, dtype=np.uint64)
    pos = 1
    for i in range(cfg.n_tweets):
        token_counts[i] = mix64((seed + pos * GOLDEN) & MASK64) % span + cfg.min_len
        pos += 1
        starts[i] = pos
        pos += int(token_counts[i])
    offsets = np.concatenate(([0], np.cumsum(token_counts)[:-1]))
    total = int(token_counts.sum())
    positions = (
        np.arange(total, dtype=np.uint64)
        - np.repeat(offsets, token_counts).astype(np.uint64)
        + np.repeat(starts, token_counts)
    )
    draws = stream_outputs(seed, positions)
    pool = np.asarray(cfg.scores, dtype=float)
    picks = pool[(draws % np.uint64(len(pool))).astype(np.int64)]
    sums = np.add.reduceat(picks, offsets)
    return [
        ScoredTweet(int(m) * CHARS_PER_TOKEN, float(s), _SYNTHETIC_DATE)
        for m, s in zip(token_counts, sums)
    ]


def export_scatter(records: Sequence[ScoredTweet], model: ClusterModel) -> str:
    """Plot-ready rows ``length<TAB>sentiment<TAB>cluster``, input order."""
    lines = []
    for record in records:
        c = assign((float(record.length), record.sentiment), model.centroids)
        lines.append(f"{record.length}\t{format_sentiment(record.sentiment)}\t{c}\n")
    return "".join(lines)
