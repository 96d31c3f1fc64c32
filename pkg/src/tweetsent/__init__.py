"""Tweet sentiment pipeline.

Builds a corpus-specific sentiment lexicon from a seed dictionary, scores
tweets by summed term sentiment, emits CSV/ARFF datasets, clusters
(length, sentiment) pairs with k-means, and analyzes how sentiment-score
dispersion grows with tweet length.
"""

from .analysis import (
    DispersionProfile,
    NullModelConfig,
    cone_statistic,
    dispersion_by_length,
    export_scatter,
    simulate_null,
)
from .bootstrap import ExpandOptions, expand_lexicon, tweet_candidates
from .cluster import ClusterModel, centroid_summary, kmeans
from .dataset import read_csv, shuffle, write_arff, write_csv
from .errors import PipelineError
from .ingest import FilterConfig, IngestStats, Tweet, filter_tweet, read_corpus
from .lexicon import Lexicon, LexiconEntry, Origin, load_lexicon, merge_lexicons, save_lexicon
from .scoring import ScoredTweet, score_corpus, score_tokens
from .textnorm import tokenize, tweet_length

__version__ = "0.1.0"

__all__ = [
    "ClusterModel",
    "DispersionProfile",
    "ExpandOptions",
    "FilterConfig",
    "IngestStats",
    "Lexicon",
    "LexiconEntry",
    "NullModelConfig",
    "Origin",
    "PipelineError",
    "ScoredTweet",
    "Tweet",
    "centroid_summary",
    "cone_statistic",
    "dispersion_by_length",
    "expand_lexicon",
    "export_scatter",
    "filter_tweet",
    "kmeans",
    "load_lexicon",
    "merge_lexicons",
    "read_corpus",
    "read_csv",
    "save_lexicon",
    "score_corpus",
    "score_tokens",
    "shuffle",
    "simulate_null",
    "tokenize",
    "tweet_candidates",
    "tweet_length",
    "write_arff",
    "write_csv",
]
