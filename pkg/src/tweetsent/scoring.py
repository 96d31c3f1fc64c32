"""Per-tweet sentiment scoring and dataset record construction."""

from dataclasses import dataclass
from datetime import date, timezone
from typing import Iterable

from .ingest import Tweet
from .lexicon import Lexicon
from .textnorm import LENGTH_LIMIT, tokenize, tweet_length


@dataclass(frozen=True)
class ScoredTweet:
    length: int
    sentiment: float
    captured_date: date | None


@dataclass
class ScoringStats:
    scored: int = 0
    skipped_no_timestamp: int = 0
    over_length_limit: int = 0

    def describe(self) -> str:
        return (
            f"scored={self.scored} skipped_no_timestamp={self.skipped_no_timestamp} "
            f"over_length_limit={self.over_length_limit}"
        )


def score_tokens(terms: Iterable[str], lexicon: Lexicon) -> float:
    """Sum of lexicon scores over the terms; unmatched terms add nothing."""
    total = 0.0
    for term in terms:
        score = lexicon.score(term)
        if score is not None:
            total += score
    return total


def score_corpus(
    corpus: Iterable[Tweet],
    lexicon: Lexicon,
    raw_tokens: bool = False,
) -> tuple[list[ScoredTweet], ScoringStats]:
    """One record per tweet, in order: raw-text length, summed sentiment,
    capture date. Tweets without a parseable timestamp are skipped and
    counted; lengths beyond the classic cap are kept and counted."""
    records: list[ScoredTweet] = []
    stats = ScoringStats()
    for tweet in corpus:
        if tweet.captured_at is None:
            stats.skipped_no_timestamp += 1
            continue
        length = tweet_length(tweet.text)
        if length > LENGTH_LIMIT:
            stats.over_length_limit += 1
        sentiment = score_tokens(tokenize(tweet.text, raw=raw_tokens), lexicon)
        captured = tweet.captured_at.astimezone(timezone.utc).date()
        records.append(ScoredTweet(length, sentiment, captured))
        stats.scored += 1
    return records, stats
