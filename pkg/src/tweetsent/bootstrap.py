"""Seed-driven lexicon expansion over a tweet corpus.

Each tweet proposes a candidate score for every term the seed dictionary
does not cover: the sum of the seed scores found in the tweet divided by
the tweet's total token count. A term's final score is the arithmetic mean
of its candidates across the corpus, and the expanded entries are merged
under the seed (seed scores always win).
"""

from dataclasses import dataclass
from typing import Callable, Iterable

from .ingest import Tweet
from .lexicon import Lexicon, LexiconEntry, Origin, merge_lexicons
from .textnorm import tokenize


@dataclass
class ExpandOptions:
    # Tweets with no scored token propose candidate 0 instead of nothing.
    zero_evidence_as_zero: bool = False
    # Divide by the distinct-term count instead of the token count.
    distinct_denominator: bool = False
    # Let earlier expansions (running means) score later tweets. Makes the
    # result depend on corpus order; off by default.
    self_feed: bool = False
    raw_tokens: bool = False


@dataclass
class ExpansionStats:
    tweets: int = 0
    tweets_with_evidence: int = 0
    candidates: int = 0
    terms_added: int = 0

    def describe(self) -> str:
        return (
            f"tweets={self.tweets} with_evidence={self.tweets_with_evidence} "
            f"candidates={self.candidates} terms_added={self.terms_added}"
        )


class CandidateAccumulator:
    """Running sum/count of per-tweet candidate scores, keyed by term."""

    def __init__(self):
        self._sums: dict[str, float] = {}
        self._counts: dict[str, int] = {}

    def add(self, term: str, candidate: float) -> None:
        self._sums[term] = self._sums.get(term, 0.0) + candidate
        self._counts[term] = self._counts.get(term, 0) + 1

    def __len__(self) -> int:
        return len(self._sums)

    def __contains__(self, term: str) -> bool:
        return term in self._sums

    def count(self, term: str) -> int:
        return self._counts.get(term, 0)

    def mean(self, term: str) -> float:
        return self._sums[term] / self._counts[term]

    def mean_scores(self) -> dict[str, float]:
        return {term: self._sums[term] / self._counts[term] for term in self._sums}


def _candidates(
    terms: list[str],
    score_of: Callable[[str], float | None],
    *,
    zero_evidence_as_zero: bool,
    distinct_denominator: bool,
) -> dict[str, float]:
    if not terms:
        return {}
    total = 0.0
    scored = 0
    for term in terms:
        score = score_of(term)
        if score is not None:
            total += score
            scored += 1
    if scored == 0 and not zero_evidence_as_zero:
        return {}
    denominator = len(set(terms)) if distinct_denominator else len(terms)
    candidate = total / denominator
    return {term: candidate for term in terms if score_of(term) is None}


def tweet_candidates(
    terms: list[str],
    seed: Lexicon,
    *,
    zero_evidence_as_zero: bool = False,
    distinct_denominator: bool = False,
) -> dict[str, float]:
    """Candidate scores one tweet proposes for its unscored terms.

    The candidate is the summed seed score of the tweet's scored tokens
    (with multiplicity) divided by the tweet's token count, assigned to
    every distinct unscored term. Tweets containing no scored token propose
    nothing unless ``zero_evidence_as_zero`` is set.
    """
    return _candidates(
        terms,
        seed.score,
        zero_evidence_as_zero=zero_evidence_as_zero,
        distinct_denominator=distinct_denominator,
    )


def expand_lexicon(
    corpus: Iterable[Tweet],
    seed: Lexicon,
    options: ExpandOptions | None = None,
) -> tuple[Lexicon, ExpansionStats]:
    """Single pass over the corpus; returns (merged lexicon, stats).

    Candidates are computed against the original seed only, so the result
    does not depend on corpus order (unless ``self_feed`` is on). A term
    seen in several tweets gets the unweighted mean of its candidates.
    """
    opts = options or ExpandOptions()
    accumulator = CandidateAccumulator()
    stats = ExpansionStats()

    def score_of(term: str) -> float | None:
        score = seed.score(term)
        if score is not None:
            return score
        if opts.self_feed and term in accumulator:
            return accumulator.mean(term)
        return None

    for tweet in corpus:
        stats.tweets += 1
        terms = tokenize(tweet.text, raw=opts.raw_tokens)
        candidates = _candidates(
            terms,
            score_of,
            zero_evidence_as_zero=opts.zero_evidence_as_zero,
            distinct_denominator=opts.distinct_denominator,
        )
        if candidates:
            stats.tweets_with_evidence += 1
        for term, value in candidates.items():
            accumulator.add(term, value)
            stats.candidates += 1

    expanded = Lexicon(
        LexiconEntry(term, score, Origin.EXPANDED)
        for term, score in accumulator.mean_scores().items()
    )
    stats.terms_added = len(expanded)
    return merge_lexicons(seed, expanded), stats
