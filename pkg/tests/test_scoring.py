import random
from datetime import date, datetime, timezone

from tweetsent.ingest import Tweet
from tweetsent.lexicon import Lexicon, LexiconEntry, Origin
from tweetsent.scoring import ScoredTweet, score_corpus, score_tokens


def lex(**scores) -> Lexicon:
    return Lexicon(LexiconEntry(t, float(s), Origin.EXPANDED) for t, s in scores.items())


class TestScoreTokens:
    def test_sum_with_multiplicity(self):
        assert score_tokens(["good", "good"], lex(good=3)) == 6

    def test_empty_sum(self):
        assert score_tokens([], lex(good=3)) == 0.0

    def test_unmatched_contributes_nothing(self):
        assert score_tokens(["zork"], lex(good=3)) == 0.0

    def test_symmetric_cancellation(self):
        assert score_tokens(["good", "bad"], lex(good=3, bad=-3)) == 0.0

    def test_additivity(self):
        rng = random.Random(5)
        vocab = lex(a=1, b=-2, c=0.5, d=3)
        for _ in range(50):
            left = [rng.choice("abcdxyz") for _ in range(rng.randrange(8))]
            right = [rng.choice("abcdxyz") for _ in range(rng.randrange(8))]
            assert score_tokens(left + right, vocab) == (
                score_tokens(left, vocab) + score_tokens(right, vocab)
            )

    def test_irrelevant_lexicon_entry_never_changes_score(self):
        terms = ["good", "day"]
        base = lex(good=3)
        extended = lex(good=3, zork=5)
        assert score_tokens(terms, base) == score_tokens(terms, extended)


def us_tweet(text, when=datetime(2014, 3, 1, 13, 0, tzinfo=timezone.utc)):
    return Tweet(text, lang="en", country_code="US", place_type="city", captured_at=when)


class TestScoreCorpus:
    def test_length_sentiment_date(self):
        records, stats = score_corpus([us_tweet("good day")], lex(good=3))
        assert records == [ScoredTweet(8, 3.0, date(2014, 3, 1))]
        assert stats.scored == 1

    def test_empty_corpus(self):
        records, _ = score_corpus([], lex(good=3))
        assert records == []

    def test_no_matches_scores_zero(self):
        records, _ = score_corpus([us_tweet("???")], Lexicon())
        assert records == [ScoredTweet(3, 0.0, date(2014, 3, 1))]

    def test_missing_timestamp_skipped_with_count(self):
        corpus = [us_tweet("good"), Tweet("good", captured_at=None), us_tweet("bad")]
        records, stats = score_corpus(corpus, lex(good=3, bad=-3))
        assert len(records) == 2
        assert stats.skipped_no_timestamp == 1
        assert len(records) + stats.skipped_no_timestamp == len(corpus)

    def test_over_length_flagged_not_truncated(self):
        long_text = "x" * 150
        records, stats = score_corpus([us_tweet(long_text)], Lexicon())
        assert records[0].length == 150
        assert stats.over_length_limit == 1

    def test_order_preserved(self):
        corpus = [us_tweet(f"tweet number {i}") for i in range(10)]
        records, _ = score_corpus(corpus, Lexicon())
        assert [r.length for r in records] == [len(t.text) for t in corpus]

    def test_length_counts_raw_text(self):
        # URL is removed for scoring but still counts toward length.
        records, _ = score_corpus([us_tweet("good http://t.co/x")], lex(good=3))
        assert records[0].length == 18
        assert records[0].sentiment == 3.0
