import json
from datetime import datetime, timezone

import pytest

from tweetsent.ingest import (
    FilterConfig,
    MalformedRecordError,
    Tweet,
    filter_tweet,
    parse_timestamp,
    parse_tweet_record,
    read_corpus,
    tweet_to_json,
)

VALID_LINE = json.dumps({
    "text": "good day",
    "lang": "en",
    "created_at": "2014-03-01T13:00:00Z",
    "place": {"country_code": "US", "place_type": "city"},
})


class TestParseRecord:
    def test_field_extraction(self):
        tweet = parse_tweet_record(VALID_LINE)
        assert tweet.text == "good day"
        assert tweet.lang == "en"
        assert tweet.country_code == "US"
        assert tweet.place_type == "city"
        assert tweet.captured_at == datetime(2014, 3, 1, 13, 0, 0, tzinfo=timezone.utc)

    def test_delete_notice_is_skip_marker(self):
        assert parse_tweet_record('{"delete":{"status":{"id":1}}}') is None

    def test_invalid_json_raises(self):
        with pytest.raises(MalformedRecordError):
            parse_tweet_record("{not json")

    def test_non_object_raises(self):
        with pytest.raises(MalformedRecordError):
            parse_tweet_record('["array"]')

    def test_empty_text_is_skip_marker(self):
        assert parse_tweet_record('{"text": ""}') is None

    def test_missing_optional_fields(self):
        tweet = parse_tweet_record('{"text": "hi"}')
        assert tweet.lang is None
        assert tweet.country_code is None
        assert tweet.place_type is None
        assert tweet.captured_at is None

    def test_null_place_tolerated(self):
        tweet = parse_tweet_record('{"text": "hi", "place": null}')
        assert tweet.country_code is None

    def test_bad_timestamp_becomes_none(self):
        tweet = parse_tweet_record('{"text": "hi", "created_at": "whenever"}')
        assert tweet.captured_at is None


class TestTimestamp:
    def test_iso_zulu(self):
        assert parse_timestamp("2014-03-01T13:00:00Z") == datetime(
            2014, 3, 1, 13, 0, 0, tzinfo=timezone.utc
        )

    def test_iso_offset_converted_to_utc(self):
        parsed = parse_timestamp("2014-03-01T08:00:00-05:00")
        assert parsed == datetime(2014, 3, 1, 13, 0, 0, tzinfo=timezone.utc)

    def test_classic_twitter_format(self):
        parsed = parse_timestamp("Sat Mar 01 13:00:00 +0000 2014")
        assert parsed == datetime(2014, 3, 1, 13, 0, 0, tzinfo=timezone.utc)

    def test_naive_assumed_utc(self):
        parsed = parse_timestamp("2014-03-01T13:00:00")
        assert parsed.tzinfo == timezone.utc

    def test_unparsable_returns_none(self):
        assert parse_timestamp("yesterday-ish") is None


def us_city(lang="en", country="US", place_type="city"):
    return Tweet("x", lang=lang, country_code=country, place_type=place_type)


class TestFilter:
    def test_accepts_en_us_city(self):
        assert filter_tweet(us_city(), FilterConfig())

    def test_rejects_other_language(self):
        assert not filter_tweet(us_city(lang="fr"), FilterConfig())

    def test_missing_place_fails(self):
        tweet = Tweet("x", lang="en", country_code=None, place_type=None)
        assert not filter_tweet(tweet, FilterConfig())

    def test_language_prefix_match(self):
        assert filter_tweet(us_city(lang="en-GB"), FilterConfig())
        assert filter_tweet(us_city(lang="EN"), FilterConfig())
        assert not filter_tweet(us_city(lang="enx"), FilterConfig())

    def test_each_criterion_toggleable(self):
        tweet = Tweet("x", lang="fr", country_code="FR", place_type="admin")
        assert not filter_tweet(tweet, FilterConfig())
        open_cfg = FilterConfig(require_lang=None, require_country=None,
                                require_place_type=None)
        assert filter_tweet(tweet, open_cfg)
        assert not filter_tweet(tweet, FilterConfig(require_lang=None,
                                                    require_country=None))

    def test_pure_function(self):
        tweet = us_city()
        cfg = FilterConfig()
        assert all(filter_tweet(tweet, cfg) for _ in range(3))


class TestReadCorpus:
    def test_counting(self):
        lines = [
            VALID_LINE,
            json.dumps({"text": "bonjour", "lang": "fr",
                        "place": {"country_code": "US", "place_type": "city"}}),
            "{broken",
        ]
        tweets, stats = read_corpus(lines)
        assert len(tweets) == 1
        assert (stats.read, stats.parsed, stats.filtered_out, stats.malformed) == (3, 2, 1, 1)
        assert stats.accepted == 1

    def test_empty_stream(self):
        tweets, stats = read_corpus("")
        assert tweets == []
        assert (stats.read, stats.parsed, stats.filtered_out, stats.malformed) == (0, 0, 0, 0)

    def test_no_dedup(self):
        tweets, _ = read_corpus([VALID_LINE, VALID_LINE])
        assert len(tweets) == 2

    def test_order_preserved(self):
        lines = []
        for i in range(10):
            lines.append(json.dumps({
                "text": f"tweet {i}", "lang": "en",
                "place": {"country_code": "US", "place_type": "city"},
            }))
        tweets, _ = read_corpus(lines)
        assert [t.text for t in tweets] == [f"tweet {i}" for i in range(10)]

    def test_accounting_invariants(self):
        lines = [VALID_LINE, "{broken", '{"delete":{}}', VALID_LINE,
                 json.dumps({"text": "hola", "lang": "es"}), "[1,2]"]
        tweets, stats = read_corpus(lines)
        assert stats.read == stats.parsed + stats.malformed
        assert len(tweets) == stats.parsed - stats.filtered_out

    def test_textless_records_count_as_filtered(self):
        tweets, stats = read_corpus(['{"delete":{"status":{"id":1}}}'])
        assert tweets == []
        assert stats.parsed == 1
        assert stats.filtered_out == 1


class TestRoundTrip:
    def test_tweet_to_json_reparses(self):
        tweet = parse_tweet_record(VALID_LINE)
        again = parse_tweet_record(tweet_to_json(tweet))
        assert again == tweet
