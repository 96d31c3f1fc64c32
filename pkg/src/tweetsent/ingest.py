"""Tweet ingestion from JSON Lines capture files, with language/place filtering.

Input records are a subset of the classic Twitter v1.1 tweet object: text,
lang, created_at, and place{country_code, place_type}. Non-status objects
(delete notices and anything else without a text field) are skipped;
syntactically broken lines are counted as malformed and never abort a run.
"""

import json
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Iterable

from .errors import PipelineError


class MalformedRecordError(PipelineError):
    """A capture line that is not a JSON object."""


@dataclass(frozen=True)
class Tweet:
    text: str
    lang: str | None = None
    country_code: str | None = None
    place_type: str | None = None
    captured_at: datetime | None = None


@dataclass
class FilterConfig:
    """Acceptance criteria for captured tweets; None disables a criterion."""

    require_lang: str | None = "en"
    require_country: str | None = "US"
    require_place_type: str | None = "city"


@dataclass
class IngestStats:
    read: int = 0
    parsed: int = 0
    filtered_out: int = 0
    malformed: int = 0

    @property
    def accepted(self) -> int:
        return self.parsed - self.filtered_out

    def describe(self) -> str:
        return (
            f"read={self.read} parsed={self.parsed} malformed={self.malformed} "
            f"filtered_out={self.filtered_out} accepted={self.accepted}"
        )


_TWITTER_TIME_FORMAT = "%a %b %d %H:%M:%S %z %Y"


def parse_timestamp(value: str) -> datetime | None:
    """Parse an ISO-8601 or classic twitter-API timestamp to a UTC instant."""
    text = value.strip()
    try:
        parsed = datetime.fromisoformat(text.replace("Z", "+00:00"))
    except ValueError:
        try:
            parsed = datetime.strptime(text, _TWITTER_TIME_FORMAT)
        except ValueError:
            return None
    if parsed.tzinfo is None:
        parsed = parsed.replace(tzinfo=timezone.utc)
    return parsed.astimezone(timezone.utc)


def parse_tweet_record(line: str) -> Tweet | None:
    """Parse one JSON line into a Tweet, or None for text-less records."""
    try:
        obj = json.loads(line)
    except ValueError as exc:
        raise MalformedRecordError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise MalformedRecordError("record is not a JSON object")
    text = obj.get("text")
    if not isinstance(text, str) or not text:
        return None
    lang = obj.get("lang")
    place = obj.get("place")
    if not isinstance(place, dict):
        place = {}
    country = place.get("country_code")
    place_type = place.get("place_type")
    created = obj.get("created_at")
    return Tweet(
        text=text,
        lang=lang if isinstance(lang, str) else None,
        country_code=country if isinstance(country, str) else None,
        place_type=place_type if isinstance(place_type, str) else None,
        captured_at=parse_timestamp(created) if isinstance(created, str) else None,
    )


def _lang_matches(lang: str | None, wanted: str) -> bool:
    if lang is None:
        return False
    lang = lang.lower()
    wanted = wanted.lower()
    return lang == wanted or lang.startswith(wanted + "-")


def filter_tweet(tweet: Tweet, cfg: FilterConfig) -> bool:
    """True iff the tweet passes every enabled criterion."""
    if cfg.require_lang is not None and not _lang_matches(tweet.lang, cfg.require_lang):
        return False
    if cfg.require_country is not None and (
        tweet.country_code is None
        or tweet.country_code.upper() != cfg.require_country.upper()
    ):
        return False
    if cfg.require_place_type is not None and (
        tweet.place_type is None
        or tweet.place_type.lower() != cfg.require_place_type.lower()
    ):
        return False
    return True


def read_corpus(
    source: str | Iterable[str], cfg: FilterConfig | None = None
) -> tuple[list[Tweet], IngestStats]:
    """Read accepted tweets, in input order, plus per-line accounting.

    Every non-blank input line lands in exactly one bucket: malformed, or
    parsed and then either filtered out (including text-less records) or
    accepted.
    """
    if cfg is None:
        cfg = FilterConfig()
    lines = source.splitlines() if isinstance(source, str) else source
    tweets: list[Tweet] = []
    stats = IngestStats()
    for raw in lines:
        line = raw.strip()
        if not line:
            continue
        stats.read += 1
        try:
            tweet = parse_tweet_record(line)
        except MalformedRecordError:
            stats.malformed += 1
            continue
        stats.parsed += 1
        if tweet is None or not filter_tweet(tweet, cfg):
            stats.filtered_out += 1
            continue
        tweets.append(tweet)
    return tweets, stats


def tweet_to_json(tweet: Tweet) -> str:
    """Serialize a tweet back to one capture-format JSON line."""
    obj: dict = {"text": tweet.text}
    if tweet.lang is not None:
        obj["lang"] = tweet.lang
    place = {}
    if tweet.country_code is not None:
        place["country_code"] = tweet.country_code
    if tweet.place_type is not None:
        place["place_type"] = tweet.place_type
    if place:
        obj["place"] = place
    if tweet.captured_at is not None:
        obj["created_at"] = tweet.captured_at.isoformat().replace("+00:00", "Z")
    return json.dumps(obj, ensure_ascii=False, sort_keys=True, separators=(",", ":"))
