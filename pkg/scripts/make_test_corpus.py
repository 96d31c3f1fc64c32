#!/usr/bin/env python3
"""Regenerate tests/fixtures/corpus.jsonl.

Deterministic synthetic capture file: ~200 accepted tweets plus a sprinkle
of foreign-language/wrong-place records, delete notices, malformed lines,
and records with missing or oddly formatted timestamps, so the ingest
accounting paths all get exercised.
"""

import json
import random
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "corpus.jsonl"

POSITIVE = [
    "happy", "good", "great", "love", "awesome", "fun", "nice", "glad",
    "excited", "amazing", "sweet", "win", "smile", "lucky", "proud",
    "beautiful", "fantastic", "wow", "delicious", "perfect", "enjoy",
]
NEGATIVE = [
    "sad", "bad", "terrible", "hate", "awful", "tired", "angry", "sick",
    "worst", "fail", "annoying", "hurt", "mad", "lose", "horrible",
    "disappointed", "scared", "mess", "wrong", "stupid", "pain",
]
NEUTRAL = [
    "coffee", "monday", "game", "weather", "tonight", "morning", "bus",
    "school", "work", "lunch", "music", "weekend", "traffic", "rain",
    "movie", "dinner", "photo", "street", "city", "shift", "meeting",
    "dog", "cat", "pizza", "show", "team", "class", "phone", "store",
    "brunchfest", "vibes", "playlist", "snowpocalypse", "parkrun",
    "stream", "update", "episode", "novel", "recipe", "garden",
]
FILLERS = [
    "the", "so", "really", "just", "about", "this", "my", "that", "a",
    "today", "right", "now", "again", "still", "very", "too", "and",
    "with", "for", "all", "much", "here", "out", "over",
]
HASHTAGS = ["#mood", "#nyc", "#life", "#blessed", "#mondays", "#noFilter"]
MENTIONS = ["@sam", "@riley_k", "@coffee_house", "@newsdesk"]
URLS = ["http://t.co/abc123", "https://t.co/xyz", "http://example.com/p/9"]
EXTRAS = ["café", "súmente", "\U0001f31f", "☕"]

CITIES = ["Columbus", "Atlanta", "Austin", "Denver", "Portland", "Boston"]


def iso(day: int, hour: int, minute: int, second: int) -> str:
    return f"2014-03-{day:02d}T{hour:02d}:{minute:02d}:{second:02d}Z"


def classic(day: int, hour: int, minute: int, second: int) -> str:
    weekdays = ["Sat", "Sun", "Mon", "Tue", "Wed", "Thu", "Fri"]
    return (
        f"{weekdays[(day - 1) % 7]} Mar {day:02d} "
        f"{hour:02d}:{minute:02d}:{second:02d} +0000 2014"
    )


def make_text(rng: random.Random) -> str:
    # Longer tweets pick up more sentiment-bearing words, shorter ones
    # mostly neutral chatter; polarity persists within a tweet.
    n_words = rng.choice([3, 4, 5, 6, 7, 8, 10, 12, 14, 16, 18, 21])
    polarity = rng.choice(["pos", "neg", "none", "pos", "neg"])
    pool = {"pos": POSITIVE, "neg": NEGATIVE, "none": []}[polarity]
    words = []
    for _ in range(n_words):
        roll = rng.random()
        if pool and roll < 0.35:
            words.append(rng.choice(pool))
        elif roll < 0.75:
            words.append(rng.choice(NEUTRAL))
        else:
            words.append(rng.choice(FILLERS))
    if rng.random() < 0.25:
        words.append(rng.choice(HASHTAGS))
    if rng.random() < 0.15:
        words.insert(0, rng.choice(MENTIONS))
    if rng.random() < 0.12:
        words.append(rng.choice(URLS))
    if rng.random() < 0.08:
        words.append(rng.choice(EXTRAS))
    text = " ".join(words)
    if rng.random() < 0.3:
        text = text.capitalize() + rng.choice(["!", ".", "...", "?", ""])
    return text


def tweet_obj(rng: random.Random, text: str, *, lang="en", country="US",
              place_type="city", day=None, stamp="iso"):
    day = day if day is not None else rng.choice([1, 2, 3, 8, 9, 10, 15, 16, 17])
    hour, minute, second = rng.randrange(24), rng.randrange(60), rng.randrange(60)
    obj = {"text": text, "lang": lang}
    if country is not None:
        obj["place"] = {
            "country_code": country,
            "place_type": place_type,
            "full_name": f"{rng.choice(CITIES)}, {country}",
        }
    if stamp == "iso":
        obj["created_at"] = iso(day, hour, minute, second)
    elif stamp == "classic":
        obj["created_at"] = classic(day, hour, minute, second)
    return obj


def main() -> None:
    rng = random.Random(20140301)
    lines = []

    for i in range(200):
        stamp = "classic" if i % 9 == 4 else "iso"
        lines.append(json.dumps(tweet_obj(rng, make_text(rng), stamp=stamp),
                                ensure_ascii=False))

    # One accepted tweet longer than the classic 140-character cap.
    long_text = " ".join(["great"] * 10 + ["coffee"] * 10 + ["happy"] * 8)
    lines.append(json.dumps(tweet_obj(rng, long_text), ensure_ascii=False))

    # Accepted language/place but no usable timestamp: scoring must skip.
    lines.append(json.dumps(tweet_obj(rng, "good morning city", stamp="none"),
                            ensure_ascii=False))
    bad_stamp = tweet_obj(rng, "nice game tonight")
    bad_stamp["created_at"] = "yesterday-ish"
    lines.append(json.dumps(bad_stamp, ensure_ascii=False))

    # Filtered out: wrong language, wrong country, wrong place type, no place.
    for lang, text in [("fr", "quelle belle journée"), ("de", "so ein schlechtes spiel"),
                       ("es", "borked pero feliz"), ("fr", "pas mal du tout")]:
        lines.append(json.dumps(tweet_obj(rng, text, lang=lang), ensure_ascii=False))
    for country in ["GB", "CA", "AU"]:
        lines.append(json.dumps(tweet_obj(rng, "lovely weather here", country=country),
                                ensure_ascii=False))
    for place_type in ["admin", "neighborhood", "country"]:
        lines.append(json.dumps(tweet_obj(rng, "stuck in traffic again",
                                          place_type=place_type), ensure_ascii=False))
    lines.append(json.dumps({"text": "no place at all", "lang": "en",
                             "created_at": iso(2, 9, 30, 0)}, ensure_ascii=False))

    # Delete notices and other text-less control records.
    for status_id in [101, 102, 103, 104]:
        lines.append(json.dumps({"delete": {"status": {"id": status_id}}}))
    lines.append(json.dumps({"limit": {"track": 17}}))

    # Malformed lines: truncated JSON and plain garbage.
    lines.append('{"text": "truncated')
    lines.append("not json at all")
    lines.append('["a","bare","array"]')

    rng.shuffle(lines)
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lines)} lines to {OUT}")


if __name__ == "__main__":
    main()
