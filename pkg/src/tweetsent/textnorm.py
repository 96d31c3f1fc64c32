"""Tweet text normalization and tokenization into lexicon-matchable terms."""

import unicodedata

URL_PREFIXES = ("http://", "https://")

# Historical per-message character cap. Longer texts are accepted and only
# flagged in scoring stats; capture files can contain unescaped entities.
LENGTH_LIMIT = 140


def tweet_length(text: str) -> int:
    """Number of Unicode scalar values in the raw, unnormalized text."""
    return len(text)


def _strip_edge_punctuation(token: str) -> str:
    start, end = 0, len(token)
    while start < end and unicodedata.category(token[start]).startswith("P"):
        start += 1
    while end > start and unicodedata.category(token[end - 1]).startswith("P"):
        end -= 1
    return token[start:end]


def tokenize(text: str, raw: bool = False) -> list[str]:
    """Normalize ``text`` and split it into lowercase terms.

    Pipeline: NFC-normalize, drop URL and @mention tokens, lowercase, split
    on Unicode whitespace, trim punctuation (including any '#' prefix) from
    token edges while keeping interior apostrophes and hyphens, and drop
    tokens that end up empty. With ``raw=True`` the URL/mention removal and
    punctuation trimming are skipped: only normalize, lowercase, and split.
    """
    text = unicodedata.normalize("NFC", text)
    terms: list[str] = []
    for chunk in text.split():
        lowered = chunk.lower()
        if raw:
            terms.append(lowered)
            continue
        if lowered.startswith(URL_PREFIXES) or lowered.startswith("@"):
            continue
        token = _strip_edge_punctuation(lowered)
        if token:
            terms.append(token)
    return terms
