"""Sentiment lexicon loading, merging, and serialization.

The on-disk format is UTF-8 text with Unix newlines, one ``term<TAB>score``
pair per line, no header and no comments. Seed dictionaries (AFINN-style
wordlists) carry integer scores in [-5, +5]; expanded dictionaries may
carry any finite real score.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from .errors import PipelineError


class LexiconError(PipelineError):
    """Malformed or inconsistent lexicon data."""


class DuplicateTermError(LexiconError):
    """The same term appeared more than once in one lexicon."""


class ScoreRangeError(LexiconError):
    """A seed score was fractional or outside the [-5, +5] range."""


class Origin(str, Enum):
    SEED = "seed"
    EXPANDED = "expanded"


SEED_MIN = -5
SEED_MAX = 5


@dataclass(frozen=True)
class LexiconEntry:
    term: str
    score: float
    origin: Origin

    def __post_init__(self):
        if not self.term:
            raise LexiconError("empty term")
        if any(c in "\t\n\r" for c in self.term):
            raise LexiconError(f"term contains tab or newline: {self.term!r}")
        if self.term != self.term.strip():
            raise LexiconError(f"term has leading/trailing whitespace: {self.term!r}")
        if self.term != self.term.lower():
            raise LexiconError(f"term is not lowercase: {self.term!r}")
        if not math.isfinite(self.score):
            raise LexiconError(f"non-finite score for term {self.term!r}")
        if self.origin is Origin.SEED and (
            self.score != int(self.score) or not SEED_MIN <= self.score <= SEED_MAX
        ):
            raise ScoreRangeError(
                f"seed score for {self.term!r} must be an integer in "
                f"[{SEED_MIN}, {SEED_MAX}], got {self.score!r}"
            )


class Lexicon:
    """Immutable term -> entry map. Absent terms are unscored, never 0."""

    def __init__(self, entries: Iterable[LexiconEntry] = ()):
        table: dict[str, LexiconEntry] = {}
        for entry in entries:
            if entry.term in table:
                raise DuplicateTermError(f"duplicate term: {entry.term!r}")
            table[entry.term] = entry
        self._table = table

    def __len__(self) -> int:
        return len(self._table)

    def __contains__(self, term: str) -> bool:
        return term in self._table

    def __iter__(self) -> Iterator[LexiconEntry]:
        return iter(self._table.values())

    def get(self, term: str) -> LexiconEntry | None:
        return self._table.get(term)

    def score(self, term: str) -> float | None:
        """Score of ``term``, or None when the term is unscored."""
        entry = self._table.get(term)
        return None if entry is None else entry.score

    def terms(self) -> Iterable[str]:
        return self._table.keys()


def load_lexicon(source: str | Iterable[str], origin: Origin) -> Lexicon:
    """Parse ``term<TAB>score`` lines into a Lexicon.

    ``origin`` applies to every entry; seed origin additionally enforces
    integer scores in [-5, +5]. Blank lines are ignored. Duplicate terms,
    tab-less lines, and unparsable scores are hard errors reported with
    their line number.
    """
    lines = source.splitlines() if isinstance(source, str) else source
    entries: list[LexiconEntry] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if not line:
            continue
        term, sep, score_text = line.partition("\t")
        if not sep:
            raise LexiconError(f"line {lineno}: expected term<TAB>score, got {line!r}")
        try:
            score = float(score_text)
        except ValueError:
            raise LexiconError(f"line {lineno}: unparsable score {score_text!r}") from None
        if not math.isfinite(score):
            raise LexiconError(f"line {lineno}: non-finite score {score_text!r}")
        if term in seen:
            raise DuplicateTermError(f"line {lineno}: duplicate term {term!r}")
        seen.add(term)
        try:
            entries.append(LexiconEntry(term, score, origin))
        except LexiconError as exc:
            raise type(exc)(f"line {lineno}: {exc}") from None
    return Lexicon(entries)


def merge_lexicons(seed: Lexicon, expanded: Lexicon) -> Lexicon:
    """Union of both lexicons where seed entries always win on conflicts."""
    entries = list(seed) + [e for e in expanded if e.term not in seed]
    return Lexicon(entries)


def format_score(score: float) -> str:
    """Integer scores print bare; others with up to 6 trimmed decimals."""
    if score == int(score):
        return str(int(score))
    return f"{score:.6f}".rstrip("0").rstrip(".")


def save_lexicon(lexicon: Lexicon) -> str:
    """Serialize to the tab-separated format, terms in byte order."""
    entries = sorted(lexicon, key=lambda e: e.term)
    return "".join(f"{e.term}\t{format_score(e.score)}\n" for e in entries)
