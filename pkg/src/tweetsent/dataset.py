"""Dataset assembly: deterministic shuffling and CSV/ARFF serialization.

CSV layout: header ``length,sentiment,date``, length as an integer,
sentiment with exactly 4 fractional digits (round-half-even), date as
YYYY-MM-DD, Unix newlines. ARFF carries only the two numeric attributes
unless the date is explicitly requested as a string attribute.
"""

from datetime import date
from typing import Sequence, TypeVar

from .errors import PipelineError
from .rng import SplitMix64
from .scoring import ScoredTweet

T = TypeVar("T")


class DatasetFormatError(PipelineError):
    """Malformed dataset file or invalid serialization request."""


CSV_HEADER = "length,sentiment,date"


def shuffle(records: Sequence[T], seed: int) -> list[T]:
    """Fisher-Yates permutation driven by splitmix64(seed).

    Walks from the last index down to 1, swapping with index
    ``next_u64() % (i + 1)``. Identical inputs and seed give an identical
    permutation on every platform.
    """
    out = list(records)
    rng = SplitMix64(seed)
    for i in range(len(out) - 1, 0, -1):
        j = rng.randbelow(i + 1)
        out[i], out[j] = out[j], out[i]
    return out


def format_sentiment(value: float) -> str:
    return f"{value:.4f}"


def write_csv(records: Sequence[ScoredTweet]) -> str:
    lines = [CSV_HEADER + "\n"]
    for record in records:
        day = record.captured_date.isoformat() if record.captured_date else ""
        lines.append(f"{record.length},{format_sentiment(record.sentiment)},{day}\n")
    return "".join(lines)


def read_csv(text: str) -> list[ScoredTweet]:
    """Parse a CSV produced by :func:`write_csv` (date column optional)."""
    lines = text.splitlines()
    if not lines:
        raise DatasetFormatError("empty CSV: missing header")
    header = lines[0].split(",")
    try:
        length_col = header.index("length")
        sentiment_col = header.index("sentiment")
    except ValueError:
        raise DatasetFormatError(
            f"CSV header must name length and sentiment columns, got {lines[0]!r}"
        ) from None
    date_col = header.index("date") if "date" in header else None
    records: list[ScoredTweet] = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        parts = line.split(",")
        try:
            length = int(parts[length_col])
            sentiment = float(parts[sentiment_col])
        except (ValueError, IndexError):
            raise DatasetFormatError(f"line {lineno}: bad row {line!r}") from None
        captured = None
        if date_col is not None and date_col < len(parts) and parts[date_col]:
            try:
                captured = date.fromisoformat(parts[date_col])
            except ValueError:
                raise DatasetFormatError(
                    f"line {lineno}: bad date {parts[date_col]!r}"
                ) from None
        records.append(ScoredTweet(length, sentiment, captured))
    return records


def write_arff(
    records: Sequence[ScoredTweet],
    relation: str = "tweets",
    include_date: bool = False,
) -> str:
    """Serialize records as an ARFF document with numeric length/sentiment."""
    if not relation or any(c in relation for c in "\r\n"):
        raise DatasetFormatError("relation name must be non-empty and single-line")
    lines = [
        f"@RELATION {relation}\n",
        "\n",
        "@ATTRIBUTE length NUMERIC\n",
        "@ATTRIBUTE sentiment NUMERIC\n",
    ]
    if include_date:
        lines.append("@ATTRIBUTE date STRING\n")
    lines += ["\n", "@DATA\n"]
    for record in records:
        row = f"{record.length},{format_sentiment(record.sentiment)}"
        if include_date:
            row += f",{record.captured_date.isoformat() if record.captured_date else '?'}"
        lines.append(row + "\n")
    return "".join(lines)


def read_points(text: str) -> list[tuple[float, float]]:
    """Read (length, sentiment) pairs from our CSV or ARFF output."""
    if text.lstrip()[:1] == "@":
        return _read_points_arff(text)
    return [(float(r.length), r.sentiment) for r in read_csv(text)]


def _read_points_arff(text: str) -> list[tuple[float, float]]:
    attributes: list[str] = []
    rows: list[tuple[int, str]] = []
    in_data = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        keyword = line.split(None, 1)[0].upper()
        if keyword == "@RELATION":
            continue
        if keyword == "@ATTRIBUTE":
            parts = line.split()
            if len(parts) < 3:
                raise DatasetFormatError(f"line {lineno}: bad attribute declaration")
            attributes.append(parts[1].lower())
            continue
        if keyword == "@DATA":
            in_data = True
            continue
        if in_data:
            rows.append((lineno, line))
    try:
        length_col = attributes.index("length")
        sentiment_col = attributes.index("sentiment")
    except ValueError:
        raise DatasetFormatError(
            "ARFF must declare length and sentiment attributes"
        ) from None
    points: list[tuple[float, float]] = []
    for lineno, row in rows:
        parts = row.split(",")
        try:
            points.append((float(parts[length_col]), float(parts[sentiment_col])))
        except (ValueError, IndexError):
            raise DatasetFormatError(f"line {lineno}: bad data row {row!r}") from None
    return points
