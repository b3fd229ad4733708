"""CSV word list ingestion.

Input is plain comma-separated ``text,weight`` records (UTF-8, optional
header row, LF or CRLF).  Quoting is not supported: a comma inside a word
is rejected rather than guessed at.  Duplicate texts are merged by summing
their weights, matching the frequency semantics of word clouds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import EmptyInput, MalformedRow, NonPositiveWeight, TooManyWords

MAX_WORDS = 200
MAX_TEXT_LEN = 64


@dataclass(frozen=True)
class WordEntry:
    """One word with its relative importance (unitless, > 0)."""

    text: str
    weight: float

    def __post_init__(self):
        if not self.text or self.text != self.text.strip():
            raise ValueError(f"word text must be non-empty and trimmed: {self.text!r}")
        if len(self.text) > MAX_TEXT_LEN:
            raise ValueError(f"word text longer than {MAX_TEXT_LEN} chars: {self.text!r}")
        if not (self.weight > 0) or not math.isfinite(self.weight):
            raise ValueError(f"weight must be a positive finite number: {self.weight!r}")


@dataclass(frozen=True)
class WordList:
    """Ordered, duplicate-free weighted words."""

    entries: tuple[WordEntry, ...]
    source_name: str = "inline"

    def __post_init__(self):
        if not 1 <= len(self.entries) <= MAX_WORDS:
            raise ValueError(f"word list must hold 1..{MAX_WORDS} entries")
        texts = [e.text for e in self.entries]
        if len(set(texts)) != len(texts):
            raise ValueError("word texts must be unique")

    def __len__(self) -> int:
        return len(self.entries)


def parse_wordle_csv(raw: bytes | str, source_name: str = "inline") -> WordList:
    """Parse CSV bytes or text into a :class:`WordList`.

    Raises :class:`EmptyInput` when there are no records, :class:`MalformedRow`
    (with the 1-based line number) for structural problems, and
    :class:`NonPositiveWeight` for weights <= 0.
    """
    if isinstance(raw, bytes):
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedRow(f"input is not valid UTF-8 ({exc.reason} at byte {exc.start})") from exc
    else:
        text = raw
    text = text.lstrip("﻿")

    order: list[str] = []
    weights: dict[str, float] = {}
    saw_record = False
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if not saw_record and line.lower().replace(" ", "") == "text,weight":
            continue
        fields = line.split(",")
        if len(fields) != 2:
            raise MalformedRow(
                f"expected 2 comma-separated fields, got {len(fields)} (commas inside text are unsupported)",
                line=lineno,
            )
        word = fields[0].strip()
        if not word:
            raise MalformedRow("empty word text", line=lineno)
        if len(word) > MAX_TEXT_LEN:
            raise MalformedRow(f"word text longer than {MAX_TEXT_LEN} characters", line=lineno)
        try:
            weight = float(fields[1].strip())
        except ValueError:
            raise MalformedRow(f"weight is not a number: {fields[1].strip()!r}", line=lineno) from None
        if not math.isfinite(weight):
            raise MalformedRow(f"weight is not finite: {fields[1].strip()!r}", line=lineno)
        if weight <= 0:
            raise NonPositiveWeight(f"weight must be > 0, got {weight}", line=lineno)
        saw_record = True
        if word in weights:
            weights[word] += weight
        else:
            order.append(word)
            weights[word] = weight

    if not saw_record:
        raise EmptyInput("no word records in input")
    if len(order) > MAX_WORDS:
        raise TooManyWords(f"{len(order)} words after merging; the cap is {MAX_WORDS}")

    entries = tuple(WordEntry(w, weights[w]) for w in order)
    return WordList(entries=entries, source_name=source_name)


def normalize_weights(words: WordList) -> WordList:
    """Scale weights so the maximum is exactly 1.0 (idempotent)."""
    top = max(e.weight for e in words.entries)
    entries = tuple(replace(e, weight=e.weight / top) for e in words.entries)
    return replace(words, entries=entries)


def serialize_wordle_csv(words: WordList) -> str:
    """Inverse of :func:`parse_wordle_csv` for storage and round-trip tests.

    Weights use repr's shortest round-trippable form so parse(serialize(x))
    reproduces the weights exactly.
    """
    lines = ["text,weight"]
    lines += [f"{e.text},{e.weight!r}" for e in words.entries]
    return "\n".join(lines) + "\n"
