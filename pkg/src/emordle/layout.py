"""Collision-free word placement on a rectangular canvas.

Placement is greedy by descending font size: each word draws candidate
anchors from its own seeded substream and keeps the first one whose padded
bounding box neither leaves the canvas nor intersects an already-placed
padded box.  After 200 rejected samples the search falls back to a
deterministic outward rectangular spiral from the canvas center.

Candidate substreams are keyed by a word's *length rank* (position when the
list is ordered by descending text length).  Two lists of equal size whose
weights are aligned with text length, like the shipped sample lists, then
reproduce each other's geometry rank for rank, which is what keeps stimuli
comparable across datasets.

The padded box is the measured ink box scaled about its center by
``padding_factor``; the head-room it reserves is the motion budget the
animation schemes are later clamped to.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import PlacementFailure
from .rng import SplitMix64, derive_seed
from .textmetrics import ensure_glyphs, ink_extents
from .util import round_half_up
from .wordlist import WordEntry, WordList, normalize_weights

DEFAULT_PADDING = 1.3
DEFAULT_MIN_FONT = 14   # px on the 800x600 reference canvas
DEFAULT_MAX_FONT = 64
_REFERENCE_DIAGONAL = 1000.0  # hypot(800, 600)
_RANDOM_CANDIDATES = 200
_SPIRAL_STEP = 4  # px


@dataclass(frozen=True)
class Dimensions:
    width: int
    height: int

    def __post_init__(self):
        if self.width < 100 or self.height < 100:
            raise ValueError(f"canvas must be at least 100x100 px, got {self.width}x{self.height}")

    @property
    def diagonal(self) -> float:
        return math.hypot(self.width, self.height)


@dataclass(frozen=True)
class PlacedWord:
    """A word's rest pose: anchor is the ink-box center, bbox is the padded extent."""

    entry: WordEntry
    anchor: tuple[float, float]
    font_size: int
    base_rotation: float
    bbox: tuple[float, float, float, float]

    def ink_half_extents(self, padding_factor: float) -> tuple[float, float]:
        """Unpadded ink half-width/half-height, recovered from the padded bbox."""
        x0, y0, x1, y1 = self.bbox
        return (x1 - x0) / 2.0 / padding_factor, (y1 - y0) / 2.0 / padding_factor


@dataclass(frozen=True)
class WordleLayout:
    canvas: Dimensions
    words: tuple[PlacedWord, ...]
    seed: int
    padding_factor: float
    typeface: str = "default"

    def __post_init__(self):
        if self.padding_factor < 1.0:
            raise ValueError("padding_factor must be >= 1")


def font_size_for_weight(weight: float, min_font: int, max_font: int) -> int:
    """Linear map of a normalized weight in (0, 1] to a pixel font size."""
    if not 0.0 < weight <= 1.0:
        raise ValueError(f"weight must lie in (0, 1], got {weight}")
    if min_font >= max_font:
        raise ValueError("min_font must be smaller than max_font")
    return round_half_up(min_font + weight * (max_font - min_font))


def default_font_range(canvas: Dimensions) -> tuple[int, int]:
    """Default min/max font sizes, scaled with the canvas diagonal."""
    scale = canvas.diagonal / _REFERENCE_DIAGONAL
    return (max(1, round_half_up(DEFAULT_MIN_FONT * scale)),
            max(2, round_half_up(DEFAULT_MAX_FONT * scale)))


def _boxes_overlap(a: tuple[float, float, float, float],
                   b: tuple[float, float, float, float]) -> bool:
    # Positive-area intersection; shared edges do not count.
    return a[0] < b[2] and b[0] < a[2] and a[1] < b[3] and b[1] < a[3]


def _spiral_offsets(max_radius: float, step: int):
    """Deterministic rectangular spiral: (0,0), then rings stepping outward."""
    x = y = 0
    dx, dy = step, 0
    run = 1
    yield 0, 0
    while max(abs(x), abs(y)) <= max_radius:
        for _ in range(2):
            for _ in range(run):
                x += dx
                y += dy
                yield x, y
            dx, dy = -dy, dx  # turn left: R, D, L, U with +y down
        run += 1


def compute_layout(words: WordList, canvas: Dimensions, seed: int,
                   padding_factor: float = DEFAULT_PADDING,
                   typeface: str = "default") -> WordleLayout:
    """Place every word; deterministic for fixed (words, canvas, seed, padding).

    Weights are max-normalized internally (idempotent), so raw lists are
    accepted.  Raises :class:`PlacementFailure` when the retry budget is
    exhausted, which signals a canvas too small for the word set.
    """
    if padding_factor < 1.0:
        raise ValueError("padding_factor must be >= 1")
    normalized = normalize_weights(words)
    entries = normalized.entries
    n = len(entries)
    min_font, max_font = default_font_range(canvas)

    sizes = [font_size_for_weight(e.weight, min_font, max_font) for e in entries]
    for e in entries:
        ensure_glyphs(e.text, typeface)

    # Length rank keys each word's candidate substream (ties broken by list order).
    by_length = sorted(range(n), key=lambda i: (-len(entries[i].text), i))
    length_rank = {idx: r for r, idx in enumerate(by_length)}
    # Greedy placement order: biggest font first.
    order = sorted(range(n), key=lambda i: (-sizes[i], -len(entries[i].text), i))

    cx, cy = canvas.width / 2.0, canvas.height / 2.0
    placed: dict[int, PlacedWord] = {}
    boxes: list[tuple[float, float, float, float]] = []

    for idx in order:
        entry = entries[idx]
        size = sizes[idx]
        x0, y0, x1, y1 = ink_extents(entry.text, typeface, size)
        iw, ih = float(x1 - x0), float(y1 - y0)
        pw, ph = iw * padding_factor, ih * padding_factor
        if pw > canvas.width or ph > canvas.height:
            raise PlacementFailure(
                f"word {entry.text!r} at {size} px does not fit a "
                f"{canvas.width}x{canvas.height} canvas with padding {padding_factor}"
            )
        xmin, xmax = math.ceil(pw / 2.0), math.floor(canvas.width - pw / 2.0)
        ymin, ymax = math.ceil(ph / 2.0), math.floor(canvas.height - ph / 2.0)

        stream = SplitMix64(derive_seed(seed, "layout", length_rank[idx]))

        def candidates():
            yield round_half_up(cx), round_half_up(cy)
            for _ in range(_RANDOM_CANDIDATES):
                yield (xmin + stream.randrange(xmax - xmin + 1),
                       ymin + stream.randrange(ymax - ymin + 1))
            for ox, oy in _spiral_offsets(max(canvas.width, canvas.height), _SPIRAL_STEP):
                yield round_half_up(cx) + ox, round_half_up(cy) + oy

        anchor = None
        for ax, ay in candidates():
            if not (xmin <= ax <= xmax and ymin <= ay <= ymax):
                continue
            box = (ax - pw / 2.0, ay - ph / 2.0, ax + pw / 2.0, ay + ph / 2.0)
            if any(_boxes_overlap(box, other) for other in boxes):
                continue
            anchor = (float(ax), float(ay))
            boxes.append(box)
            break
        if anchor is None:
            raise PlacementFailure(
                f"no free spot for word {entry.text!r}; canvas too small for this list"
            )

        placed[idx] = PlacedWord(entry=entry, anchor=anchor, font_size=size,
                                 base_rotation=0.0, bbox=boxes[-1])

    return WordleLayout(canvas=canvas, words=tuple(placed[i] for i in range(n)),
                        seed=seed, padding_factor=padding_factor, typeface=typeface)


def check_overlap(layout: WordleLayout) -> list[tuple[int, int]]:
    """Exhaustive pairwise padded-bbox intersection test; [] iff the layout is valid."""
    out = []
    ws = layout.words
    for i in range(len(ws)):
        for j in range(i + 1, len(ws)):
            if _boxes_overlap(ws[i].bbox, ws[j].bbox):
                out.append((i, j))
    return out
