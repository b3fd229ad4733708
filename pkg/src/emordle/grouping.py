"""Partition words into groups, the unit of animation variation.

Entropy maps to a group count between a scheme-dependent minimum and one
group per word; groups are then filled either by a seeded shuffle (random
strategy) or by spatial adjacency (positional strategy: farthest-point
seeding over word anchors followed by nearest-seed assignment, a
deterministic Voronoi-style partition).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import GroupCountOutOfRange
from .layout import WordleLayout
from .rng import SplitMix64, derive_seed
from .util import clamp01, round_half_up


class GroupingStrategy(str, enum.Enum):
    RANDOM = "random"
    POSITIONAL = "positional"


POSITIONAL_MIN_GROUPS = 4  # collapses to n for tiny lists


@dataclass(frozen=True)
class GroupAssignment:
    """For each word index its 0-based group id; groups partition [0, N)."""

    group_of: tuple[int, ...]
    group_count: int

    def __post_init__(self):
        if self.group_count < 1:
            raise ValueError("group_count must be >= 1")
        seen = set()
        for g in self.group_of:
            if not 0 <= g < self.group_count:
                raise ValueError(f"group id {g} outside [0, {self.group_count})")
            seen.add(g)
        if len(seen) != self.group_count:
            raise ValueError("every group must be non-empty")

    def members(self, group: int) -> list[int]:
        return [i for i, g in enumerate(self.group_of) if g == group]


def group_count_for_entropy(strategy: GroupingStrategy, n_words: int, entropy: float) -> int:
    """Group count: minimum at entropy 0 (1 random / 4 positional), one per word at 1."""
    if n_words < 1:
        raise ValueError("n_words must be >= 1")
    e = clamp01(entropy)
    g_min = 1 if strategy is GroupingStrategy.RANDOM else min(POSITIONAL_MIN_GROUPS, n_words)
    g = round_half_up(g_min + e * (n_words - g_min))
    return max(1, min(n_words, g))


def group_random(n_words: int, g: int, seed: int) -> GroupAssignment:
    """Seeded shuffle dealt round-robin; group sizes differ by at most one."""
    if not 1 <= g <= n_words:
        raise GroupCountOutOfRange(f"group count {g} not in [1, {n_words}]")
    indices = list(range(n_words))
    SplitMix64(derive_seed(seed, "group-random")).shuffle(indices)
    group_of = [0] * n_words
    for pos, idx in enumerate(indices):
        group_of[idx] = pos % g
    return GroupAssignment(group_of=tuple(group_of), group_count=g)


def group_positional(layout: WordleLayout, g: int, seed: int) -> GroupAssignment:
    """Farthest-point seeds over anchors, words join their nearest seed.

    The first seed is the word nearest the canvas center; each further seed
    maximizes the distance to all chosen seeds.  All ties break toward the
    lower word index, so the partition is a pure function of the layout (the
    ``seed`` argument is accepted for interface symmetry but unused).
    """
    n = len(layout.words)
    if not 1 <= g <= n:
        raise GroupCountOutOfRange(f"group count {g} not in [1, {n}]")
    anchors = [w.anchor for w in layout.words]
    cx, cy = layout.canvas.width / 2.0, layout.canvas.height / 2.0

    first = min(range(n), key=lambda i: (math.dist(anchors[i], (cx, cy)), i))
    seeds = [first]
    min_dist = [math.dist(anchors[i], anchors[first]) for i in range(n)]
    while len(seeds) < g:
        nxt = max(range(n), key=lambda i: (min_dist[i], -i))
        seeds.append(nxt)
        for i in range(n):
            d = math.dist(anchors[i], anchors[nxt])
            if d < min_dist[i]:
                min_dist[i] = d

    group_of = []
    for i in range(n):
        best = min(range(len(seeds)), key=lambda s: (math.dist(anchors[i], anchors[seeds[s]]), s))
        group_of.append(best)
    return GroupAssignment(group_of=tuple(group_of), group_count=g)
