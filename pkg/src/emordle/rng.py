"""Deterministic 64-bit random streams.

Every random draw in the engine (layout candidates, group shuffles, scheme
parameter jitter) comes from a splitmix64 generator so that results are
bit-reproducible across runs, platforms, and reimplementations in other
languages.  The update rule is the published splitmix64: the state advances
by the golden-ratio increment 0x9E3779B97F4A7C15 and each output is the
two-round xor-multiply finalizer of the new state.

Substreams are derived, never shared: ``derive_seed(seed, *tags)`` folds a
sequence of integer or string tags into a child seed via

    s <- mix64((s ^ tag64) + 0x9E3779B97F4A7C15)

where string tags are first hashed with FNV-1a (64-bit).  Consumers document
their tag layout next to the draws they make.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3


def mix64(z: int) -> int:
    """splitmix64 output finalizer (avalanches all 64 bits)."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def fnv1a64(name: str) -> int:
    """64-bit FNV-1a hash of a UTF-8 string, used to tag named substreams."""
    h = _FNV_OFFSET
    for b in name.encode("utf-8"):
        h = ((h ^ b) * _FNV_PRIME) & MASK64
    return h


def derive_seed(seed: int, *tags: int | str) -> int:
    """Derive a child seed from a parent seed and an ordered tag path."""
    s = seed & MASK64
    for tag in tags:
        t = fnv1a64(tag) if isinstance(tag, str) else tag & MASK64
        s = mix64((s ^ t) + GOLDEN_GAMMA)
    return s


class SplitMix64:
    """Sequential splitmix64 stream."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        return mix64(self.state)

    def next_float(self) -> float:
        """Uniform float in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) * (2.0 ** -53)

    def uniform(self, lo: float, hi: float) -> float:
        return lo + self.next_float() * (hi - lo)

    def randrange(self, n: int) -> int:
        """Integer in [0, n).  Plain modulo reduction; the bias is
        negligible for the small ranges used here and keeps the stream
        trivially portable."""
        if n <= 0:
            raise ValueError("randrange() requires n >= 1")
        return self.next_u64() % n

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle (descending index order)."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]
