"""Keyframe channels, easing functions, and time sampling.

Every animation the engine produces compiles down to these primitives: a
word owns a :class:`Timeline`, a timeline owns at most one :class:`Channel`
per property, and a channel is a time-sorted list of keyframes interpolated
by easing functions.  Channel values are offsets from the word's rest pose
(rest is 0 for positional/rotational/style offsets, 1 for scale and
opacity), which is what lets one scheme apply to every word no matter where
it sits or how big it is.
"""

from __future__ import annotations

import bisect
import enum
from dataclasses import dataclass, field

from .errors import DomainError, NonPositiveDuration

# Back-out overshoot coefficients for the "bump" transition.
_BUMP_C1 = 1.70158
_BUMP_C3 = _BUMP_C1 + 1.0


class EasingKind(str, enum.Enum):
    LINEAR = "linear"
    BUMP = "bump"
    SLOW_IN = "slow_in"
    SLOW_OUT = "slow_out"
    SLOW_IN_OUT = "slow_in_out"
    FAST_IN_OUT = "fast_in_out"


class ChannelKind(str, enum.Enum):
    TRANSLATE_X = "translate_x"   # px offset from rest anchor
    TRANSLATE_Y = "translate_y"   # px offset, +y is down
    ROTATION = "rotation"         # degrees, counterclockwise on screen
    SCALE = "scale"               # multiplicative factor about the anchor
    OPACITY = "opacity"           # [0, 1]
    COLOR_SHIFT = "color_shift"   # [0, 1] interpolation toward the palette's shift target
    BLUR = "blur"                 # gaussian radius in px


REST_VALUE: dict[ChannelKind, float] = {
    ChannelKind.TRANSLATE_X: 0.0,
    ChannelKind.TRANSLATE_Y: 0.0,
    ChannelKind.ROTATION: 0.0,
    ChannelKind.SCALE: 1.0,
    ChannelKind.OPACITY: 1.0,
    ChannelKind.COLOR_SHIFT: 0.0,
    ChannelKind.BLUR: 0.0,
}


def ease(kind: EasingKind, t: float) -> float:
    """Evaluate an easing function at normalized time t in [0, 1].

    All kinds satisfy f(0) = 0 and f(1) = 1.  ``bump`` overshoots past 1 in
    the interior (back-out); the others are monotone:

        linear       t
        slow_in      t^2
        slow_out     1 - (1 - t)^2
        slow_in_out  3t^2 - 2t^3                      (smoothstep)
        fast_in_out  0.5 * (1 + sign(t - 1/2) * sqrt(|2t - 1|))
        bump         1 + (c1 + 1)(t - 1)^3 + c1 (t - 1)^2,  c1 = 1.70158
    """
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"easing time must lie in [0, 1], got {t}")
    if kind is EasingKind.LINEAR:
        return t
    if kind is EasingKind.SLOW_IN:
        return t * t
    if kind is EasingKind.SLOW_OUT:
        return 1.0 - (1.0 - t) * (1.0 - t)
    if kind is EasingKind.SLOW_IN_OUT:
        return t * t * (3.0 - 2.0 * t)
    if kind is EasingKind.FAST_IN_OUT:
        u = 2.0 * t - 1.0
        s = 1.0 if u >= 0.0 else -1.0
        return 0.5 * (1.0 + s * abs(u) ** 0.5)
    if kind is EasingKind.BUMP:
        u = t - 1.0
        return 1.0 + _BUMP_C3 * u * u * u + _BUMP_C1 * u * u
    raise DomainError(f"unknown easing kind: {kind!r}")


@dataclass(frozen=True)
class Keyframe:
    """A (time, value) anchor; ``easing_out`` paces the segment to the next keyframe."""

    t: float
    value: float
    easing_out: EasingKind = EasingKind.LINEAR

    def __post_init__(self):
        if not 0.0 <= self.t <= 1.0:
            raise ValueError(f"keyframe time must lie in [0, 1], got {self.t}")


@dataclass(frozen=True)
class Channel:
    kind: ChannelKind
    keyframes: tuple[Keyframe, ...]

    def __post_init__(self):
        if not self.keyframes:
            raise ValueError("channel needs at least one keyframe")
        if self.keyframes[0].t != 0.0:
            raise ValueError("first keyframe must sit at t = 0")
        for a, b in zip(self.keyframes, self.keyframes[1:]):
            if b.t <= a.t:
                raise ValueError("keyframes must be strictly increasing in t")


@dataclass(frozen=True)
class Timeline:
    """At most one channel per kind; absent channels hold the rest value.

    Sampling any present channel at t = 0 must give the rest value; this is
    the invariant that makes frame 0 of every animation identical to the
    static word cloud.
    """

    channels: tuple[Channel, ...] = ()

    def __post_init__(self):
        seen = set()
        for ch in self.channels:
            if ch.kind in seen:
                raise ValueError(f"duplicate channel kind: {ch.kind.value}")
            seen.add(ch.kind)
            rest = REST_VALUE[ch.kind]
            if abs(ch.keyframes[0].value - rest) > 1e-9:
                raise ValueError(
                    f"channel {ch.kind.value} must start at its rest value {rest}, "
                    f"got {ch.keyframes[0].value}"
                )

    def channel(self, kind: ChannelKind) -> Channel | None:
        for ch in self.channels:
            if ch.kind is kind:
                return ch
        return None


@dataclass(frozen=True)
class PropertyState:
    """One sampled value per channel kind (rest values where absent)."""

    translate_x: float = 0.0
    translate_y: float = 0.0
    rotation: float = 0.0
    scale: float = 1.0
    opacity: float = 1.0
    color_shift: float = 0.0
    blur: float = 0.0

    def get(self, kind: ChannelKind) -> float:
        return getattr(self, kind.value)


REST_STATE = PropertyState()


def sample_channel(channel: Channel, t: float) -> float:
    """Piecewise-eased evaluation; holds the last value after the final keyframe."""
    kfs = channel.keyframes
    if t <= kfs[0].t:
        return kfs[0].value
    if t >= kfs[-1].t:
        return kfs[-1].value
    times = [k.t for k in kfs]
    i = bisect.bisect_right(times, t) - 1
    a, b = kfs[i], kfs[i + 1]
    u = (t - a.t) / (b.t - a.t)
    return a.value + ease(a.easing_out, u) * (b.value - a.value)


def sample_timeline(timeline: Timeline, t: float) -> PropertyState:
    values = {}
    for ch in timeline.channels:
        values[ch.kind.value] = sample_channel(ch, t)
    return PropertyState(**values) if values else REST_STATE


def loop_phase(elapsed: float, duration: float) -> float:
    """Normalized position in [0, 1) of ``elapsed`` seconds within a loop."""
    if duration <= 0:
        raise NonPositiveDuration(f"loop duration must be > 0 s, got {duration}")
    return (elapsed % duration) / duration
