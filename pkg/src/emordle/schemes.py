"""Emotion scheme templates and the composer that instantiates them.

A scheme is one word's backbone animation plus rules for varying it across
word groups.  The composer turns (template, layout, knobs) into a fully
resolved :class:`AnimationDescriptor`:

* entropy picks the group count (few groups = coordinated, one group per
  word = chaotic) and amplifies motion amplitudes,
* speed shortens the loop and packs extra oscillation cycles into it,
* each group draws its variation parameters (direction, amplitude jitter)
  from its own seeded substream, and delays cascade by group rank,
* every word's motion is finally clamped so its transformed ink box stays
  inside its padded layout box, which is what guarantees animated words
  never collide.

All numeric baselines live in the template declarations below (one tuning
table per scheme) so they can be re-tuned without touching composer code.

Substream layout per group r of G: ``derive_seed(seed, "scheme", scheme_id, r)``
drawing, in order: direction jitter u, direction fallback angle u (both only
for direction schemes), then one jitter u per per-group amplitude in sorted
name order.  The draw order is fixed so adding a channel never shifts
existing parameters.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace

import numpy as np

from .animation import (Channel, ChannelKind, EasingKind, Keyframe, REST_VALUE,
                        Timeline, sample_timeline)
from .errors import UnknownScheme
from .grouping import (GroupAssignment, GroupingStrategy, group_count_for_entropy,
                       group_positional, group_random)
from .layout import WordleLayout
from .rng import SplitMix64, derive_seed
from .util import clamp01, round_half_up

DELAY_CAP = 0.4                 # max start delay, as a fraction of the loop
DIRECTION_JITTER_DEG = 15.0     # direction wobble at entropy 1
AMPLITUDE_JITTER_FLOOR = 0.7    # per-group amplitude factor drawn in [floor, 1]
DURATION_SLOWEST = 4.0          # seconds, speed = 0
DURATION_FASTEST = 1.0          # seconds, speed = 1
_CLAMP_SAMPLES = 256


class AmplitudeUnit(str, enum.Enum):
    PX = "px"
    DEGREES = "degrees"
    FACTOR = "factor"
    CANVAS_DIAGONAL = "canvas_diagonal"
    CANVAS_WIDTH = "canvas_width"
    CANVAS_HEIGHT = "canvas_height"


@dataclass(frozen=True)
class AmplitudeDecl:
    """A named, tunable motion extent."""

    base: float
    unit: AmplitudeUnit
    entropy_scaled: bool = False   # passed through amplitude_for_entropy
    per_group: bool = False        # multiplied by a per-group jitter draw


@dataclass(frozen=True)
class ValueExpr:
    """Keyframe value of the form ``const + coef * amplitude``."""

    const: float = 0.0
    coef: float = 0.0
    amp: str | None = None

    def resolve(self, amplitudes: dict[str, float]) -> float:
        v = self.const
        if self.amp is not None:
            v += self.coef * amplitudes[self.amp]
        return v


@dataclass(frozen=True)
class KeyframeSpec:
    t: float
    expr: ValueExpr
    easing: EasingKind = EasingKind.LINEAR


class Repeat(str, enum.Enum):
    ONCE = "once"     # body spans the whole active window
    CYCLE = "cycle"   # body tiles cycles_for_speed times


@dataclass(frozen=True)
class ChannelSpec:
    kind: ChannelKind
    repeat: Repeat
    keyframes: tuple[KeyframeSpec, ...]
    direction_axis: str | None = None   # "x" or "y": multiply values by that direction component


@dataclass(frozen=True)
class SchemeTemplate:
    id: str
    emotion_label: str
    strategy: GroupingStrategy
    max_extra_cycles: int
    channels: tuple[ChannelSpec, ...]
    amplitudes: dict[str, AmplitudeDecl] = field(default_factory=dict)
    has_delay: bool = False
    has_direction: bool = False
    tail_hold: float = 0.0

    def __post_init__(self):
        _validate_template(self)

    def varied_parameters(self) -> set[str]:
        """Parameter names this scheme varies per group (for conformance checks)."""
        out = set()
        if self.has_delay:
            out.add("delay")
        if self.has_direction:
            out.add("direction")
        out.update(name for name, a in self.amplitudes.items() if a.per_group)
        return out


def _validate_template(tpl: SchemeTemplate) -> None:
    from .errors import SchemeValidationError as Bad

    if not tpl.id or not all(c.isalnum() or c in "-_" for c in tpl.id):
        raise Bad(f"scheme id must be alphanumeric/-/_: {tpl.id!r}")
    if tpl.max_extra_cycles < 0:
        raise Bad("extra_cycles must be >= 0")
    if not 0.0 <= tpl.tail_hold < 0.5:
        raise Bad("tail_hold must lie in [0, 0.5)")
    if not tpl.channels:
        raise Bad("scheme declares no channels")
    seen = set()
    uses_direction = False
    for ch in tpl.channels:
        if ch.kind in seen:
            raise Bad(f"duplicate channel kind: {ch.kind.value}")
        seen.add(ch.kind)
        if ch.direction_axis is not None:
            if ch.kind not in (ChannelKind.TRANSLATE_X, ChannelKind.TRANSLATE_Y):
                raise Bad("direction applies only to translate channels")
            if ch.direction_axis not in ("x", "y"):
                raise Bad(f"direction axis must be x or y, got {ch.direction_axis!r}")
            uses_direction = True
        kfs = ch.keyframes
        if not kfs:
            raise Bad(f"channel {ch.kind.value} has no keyframes")
        for a, b in zip(kfs, kfs[1:]):
            if b.t <= a.t:
                raise Bad(f"channel {ch.kind.value}: keyframes not strictly increasing")
        if kfs[0].t != 0.0:
            raise Bad(f"channel {ch.kind.value}: first keyframe must sit at t = 0")
        if not 0.0 <= kfs[-1].t <= 1.0:
            raise Bad(f"channel {ch.kind.value}: keyframe times must lie in [0, 1]")
        rest = REST_VALUE[ch.kind]
        first = kfs[0].expr
        if first.amp is not None or first.const != rest:
            raise Bad(f"channel {ch.kind.value}: t = 0 must be the rest pose ({rest})")
        if ch.repeat is Repeat.CYCLE:
            last = kfs[-1].expr
            if kfs[-1].t != 1.0 or last.amp is not None or last.const != rest:
                raise Bad(f"channel {ch.kind.value}: cycling bodies must end at rest at t = 1")
        if ch.direction_axis is not None:
            for ks in kfs:
                if ks.expr.const != 0.0:
                    raise Bad(f"channel {ch.kind.value}: directional values cannot have a constant part")
        for ks in kfs:
            if ks.expr.amp is not None and ks.expr.amp not in tpl.amplitudes:
                raise Bad(f"channel {ch.kind.value}: unknown amplitude {ks.expr.amp!r}")
    if tpl.has_direction != uses_direction:
        raise Bad("direction flag and directional channels disagree")


@dataclass(frozen=True)
class EmordleSpec:
    """The author's knobs.  Entropy and speed are clamped to [0, 1], not rejected."""

    scheme_id: str
    entropy: float = 0.5
    speed: float = 0.5
    seed: int = 0
    palette: str = "mono"
    typeface: str = "default"

    def __post_init__(self):
        object.__setattr__(self, "entropy", clamp01(float(self.entropy)))
        object.__setattr__(self, "speed", clamp01(float(self.speed)))
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be an unsigned 64-bit integer")


@dataclass(frozen=True)
class AnimationDescriptor:
    """Fully resolved per-word timelines: the portable playback document."""

    scheme_id: str
    emotion_label: str
    duration: float
    words: tuple[Timeline, ...]
    groups: GroupAssignment
    entropy: float
    speed: float
    seed: int

    def __post_init__(self):
        if not DURATION_FASTEST <= self.duration <= DURATION_SLOWEST:
            raise ValueError(f"duration must lie in [{DURATION_FASTEST}, {DURATION_SLOWEST}] s")
        if len(self.words) != len(self.groups.group_of):
            raise ValueError("descriptor word count and group assignment disagree")


def duration_for_speed(speed: float) -> float:
    """Loop duration in seconds: 4 s at speed 0 down to 1 s at speed 1."""
    return DURATION_SLOWEST - (DURATION_SLOWEST - DURATION_FASTEST) * clamp01(speed)


def cycles_for_speed(template: SchemeTemplate, speed: float) -> int:
    """Oscillation repetitions per loop; higher speed packs in extra keyframes."""
    return 1 + round_half_up(clamp01(speed) * template.max_extra_cycles)


def amplitude_for_entropy(base: float, entropy: float) -> float:
    """Scale a baseline extent by entropy; 0.5 reproduces the baseline exactly."""
    return base * (0.5 + clamp01(entropy))


def resolved_amplitudes(template: SchemeTemplate, layout: WordleLayout,
                        entropy: float) -> dict[str, float]:
    """Amplitude table in concrete units, before per-group jitter and clamping."""
    canvas = layout.canvas
    unit_scale = {
        AmplitudeUnit.PX: 1.0,
        AmplitudeUnit.DEGREES: 1.0,
        AmplitudeUnit.FACTOR: 1.0,
        AmplitudeUnit.CANVAS_DIAGONAL: canvas.diagonal,
        AmplitudeUnit.CANVAS_WIDTH: float(canvas.width),
        AmplitudeUnit.CANVAS_HEIGHT: float(canvas.height),
    }
    out = {}
    for name, decl in template.amplitudes.items():
        value = decl.base * unit_scale[decl.unit]
        if decl.entropy_scaled:
            value = amplitude_for_entropy(value, entropy)
        out[name] = value
    return out


@dataclass(frozen=True)
class _GroupParams:
    delay: float
    direction: tuple[float, float]
    amplitudes: dict[str, float]


def _draw_group_params(template: SchemeTemplate, layout: WordleLayout,
                       assignment: GroupAssignment, group: int,
                       entropy: float, seed: int,
                       base_amplitudes: dict[str, float]) -> _GroupParams:
    stream = SplitMix64(derive_seed(seed, "scheme", template.id, group))
    g = assignment.group_count

    delay = DELAY_CAP * group / g if template.has_delay else 0.0

    direction = (1.0, 0.0)
    if template.has_direction:
        u_jitter = stream.next_float()
        u_fallback = stream.next_float()
        members = assignment.members(group)
        mx = sum(layout.words[i].anchor[0] for i in members) / len(members)
        my = sum(layout.words[i].anchor[1] for i in members) / len(members)
        vx = mx - layout.canvas.width / 2.0
        vy = my - layout.canvas.height / 2.0
        if math.hypot(vx, vy) < 1e-6:
            angle = u_fallback * 2.0 * math.pi
        else:
            angle = math.atan2(vy, vx)
        angle += (2.0 * u_jitter - 1.0) * math.radians(DIRECTION_JITTER_DEG) * clamp01(entropy)
        direction = (math.cos(angle), math.sin(angle))

    amplitudes = dict(base_amplitudes)
    for name in sorted(template.amplitudes):
        if template.amplitudes[name].per_group:
            u = stream.next_float()
            amplitudes[name] *= AMPLITUDE_JITTER_FLOOR + (1.0 - AMPLITUDE_JITTER_FLOOR) * u
    return _GroupParams(delay=delay, direction=direction, amplitudes=amplitudes)


def _build_channel(spec: ChannelSpec, params: _GroupParams, cycles: int,
                   tail_hold: float) -> Channel:
    rest = REST_VALUE[spec.kind]
    start = params.delay
    end = 1.0 - tail_hold
    span = end - start

    def resolve(ks: KeyframeSpec) -> float:
        v = ks.expr.resolve(params.amplitudes)
        if spec.direction_axis == "x":
            v *= params.direction[0]
        elif spec.direction_axis == "y":
            v *= params.direction[1]
        return v

    kfs: list[Keyframe] = []
    if start > 0.0:
        kfs.append(Keyframe(0.0, rest, EasingKind.LINEAR))
    if spec.repeat is Repeat.CYCLE:
        seg = span / cycles
        for j in range(cycles):
            base = start + j * seg
            for m, ks in enumerate(spec.keyframes):
                if j > 0 and m == 0:
                    continue  # cycle seam: previous end doubles as this start
                easing = ks.easing
                if m == len(spec.keyframes) - 1 and j < cycles - 1:
                    easing = spec.keyframes[0].easing  # seam keyframe paces the next cycle
                kfs.append(Keyframe(min(base + ks.t * seg, 1.0), resolve(ks), easing))
    else:
        for ks in spec.keyframes:
            kfs.append(Keyframe(min(start + ks.t * span, 1.0), resolve(ks), ks.easing))
    return Channel(kind=spec.kind, keyframes=tuple(kfs))


def transformed_half_extents(hx: float, hy: float, scale: float,
                             rotation_deg: float) -> tuple[float, float]:
    """Axis-aligned half extents of a w x h box after scaling and rotation."""
    theta = abs(math.radians(rotation_deg))
    c, s = math.cos(theta), math.sin(theta)
    return scale * (hx * c + hy * s), scale * (hx * s + hy * c)


def _motion_scaled(timeline: Timeline, lam_x: float, lam_y: float,
                   lam_rs: float) -> Timeline:
    """Scale translation/rotation/scale offsets; style channels are untouched."""
    if lam_x == lam_y == lam_rs == 1.0:
        return timeline
    chans = []
    for ch in timeline.channels:
        if ch.kind is ChannelKind.TRANSLATE_X:
            kfs = tuple(replace(k, value=k.value * lam_x) for k in ch.keyframes)
        elif ch.kind is ChannelKind.TRANSLATE_Y:
            kfs = tuple(replace(k, value=k.value * lam_y) for k in ch.keyframes)
        elif ch.kind is ChannelKind.ROTATION:
            kfs = tuple(replace(k, value=k.value * lam_rs) for k in ch.keyframes)
        elif ch.kind is ChannelKind.SCALE:
            kfs = tuple(replace(k, value=1.0 + lam_rs * (k.value - 1.0)) for k in ch.keyframes)
        else:
            kfs = ch.keyframes
        chans.append(Channel(ch.kind, kfs))
    return Timeline(tuple(chans))


@dataclass(frozen=True)
class _MotionSamples:
    """Dense motion samples of a timeline over one loop, as numpy vectors."""

    tx: "np.ndarray"
    ty: "np.ndarray"
    rot: "np.ndarray"
    scale: "np.ndarray"


def _motion_samples(timeline: Timeline) -> _MotionSamples:
    times = sorted({k / _CLAMP_SAMPLES for k in range(_CLAMP_SAMPLES + 1)}
                   | {kf.t for ch in timeline.channels for kf in ch.keyframes})
    states = [sample_timeline(timeline, t) for t in times]
    return _MotionSamples(
        tx=np.array([abs(s.translate_x) for s in states]),
        ty=np.array([abs(s.translate_y) for s in states]),
        rot=np.array([abs(s.rotation) for s in states]),
        scale=np.array([s.scale for s in states]),
    )


def _solve_motion_scale(samples: _MotionSamples, hx: float, hy: float,
                        padding_factor: float) -> tuple[float, float, float]:
    """Largest motion factors (lam_x, lam_y, lam_rs) that keep the word's
    transformed ink box inside its padded layout box at every sample.

    Containment in disjoint padded boxes is what makes animated words
    provably collision-free at any sample time.  Channel interpolation is
    linear in keyframe values, so scaling a sampled state's offsets equals
    sampling the scaled timeline; that makes the search exact.

    Rotation and scale share one factor found by bisection; half of the
    padding margin is reserved for translation on axes that translate, and
    the translation factors then take whatever each sample leaves, in
    closed form.
    """
    slack = min(0.5, (padding_factor - 1.0) * min(hx, hy) / 4.0)
    budget_x = padding_factor * hx - slack
    budget_y = padding_factor * hy - slack
    has_tx = bool(np.any(samples.tx > 1e-12))
    has_ty = bool(np.any(samples.ty > 1e-12))
    has_rs = bool(np.any(samples.rot > 1e-12) or np.any(np.abs(samples.scale - 1.0) > 1e-12))

    reserve_x = 0.5 * (padding_factor - 1.0) * hx if has_tx else 0.0
    reserve_y = 0.5 * (padding_factor - 1.0) * hy if has_ty else 0.0

    def extents(lam_rs: float) -> tuple["np.ndarray", "np.ndarray"]:
        s = 1.0 + lam_rs * (samples.scale - 1.0)
        theta = np.radians(lam_rs * samples.rot)
        c, sn = np.cos(theta), np.sin(theta)
        return s * (hx * c + hy * sn), s * (hx * sn + hy * c)

    lam_rs = 1.0
    if has_rs:
        def fits(lam: float) -> bool:
            ex, ey = extents(lam)
            return bool(np.all(ex <= budget_x - reserve_x) and np.all(ey <= budget_y - reserve_y))

        if not fits(1.0):
            # fits(0) always holds (rest pose plus slack fits by construction),
            # so bisection brackets the largest admissible factor.
            lo, hi = 0.0, 1.0
            for _ in range(40):
                mid = (lo + hi) / 2.0
                if fits(mid):
                    lo = mid
                else:
                    hi = mid
            lam_rs = lo

    ex, ey = extents(lam_rs)
    lam_x = lam_y = 1.0
    if has_tx:
        avail = np.maximum(budget_x - ex, 0.0)
        active = samples.tx > 1e-12
        lam_x = float(min(1.0, np.min(avail[active] / samples.tx[active])))
    if has_ty:
        avail = np.maximum(budget_y - ey, 0.0)
        active = samples.ty > 1e-12
        lam_y = float(min(1.0, np.min(avail[active] / samples.ty[active])))
    return lam_x, lam_y, lam_rs


def instantiate_scheme(template: SchemeTemplate, layout: WordleLayout,
                       spec: EmordleSpec) -> AnimationDescriptor:
    """Resolve a scheme into per-word timelines under the spec's knobs."""
    if spec.scheme_id != template.id:
        raise UnknownScheme(f"spec targets scheme {spec.scheme_id!r}, template is {template.id!r}")
    n = len(layout.words)
    entropy, speed = spec.entropy, spec.speed

    g = group_count_for_entropy(template.strategy, n, entropy)
    if template.strategy is GroupingStrategy.RANDOM:
        assignment = group_random(n, g, spec.seed)
    else:
        assignment = group_positional(layout, g, spec.seed)

    duration = duration_for_speed(speed)
    cycles = cycles_for_speed(template, speed)
    base_amps = resolved_amplitudes(template, layout, entropy)

    group_timelines = []
    group_samples = []
    for r in range(g):
        p = _draw_group_params(template, layout, assignment, r, entropy, spec.seed, base_amps)
        timeline = Timeline(tuple(
            _build_channel(ch, p, cycles, template.tail_hold) for ch in template.channels
        ))
        group_timelines.append(timeline)
        group_samples.append(_motion_samples(timeline))

    words = []
    for i, word in enumerate(layout.words):
        r = assignment.group_of[i]
        hx, hy = word.ink_half_extents(layout.padding_factor)
        lam_x, lam_y, lam_rs = _solve_motion_scale(group_samples[r], hx, hy,
                                                   layout.padding_factor)
        words.append(_motion_scaled(group_timelines[r], lam_x, lam_y, lam_rs))

    return AnimationDescriptor(
        scheme_id=template.id,
        emotion_label=template.emotion_label,
        duration=duration,
        words=tuple(words),
        groups=assignment,
        entropy=entropy,
        speed=speed,
        seed=spec.seed,
    )


# ---- built-in templates -------------------------------------------------
# One tuning table per scheme; bases are design constants, re-tunable here
# or by editing the matching .scheme asset.

_E = EasingKind
_K = ChannelKind


def _kf(t: float, expr: ValueExpr, easing: EasingKind) -> KeyframeSpec:
    return KeyframeSpec(t=t, expr=expr, easing=easing)


def _amp(coef_amp: str, coef: float = 1.0) -> ValueExpr:
    return ValueExpr(const=0.0, coef=coef, amp=coef_amp)


def _const(v: float) -> ValueExpr:
    return ValueExpr(const=v)


DANCE = SchemeTemplate(
    id="dance",
    emotion_label="happiness",
    strategy=GroupingStrategy.POSITIONAL,
    max_extra_cycles=2,
    has_delay=False,
    has_direction=True,
    amplitudes={
        "distance": AmplitudeDecl(0.06, AmplitudeUnit.CANVAS_DIAGONAL, entropy_scaled=True, per_group=True),
        "rotation": AmplitudeDecl(8.0, AmplitudeUnit.DEGREES, entropy_scaled=True, per_group=True),
    },
    channels=(
        ChannelSpec(_K.TRANSLATE_X, Repeat.CYCLE, direction_axis="x", keyframes=(
            _kf(0.0, _const(0.0), _E.SLOW_IN_OUT),
            _kf(0.5, _amp("distance"), _E.SLOW_IN_OUT),
            _kf(1.0, _const(0.0), _E.SLOW_IN_OUT),
        )),
        ChannelSpec(_K.TRANSLATE_Y, Repeat.CYCLE, direction_axis="y", keyframes=(
            _kf(0.0, _const(0.0), _E.SLOW_IN_OUT),
            _kf(0.5, _amp("distance"), _E.SLOW_IN_OUT),
            _kf(1.0, _const(0.0), _E.SLOW_IN_OUT),
        )),
        ChannelSpec(_K.ROTATION, Repeat.CYCLE, keyframes=(
            _kf(0.0, _const(0.0), _E.SLOW_IN_OUT),
            _kf(0.25, _amp("rotation"), _E.SLOW_IN_OUT),
            _kf(0.75, _amp("rotation", -1.0), _E.SLOW_IN_OUT),
            _kf(1.0, _const(0.0), _E.SLOW_IN_OUT),
        )),
    ),
)

FADE = SchemeTemplate(
    id="fade",
    emotion_label="sadness",
    strategy=GroupingStrategy.RANDOM,
    max_extra_cycles=0,
    has_delay=True,
    has_direction=False,
    tail_hold=0.1,
    amplitudes={
        "drop": AmplitudeDecl(0.05, AmplitudeUnit.CANVAS_HEIGHT, entropy_scaled=True),
        "haze": AmplitudeDecl(4.0, AmplitudeUnit.PX),
    },
    channels=(
        ChannelSpec(_K.COLOR_SHIFT, Repeat.ONCE, keyframes=(
            _kf(0.0, _const(0.0), _E.SLOW_OUT),
            _kf(1.0, _const(1.0), _E.LINEAR),
        )),
        ChannelSpec(_K.TRANSLATE_Y, Repeat.ONCE, keyframes=(
            _kf(0.0, _const(0.0), _E.SLOW_OUT),
            _kf(1.0, _amp("drop"), _E.LINEAR),
        )),
        ChannelSpec(_K.BLUR, Repeat.ONCE, keyframes=(
            _kf(0.0, _const(0.0), _E.SLOW_OUT),
            _kf(1.0, _amp("haze"), _E.LINEAR),
        )),
        ChannelSpec(_K.OPACITY, Repeat.ONCE, keyframes=(
            _kf(0.0, _const(1.0), _E.SLOW_OUT),
            _kf(1.0, _const(0.0), _E.LINEAR),
        )),
    ),
)

EXPLOSION = SchemeTemplate(
    id="explosion",
    emotion_label="anger",
    strategy=GroupingStrategy.POSITIONAL,
    max_extra_cycles=1,
    has_delay=True,
    has_direction=True,
    amplitudes={
        "distance": AmplitudeDecl(0.12, AmplitudeUnit.CANVAS_DIAGONAL, entropy_scaled=True, per_group=True),
        "burst": AmplitudeDecl(0.4, AmplitudeUnit.FACTOR),
    },
    channels=(
        ChannelSpec(_K.SCALE, Repeat.CYCLE, keyframes=(
            _kf(0.0, _const(1.0), _E.BUMP),
            _kf(0.45, ValueExpr(const=1.0, coef=1.0, amp="burst"), _E.SLOW_IN_OUT),
            _kf(1.0, _const(1.0), _E.LINEAR),
        )),
        ChannelSpec(_K.TRANSLATE_X, Repeat.CYCLE, direction_axis="x", keyframes=(
            _kf(0.0, _const(0.0), _E.BUMP),
            _kf(0.45, _amp("distance"), _E.SLOW_IN_OUT),
            _kf(1.0, _const(0.0), _E.LINEAR),
        )),
        ChannelSpec(_K.TRANSLATE_Y, Repeat.CYCLE, direction_axis="y", keyframes=(
            _kf(0.0, _const(0.0), _E.BUMP),
            _kf(0.45, _amp("distance"), _E.SLOW_IN_OUT),
            _kf(1.0, _const(0.0), _E.LINEAR),
        )),
    ),
)

SHIVER = SchemeTemplate(
    id="shiver",
    emotion_label="fear",
    strategy=GroupingStrategy.RANDOM,
    max_extra_cycles=4,
    has_delay=True,
    has_direction=False,
    amplitudes={
        "rotation": AmplitudeDecl(4.0, AmplitudeUnit.DEGREES, entropy_scaled=True, per_group=True),
        "drop": AmplitudeDecl(0.03, AmplitudeUnit.CANVAS_HEIGHT, entropy_scaled=True, per_group=True),
    },
    channels=(
        ChannelSpec(_K.ROTATION, Repeat.CYCLE, keyframes=(
            _kf(0.0, _const(0.0), _E.FAST_IN_OUT),
            _kf(0.25, _amp("rotation"), _E.FAST_IN_OUT),
            _kf(0.75, _amp("rotation", -1.0), _E.FAST_IN_OUT),
            _kf(1.0, _const(0.0), _E.FAST_IN_OUT),
        )),
        ChannelSpec(_K.TRANSLATE_Y, Repeat.ONCE, keyframes=(
            _kf(0.0, _const(0.0), _E.SLOW_IN),
            _kf(0.85, _amp("drop"), _E.SLOW_IN_OUT),
            _kf(1.0, _const(0.0), _E.LINEAR),
        )),
    ),
)

BUILTIN_SCHEMES = (DANCE, FADE, EXPLOSION, SHIVER)


class SchemeRegistry:
    """Holds the four built-ins plus any user-loaded scheme files, in load order."""

    def __init__(self, include_builtins: bool = True):
        self._templates: dict[str, SchemeTemplate] = {}
        if include_builtins:
            for tpl in BUILTIN_SCHEMES:
                self._templates[tpl.id] = tpl

    def add(self, template: SchemeTemplate) -> None:
        self._templates[template.id] = template

    def load_scheme_text(self, text: str) -> SchemeTemplate:
        from .schemefile import parse_scheme_file
        template = parse_scheme_file(text)
        self.add(template)
        return template

    def get(self, scheme_id: str) -> SchemeTemplate:
        try:
            return self._templates[scheme_id]
        except KeyError:
            known = ", ".join(self._templates)
            raise UnknownScheme(f"unknown scheme {scheme_id!r} (known: {known})") from None

    def list_schemes(self) -> list[dict[str, str]]:
        return [{"id": t.id, "emotion_label": t.emotion_label, "strategy": t.strategy.value}
                for t in self._templates.values()]

    def instantiate(self, layout: WordleLayout, spec: EmordleSpec) -> AnimationDescriptor:
        return instantiate_scheme(self.get(spec.scheme_id), layout, spec)
