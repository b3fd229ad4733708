"""Rasterize descriptor frames: text with rotation, scale, opacity, color, blur.

Each word renders once into a grayscale ink mask at its rest size; per frame
the mask is resized (scale), rotated about its center (the word anchor),
blurred, faded, and composited in the palette color at anchor + translation.
``render_frame`` is pure, so frames can be rendered on any number of worker
threads in any order; ``render_animation`` does exactly that and reassembles
by index.

Pixel output is deterministic on a given platform.  Cross-platform
equivalence is asserted at the descriptor level instead (font rasterizers
differ between systems).
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from PIL import Image, ImageDraw, ImageFilter

from .animation import PropertyState, REST_STATE, sample_timeline
from .errors import DomainError
from .layout import PlacedWord, WordleLayout
from .schemes import AnimationDescriptor
from .style import RenderStyle, shift_color
from .textmetrics import ensure_glyphs, ink_extents, load_font
from .util import round_half_up

MAX_BLUR_RADIUS = 8.0


@dataclass(frozen=True)
class RasterImage:
    """Row-major RGBA pixel buffer."""

    width: int
    height: int
    pixels: bytes

    def __post_init__(self):
        if len(self.pixels) != 4 * self.width * self.height:
            raise ValueError("pixel buffer size does not match dimensions")

    def to_pil(self) -> Image.Image:
        return Image.frombytes("RGBA", (self.width, self.height), self.pixels)

    @classmethod
    def from_pil(cls, image: Image.Image) -> "RasterImage":
        if image.mode != "RGBA":
            image = image.convert("RGBA")
        return cls(image.width, image.height, image.tobytes())


class _WordSprite:
    """Cached rest-pose ink mask for one placed word."""

    __slots__ = ("mask", "rest_color", "rank")

    def __init__(self, word: PlacedWord, typeface: str, rank: int):
        ensure_glyphs(word.entry.text, typeface)
        x0, y0, x1, y1 = ink_extents(word.entry.text, typeface, word.font_size)
        mask = Image.new("L", (x1 - x0, y1 - y0), 0)
        draw = ImageDraw.Draw(mask)
        draw.text((-x0, -y0), word.entry.text, font=load_font(typeface, word.font_size), fill=255)
        self.mask = mask
        self.rank = rank


def _weight_ranks(layout: WordleLayout) -> list[int]:
    order = sorted(range(len(layout.words)),
                   key=lambda i: (-layout.words[i].entry.weight, i))
    ranks = [0] * len(order)
    for rank, idx in enumerate(order):
        ranks[idx] = rank
    return ranks


def _build_sprites(layout: WordleLayout, style: RenderStyle) -> list[_WordSprite]:
    ranks = _weight_ranks(layout)
    return [_WordSprite(w, style.typeface, ranks[i]) for i, w in enumerate(layout.words)]


def _opacity_lut(opacity: float) -> list[int]:
    o = min(max(opacity, 0.0), 1.0)
    return [min(255, round_half_up(a * o)) for a in range(256)]


def _compose_word(canvas: Image.Image, sprite: _WordSprite, word: PlacedWord,
                  state: PropertyState, style: RenderStyle) -> None:
    if state.opacity <= 0.0:
        return
    mask = sprite.mask
    if abs(state.scale - 1.0) > 1e-9:
        if state.scale <= 0.0:
            return
        w = max(1, round_half_up(mask.width * state.scale))
        h = max(1, round_half_up(mask.height * state.scale))
        mask = mask.resize((w, h), Image.Resampling.BILINEAR)
    if abs(state.rotation) > 1e-9:
        mask = mask.rotate(state.rotation, resample=Image.Resampling.BILINEAR, expand=True)
    blur = min(max(state.blur, 0.0), MAX_BLUR_RADIUS)
    if blur > 1e-9:
        pad = math.ceil(3.0 * blur)
        padded = Image.new("L", (mask.width + 2 * pad, mask.height + 2 * pad), 0)
        padded.paste(mask, (pad, pad))
        mask = padded.filter(ImageFilter.GaussianBlur(blur))
    if state.opacity < 1.0:
        mask = mask.point(_opacity_lut(state.opacity))

    color = style.palette.word_color(sprite.rank)
    if state.color_shift > 0.0:
        color = shift_color(color, style.palette.shift_target, state.color_shift)

    cx = word.anchor[0] + state.translate_x
    cy = word.anchor[1] + state.translate_y
    left = round_half_up(cx - mask.width / 2.0)
    top = round_half_up(cy - mask.height / 2.0)

    tile = Image.new("RGBA", mask.size, color + (0,))
    tile.putalpha(mask)

    # Crop to the canvas if blur halo or rotation expansion pokes past the edge.
    sx0, sy0 = max(0, -left), max(0, -top)
    sx1 = min(mask.width, canvas.width - left)
    sy1 = min(mask.height, canvas.height - top)
    if sx1 <= sx0 or sy1 <= sy0:
        return
    if (sx0, sy0, sx1, sy1) != (0, 0, mask.width, mask.height):
        tile = tile.crop((sx0, sy0, sx1, sy1))
        left, top = max(0, left), max(0, top)
    canvas.alpha_composite(tile, (left, top))


def _render(layout: WordleLayout, states: list[PropertyState],
            sprites: list[_WordSprite], style: RenderStyle) -> RasterImage:
    canvas = Image.new("RGBA", (layout.canvas.width, layout.canvas.height),
                       style.palette.background + (255,))
    for sprite, word, state in zip(sprites, layout.words, states):
        _compose_word(canvas, sprite, word, state, style)
    return RasterImage.from_pil(canvas)


def render_static(layout: WordleLayout, style: RenderStyle) -> RasterImage:
    """The word cloud at rest; equals frame 0 of every scheme."""
    sprites = _build_sprites(layout, style)
    return _render(layout, [REST_STATE] * len(layout.words), sprites, style)


def render_frame(desc: AnimationDescriptor, layout: WordleLayout, t: float,
                 style: RenderStyle) -> RasterImage:
    """Render the frame at normalized loop time t in [0, 1)."""
    if not 0.0 <= t < 1.0:
        raise DomainError(f"frame time must lie in [0, 1), got {t}")
    if len(desc.words) != len(layout.words):
        raise ValueError("descriptor and layout word counts disagree")
    sprites = _build_sprites(layout, style)
    states = [sample_timeline(tl, t) for tl in desc.words]
    return _render(layout, states, sprites, style)


def frame_count_for(duration: float, fps: int) -> int:
    return round_half_up(duration * fps)


def render_animation(desc: AnimationDescriptor, layout: WordleLayout,
                     style: RenderStyle, workers: int | None = None) -> list[RasterImage]:
    """All frames of one loop; frame i sampled at t = i / frame_count.

    Frames are rendered on a thread pool; the result is indistinguishable
    from sequential rendering because every frame is a pure function.
    """
    if len(desc.words) != len(layout.words):
        raise ValueError("descriptor and layout word counts disagree")
    n_frames = frame_count_for(desc.duration, style.fps)
    sprites = _build_sprites(layout, style)

    def one(i: int) -> RasterImage:
        states = [sample_timeline(tl, i / n_frames) for tl in desc.words]
        return _render(layout, states, sprites, style)

    if workers == 1 or n_frames == 1:
        return [one(i) for i in range(n_frames)]
    with ThreadPoolExecutor(max_workers=workers or 4) as pool:
        return list(pool.map(one, range(n_frames)))
