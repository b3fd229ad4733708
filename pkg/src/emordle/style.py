"""Palettes, typeface/fps render style, and perceptual color interpolation.

The ``color_shift`` channel is a scalar in [0, 1] that moves a word's rest
color toward the palette's shift target.  Interpolation happens in CIELAB
(D65 white point) so "toward a darker hue" reads as a perceptually even
darkening rather than an RGB crossfade.

The ``mono`` palette reproduces the controlled-study look: black text on
white, shift target black (a no-op), which also keeps every rendered frame
on the 256-level gray axis and therefore losslessly GIF-quantizable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .util import clamp01, round_half_up

RGB = tuple[int, int, int]


@dataclass(frozen=True)
class Palette:
    id: str
    background: RGB
    ramp: tuple[RGB, ...]          # word colors, cycled by weight rank
    shift_target: RGB              # color_shift = 1 lands here

    def word_color(self, rank: int) -> RGB:
        return self.ramp[rank % len(self.ramp)]


def _rgb(hexcode: str) -> RGB:
    h = hexcode.lstrip("#")
    return int(h[0:2], 16), int(h[2:4], 16), int(h[4:6], 16)


PALETTES: dict[str, Palette] = {
    p.id: p for p in (
        Palette("mono", _rgb("#FFFFFF"), (_rgb("#000000"),), _rgb("#000000")),
        Palette("happiness", _rgb("#FFF8E8"),
                (_rgb("#F5A623"), _rgb("#FC6E22"), _rgb("#E8B61A"), _rgb("#F08C00")),
                _rgb("#8A4B00")),
        Palette("sadness", _rgb("#EDF1F5"),
                (_rgb("#3A6EA5"), _rgb("#5C88B8"), _rgb("#7FA6CB"), _rgb("#50749B")),
                _rgb("#16293F")),
        Palette("anger", _rgb("#FFF2EC"),
                (_rgb("#C0392B"), _rgb("#E74C3C"), _rgb("#962D22"), _rgb("#D35400")),
                _rgb("#470D06")),
        Palette("fear", _rgb("#ECE9F1"),
                (_rgb("#4A3F66"), _rgb("#6C5B7B"), _rgb("#35304A"), _rgb("#55446E")),
                _rgb("#120E1D")),
    )
}


def list_palettes() -> list[str]:
    return list(PALETTES)


def get_palette(palette_id: str) -> Palette:
    try:
        return PALETTES[palette_id]
    except KeyError:
        raise ValueError(f"unknown palette id: {palette_id!r} (available: {', '.join(PALETTES)})") from None


@dataclass(frozen=True)
class RenderStyle:
    palette: Palette = field(default_factory=lambda: PALETTES["mono"])
    typeface: str = "default"
    fps: int = 20

    def __post_init__(self):
        if not 5 <= self.fps <= 30:
            raise ValueError(f"fps must lie in [5, 30], got {self.fps}")


# ---- sRGB <-> CIELAB (D65, 2 degree observer) ----

_XN, _YN, _ZN = 0.95047, 1.0, 1.08883


def _srgb_to_linear(c: float) -> float:
    return c / 12.92 if c <= 0.04045 else ((c + 0.055) / 1.055) ** 2.4


def _linear_to_srgb(c: float) -> float:
    return 12.92 * c if c <= 0.0031308 else 1.055 * c ** (1.0 / 2.4) - 0.055


def _f(t: float) -> float:
    return t ** (1.0 / 3.0) if t > (6.0 / 29.0) ** 3 else t / (3 * (6.0 / 29.0) ** 2) + 4.0 / 29.0


def _f_inv(t: float) -> float:
    return t ** 3 if t > 6.0 / 29.0 else 3 * (6.0 / 29.0) ** 2 * (t - 4.0 / 29.0)


def srgb_to_lab(rgb: RGB) -> tuple[float, float, float]:
    r, g, b = (_srgb_to_linear(c / 255.0) for c in rgb)
    x = 0.4124564 * r + 0.3575761 * g + 0.1804375 * b
    y = 0.2126729 * r + 0.7151522 * g + 0.0721750 * b
    z = 0.0193339 * r + 0.1191920 * g + 0.9503041 * b
    fx, fy, fz = _f(x / _XN), _f(y / _YN), _f(z / _ZN)
    return 116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)


def lab_to_srgb(lab: tuple[float, float, float]) -> RGB:
    L, a, b = lab
    fy = (L + 16.0) / 116.0
    fx = fy + a / 500.0
    fz = fy - b / 200.0
    x, y, z = _f_inv(fx) * _XN, _f_inv(fy) * _YN, _f_inv(fz) * _ZN
    r = 3.2404542 * x - 1.5371385 * y - 0.4985314 * z
    g = -0.9692660 * x + 1.8760108 * y + 0.0415560 * z
    bb = 0.0556434 * x - 0.2040259 * y + 1.0572252 * z
    out = []
    for c in (r, g, bb):
        v = _linear_to_srgb(min(max(c, 0.0), 1.0))
        out.append(min(255, max(0, round_half_up(v * 255.0))))
    return out[0], out[1], out[2]


def shift_color(rest: RGB, target: RGB, amount: float) -> RGB:
    """Move ``rest`` toward ``target`` by ``amount`` in Lab space."""
    s = clamp01(amount)
    if s == 0.0:
        return rest
    if s == 1.0:
        return target
    la = srgb_to_lab(rest)
    lb = srgb_to_lab(target)
    mixed = tuple(a + s * (b - a) for a, b in zip(la, lb))
    return lab_to_srgb(mixed)  # type: ignore[arg-type]
