"""Typeface registry and measured glyph extents.

Fonts ship inside the package so rendering is hermetic: the same input
produces the same pixels on a given platform regardless of what the host
system has installed.  Extra faces can be dropped into a directory named by
the ``EMORDLE_FONT_DIR`` environment variable; the file stem becomes the
typeface id.

Word bounding boxes come from the rasterizer's own ink extents
(``FreeTypeFont.getbbox``), not from height-times-width approximations, so
the layout's non-overlap guarantee holds for actual rendered pixels.
"""

from __future__ import annotations

import functools
import os
from importlib import resources

from fontTools.ttLib import TTFont
from PIL import ImageFont

from .errors import FontLoadError, MissingGlyph

BUILTIN_FONTS = {
    "default": "DejaVuSans.ttf",
    "bold": "DejaVuSans-Bold.ttf",
    "serif": "DejaVuSerif.ttf",
    "mono": "DejaVuSansMono.ttf",
    "oblique": "DejaVuSans-Oblique.ttf",
}


def _font_dir_override() -> str | None:
    return os.environ.get("EMORDLE_FONT_DIR") or None


def list_fonts() -> list[str]:
    """Available typeface ids: built-ins first, then EMORDLE_FONT_DIR stems."""
    ids = list(BUILTIN_FONTS)
    override = _font_dir_override()
    if override and os.path.isdir(override):
        for name in sorted(os.listdir(override)):
            if name.lower().endswith((".ttf", ".otf")):
                stem = os.path.splitext(name)[0]
                if stem not in ids:
                    ids.append(stem)
    return ids


def resolve_font_path(typeface: str) -> str:
    """Map a typeface id to a font file path."""
    override = _font_dir_override()
    if override:
        for ext in (".ttf", ".otf"):
            candidate = os.path.join(override, typeface + ext)
            if os.path.isfile(candidate):
                return candidate
    if typeface in BUILTIN_FONTS:
        ref = resources.files("emordle.assets.fonts") / BUILTIN_FONTS[typeface]
        with resources.as_file(ref) as path:
            return str(path)
    raise FontLoadError(f"unknown typeface id: {typeface!r} (available: {', '.join(list_fonts())})")


@functools.lru_cache(maxsize=256)
def load_font(typeface: str, size: int) -> ImageFont.FreeTypeFont:
    path = resolve_font_path(typeface)
    try:
        return ImageFont.truetype(path, size=size)
    except OSError as exc:
        raise FontLoadError(f"cannot load font file {path!r}: {exc}") from exc


@functools.lru_cache(maxsize=32)
def _codepoint_coverage(typeface: str) -> frozenset[int]:
    path = resolve_font_path(typeface)
    try:
        with TTFont(path, lazy=True) as tt:
            cmap = tt.getBestCmap()
    except Exception as exc:
        raise FontLoadError(f"cannot read cmap of {path!r}: {exc}") from exc
    return frozenset(cmap)


def ensure_glyphs(text: str, typeface: str) -> None:
    """Raise :class:`MissingGlyph` if any character lacks a glyph."""
    coverage = _codepoint_coverage(typeface)
    for ch in text:
        if ord(ch) not in coverage:
            raise MissingGlyph(text, ch)


def ink_extents(text: str, typeface: str, size: int) -> tuple[int, int, int, int]:
    """Ink bounding box (x0, y0, x1, y1) of ``text`` relative to the draw origin.

    Width and height of the rendered word are ``x1 - x0`` and ``y1 - y0``.
    """
    font = load_font(typeface, size)
    x0, y0, x1, y1 = font.getbbox(text)
    if x1 <= x0 or y1 <= y0:
        # Degenerate ink (should not happen for non-empty trimmed text).
        x1, y1 = x0 + 1, y0 + 1
    return int(x0), int(y0), int(x1), int(y1)
