"""Animated GIF encoding with a global median-cut palette.

The encoder owns everything the format contract cares about: the GIF89a
container (header, logical screen, global color table, NETSCAPE infinite
loop block, per-frame graphic control with the centisecond delay) and the
quantization (global 256-color median-cut palette with deterministic
tie-breaking, nearest-color mapping without dithering).  Only the LZW
bitstream of each frame's index array is produced by Pillow's encoder,
via its documented ``getdata`` helper.

Determinism: color boxes split on the widest channel (ties toward red),
split points are weighted medians over colors sorted by packed RGB value,
representatives are weighted means rounded half up, and the final palette
is sorted by packed value, so identical frames always produce identical
bytes.  If the frames use at most 256 distinct colors the palette is exact
and quantization is lossless.
"""

from __future__ import annotations

import struct
from typing import Sequence

import numpy as np
from PIL import Image, GifImagePlugin

from .errors import DimensionMismatch
from .render import RasterImage
from .util import round_half_up

MAX_COLORS = 256


def _frame_rgb(frame: RasterImage) -> np.ndarray:
    arr = np.frombuffer(frame.pixels, dtype=np.uint8).reshape(frame.height, frame.width, 4)
    return arr[:, :, :3]


def _packed(rgb: np.ndarray) -> np.ndarray:
    p = rgb.reshape(-1, 3).astype(np.uint32)
    return (p[:, 0] << 16) | (p[:, 1] << 8) | p[:, 2]


def _unpack(packed: np.ndarray) -> np.ndarray:
    return np.stack([(packed >> 16) & 0xFF, (packed >> 8) & 0xFF, packed & 0xFF],
                    axis=1).astype(np.uint8)


def median_cut_palette(colors: np.ndarray, counts: np.ndarray,
                       max_colors: int = MAX_COLORS) -> np.ndarray:
    """Median-cut over (unique colors, pixel counts); returns <= max_colors RGB rows.

    Boxes are kept in creation order; each step splits the box with the
    largest channel span (ties: earlier box, then lower channel index) at
    the count-weighted median of that channel.
    """
    if len(colors) <= max_colors:
        return colors.copy()

    order = np.argsort(_packed(colors), kind="stable")
    colors = colors[order]
    counts = counts[order]

    boxes: list[tuple[np.ndarray, np.ndarray]] = [(colors, counts)]
    while len(boxes) < max_colors:
        best_box, best_span, best_chan = -1, -1, 0
        for bi, (cols, _) in enumerate(boxes):
            if len(cols) < 2:
                continue
            spans = cols.max(axis=0).astype(int) - cols.min(axis=0).astype(int)
            chan = int(np.argmax(spans))           # argmax: lowest channel on ties
            if int(spans[chan]) > best_span:
                best_span, best_box, best_chan = int(spans[chan]), bi, chan
        if best_box < 0:
            break
        cols, cnts = boxes[best_box]
        key = np.argsort(cols[:, best_chan], kind="stable")
        cols, cnts = cols[key], cnts[key]
        cum = np.cumsum(cnts)
        half = cum[-1] / 2.0
        split = int(np.searchsorted(cum, half, side="left")) + 1
        split = max(1, min(split, len(cols) - 1))
        boxes[best_box] = (cols[:split], cnts[:split])
        boxes.append((cols[split:], cnts[split:]))

    reps = []
    for cols, cnts in boxes:
        total = int(cnts.sum())
        sums = (cols.astype(np.uint64) * cnts[:, None].astype(np.uint64)).sum(axis=0)
        reps.append([round_half_up(int(s) / total) for s in sums])
    # np.unique sorts rows lexicographically, the canonical palette order,
    # and merges boxes that landed on one representative.
    return np.unique(np.asarray(reps, dtype=np.uint8), axis=0)


_GRAY_PACK = np.arange(256, dtype=np.uint32) * 0x010101


def _quantize(frames: Sequence[RasterImage]) -> tuple[np.ndarray, list[np.ndarray]]:
    """Global palette plus one uint8 index array per frame."""
    color_counts: dict[int, int] = {}
    frame_uniques: list[np.ndarray] = []
    frame_inverse: list[np.ndarray] = []
    for frame in frames:
        rgb = _frame_rgb(frame)
        flat = rgb.reshape(-1, 3)
        if np.array_equal(flat[:, 0], flat[:, 1]) and np.array_equal(flat[:, 1], flat[:, 2]):
            # Grayscale frame: 256 possible colors, count via bincount.
            gray = flat[:, 0]
            cnt = np.bincount(gray, minlength=256)
            present = np.nonzero(cnt)[0]
            uniq = _GRAY_PACK[present]
            remap = np.zeros(256, dtype=np.int64)
            remap[present] = np.arange(len(present))
            inv = remap[gray]
        else:
            uniq, inv, cnt_nz = np.unique(_packed(rgb), return_inverse=True,
                                          return_counts=True)
            cnt = cnt_nz
            present = None
        counts = cnt[present] if present is not None else cnt
        frame_uniques.append(uniq)
        frame_inverse.append(inv)
        for u, c in zip(uniq.tolist(), counts.tolist()):
            color_counts[u] = color_counts.get(u, 0) + c

    uniq_packed = np.array(sorted(color_counts), dtype=np.uint32)
    uniq_counts = np.array([color_counts[u] for u in uniq_packed.tolist()], dtype=np.int64)
    palette = median_cut_palette(_unpack(uniq_packed), uniq_counts)

    # Nearest palette entry per distinct color (ties: lowest palette index).
    pal32 = palette.astype(np.int32)
    uniq_rgb = _unpack(uniq_packed).astype(np.int32)
    lut = np.empty(len(uniq_rgb), dtype=np.uint8)
    chunk = 65536
    for lo in range(0, len(uniq_rgb), chunk):
        block = uniq_rgb[lo:lo + chunk]
        d = block[:, None, :] - pal32[None, :, :]
        dist = (d * d).sum(axis=2)
        lut[lo:lo + chunk] = np.argmin(dist, axis=1).astype(np.uint8)

    index_frames = []
    for uniq, inv in zip(frame_uniques, frame_inverse):
        local_lut = lut[np.searchsorted(uniq_packed, uniq)]
        index_frames.append(local_lut[inv])
    return palette, index_frames


def _color_table(palette: np.ndarray) -> tuple[bytes, int]:
    """Pad the palette to a power-of-two table; returns (bytes, size_field)."""
    n = len(palette)
    size_field = 0
    while (2 << size_field) < n:
        size_field += 1
    table = np.zeros((2 << size_field, 3), dtype=np.uint8)
    table[:n] = palette
    return table.tobytes(), size_field


def _lzw_image_data(indices: np.ndarray, width: int, height: int,
                    palette_bytes: bytes) -> bytes:
    image = Image.frombytes("P", (width, height), indices.tobytes())
    image.putpalette(palette_bytes)
    # getdata yields the image descriptor followed by LZW-compressed blocks.
    return b"".join(GifImagePlugin.getdata(image))


def encode_gif(frames: Sequence[RasterImage], fps: int) -> bytes:
    """Encode frames as an infinitely looping GIF89a at the given frame rate."""
    if not frames:
        raise ValueError("need at least one frame")
    width, height = frames[0].width, frames[0].height
    for i, frame in enumerate(frames):
        if (frame.width, frame.height) != (width, height):
            raise DimensionMismatch(
                f"frame {i} is {frame.width}x{frame.height}, expected {width}x{height}")
    if fps <= 0:
        raise ValueError("fps must be positive")
    delay_cs = max(1, round_half_up(100.0 / fps))

    palette, index_frames = _quantize(frames)
    table, size_field = _color_table(palette)

    out = bytearray()
    out += b"GIF89a"
    # Logical screen descriptor: global color table, 8 bits/channel, bg index 0.
    out += struct.pack("<HHBBB", width, height, 0x80 | (0x70) | size_field, 0, 0)
    out += table
    # NETSCAPE2.0 looping block, loop count 0 = forever.
    out += b"\x21\xFF\x0BNETSCAPE2.0\x03\x01\x00\x00\x00"
    for indices in index_frames:
        # Graphic control: no transparency, no disposal, delay in centiseconds.
        out += struct.pack("<BBBBHBB", 0x21, 0xF9, 4, 0, delay_cs, 0, 0)
        out += _lzw_image_data(indices, width, height, table)
    out += b"\x3B"
    return bytes(out)
