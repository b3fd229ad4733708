import io

import numpy as np
import pytest
from PIL import Image

import emordle as em
from emordle.errors import DimensionMismatch
from emordle.gif import encode_gif, median_cut_palette
from emordle.render import RasterImage
from emordle.schemes import EmordleSpec

from .oracles import parse_gif_structure


def _solid(rgb, w=40, h=30):
    return RasterImage(w, h, bytes(rgb + (255,)) * (w * h))


def test_magic_and_structure():
    gif = encode_gif([_solid((10, 20, 30))], fps=10)
    assert gif[:6] == b"GIF89a"
    info = parse_gif_structure(gif)
    assert info["frames"] == 1
    assert info["loop_count"] == 0
    assert info["local_tables"] == 0
    assert info["gct_size"] >= 2


def test_delays_match_fps():
    for fps, cs in ((20, 5), (10, 10), (30, 3), (5, 20)):
        gif = encode_gif([_solid((1, 2, 3)), _solid((4, 5, 6))], fps=fps)
        info = parse_gif_structure(gif)
        assert info["delays_cs"] == [cs, cs], fps


def test_single_solid_frame_lossless():
    color = (137, 201, 77)
    gif = encode_gif([_solid(color)], fps=10)
    decoded = Image.open(io.BytesIO(gif)).convert("RGB")
    assert decoded.getpixel((3, 3)) == color


def test_under_256_colors_lossless():
    rng = np.random.default_rng(5)
    colors = rng.integers(0, 256, size=(50, 3), dtype=np.uint8)
    px = colors[rng.integers(0, 50, size=40 * 30)].reshape(30, 40, 3)
    rgba = np.dstack([px, np.full((30, 40), 255, np.uint8)])
    frame = RasterImage(40, 30, rgba.tobytes())
    gif = encode_gif([frame], fps=10)
    decoded = np.asarray(Image.open(io.BytesIO(gif)).convert("RGB"))
    assert np.array_equal(decoded, px)


def test_decoded_frame_count_matches_input(registry, lorem_layout):
    desc = registry.instantiate(lorem_layout, EmordleSpec("dance", speed=1.0, seed=3))
    style = em.RenderStyle(fps=10)
    frames = em.render_animation(desc, lorem_layout, style)
    gif = encode_gif(frames, style.fps)

    info = parse_gif_structure(gif)
    assert info["frames"] == len(frames)

    pil = Image.open(io.BytesIO(gif))
    assert pil.n_frames == len(frames)
    assert pil.info.get("loop") == 0


def test_identical_consecutive_frames_not_merged():
    frames = [_solid((9, 9, 9))] * 4
    gif = encode_gif(frames, fps=10)
    assert parse_gif_structure(gif)["frames"] == 4


def test_decoded_pixels_match_quantized_indices():
    rng = np.random.default_rng(11)
    frames = []
    for _ in range(3):
        px = rng.integers(0, 256, size=(20, 20, 3), dtype=np.uint8)
        rgba = np.dstack([px, np.full((20, 20), 255, np.uint8)])
        frames.append(RasterImage(20, 20, rgba.tobytes()))
    gif = encode_gif(frames, fps=10)
    pil = Image.open(io.BytesIO(gif))
    for i, frame in enumerate(frames):
        pil.seek(i)
        decoded = np.asarray(pil.convert("RGB")).astype(int)
        original = np.frombuffer(frame.pixels, np.uint8).reshape(20, 20, 4)[:, :, :3].astype(int)
        # lossy (way more than 256 colors), but quantization error is bounded
        assert np.abs(decoded - original).max() <= 96


def test_deterministic_bytes():
    rng = np.random.default_rng(3)
    px = rng.integers(0, 256, size=(25, 25, 3), dtype=np.uint8)
    rgba = np.dstack([px, np.full((25, 25), 255, np.uint8)])
    frames = [RasterImage(25, 25, rgba.tobytes())]
    assert encode_gif(frames, fps=12) == encode_gif(frames, fps=12)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        encode_gif([_solid((0, 0, 0), 40, 30), _solid((0, 0, 0), 41, 30)], fps=10)


def test_empty_frames_rejected():
    with pytest.raises(ValueError):
        encode_gif([], fps=10)


def test_median_cut_exact_when_few_colors():
    colors = np.array([[0, 0, 0], [255, 255, 255], [10, 200, 30]], np.uint8)
    counts = np.array([5, 3, 1], np.int64)
    pal = median_cut_palette(colors, counts)
    assert sorted(map(tuple, pal)) == sorted(map(tuple, colors))


def test_median_cut_respects_limit_and_is_deterministic():
    rng = np.random.default_rng(2)
    colors = np.unique(rng.integers(0, 256, size=(5000, 3), dtype=np.uint8), axis=0)
    counts = np.arange(1, len(colors) + 1, dtype=np.int64)
    a = median_cut_palette(colors, counts, 256)
    b = median_cut_palette(colors, counts, 256)
    assert len(a) <= 256
    assert np.array_equal(a, b)
    # palette entries live inside the color cube and are unique rows
    assert len(np.unique(a, axis=0)) == len(a)
