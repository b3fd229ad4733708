import pytest

from emordle.style import (PALETTES, RenderStyle, get_palette, lab_to_srgb,
                           list_palettes, shift_color, srgb_to_lab)


def test_palette_registry():
    assert list_palettes() == ["mono", "happiness", "sadness", "anger", "fear"]
    assert get_palette("mono").background == (255, 255, 255)
    with pytest.raises(ValueError, match="unknown palette"):
        get_palette("sepia")


def test_ramp_cycles():
    p = PALETTES["happiness"]
    n = len(p.ramp)
    assert p.word_color(0) == p.ramp[0]
    assert p.word_color(n) == p.ramp[0]
    assert p.word_color(n + 1) == p.ramp[1]


def test_lab_round_trip_exactness():
    for rgb in [(0, 0, 0), (255, 255, 255), (128, 64, 200), (17, 17, 17), (240, 10, 3)]:
        assert lab_to_srgb(srgb_to_lab(rgb)) == rgb


def test_shift_endpoints():
    rest, target = (200, 40, 40), (40, 8, 8)
    assert shift_color(rest, target, 0.0) == rest
    assert shift_color(rest, target, 1.0) == target


def test_shift_darkens_monotonically():
    rest, target = (200, 120, 40), (30, 18, 6)
    lightness = [srgb_to_lab(shift_color(rest, target, k / 10))[0] for k in range(11)]
    for a, b in zip(lightness, lightness[1:]):
        assert b <= a + 1e-6


def test_shift_is_noop_for_mono():
    p = PALETTES["mono"]
    assert shift_color(p.ramp[0], p.shift_target, 0.5) == p.ramp[0]


def test_render_style_fps_bounds():
    RenderStyle(fps=5)
    RenderStyle(fps=30)
    with pytest.raises(ValueError):
        RenderStyle(fps=4)
    with pytest.raises(ValueError):
        RenderStyle(fps=31)
