import pytest
from hypothesis import given, settings, strategies as st

import emordle as em
from emordle.errors import PlacementFailure
from emordle.layout import (DEFAULT_PADDING, Dimensions, PlacedWord, WordleLayout,
                            check_overlap, compute_layout, default_font_range,
                            font_size_for_weight)
from emordle.wordlist import WordEntry, WordList

from .oracles import box_inside, overlapping_pairs


def test_font_size_endpoints():
    assert font_size_for_weight(1.0, 14, 64) == 64
    assert font_size_for_weight(0.5, 14, 64) == 39
    assert font_size_for_weight(1e-9, 14, 64) == 14


def test_font_size_monotone():
    sizes = [font_size_for_weight(w / 100, 14, 64) for w in range(1, 101)]
    assert sizes == sorted(sizes)


def test_font_size_validation():
    with pytest.raises(ValueError):
        font_size_for_weight(0.0, 14, 64)
    with pytest.raises(ValueError):
        font_size_for_weight(0.5, 64, 14)


def test_default_font_range_reference_canvas():
    assert default_font_range(Dimensions(800, 600)) == (14, 64)
    small = default_font_range(Dimensions(400, 300))
    assert small == (7, 32)


def test_dimensions_validation():
    with pytest.raises(ValueError):
        Dimensions(99, 600)
    with pytest.raises(ValueError):
        Dimensions(800, 10)


def test_singleton_centered():
    wl = WordList((WordEntry("solo", 3.0),))
    layout = compute_layout(wl, Dimensions(800, 600), seed=11)
    assert layout.words[0].anchor == (400.0, 300.0)


def test_determinism_bit_identical(lorem_words):
    a = compute_layout(lorem_words, Dimensions(800, 600), seed=7)
    b = compute_layout(lorem_words, Dimensions(800, 600), seed=7)
    assert em.export_layout(a) == em.export_layout(b)
    c = compute_layout(lorem_words, Dimensions(800, 600), seed=8)
    assert em.export_layout(a) != em.export_layout(c)


def test_eighteen_words_no_overlap_oracle(lorem_layout):
    # Independent O(n^2) rectangle intersection over the padded boxes.
    assert overlapping_pairs([w.bbox for w in lorem_layout.words]) == []
    assert check_overlap(lorem_layout) == []


def test_containment(lorem_layout):
    canvas_box = (0.0, 0.0, 800.0, 600.0)
    for w in lorem_layout.words:
        assert box_inside(w.bbox, canvas_box)


def test_word_order_follows_input(lorem_words, lorem_layout):
    assert [w.entry.text for w in lorem_layout.words] == \
        [e.text for e in lorem_words.entries]


def test_monotone_sizing(lorem_layout):
    words = lorem_layout.words
    for a in words:
        for b in words:
            if a.entry.weight > b.entry.weight:
                assert a.font_size >= b.font_size


def test_check_overlap_detects_constructed_collision(lorem_layout):
    w0 = lorem_layout.words[0]
    clone = PlacedWord(entry=WordEntry("clone", 1.0), anchor=w0.anchor,
                       font_size=w0.font_size, base_rotation=0.0, bbox=w0.bbox)
    bad = WordleLayout(canvas=lorem_layout.canvas, words=(w0, clone),
                       seed=0, padding_factor=DEFAULT_PADDING)
    assert check_overlap(bad) == [(0, 1)]


def test_check_overlap_three_words_apart():
    # Hand-built three-word layout with well separated boxes.
    def word(text, x, y, w, h):
        return PlacedWord(entry=WordEntry(text, 1.0), anchor=(x, y), font_size=20,
                          base_rotation=0.0, bbox=(x - w / 2, y - h / 2, x + w / 2, y + h / 2))
    layout = WordleLayout(canvas=Dimensions(800, 600),
                          words=(word("a", 100, 100, 80, 30),
                                 word("b", 400, 300, 80, 30),
                                 word("c", 700, 500, 80, 30)),
                          seed=0, padding_factor=1.0)
    assert check_overlap(layout) == []
    assert overlapping_pairs([w.bbox for w in layout.words]) == []


def test_placement_failure_when_canvas_too_small():
    wl = WordList(tuple(WordEntry(f"completely{i}overlong{i}", 5.0) for i in range(30)))
    with pytest.raises(PlacementFailure):
        compute_layout(wl, Dimensions(100, 100), seed=1)


def test_padding_factor_validation(lorem_words):
    with pytest.raises(ValueError):
        compute_layout(lorem_words, Dimensions(800, 600), seed=1, padding_factor=0.9)


def test_raw_weights_accepted(lorem_words):
    # compute_layout normalizes internally; raw and pre-normalized agree.
    normalized = em.normalize_weights(lorem_words)
    a = compute_layout(lorem_words, Dimensions(800, 600), seed=3)
    b = compute_layout(normalized, Dimensions(800, 600), seed=3)
    assert [w.anchor for w in a.words] == [w.anchor for w in b.words]
    assert [w.font_size for w in a.words] == [w.font_size for w in b.words]


_word_texts = st.lists(
    st.text(alphabet="abcdefghijklmnopqrstuvwxyz", min_size=2, max_size=10),
    min_size=1, max_size=14, unique=True,
)


@settings(max_examples=30, deadline=None)
@given(_word_texts, st.floats(0.05, 1.0), st.integers(0, 2 ** 32))
def test_layout_property_no_overlap(texts, min_frac, seed):
    wl = WordList(tuple(WordEntry(t, max(min_frac, (i + 1) / len(texts)))
                        for i, t in enumerate(texts)))
    layout = compute_layout(wl, Dimensions(800, 600), seed=seed)
    assert overlapping_pairs([w.bbox for w in layout.words]) == []
    for w in layout.words:
        assert box_inside(w.bbox, (0, 0, 800, 600))
