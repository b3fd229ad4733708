import math
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from emordle.errors import GroupCountOutOfRange
from emordle.grouping import (GroupAssignment, GroupingStrategy,
                              group_count_for_entropy, group_positional,
                              group_random)
from emordle.layout import Dimensions, PlacedWord, WordleLayout
from emordle.wordlist import WordEntry


def test_entropy_one_gives_one_group_per_word():
    assert group_count_for_entropy(GroupingStrategy.RANDOM, 18, 1.0) == 18
    assert group_count_for_entropy(GroupingStrategy.POSITIONAL, 18, 1.0) == 18


def test_entropy_zero_matches_strategy_minimum():
    assert group_count_for_entropy(GroupingStrategy.RANDOM, 18, 0.0) == 1
    assert group_count_for_entropy(GroupingStrategy.POSITIONAL, 18, 0.0) == 4


def test_entropy_midpoint_rounds_half_up():
    # 1 + 0.5 * 17 = 9.5 -> 10
    assert group_count_for_entropy(GroupingStrategy.RANDOM, 18, 0.5) == 10
    # 4 + 0.5 * 14 = 11 -> 11
    assert group_count_for_entropy(GroupingStrategy.POSITIONAL, 18, 0.5) == 11


def test_positional_minimum_caps_at_n():
    assert group_count_for_entropy(GroupingStrategy.POSITIONAL, 3, 0.0) == 3
    assert group_count_for_entropy(GroupingStrategy.POSITIONAL, 1, 0.0) == 1


def test_group_count_monotone_in_entropy():
    for strategy in GroupingStrategy:
        for n in (1, 2, 5, 18, 60):
            counts = [group_count_for_entropy(strategy, n, k / 100) for k in range(101)]
            assert counts == sorted(counts)
            assert all(1 <= g <= n for g in counts)


def test_out_of_range_entropy_clamped():
    assert group_count_for_entropy(GroupingStrategy.RANDOM, 18, -3.0) == 1
    assert group_count_for_entropy(GroupingStrategy.RANDOM, 18, 9.0) == 18


def test_group_random_extremes():
    singles = group_random(5, 5, seed=99)
    assert sorted(singles.group_of) == [0, 1, 2, 3, 4]
    solo = group_random(5, 1, seed=99)
    assert set(solo.group_of) == {0}


def test_group_random_balanced_sizes():
    a = group_random(6, 3, seed=42)
    sizes = Counter(a.group_of)
    assert sorted(sizes.values()) == [2, 2, 2]
    b = group_random(7, 3, seed=42)
    assert sorted(Counter(b.group_of).values()) == [2, 2, 3]


def test_group_random_deterministic():
    assert group_random(12, 4, seed=7) == group_random(12, 4, seed=7)
    assert group_random(12, 4, seed=7) != group_random(12, 4, seed=8)


def test_group_random_range_errors():
    with pytest.raises(GroupCountOutOfRange):
        group_random(5, 0, seed=1)
    with pytest.raises(GroupCountOutOfRange):
        group_random(5, 6, seed=1)


def _layout_from_anchors(anchors, canvas=(800, 600)):
    words = tuple(
        PlacedWord(entry=WordEntry(f"w{i}", 1.0), anchor=(float(x), float(y)),
                   font_size=20, base_rotation=0.0,
                   bbox=(x - 10.0, y - 5.0, x + 10.0, y + 5.0))
        for i, (x, y) in enumerate(anchors)
    )
    return WordleLayout(canvas=Dimensions(*canvas), words=words, seed=0,
                        padding_factor=1.0)


def test_positional_extremes():
    layout = _layout_from_anchors([(100, 100), (700, 100), (100, 500), (700, 500)])
    assert group_positional(layout, 1, seed=0).group_count == 1
    singles = group_positional(layout, 4, seed=0)
    assert sorted(singles.group_of) == [0, 1, 2, 3]


def test_positional_square_matches_bruteforce():
    # Four corners of a square, two groups: each corner joins its nearest seed.
    anchors = [(200, 200), (600, 200), (200, 400), (600, 400)]
    layout = _layout_from_anchors(anchors)
    got = group_positional(layout, 2, seed=0)

    # Brute-force oracle: recompute farthest-point seeds and nearest-seed
    # assignment straight from the definition.
    center = (400, 300)
    first = min(range(4), key=lambda i: (math.dist(anchors[i], center), i))
    second = max(range(4), key=lambda i: (math.dist(anchors[i], anchors[first]), -i))
    seeds = [first, second]
    expect = [min(range(2), key=lambda s: (math.dist(anchors[i], anchors[seeds[s]]), s))
              for i in range(4)]
    assert list(got.group_of) == expect
    assert got.group_count == 2
    # Same-column points share a group with their nearest corner seed.
    assert got.group_of[0] != got.group_of[1]


def test_positional_deterministic(lorem_layout):
    a = group_positional(lorem_layout, 5, seed=1)
    b = group_positional(lorem_layout, 5, seed=2)  # seed is unused by design
    assert a == b


def test_positional_range_errors(lorem_layout):
    with pytest.raises(GroupCountOutOfRange):
        group_positional(lorem_layout, 0, seed=1)
    with pytest.raises(GroupCountOutOfRange):
        group_positional(lorem_layout, len(lorem_layout.words) + 1, seed=1)


def test_assignment_validation():
    with pytest.raises(ValueError):
        GroupAssignment(group_of=(0, 2), group_count=2)  # group 1 empty
    with pytest.raises(ValueError):
        GroupAssignment(group_of=(0, 5), group_count=2)  # out of range


@given(st.integers(1, 40), st.data())
def test_random_grouping_is_partition(n, data):
    g = data.draw(st.integers(1, n))
    seed = data.draw(st.integers(0, 2 ** 64 - 1))
    a = group_random(n, g, seed)
    assert len(a.group_of) == n
    sizes = Counter(a.group_of)
    assert set(sizes) == set(range(g))
    assert max(sizes.values()) - min(sizes.values()) <= 1
