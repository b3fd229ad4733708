import pytest
from importlib import resources

import emordle as em


@pytest.fixture(scope="session")
def lorem_words():
    raw = (resources.files("emordle.assets.wordlists") / "lorem.csv").read_bytes()
    return em.parse_wordle_csv(raw, source_name="lorem")


@pytest.fixture(scope="session")
def lorem_layout(lorem_words):
    return em.compute_layout(lorem_words, em.Dimensions(800, 600), seed=7)


@pytest.fixture(scope="session")
def registry():
    return em.SchemeRegistry()
