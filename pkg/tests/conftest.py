import pytest

from avoided_words.avoided import Params, all_avoided, avoided_words
from avoided_words.maw import compute_maws
from avoided_words.suffix_index import build

from helpers import example_sequence


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Run the whole pipeline once so compiled kernels are loaded before
    any timed assertion."""
    index = build(example_sequence())
    maws = compute_maws(index)
    avoided_words(index, maws, Params(3, -0.4))
    all_avoided(index, maws, -0.4)
