import pytest

from avoided_words.avoided import Params, avoided_words
from avoided_words.dna import (is_self_complementary, mark_palindromes,
                               reverse_complement)
from avoided_words.maw import compute_maws
from avoided_words.sequence import Sequence
from avoided_words.suffix_index import build

from helpers import example_sequence


@pytest.mark.parametrize("w, rc", [
    ("A", "T"),
    ("ACGT", "ACGT"),
    ("AAAAAA", "TTTTTT"),
    ("GAATTC", "GAATTC"),
    ("AGT", "ACT"),
    ("", ""),
])
def test_reverse_complement(w, rc):
    assert reverse_complement(w) == rc


def test_reverse_complement_involution():
    w = "ACGGCTATTTG"
    assert reverse_complement(reverse_complement(w)) == w


@pytest.mark.parametrize("w", ["N", "ACGU", "acgt", "A T"])
def test_reverse_complement_rejects_non_dna(w):
    with pytest.raises(ValueError):
        reverse_complement(w)


@pytest.mark.parametrize("w, flag", [
    ("GAATTC", True),
    ("ACGT", True),
    ("AT", True),
    ("AAA", False),
    ("AGT", False),
    ("CGT", False),
])
def test_is_self_complementary(w, flag):
    assert is_self_complementary(w) is flag


def test_odd_length_never_self_complementary():
    # the middle symbol would have to equal its own complement
    for w in ("A", "CAC", "TGCAT"):
        assert not is_self_complementary(w)


def test_mark_palindromes_on_pipeline_output():
    seq = Sequence("x", "ACGACCGT", ("A", "C", "G", "T"))
    index = build(seq)
    out = avoided_words(index, compute_maws(index), Params(4, -0.4))
    marked = mark_palindromes(out)
    assert [w for w, _ in marked] == out
    flags = {w.word: flag for w, flag in marked}
    assert flags == {"ACGT": True, "CCGA": False, "GACG": False}


def test_example_string_has_no_self_complementary_results():
    index = build(example_sequence())
    out = avoided_words(index, compute_maws(index), Params(4, -0.1))
    assert len(out) == 5
    assert all(flag is False for _, flag in mark_palindromes(out))


def test_mark_palindromes_empty():
    assert mark_palindromes([]) == []
