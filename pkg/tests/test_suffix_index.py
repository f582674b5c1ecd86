import random

import pytest

from avoided_words.errors import InternalConsistencyError
from avoided_words.oracle import count_occurrences
from avoided_words.sequence import Sequence
from avoided_words.suffix_index import (Locus, build, child, frequency,
                                        locate_factor, suffix_link_of)

from helpers import DNA, example_sequence, random_sequence


def walk_word(index, word):
    """Locus of an arbitrary word via repeated child steps, or None."""
    locus = Locus(0, 0)
    for a in word:
        locus = child(index, locus, a)
        if locus is None:
            return None
    return locus


def test_build_rejects_empty():
    with pytest.raises(ValueError, match="empty"):
        build(Sequence("s", "", DNA))


def test_single_symbol_text():
    index = build(Sequence("s", "A", ("A",)))
    root = index.node(0)
    assert root.count == 1
    leaves = [v for v in range(index.node_count) if index.is_leaf(v)]
    assert len(leaves) == 2


def test_example_gcg_node():
    index = build(example_sequence())
    locus = locate_factor(index, 1, 3)
    assert index.locus_word(locus) == "GCG"
    assert index.is_explicit(locus)
    node = index.node(locus.node)
    assert node.depth == 3
    assert node.count == 2


def test_example_tct_is_implicit():
    index = build(example_sequence())
    at = index.seq.data.find("TCT")
    locus = locate_factor(index, at, at + 2)
    assert index.locus_word(locus) == "TCT"
    assert not index.is_explicit(locus)


def test_run_frequencies():
    seq = Sequence("s", "AAAA", ("A",))
    index = build(seq)
    for m, expect in ((1, 4), (2, 3), (3, 2), (4, 1)):
        assert frequency(index, locate_factor(index, 0, m - 1)) == expect


def test_empty_word_frequency_is_n():
    index = build(example_sequence())
    assert frequency(index, Locus(0, 0)) == 16


def test_example_small_frequencies():
    index = build(example_sequence())
    for word, expect in (("CG", 3), ("GT", 3), ("G", 6), ("GCG", 2)):
        at = index.seq.data.find(word)
        locus = locate_factor(index, at, at + len(word) - 1)
        assert frequency(index, locus) == expect


def test_locate_factor_rejects_bad_ranges():
    index = build(example_sequence())
    for i, j in ((-1, 3), (2, 1), (0, 16), (16, 16)):
        with pytest.raises(ValueError):
            locate_factor(index, i, j)


def test_whole_text_locus_is_the_first_leaf():
    index = build(example_sequence())
    locus = locate_factor(index, 0, index.n - 1)
    node = index.node(locus.node)
    assert node.leaf_label == 0


def test_child_navigation():
    index = build(example_sequence())
    assert index.locus_word(walk_word(index, "T")) == "T"
    cgt = walk_word(index, "CGT")
    assert frequency(index, cgt) == 1
    cgc = walk_word(index, "CGC")
    assert frequency(index, cgc) >= 1
    # no occurrence of CG ends the text, so no terminator branch there
    cg = walk_word(index, "CG")
    assert child(index, cg, "$") is None
    assert walk_word(index, "GTT") is None


def test_terminator_child_exists_at_text_end():
    index = build(example_sequence())
    gt = walk_word(index, "TGT")
    assert child(index, gt, "$") is not None


def test_suffix_link_of_validates():
    index = build(example_sequence())
    with pytest.raises(ValueError, match="root"):
        suffix_link_of(index, 0)
    leaf = next(v for v in range(index.node_count) if index.is_leaf(v))
    with pytest.raises(ValueError, match="leaf"):
        suffix_link_of(index, leaf)


def test_suffix_link_drops_first_symbol():
    index = build(example_sequence())
    gcg = locate_factor(index, 1, 3).node
    link = suffix_link_of(index, gcg)
    assert link.word() == "CG"
    for v in range(1, index.node_count):
        if index.is_leaf(v):
            continue
        node = index.node(v)
        assert node.suffix_link.depth == node.depth - 1
        assert node.suffix_link.word() == node.word()[1:]


def check_invariants(seq):
    index = build(seq)
    n = seq.n
    assert index.node_count <= 2 * (n + 1)
    assert index.node(0).count == n

    leaf_total = 0
    for v in range(index.node_count):
        node = index.node(v)
        if node.is_leaf:
            leaf_total += node.count
            continue
        kids = list(node.children.values())
        if v != 0:
            assert len(kids) >= 2
        assert node.count == sum(k.count for k in kids)
        if v != 0:
            word = node.word()
            assert node.suffix_link.word() == word[1:]
            assert node.count == count_occurrences(seq, word)
    assert leaf_total == n


def check_factor_queries(seq, rng):
    index = build(seq)
    for _ in range(25):
        i = rng.randrange(seq.n)
        j = rng.randrange(i, seq.n)
        word = seq.data[i:j + 1]
        locus = locate_factor(index, i, j)
        assert index.locus_word(locus) == word
        assert frequency(index, locus) == count_occurrences(seq, word)
        explicit_now = index.is_explicit(locus)
        via_children = walk_word(index, word)
        assert via_children == locus
        assert index.is_explicit(via_children) == explicit_now


@pytest.mark.parametrize("sigma", [1, 2, 4])
def test_random_invariants(sigma):
    rng = random.Random(100 + sigma)
    for _ in range(30):
        seq = random_sequence(rng, rng.randint(1, 120), sigma)
        check_invariants(seq)


@pytest.mark.parametrize("sigma", [2, 4])
def test_random_factor_queries(sigma):
    rng = random.Random(200 + sigma)
    for _ in range(30):
        seq = random_sequence(rng, rng.randint(2, 150), sigma)
        check_factor_queries(seq, rng)


def test_degenerate_inputs():
    rng = random.Random(5)
    for data in ("A" * 500, "AB" * 250, "ABC" * 100 + "A"):
        seq = Sequence("s", data)
        check_invariants(seq)
        check_factor_queries(seq, rng)


def test_index_survives_declared_superset_alphabet():
    seq = Sequence("s", "ACAC", DNA)
    index = build(seq)
    assert frequency(index, locate_factor(index, 0, 1)) == 2
