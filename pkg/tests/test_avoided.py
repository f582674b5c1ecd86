import math
import random

import pytest

from avoided_words.avoided import (Params, absent_avoided, all_avoided,
                                   avoided_words, expected_frequency,
                                   nodes_considered, occurring_avoided,
                                   std_value)
from avoided_words.errors import InternalConsistencyError
from avoided_words.maw import MawTuple, compute_maws
from avoided_words.oracle import brute_all_avoided, brute_avoided, brute_stats
from avoided_words.sequence import Sequence
from avoided_words.suffix_index import build, locate_factor

from helpers import example_sequence, random_sequence, spike_family


def analyzed(seq):
    index = build(seq)
    return index, compute_maws(index)


def as_tuples(words):
    return {(w.word, w.word_class, w.stats.f, w.stats.fp, w.stats.fs,
             w.stats.fi, w.stats.expected, w.stats.std) for w in words}


def test_params_validation():
    Params(3, -0.4)
    with pytest.raises(ValueError):
        Params(2, -0.4)
    with pytest.raises(ValueError):
        Params(3, 0.0)
    with pytest.raises(ValueError):
        Params(3, 0.4)
    with pytest.raises(ValueError):
        Params(3, float("nan"))


def test_expected_frequency_known_values():
    assert expected_frequency(3, 3, 6) == 1.5
    assert expected_frequency(1, 3, 6) == 0.5
    assert expected_frequency(5, 7, 0) == 0.0


def test_std_value_known_values():
    assert math.isclose(std_value(1, 1.5), -0.408248, abs_tol=1e-6)
    assert std_value(0, 0.5) == -0.5
    assert std_value(7, 7.0) == 0.0


def test_golden_example_both_classes():
    index, maws = analyzed(example_sequence())
    params = Params(3, -0.4)

    absent = absent_avoided(index, maws, params)
    agt = next(w for w in absent if w.word == "AGT")
    assert agt.stats.expected == 0.5 and agt.stats.std == -0.5

    occurring = occurring_avoided(index, params)
    assert {w.word for w in occurring} == {"CGT", "GTG"}
    cgt = next(w for w in occurring if w.word == "CGT")
    assert cgt.stats.f == 1 and cgt.stats.expected == 1.5
    assert math.isclose(cgt.stats.std, -0.408248, abs_tol=1e-6)


def test_golden_example_combined_and_sorted():
    index, maws = analyzed(example_sequence())
    out = avoided_words(index, maws, Params(3, -0.4))
    assert [w.word for w in out] == ["TCG", "TGC", "AGT", "GAG", "GCT",
                                     "CGT", "GTG"]
    assert out == sorted(out, key=lambda w: (w.stats.std, w.word))


def test_threshold_excludes_agt():
    index, maws = analyzed(example_sequence())
    out = avoided_words(index, maws, Params(3, -0.6))
    words = {w.word for w in out}
    assert "AGT" not in words
    assert words == {"TCG", "TGC"}


def test_extreme_threshold_empty():
    index, maws = analyzed(example_sequence())
    assert occurring_avoided(index, Params(3, -1e9)) == []


def test_k_past_maximum_word_length_is_empty():
    seq = Sequence("s", "ACGTACG", ("A", "C", "G", "T"))
    index, maws = analyzed(seq)
    assert avoided_words(index, maws, Params(seq.n + 2, -0.0001)) == []


def test_inconsistent_tuple_rejected():
    index, _ = analyzed(example_sequence())
    # the infix G is a branching node with children A, C and T only,
    # so the suffix GG of the claimed word AGG is missing
    bogus = [MawTuple(0, 1, "G")]
    with pytest.raises(InternalConsistencyError):
        absent_avoided(index, bogus, Params(3, -0.4))


def test_out_of_range_tuple_rejected():
    index, _ = analyzed(example_sequence())
    with pytest.raises(InternalConsistencyError):
        absent_avoided(index, [MawTuple(14, 16, "A")], Params(4, -0.4))


def check_fixed_k_case(seq, k, rho):
    index, maws = analyzed(seq)
    got = avoided_words(index, maws, params=Params(k, rho))
    expect = brute_avoided(seq, k, rho)
    assert as_tuples(got) == as_tuples(expect)
    assert [w.word for w in got] == [w.word for w in expect]
    sigma = len(seq.alphabet)
    assert len(got) <= (sigma + 1) * seq.n - k + 1
    return got


def test_matches_oracle_randomized():
    rng = random.Random(40)
    for _ in range(150):
        sigma = rng.choice([2, 4])
        seq = random_sequence(rng, rng.randint(3, 200), sigma)
        k = rng.choice([3, 4, 5, 6])
        rho = rng.choice([-0.05, -0.5, -2.0])
        check_fixed_k_case(seq, k, rho)


def test_threshold_monotone():
    rng = random.Random(41)
    for _ in range(25):
        seq = random_sequence(rng, rng.randint(10, 120), 4)
        index, maws = analyzed(seq)
        words = None
        for rho in (-2.0, -0.5, -0.05):
            now = {w.word for w in avoided_words(index, maws, Params(4, rho))}
            if words is not None:
                assert words <= now
            words = now


def test_all_avoided_matches_oracle():
    rng = random.Random(42)
    for _ in range(60):
        sigma = rng.choice([2, 4])
        seq = random_sequence(rng, rng.randint(3, 40), sigma)
        rho = rng.choice([-0.01, -0.4, -1.0])
        index, maws = analyzed(seq)
        got = all_avoided(index, maws, rho)
        expect = brute_all_avoided(seq, rho)
        assert as_tuples(got) == as_tuples(expect)
        assert [w.word for w in got] == [w.word for w in expect]


def test_all_avoided_restricts_to_fixed_k():
    index, maws = analyzed(example_sequence())
    swept = {w.word for w in all_avoided(index, maws, -0.4)
             if len(w.word) == 3}
    fixed = {w.word for w in avoided_words(index, maws, Params(3, -0.4))}
    assert swept == fixed


def test_all_avoided_rejects_nonnegative_rho():
    index, maws = analyzed(example_sequence())
    with pytest.raises(ValueError):
        all_avoided(index, maws, 0.0)


def test_spike_family_reports_every_long_maw():
    # with rho = -1/n every minimal absent word of length >= 3 is
    # avoided: its expected count is at least 1/n and it never occurs
    n = 20
    seq = spike_family(n)
    index, maws = analyzed(seq)
    rho = -1.0 / n
    reported = {w.word for w in all_avoided(index, maws, rho)
                if w.word_class == "absent"}
    long_maws = {maws.word(t) for t in range(len(maws))
                 if maws.lengths[t] >= 3}
    assert reported == long_maws


def test_occurring_words_with_implicit_prefix_never_reported():
    rng = random.Random(43)
    for _ in range(40):
        seq = random_sequence(rng, rng.randint(5, 60), rng.choice([2, 4]))
        k = rng.choice([3, 4])
        index, maws = analyzed(seq)
        reported = {w.word for w in avoided_words(index, maws,
                                                  Params(k, -1e-12))}
        for i in range(seq.n - k + 1):
            word = seq.data[i:i + k]
            prefix_locus = locate_factor(index, i, i + k - 2)
            if index.is_explicit(prefix_locus):
                continue
            assert word not in reported
            assert brute_stats(seq, word).std >= 0


def test_absent_results_lie_in_maw_set():
    rng = random.Random(44)
    for _ in range(30):
        seq = random_sequence(rng, rng.randint(5, 80), 4)
        index, maws = analyzed(seq)
        words = {maws.word(t) for t in range(len(maws))}
        for w in avoided_words(index, maws, Params(4, -0.05)):
            if w.word_class == "absent":
                assert w.word in words


def test_nodes_considered_counts_prefix_depth_nodes():
    index, _ = analyzed(example_sequence())
    explicit_depth2 = sum(
        1 for v in range(index.node_count)
        if not index.is_leaf(v) and index.node(v).depth == 2)
    assert nodes_considered(index, 3) == explicit_depth2
