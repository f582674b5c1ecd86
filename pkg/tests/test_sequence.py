import pytest

from avoided_words.sequence import DNA_ALPHABET, PROTEIN_ALPHABET, Sequence


def test_explicit_alphabet_kept():
    seq = Sequence("s", "ACGT", DNA_ALPHABET)
    assert seq.alphabet == ("A", "C", "G", "T")
    assert seq.n == 4
    assert len(seq) == 4


def test_alphabet_derived_when_omitted():
    seq = Sequence("s", "BABAB")
    assert seq.alphabet == ("A", "B")


def test_alphabet_may_exceed_present_symbols():
    seq = Sequence("s", "AAA", DNA_ALPHABET)
    assert seq.n == 3
    assert len(seq.alphabet) == 4


def test_symbol_outside_alphabet_rejected():
    with pytest.raises(ValueError, match="position 2"):
        Sequence("s", "ACNT", DNA_ALPHABET)


def test_duplicate_alphabet_rejected():
    with pytest.raises(ValueError, match="distinct"):
        Sequence("s", "AA", ("A", "A"))


def test_multicharacter_alphabet_entry_rejected():
    with pytest.raises(ValueError, match="single symbols"):
        Sequence("s", "A", ("A", "CG"))


def test_terminator_symbol_reserved():
    with pytest.raises(ValueError, match="terminator"):
        Sequence("s", "A$", ("A", "$"))


def test_empty_data_without_alphabet_rejected():
    with pytest.raises(ValueError, match="at least one symbol"):
        Sequence("s", "")


def test_protein_alphabet_size():
    assert len(PROTEIN_ALPHABET) == 20
    Sequence("s", "MKVL", PROTEIN_ALPHABET)
