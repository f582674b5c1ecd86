"""Reverse complements and self-complementary (palindromic) words.

A DNA word is self-complementary when it equals its own reverse
complement; such words are the classic restriction-site shape.
"""

from __future__ import annotations

_COMPLEMENT = str.maketrans("ACGT", "TGCA")
_DNA = frozenset("ACGT")

__all__ = ["reverse_complement", "is_self_complementary", "mark_palindromes"]


def reverse_complement(w: str) -> str:
    for a in w:
        if a not in _DNA:
            raise ValueError(f"not a DNA symbol: {a!r}")
    return w.translate(_COMPLEMENT)[::-1]


def is_self_complementary(w: str) -> bool:
    return w == reverse_complement(w)


def mark_palindromes(words: list) -> list:
    """Pair every avoided word with whether it is self-complementary."""
    return [(w, is_self_complementary(w.word)) for w in words]
