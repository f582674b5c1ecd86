"""End-to-end analysis of sequences: index, minimal absent words,
avoided-word enumeration.  Shared by the command line and the service.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Optional

from .avoided import Params, all_avoided, avoided_words
from .maw import compute_maws
from .sequence import Sequence
from .suffix_index import build

__all__ = ["analyze_sequence", "analyze_sequences"]


def analyze_sequence(seq: Sequence, rho: float, k: Optional[int] = None,
                     all_lengths: bool = False) -> list:
    """Avoided words of one sequence; fixed length k, or every length
    >= 3 when all_lengths is set."""
    if all_lengths == (k is not None):
        raise ValueError("exactly one of k and all_lengths is required")
    index = build(seq)
    maws = compute_maws(index)
    if all_lengths:
        return all_avoided(index, maws, rho)
    return avoided_words(index, maws, Params(k, rho))


def analyze_sequences(seqs: Iterable[Sequence], rho: float,
                      k: Optional[int] = None, all_lengths: bool = False,
                      threads: int = 1) -> list:
    """(id, avoided words) per sequence, in input order.

    threads > 1 analyzes sequences concurrently; with one thread each
    sequence's index is released before the next is built.
    """
    seqs = list(seqs)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            many = pool.map(
                lambda s: analyze_sequence(s, rho, k, all_lengths), seqs)
            return [(s.id, words) for s, words in zip(seqs, many)]
    return [(s.id, analyze_sequence(s, rho, k, all_lengths)) for s in seqs]
