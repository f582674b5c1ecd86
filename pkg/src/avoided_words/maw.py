"""Minimal absent words of an indexed sequence.

A word is minimal absent when it does not occur in the text but all of
its proper factors do.  Each such word has a unique representation
(i, j, a): the word is x[i..j] followed by symbol a, where x[i..j] is
an occurrence of its longest proper prefix.  Results are kept in flat
arrays because long sequences can carry millions of them.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple, Union

import numpy as np

from . import _kernels
from .errors import InternalConsistencyError
from .sequence import Sequence
from .suffix_index import SuffixIndex

__all__ = ["MawTuple", "MawList", "compute_maws", "maws_of_length"]


class MawTuple(NamedTuple):
    """One minimal absent word x[i..j] + a (a is a symbol, not a code)."""

    i: int
    j: int
    a: str

    @property
    def length(self) -> int:
        return self.j - self.i + 2

    def word(self, seq: Sequence) -> str:
        return seq.data[self.i:self.j + 1] + self.a


class MawList:
    """Array-backed, immutable sequence of MawTuple entries."""

    def __init__(self, seq: Sequence, starts, ends, follow_codes):
        self.seq = seq
        self.starts = starts
        self.ends = ends
        self.follow_codes = follow_codes

    def __len__(self) -> int:
        return int(self.starts.size)

    def __getitem__(self, t) -> MawTuple:
        if isinstance(t, slice):
            raise TypeError("slicing is not supported; use maws_of_length")
        t = int(t)
        a = self.seq.alphabet[int(self.follow_codes[t]) - 1]
        return MawTuple(int(self.starts[t]), int(self.ends[t]), a)

    def __iter__(self) -> Iterator[MawTuple]:
        for t in range(len(self)):
            yield self[t]

    @property
    def lengths(self):
        return self.ends - self.starts + 2

    def word(self, t: int) -> str:
        entry = self[t]
        return entry.word(self.seq)

    def words(self) -> Iterator[str]:
        for t in range(len(self)):
            yield self.word(t)

    def dump(self, stream) -> None:
        """Debug listing, one entry per line: i, j, a, word."""
        for t in range(len(self)):
            entry = self[t]
            stream.write(
                f"{entry.i}\t{entry.j}\t{entry.a}\t{entry.word(self.seq)}\n")


def compute_maws(index: SuffixIndex) -> MawList:
    """All minimal absent words of the indexed sequence.

    Read off the suffix tree: for an internal node with word u and a
    child edge adding symbol b, any symbol a that precedes u somewhere
    but never precedes u.b yields the minimal absent word a.u.b.  The
    output is sorted by (length, word); the word order reduces to the
    suffix-array rank of each entry's anchor because equal prefixes
    share one witness occurrence.
    """
    starts, ends, follows, ok = _kernels.minimal_absent(
        index.text, index.sa, index._depth, index._edge_start,
        index._sa_lo, index._sa_hi, index._first_child,
        index._next_sibling, index._left_mask,
        index._left_offsets, index._left_ranks)
    if not ok:
        raise InternalConsistencyError(
            f"no witness occurrence for a minimal absent word of "
            f"sequence {index.seq.id!r}")
    lengths = ends - starts + 2
    order = np.lexsort((follows, index.rank[starts], lengths))
    return MawList(index.seq, starts[order], ends[order], follows[order])


def maws_of_length(maws: Union[MawList, list], k: int):
    """Entries whose word has length exactly k, order preserved."""
    if k <= 2:
        raise ValueError(f"word length must exceed 2, got {k}")
    if isinstance(maws, MawList):
        keep = maws.lengths == k
        return MawList(maws.seq, maws.starts[keep], maws.ends[keep],
                       maws.follow_codes[keep])
    return [t for t in maws if t.j - t.i + 2 == k]
