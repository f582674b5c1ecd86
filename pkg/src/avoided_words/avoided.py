"""Expected frequencies, deviation scores and avoided-word enumeration.

For a word w with longest proper prefix p, suffix s and infix i, the
expected count is E(w) = f(p) * f(s) / f(i) (0 when f(i) = 0) and the
deviation is std(w) = (f(w) - E(w)) / max(sqrt(E(w)), 1).  A word is
avoided at threshold rho < 0 when std(w) <= rho.  Absent candidates
come from the minimal-absent-word set (an absent avoided word is
always minimal absent); occurring candidates come from internal tree
nodes, because an occurring word whose prefix ends inside an edge has
f(w) = f(p) >= E(w) and can never score below zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from . import _kernels
from .errors import InternalConsistencyError
from .maw import MawList, MawTuple
from .suffix_index import SuffixIndex

__all__ = [
    "Params",
    "WordStats",
    "AvoidedWord",
    "expected_frequency",
    "std_value",
    "absent_avoided",
    "occurring_avoided",
    "avoided_words",
    "all_avoided",
    "nodes_considered",
]


@dataclass(frozen=True)
class Params:
    """Enumeration parameters: word length k > 2 and threshold rho < 0."""

    k: int
    rho: float

    def __post_init__(self):
        if self.k <= 2:
            raise ValueError(f"word length must exceed 2, got {self.k}")
        if not self.rho < 0:
            raise ValueError(f"threshold must be negative, got {self.rho}")


@dataclass(frozen=True)
class WordStats:
    f: int
    fp: int
    fs: int
    fi: int
    expected: float
    std: float


@dataclass(frozen=True)
class AvoidedWord:
    word: str
    stats: WordStats
    word_class: str

    def __post_init__(self):
        if self.word_class not in ("occurring", "absent"):
            raise ValueError(f"unknown word class {self.word_class!r}")
        if (self.word_class == "absent") != (self.stats.f == 0):
            raise ValueError("class and observed count disagree")


def expected_frequency(fp: int, fs: int, fi: int) -> float:
    """Markov-style estimate f(p) * f(s) / f(i); 0 when the infix count
    is 0.  The product is taken over exact integers before dividing."""
    if fi <= 0:
        return 0.0
    return (fp * fs) / fi


def std_value(f: int, expected: float) -> float:
    return (f - expected) / max(math.sqrt(expected), 1.0)


def _scored(f: int, fp: int, fs: int, fi: int) -> WordStats:
    expected = expected_frequency(fp, fs, fi)
    return WordStats(f, fp, fs, fi, expected, std_value(f, expected))


def _maw_arrays(index: SuffixIndex, maws: Union[MawList, list]):
    if isinstance(maws, MawList):
        return maws.starts, maws.ends, maws.follow_codes
    starts = np.array([t.i for t in maws], np.int64)
    ends = np.array([t.j for t in maws], np.int64)
    follows = np.array([index.encode(t.a) for t in maws], np.int64)
    return starts, ends, follows


def _absent_scored(index: SuffixIndex, starts, ends, follows, rho):
    """Score absent candidates given as (i, j, following-symbol) rows."""
    n = index.n
    if starts.size and (starts.min() < 0 or (ends >= n).any()
                        or (ends < starts).any() or follows.min() < 1
                        or follows.max() > index.sigma):
        raise InternalConsistencyError(
            "absent-word tuple out of range for the indexed sequence")
    fp, fi, fs, ok = _kernels.absent_word_counts(
        index.text, index._depth, index._edge_start, index._first_child,
        index._next_sibling, index._occ, starts, ends, follows)
    if not ok:
        raise InternalConsistencyError(
            "absent-word tuple names a factor missing from the index")
    data = index.seq.data
    out = []
    for t in range(starts.size):
        stats = _scored(0, int(fp[t]), int(fs[t]), int(fi[t]))
        if stats.std <= rho:
            i = int(starts[t])
            j = int(ends[t])
            word = data[i:j + 1] + index.decode(int(follows[t]))
            out.append(AvoidedWord(word, stats, "absent"))
    return out


def absent_avoided(index: SuffixIndex, maws, params: Params) -> list:
    """Absent avoided words of length k.

    For each minimal absent word of length k the prefix count is read
    at the locus of x[i..j]; dropping the first symbol gives the infix
    locus, whose edge-end count serves as both infix and suffix count
    when the locus is implicit (the suffix then ends on the same edge).
    """
    starts, ends, follows = _maw_arrays(index, maws)
    keep = (ends - starts + 2) == params.k
    return _absent_scored(index, starts[keep], ends[keep], follows[keep],
                          params.rho)


def _scan_occurring(index: SuffixIndex, k: Optional[int], rho: float):
    """Occurring avoided words from internal nodes, via explicit stack.

    Fixed k: visit internal nodes of word-depth k - 1 only, never
    descending past that depth.  k None: visit every internal node of
    word-depth >= 2.  At a visited node v with word u, each child edge
    starting with a real symbol b proposes the word u.b: its count is
    the child's, the prefix count is v's, the infix count comes from
    the suffix link of v and the suffix count from that link target's
    b-child.  Returns (words, visited-node count).
    """
    text = index.text
    depth = index._depth
    first_child = index._first_child
    next_sibling = index._next_sibling
    edge_start = index._edge_start
    occ = index._occ
    slink = index._slink
    sa = index.sa
    sa_lo = index._sa_lo
    data = index.seq.data

    out = []
    considered = 0
    stack = [0]
    while stack:
        v = stack.pop()
        dv = int(depth[v])
        if k is None:
            process = dv >= 2
            descend = True
        else:
            process = dv == k - 1
            descend = dv < k - 1
        if process:
            considered += 1
            u = int(slink[v])
            if u < 0:
                raise InternalConsistencyError(
                    f"internal node {v} has no suffix link")
            fp = int(occ[v])
            fi = int(occ[u])
            c = int(first_child[v])
            while c >= 0:
                b = int(text[edge_start[c]])
                if b != 0:
                    d = int(first_child[u])
                    while d >= 0 and int(text[edge_start[d]]) != b:
                        d = int(next_sibling[d])
                    if d < 0:
                        raise InternalConsistencyError(
                            f"suffix of an occurring word missing under "
                            f"node {u}")
                    stats = _scored(int(occ[c]), fp, int(occ[d]), fi)
                    if stats.std <= rho:
                        s = int(sa[sa_lo[c]])
                        out.append(AvoidedWord(data[s:s + dv + 1], stats,
                                               "occurring"))
                c = int(next_sibling[c])
        if descend:
            c = int(first_child[v])
            while c >= 0:
                if int(first_child[c]) >= 0:
                    stack.append(c)
                c = int(next_sibling[c])
    return out, considered


def occurring_avoided(index: SuffixIndex, params: Params) -> list:
    words, _ = _scan_occurring(index, params.k, params.rho)
    return words


def nodes_considered(index: SuffixIndex, k: int) -> int:
    """How many explicit internal nodes sit at word-depth k - 1; the
    work the occurring scan performs for this k."""
    depth = index._depth
    first_child = index._first_child
    next_sibling = index._next_sibling
    count = 0
    stack = [0]
    while stack:
        v = stack.pop()
        dv = int(depth[v])
        if dv == k - 1:
            count += 1
        elif dv < k - 1:
            c = int(first_child[v])
            while c >= 0:
                if int(first_child[c]) >= 0:
                    stack.append(c)
                c = int(next_sibling[c])
    return count


def _checked_sorted(out: list, key) -> list:
    seen = set()
    for w in out:
        if w.word in seen:
            raise InternalConsistencyError(
                f"word {w.word!r} reported more than once")
        seen.add(w.word)
    out.sort(key=key)
    return out


def avoided_words(index: SuffixIndex, maws, params: Params) -> list:
    """All avoided words of length k, absent and occurring together,
    sorted by deviation then word."""
    out = occurring_avoided(index, params)
    out.extend(absent_avoided(index, maws, params))
    return _checked_sorted(out, key=lambda w: (w.stats.std, w.word))


def all_avoided(index: SuffixIndex, maws, rho: float) -> list:
    """Avoided words of every length >= 3, sorted by deviation, then
    length, then word."""
    if not rho < 0:
        raise ValueError(f"threshold must be negative, got {rho}")
    out, _ = _scan_occurring(index, None, rho)
    starts, ends, follows = _maw_arrays(index, maws)
    keep = (ends - starts + 2) >= 3
    out.extend(_absent_scored(index, starts[keep], ends[keep],
                              follows[keep], rho))
    return _checked_sorted(
        out, key=lambda w: (w.stats.std, len(w.word), w.word))
