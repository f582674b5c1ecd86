"""Brute-force reference implementations.

Everything here works by direct scanning and exhaustive enumeration so
it can validate the index-based modules.  No code is shared with them
beyond the Sequence record and the plain result containers; the
expected-count and deviation formulas are written out again on purpose,
with the same operation order so threshold comparisons agree exactly.
"""

from __future__ import annotations

import itertools
import math

from .avoided import AvoidedWord, WordStats
from .sequence import Sequence

__all__ = [
    "count_occurrences",
    "brute_stats",
    "brute_avoided",
    "brute_all_avoided",
    "brute_maws",
]

_MAW_LENGTH_GUARD = 200
_ENUMERATION_GUARD = 10 ** 7


def count_occurrences(x: Sequence, w: str) -> int:
    """Occurrences of w in x by scanning, overlaps included."""
    if not w:
        raise ValueError("the empty word has no defined occurrence list")
    count = 0
    at = x.data.find(w)
    while at >= 0:
        count += 1
        at = x.data.find(w, at + 1)
    return count


def _score(f: int, fp: int, fs: int, fi: int) -> WordStats:
    expected = (fp * fs) / fi if fi > 0 else 0.0
    std = (f - expected) / max(math.sqrt(expected), 1.0)
    return WordStats(f, fp, fs, fi, expected, std)


def brute_stats(x: Sequence, w: str) -> WordStats:
    """Counts and scores of one word, each factor counted by scan."""
    if len(w) < 3:
        raise ValueError("scored words must have length at least 3")
    return _score(count_occurrences(x, w),
                  count_occurrences(x, w[:-1]),
                  count_occurrences(x, w[1:]),
                  count_occurrences(x, w[1:-1]))


def _factor_counts(x: Sequence, lengths) -> dict:
    counts: dict = {}
    for m in lengths:
        for i in range(x.n - m + 1):
            f = x.data[i:i + m]
            counts[f] = counts.get(f, 0) + 1
    return counts


def brute_avoided(x: Sequence, k: int, rho: float) -> list:
    """Avoided words of length k by scoring every word over the
    alphabet, sorted like the main pipeline: deviation, then word."""
    if k <= 2:
        raise ValueError(f"word length must exceed 2, got {k}")
    if not rho < 0:
        raise ValueError(f"threshold must be negative, got {rho}")
    sigma = len(x.alphabet)
    if sigma ** k > _ENUMERATION_GUARD:
        raise ValueError(
            f"refusing to enumerate {sigma}^{k} candidate words")
    counts = _factor_counts(x, (k - 2, k - 1, k))
    out = []
    for tup in itertools.product(x.alphabet, repeat=k):
        w = "".join(tup)
        stats = _score(counts.get(w, 0), counts.get(w[:-1], 0),
                       counts.get(w[1:], 0), counts.get(w[1:-1], 0))
        if stats.std <= rho:
            cls = "absent" if stats.f == 0 else "occurring"
            out.append(AvoidedWord(w, stats, cls))
    out.sort(key=lambda a: (a.stats.std, a.word))
    return out


def brute_all_avoided(x: Sequence, rho: float) -> list:
    """Avoided words of every length 3..n+1.

    Candidates per length are the occurring words plus every absent
    one-symbol right-extension of an occurring word; an absent word
    outside that set has a prefix count of 0, hence an expected count
    of 0 and a deviation of 0, and can never pass a negative threshold.
    """
    if not rho < 0:
        raise ValueError(f"threshold must be negative, got {rho}")
    if x.n > _MAW_LENGTH_GUARD:
        raise ValueError(f"input too long for the brute sweep: {x.n}")
    counts = _factor_counts(x, range(1, x.n + 1))
    out = []
    for m in range(3, x.n + 2):
        candidates = set()
        for i in range(x.n - m + 1):
            candidates.add(x.data[i:i + m])
        for i in range(x.n - m + 2):
            p = x.data[i:i + m - 1]
            for a in x.alphabet:
                if p + a not in counts:
                    candidates.add(p + a)
        for w in sorted(candidates):
            stats = _score(counts.get(w, 0), counts.get(w[:-1], 0),
                           counts.get(w[1:], 0), counts.get(w[1:-1], 0))
            if stats.std <= rho:
                cls = "absent" if stats.f == 0 else "occurring"
                out.append(AvoidedWord(w, stats, cls))
    out.sort(key=lambda a: (a.stats.std, len(a.word), a.word))
    return out


def brute_maws(x: Sequence) -> list:
    """Minimal absent words as plain strings, sorted by (length, word).

    A candidate is an occurring factor extended right by one symbol;
    it qualifies when the extension is absent and the factor obtained
    by dropping the first symbol occurs (every shorter factor is then
    a factor of one of those two).
    """
    if x.n > _MAW_LENGTH_GUARD:
        raise ValueError(f"input too long for the brute scan: {x.n}")
    occurring = set()
    for m in range(1, x.n + 1):
        for i in range(x.n - m + 1):
            occurring.add(x.data[i:i + m])
    out = set()
    for p in occurring:
        for a in x.alphabet:
            w = p + a
            if w not in occurring and w[1:] in occurring:
                out.add(w)
    return sorted(out, key=lambda w: (len(w), w))
