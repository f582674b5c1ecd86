"""Suffix tree index with occurrence counts, suffix links and loci.

The tree indexes the sequence plus a unique terminator symbol, so every
suffix ends at a leaf.  Node identifiers are plain integers; node 0 is
the root.  All per-node data lives in flat arrays built once; an index
is immutable afterwards and safe for concurrent readers.

Occurrence counting convention: count(v) is the number of true suffixes
of the unterminated text below v, which equals the number of positions
where the node's word occurs.  The leaf of the terminator-only suffix
counts zero, the root counts n, and the empty word has frequency n.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

import numpy as np

from . import _kernels
from .errors import InternalConsistencyError
from .sequence import SENTINEL, Sequence

__all__ = [
    "Locus",
    "NodeView",
    "Sequence",
    "SuffixIndex",
    "build",
    "child",
    "frequency",
    "locate_factor",
    "suffix_link_of",
]


class Locus(NamedTuple):
    """Position in the tree, explicit or inside an edge.

    node is the nearest explicit node at or below the position; offset
    counts symbols from the start of that node's incoming edge.  The
    position is explicit exactly when offset equals the edge length.
    The empty word is Locus(0, 0).
    """

    node: int
    offset: int


class SuffixIndex:
    """Built suffix tree over one Sequence.  Use build() to construct."""

    def __init__(self, seq: Sequence, text, sa, rank, parent, depth,
                 edge_start, sa_lo, sa_hi, first_child, next_sibling,
                 leaf_label, order, occ, left_mask, slink,
                 left_offsets, left_ranks):
        self.seq = seq
        self.n = seq.n
        self.sigma = len(seq.alphabet)
        self.root = 0
        self.text = text
        self.sa = sa
        self.rank = rank
        self._parent = parent
        self._depth = depth
        self._edge_start = edge_start
        self._sa_lo = sa_lo
        self._sa_hi = sa_hi
        self._first_child = first_child
        self._next_sibling = next_sibling
        self._leaf_label = leaf_label
        self._order = order
        self._occ = occ
        self._left_mask = left_mask
        self._slink = slink
        self._left_offsets = left_offsets
        self._left_ranks = left_ranks
        self._code_of = {a: c + 1 for c, a in enumerate(seq.alphabet)}
        self._code_of[SENTINEL] = 0
        self._symbol_of = (SENTINEL,) + seq.alphabet

    @property
    def node_count(self) -> int:
        return int(self._depth.size)

    def encode(self, a: str) -> int:
        """Integer code of one symbol; terminator is 0."""
        try:
            return self._code_of[a]
        except KeyError:
            raise ValueError(f"symbol {a!r} is not in the alphabet") from None

    def decode(self, code: int) -> str:
        return self._symbol_of[code]

    def node(self, nid: int) -> "NodeView":
        if not 0 <= nid < self.node_count:
            raise ValueError(f"node id {nid} out of range")
        return NodeView(self, nid)

    def is_leaf(self, nid: int) -> bool:
        return self._first_child[nid] < 0

    def word_of(self, nid: int, length: Optional[int] = None) -> str:
        """Path label of a node, truncated to length symbols if given."""
        d = int(self._depth[nid])
        if length is None or length > d:
            length = d
        start = int(self.sa[self._sa_lo[nid]])
        end = start + length
        if end <= self.n:
            return self.seq.data[start:end]
        return self.seq.data[start:self.n] + SENTINEL

    def locus_word(self, locus: Locus) -> str:
        """The word a locus spells."""
        nid, offset = locus
        if nid == 0:
            return ""
        parent_depth = int(self._depth[self._parent[nid]])
        return self.word_of(nid, parent_depth + offset)

    def is_explicit(self, locus: Locus) -> bool:
        nid, offset = locus
        if nid == 0:
            return True
        edge_len = int(self._depth[nid]) - int(self._depth[self._parent[nid]])
        return offset == edge_len


class NodeView:
    """Read-only attribute view of one node of a SuffixIndex."""

    __slots__ = ("index", "nid")

    def __init__(self, index: SuffixIndex, nid: int):
        self.index = index
        self.nid = nid

    @property
    def depth(self) -> int:
        return int(self.index._depth[self.nid])

    @property
    def count(self) -> int:
        return int(self.index._occ[self.nid])

    @property
    def parent(self) -> Optional["NodeView"]:
        if self.nid == 0:
            return None
        return NodeView(self.index, int(self.index._parent[self.nid]))

    @property
    def edge(self) -> tuple[int, int]:
        """(start, end) slice of the terminated text labeling the
        incoming edge; empty for the root."""
        if self.nid == 0:
            return (0, 0)
        start = int(self.index._edge_start[self.nid])
        length = self.depth - self.parent.depth
        return (start, start + length)

    @property
    def leaf_label(self) -> Optional[int]:
        label = int(self.index._leaf_label[self.nid])
        return label if label >= 0 else None

    @property
    def is_leaf(self) -> bool:
        return self.index.is_leaf(self.nid)

    @property
    def suffix_link(self) -> Optional["NodeView"]:
        target = int(self.index._slink[self.nid])
        if target < 0 or self.nid == 0:
            return None
        return NodeView(self.index, target)

    @property
    def children(self) -> dict[str, "NodeView"]:
        """First edge symbol to child, in symbol-code order (the
        terminator sorts first)."""
        out = {}
        idx = self.index
        c = int(idx._first_child[self.nid])
        while c >= 0:
            sym = idx.decode(int(idx.text[idx._edge_start[c]]))
            out[sym] = NodeView(idx, c)
            c = int(idx._next_sibling[c])
        return out

    def word(self) -> str:
        return self.index.word_of(self.nid)

    def __eq__(self, other) -> bool:
        return (isinstance(other, NodeView) and other.index is self.index
                and other.nid == self.nid)

    def __hash__(self) -> int:
        return hash((id(self.index), self.nid))

    def __repr__(self) -> str:
        return f"NodeView(nid={self.nid}, depth={self.depth}, count={self.count})"


def build(seq: Sequence) -> SuffixIndex:
    """Index a sequence: suffix array, tree, counts and suffix links."""
    if seq.n == 0:
        raise ValueError("cannot index an empty sequence")
    table = np.full(256, -1, np.int32)
    for code, a in enumerate(seq.alphabet):
        table[ord(a)] = code + 1
    raw = np.frombuffer(seq.data.encode("ascii"), np.uint8)
    text = np.empty(seq.n + 1, np.int32)
    text[:-1] = table[raw]
    text[-1] = 0

    sa = _kernels.suffix_array(text, len(seq.alphabet) + 1)
    rank, lcp = _kernels.rank_and_lcp(text, sa)
    parts = _kernels.build_tree(sa, lcp)
    # The kernel returns views into oversized buffers; copy to release.
    (parent, depth, edge_start, sa_lo, sa_hi,
     first_child, next_sibling, leaf_label) = (p.copy() for p in parts)
    del parts, lcp

    order, occ, left_mask = _kernels.annotate(
        text, first_child, next_sibling, leaf_label)
    slink, ok = _kernels.suffix_links(
        text, sa, order, parent, depth, edge_start, sa_lo,
        first_child, next_sibling)
    if not ok:
        raise InternalConsistencyError(
            f"suffix-link walk left the tree for sequence {seq.id!r}")
    left_offsets, left_ranks = _kernels.left_symbol_ranks(text, sa)

    return SuffixIndex(seq, text, sa, rank, parent, depth, edge_start,
                       sa_lo, sa_hi, first_child, next_sibling, leaf_label,
                       order, occ, left_mask, slink,
                       left_offsets, left_ranks)


def locate_factor(index: SuffixIndex, i: int, j: int) -> Locus:
    """Locus spelling the factor at positions i..j inclusive.

    Walks down from the root jumping whole edges; only first edge
    symbols are compared because a text slice is always present.
    """
    if not (0 <= i <= j < index.n):
        raise ValueError(f"factor bounds ({i}, {j}) out of range for n={index.n}")
    text = index.text
    depth = index._depth
    edge_start = index._edge_start
    first_child = index._first_child
    next_sibling = index._next_sibling
    target = j - i + 1
    cur = 0
    cur_depth = 0
    while True:
        want = text[i + cur_depth]
        c = first_child[cur]
        while c >= 0 and text[edge_start[c]] != want:
            c = next_sibling[c]
        if c < 0:
            raise InternalConsistencyError(
                f"factor at ({i}, {j}) not found in its own index")
        if depth[c] >= target:
            return Locus(int(c), target - cur_depth)
        cur = c
        cur_depth = int(depth[c])


def frequency(index: SuffixIndex, locus: Locus) -> int:
    """Occurrence count of the word the locus spells.

    Uniform over explicit and implicit positions: the count of the
    edge-end node.  The empty-word locus gives n.
    """
    return int(index._occ[locus.node])


def child(index: SuffixIndex, locus: Locus, a: str) -> Optional[Locus]:
    """Locus extended by one symbol, or None when no factor does so."""
    code = index.encode(a)
    nid, offset = locus
    if index.is_explicit(locus):
        c = index._first_child[nid]
        while c >= 0 and index.text[index._edge_start[c]] != code:
            c = index._next_sibling[c]
        if c < 0:
            return None
        return Locus(int(c), 1)
    if index.text[index._edge_start[nid] + offset] == code:
        return Locus(nid, offset + 1)
    return None


def suffix_link_of(index: SuffixIndex, node) -> NodeView:
    """Suffix link of a non-root internal node (NodeView or id)."""
    nid = node.nid if isinstance(node, NodeView) else int(node)
    if nid == 0:
        raise ValueError("the root has no suffix link")
    if index.is_leaf(nid):
        raise ValueError(f"node {nid} is a leaf and has no suffix link")
    return NodeView(index, int(index._slink[nid]))
