"""Compiled kernels for suffix-array and suffix-tree construction.

Every function here operates on flat numpy arrays so that numba can
compile it.  The driving code in suffix_index.py owns array layout and
all user-facing behaviour; nothing in this module validates input.

Conventions used throughout:

- the text is an int32 array of length N = n + 1 whose last element is
  the terminator code 0; real symbols use codes 1..sigma,
- node arrays describe the suffix tree of that terminated text; node 0
  is the root, children of a node form a linked list (first_child /
  next_sibling) ordered by the first symbol of the connecting edge,
- sa_lo/sa_hi of a node bound the half-open suffix-array interval of
  the leaves below it.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def suffix_array(text, nkeys):
    """Suffix array by induced sorting.

    text: int32 codes, text[-1] == 0 strictly smaller than every other
    element and unique.  nkeys bounds the code values (max code + 1).
    """
    n = text.size
    sa = np.full(n, -1, np.int32)
    if n == 1:
        sa[0] = 0
        return sa

    stype = np.zeros(n, np.bool_)
    stype[n - 1] = True
    for i in range(n - 2, -1, -1):
        if text[i] < text[i + 1] or (text[i] == text[i + 1] and stype[i + 1]):
            stype[i] = True

    bucket = np.zeros(nkeys, np.int64)
    for i in range(n):
        bucket[text[i]] += 1
    heads = np.zeros(nkeys, np.int64)
    tails = np.zeros(nkeys, np.int64)
    s = 0
    for c in range(nkeys):
        heads[c] = s
        s += bucket[c]
        tails[c] = s

    # Pass 1: drop the leftmost-S positions at their bucket tails, then
    # induce L from the left and S from the right.
    ptr = tails.copy()
    for i in range(1, n):
        if stype[i] and not stype[i - 1]:
            ptr[text[i]] -= 1
            sa[ptr[text[i]]] = i
    _induce(text, sa, stype, heads, tails)

    # Name the sorted leftmost-S substrings.
    nlms = 0
    for r in range(n):
        p = sa[r]
        if p > 0 and stype[p] and not stype[p - 1]:
            sa[nlms] = p
            nlms += 1
    for r in range(nlms, n):
        sa[r] = -1
    names = 0
    prev = -1
    for r in range(nlms):
        p = sa[r]
        if prev < 0 or not _lms_equal(text, stype, prev, p):
            names += 1
        prev = p
        sa[nlms + p // 2] = names - 1

    reduced = np.empty(nlms, np.int32)
    w = 0
    for r in range(nlms, n):
        if sa[r] >= 0:
            reduced[w] = sa[r]
            w += 1

    if names < nlms:
        sub = suffix_array(reduced, names)
    else:
        sub = np.empty(nlms, np.int32)
        for i in range(nlms):
            sub[reduced[i]] = i

    lms = np.empty(nlms, np.int32)
    w = 0
    for i in range(1, n):
        if stype[i] and not stype[i - 1]:
            lms[w] = i
            w += 1

    # Pass 2: drop the now fully sorted leftmost-S suffixes and induce.
    for r in range(n):
        sa[r] = -1
    ptr = tails.copy()
    for r in range(nlms - 1, -1, -1):
        p = lms[sub[r]]
        ptr[text[p]] -= 1
        sa[ptr[text[p]]] = p
    _induce(text, sa, stype, heads, tails)
    return sa


@njit(cache=True)
def _induce(text, sa, stype, heads, tails):
    n = text.size
    ptr = heads.copy()
    for r in range(n):
        p = sa[r] - 1
        if p >= 0 and not stype[p]:
            sa[ptr[text[p]]] = p
            ptr[text[p]] += 1
    ptr = tails.copy()
    for r in range(n - 1, -1, -1):
        p = sa[r] - 1
        if p >= 0 and stype[p]:
            ptr[text[p]] -= 1
            sa[ptr[text[p]]] = p


@njit(cache=True)
def _lms_equal(text, stype, a, b):
    n = text.size
    if a == n - 1 or b == n - 1:
        return False
    k = 0
    while True:
        a_end = stype[a + k] and not stype[a + k - 1] if k > 0 else False
        b_end = stype[b + k] and not stype[b + k - 1] if k > 0 else False
        if a_end and b_end:
            return True
        if a_end != b_end:
            return False
        if text[a + k] != text[b + k] or stype[a + k] != stype[b + k]:
            return False
        k += 1


@njit(cache=True)
def rank_and_lcp(text, sa):
    """Inverse permutation of sa plus the adjacent-lcp array.

    lcp[r] is the length of the longest common prefix of the suffixes
    at ranks r-1 and r; lcp[0] == 0.
    """
    n = sa.size
    rank = np.empty(n, np.int32)
    for r in range(n):
        rank[sa[r]] = r
    lcp = np.zeros(n, np.int32)
    h = 0
    for i in range(n):
        r = rank[i]
        if r > 0:
            j = sa[r - 1]
            while i + h < n and j + h < n and text[i + h] == text[j + h]:
                h += 1
            lcp[r] = h
            if h > 0:
                h -= 1
        else:
            h = 0
    return rank, lcp


@njit(cache=True)
def build_tree(sa, lcp):
    """Suffix tree node arrays from the suffix array and its lcp array.

    Leaves are created in rank order; internal nodes are inserted when
    the lcp drops, which keeps every child list ordered by edge symbol.
    Returns (parent, depth, edge_start, sa_lo, sa_hi, first_child,
    next_sibling, leaf_label, node_count); leaf_label is the suffix
    start for leaves and -1 for internal nodes.
    """
    n = sa.size
    cap = 2 * n + 1
    parent = np.full(cap, -1, np.int32)
    depth = np.zeros(cap, np.int32)
    edge_start = np.full(cap, -1, np.int32)
    sa_lo = np.zeros(cap, np.int32)
    sa_hi = np.zeros(cap, np.int32)
    first_child = np.full(cap, -1, np.int32)
    next_sibling = np.full(cap, -1, np.int32)
    last_child = np.full(cap, -1, np.int32)
    penult_child = np.full(cap, -1, np.int32)
    leaf_label = np.full(cap, -1, np.int32)

    count = 1
    sa_hi[0] = n
    stack = np.empty(n + 2, np.int32)
    top = 0
    stack[0] = 0

    for r in range(n):
        split = lcp[r]
        popped = -1
        while depth[stack[top]] > split:
            popped = stack[top]
            sa_hi[popped] = r
            top -= 1
        hold = stack[top]
        if depth[hold] == split:
            attach = hold
        else:
            # The drop lands inside the edge toward the last pop; break
            # that edge with a new internal node of depth split.
            mid = count
            count += 1
            depth[mid] = split
            parent[mid] = hold
            edge_start[mid] = edge_start[popped]
            sa_lo[mid] = sa_lo[popped]
            edge_start[popped] += split - depth[hold]
            parent[popped] = mid
            if penult_child[hold] < 0:
                first_child[hold] = mid
            else:
                next_sibling[penult_child[hold]] = mid
            next_sibling[mid] = -1
            last_child[hold] = mid
            first_child[mid] = popped
            next_sibling[popped] = -1
            last_child[mid] = popped
            penult_child[mid] = -1
            attach = mid
            top += 1
            stack[top] = mid
        leaf = count
        count += 1
        depth[leaf] = n - sa[r]
        parent[leaf] = attach
        edge_start[leaf] = sa[r] + depth[attach]
        sa_lo[leaf] = r
        sa_hi[leaf] = r + 1
        leaf_label[leaf] = sa[r]
        if first_child[attach] < 0:
            first_child[attach] = leaf
        else:
            next_sibling[last_child[attach]] = leaf
        penult_child[attach] = last_child[attach]
        last_child[attach] = leaf
        top += 1
        stack[top] = leaf
    while top > 0:
        sa_hi[stack[top]] = n
        top -= 1

    return (
        parent[:count],
        depth[:count],
        edge_start[:count],
        sa_lo[:count],
        sa_hi[:count],
        first_child[:count],
        next_sibling[:count],
        leaf_label[:count],
    )


@njit(cache=True)
def annotate(text, first_child, next_sibling, leaf_label):
    """Breadth-first order, occurrence counts and left-extension masks.

    occ[v] counts suffixes of the unterminated text below v, so a leaf
    for the empty terminator suffix contributes 0 and occ[root] == n.
    left_mask[v] has bit (a - 1) set when some occurrence of the node's
    word is preceded by symbol code a.
    """
    count = first_child.size
    n = text.size - 1
    order = np.empty(count, np.int32)
    order[0] = 0
    head = 0
    tail = 1
    while head < tail:
        v = order[head]
        head += 1
        c = first_child[v]
        while c >= 0:
            order[tail] = c
            tail += 1
            c = next_sibling[c]
    occ = np.zeros(count, np.int64)
    left_mask = np.zeros(count, np.int64)
    for idx in range(count - 1, -1, -1):
        v = order[idx]
        pos = leaf_label[v]
        if pos >= 0:
            if pos < n:
                occ[v] = 1
            if pos >= 1:
                left_mask[v] = np.int64(1) << (text[pos - 1] - 1)
        c = first_child[v]
        while c >= 0:
            occ[v] += occ[c]
            left_mask[v] |= left_mask[c]
            c = next_sibling[c]
    return order, occ, left_mask


@njit(cache=True)
def suffix_links(text, sa, order, parent, depth, edge_start, sa_lo,
                 first_child, next_sibling):
    """Suffix link of every internal node, root linked to itself.

    For node v with word a.y the link target is found by walking y down
    from slink(parent(v)), jumping whole edges.  Parents precede
    children in breadth-first order, so targets are always ready.
    Returns (slink, ok); ok is False when a walk leaves the tree, which
    can only happen on a malformed tree.
    """
    count = parent.size
    slink = np.full(count, -1, np.int32)
    slink[0] = 0
    for idx in range(count):
        v = order[idx]
        if v == 0 or first_child[v] < 0:
            continue
        start = slink[parent[v]]
        target = depth[v] - 1
        cur = start
        cur_depth = depth[start]
        pos = sa[sa_lo[v]] + 1 + cur_depth
        while cur_depth < target:
            want = text[pos]
            c = first_child[cur]
            while c >= 0 and text[edge_start[c]] != want:
                c = next_sibling[c]
            if c < 0:
                return slink, False
            pos += depth[c] - cur_depth
            cur_depth = depth[c]
            cur = c
        if cur_depth != target:
            return slink, False
        slink[v] = cur
    return slink, True


@njit(cache=True)
def left_symbol_ranks(text, sa):
    """Suffix-array ranks grouped by the symbol preceding the suffix.

    Returns (offsets, ranks): ranks[offsets[a]:offsets[a + 1]] lists, in
    increasing order, the ranks r whose suffix start sa[r] is preceded
    by symbol code a.  Used to pick occurrence witnesses by binary
    search inside a node's suffix-array interval.
    """
    n = sa.size
    top = 0
    for i in range(text.size):
        if text[i] > top:
            top = text[i]
    counts = np.zeros(top + 2, np.int64)
    for r in range(n):
        p = sa[r]
        if p >= 1:
            counts[text[p - 1] + 1] += 1
    offsets = np.zeros(top + 2, np.int64)
    for a in range(1, top + 2):
        offsets[a] = offsets[a - 1] + counts[a]
    ranks = np.empty(offsets[top + 1], np.int32)
    fill = offsets.copy()
    for r in range(n):
        p = sa[r]
        if p >= 1:
            a = text[p - 1]
            ranks[fill[a]] = r
            fill[a] += 1
    return offsets, ranks


@njit(cache=True)
def minimal_absent(text, sa, depth, edge_start, sa_lo, sa_hi,
                   first_child, next_sibling, left_mask, offsets, ranks):
    """All minimal absent words as occurrence-anchored triples.

    A word a.u.b is minimal absent exactly when a.u and u.b occur but
    a.u.b does not.  For every internal node U (word u, the root giving
    u = empty) and child edge starting with symbol b, the qualifying
    left symbols a are those occurring before u but not before u.b,
    read off the left-extension masks.  Each result row (i, j, b) means
    the word text[i..j] followed by symbol code b, where text[i..j] is
    the occurrence of a.u starting at the witness position i.
    Returns (starts, ends, follows, ok).
    """
    count = depth.size
    total = 0
    for v in range(count):
        c = first_child[v]
        if c < 0:
            continue
        while c >= 0:
            if text[edge_start[c]] != 0:
                d = left_mask[v] & ~left_mask[c]
                while d != 0:
                    d &= d - 1
                    total += 1
            c = next_sibling[c]
    starts = np.empty(total, np.int64)
    ends = np.empty(total, np.int64)
    follows = np.empty(total, np.int64)
    w = 0
    for v in range(count):
        c = first_child[v]
        if c < 0:
            continue
        lo_v = sa_lo[v]
        hi_v = sa_hi[v]
        while c >= 0:
            b = text[edge_start[c]]
            if b != 0:
                d = left_mask[v] & ~left_mask[c]
                a = 1
                while d != 0:
                    if d & 1:
                        lo = offsets[a]
                        hi = offsets[a + 1]
                        while lo < hi:
                            mid = (lo + hi) // 2
                            if ranks[mid] < lo_v:
                                lo = mid + 1
                            else:
                                hi = mid
                        if lo >= offsets[a + 1] or ranks[lo] >= hi_v:
                            return starts, ends, follows, False
                        i = sa[ranks[lo]] - 1
                        starts[w] = i
                        ends[w] = i + depth[v]
                        follows[w] = b
                        w += 1
                    d >>= 1
                    a += 1
            c = next_sibling[c]
    return starts, ends, follows, True


@njit(cache=True)
def _descend(text, depth, edge_start, first_child, next_sibling, i, j):
    """Locus of the factor text[i..j], walked from the root.

    Returns (node, explicit): node is the edge-end node whose word has
    the factor as a prefix; explicit is True when the lengths match
    exactly.  node == -1 signals that the factor is not in the tree.
    """
    target = j - i + 1
    cur = 0
    cur_depth = 0
    while True:
        want = text[i + cur_depth]
        c = first_child[cur]
        while c >= 0 and text[edge_start[c]] != want:
            c = next_sibling[c]
        if c < 0:
            return -1, False
        take = depth[c] - cur_depth
        avail = target - cur_depth
        if take > avail:
            take = avail
        for off in range(1, take):
            if text[edge_start[c] + off] != text[i + cur_depth + off]:
                return -1, False
        if depth[c] >= target:
            return c, depth[c] == target
        cur_depth = depth[c]
        cur = c


@njit(cache=True)
def absent_word_counts(text, depth, edge_start, first_child,
                       next_sibling, occ, starts, ends, follows):
    """Prefix, infix and suffix occurrence counts for absent triples.

    Row t describes the absent word text[starts[t]..ends[t]] + symbol
    follows[t]; the longest proper prefix is the anchored factor
    itself, the infix drops its first symbol, and the suffix extends
    the infix by the following symbol.  All three factors occur, so a
    failed walk marks the index inconsistent.  Rows must describe words
    of length >= 3.  Returns (fp, fi, fs, ok).
    """
    m = starts.size
    fp = np.empty(m, np.int64)
    fi = np.empty(m, np.int64)
    fs = np.empty(m, np.int64)
    for t in range(m):
        i = starts[t]
        j = ends[t]
        node, _ = _descend(text, depth, edge_start, first_child,
                           next_sibling, i, j)
        if node < 0:
            return fp, fi, fs, False
        fp[t] = occ[node]
        node, explicit = _descend(text, depth, edge_start, first_child,
                                  next_sibling, i + 1, j)
        if node < 0:
            return fp, fi, fs, False
        fi[t] = occ[node]
        if not explicit:
            fs[t] = occ[node]
        else:
            want = follows[t]
            c = first_child[node]
            while c >= 0 and text[edge_start[c]] != want:
                c = next_sibling[c]
            if c < 0:
                return fp, fi, fs, False
            fs[t] = occ[c]
    return fp, fi, fs, True
