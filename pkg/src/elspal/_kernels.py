"""Compiled construction kernels.

Everything here works on flat integer arrays with 0-based offsets; the
public modules wrap these into 1-based, documented structures.
"""
import numpy as np
from numba import njit

BLOCK = 64
JUMP_LEVELS = 6


def suffix_array(s):
    """Prefix-doubling suffix array of an integer array (O(n log n))."""
    n = len(s)
    _, rank = np.unique(s, return_inverse=True)
    rank = rank.astype(np.int64)
    if n == 1:
        return np.zeros(1, dtype=np.int64), rank
    k = 1
    while True:
        second = np.zeros(n, dtype=np.int64)
        if k < n:
            second[: n - k] = rank[k:] + 1
        key = rank * (n + 1) + second
        sa = np.argsort(key, kind="stable")
        sk = key[sa]
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[sa] = np.concatenate(([0], np.cumsum(sk[1:] != sk[:-1])))
        rank = new_rank
        if rank[sa[-1]] == n - 1:
            return sa, rank
        k *= 2


@njit(cache=True)
def kasai(s, sa, rank):
    """lcp[r] = lcp(suffix sa[r-1], suffix sa[r]); lcp[0] = 0."""
    n = len(s)
    lcp = np.zeros(n, dtype=np.int64)
    h = 0
    for i in range(n):
        r = rank[i]
        if r == 0:
            h = 0
            continue
        j = sa[r - 1]
        while i + h < n and j + h < n and s[i + h] == s[j + h]:
            h += 1
        lcp[r] = h
        if h > 0:
            h -= 1
    return lcp


@njit(cache=True)
def rmq_build(a):
    """Linear-space RMQ: per-position in-block stack masks plus a sparse
    table over block minima."""
    n = len(a)
    mask = np.zeros(n, dtype=np.uint64)
    stack = np.empty(BLOCK, dtype=np.int64)
    for b0 in range(0, n, BLOCK):
        top = 0
        cur = np.uint64(0)
        for x in range(b0, min(b0 + BLOCK, n)):
            while top > 0 and a[stack[top - 1]] >= a[x]:
                top -= 1
                cur &= ~(np.uint64(1) << np.uint64(stack[top] - b0))
            stack[top] = x
            top += 1
            cur |= np.uint64(1) << np.uint64(x - b0)
            mask[x] = cur
    nb = (n + BLOCK - 1) // BLOCK
    levels = 1
    while (1 << levels) <= nb:
        levels += 1
    table = np.empty((levels, nb), dtype=np.int64)
    for b in range(nb):
        lo = b * BLOCK
        hi = min(lo + BLOCK, n)
        v = a[lo]
        for x in range(lo + 1, hi):
            if a[x] < v:
                v = a[x]
        table[0, b] = v
    for k in range(1, levels):
        half = 1 << (k - 1)
        for b in range(nb - (1 << k) + 1):
            table[k, b] = min(table[k - 1, b], table[k - 1, b + half])
    return mask, table


@njit(cache=True)
def _in_block(a, mask, l, r):
    b0 = (r // BLOCK) * BLOCK
    sh = np.uint64(l - b0)
    m = (mask[r] >> sh) << sh
    low = m & (~m + np.uint64(1))
    idx = 0
    while low > np.uint64(1):
        low >>= np.uint64(1)
        idx += 1
    return a[b0 + idx]


@njit(cache=True)
def rmq_query(a, mask, table, l, r):
    bl = l // BLOCK
    br = r // BLOCK
    if bl == br:
        return _in_block(a, mask, l, r)
    v = min(_in_block(a, mask, l, bl * BLOCK + BLOCK - 1), _in_block(a, mask, br * BLOCK, r))
    if bl + 1 <= br - 1:
        lo = bl + 1
        width = br - lo
        k = 0
        while (2 << k) <= width:
            k += 1
        v = min(v, min(table[k, lo], table[k, br - (1 << k)]))
    return v


@njit(cache=True)
def manacher(s):
    """Maximal palindrome length for every center2 = 2..2n (index center2-2)."""
    n = len(s)
    out = np.zeros(2 * n - 1, dtype=np.int64)
    d1 = np.zeros(n, dtype=np.int64)
    l, r = 0, -1
    for i in range(n):
        k = 1
        if i <= r:
            k = min(d1[l + r - i], r - i + 1)
        while i - k >= 0 and i + k < n and s[i - k] == s[i + k]:
            k += 1
        d1[i] = k
        if i + k - 1 > r:
            l, r = i - k + 1, i + k - 1
        out[2 * i] = 2 * k - 1
    d2 = np.zeros(n, dtype=np.int64)
    l, r = 0, -1
    for i in range(n):
        k = 0
        if i <= r:
            k = min(d2[l + r - i + 1], r - i + 1)
        while i - k - 1 >= 0 and i + k < n and s[i - k - 1] == s[i + k]:
            k += 1
        d2[i] = k
        if i + k - 1 > r:
            l, r = i - k, i + k - 1
        if i > 0:
            out[2 * i - 1] = 2 * k
    return out


@njit(cache=True)
def bucket_groups(keypos, lens, n):
    """Bucket palindromes by position (1..n), ascending length, then split
    each bucket into maximal runs of equal consecutive difference.

    Returns (ptr, gs, gd, gt); the groups of position p are
    ptr[p]..ptr[p+1]-1.
    """
    cnt = len(lens)
    # counting sort by length, then stable counting sort by position
    c = np.zeros(n + 2, dtype=np.int64)
    for x in range(cnt):
        c[lens[x]] += 1
    acc = 0
    for v in range(n + 2):
        t = c[v]
        c[v] = acc
        acc += t
    by_len = np.empty(cnt, dtype=np.int64)
    for x in range(cnt):
        by_len[c[lens[x]]] = x
        c[lens[x]] += 1
    c[:] = 0
    for x in range(cnt):
        c[keypos[x]] += 1
    acc = 0
    for v in range(n + 2):
        t = c[v]
        c[v] = acc
        acc += t
    order = np.empty(cnt, dtype=np.int64)
    for y in range(cnt):
        x = by_len[y]
        order[c[keypos[x]]] = x
        c[keypos[x]] += 1

    gs = np.empty(cnt, dtype=np.int64)
    gd = np.empty(cnt, dtype=np.int64)
    gt = np.empty(cnt, dtype=np.int64)
    ptr = np.zeros(n + 2, dtype=np.int64)
    ng = 0
    y = 0
    for p in range(n + 2):
        ptr[p] = ng
        prev = 0
        first = True
        while y < cnt and keypos[order[y]] == p:
            L = lens[order[y]]
            d = 0 if first else L - prev
            if not first and gt[ng - 1] >= 1 and gd[ng - 1] == d:
                gt[ng - 1] += 1
            else:
                gs[ng] = L
                gd[ng] = d
                gt[ng] = 1
                ng += 1
            first = False
            prev = L
            y += 1
    return ptr, gs[:ng].copy(), gd[:ng].copy(), gt[:ng].copy()


@njit(cache=True)
def _find(uf, x):
    root = x
    while uf[root] != root:
        root = uf[root]
    while uf[x] != root:
        nxt = uf[x]
        uf[x] = root
        x = nxt
    return root


@njit(cache=True)
def build_group_trees(n, ptr, gs, gd, gt, rank, lcp, mask, table):
    """Per text position: sort the reversed-prefix strings W_r by rank,
    derive adjacent lcps, and build the difference tree bottom-up.

    Offsets: for position p with groups o = ptr[p] .. ptr[p+1]-1 the slot
    arrays use o + j, node arrays use 2*o + node (leaves 0..m-1, the node
    of group r is m + r) and jump pointers use (o + r) * JUMP_LEVELS + k.
    """
    total = len(gs)
    slot_group = np.empty(total, dtype=np.int64)
    group_slot = np.empty(total, dtype=np.int64)
    slot_lcp = np.zeros(total, dtype=np.int64)
    node_parent = np.full(2 * total, -1, dtype=np.int64)
    group_depth = np.zeros(total, dtype=np.int64)
    jump = np.full(total * JUMP_LEVELS, -1, dtype=np.int64)
    keys = np.empty(64, dtype=np.int64)
    uf = np.empty(64, dtype=np.int64)
    top = np.empty(64, dtype=np.int64)
    lo = np.empty(64, dtype=np.int64)
    hi = np.empty(64, dtype=np.int64)
    for p in range(1, n + 1):
        o = ptr[p]
        m = ptr[p + 1] - o
        if m == 0:
            continue
        if m > len(keys):
            keys = np.empty(2 * m, dtype=np.int64)
            uf = np.empty(2 * m, dtype=np.int64)
            top = np.empty(2 * m, dtype=np.int64)
            lo = np.empty(2 * m, dtype=np.int64)
            hi = np.empty(2 * m, dtype=np.int64)
        prev_long = 0
        for r in range(m):
            e = p - prev_long
            # rev(T[1..e]) starts at n + 1 + (n - e) in T $ rev(T) #
            keys[r] = rank[2 * n + 1 - e]
            prev_long = gs[o + r] + (gt[o + r] - 1) * gd[o + r]
        order = np.argsort(keys[:m])
        for j in range(m):
            slot_group[o + j] = order[j]
            group_slot[o + order[j]] = j
        for j in range(1, m):
            a = keys[order[j - 1]]
            b = keys[order[j]]
            slot_lcp[o + j] = rmq_query(lcp, mask, table, a + 1, b)
        for j in range(m):
            uf[j] = j
            top[j] = j
            lo[j] = j
            hi[j] = j
        base = 2 * o
        for r in range(m - 1, -1, -1):
            d = gd[o + r]
            node = m + r
            c = _find(uf, group_slot[o + r])
            node_parent[base + top[c]] = node
            a_lo = lo[c]
            a_hi = hi[c]
            while a_lo > 0 and slot_lcp[o + a_lo] >= d:
                c2 = _find(uf, a_lo - 1)
                node_parent[base + top[c2]] = node
                uf[c2] = c
                a_lo = lo[c2]
            while a_hi < m - 1 and slot_lcp[o + a_hi + 1] >= d:
                c2 = _find(uf, a_hi + 1)
                node_parent[base + top[c2]] = node
                uf[c2] = c
                a_hi = hi[c2]
            top[c] = node
            lo[c] = a_lo
            hi[c] = a_hi
        for r in range(1, m):
            par = node_parent[base + m + r] - m
            group_depth[o + r] = group_depth[o + par] + 1
            jb = (o + r) * JUMP_LEVELS
            jump[jb] = par
            for k in range(1, JUMP_LEVELS):
                prev = jump[jb + k - 1]
                if prev < 0:
                    break
                jump[jb + k] = jump[(o + prev) * JUMP_LEVELS + k - 1]
    return slot_group, group_slot, slot_lcp, node_parent, group_depth, jump


@njit(cache=True)
def prefix_sweep(lens, n):
    """Longest palindrome inside T[1..k] for every k, with a start position.

    The longest palindrome ending at k is the maximal palindrome with the
    leftmost center whose right end reaches k, cut back to end at k.
    """
    best = np.zeros(n + 1, dtype=np.int64)
    start = np.zeros(n + 1, dtype=np.int64)
    c2 = 2
    for k in range(1, n + 1):
        while (c2 + lens[c2 - 2] - 1) // 2 < k:
            c2 += 1
        length = 2 * k - c2 + 1
        if length > best[k - 1]:
            best[k] = length
            start[k] = k - length + 1
        else:
            best[k] = best[k - 1]
            start[k] = start[k - 1]
    return best, start
