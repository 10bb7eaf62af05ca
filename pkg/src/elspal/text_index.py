"""Suffix-array index over ``T $ rev(T) #`` answering LCE queries in O(1).

Positions in the public functions are 1-based, matching the usual
stringology notation ``T[1..n]``.
"""
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import _kernels

SENTINEL_MID = 0
SENTINEL_END = 1


class RangeMin:
    """Constant-time range minimum over a fixed integer array.

    Per-position 64-bit stack masks answer in-block queries; a sparse
    table over block minima answers the rest, so the structure takes
    O(n) cells.
    """

    def __init__(self, values):
        self.values = values
        self.mask, self.table = _kernels.rmq_build(values)

    @property
    def cells(self):
        return self.mask.size + self.table.size

    @cached_property
    def _lists(self):
        return self.values.tolist(), self.mask.tolist(), self.table.tolist()

    def _block(self, l, r):
        vals, mask, _ = self._lists
        b0 = r & ~63
        m = mask[r] >> (l - b0)
        return vals[l + ((m & -m).bit_length() - 1)]

    def __call__(self, l, r):
        """Minimum of values[l..r] (inclusive, 0-based)."""
        bl, br = l >> 6, r >> 6
        if bl == br:
            return self._block(l, r)
        v = min(self._block(l, (bl << 6) + 63), self._block(br << 6, r))
        if br - bl > 1:
            table = self._lists[2]
            lo = bl + 1
            k = (br - lo).bit_length() - 1
            v = min(v, table[k][lo], table[k][br - (1 << k)])
        return v


@dataclass(eq=False)
class TextIndex:
    text: bytes
    alphabet_map: np.ndarray
    combined: np.ndarray
    sa: np.ndarray
    rank: np.ndarray
    lcp: np.ndarray
    rmq: RangeMin = field(repr=False)

    @property
    def n(self):
        return len(self.text)

    @property
    def cells(self):
        """Number of integer cells held by the index."""
        return (
            self.combined.size + self.sa.size + self.rank.size
            + self.lcp.size + self.rmq.cells
        )

    # The reversed-text structures are the rev(T) half of the combined
    # arrays: suffix k of rev(T) is combined suffix n + 1 + k.
    @property
    def rank_rev(self):
        n = self.n
        return self.rank[n + 1: 2 * n + 1]

    @property
    def sa_rev(self):
        n = self.n
        sel = self.sa[(self.sa > n) & (self.sa <= 2 * n)]
        return sel - (n + 1)

    @property
    def lcp_rev(self):
        """Adjacent lcps of the rev(T) suffixes in sorted order."""
        n = self.n
        ranks = np.sort(self.rank_rev)
        out = np.zeros(n, dtype=np.int64)
        for x in range(1, n):
            out[x] = self.rmq(int(ranks[x - 1]) + 1, int(ranks[x]))
        return out

    @cached_property
    def _rank_list(self):
        return self.rank.tolist()

    def suffix_lcp(self, a, b):
        """lcp of the combined-string suffixes starting at 0-based a and b."""
        rank = self._rank_list
        ra, rb = rank[a], rank[b]
        if ra > rb:
            ra, rb = rb, ra
        return self.rmq(ra + 1, rb)

    # Unchecked variants accept any 0 <= i, j <= n + 1 and treat empty
    # prefixes or suffixes as having lcp 0.
    def rlce(self, i, j):
        n = self.n
        if i > n or j > n:
            return 0
        if i == j:
            return n - i + 1
        return self.suffix_lcp(i - 1, j - 1)

    def llce(self, i, j):
        if i < 1 or j < 1:
            return 0
        if i == j:
            return i
        n = self.n
        return self.suffix_lcp(2 * n + 1 - i, 2 * n + 1 - j)

    def olce(self, i, j):
        n = self.n
        if i < 1 or j > n:
            return 0
        return self.suffix_lcp(2 * n + 1 - i, j - 1)

    def rev_prefix_rank(self, e):
        """Rank of rev(T[1..e]) among all suffixes of the combined string."""
        return self._rank_list[2 * self.n + 1 - e]


def build_text_index(text):
    """Build the LCE index for a non-empty byte string."""
    text = bytes(text)
    n = len(text)
    if n == 0:
        raise ValueError("text must contain at least one byte")
    alphabet_map = np.arange(2, 258, dtype=np.int64)
    raw = np.frombuffer(text, dtype=np.uint8).astype(np.int64)
    mapped = alphabet_map[raw]
    combined = np.concatenate(
        (mapped, [SENTINEL_MID], mapped[::-1], [SENTINEL_END])
    ).astype(np.int64)
    sa, rank = _kernels.suffix_array(combined)
    lcp = _kernels.kasai(combined, sa, rank)
    return TextIndex(text, alphabet_map, combined, sa, rank, lcp, RangeMin(lcp))


def _check(idx, *positions):
    for p in positions:
        if not 1 <= p <= idx.n:
            raise IndexError(f"position {p} outside 1..{idx.n}")


def right_lce(idx, i, j):
    """lcp(T[i..n], T[j..n])."""
    _check(idx, i, j)
    return idx.rlce(i, j)


def left_lce(idx, i, j):
    """lcp(rev(T[1..i]), rev(T[1..j]))."""
    _check(idx, i, j)
    return idx.llce(i, j)


def out_lce(idx, i, j):
    """lcp(rev(T[1..i]), T[j..n]) for i < j."""
    _check(idx, i, j)
    if i >= j:
        raise ValueError(f"out_lce needs i < j, got i={i}, j={j}")
    return idx.olce(i, j)
