"""Maximal palindromes, their end/begin buckets and arithmetic groups."""
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import _kernels


@dataclass(frozen=True)
class MaximalPalindrome:
    center2: int
    length: int
    n: int

    @property
    def start(self):
        return (self.center2 - self.length + 1) // 2

    @property
    def end(self):
        return (self.center2 + self.length - 1) // 2


@dataclass(frozen=True)
class Group:
    """Lengths s, s + d, ..., s + (t - 1) d of palindromes sharing an end
    (or begin) position."""

    s: int
    d: int
    t: int

    def __post_init__(self):
        if self.t < 1 or self.d < 0 or self.s < 1:
            raise ValueError(f"invalid group {self}")

    def member(self, j):
        """1-based j-th shortest length."""
        return self.s + (j - 1) * self.d

    @property
    def longest(self):
        return self.s + (self.t - 1) * self.d

    def members(self):
        return [self.member(j) for j in range(1, self.t + 1)]

    def __contains__(self, length):
        if self.t == 1 or self.d == 0:
            return length == self.s
        off = length - self.s
        return 0 <= off <= (self.t - 1) * self.d and off % self.d == 0


class Buckets:
    """Read-only view of per-position groups stored in flat arrays."""

    def __init__(self, ptr, gs, gd, gt):
        self.ptr, self.gs, self.gd, self.gt = ptr, gs, gd, gt

    @cached_property
    def _lists(self):
        return self.ptr.tolist(), self.gs.tolist(), self.gd.tolist(), self.gt.tolist()

    def span(self, i):
        ptr = self._lists[0]
        return ptr[i], ptr[i + 1]

    def triples(self, i):
        """Groups at position i as (s, d, t) tuples, increasing d."""
        ptr, gs, gd, gt = self._lists
        return [(gs[x], gd[x], gt[x]) for x in range(ptr[i], ptr[i + 1])]

    def __getitem__(self, i):
        return [Group(*g) for g in self.triples(i)]

    def lengths(self, i):
        out = []
        for s, d, t in self.triples(i):
            out.extend(s + j * d for j in range(t))
        return out

    @property
    def cells(self):
        return self.ptr.size + self.gs.size + self.gd.size + self.gt.size


@dataclass(eq=False)
class PalindromeSets:
    n: int
    lengths: np.ndarray  # maximal palindrome length by center2 - 2
    by_end: Buckets
    by_begin: Buckets
    longest_prefix_pal: np.ndarray  # index k -> LSPal length of T[1..k]
    prefix_pal_start: np.ndarray
    longest_suffix_pal: np.ndarray  # index k -> LSPal length of T[k..n]

    @property
    def cells(self):
        return (
            self.lengths.size + self.by_end.cells + self.by_begin.cells
            + self.longest_prefix_pal.size + self.prefix_pal_start.size
            + self.longest_suffix_pal.size
        )


def maximal_lengths(text):
    if len(text) == 0:
        raise ValueError("text must contain at least one byte")
    return _kernels.manacher(np.frombuffer(bytes(text), dtype=np.uint8))


def compute_maximal_palindromes(text):
    """All 2n - 1 maximal palindromes, ordered by center."""
    lens = maximal_lengths(text)
    n = len(text)
    return [MaximalPalindrome(c + 2, int(L), n) for c, L in enumerate(lens.tolist())]


def _prefix_sweep(lens, n):
    return _kernels.prefix_sweep(np.asarray(lens, dtype=np.int64), n)


def longest_pal_in_every_prefix(text):
    """entry k (1..n) = length of the longest palindrome inside T[1..k]."""
    best, _ = _prefix_sweep(maximal_lengths(text), len(text))
    return best[1:].tolist()


def longest_pal_in_every_suffix(text):
    """entry k (1..n) = length of the longest palindrome inside T[k..n]."""
    return longest_pal_in_every_prefix(bytes(text)[::-1])[::-1]


def build_palindrome_sets(text, lens=None):
    text = bytes(text)
    n = len(text)
    if lens is None:
        lens = maximal_lengths(text)
    lens = np.asarray(lens, dtype=np.int64)
    if lens.size != 2 * n - 1:
        raise ValueError("expected one maximal palindrome per center")
    c2 = np.arange(2, 2 * n + 1, dtype=np.int64)
    keep = lens > 0
    L = lens[keep]
    ends = (c2[keep] + L - 1) // 2
    begins = c2[keep] - ends
    by_end = Buckets(*_kernels.bucket_groups(ends, L, n))
    by_begin = Buckets(*_kernels.bucket_groups(begins, L, n))
    best, start = _prefix_sweep(lens, n)
    rbest, _ = _prefix_sweep(lens[::-1].copy(), n)
    suffix = np.zeros(n + 2, dtype=np.int64)
    suffix[1: n + 1] = rbest[1:][::-1]
    return PalindromeSets(n, lens, by_end, by_begin, best, start, suffix)
