"""Per-position sparse suffix arrays over reversed prefixes and the
difference trees used to locate the widest fully-extending group.

For a position i with groups G_1..G_m (increasing common difference) the
strings are W_1 = rev(T[1..i]) and W_r = rev(T[1..i - |L_{r-1}|]), where
L_{r-1} is the longest member of the previous group.  Group ids returned
by this module are 0-based (group r - 1 is G_r).
"""
from dataclasses import dataclass
from functools import cached_property

from . import _kernels

JUMP_LEVELS = _kernels.JUMP_LEVELS


@dataclass
class PositionGroupIndex:
    pos: int
    groups: list  # (s, d, t) per group id
    ends: list  # W_r = rev(T[1..ends[r]])
    entries: list  # group id at each sorted slot
    ranks: list  # combined-SA rank at each sorted slot
    lcp_i: list  # lcp of slot j-1 and slot j (slot 0 holds 0)
    d_i: list  # common difference of the group at each slot
    parent: list  # node -> parent node; leaves 0..m-1, group r is m + r
    depth: list  # depth of each group node (root = group 0)

    @property
    def m(self):
        return len(self.groups)

    def path_values(self, slot):
        """Differences on the root-to-leaf path of ``slot``, root first."""
        out = []
        node = self.parent[slot]
        while node != -1:
            out.append(self.groups[node - self.m][1])
            node = self.parent[node]
        return out[::-1]


class GroupIndex:
    def __init__(self, text_index, buckets, arrays):
        self.text_index = text_index
        self.buckets = buckets
        (self.slot_group, self.group_slot, self.slot_lcp,
         self.node_parent, self.group_depth, self.jump) = arrays

    @property
    def cells(self):
        return sum(a.size for a in (
            self.slot_group, self.group_slot, self.slot_lcp,
            self.node_parent, self.group_depth, self.jump))

    @cached_property
    def _lists(self):
        return (self.slot_group.tolist(), self.group_slot.tolist(),
                self.node_parent.tolist(), self.group_depth.tolist(),
                self.jump.tolist())

    def m(self, i):
        lo, hi = self.buckets.span(i)
        return hi - lo

    def ends(self, i):
        out = []
        prev = 0
        for s, d, t in self.buckets.triples(i):
            out.append(i - prev)
            prev = s + (t - 1) * d
        return out

    def height(self, i):
        lo, hi = self.buckets.span(i)
        depth = self._lists[3]
        return max(depth[lo:hi], default=0) + 1 if hi > lo else 0

    def position(self, i):
        lo, hi = self.buckets.span(i)
        slot_group, _, parent, depth, _ = self._lists
        groups = self.buckets.triples(i)
        ends = self.ends(i)
        entries = slot_group[lo:hi]
        return PositionGroupIndex(
            pos=i,
            groups=groups,
            ends=ends,
            entries=entries,
            ranks=[self.text_index.rev_prefix_rank(ends[r]) for r in entries],
            lcp_i=self.slot_lcp[lo:hi].tolist(),
            d_i=[groups[r][1] for r in entries],
            parent=parent[2 * lo: 2 * hi],
            depth=depth[lo:hi],
        )


def build_group_index_all(text_index, palindrome_sets):
    """Sparse suffix arrays and difference trees for every end position."""
    b = palindrome_sets.by_end
    rmq = text_index.rmq
    arrays = _kernels.build_group_trees(
        text_index.n, b.ptr, b.gs, b.gd, b.gt,
        text_index.rank, text_index.lcp, rmq.mask, rmq.table)
    return GroupIndex(text_index, b, arrays)


def find_w(gi, i, matcher, counters=None):
    """Binary search the sorted W strings at position i for the one with
    the longest common prefix with the matcher's string Z.

    Every probe gets its exact lcp from ``matcher`` (which shares matched
    characters across calls), so the search both locates the insertion
    point of Z and sees its two neighbours, one of which attains the
    maximum.  Returns (slot, lcp).
    """
    lo_g, hi_g = gi.buckets.span(i)
    m = hi_g - lo_g
    slot_group = gi._lists[0]
    ends = gi.ends(i)
    text = gi.text_index.text
    best_slot, best = 0, -1
    lo, hi = 0, m
    while lo < hi:
        mid = (lo + hi) // 2
        e = ends[slot_group[lo_g + mid]]
        lam = matcher.lcp(e)
        if counters is not None:
            counters.probes += 1
        if lam > best:
            best_slot, best = mid, lam
        w_char = text[e - lam - 1] + 2 if lam < e else 1
        if w_char < matcher.z_char(lam):
            lo = mid + 1
        else:
            hi = mid
    return best_slot, best


def find_g_k(gi, i, slot, lam, counters=None):
    """Deepest group on the root path of ``slot`` whose difference is at
    most ``lam``; None when only the root (d = 0) qualifies."""
    lo_g, hi_g = gi.buckets.span(i)
    m = hi_g - lo_g
    if not 0 <= slot < m:
        raise IndexError(f"slot {slot} outside 0..{m - 1}")
    _, _, parent, depth, jump = gi._lists
    gd = gi.buckets._lists[2]
    r = parent[2 * lo_g + slot] - m

    def probe(x):
        if counters is not None:
            counters.probes += 1
        return gd[lo_g + x]

    if probe(r) > lam:
        for k in range(depth[lo_g + r].bit_length() - 1, -1, -1):
            a = jump[(lo_g + r) * JUMP_LEVELS + k]
            if a >= 0 and probe(a) > lam:
                r = a
        r = jump[(lo_g + r) * JUMP_LEVELS]
    return r if r > 0 else None
