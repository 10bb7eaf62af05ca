"""Longest palindromic substring after a block edit, answered on a static
index.

An edit replaces T[i..j] by X (``j = i - 1`` inserts) and the query reports
the longest palindrome of ``T' = T[1..i-1] X T[j+1..n]`` without building
T'.  Every palindrome of T' either lies in the unchanged prefix, lies in the
unchanged suffix, extends a maximal palindrome of T that ends just before
the first changed position (or, mirrored, begins just after the last one),
or is centred inside the changed block.
"""
import math
from dataclasses import dataclass, field, replace
from functools import cached_property

from .group_index import build_group_index_all, find_g_k, find_w
from .palindromes import build_palindrome_sets, maximal_lengths
from .text_index import build_text_index

# Buckets with at most this many groups are evaluated exhaustively.
SMALL_M = 3


@dataclass
class Counters:
    cmp: int = 0  # matching character comparisons
    lce: int = 0  # constant-time LCE queries
    probes: int = 0  # binary-search / tree-path probes
    groups: int = 0  # most groups evaluated on one side
    extras: int = 0  # most extra single members evaluated on one side
    m: int = 0  # largest bucket consulted
    height: int = 0  # tallest difference tree consulted

    def as_dict(self):
        return {"cmp": self.cmp, "lce": self.lce, "probes": self.probes,
                "groups": self.groups}


def bound_violations(counters, ell):
    """Names of the per-query operation budgets that ``counters`` exceeds."""
    c = counters
    probe_cap = (4 * math.ceil(math.log2(c.m + 1))
                 + 2 * math.ceil(math.log2(c.height + 1)))
    out = []
    if c.cmp > 3 * ell + 24:
        out.append("cmp")
    if c.lce > 48:
        out.append("lce")
    if c.probes > probe_cap:
        out.append("probes")
    if c.groups > 3 or c.extras > 2:
        out.append("groups")
    return out


@dataclass
class QueryAnswer:
    length: int
    witness: tuple = None  # (start, length), 1-based in T'
    counters: Counters = field(default_factory=Counters)


@dataclass(frozen=True)
class EditContext:
    n: int
    i_b: int
    i_e: int
    x: bytes
    j1: int
    j2: int
    case: str  # "identical", "case1" or "case2"

    @property
    def ell(self):
        return len(self.x)

    @property
    def ell_prime(self):
        return self.i_e - self.i_b + 1

    @cached_property
    def n_prime(self):
        return self.n - self.ell_prime + self.ell

    @cached_property
    def p_b(self):
        return self.i_b + self.j1

    @cached_property
    def p_e(self):
        return self.i_e - self.j2

    @cached_property
    def q(self):
        """Position in T' of T[p_e + 1]; T'[q..] equals T[p_e + 1..]."""
        return self.p_e + 1 + self.ell - self.ell_prime

    @property
    def h(self):
        lim = min(self.n, self.n_prime) + 1
        return min(self.p_b, lim)

    @property
    def l(self):
        lim = min(self.n, self.n_prime) + 1
        return min(self.n - self.p_e + 1, lim)

    def z_parts(self):
        """T'[p_b..] as a block of new characters followed by T[t..n].

        T'[q..] always equals T[p_e + 1..], so only T'[p_b..q-1] has to be
        read from X.
        """
        if self.p_b < self.q:
            return self.x[self.p_b - self.i_b: self.q - self.i_b], self.p_e + 1
        return b"", self.p_e + 1 + self.p_b - self.q

    def mirrored(self):
        n = self.n
        return replace(self, i_b=n - self.i_e + 1, i_e=n - self.i_b + 1,
                       x=self.x[::-1], j1=self.j2, j2=self.j1)

    def char(self, text, pos):
        """T'[pos] (1-based) read through T and X."""
        if pos < self.i_b:
            return text[pos - 1]
        if pos < self.i_b + self.ell:
            return self.x[pos - self.i_b]
        return text[pos - self.ell - self.i_b + self.i_e]


@dataclass
class GroupExtensionParams:
    s: int
    d: int
    t: int
    alpha: int  # extension of the shortest member
    beta: int  # extension of the longest member
    h: int = None  # member whose extension is not given by the closed form
    gamma: int = None  # extension of member h
    rho: int = 0  # how far the period extends left of the longest member

    @property
    def type2(self):
        return self.alpha >= self.d


class ZMatcher:
    """lcp(rev(T[1..e]), Z) for Z = block + T[t_start..n].

    Keeps the reversed prefix with the longest match seen so far; a new
    query first compares against it with one leftward LCE and only scans
    characters beyond that match, so each block character takes part in
    at most one matching comparison over the matcher's lifetime.
    """

    def __init__(self, idx, block, t_start, counters):
        self.idx = idx
        self.text = idx.text
        self.block = block
        self.t_start = t_start
        self.counters = counters
        self.ref = None
        self.tau = 0

    def z_char(self, k):
        if k < len(self.block):
            return self.block[k] + 2
        p = self.t_start + k - len(self.block)
        return self.text[p - 1] + 2 if p <= self.idx.n else -1

    def lcp(self, e):
        if e <= 0:
            return 0
        c = self.counters
        k = 0
        if self.ref is not None:
            c.lce += 1
            delta = self.idx.llce(e, self.ref)
            if delta != self.tau:
                return min(delta, self.tau)
            k = self.tau
        text, block = self.text, self.block
        blen = len(block)
        while k < blen and k < e and text[e - k - 1] == block[k]:
            k += 1
            c.cmp += 1
        if blen <= k < e:
            c.lce += 1
            k = blen + self.idx.olce(e - blen, self.t_start)
        if self.ref is None or k > self.tau:
            self.ref, self.tau = e, k
        return k


class _Side:
    """Index over one orientation of the text."""

    def __init__(self, text):
        self.text = text
        self.index = build_text_index(text)
        self.pals = build_palindrome_sets(text, maximal_lengths(text))
        self.groups = build_group_index_all(self.index, self.pals)
        # Queries read these as Python lists; convert once, up front.
        for holder in (self.index, self.pals.by_end, self.pals.by_begin, self.groups):
            getattr(holder, "_rank_list", None)
            getattr(holder, "_lists", None)
        self.index.rmq._lists

    @property
    def cells(self):
        return self.index.cells + self.pals.cells + self.groups.cells


class ELSPalIndex:
    """Preprocessed text answering longest-palindrome-after-edit queries."""

    def __init__(self, text):
        text = bytes(text)
        if not text:
            raise ValueError("text must contain at least one byte")
        self.text = text
        self.n = len(text)
        self.forward = _Side(text)
        self.mirror = _Side(text[::-1])
        pals = self.forward.pals
        self.lspal = int(pals.longest_prefix_pal[self.n])
        self.lspal_start = int(pals.prefix_pal_start[self.n])

    @property
    def cells(self):
        return self.forward.cells + self.mirror.cells

    def query(self, i, j, x, witness=False, paranoid=False):
        return elspal_query(self, i, j, x, witness=witness, paranoid=paranoid)


def normalize_edit(index, i, j, x, counters=None):
    """Validate the edit and compute the common prefix / suffix lengths
    j1, j2 between T and T' around the replaced interval."""
    n = index.n
    x = bytes(x)
    if not (1 <= i <= n + 1 and i - 1 <= j <= n):
        raise ValueError(f"invalid interval [{i}, {j}] for text of length {n}")
    c = counters if counters is not None else Counters()
    text, ell = index.text, len(x)
    idx = index.forward.index
    j1 = 0
    while j1 < ell and i + j1 <= n and text[i + j1 - 1] == x[j1]:
        j1 += 1
        c.cmp += 1
    if j1 == ell:
        c.lce += 1
        j1 += idx.rlce(i + ell, j + 1)
    # X[:j1] is already known to equal T[i..], so only the rest of X is
    # scanned from the right before handing over to a leftward LCE.
    head = min(j1, ell)
    j2 = 0
    while j2 < ell - head and j - j2 >= 1 and text[j - j2 - 1] == x[ell - 1 - j2]:
        j2 += 1
        c.cmp += 1
    if j2 == ell - head:
        c.lce += 1
        j2 += idx.llce(i + head - 1, j - j2)
    if ell == j - i + 1 and j1 >= ell:
        case = "identical"
    elif j1 == 0 and j2 == 0:
        case = "case1"
    else:
        case = "case2"
    return EditContext(n, i, j, x, j1, j2, case)


def batched_extension_scan(matcher, pos, lengths):
    """Extensions in T' of the palindromes of the given lengths ending at
    ``pos`` (positions after ``pos`` are read from Z)."""
    return [matcher.lcp(pos - s) for s in lengths]


def group_params(group, ext, left_lce):
    """Evaluate the representatives of a group.

    Reading leftwards, the strings in front of the members agree with one
    periodic string for rho + (t - j) d characters.  Unless the extension of
    the shortest member overruns that zone, member j extends by
    min(alpha, rho + (t - j) d), except for the single member whose zone
    ends exactly where Z leaves the period; that one is evaluated directly.
    """
    s, d, t = group
    alpha = ext(s)
    if t == 1:
        return GroupExtensionParams(s, d, t, alpha, alpha)
    st = s + (t - 1) * d
    rho = left_lce(st, st - d)
    if alpha >= (t - 1) * d + rho:
        return GroupExtensionParams(s, d, t, alpha, rho, rho=rho)
    h = gamma = None
    off = alpha - rho
    if off >= 0 and off % d == 0:
        h = t - off // d
        gamma = ext(s + (h - 1) * d)
    beta = gamma if h == t else min(alpha, rho)
    return GroupExtensionParams(s, d, t, alpha, beta, h, gamma, rho)


def member_extension(p, j):
    """Extension of the j-th shortest member (1-based) from the group
    parameters."""
    if p.t == 1:
        return p.alpha
    if p.alpha >= (p.t - 1) * p.d + p.rho:
        return p.alpha if j == 1 else (p.t - j) * p.d + p.rho
    if j == p.h:
        return p.gamma
    return min(p.alpha, p.rho + (p.t - j) * p.d)


def best_in_group(p):
    """(member index, extended length) maximizing the extension over the
    group."""
    if p.t < 1 or p.d < 0:
        raise ValueError(f"inconsistent group parameters {p}")
    if p.t == 1:
        return 1, p.s + 2 * p.alpha
    cands = {1, 2, p.t}
    if p.alpha > p.rho:
        # alpha = rho + (t - j) d at j = t - (alpha - rho) / d
        jc = p.t - (p.alpha - p.rho) // p.d
        cands.update((jc, jc + 1, jc - 1))
    if p.h is not None:
        cands.add(p.h)
    best = max((p.s + (j - 1) * p.d + 2 * member_extension(p, j), j)
               for j in cands if 1 <= j <= p.t)
    return best[1], best[0]


def _prime_extras(groups, k):
    """Lengths of u_k and u_k v_k u_k for the group G_k (0-based id k)."""
    s, d, _ = groups[k]
    u = s % d or d
    out = []
    for L in (u, u + d):
        if L < s:
            if not any(L in _group_set(g) for g in groups[:k]):
                raise AssertionError(f"length {L} missing below group {groups[k]}")
            out.append(L)
    return out


def _group_set(g):
    s, d, t = g
    return range(s, s + (t - 1) * d + 1, d) if d else (s,)


class _EndSide:
    """Extensions in T' of the maximal palindromes ending at p_b - 1, on one
    orientation of the text.  Group parameters are computed at most once
    and shared between the group search and the block sweep."""

    def __init__(self, side, ctx, counters):
        self.side = side
        self.ctx = ctx
        self.counters = counters
        self.pos = ctx.p_b - 1
        self.block, t_start = ctx.z_parts()
        n = side.index.n
        self.groups = side.pals.by_end.triples(self.pos) if 1 <= self.pos <= n else []
        self.matcher = ZMatcher(side.index, self.block, t_start, counters)
        self._params = {}

    def ext(self, length):
        return self.matcher.lcp(self.pos - length)

    def left_lce(self, a, b):
        self.counters.lce += 1
        return self.side.index.llce(self.pos - a, self.pos - b)

    def params(self, r):
        p = self._params.get(r)
        if p is None:
            p = self._params[r] = group_params(self.groups[r], self.ext, self.left_lce)
        return p

    def member_ext(self, length):
        for r, (s, d, t) in enumerate(self.groups):
            if s <= length <= s + (t - 1) * d:
                j = (length - s) // d + 1 if d else 1
                return member_extension(self.params(r), j)
        raise AssertionError(f"{length} is not a palindrome ending at {self.pos}")

    def best(self, paranoid, trace=None):
        """(length, start) of the longest extension, start in T' of this
        orientation."""
        groups = self.groups
        m = len(groups)
        if m == 0:
            return 0, 0
        c = self.counters
        pos = self.pos
        c.m = max(c.m, m)
        extras = []
        if paranoid or m <= SMALL_M:
            chosen = list(range(m))
        else:
            gi = self.side.groups
            c.height = max(c.height, gi.height(pos))
            slot, lam = find_w(gi, pos, self.matcher, c)
            k = find_g_k(gi, pos, slot, lam, c)
            chosen = sorted({m - 2, m - 1} | ({k} if k is not None else set()))
            if k is not None:
                extras = _prime_extras(groups, k)
            if trace is not None:
                trace.update(slot=slot, lam=lam, k=k)
        c.groups = max(c.groups, len(chosen))
        c.extras = max(c.extras, len(extras))
        best_len, best_start = 0, 0
        for r in chosen:
            p = self.params(r)
            if trace is not None:
                trace.setdefault("params", {})[r] = p
            j, length = best_in_group(p)
            if length > best_len:
                s = p.s + (j - 1) * p.d
                best_len, best_start = length, pos - s + 1 - (length - s) // 2
        for L in extras:
            length = L + 2 * self.ext(L)
            if length > best_len:
                best_len, best_start = length, pos - L + 1 - (length - L) // 2
        return best_len, best_start

    def sweep(self, hi):
        """Longest palindrome of T' centred in the block, over doubled
        centres 2 p_b - 1 .. hi.

        A Manacher pass seeded with the matcher's longest extension.  Radii
        of mirrored centres left of the block come from the maximal
        palindromes of the text, so only characters beyond the rightmost
        palindrome end seen so far are compared.  Callers keep hi at most
        p_b + q - 1, so a palindrome reaching the unchanged suffix has its
        left end in the unchanged prefix.  Those palindromes all end at
        the same frontier and are resolved together at the end by
        suffix_group_extension.
        """
        ctx, c = self.ctx, self.counters
        pb, q, n1 = ctx.p_b, ctx.q, ctx.n_prime
        text, block = self.side.text, self.block
        tlens = self.side.pals.lengths
        pos = self.pos
        m = self.matcher
        R, C2, exact = pos, None, True
        lens = {}
        pending = []

        def mirror_len(m2, cap):
            if m2 >= 2 * pb - 1:
                return lens[m2]
            L = int(tlens[m2 - 2])
            end = (m2 + L - 1) // 2
            if end < pos:
                return L
            if end > pos:
                # cut back at the first changed position
                return 2 * pos - m2 + 1
            if L > cap:
                return L  # a member only grows in T'
            return L + 2 * self.member_ext(L)

        best_len, best_start = 0, 0
        for c2 in range(2 * pb - 1, hi + 1):
            if not pending and m.ref is not None and pos + m.tau > R:
                R, C2 = pos + m.tau, m.ref + pb
            cap = 2 * R - c2 + 1
            grow = True
            if C2 is not None and cap >= 1:
                m2 = 2 * C2 - c2
                if m2 == c2:
                    length, grow = cap, False
                else:
                    lm = mirror_len(m2, cap)
                    length = min(lm, cap)
                    grow = lm == cap or (lm > cap and not exact)
            else:
                length = 1 - c2 % 2
            a = (c2 - length + 1) // 2
            b = (c2 + length - 1) // 2
            while grow and a > 1 and b < n1:
                if b + 1 >= q:
                    pending.append(b - a + 1)
                    if b > R:
                        R, C2, exact = b, c2, False
                    break
                left = text[a - 2] if a - 1 < pb else block[a - 1 - pb]
                if left != block[b + 1 - pb]:
                    break
                c.cmp += 1
                a, b = a - 1, b + 1
            length = b - a + 1
            lens[c2] = length
            if b > R:
                R, C2, exact = b, c2, True
            if length > best_len:
                best_len, best_start = length, a
        if pending:
            length, start = suffix_group_extension(self, R, pending[::-1])
            if length > best_len:
                best_len, best_start = length, start
        return best_len, best_start


def suffix_group_extension(es, R, lengths):
    """Longest extension of palindromes T'[R - L + 1..R] (L in ascending
    ``lengths``) whose left ends lie in the unchanged prefix, against the
    unchanged suffix T'[R + 1..].

    Consecutive lengths with equal difference form a group whose longest
    member has that difference as a period, so the same closed form as for
    the buckets of the text applies and every group costs O(1) LCEs.
    """
    ctx, c = es.ctx, es.counters
    idx = es.side.index
    tail = R + 1 - ctx.q + ctx.p_e + 1

    def ext(L):
        c.lce += 1
        return idx.olce(R - L, tail)

    def left_lce(a, b):
        c.lce += 1
        return idx.llce(R - a, R - b)

    groups = []
    for L in lengths:
        if groups:
            s0, d0, t0 = groups[-1]
            if t0 == 1 or L - (s0 + (t0 - 1) * d0) == d0:
                groups[-1] = (s0, L - s0 if t0 == 1 else d0, t0 + 1)
                continue
        groups.append((L, 0, 1))
    best_len, best_start = 0, 0
    for g in groups:
        j, length = best_in_group(group_params(g, ext, left_lce))
        if length > best_len:
            L = g[0] + (j - 1) * g[1]
            best_len, best_start = length, R - L + 1 - (length - L) // 2
    return best_len, best_start


def _end_sides(index, ctx, counters):
    return (_EndSide(index.forward, ctx, counters),
            _EndSide(index.mirror, ctx.mirrored(), counters))


def _unmirror(ctx, length, start):
    if length == 0:
        return 0, 0
    return length, ctx.n_prime - (start + length - 1) + 1


def extended_candidate_end(index, ctx, counters=None, paranoid=False, trace=None):
    """Best extension of a maximal palindrome ending at p_b - 1."""
    c = counters if counters is not None else Counters()
    return _EndSide(index.forward, ctx, c).best(paranoid, trace)


def extended_candidate_begin(index, ctx, counters=None, paranoid=False, trace=None):
    """Best extension of a maximal palindrome beginning at p_e + 1, computed
    on the reversed text and mapped back to T' coordinates."""
    c = counters if counters is not None else Counters()
    length, start = _EndSide(index.mirror, ctx.mirrored(), c).best(paranoid, trace)
    return _unmirror(ctx, length, start)


def unchanged_shortened_candidate(index, ctx):
    """Longest palindrome inside the untouched prefix T[1..p_b-1] or the
    untouched suffix T[p_e+1..n]."""
    n = index.n
    pre = index.forward.pals
    k = min(ctx.p_b - 1, n)
    best = (int(pre.longest_prefix_pal[k]), int(pre.prefix_pal_start[k]))
    suf = index.mirror.pals
    k = n - max(ctx.p_e, 0)
    length = int(suf.longest_prefix_pal[k])
    if length > best[0]:
        rstart = int(suf.prefix_pal_start[k])
        best = (length, ctx.n_prime - (rstart + length - 1) + 1)
    return best


def _block_sweeps(ctx, fwd, back):
    if ctx.q < ctx.p_b:
        return 0, 0
    left = fwd.sweep(ctx.p_b + ctx.q - 1)
    mc = back.ctx
    right = _unmirror(ctx, *back.sweep(mc.p_b + mc.q - 2))
    return max(left, right, key=lambda t: t[0])


def block_center_candidate(index, ctx, counters=None):
    """Longest palindrome of T' centred inside the changed region
    T'[p_b..q-1], including the two half-integer boundary centres."""
    c = counters if counters is not None else Counters()
    return _block_sweeps(ctx, *_end_sides(index, ctx, c))


def _manacher_counted(seq, counters):
    """Odd and even radii (as palindrome lengths by local center2)."""
    w = len(seq)
    out = [0] * (2 * w + 1)
    d1 = [0] * w
    l, r = 0, -1
    for i in range(w):
        k = 1 if i > r else min(d1[l + r - i], r - i + 1)
        while i - k >= 0 and i + k < w and seq[i - k] == seq[i + k]:
            k += 1
            counters.cmp += 1
        d1[i] = k
        if i + k - 1 > r:
            l, r = i - k + 1, i + k - 1
        out[2 * i + 2] = 2 * k - 1
    d2 = [0] * w
    l, r = 0, -1
    for i in range(w):
        k = 0 if i > r else min(d2[l + r - i + 1], r - i + 1)
        while i - k - 1 >= 0 and i + k < w and seq[i - k - 1] == seq[i + k]:
            k += 1
            counters.cmp += 1
        d2[i] = k
        if i + k - 1 > r:
            l, r = i - k, i + k - 1
        out[2 * i + 1] = 2 * k
    return out


def _lspal_direct(x, counters):
    if not x:
        return 0, 0
    lens = _manacher_counted(list(x), counters)
    length, c2 = max((L, c2) for c2, L in enumerate(lens) if c2 >= 2)
    return length, (c2 - length + 1) // 2


def elspal_query(index, i, j, x, witness=False, paranoid=False):
    """Length (and optionally a witness) of the longest palindrome of
    T[1..i-1] x T[j+1..n]; ``j = i - 1`` inserts x before position i."""
    c = Counters()
    ctx = normalize_edit(index, i, j, x, c)
    if ctx.case == "identical":
        ans = (index.lspal, index.lspal_start)
    elif ctx.i_b == 1 and ctx.i_e == index.n:
        ans = _lspal_direct(ctx.x, c)
    else:
        fwd, back = _end_sides(index, ctx, c)
        ans = max(
            unchanged_shortened_candidate(index, ctx),
            fwd.best(paranoid),
            _unmirror(ctx, *back.best(paranoid)),
            _block_sweeps(ctx, fwd, back),
            key=lambda t: t[0],
        )
    length, start = ans
    return QueryAnswer(length, (start, length) if witness and length else None, c)
