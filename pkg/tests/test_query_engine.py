import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import _suites
from _brute import edited, is_pal, lspal
from elspal.query_engine import (
    Counters,
    ELSPalIndex,
    GroupExtensionParams,
    _EndSide,
    best_in_group,
    bound_violations,
    extended_candidate_end,
    member_extension,
    normalize_edit,
    unchanged_shortened_candidate,
)

Y = b"accbaaabaaabaaabaaabaaabaaabaa"
X = b"abaaabaaabccc"
T = Y + b"ddd"


@pytest.mark.parametrize("text, i, j, x, expect", [
    (b"abaab", 3, 3, b"", 3),
    (b"abaab", 1, 5, b"abaab", 4),
    (T, 31, 33, X, 41),
])
def test_examples(text, i, j, x, expect):
    assert lspal(edited(text, i, j, x)) == expect
    assert ELSPalIndex(text).query(i, j, x).length == expect


def test_accb_aaab_group_parameters():
    index = ELSPalIndex(T)
    trace = {}
    ctx = normalize_edit(index, 31, 33, X)
    assert extended_candidate_end(index, ctx, paranoid=True, trace=trace)[0] == 41
    p = trace["params"][3]
    assert (p.s, p.d, p.t) == (9, 4, 5)
    assert (p.alpha, p.beta, p.gamma) == (10, 2, 12)
    assert [p.s + (j - 1) * p.d + 2 * member_extension(p, j) for j in range(1, 6)] == [29, 33, 41, 33, 29]
    assert best_in_group(p) == (3, 41)


def test_member_extensions_match_brute_force():
    # Every member of every group, on periodic texts where the closed form
    # is exercised hardest.
    rng = random.Random(4)
    checked = 0
    while checked < 3000:
        n = rng.randint(2, 40)
        unit = rng.choice((b"a", b"ab", b"aab", b"aaab", b"abaab"))
        t = (unit * n)[:n]
        index = ELSPalIndex(t)
        i = rng.randint(2, n + 1)
        j = rng.randint(i - 1, min(n, i + 2))
        x = (unit * 9)[rng.randrange(len(unit)):][: rng.randint(0, 12)]
        ctx = normalize_edit(index, i, j, x)
        if ctx.case == "identical" or not 1 <= ctx.p_b - 1 <= n:
            continue
        side = _EndSide(index.forward, ctx, Counters())
        tp = edited(t, i, j, x)
        pos = ctx.p_b - 1
        for r, (s, d, k) in enumerate(side.groups):
            p = side.params(r)
            for m in range(1, k + 1):
                length = s + (m - 1) * d
                lo, hi = pos - length, pos + 1
                e = 0
                while lo - e >= 1 and hi + e <= len(tp) and tp[lo - e - 1] == tp[hi + e - 1]:
                    e += 1
                assert member_extension(p, m) == e, (t, i, j, x, r, m)
                checked += 1


def test_best_in_group_validation():
    with pytest.raises(ValueError):
        best_in_group(GroupExtensionParams(1, -1, 1, 0, 0))
    with pytest.raises(ValueError):
        best_in_group(GroupExtensionParams(1, 1, 0, 0, 0))


def test_normalize_edit():
    index = ELSPalIndex(b"abaab")
    ctx = normalize_edit(index, 2, 3, b"bx")
    assert (ctx.j1, ctx.j2, ctx.case) == (1, 0, "case2")
    assert normalize_edit(index, 2, 3, b"ba").case == "identical"
    assert normalize_edit(index, 3, 3, b"b").case == "case1"
    with pytest.raises(ValueError):
        normalize_edit(index, 0, 1, b"")
    with pytest.raises(ValueError):
        normalize_edit(index, 3, 6, b"")


def test_empty_result_and_whole_replacement():
    index = ELSPalIndex(b"abc")
    assert index.query(1, 3, b"").length == 0
    assert index.query(1, 3, b"xyzzy").length == lspal(b"xyzzy") == 4
    with pytest.raises(ValueError):
        ELSPalIndex(b"")


def test_witness_and_monotone_sanity():
    rng = random.Random(9)
    for _ in range(300):
        n = rng.randint(1, 50)
        t = bytes(rng.choice(b"ab") for _ in range(n))
        index = ELSPalIndex(t)
        i = rng.randint(1, n + 1)
        j = rng.randint(i - 1, n)
        x = bytes(rng.choice(b"ab") for _ in range(rng.randint(0, 6)))
        ans = index.query(i, j, x, witness=True)
        tp = edited(t, i, j, x)
        assert ans.length == lspal(tp)
        ctx = normalize_edit(index, i, j, x)
        if ctx.case != "identical":
            assert ans.length >= unchanged_shortened_candidate(index, ctx)[0]
        if tp:
            start, length = ans.witness
            assert length == ans.length >= 1
            assert is_pal(tp[start - 1: start - 1 + length])


texts = st.text(alphabet="abc", min_size=1, max_size=30).map(str.encode)
patches = st.text(alphabet="abc", max_size=8).map(str.encode)


@settings(max_examples=400, deadline=None)
@given(texts, st.data(), patches)
def test_fast_and_paranoid_match_brute_force(t, data, x):
    n = len(t)
    i = data.draw(st.integers(1, n + 1))
    j = data.draw(st.integers(i - 1, n))
    index = ELSPalIndex(t)
    expect = lspal(edited(t, i, j, x))
    fast = index.query(i, j, x)
    assert fast.length == expect
    assert index.query(i, j, x, paranoid=True).length == expect
    assert bound_violations(fast.counters, len(x)) == []


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_beta_equals_next_alpha(seed):
    _, bad, first = _suites.beta_equals_next_alpha(random.Random(seed), 50)
    assert bad == 0, first


def test_query_leaves_text_untouched():
    index = ELSPalIndex(b"abaab")
    before = index.text
    index.query(2, 4, b"zzzz")
    assert index.text == before == b"abaab"
    assert index.query(1, 5, b"abaab").length == 4
