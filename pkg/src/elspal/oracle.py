"""Brute-force reference answers: materialize T' and scan it."""
from dataclasses import dataclass


@dataclass
class OracleAnswer:
    length: int
    witness: tuple  # (start, length), 1-based
    table: list  # maximal palindrome length by center2 - 2


def manacher_table(s):
    """Maximal palindrome lengths for center2 = 2..2n."""
    n = len(s)
    if n == 0:
        return []
    # interleave separators so every palindrome has odd length
    t = [None] * (2 * n + 1)
    t[1::2] = list(s)
    rad = [0] * len(t)
    c = r = 0
    for i in range(len(t)):
        k = min(rad[2 * c - i], r - i) if i < r else 0
        while i - k - 1 >= 0 and i + k + 1 < len(t) and t[i - k - 1] == t[i + k + 1]:
            k += 1
        rad[i] = k
        if i + k > r:
            c, r = i, i + k
    return rad[1:-1]


def quadratic_table(s):
    """Same table by expanding around every center."""
    n = len(s)
    out = []
    for c2 in range(2, 2 * n + 1):
        lo, hi = (c2 // 2 - 1, c2 // 2 - 1) if c2 % 2 == 0 else (c2 // 2 - 1, c2 // 2)
        while lo >= 0 and hi < n and s[lo] == s[hi]:
            lo -= 1
            hi += 1
        out.append(hi - lo - 1)
    return out


def naive_lspal(text):
    table = manacher_table(bytes(text))
    if not table:
        return OracleAnswer(0, None, [])
    length, c2 = max((L, c2) for c2, L in enumerate(table, start=2))
    return OracleAnswer(length, ((c2 - length + 1) // 2, length), table)


def edited(text, i, j, x):
    return bytes(text[: i - 1]) + bytes(x) + bytes(text[j:])


def oracle_query(text, i, j, x):
    n = len(text)
    if not (1 <= i <= n + 1 and i - 1 <= j <= n):
        raise ValueError(f"invalid interval [{i}, {j}] for text of length {n}")
    return naive_lspal(edited(text, i, j, x))
