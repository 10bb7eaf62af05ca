"""Per-query work stays flat as the text grows: character comparisons track
|X| and the number of constant-time LCE calls is bounded."""
import random
import time

import numpy as np

from elspal import ELSPalIndex
from elspal.cli import family_text

rng = random.Random(0)
ell = 16

print(f"{'family':8} {'n':>8} {'build s':>8} {'cmp':>5} {'lce':>4} {'probes':>6} {'us/query':>9}")
for family in ("unary", "random", "fib", "period4"):
    for n in (1 << 12, 1 << 15, 1 << 18):
        text = family_text(family, n, rng)
        t0 = time.perf_counter()
        idx = ELSPalIndex(text)
        build = time.perf_counter() - t0
        rows = []
        t0 = time.perf_counter()
        for _ in range(200):
            i = rng.randint(1, n + 1)
            j = rng.randint(i - 1, min(n, i + ell - 1))
            x = bytes(rng.choice(b"ab") for _ in range(ell))
            c = idx.query(i, j, x).counters
            rows.append((c.cmp, c.lce, c.probes))
        per_query = (time.perf_counter() - t0) / 200 * 1e6
        worst = np.max(np.array(rows), axis=0)
        print(f"{family:8} {n:8d} {build:8.2f} {worst[0]:5d} {worst[1]:4d} {worst[2]:6d} {per_query:9.1f}")

# budget per query: cmp <= 3|X| + 24 = 72 here, lce <= 48
