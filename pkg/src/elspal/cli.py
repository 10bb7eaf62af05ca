"""Command-line front end: batch queries, self-test and benchmarks.

Queries are read as TSV lines ``i<TAB>j<TAB>X`` where X runs verbatim to
the end of the line (so X cannot contain a tab or a newline).  ``j = i - 1``
inserts X before position i.
"""
import argparse
import csv
import itertools
import json
import random
import sys
import time

from .oracle import edited, oracle_query
from .query_engine import ELSPalIndex, bound_violations

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

FAMILIES = ("unary", "random", "fib", "period4")


class QueryLineError(ValueError):
    pass


def parse_query_line(line, n):
    """Parse one TSV query line (bytes, without its newline)."""
    parts = line.split(b"\t", 2)
    if len(parts) != 3:
        raise QueryLineError("expected i<TAB>j<TAB>X")
    try:
        i, j = int(parts[0]), int(parts[1])
    except ValueError:
        raise QueryLineError("i and j must be integers") from None
    if not (1 <= i <= n + 1 and i - 1 <= j <= n):
        raise QueryLineError(f"interval [{i}, {j}] outside text of length {n}")
    return i, j, parts[2]


def family_text(family, n, rng):
    if family == "unary":
        return b"a" * n
    if family == "random":
        return bytes(rng.choice(b"ab") for _ in range(n))
    if family == "period4":
        return (b"aaab" * (n // 4 + 1))[:n]
    if family == "fib":
        a, b = b"a", b"ab"
        while len(b) < n:
            a, b = b, b + a
        return b[:n]
    raise ValueError(f"unknown family {family!r}")


def _read_text(path):
    with open(path, "rb") as f:
        text = f.read()
    if not text:
        raise OSError(f"{path}: text is empty")
    return text


def _iter_lines(stream):
    for raw in stream:
        yield raw[:-1] if raw.endswith(b"\n") else raw


def cmd_query(args, out, err):
    try:
        text = _read_text(args.text)
        stream = sys.stdin.buffer if args.stdin else open(args.queries, "rb")
    except OSError as e:
        print(f"error: {e}", file=err)
        return EXIT_USAGE
    index = ELSPalIndex(text)
    status = EXIT_OK
    with stream:
        # Queries run one at a time, so results come out in input order.
        for lineno, line in enumerate(_iter_lines(stream), 1):
            if not line.strip():
                continue
            try:
                i, j, x = parse_query_line(line, index.n)
            except QueryLineError as e:
                print(f"line {lineno}: {e}", file=err)
                if args.strict:
                    return EXIT_USAGE
                continue
            ans = index.query(i, j, x, witness=args.witness or args.check,
                              paranoid=args.paranoid)
            fields = [str(ans.length)]
            if args.witness:
                fields.append(str(ans.witness[0]) if ans.witness else "0")
            if args.stats:
                fields.append(json.dumps(ans.counters.as_dict(), separators=(",", ":")))
            print("\t".join(fields), file=out)
            if args.check:
                problem = _check(text, i, j, x, ans)
                if problem:
                    print(f"line {lineno}: check failed: {problem}", file=err)
                    status = EXIT_MISMATCH
    return status


def _check(text, i, j, x, ans):
    expect = oracle_query(text, i, j, x).length
    if ans.length != expect:
        return f"length {ans.length}, oracle {expect}"
    if ans.witness:
        start, length = ans.witness
        w = edited(text, i, j, x)[start - 1: start - 1 + length]
        if len(w) != length or w != w[::-1]:
            return f"witness {ans.witness} is not a palindrome"
    return None


def exhaustive_queries(max_n, alphabet=b"ab", max_ell=2):
    """Every text over ``alphabet`` up to ``max_n``, every interval and every
    X up to ``max_ell``, as (text, [(i, j, x), ...]) per text."""
    xs = [bytes(p) for ell in range(max_ell + 1)
          for p in itertools.product(alphabet, repeat=ell)]
    for n in range(1, max_n + 1):
        for t in itertools.product(alphabet, repeat=n):
            yield bytes(t), [(i, j, x) for i in range(1, n + 2)
                             for j in range(i - 1, n + 1) for x in xs]


def random_queries(rng, cases, max_n=2000, max_ell=64, per_text=10):
    """Random texts over alphabets of size 2, 3 and 26 with edits whose X is
    either random or copied (possibly reversed) from the text."""
    made = 0
    while made < cases:
        n = rng.randint(1, max_n)
        sigma = rng.choice((2, 3, 26))
        text = bytes(97 + rng.randrange(sigma) for _ in range(n))
        qs = []
        for _ in range(min(per_text, cases - made)):
            i = rng.randint(1, n + 1)
            j = rng.randint(i - 1, min(n, i - 1 + rng.randint(0, max_ell)))
            ell = rng.randint(0, max_ell)
            if rng.random() < 0.5:
                src = text[::-1] if rng.random() < 0.5 else text
                a = rng.randint(0, n)
                x = src[a: a + ell]
            else:
                x = bytes(97 + rng.randrange(sigma) for _ in range(ell))
            qs.append((i, j, x))
        made += len(qs)
        yield text, qs


def run_suite(suite, paranoid=True):
    """Compare fast path (and optionally paranoid path) against the oracle.

    Returns (queries, mismatches, budget_violations, first_failure)."""
    total = bad = over = 0
    first = None
    for text, qs in suite:
        index = ELSPalIndex(text)
        for i, j, x in qs:
            total += 1
            expect = oracle_query(text, i, j, x).length
            ans = index.query(i, j, x)
            got = [ans.length]
            if paranoid:
                got.append(index.query(i, j, x, paranoid=True).length)
            if any(g != expect for g in got):
                bad += 1
                first = first or (text, i, j, x, got, expect)
            if bound_violations(ans.counters, len(x)):
                over += 1
                first = first or (text, i, j, x, bound_violations(ans.counters, len(x)))
    return total, bad, over, first


def cmd_selftest(args, out, err):
    rng = random.Random(args.seed)
    ok = True
    for name, suite, paranoid in (
        (f"exhaustive n<={args.max_n}", exhaustive_queries(args.max_n), False),
        (f"random x{args.random_cases}", random_queries(rng, args.random_cases), True),
    ):
        t0 = time.perf_counter()
        total, bad, over, first = run_suite(suite, paranoid)
        verdict = "PASS" if bad == 0 and over == 0 else "FAIL"
        ok &= verdict == "PASS"
        print(f"{verdict} {name}: {total} queries, {bad} mismatches, "
              f"{over} budget violations ({time.perf_counter() - t0:.1f}s)", file=out)
        if first:
            print(f"  first failure: {first!r}", file=err)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_bench(args, out, err):
    rng = random.Random(args.seed)
    text = family_text(args.family, args.n, rng)
    alphabet = b"ab"
    t0 = time.perf_counter_ns()
    index = ELSPalIndex(text)
    build_ns = time.perf_counter_ns() - t0
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["family", "n", "ell", "rep", "i", "j", "length", "cmp", "lce",
                "probes", "groups", "build_ns", "query_ns"])
    n = args.n
    for rep in range(args.reps):
        i = rng.randint(1, n + 1)
        j = rng.randint(i - 1, min(n, i - 1 + args.ell))
        x = bytes(rng.choice(alphabet) for _ in range(args.ell))
        t0 = time.perf_counter_ns()
        ans = index.query(i, j, x)
        dt = time.perf_counter_ns() - t0
        c = ans.counters
        w.writerow([args.family, n, args.ell, rep, i, j, ans.length, c.cmp,
                    c.lce, c.probes, c.groups, build_ns, dt])
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="elspal", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("query", help="answer a batch of edit queries")
    q.add_argument("--text", required=True, help="file holding T as raw bytes")
    src = q.add_mutually_exclusive_group(required=True)
    src.add_argument("--queries", help="TSV file of i, j, X lines")
    src.add_argument("--stdin", action="store_true", help="read queries from stdin")
    q.add_argument("--witness", action="store_true",
                   help="also print the 1-based start of a longest palindrome")
    q.add_argument("--check", action="store_true", help="verify against the oracle")
    q.add_argument("--stats", action="store_true",
                   help="append a JSON object of operation counters")
    q.add_argument("--paranoid", action="store_true", help="evaluate every group")
    q.add_argument("--strict", action="store_true", help="stop at the first bad line")
    q.set_defaults(func=cmd_query)

    s = sub.add_parser("selftest", help="differential test against the oracle")
    s.add_argument("--max-n", type=int, default=6)
    s.add_argument("--random-cases", type=int, default=200)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_selftest)

    b = sub.add_parser("bench", help="CSV of per-query counters and timings")
    b.add_argument("--family", choices=FAMILIES, default="random")
    b.add_argument("--n", type=int, default=1 << 16)
    b.add_argument("--ell", type=int, default=16)
    b.add_argument("--reps", type=int, default=100)
    b.add_argument("--seed", type=int, default=0)
    b.set_defaults(func=cmd_bench)
    return p


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    if getattr(args, "n", 1) < 1:
        print("error: --n must be positive", file=err)
        return EXIT_USAGE
    return args.func(args, out, err)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
