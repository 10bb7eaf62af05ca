"""Palindromes ending at one position come in arithmetic runs of lengths,
and one run can be extended as a whole from three probes."""
from elspal import ELSPalIndex, best_in_group, normalize_edit, extended_candidate_end
from elspal.query_engine import member_extension

y = b"accbaaabaaabaaabaaabaaabaaabaa"
text = y + b"ddd"
idx = ELSPalIndex(text)

# maximal palindromes ending at 30, grouped by common difference
for g in idx.forward.pals.by_end[30]:
    print(g, g.members())

# replace the trailing "ddd" and look at how far each run extends
x = b"abaaabaaabccc"
ctx = normalize_edit(idx, 31, 33, x)
trace = {}
best, start = extended_candidate_end(idx, ctx, paranoid=True, trace=trace)
p = trace["params"][3]
print("run <9,4,5>: alpha", p.alpha, "beta", p.beta, "gamma", p.gamma)

for j in range(1, p.t + 1):
    s = p.s + (j - 1) * p.d
    print(f"  member {s:2d} extends to {s + 2 * member_extension(p, j)}")
print("best member:", best_in_group(p))

edited = text[:30] + x
print("longest palindrome after the edit:", best, edited[start - 1: start - 1 + best])
