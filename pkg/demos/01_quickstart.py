"""Build an index once, then ask about many edits without rewriting the text."""
from elspal import ELSPalIndex, naive_lspal

text = b"abaab"
idx = ELSPalIndex(text)
print("text", text, "longest palindrome", idx.lspal)  # "baab"

# delete position 3: abab
ans = idx.query(3, 3, b"", witness=True)
print("delete T[3]       ->", ans.length, "at", ans.witness)

# insert before position 1 (j = i - 1 means nothing is removed)
ans = idx.query(1, 0, b"ba", witness=True)
print("insert 'ba' at 1  ->", ans.length, "at", ans.witness)

# substitute a block
ans = idx.query(4, 5, b"ba", witness=True)
print("T[4..5] := 'ba'   ->", ans.length, "at", ans.witness)

# the index never changes; compare with rebuilding the edited string
for i, j, x in [(3, 3, b""), (1, 0, b"ba"), (4, 5, b"ba"), (2, 4, b"bbbbb")]:
    edited = text[: i - 1] + x + text[j:]
    assert idx.query(i, j, x).length == naive_lspal(edited).length
print("agrees with a full rescan, text still", idx.text)

# per-query operation counters
print(idx.query(2, 4, b"bbbbb").counters)
