"""Concrete witnesses that neither bound factor dominates the other.

For each exponent p the search draws families (1), (b) at random and keeps
one where the power-mean factor is strictly larger and one where it is
strictly smaller.  At p = 2 the gap b^2 - b is never positive, so the
search correctly comes back empty-handed there.
"""

from grambounds import dominance_search

for p in (1.05, 1.1, 1.5, 1.9):
    pair = dominance_search(seed=0, max_trials=10_000, p=p)
    assert pair is not None
    print(f"p = {p}:")
    print(f"  b = {pair.b_a:.4f}: classical {pair.bombieri_a:.4f} < "
          f"power-mean {pair.power_mean_a:.4f}  (gap {pair.gap_a:+.4f})")
    print(f"  b = {pair.b_b:.4f}: classical {pair.bombieri_b:.4f} > "
          f"power-mean {pair.power_mean_b:.4f}  (gap {pair.gap_b:+.4f})")

print()
result = dominance_search(seed=0, max_trials=10_000, p=2.0)
print(f"p = 2.0: search result is {result!r} — at p = 2 the power-mean factor")
print("never exceeds the classical one on these families, so no witness exists.")
