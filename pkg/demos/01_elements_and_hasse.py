"""Element encodings and Hasse diagrams.

A walk through the two tuple families: what the membership rules accept,
how many elements there are, and what the small posets look like.
"""

from math import comb

from tamari import (
    INF,
    brute_force_type_b,
    enumerate_type_a,
    enumerate_type_b,
    format_vector,
    tamari_poset,
    type_a_violation,
    type_b_violation,
)

# Type B vectors live over {0, ..., n-1, inf}.  Rule (i) caps each entry by
# what later finite entries allow; rule (ii) forces an inf further right
# whenever an entry is at least its own position.
print("== membership rules ==")
for candidate in [(0, 0, 0, 0), (1, 0), (0, 1, 1, 2), (0, 0, 1, 2)]:
    verdict = type_b_violation(candidate)
    print(f"  {format_vector(candidate):12s} ->", "valid" if verdict is None else verdict)

# Same idea in type A (entries 1..n): (2,3,3) breaks rule (ii) because the
# bracket opened at position 1 only reaches position 2.
print("  (2,3,3)      ->", type_a_violation((2, 3, 3)))

# Counts: type A is Catalan, type B turns out to be the central binomials.
# The type B counts are pinned by filtering the full (n+1)^n grid.
print("\n== counts ==")
print("  n  |T_n|  |T_n^B|  C(2n,n)  brute force")
for n in range(1, 6):
    print(
        f"  {n}  {len(enumerate_type_a(n)):5d}  {len(enumerate_type_b(n)):7d}"
        f"  {comb(2 * n, n):7d}  {len(brute_force_type_b(n)):11d}"
    )

# The 6 elements of T_2^B under componentwise order: a pentagon.
print("\n== T_2^B ==")
p = tamari_poset("b", 2)
print("  elements:", ", ".join(format_vector(v) for v in p.labels))
print("  covers:")
for u, v in p.covers:
    print(f"    {format_vector(p.labels[u])} -> {format_vector(p.labels[v])}")
print("  bottom:", format_vector(p.labels[p.minimal_elements()[0]]))
print("  top:   ", format_vector(p.labels[p.maximal_elements()[0]]))

# Every element except (inf,0) lies on the unique longest chain; (inf,0)
# takes a two-step shortcut from bottom to top.
low = p.level_map("lowest")
print("  lowest levels:", {format_vector(p.labels[i]): low[i] for i in range(p.n)})
