"""Census of elliptic Brieskorn complete intersections.

A singularity here is elliptic when the fundamental cycle has arithmetic
genus one.  Sweeping all exponent tuples with up to five entries bounded
by 30 finds exactly six infinite-or-finite families, none with more than
four exponents.
"""

from collections import Counter

from singlat import classify_elliptic, fundamental_genus, geometric_genus

found = classify_elliptic(5, 30)
print(f"elliptic tuples with m <= 5, exponents <= 30: {len(found)}")

by_head = Counter(a[:2] for a in found if len(a) == 3)
print("three-exponent families (first two entries -> count):")
for head, count in sorted(by_head.items()):
    print(f"  {head}: {count}")

quads = [a for a in found if len(a) == 4]
print(f"four-exponent tuples: {len(quads)}, all of the form (2,2,2,x)")
assert all(a[:3] == (2, 2, 2) for a in quads)
assert not any(len(a) == 5 for a in found)

# Spot checks at the family boundaries.
for a, want in [((2, 5, 9), True), ((2, 5, 10), False),
                ((3, 4, 5), True), ((3, 4, 6), False)]:
    got = fundamental_genus(a).value == 1
    print(f"  pf({a}) == 1: {got} (expected {want})")
    assert got is want

# Elliptic does not pin down the geometric genus.
print("p_g across the census:", sorted({geometric_genus(a) for a in found}))
