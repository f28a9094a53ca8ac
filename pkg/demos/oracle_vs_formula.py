"""The one-line reduction number formula against the brute-force oracle.

The closed form nr = floor(a_{m-1} * sum_{i<=m-2} (a_i - 1)/a_i) is
checked here against a direct lattice computation: count monomials in
successive quotients until the quotient dimension hits zero.  The demo
also shows the monomial generators of one integral closure.
"""

from itertools import combinations_with_replacement

from singlat import (
    closure_monomials,
    normal_reduction_number,
    nr_by_oracle,
    quotient_table,
)

checked = 0
for m in (3, 4, 5):
    for a in combinations_with_replacement(range(2, 13), m):
        assert normal_reduction_number(a) == nr_by_oracle(a), a
        checked += 1
print(f"closed form == oracle on {checked} tuples")

a = (3, 4, 6)
table = quotient_table(a)
print(f"\nquotient dimensions for {a}: {table.p} (stops at n = {table.n_stop})")

for k in (1, 2, 3):
    gens = closure_monomials(a, k)
    print(f"closure of m^{k} is generated by {len(gens)} monomials: {gens}")
