"""Two singularities with identical numeric profiles but different graphs.

The links of x^3 + y^4 + z^6 and x^3 + y^4 + z^7 share the same geometric
genus, fundamental genus, and normal reduction number, yet their minimal
good resolutions look nothing alike: the first is a central elliptic curve
with three rational leaves, the second a star of rational curves with
three longer arms.
"""

from singlat import (
    dual_graph,
    fundamental_genus,
    geometric_genus,
    invariant_report,
    normal_reduction_number,
    q_sequence,
    to_dot,
)

for a in [(3, 4, 6), (3, 4, 7)]:
    star = dual_graph(a)
    print(f"a = {a}")
    print(f"  center: genus {star.center_genus}, self-int {star.center_self_int}")
    for w, fam in enumerate(star.branch_families, start=1):
        arm = " ".join(f"-{c}" for c in fam.chain) or "(none)"
        print(f"  family {w}: {fam.count} arm(s) {arm}")
    print(f"  p_g = {geometric_genus(a)}")
    print(f"  p_f = {fundamental_genus(a).value}")
    print(f"  nr  = {normal_reduction_number(a)}")
    print(f"  q   = {q_sequence(a, 4)}")
    print()

# The full report in one call, and the raw DOT text for graphviz.
print(invariant_report((3, 4, 7)))
print()
print(to_dot(dual_graph((3, 4, 6)).graph))
