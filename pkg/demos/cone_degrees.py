"""Cones over smooth plane curves of degree d, alias x^d + y^d + z^d.

The colength sequence of the maximal ideal is a pure binomial, the
normal reduction number is d - 1, and the gonality bound reproduces the
same value from curve data alone.
"""

from singlat import (
    brr_upper_bound,
    cone_report,
    geometric_genus,
    normal_reduction_number,
    plane_cone,
    q_sequence,
)

print(f"{'d':>2} {'g':>3} {'gon':>3} {'nr':>3} {'bound':>5}  q-sequence")
for d in range(3, 9):
    cone = plane_cone(d)
    nr = normal_reduction_number((d, d, d))
    bound = brr_upper_bound(cone)
    q = q_sequence((d, d, d), d)
    print(f"{d:>2} {cone.g:>3} {cone.gon:>3} {nr:>3} {bound:>5}  {q}")
    assert bound == nr == d - 1
    assert q[0] == geometric_genus((d, d, d))

print()
print("full degree-5 report:", cone_report(5))
