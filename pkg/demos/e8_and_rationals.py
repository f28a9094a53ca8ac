"""The Poincaré sphere: x^2 + y^3 + z^5 resolves to the E8 diagram.

All eight exceptional curves are rational -2 curves, the fundamental
cycle is the highest root of E8, and the singularity is rational: the
geometric genus vanishes and every power of the maximal ideal is already
integrally closed (nr = 1).
"""

from singlat import (
    arithmetic_genus,
    canonical_cycle_formula,
    central_multiple_cycle,
    dual_graph,
    fundamental_cycle,
    geometric_genus,
    is_negative_definite,
    maximal_ideal_cycle,
    normal_reduction_number,
)

a = (2, 3, 5)
star = dual_graph(a)
g = star.graph

print(f"vertices: {g.n}, all genus 0, all self-intersection -2")
print(f"negative definite: {is_negative_definite(g)}")

zf = fundamental_cycle(g)
print(f"fundamental cycle  Z_f = {zf}   (the E8 highest root)")
print(f"arithmetic genus of Z_f: {arithmetic_genus(g, zf)}")
print(f"maximal ideal cycle M_X = {maximal_ideal_cycle(a)}")
print(f"central multiple   Z_0 = {central_multiple_cycle(a)}")
print(f"canonical cycle    Z_K = {canonical_cycle_formula(a)}")
print(f"p_g = {geometric_genus(a)}, nr = {normal_reduction_number(a)}")

# Rationality is visible in the cycle data: Z_K = 0 and p_a(Z_f) = 0.
assert geometric_genus(a) == 0
assert normal_reduction_number(a) == 1
