"""Cross-module consistency suite for a single exponent tuple.

Every closed formula in the package has an independent route to the same
number (graph-side solve, lattice-point count, or cone specialization).
``run_tuple_checks`` exercises all of them and reports one pass/fail result
per route; the CLI ``check`` subcommand is a thin wrapper around it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from . import brieskorn, cone_homogeneous, graph_lattice, ideal_oracle
from .brieskorn import _validated
from .errors import SinglatError

__all__ = ["CheckResult", "run_tuple_checks"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _run(name: str, fn: Callable[[], str]) -> CheckResult:
    try:
        detail = fn()
    except SinglatError as exc:
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")
    except AssertionError as exc:
        return CheckResult(name, False, str(exc) or "assertion failed")
    return CheckResult(name, True, detail)


def run_tuple_checks(a: Sequence[int]) -> list[CheckResult]:
    """Run every cross-module invariant for one tuple; never masks a failure."""
    a = _validated(a)
    m = len(a)

    def invariants() -> str:
        inv = brieskorn.numeric_invariants(a)
        assert inv.ell % inv.alpha == 0, "alpha does not divide ell"
        assert all(v > 0 for v in inv.ell_i + inv.alpha_i + inv.ghat_i + inv.lambda_i), (
            "a positive invariant came out nonpositive"
        )
        assert inv.ghat > 0, "ghat is not positive"
        assert all(
            x >= y for x, y in zip(inv.lambda_i, inv.lambda_i[1:])
        ), "lambda is not non-increasing"
        assert all(
            e * inv.alpha_i[-1] == l for e, l in zip(inv.eta_i, inv.lambda_i)
        ), "eta_i * alpha_m != lambda_i"
        assert inv.delta >= 0, "delta is negative"
        assert all(
            math.gcd(l, al) == 1 for l, al in zip(inv.lambda_i, inv.alpha_i)
        ), "lambda_w and alpha_w share a factor"
        return f"ell={inv.ell} alpha={inv.alpha} ghat={inv.ghat} delta={inv.delta}"

    def graph() -> str:
        inv = brieskorn.numeric_invariants(a)
        star = brieskorn.dual_graph(a)
        assert star.center_self_int == -star.c0, "center weight mismatch"
        for w, fam in enumerate(star.branch_families):
            assert fam.count == inv.ghat_i[w], f"family {w + 1} count != ghat_w"
            assert all(c >= 2 for c in fam.chain), f"family {w + 1} chain entry < 2"
            assert (not fam.chain) == (inv.alpha_i[w] == 1), (
                f"family {w + 1} emptiness disagrees with alpha_w"
            )
        expected_n = 1 + sum(f.count * len(f.chain) for f in star.branch_families)
        assert star.graph.n == expected_n, "flattened vertex count mismatch"
        assert graph_lattice.is_negative_definite(star.graph), "not negative definite"
        return (
            f"n={star.graph.n} center=(genus {star.center_genus}, "
            f"{star.center_self_int})"
        )

    def divisor_cycles() -> str:
        inv = brieskorn.numeric_invariants(a)
        star = brieskorn.dual_graph(a)
        for i in range(1, m + 1):
            z = brieskorn.divisor_cycle(a, i)
            assert z[0] == inv.lambda_i[i - 1], f"Z^({i}) center coefficient"
            assert all(v >= 1 for v in z), f"Z^({i}) is not effective"
            assert graph_lattice.is_anti_nef(star.graph, z), f"Z^({i}) is not anti-nef"
        zm = brieskorn.divisor_cycle(a, m)
        tips = star.tip_indices(m)
        tip_coeff = zm[tips[0]] if tips else inv.lambda_i[-1]
        assert len({zm[t] for t in tips} | {tip_coeff}) == 1, "family-m tips differ"
        assert tip_coeff == inv.eta_m, (
            f"eta_m={inv.eta_m} but the Z^(m) tip coefficient is {tip_coeff}"
        )
        return f"all {m} cycles anti-nef; eta_m={inv.eta_m} confirmed on the graph"

    def central_cycle() -> str:
        inv = brieskorn.numeric_invariants(a)
        star = brieskorn.dual_graph(a)
        z0 = brieskorn.central_multiple_cycle(a)
        assert z0[0] == inv.alpha, "Z_0 center coefficient != alpha"
        assert graph_lattice.is_anti_nef(star.graph, z0), "Z_0 is not anti-nef"
        return f"center coefficient {inv.alpha}"

    def canonical_cycle() -> str:
        star = brieskorn.dual_graph(a)
        zk = brieskorn.canonical_cycle_formula(a)
        zi = tuple(int(v) for v in zk)
        prods = graph_lattice.cycle_products(star.graph, zi)
        want = [
            e + 2 - 2 * g
            for g, e in zip(star.graph.genera, star.graph.self_ints)
        ]
        assert list(prods) == want, "Z_K fails the adjunction products"
        if brieskorn.FLAG_NON_MINIMAL in star.flags:
            return "integral, matches the adjunction solve (non-minimal model)"
        assert all(v >= 0 for v in zi), "Z_K is not effective on a minimal model"
        return "integral, effective, matches the adjunction solve"

    def fundamental() -> str:
        inv = brieskorn.numeric_invariants(a)
        star = brieskorn.dual_graph(a)
        pf = brieskorn.fundamental_genus(a)
        zf = graph_lattice.fundamental_cycle(star.graph)
        lam_m = inv.lambda_i[-1]
        if lam_m >= inv.alpha:
            assert zf == brieskorn.central_multiple_cycle(a), "Z_f != Z_0"
        if lam_m <= inv.alpha:
            assert zf == brieskorn.maximal_ideal_cycle(a), "Z_f != M_X"
        return f"pf={pf.value} via {pf.cycle}"

    def nr_oracle() -> str:
        nr = brieskorn.normal_reduction_number(a)
        oracle = ideal_oracle.nr_by_oracle(a)
        assert nr == oracle, f"closed form nr={nr} but oracle says {oracle}"
        return f"nr={nr} agrees with the lattice oracle"

    def q_seq() -> str:
        nr = brieskorn.normal_reduction_number(a)
        n_max = nr + 2
        q = brieskorn.q_sequence(a, n_max)
        table = ideal_oracle.quotient_table(a)
        p = [table.p[n] if n < len(table.p) else 0 for n in range(n_max)]
        assert ideal_oracle.qp_consistency(q, p), "q/p second-difference identity"
        for i in range(1, n_max):
            assert q[i - 1] - 2 * q[i] + q[i + 1] == ideal_oracle.quotient_dimension(
                a, i
            ), f"re-derived p({i}) disagrees with the lattice count"
        return f"q={q}"

    def nr_pg_bound() -> str:
        r = brieskorn.normal_reduction_number(a)
        q = brieskorn.q_sequence(a, r)
        pg = brieskorn.geometric_genus(a)
        assert ideal_oracle.nr_pg_bound_check(a), (
            f"r(r-1)/2 + q(r) = {r * (r - 1) // 2 + q[r]} > pg = {pg}"
        )
        return f"{r * (r - 1) // 2 + q[r]} <= pg={pg}"

    def rational_nr() -> str:
        pg = brieskorn.geometric_genus(a)
        nr = brieskorn.normal_reduction_number(a)
        if pg == 0:
            assert nr == 1, f"pg=0 but nr={nr}"
            return "pg=0 forces nr=1, satisfied"
        return f"pg={pg} > 0, nothing to enforce"

    def homogeneous_cone() -> str:
        if len(set(a)) != 1 or m != 3:
            return "not a hypersurface cone (d,d,d), nothing to enforce"
        d = a[0]
        if d < 3:
            return "degree below 3, outside the cone formulas"
        q = brieskorn.q_sequence(a, d)
        want = tuple(cone_homogeneous.homogeneous_q(d, n) for n in range(d + 1))
        assert q == want, f"q={q} but the cone formula gives {want}"
        nr = brieskorn.normal_reduction_number(a)
        assert nr == cone_homogeneous.homogeneous_nr(d), "nr != d-1"
        assert nr == cone_homogeneous.a_invariant_relation(d), "nr != a(R)+2"
        assert nr == cone_homogeneous.brr_upper_bound(
            cone_homogeneous.plane_cone(d)
        ), "cone bound not attained"
        return f"matches the degree-{d} plane-cone formulas"

    steps = [
        ("invariants", invariants),
        ("graph", graph),
        ("divisor-cycles", divisor_cycles),
        ("central-cycle", central_cycle),
        ("canonical-cycle", canonical_cycle),
        ("fundamental-cycle", fundamental),
        ("nr-oracle", nr_oracle),
        ("q-sequence", q_seq),
        ("nr-pg-bound", nr_pg_bound),
        ("rational-nr", rational_nr),
        ("homogeneous-cone", homogeneous_cone),
    ]
    return [_run(name, fn) for name, fn in steps]
