"""Combinatorial oracle for integral closures of maximal-ideal powers.

For an exponent tuple a = (a_1 <= ... <= a_m) the closures of the powers of
the maximal ideal are monomial; membership reduces to one weighted-degree
inequality, and the lattice counts behind the colength sequence reduce to
counting box points.  Everything here is independent of the resolution
graph, so it doubles as a cross-check for the intersection-theoretic route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import DimensionError, DomainError, InternalError

__all__ = [
    "Monomial",
    "QuotientTable",
    "monomial_in_closure",
    "quotient_dimension",
    "quotient_table",
    "nr_by_oracle",
    "closure_monomials",
    "qp_consistency",
    "nr_pg_bound_check",
]

Monomial = tuple[int, ...]


def _validated(a: Sequence[int]) -> tuple[int, ...]:
    t = tuple(a)
    if len(t) < 3:
        raise DomainError(f"need at least three exponents, got {len(t)}")
    for v in t:
        if not isinstance(v, int):
            raise DomainError(f"exponents must be integers, got {v!r}")
    if t[0] < 2:
        raise DomainError(f"exponents must be >= 2, got {t[0]}")
    if any(x > y for x, y in zip(t, t[1:])):
        raise DomainError(f"exponents must be non-decreasing, got {t}")
    return t


def monomial_in_closure(a: Sequence[int], u: Sequence[int], n: int) -> bool:
    """Is x^u in the integral closure of the n-th power of the maximal ideal?

    x^u lies in that closure iff
    sum_{i <= m-2} u_i / a_i  >=  (n - u_{m-1} - u_m) / a_{m-1},
    evaluated here as an exact integer comparison.
    """
    a = _validated(a)
    m = len(a)
    u = tuple(u)
    if len(u) != m:
        raise DimensionError(f"monomial has {len(u)} entries, expected {m}")
    if any(not isinstance(v, int) or v < 0 for v in u):
        raise DomainError(f"monomial entries must be nonnegative integers, got {u}")
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"power must be a nonnegative integer, got {n!r}")
    d = math.prod(a[: m - 2])
    s = sum(ui * (d // ai) for ui, ai in zip(u[: m - 2], a[: m - 2]))
    return a[m - 2] * s >= (n - u[m - 2] - u[m - 1]) * d


@dataclass(frozen=True)
class QuotientTable:
    """p[n] for n = 0..n_stop, where n_stop is the first index with p = 0;
    p(n) stays 0 from there on.  n_stop equals the normal reduction number
    of the maximal ideal."""

    p: tuple[int, ...]
    n_stop: int


def _box_scores(a: tuple[int, ...]) -> list[int]:
    """a_{m-1} * sum u_i (D/a_i) over the box prod [0, a_i-1], i <= m-2."""
    m = len(a)
    d = math.prod(a[: m - 2])
    sums = [0]
    for ai in a[: m - 2]:
        w = d // ai
        sums = [s + u * w for s in sums for u in range(ai)]
    head = a[m - 2]
    return [head * s for s in sums]


@lru_cache(maxsize=4096)
def _table_cached(a: tuple[int, ...]) -> QuotientTable:
    d = math.prod(a[: len(a) - 2])
    top = 0
    hist: dict[int, int] = {}
    for score in _box_scores(a):
        n_top = score // d - 1  # largest n with score >= (n+1) d
        if n_top >= 0:
            hist[n_top] = hist.get(n_top, 0) + 1
            if n_top > top:
                top = n_top
    n_stop = top + 1 if hist else 0
    p = [0] * (n_stop + 1)
    running = 0
    for n in range(n_stop - 1, -1, -1):
        running += hist.get(n, 0)
        p[n] = running
    return QuotientTable(p=tuple(p), n_stop=n_stop)


def quotient_table(a: Sequence[int]) -> QuotientTable:
    """All quotient dimensions of the exponent tuple in one box sweep."""
    return _table_cached(_validated(a))


def quotient_dimension(a: Sequence[int], n: int) -> int:
    """Number of box points u (over the first m-2 coordinates) with
    a_{m-1} * sum u_i (D/a_i) >= (n+1) D; the n-th quotient dimension."""
    a = _validated(a)
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"index must be a nonnegative integer, got {n!r}")
    table = _table_cached(a)
    return table.p[n] if n < table.n_stop else 0


def nr_by_oracle(a: Sequence[int]) -> int:
    """Normal reduction number read off from where the quotient dimensions vanish."""
    return quotient_table(a).n_stop


def closure_monomials(a: Sequence[int], k: int) -> list[Monomial]:
    """Divisibility-minimal monomials of the closure of the k-th power.

    Candidates run over u_i <= a_i - 1 for i <= m-2 and u_{m-1} + u_m <= k;
    the output is the divisibility antichain of the members, sorted
    lexicographically.  (0, ..., 0, k) is always among them.
    """
    a = _validated(a)
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"power must be a positive integer, got {k!r}")
    m = len(a)
    d = math.prod(a[: m - 2])
    box = [()]
    for ai in a[: m - 2]:
        box = [u + (v,) for u in box for v in range(ai)]
    members = []
    for u in box:
        s = sum(ui * (d // ai) for ui, ai in zip(u, a))
        for um1 in range(k + 1):
            for um in range(k + 1 - um1):
                if a[m - 2] * s >= (k - um1 - um) * d:
                    members.append(u + (um1, um))
    members.sort(key=sum)
    minimal: list[Monomial] = []
    for u in members:
        if not any(all(v <= w for v, w in zip(mu, u)) for mu in minimal):
            minimal.append(u)
    top = (0,) * (m - 1) + (k,)
    if top not in minimal:
        raise InternalError(f"apex monomial {top} missing from the antichain")
    return sorted(minimal)


def qp_consistency(q: Sequence[int], p: Sequence[int]) -> bool:
    """Does the colength sequence match the quotient dimensions?

    Checks that q is non-increasing and that the second difference identity
    q(n+1) + q(n-1) - 2 q(n) = p(n) holds for n = 1 .. len(q)-2.
    """
    q = tuple(q)
    p = tuple(p)
    if len(q) < 3:
        raise DimensionError(f"need at least three q values, got {len(q)}")
    if len(p) < len(q) - 1:
        raise DimensionError(
            f"need at least {len(q) - 1} p values for {len(q)} q values, got {len(p)}"
        )
    if any(x > y for x, y in zip(q[1:], q)):
        return False
    return all(
        q[n + 1] + q[n - 1] - 2 * q[n] == p[n] for n in range(1, len(q) - 1)
    )


def nr_pg_bound_check(a: Sequence[int]) -> bool:
    """Bound r(r-1)/2 + q(r) <= p_g at r = the normal reduction number."""
    from . import brieskorn

    a = _validated(a)
    r = brieskorn.normal_reduction_number(a)
    q = brieskorn.q_sequence(a, r)
    return r * (r - 1) // 2 + q[r] <= brieskorn.geometric_genus(a)
