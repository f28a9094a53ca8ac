"""Brieskorn complete-intersection surface singularities.

Everything is driven by the exponent tuple a = (a_1 <= ... <= a_m), m >= 3,
a_1 >= 2.  From it we compute the numeric invariants, build the star-shaped
resolution dual graph, the distinguished anti-nef cycles living on it, the
fundamental and geometric genera, the normal reduction number of the maximal
ideal, and the classification of the elliptic members.  All arithmetic is
exact.
"""

from __future__ import annotations

import math
import multiprocessing
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import accumulate, combinations_with_replacement
from typing import NamedTuple, Sequence

from . import graph_lattice, ideal_oracle
from .errors import ConsistencyError, ConstructionError, DomainError, InternalError
from .graph_lattice import Cycle, DualGraph, QCycle

__all__ = [
    "BCIInvariants",
    "ChainFamily",
    "StarGraph",
    "FundamentalGenus",
    "MaximalCycleNumbers",
    "numeric_invariants",
    "dual_graph",
    "divisor_cycle",
    "maximal_ideal_cycle",
    "central_multiple_cycle",
    "canonical_cycle_formula",
    "fundamental_genus",
    "normal_reduction_number",
    "geometric_genus",
    "maximal_cycle_numbers",
    "q_sequence",
    "is_elliptic",
    "classify_elliptic",
    "br2_exceptions",
    "invariant_report",
    "FLAG_NON_MINIMAL",
]

FLAG_NON_MINIMAL = "non-minimal-model"


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


def _core(a: tuple[int, ...]):
    """lcm bookkeeping: (m, ell, ell_i, alphas, alpha, ghat, ghats, lams)."""
    m = len(a)
    ell = math.lcm(*a)
    ell_i = tuple(math.lcm(*(a[:i] + a[i + 1 :])) for i in range(m))
    alphas = tuple(ell // li for li in ell_i)
    alpha = math.prod(alphas)
    if ell % alpha:
        raise InternalError(f"alpha = {alpha} does not divide ell = {ell}")
    ghat = math.prod(a) // ell
    ghats = []
    for ai, al in zip(a, alphas):
        num = ghat * al
        if num % ai:
            raise InternalError("branch count ghat_i is not integral")
        ghats.append(num // ai)
    lams = tuple(ell // ai for ai in a)
    for lw, aw in zip(lams, alphas):
        if math.gcd(lw, aw) != 1:
            raise InternalError("lambda_w and alpha_w are not coprime")
    return m, ell, ell_i, alphas, alpha, ghat, tuple(ghats), lams


def _neg_cont_frac(p: int, q: int) -> list[int]:
    """Entries >= 2 of the negative continued fraction p/q = c1 - 1/(c2 - ...)."""
    out = []
    while q:
        c = -(-p // q)
        out.append(c)
        p, q = q, c * q - p
    return out


def _continuant(chain: Sequence[int]) -> int:
    hi, lo = 1, 0
    for c in reversed(chain):
        hi, lo = c * hi - lo, hi
    return hi


def _chain_coeffs(chain: Sequence[int], center: int, beyond: int) -> list[int]:
    """Solve the two-point recursion lam_{v-1} = c_v lam_v - lam_{v+1} on one chain.

    Boundary values: lam_0 = center at the central curve, lam_{s+1} = beyond
    past the tip.  Raises if the solution is not a positive integer vector.
    """
    s = len(chain)
    if s == 0:
        return []
    # lam_v = A[v]*t + C[v] with t the unknown tip coefficient lam_s
    A = [0] * (s + 2)
    C = [0] * (s + 2)
    A[s + 1], C[s + 1] = 0, beyond
    A[s], C[s] = 1, 0
    for v in range(s, 0, -1):
        A[v - 1] = chain[v - 1] * A[v] - A[v + 1]
        C[v - 1] = chain[v - 1] * C[v] - C[v + 1]
    num = center - C[0]
    if num % A[0]:
        raise ConstructionError(
            f"chain solve is not integral: ({center} - {C[0]}) not divisible by {A[0]}"
        )
    t = num // A[0]
    coeffs = [A[v] * t + C[v] for v in range(1, s + 1)]
    if any(c < 1 for c in coeffs):
        raise ConstructionError("chain solve produced a non-positive coefficient")
    return coeffs


@dataclass(frozen=True)
class BCIInvariants:
    """Numeric invariants of an exponent tuple."""

    a: tuple[int, ...]
    ell: int
    ell_i: tuple[int, ...]
    alpha_i: tuple[int, ...]
    alpha: int
    ghat: int
    ghat_i: tuple[int, ...]
    lambda_i: tuple[int, ...]
    eta_i: tuple[int, ...]  # eta_1 .. eta_{m-1}
    eta_m: int
    delta: int
    a_invariant: int
    multiplicity: int

    @property
    def m(self) -> int:
        return len(self.a)

    @property
    def eta(self) -> tuple[int, ...]:
        return self.eta_i + (self.eta_m,)


@dataclass(frozen=True)
class ChainFamily:
    """One family of identical chains: ghat_w copies of the same string of curves."""

    count: int
    chain: tuple[int, ...]  # c_{w,1}.. outward from the center, each >= 2
    beta: int  # 0 when the family has no vertices


@dataclass(frozen=True)
class StarGraph:
    """Star-shaped resolution graph: central curve plus chain families.

    The flattened :class:`DualGraph` puts the center at index 0 and then the
    families in order, each chain copy laid out center-outward.
    """

    center_genus: int
    c0: int
    branch_families: tuple[ChainFamily, ...]
    graph: DualGraph
    flags: tuple[str, ...]
    family_starts: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.branch_families)

    @property
    def center_self_int(self) -> int:
        return -self.c0

    def chain_start(self, w: int, xi: int) -> int:
        """Index of vertex (w, 1, xi): chain copy xi (0-based) of family w (1-based)."""
        fam = self.branch_families[w - 1]
        return self.family_starts[w - 1] + xi * len(fam.chain)

    def tip_indices(self, w: int) -> tuple[int, ...]:
        fam = self.branch_families[w - 1]
        s = len(fam.chain)
        if s == 0:
            return ()
        return tuple(self.chain_start(w, xi) + s - 1 for xi in range(fam.count))

    def assemble(self, center_coeff: int, fam_coeffs: Sequence[Sequence[int]]) -> Cycle:
        """Cycle from a center coefficient and one coefficient list per family."""
        coeffs = [center_coeff]
        for fam, cc in zip(self.branch_families, fam_coeffs):
            if fam.chain:
                coeffs.extend(list(cc) * fam.count)
        return tuple(coeffs)


@lru_cache(maxsize=2048)
def _invariants_cached(a: tuple[int, ...]) -> BCIInvariants:
    m, ell, ell_i, alphas, alpha, ghat, ghats, lams = _core(a)
    alpha_m = alphas[-1]
    eta = []
    for i in range(m - 1):
        if lams[i] % alpha_m:
            raise InternalError("lambda_i / alpha_m is not integral")
        eta.append(lams[i] // alpha_m)
    if alpha_m == 1:
        eta_m = lams[-1]  # the "tip" of the empty family is the central curve
    else:
        beta = (-pow(lams[-1], -1, alpha_m)) % alpha_m
        chain = _neg_cont_frac(alpha_m, beta)
        eta_m = _chain_coeffs(chain, lams[-1], 1)[-1]
    delta = eta[-1] - eta_m
    if delta < 0:
        raise InternalError(f"delta = {delta} is negative")
    return BCIInvariants(
        a=a,
        ell=ell,
        ell_i=ell_i,
        alpha_i=alphas,
        alpha=alpha,
        ghat=ghat,
        ghat_i=ghats,
        lambda_i=lams,
        eta_i=tuple(eta),
        eta_m=eta_m,
        delta=delta,
        a_invariant=(m - 2) * ell - sum(lams),
        multiplicity=math.prod(a[: m - 2]),
    )


def numeric_invariants(a: Sequence[int]) -> BCIInvariants:
    """All lcm-derived invariants of the exponent tuple, fully validated."""
    return _invariants_cached(_validated(a))


@lru_cache(maxsize=64)
def _star_cached(a: tuple[int, ...]) -> StarGraph:
    m, ell, ell_i, alphas, alpha, ghat, ghats, lams = _core(a)
    families = []
    for w in range(m):
        if alphas[w] == 1:
            families.append(ChainFamily(count=ghats[w], chain=(), beta=0))
            continue
        beta = (-pow(lams[w], -1, alphas[w])) % alphas[w]
        chain = tuple(_neg_cont_frac(alphas[w], beta))
        if _continuant(chain) != alphas[w]:
            raise InternalError("chain continuant does not reproduce alpha_w")
        families.append(ChainFamily(count=ghats[w], chain=chain, beta=beta))

    two_g = (m - 2) * ghat - sum(ghats)
    if two_g % 2:
        raise ConstructionError("central genus is not an integer")
    center_genus = 1 + two_g // 2
    if center_genus < 0:
        raise ConstructionError(f"central genus {center_genus} is negative")

    c0_frac = Fraction(ghat, ell) + sum(
        Fraction(fam.count * fam.beta, alphas[w]) for w, fam in enumerate(families)
    )
    if c0_frac.denominator != 1:
        raise ConstructionError(f"central self-intersection -({c0_frac}) is not integral")
    c0 = int(c0_frac)
    if c0 < 1:
        raise ConstructionError(f"central weight c0 = {c0} is below 1")

    vertices: list[tuple[int, int]] = [(center_genus, -c0)]
    edges: list[tuple[int, int]] = []
    starts = []
    for fam in families:
        starts.append(len(vertices))
        for _ in range(fam.count if fam.chain else 0):
            prev = 0
            for c in fam.chain:
                idx = len(vertices)
                vertices.append((0, -c))
                edges.append((prev, idx))
                prev = idx
    graph = DualGraph(vertices, edges)

    # construction validators: every divisor cycle must solve integrally, and
    # the flattened graph must be negative definite
    for i in range(1, m + 1):
        for w, fam in enumerate(families, start=1):
            _chain_coeffs(fam.chain, lams[i - 1], 1 if w == i else 0)
    if not graph_lattice.is_negative_definite(graph):
        raise ConstructionError("star graph is not negative definite")

    branch_count = sum(fam.count for fam in families if fam.chain)
    flags: tuple[str, ...] = ()
    if c0 == 1 and center_genus == 0 and branch_count <= 2:
        flags = (FLAG_NON_MINIMAL,)

    return StarGraph(
        center_genus=center_genus,
        c0=c0,
        branch_families=tuple(families),
        graph=graph,
        flags=flags,
        family_starts=tuple(starts),
    )


def dual_graph(a: Sequence[int]) -> StarGraph:
    """Star-shaped dual graph of the resolution attached to the exponent tuple."""
    return _star_cached(_validated(a))


def _divisor_cycle_raw(star: StarGraph, lams: Sequence[int], i: int) -> Cycle:
    lam_i = lams[i - 1]
    fam_coeffs = [
        _chain_coeffs(fam.chain, lam_i, 1 if w == i else 0)
        for w, fam in enumerate(star.branch_families, start=1)
    ]
    return star.assemble(lam_i, fam_coeffs)


def _validate_divisor_pattern(star: StarGraph, z: Cycle, i: int, ghat_i: int) -> None:
    prods = graph_lattice.cycle_products(star.graph, z)
    expected = [0] * star.graph.n
    tips = star.tip_indices(i)
    if tips:
        for t in tips:
            expected[t] = -1
    else:
        expected[0] = -ghat_i
    if list(prods) != expected:
        raise ConstructionError(
            f"divisor cycle {i} has the wrong intersection pattern"
        )


def divisor_cycle(a: Sequence[int], i: int) -> Cycle:
    """Exceptional part of the i-th coordinate function: anti-nef, center
    coefficient lambda_i, pairing -1 against each family-i tip and 0 elsewhere
    (against the center itself when family i has no vertices)."""
    a = _validated(a)
    m = len(a)
    if not 1 <= i <= m:
        raise DomainError(f"coordinate index {i} outside 1..{m}")
    core = _core(a)
    star = _star_cached(a)
    z = _divisor_cycle_raw(star, core[7], i)
    _validate_divisor_pattern(star, z, i, core[6][i - 1])
    return z


def maximal_ideal_cycle(a: Sequence[int]) -> Cycle:
    """Cycle cut out by a generic function of the maximal ideal (= last divisor cycle)."""
    a = _validated(a)
    return divisor_cycle(a, len(a))


def central_multiple_cycle(a: Sequence[int]) -> Cycle:
    """Smallest anti-nef cycle pairing to zero against everything off the center;
    its center coefficient is alpha."""
    a = _validated(a)
    m, ell, ell_i, alphas, alpha, ghat, ghats, lams = _core(a)
    star = _star_cached(a)
    fam_coeffs = [_chain_coeffs(fam.chain, alpha, 0) for fam in star.branch_families]
    z = star.assemble(alpha, fam_coeffs)
    prods = graph_lattice.cycle_products(star.graph, z)
    if prods[0] > 0 or any(v != 0 for v in prods[1:]):
        raise ConstructionError("central-multiple cycle has the wrong intersection pattern")
    return z


def canonical_cycle_formula(a: Sequence[int]) -> QCycle:
    """Canonical cycle as reduced + (m-2) ell/alpha central multiples minus the
    divisor cycles; verified against the adjunction solve and integral.

    On an unflagged star graph the result must also be effective (the
    singularity is Gorenstein and the model is the minimal good resolution);
    on a model flagged non-minimal a negative coefficient on the central
    (-1)-curve is legitimate and allowed through.
    """
    a = _validated(a)
    m, ell, ell_i, alphas, alpha, ghat, ghats, lams = _core(a)
    star = _star_cached(a)
    if ((m - 2) * ell) % alpha:
        raise InternalError("(m-2) ell / alpha is not integral")
    k = (m - 2) * ell // alpha
    z0 = central_multiple_cycle(a)
    zws = [divisor_cycle(a, w) for w in range(1, m + 1)]
    vals = [
        1 + k * z0[j] - sum(zw[j] for zw in zws) for j in range(star.graph.n)
    ]
    if any(v < 0 for v in vals) and FLAG_NON_MINIMAL not in star.flags:
        raise InternalError("canonical cycle formula produced a non-effective cycle")
    adj = graph_lattice.canonical_qcycle(star.graph)
    if tuple(Fraction(v) for v in vals) != adj:
        raise InternalError("canonical cycle formula disagrees with the adjunction solve")
    return tuple(Fraction(v) for v in vals)


class FundamentalGenus(NamedTuple):
    value: int
    cycle: str  # which minimal cycle realizes it: "Z0", "MX", or "both"


def _pf_value(a: tuple[int, ...]) -> FundamentalGenus:
    m, ell, ell_i, alphas, alpha, ghat, ghats, lams = _core(a)
    lam_m = lams[-1]

    def z0_branch() -> Fraction:
        s = sum(Fraction(gw, aw) for gw, aw in zip(ghats, alphas))
        return (
            Fraction(alpha, 2)
            * ((m - 2) * ghat - Fraction((alpha - 1) * ghat, ell) - s)
            + 1
        )

    def mx_branch() -> Fraction:
        ceil_q = -(-lam_m // alphas[-1])
        s = sum(Fraction(ghats[w], alphas[w]) for w in range(m - 1))
        return (
            Fraction(lam_m, 2)
            * ((m - 2) * ghat - Fraction((2 * ceil_q - 1) * ghats[-1], lam_m) - s)
            + 1
        )

    if lam_m > alpha:
        val, sel = z0_branch(), "Z0"
    elif lam_m < alpha:
        val, sel = mx_branch(), "MX"
    else:
        val, sel = z0_branch(), "both"
        if val != mx_branch():
            raise InternalError("the two fundamental-genus formulas disagree at lambda_m = alpha")
    if val.denominator != 1:
        raise InternalError(f"fundamental genus {val} is not an integer")
    return FundamentalGenus(int(val), sel)


@lru_cache(maxsize=4096)
def _pf_verified(a: tuple[int, ...]) -> FundamentalGenus:
    pf = _pf_value(a)
    star = _star_cached(a)
    zf = graph_lattice.fundamental_cycle(star.graph)
    pa = graph_lattice.arithmetic_genus(star.graph, zf)
    if pa != pf.value:
        raise ConsistencyError(
            f"closed-form fundamental genus {pf.value} of {a} disagrees with "
            f"the Laufer value {pa}"
        )
    return pf


def fundamental_genus(a: Sequence[int]) -> FundamentalGenus:
    """Arithmetic genus of the fundamental cycle, in closed form.

    The fundamental cycle equals the central-multiple cycle when
    lambda_m >= alpha and the maximal-ideal cycle when lambda_m <= alpha;
    the returned selector records which case applied.  The value is always
    cross-checked against the cycle computed on the graph itself.
    """
    return _pf_verified(_validated(a))


def normal_reduction_number(a: Sequence[int]) -> int:
    """nr of the maximal ideal: floor(a_{m-1} * sum_{i<=m-2} (a_i - 1)/a_i)."""
    a = _validated(a)
    m = len(a)
    inner = a[: m - 2]
    d = math.prod(inner)
    s = sum((ai - 1) * (d // ai) for ai in inner)
    return (a[m - 2] * s) // d


@lru_cache(maxsize=4096)
def _pg_cached(a: tuple[int, ...]) -> int:
    m, ell, ell_i, alphas, alpha, ghat, ghats, lams = _core(a)
    bound = (m - 2) * ell - sum(lams)
    if bound < 0:
        return 0
    # graded dimensions of the weight-lams complete intersection with m-2
    # relations of degree ell, truncated at the a-invariant
    c = [0] * (bound + 1)
    c[0] = 1
    for lam in lams:
        if lam <= bound:
            for r in range(lam):
                c[r::lam] = list(accumulate(c[r::lam]))
    for _ in range(m - 2):
        if ell <= bound:
            c[ell:] = [x - y for x, y in zip(c[ell:], c)]
        if min(c) < 0:
            raise InternalError("graded dimension went negative")
    return sum(c)


def geometric_genus(a: Sequence[int]) -> int:
    """Geometric genus: total graded dimension up to the a-invariant (0 if negative)."""
    return _pg_cached(_validated(a))


@dataclass(frozen=True)
class MaximalCycleNumbers:
    """Self-intersection and canonical pairing of the maximal-ideal cycle pulled
    back to the normalized blowup: MY_sq = -multiplicity and
    MY_sq + MY_K = 2 p_a(M_X) - 2 - 2 delta ghat_m."""

    MY_sq: int
    MY_K: int


def maximal_cycle_numbers(a: Sequence[int]) -> MaximalCycleNumbers:
    a = _validated(a)
    inv = _invariants_cached(a)
    star = _star_cached(a)
    mx = divisor_cycle(a, len(a))
    pa = graph_lattice.arithmetic_genus(star.graph, mx)
    my_sq = -inv.multiplicity
    my_k = 2 * pa - 2 - 2 * inv.delta * inv.ghat_i[-1] - my_sq
    return MaximalCycleNumbers(MY_sq=my_sq, MY_K=my_k)


def q_sequence(a: Sequence[int], n_max: int) -> tuple[int, ...]:
    """Normalized colength sequence q(0..n_max) of the maximal ideal.

    q(0) is the geometric genus; the increments are
    q(n) - q(n-1) = (my_sq - my_k)/2 + sum_{i<=n} p(i) with p(i) the lattice
    quotient dimensions.  Postconditions enforced: q >= 0, non-increasing,
    first repeat exactly at the normal reduction number, constant afterwards.
    """
    a = _validated(a)
    if n_max < 0:
        raise DomainError("q-sequence length must be nonnegative")
    pg = geometric_genus(a)
    mcn = maximal_cycle_numbers(a)
    diff = mcn.MY_sq - mcn.MY_K
    if diff % 2:
        raise InternalError("my_sq - my_k is odd")
    half = diff // 2
    table = ideal_oracle.quotient_table(a)

    def p(i: int) -> int:
        return table.p[i - 1] if i - 1 < len(table.p) else 0

    q = [pg]
    run = 0
    for n in range(1, n_max + 1):
        run += p(n)
        q.append(q[-1] + half + run)

    nr = normal_reduction_number(a)
    if any(v < 0 for v in q):
        raise ConsistencyError(f"q-sequence of {a} has a negative entry: {q}")
    if any(x > y for x, y in zip(q[1:], q)):
        raise ConsistencyError(f"q-sequence of {a} increases: {q}")
    stab = next((n for n in range(1, n_max + 1) if q[n] == q[n - 1]), None)
    if n_max >= nr:
        if stab != nr:
            raise ConsistencyError(
                f"q-sequence of {a} first repeats at {stab}, expected {nr}"
            )
        if any(v != q[nr] for v in q[nr:]):
            raise ConsistencyError(f"q-sequence of {a} moves after stabilizing: {q}")
    elif stab is not None:
        raise ConsistencyError(
            f"q-sequence of {a} repeats at {stab} before the reduction number {nr}"
        )
    return tuple(q)


def is_elliptic(a: Sequence[int]) -> bool:
    """True iff the fundamental genus equals one."""
    return _pf_value(_validated(a)).value == 1


def _elliptic_chunk(chunk: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    return [t for t in chunk if _pf_value(t).value == 1]


def classify_elliptic(
    m_max: int, a_max: int, threads: int = 1
) -> list[tuple[int, ...]]:
    """All elliptic exponent tuples with m <= m_max and a_m <= a_max, in lex order."""
    if m_max < 3:
        raise DomainError("m_max must be at least 3")
    if a_max < 2:
        raise DomainError("a_max must be at least 2")
    if threads < 1:
        raise DomainError("threads must be at least 1")
    tuples = [
        t
        for m in range(3, m_max + 1)
        for t in combinations_with_replacement(range(2, a_max + 1), m)
    ]
    if threads == 1:
        found = _elliptic_chunk(tuples)
    else:
        step = max(1, len(tuples) // (threads * 8))
        chunks = [tuples[k : k + step] for k in range(0, len(tuples), step)]
        with multiprocessing.Pool(threads) as pool:
            found = [t for part in pool.map(_elliptic_chunk, chunks) for t in part]
    return sorted(found)


def br2_exceptions() -> list[tuple[int, int, int]]:
    """Exponent tuples whose maximal ideal attains normal reduction number two
    even though the singularity is not elliptic.

    Both have fundamental genus 2, geometric genus 3 and nr = 2; every other
    tuple with nr(max ideal) = 2 is elliptic.
    """
    return [(3, 4, 6), (3, 4, 7)]


def invariant_report(a: Sequence[int]) -> dict:
    """JSON-ready summary: {"a","ell","alpha","ghat","lambda","eta","delta",
    "g","c0","pf","pg","nr","elliptic","flags"}."""
    a = _validated(a)
    inv = _invariants_cached(a)
    star = _star_cached(a)
    pf = _pf_value(a)
    return {
        "a": list(a),
        "ell": inv.ell,
        "alpha": list(inv.alpha_i),
        "ghat": inv.ghat,
        "lambda": list(inv.lambda_i),
        "eta": list(inv.eta),
        "delta": inv.delta,
        "g": star.center_genus,
        "c0": star.c0,
        "pf": pf.value,
        "pg": geometric_genus(a),
        "nr": normal_reduction_number(a),
        "elliptic": pf.value == 1,
        "flags": list(star.flags),
    }
