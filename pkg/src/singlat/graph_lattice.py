"""Intersection theory on weighted dual graphs of resolved surface singularities.

A vertex stands for an irreducible exceptional curve and carries a genus and a
self-intersection number; edges record transverse intersection points
(multi-edges allowed, self-loops not).  A cycle is a dense integer coefficient
vector in the fixed vertex order; a Q-cycle uses exact rationals.  All
arithmetic is exact: Python ints and fractions.Fraction, no floating point.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError, DomainError, InternalError

Cycle = tuple[int, ...]
QCycle = tuple[Fraction, ...]

__all__ = [
    "Cycle",
    "QCycle",
    "DualGraph",
    "intersection_number",
    "cycle_products",
    "is_anti_nef",
    "fundamental_cycle",
    "canonical_qcycle",
    "arithmetic_genus",
    "is_negative_definite",
    "to_dot",
]


class DualGraph:
    """Connected weighted dual graph with a fixed vertex order.

    ``vertices`` is an iterable of ``(genus, self_intersection)`` pairs,
    ``edges`` an iterable of vertex-index pairs.  Repeating a pair makes a
    multi-edge.  Negativity of self-intersections is deliberately not
    enforced here; it is the job of :func:`is_negative_definite`.
    """

    __slots__ = ("genera", "self_ints", "edges", "_adj", "_neg_def")

    def __init__(
        self,
        vertices: Iterable[tuple[int, int]],
        edges: Iterable[tuple[int, int]] = (),
    ) -> None:
        genera: list[int] = []
        self_ints: list[int] = []
        for g, e in vertices:
            if not isinstance(g, int) or not isinstance(e, int):
                raise DomainError("vertex data must be integer (genus, self_int) pairs")
            if g < 0:
                raise DomainError(f"genus must be nonnegative, got {g}")
            genera.append(g)
            self_ints.append(e)
        n = len(genera)
        if n == 0:
            raise DomainError("a dual graph needs at least one vertex")

        norm: list[tuple[int, int]] = []
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise DomainError(f"edge ({i},{j}) leaves the vertex range 0..{n - 1}")
            if i == j:
                raise DomainError(f"self-loop at vertex {i} is not allowed")
            norm.append((i, j) if i < j else (j, i))
        norm.sort()

        adj: list[dict[int, int]] = [{} for _ in range(n)]
        for i, j in norm:
            adj[i][j] = adj[i].get(j, 0) + 1
            adj[j][i] = adj[j].get(i, 0) + 1

        # connectivity
        seen = [False] * n
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        if count != n:
            raise DomainError("dual graph must be connected")

        self.genera: tuple[int, ...] = tuple(genera)
        self.self_ints: tuple[int, ...] = tuple(self_ints)
        self.edges: tuple[tuple[int, int], ...] = tuple(norm)
        self._adj: tuple[dict[int, int], ...] = tuple(adj)
        self._neg_def: bool | None = None

    @property
    def n(self) -> int:
        return len(self.genera)

    def neighbor_items(self, i: int) -> Iterable[tuple[int, int]]:
        """Pairs (neighbor index, edge multiplicity) of vertex i."""
        return self._adj[i].items()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DualGraph):
            return NotImplemented
        return (
            self.genera == other.genera
            and self.self_ints == other.self_ints
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.genera, self.self_ints, self.edges))

    def __repr__(self) -> str:
        return f"DualGraph(n={self.n}, edges={len(self.edges)})"

    def to_json_dict(self) -> dict:
        return {
            "vertices": [
                {"genus": g, "self_int": e}
                for g, e in zip(self.genera, self.self_ints)
            ],
            "edges": [[i, j] for i, j in self.edges],
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> "DualGraph":
        try:
            vertices = [(v["genus"], v["self_int"]) for v in doc["vertices"]]
            edges = [(int(i), int(j)) for i, j in doc["edges"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed dual-graph document: {exc}") from None
        return cls(vertices, edges)


def _check_cycle(g: DualGraph, z: Sequence, name: str = "cycle") -> None:
    if len(z) != g.n:
        raise DimensionError(
            f"{name} has {len(z)} coefficients for a graph with {g.n} vertices"
        )


def intersection_number(g: DualGraph, z1: Sequence, z2: Sequence):
    """The symmetric bilinear intersection form z1 . z2.

    Exact for int and Fraction coefficients; returns int when both inputs
    are integral.
    """
    _check_cycle(g, z1, "first cycle")
    _check_cycle(g, z2, "second cycle")
    total = sum(a * e * b for a, e, b in zip(z1, g.self_ints, z2))
    for i, j in g.edges:
        total += z1[i] * z2[j] + z1[j] * z2[i]
    return total


def cycle_products(g: DualGraph, z: Sequence) -> tuple:
    """All pairings (z . E_i) in vertex order."""
    _check_cycle(g, z)
    out = []
    for i in range(g.n):
        v = z[i] * g.self_ints[i]
        for j, w in g.neighbor_items(i):
            v += w * z[j]
        out.append(v)
    return tuple(out)


def is_anti_nef(g: DualGraph, z: Sequence) -> bool:
    """True iff z . E_i <= 0 for every vertex.  Meant for effective z."""
    _check_cycle(g, z)
    for i in range(g.n):
        v = z[i] * g.self_ints[i]
        for j, w in g.neighbor_items(i):
            v += w * z[j]
        if v > 0:
            return False
    return True


def fundamental_cycle(g: DualGraph) -> Cycle:
    """Smallest non-zero anti-nef cycle, by the classical computation sequence.

    Starts at the reduced cycle and repeatedly adds the lowest-index vertex
    whose pairing is still positive.  Consecutive additions at one vertex are
    collapsed into a single batch of ceil(d_i / -E_i^2) steps; the endpoint
    does not depend on the processing order, only the trace does.
    """
    if not is_negative_definite(g):
        raise DomainError(
            "fundamental cycle needs a negative-definite graph; "
            "the computation sequence may not terminate otherwise"
        )
    n = g.n
    z = [1] * n
    d = []
    for i in range(n):
        v = g.self_ints[i]
        for _, w in g.neighbor_items(i):
            v += w
        d.append(v)
    heap = [i for i in range(n) if d[i] > 0]
    heapq.heapify(heap)
    while heap:
        i = heapq.heappop(heap)
        if d[i] <= 0:
            continue
        c = -g.self_ints[i]  # positive: diagonal of a negative-definite form
        k = -(-d[i] // c)
        z[i] += k
        d[i] -= k * c
        for j, w in g.neighbor_items(i):
            d[j] += k * w
            if d[j] > 0:
                heapq.heappush(heap, j)
    return tuple(z)


def _eliminate(g: DualGraph, rhs: Sequence | None = None, stop_on_nonneg: bool = False):
    """Exact symmetric Gaussian elimination with greedy min-degree pivoting.

    Returns (pivots, order, kept_rows, y).  kept_rows[i] holds the reduced
    off-diagonal row of vertex i at the moment it was eliminated, restricted
    to vertices eliminated later; y is the correspondingly reduced rhs.
    Linear-time on trees.  If stop_on_nonneg, bail out as soon as a pivot
    fails to be negative (enough to refute negative definiteness).
    """
    n = g.n
    rows: list[dict[int, Fraction | int]] = []
    for i in range(n):
        row: dict[int, Fraction | int] = {i: g.self_ints[i]}
        for j, w in g.neighbor_items(i):
            row[j] = w
        rows.append(row)
    y = [Fraction(v) for v in rhs] if rhs is not None else None

    alive = [True] * n
    heap = [(len(rows[i]), i) for i in range(n)]
    heapq.heapify(heap)
    pivots: list[Fraction | int] = []
    order: list[int] = []
    kept: dict[int, dict[int, Fraction | int]] = {}

    while heap:
        size, i = heapq.heappop(heap)
        if not alive[i] or size != len(rows[i]):
            continue
        alive[i] = False
        row = rows[i]
        piv = row.pop(i, 0)
        pivots.append(piv)
        order.append(i)
        kept[i] = row
        if stop_on_nonneg and piv >= 0:
            return pivots, order, kept, y
        if piv == 0:
            if row:
                raise DomainError("zero pivot with live neighbors: singular or indefinite intersection matrix")
            continue
        for j in list(row):
            off = rows[j].pop(i)
            f = Fraction(off, 1) / piv
            rj = rows[j]
            for k, v in row.items():
                if k == j:
                    rj[j] = rj[j] - f * v
                else:
                    rj[k] = rj.get(k, 0) - f * v
            if y is not None:
                y[j] -= f * y[i]
            heapq.heappush(heap, (len(rows[j]), j))
    return pivots, order, kept, y


def is_negative_definite(g: DualGraph) -> bool:
    """Exact definiteness test via symmetric elimination (all pivots < 0)."""
    if g._neg_def is None:
        try:
            pivots, _, _, _ = _eliminate(g, stop_on_nonneg=True)
        except DomainError:
            g._neg_def = False
            return False
        g._neg_def = all(p < 0 for p in pivots) and len(pivots) == g.n
    return g._neg_def


def canonical_qcycle(g: DualGraph) -> QCycle:
    """Unique rational cycle with Z_K . E_i = E_i^2 + 2 - 2 genus(E_i) for all i.

    These are the adjunction equalities for the canonical cycle; the solution
    is rational in general and integral for Gorenstein singularities.
    """
    b = [e + 2 - 2 * gen for e, gen in zip(g.self_ints, g.genera)]
    pivots, order, kept, y = _eliminate(g, rhs=b)
    if any(p == 0 for p in pivots):
        raise DomainError("singular intersection matrix")
    x: list[Fraction | None] = [None] * g.n
    assert y is not None
    for idx in range(len(order) - 1, -1, -1):
        i = order[idx]
        acc = y[i]
        for k, v in kept[i].items():
            acc -= v * x[k]
        x[i] = acc / pivots[idx]
    return tuple(Fraction(v) for v in x)  # type: ignore[arg-type]


def arithmetic_genus(g: DualGraph, z: Sequence[int]) -> int:
    """p_a(z) = z.(z + K)/2 + 1 via the adjunction values of z . K."""
    _check_cycle(g, z)
    if not any(z):
        raise DomainError("arithmetic genus of the zero cycle is undefined")
    zz = intersection_number(g, z, z)
    zk = sum(
        c * (-e + 2 * gen - 2) for c, e, gen in zip(z, g.self_ints, g.genera)
    )
    val = zz + zk
    if val % 2 != 0:
        raise InternalError(
            "z.(z+K) came out odd; the graph data is inconsistent"
        )
    return val // 2 + 1


def to_dot(g: DualGraph) -> str:
    """Graphviz rendering with one node per exceptional curve."""
    lines = ["graph dual {"]
    for i, (gen, e) in enumerate(zip(g.genera, g.self_ints)):
        lines.append(f'  n{i} [label="g={gen}, e={e}"];')
    for i, j in g.edges:
        lines.append(f"  n{i} -- n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
