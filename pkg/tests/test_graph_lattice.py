"""Intersection theory on weighted dual graphs: construction, pairing,
anti-nef cycles, Laufer's algorithm, adjunction, definiteness."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singlat import (
    DimensionError,
    DomainError,
    DualGraph,
    arithmetic_genus,
    canonical_qcycle,
    cycle_products,
    fundamental_cycle,
    intersection_number,
    is_anti_nef,
    is_negative_definite,
    to_dot,
)
from conftest import chain, star

E8_ROOT = (6, 3, 4, 2, 5, 4, 3, 2)  # highest root in the (2,3,5) star layout


# ---------------------------------------------------------------- construction

def test_vertex_validation():
    with pytest.raises(DomainError):
        DualGraph([], [])
    with pytest.raises(DomainError):
        DualGraph([(-1, -2)], [])  # negative genus
    with pytest.raises(DomainError):
        DualGraph([(0, -2.0)], [])  # non-integer weight
    DualGraph([(0, -2)], [])  # fine


def test_edge_validation():
    with pytest.raises(DomainError):
        DualGraph([(0, -2), (0, -2)], [(0, 0)])  # self-loop
    with pytest.raises(DomainError):
        DualGraph([(0, -2), (0, -2)], [(0, 2)])  # out of range
    with pytest.raises(DomainError):
        DualGraph([(0, -2), (0, -2)], [])  # disconnected


def test_multi_edges_allowed():
    g = DualGraph([(0, -2), (0, -2)], [(0, 1), (0, 1)])
    assert intersection_number(g, (1, 0), (0, 1)) == 2
    # that cycle squares to zero, so the form is not definite
    assert intersection_number(g, (1, 1), (1, 1)) == 0
    assert not is_negative_definite(g)


def test_equality_and_serialization(e8):
    doc = e8.to_json_dict()
    back = DualGraph.from_json_dict(doc)
    assert back == e8
    assert hash(back) == hash(e8)
    assert back.to_json_dict() == doc
    assert doc["vertices"][0] == {"genus": 0, "self_int": -2}


def test_edge_order_does_not_matter():
    g1 = DualGraph([(0, -2), (0, -3), (1, -2)], [(0, 1), (1, 2)])
    g2 = DualGraph([(0, -2), (0, -3), (1, -2)], [(2, 1), (1, 0)])
    assert g1 == g2


# --------------------------------------------------------------------- pairing

def test_intersection_fixtures(e8, a2):
    assert intersection_number(e8, E8_ROOT, E8_ROOT) == -2
    assert intersection_number(a2, (1, 1), (1, 1)) == -2
    assert intersection_number(a2, (1, 0), (0, 1)) == 1
    q = tuple(Fraction(v, 2) for v in E8_ROOT)
    assert intersection_number(e8, q, q) == Fraction(-1, 2)


def test_cycle_products_match_basis_pairings(e8):
    prods = cycle_products(e8, E8_ROOT)
    for i in range(e8.n):
        basis = tuple(1 if j == i else 0 for j in range(e8.n))
        assert prods[i] == intersection_number(e8, E8_ROOT, basis)


def test_cycle_length_mismatch(a2):
    with pytest.raises(DimensionError):
        intersection_number(a2, (1,), (1, 1))
    with pytest.raises(DimensionError):
        cycle_products(a2, (1, 1, 1))


def test_anti_nef(e8, a2):
    assert is_anti_nef(e8, E8_ROOT)
    assert is_anti_nef(a2, (1, 1))
    assert is_anti_nef(a2, (2, 1))  # products (-3, 0)
    assert not is_anti_nef(a2, (1, 0))  # pairs +1 against the other vertex
    assert is_anti_nef(a2, (0, 0))


# ------------------------------------------------------------ fundamental cycle

def test_fundamental_cycle_e8(e8):
    zf = fundamental_cycle(e8)
    assert zf == E8_ROOT
    assert is_anti_nef(e8, zf)
    assert arithmetic_genus(e8, zf) == 0


def test_fundamental_cycle_chains():
    for n in range(1, 7):
        g = chain(*([-2] * n))
        assert fundamental_cycle(g) == (1,) * n


def test_fundamental_cycle_d4():
    g = star((0, -2), [[-2], [-2], [-2]])
    assert fundamental_cycle(g) == (2, 1, 1, 1)


def test_fundamental_cycle_minimality(e8):
    """Dropping any vertex with coefficient > 1 must break anti-nefness."""
    zf = fundamental_cycle(e8)
    for i in range(e8.n):
        if zf[i] > 1:
            smaller = tuple(v - (1 if j == i else 0) for j, v in enumerate(zf))
            assert not is_anti_nef(e8, smaller)


def test_fundamental_cycle_needs_definiteness():
    g = DualGraph([(0, 0)], [])
    with pytest.raises(DomainError):
        fundamental_cycle(g)
    assert not is_negative_definite(g)


# ---------------------------------------------------------------- definiteness

def test_definiteness_fixtures(e8, a2):
    assert is_negative_definite(e8)
    assert is_negative_definite(a2)
    assert is_negative_definite(DualGraph([(3, -1)], []))
    assert not is_negative_definite(DualGraph([(0, 1)], []))
    assert not is_negative_definite(DualGraph([(0, 0)], []))
    # two -1 curves meeting once: determinant 1 - 1 = 0, semidefinite
    assert not is_negative_definite(chain(-1, -1))


# ------------------------------------------------------------------- adjunction

def test_canonical_qcycle_e8(e8):
    assert canonical_qcycle(e8) == (Fraction(0),) * 8


def test_canonical_qcycle_star_346():
    g = star((1, -2), [[-2], [-2], [-2]])
    assert canonical_qcycle(g) == (Fraction(4), Fraction(2), Fraction(2), Fraction(2))


def test_canonical_qcycle_fractional():
    g = DualGraph([(0, -3)], [])
    assert canonical_qcycle(g) == (Fraction(1, 3),)


def test_canonical_qcycle_singular_graph():
    with pytest.raises(DomainError):
        canonical_qcycle(DualGraph([(0, 0)], []))


def test_canonical_qcycle_solves_adjunction(e8):
    g = star((2, -3), [[-2, -3], [-4], [-2, -2, -5]])
    zk = canonical_qcycle(g)
    for i in range(g.n):
        basis = tuple(1 if j == i else 0 for j in range(g.n))
        want = g.self_ints[i] + 2 - 2 * g.genera[i]
        assert intersection_number(g, zk, basis) == want


# -------------------------------------------------------------- arithmetic genus

def test_arithmetic_genus_fixtures(e8, a2):
    assert arithmetic_genus(a2, (1, 1)) == 0
    assert arithmetic_genus(e8, E8_ROOT) == 0
    elliptic = DualGraph([(1, -1)], [])
    assert arithmetic_genus(elliptic, (1,)) == 1
    with pytest.raises(DomainError):
        arithmetic_genus(a2, (0, 0))


def test_to_dot(e8):
    text = to_dot(e8)
    assert "g=0, e=-2" in text
    assert text.count("--") == 7


# ----------------------------------------------------------- random properties

@st.composite
def tree_graphs(draw):
    """Random trees whose form is strictly diagonally dominant, hence
    negative definite: -e_i >= deg(i) everywhere, > somewhere."""
    n = draw(st.integers(min_value=1, max_value=9))
    edges = [(draw(st.integers(min_value=0, max_value=i - 1)), i)
             for i in range(1, n)]
    deg = [0] * n
    for i, j in edges:
        deg[i] += 1
        deg[j] += 1
    slack = [draw(st.integers(min_value=0, max_value=3)) for _ in range(n)]
    slack[draw(st.integers(min_value=0, max_value=n - 1))] = max(1, slack[0])
    vertices = [
        (draw(st.integers(min_value=0, max_value=2)),
         -max(deg[i] + slack[i], 2))
        for i in range(n)
    ]
    return DualGraph(vertices, edges)


@st.composite
def graph_and_cycles(draw):
    g = draw(tree_graphs())
    mk = st.tuples(*[st.integers(min_value=-6, max_value=6)] * g.n)
    return g, draw(mk), draw(mk), draw(mk)


@given(graph_and_cycles())
@settings(max_examples=120, deadline=None)
def test_pairing_is_symmetric_and_bilinear(data):
    g, z1, z2, z3 = data
    assert intersection_number(g, z1, z2) == intersection_number(g, z2, z1)
    z12 = tuple(a + b for a, b in zip(z1, z2))
    assert intersection_number(g, z12, z3) == (
        intersection_number(g, z1, z3) + intersection_number(g, z2, z3)
    )


@given(tree_graphs())
@settings(max_examples=80, deadline=None)
def test_trees_with_small_weights_are_definite(g):
    assert is_negative_definite(g)
    zf = fundamental_cycle(g)
    assert all(v >= 1 for v in zf)
    assert is_anti_nef(g, zf)


@given(graph_and_cycles())
@settings(max_examples=120, deadline=None)
def test_genus_parity_always_even(data):
    """z(z+K) is even for every integral cycle, so p_a never raises."""
    g, z1, _, _ = data
    if all(v == 0 for v in z1):
        return
    assert isinstance(arithmetic_genus(g, z1), int)


@given(tree_graphs(), st.randoms())
@settings(max_examples=60, deadline=None)
def test_relabeling_invariance(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    vertices = [None] * g.n
    for old, new in enumerate(perm):
        vertices[new] = (g.genera[old], g.self_ints[old])
    edges = [(perm[i], perm[j]) for i, j in g.edges]
    h = DualGraph(vertices, edges)
    zf_g = fundamental_cycle(g)
    zf_h = fundamental_cycle(h)
    assert all(zf_h[perm[i]] == zf_g[i] for i in range(g.n))
    assert is_negative_definite(h) == is_negative_definite(g)
