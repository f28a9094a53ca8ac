"""Shared builders for small weighted dual graphs used across the tests."""

import pytest

from singlat import DualGraph


def chain(*weights, genera=None):
    """Path graph with the given self-intersections (genus 0 unless told)."""
    n = len(weights)
    if genera is None:
        genera = [0] * n
    vertices = list(zip(genera, weights))
    edges = [(i, i + 1) for i in range(n - 1)]
    return DualGraph(vertices, edges)


def star(center, arms):
    """Star graph: center = (genus, self_int), arms = lists of self-ints,
    each arm attached to the center at its first entry."""
    vertices = [center]
    edges = []
    for arm in arms:
        prev = 0
        for w in arm:
            idx = len(vertices)
            vertices.append((0, w))
            edges.append((prev, idx))
            prev = idx
    return DualGraph(vertices, edges)


@pytest.fixture
def e8():
    """The E8 graph, laid out as the (2,3,5) star: arms of length 1, 2, 4."""
    return star((0, -2), [[-2], [-2, -2], [-2, -2, -2, -2]])


@pytest.fixture
def a2():
    return chain(-2, -2)
