import pytest

from gl2diagrams.errors import AdjacencyError, BoundsError, CoverageError, SizeGuardError
from gl2diagrams.lattice import (
    GUARD_ENV, count_walks_frontier, enumerate_walks, format_walk, lattice_edges,
    parse_walk, snake_walk, validate_walk, walk_to_dot,
)


def test_validate_examples():
    w = validate_walk([(0, 0), (1, 0), (1, 1), (0, 1)], 2)
    assert len(w.edges) == 3
    with pytest.raises(AdjacencyError):
        validate_walk([(0, 0), (1, 1)], 2)
    one = validate_walk([(0, 0)], 1)
    assert one.edges == frozenset()


def test_validate_errors():
    with pytest.raises(CoverageError):
        validate_walk([(0, 0), (1, 0), (0, 0), (0, 1)], 2)
    with pytest.raises(CoverageError):
        validate_walk([(0, 0), (1, 0), (1, 1)], 2)
    with pytest.raises(BoundsError):
        validate_walk([(0, 0), (0, 1), (0, 2), (1, 2)], 2)


def test_reversal_is_canonicalized():
    a = validate_walk([(0, 0), (1, 0), (1, 1), (0, 1)], 2)
    b = validate_walk([(0, 1), (1, 1), (1, 0), (0, 0)], 2)
    assert a == b
    assert a.vertices[0] <= a.vertices[-1]


def test_snake():
    assert list(snake_walk(1).vertices) == [(0, 0)]
    assert list(snake_walk(2).vertices) == [(0, 0), (0, 1), (1, 1), (1, 0)]
    w3 = snake_walk(3)
    assert validate_walk(w3.vertices, 3) == w3


def test_small_counts():
    assert len(enumerate_walks(1)) == 1
    assert len(enumerate_walks(2)) == 4
    assert len(enumerate_walks(3)) == count_walks_frontier(3) == 20


def test_enumeration_is_sorted_and_contains_snake():
    for e in (1, 2, 3, 4):
        walks = enumerate_walks(e)
        keys = [w.vertices for w in walks]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)
        assert snake_walk(e) in walks


def test_frontier_counter_beyond_enumeration():
    assert count_walks_frontier(5) == len(enumerate_walks(5))


def test_size_guard(monkeypatch):
    monkeypatch.delenv(GUARD_ENV, raising=False)
    with pytest.raises(SizeGuardError):
        enumerate_walks(7)


def test_text_format_round_trip():
    w = parse_walk("0,0;1,0;1,1;0,1", 2)
    assert format_walk(w) == "0,0;1,0;1,1;0,1"
    assert parse_walk(format_walk(snake_walk(3)), 3) == snake_walk(3)


def test_dot_export_styles():
    dot = walk_to_dot(parse_walk("0,0;1,0;1,1;0,1", 2))
    assert dot.count("style=solid") == 3
    assert dot.count("style=dotted") == 1
    assert '"0,0" -- "0,1" [style=dotted]' in dot


def test_lattice_edge_count():
    for e in range(1, 5):
        assert len(lattice_edges(e)) == 2 * e * (e - 1)
