"""The e x e vertex lattice and its Hamiltonian walks.

Walks are undirected: a walk and its reversal are the same object, stored in
the orientation whose first vertex is lexicographically smaller than its last.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import NamedTuple

from .errors import AdjacencyError, BoundsError, CoverageError, SizeGuardError

__all__ = [
    "Vertex", "Walk", "validate_walk", "enumerate_walks", "snake_walk",
    "count_walks_frontier", "lattice_edges", "parse_walk", "format_walk",
    "walk_to_dot", "MAX_ENUMERATION_E", "GUARD_ENV",
]

MAX_ENUMERATION_E = 6
GUARD_ENV = "GL2DIAGRAMS_ALLOW_LARGE_E"


class Vertex(NamedTuple):
    d0: int
    d1: int


def adjacent(u, v) -> bool:
    return abs(u[0] - v[0]) + abs(u[1] - v[1]) == 1


def lattice_edges(e: int) -> list[tuple[Vertex, Vertex]]:
    """All edges ``(u, v)`` with ``u < v``, in lexicographic order."""
    edges = []
    for d0 in range(e):
        for d1 in range(e):
            u = Vertex(d0, d1)
            if d1 + 1 < e:
                edges.append((u, Vertex(d0, d1 + 1)))
            if d0 + 1 < e:
                edges.append((u, Vertex(d0 + 1, d1)))
    return sorted(edges)


@dataclass(frozen=True)
class Walk:
    e: int
    vertices: tuple

    @property
    def edges(self) -> frozenset:
        return frozenset(
            frozenset((u, v)) for u, v in zip(self.vertices, self.vertices[1:])
        )

    def has_edge(self, u, v) -> bool:
        return frozenset((Vertex(*u), Vertex(*v))) in self.edges

    def reversed(self) -> "Walk":
        return Walk(self.e, self.vertices[::-1])

    def __len__(self) -> int:
        return len(self.vertices)

    def __str__(self) -> str:
        return format_walk(self)


def _canonical(vertices: tuple) -> tuple:
    return vertices if vertices[0] <= vertices[-1] else vertices[::-1]


def validate_walk(vertices, e: int) -> Walk:
    verts = tuple(Vertex(*v) for v in vertices)
    for v in verts:
        if not (0 <= v.d0 < e and 0 <= v.d1 < e):
            raise BoundsError(f"vertex {tuple(v)} outside the {e}x{e} lattice")
    for u, v in zip(verts, verts[1:]):
        if not adjacent(u, v):
            raise AdjacencyError(f"{tuple(u)} and {tuple(v)} are not adjacent")
    if len(set(verts)) != len(verts):
        raise CoverageError("walk repeats a vertex")
    if len(verts) != e * e:
        raise CoverageError(f"walk visits {len(verts)} of {e * e} vertices")
    return Walk(e, _canonical(verts))


def parse_walk(text: str, e: int) -> Walk:
    """Parse ``d0,d1;d0,d1;...``."""
    try:
        verts = [tuple(int(x) for x in chunk.split(",")) for chunk in text.strip().split(";") if chunk]
    except ValueError as exc:
        raise AdjacencyError(f"cannot parse walk {text!r}") from exc
    if any(len(v) != 2 for v in verts):
        raise BoundsError(f"walk {text!r} has a vertex without two coordinates")
    return validate_walk(verts, e)


def format_walk(walk: Walk) -> str:
    return ";".join(f"{v[0]},{v[1]}" for v in walk.vertices)


def snake_walk(e: int) -> Walk:
    """Boustrophedon: column 0 upwards, column 1 downwards, and so on."""
    if e < 1:
        raise ValueError("e must be >= 1")
    verts = []
    for d0 in range(e):
        column = range(e) if d0 % 2 == 0 else range(e - 1, -1, -1)
        verts.extend(Vertex(d0, d1) for d1 in column)
    return validate_walk(verts, e)


def _check_guard(e: int, allow_large: bool) -> None:
    if e < 1:
        raise ValueError("e must be >= 1")
    if e > MAX_ENUMERATION_E and not (allow_large or os.environ.get(GUARD_ENV)):
        raise SizeGuardError(
            f"enumerating walks for e = {e} > {MAX_ENUMERATION_E} needs allow_large=True "
            f"or the {GUARD_ENV} environment variable"
        )


def enumerate_walks(e: int, allow_large: bool = False) -> list[Walk]:
    """All Hamiltonian walks of the e x e lattice, sorted by canonical vertex sequence.

    Depth-first search from every start vertex.  A branch is cut when an
    unvisited vertex can no longer be reached, or when two unvisited vertices
    each have a single remaining connection (both would have to be the end).
    """
    _check_guard(e, allow_large)
    n = e * e
    coords = [Vertex(i // e, i % e) for i in range(n)]
    nbrs = [[j for j in range(n) if adjacent(coords[i], coords[j])] for i in range(n)]
    visited = [False] * n
    path: list[int] = []
    found = []

    def viable(head: int) -> bool:
        dead_ends = 0
        for u in range(n):
            if visited[u]:
                continue
            deg = 0
            for w in nbrs[u]:
                if not visited[w] or w == head:
                    deg += 1
            if deg == 0:
                return False
            if deg == 1:
                dead_ends += 1
                if dead_ends > 1:
                    return False
        return True

    def extend(head: int) -> None:
        if len(path) == n:
            if path[0] < path[-1] or n == 1:
                found.append(tuple(coords[i] for i in path))
            return
        for w in nbrs[head]:
            if visited[w]:
                continue
            visited[w] = True
            path.append(w)
            if viable(w):
                extend(w)
            path.pop()
            visited[w] = False

    for start in range(n):
        visited[start] = True
        path.append(start)
        extend(start)
        path.pop()
        visited[start] = False

    return [Walk(e, verts) for verts in sorted(found)]


def count_walks_frontier(e: int) -> int:
    """Count Hamiltonian walks with a row-by-row frontier (plug) DP.

    Cells are swept row-major.  The frontier holds e + 1 plugs: the down plugs
    of the cells already swept in the current row, the right plug of the last
    swept cell, and the down plugs of the previous row.  Plug labels encode
    connectivity: two plugs sharing a positive label are the ends of one path
    fragment, and ``TERM`` marks a fragment whose other end is a path endpoint.
    """
    if e < 1:
        raise ValueError("e must be >= 1")
    if e == 1:
        return 1
    TERM = -1
    total = 0
    # state: (plugs, endpoints used) -> count
    states = {((0,) * (e + 1), 0): 1}

    def normalize(plugs):
        mapping = {}
        out = []
        for x in plugs:
            if x > 0:
                if x not in mapping:
                    mapping[x] = len(mapping) + 1
                out.append(mapping[x])
            else:
                out.append(x)
        return tuple(out)

    for i in range(e):
        for j in range(e):
            last_cell = i == e - 1 and j == e - 1
            can_down = i < e - 1
            can_right = j < e - 1
            new_states: dict = {}

            def push(plugs, ends, count):
                key = (normalize(plugs), ends)
                new_states[key] = new_states.get(key, 0) + count

            for (plugs, ends), count in states.items():
                left, up = plugs[j], plugs[j + 1]
                fresh = max([x for x in plugs if x > 0], default=0) + 1

                def put(down, right, relabel=None):
                    s = list(plugs)
                    if relabel is not None:
                        old, new = relabel
                        s = [new if x == old else x for x in s]
                    s[j], s[j + 1] = down, right
                    return s

                if left == 0 and up == 0:
                    if can_down and can_right:
                        push(put(fresh, fresh), ends, count)
                    if ends < 2:
                        if can_down:
                            push(put(TERM, 0), ends + 1, count)
                        if can_right:
                            push(put(0, TERM), ends + 1, count)
                elif left == 0 or up == 0:
                    x = left or up
                    if can_down:
                        push(put(x, 0), ends, count)
                    if can_right:
                        push(put(0, x), ends, count)
                    if ends < 2:
                        # this cell is an endpoint
                        if x == TERM:
                            rest = [y for k, y in enumerate(plugs) if k not in (j, j + 1)]
                            if last_cell and not any(rest):
                                total += count
                        else:
                            push(put(0, 0, relabel=(x, TERM)), ends + 1, count)
                else:
                    if left == up and left != TERM:
                        continue  # closes a cycle
                    if left == TERM and up == TERM:
                        rest = [y for k, y in enumerate(plugs) if k not in (j, j + 1)]
                        if last_cell and not any(rest):
                            total += count
                        continue
                    if left == TERM or up == TERM:
                        other = up if left == TERM else left
                        push(put(0, 0, relabel=(other, TERM)), ends, count)
                    else:
                        push(put(0, 0, relabel=(up, left)), ends, count)
            states = new_states
        # row change: the right plug of the last cell must be empty
        states = {
            ((0,) + plugs[:e], ends): c for (plugs, ends), c in states.items() if plugs[e] == 0
        }
    return total


def walk_to_dot(walk: Walk) -> str:
    """Lattice in DOT: walk edges solid, the other lattice edges dotted."""
    e = walk.e
    lines = ["graph lattice {", "  node [shape=plaintext];"]
    for d0 in range(e):
        for d1 in range(e):
            lines.append(f'  "{d0},{d1}" [label="({d0},{d1})", pos="{d0},{d1}!"];')
    for u, v in lattice_edges(e):
        style = "solid" if walk.has_edge(u, v) else "dotted"
        lines.append(f'  "{u[0]},{u[1]}" -- "{v[0]},{v[1]}" [style={style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
