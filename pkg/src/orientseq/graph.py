"""Directed multigraphs and Eulerian circuits (Hierholzer).

Only what the constructions need: arc storage, degree balance, support
connectivity, and deterministic circuit extraction.  Undirected multigraphs
get their own adapter so that each edge is consumed once in total.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Any, Callable, Hashable, Iterable, Optional


class NotEulerianError(ValueError):
    pass


@dataclass(frozen=True)
class CircuitResult:
    """A closed walk; ``vertices[0] == vertices[-1]`` when any arc was used."""

    vertices: list
    arcs_consumed: int

    @property
    def cycle(self) -> list:
        """The walk without its repeated closing vertex."""
        return self.vertices[:-1]

    def __len__(self) -> int:
        return self.arcs_consumed


class DirectedMultigraph:
    def __init__(self, vertices: Iterable[Hashable] = (), arcs: Iterable[tuple] = ()):
        self._vertices: dict[Hashable, None] = {}
        self.arcs: list[tuple] = []
        for v in vertices:
            self.add_vertex(v)
        for u, v in arcs:
            self.add_arc(u, v)

    @property
    def vertices(self) -> list:
        return list(self._vertices)

    def add_vertex(self, v: Hashable) -> None:
        self._vertices.setdefault(v, None)

    def add_arc(self, u: Hashable, v: Hashable, *, register: bool = True) -> None:
        if register:
            self.add_vertex(u)
            self.add_vertex(v)
        elif u not in self._vertices or v not in self._vertices:
            raise KeyError(f"arc ({u!r}, {v!r}) has an unregistered endpoint")
        self.arcs.append((u, v))

    def out_degree(self) -> dict:
        deg = dict.fromkeys(self._vertices, 0)
        for u, _ in self.arcs:
            deg[u] += 1
        return deg

    def in_degree(self) -> dict:
        deg = dict.fromkeys(self._vertices, 0)
        for _, v in self.arcs:
            deg[v] += 1
        return deg

    def copy(self) -> "DirectedMultigraph":
        return DirectedMultigraph(self._vertices, self.arcs)

    def __len__(self) -> int:
        return len(self.arcs)


def check_balanced(g: DirectedMultigraph) -> bool:
    return g.in_degree() == g.out_degree()


def _support_components(vertices: Iterable, edges: Iterable[tuple]) -> int:
    parent: dict = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent.setdefault(u, u)
        parent.setdefault(v, v)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return len({find(x) for x in parent})


def check_connected_on_support(g: DirectedMultigraph) -> bool:
    """Weak connectivity of the vertices touched by arcs.

    For a balanced digraph this is equivalent to strong connectivity.
    """
    return _support_components(g.vertices, g.arcs) <= 1


def eulerian_circuit(
    g: DirectedMultigraph,
    start: Optional[Hashable] = None,
    tie_break: Optional[Callable[[Any], Any]] = None,
) -> CircuitResult:
    """Closed walk using every arc of ``g`` once.

    Among unused out-arcs the walk takes the smallest head under
    ``tie_break`` (natural order by default), so the output is reproducible.
    ``start`` defaults to the smallest vertex with an out-arc.  ``g`` itself is
    not modified.
    """
    if not g.arcs:
        return CircuitResult([] if start is None else [start], 0)
    if not check_balanced(g):
        raise NotEulerianError("not Eulerian (degree)")
    if not check_connected_on_support(g):
        raise NotEulerianError("not Eulerian (connectivity)")
    key = tie_break or (lambda v: v)
    out: dict = defaultdict(list)
    for u, v in g.arcs:
        out[u].append(v)
    for u in out:
        out[u].sort(key=key, reverse=True)  # pop() yields the smallest
    if start is None:
        start = min(out, key=key)
    elif not out.get(start):
        raise ValueError(f"start vertex {start!r} has no out-arcs")

    stack = [start]
    walk = []
    while stack:
        v = stack[-1]
        if out[v]:
            stack.append(out[v].pop())
        else:
            walk.append(stack.pop())
    walk.reverse()
    return CircuitResult(walk, len(walk) - 1)


def replay(g: DirectedMultigraph, circuit: CircuitResult) -> bool:
    """True iff the walk removes every arc of a fresh copy of ``g`` exactly once."""
    remaining: dict = defaultdict(int)
    for arc in g.arcs:
        remaining[arc] += 1
    walk = circuit.vertices
    if walk and walk[0] != walk[-1]:
        return False
    for arc in zip(walk, walk[1:]):
        if remaining[arc] == 0:
            return False
        remaining[arc] -= 1
    return not any(remaining.values())


def undirected_euler(
    q: int, edges: Iterable[tuple[int, int]], start: Optional[int] = None
) -> CircuitResult:
    """Eulerian circuit of an undirected multigraph on vertices 0..q-1.

    Each edge is consumed once in total, in whichever direction the walk
    meets it; ties go to the smallest neighbour.
    """
    edges = list(edges)
    if not edges:
        return CircuitResult([], 0)
    inc: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for eid, (u, v) in enumerate(edges):
        if not (0 <= u < q and 0 <= v < q):
            raise ValueError(f"edge {(u, v)} outside vertex range 0..{q - 1}")
        inc[u].append((v, eid))
        if u != v:
            inc[v].append((u, eid))
        else:
            inc[u].append((v, eid))
    if any(len(x) % 2 for x in inc.values()):
        raise NotEulerianError("not Eulerian (degree)")
    if _support_components(range(q), edges) > 1:
        raise NotEulerianError("not Eulerian (connectivity)")
    for v in inc:
        inc[v].sort(reverse=True)
    used = [False] * len(edges)
    if start is None:
        start = min(inc)
    stack = [start]
    walk = []
    while stack:
        v = stack[-1]
        nbrs = inc[v]
        while nbrs and used[nbrs[-1][1]]:
            nbrs.pop()
        if nbrs:
            w, eid = nbrs.pop()
            used[eid] = True
            stack.append(w)
        else:
            walk.append(stack.pop())
    walk.reverse()
    return CircuitResult(walk, len(walk) - 1)
