"""Simple undirected graphs over dense 1-based vertex ids.

Provides the structural measures and rewriting operations the solvers rely
on: cyclomatic number, the set of high-degree vertices, the decomposition of
a graph minus its high-degree vertices into path components, vertex
identification, and deterministic bridging of disconnected inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import NotAPath, ValidationError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n with normalized edge pairs."""

    n: int
    edges: frozenset[tuple[int, int]]

    @staticmethod
    def build(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValidationError(f"negative vertex count {n}")
        normalized = set()
        for u, v in edges:
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValidationError(f"edge ({u},{v}) out of range 1..{n}")
            e = (u, v) if u < v else (v, u)
            if e in normalized:
                raise ValidationError(f"duplicate edge {e}")
            normalized.add(e)
        return Graph(n, frozenset(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices()}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def has_edge(self, u: int, v: int) -> bool:
        e = (u, v) if u < v else (v, u)
        return e in self.edges

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by smallest id."""
        adj = self.adjacency()
        seen: set[int] = set()
        comps = []
        for start in self.vertices():
            if start in seen:
                continue
            stack = [start]
            seen.add(start)
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps


@dataclass(frozen=True)
class PathComponent:
    """A path-shaped component of G - S, laid out left to right.

    attach_left / attach_right are the S-vertices adjacent to the first and
    last vertex; they are None when the corresponding endpoint has no
    neighbor in S (only possible for graphs of minimum degree below two).
    """

    vertices: tuple[int, ...]
    attach_left: Optional[int]
    attach_right: Optional[int]


def is_simple_path(g: Graph, seq: Sequence[int]) -> bool:
    if len(seq) == 0:
        return False
    if len(set(seq)) != len(seq):
        return False
    if any(not (1 <= v <= g.n) for v in seq):
        return False
    return all(g.has_edge(a, b) for a, b in zip(seq, seq[1:]))


def cyclomatic_number(g: Graph) -> int:
    """m - n + c; the minimum number of edges whose removal leaves a forest."""
    return g.m - g.n + len(g.components())


def high_degree_set(g: Graph) -> list[int]:
    """Vertices of degree at least three, ascending."""
    adj = g.adjacency()
    return [v for v in g.vertices() if len(adj[v]) >= 3]


def path_components(g: Graph, s: set[int]) -> list[PathComponent]:
    """Components of g - s, each required to be an induced path.

    Orientation: the endpoint with the smaller id comes first. Components are
    ordered by their smallest contained id. Raises NotAPath when a component
    is not an induced path, which signals a precondition violation by the
    caller (s must contain every vertex of degree != 2).
    """
    adj = g.adjacency()
    rest = [v for v in g.vertices() if v not in s]
    sub_adj = {v: sorted(w for w in adj[v] if w not in s) for v in rest}

    seen: set[int] = set()
    comps: list[PathComponent] = []
    for start in rest:
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in sub_adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        n_edges = sum(len(sub_adj[v]) for v in comp) // 2
        if n_edges != len(comp) - 1 or any(len(sub_adj[v]) > 2 for v in comp):
            raise NotAPath(f"component containing {min(comp)} is not an induced path")
        if len(comp) == 1:
            v = comp[0]
            s_nbrs = sorted(w for w in adj[v] if w in s)
            left = s_nbrs[0] if s_nbrs else None
            right = s_nbrs[-1] if s_nbrs else None
            comps.append(PathComponent((v,), left, right))
        else:
            ends = sorted(v for v in comp if len(sub_adj[v]) <= 1)
            first = ends[0]
            order = [first]
            prev = None
            cur = first
            while len(order) < len(comp):
                nxt = [w for w in sub_adj[cur] if w != prev]
                prev, cur = cur, nxt[0]
                order.append(cur)
            left_nbrs = sorted(w for w in adj[order[0]] if w in s)
            right_nbrs = sorted(w for w in adj[order[-1]] if w in s)
            comps.append(
                PathComponent(
                    tuple(order),
                    left_nbrs[0] if left_nbrs else None,
                    right_nbrs[0] if right_nbrs else None,
                )
            )
    comps.sort(key=lambda c: min(c.vertices))
    return comps


def identify_vertices(g: Graph, target: set[int]) -> tuple[Graph, dict[int, int]]:
    """Collapse all of target into one fresh vertex adjacent to N(target).

    Remaining vertices are relabeled densely in ascending order; the fresh
    vertex gets the highest new id. Parallel edges collapse and self-loops
    vanish, keeping the result simple. Returns the old->new map (members of
    target all map to the fresh vertex).
    """
    if not target:
        raise ValidationError("target must be nonempty")
    if any(not (1 <= v <= g.n) for v in target):
        raise ValidationError("target vertex out of range")
    remaining = [v for v in g.vertices() if v not in target]
    mapping = {v: i + 1 for i, v in enumerate(remaining)}
    z = len(remaining) + 1
    for v in target:
        mapping[v] = z
    new_edges = set()
    for u, v in g.edges:
        mu, mv = mapping[u], mapping[v]
        if mu != mv:
            new_edges.add((mu, mv) if mu < mv else (mv, mu))
    return Graph(z, frozenset(new_edges)), mapping


def connect_components(g: Graph) -> Graph:
    """Bridge all components into one, preserving the cyclomatic number.

    Each later component's lowest-id vertex is joined to the lowest-id vertex
    of the first component.
    """
    comps = g.components()
    if len(comps) <= 1:
        return g
    base = comps[0][0]
    extra = {(min(base, c[0]), max(base, c[0])) for c in comps[1:]}
    return Graph(g.n, g.edges | extra)
