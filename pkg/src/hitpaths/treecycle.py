"""Polynomial-time exact hitting subroutines on paths, trees, and cycles.

stab_intervals is the classic earliest-right-endpoint greedy for piercing
intervals on a line; hit_subtrees_in_tree is the deepest-vertex greedy for
subtrees of a tree; hit_paths_in_cycle tries every cycle vertex and solves
the remaining open path greedily.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotASubtree, NotATree, ValidationError
from .graph import Graph, cyclomatic_number


@dataclass(frozen=True)
class Interval:
    """Positions lo..hi (1-based, inclusive) on a path component."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValidationError(f"interval [{self.lo},{self.hi}] is reversed")

    def contains(self, pos: int) -> bool:
        return self.lo <= pos <= self.hi


@dataclass(frozen=True)
class CycleArc:
    """Positions along a cycle from lo to hi going in increasing direction;
    lo > hi wraps around the end."""

    lo: int
    hi: int

    def contains(self, pos: int) -> bool:
        if self.lo <= self.hi:
            return self.lo <= pos <= self.hi
        return pos >= self.lo or pos <= self.hi

    def length(self, cycle_length: int) -> int:
        if self.lo <= self.hi:
            return self.hi - self.lo + 1
        return cycle_length - self.lo + 1 + self.hi


def stab_intervals(length: int, intervals) -> tuple[int, frozenset[int]]:
    """Minimum set of positions meeting every interval; greedy by right end."""
    for iv in intervals:
        if not (1 <= iv.lo <= iv.hi <= length):
            raise ValidationError(f"interval [{iv.lo},{iv.hi}] out of range for length {length}")
    picked: list[int] = []
    last = 0
    for iv in sorted(intervals, key=lambda iv: (iv.hi, iv.lo)):
        if iv.lo > last:
            picked.append(iv.hi)
            last = iv.hi
    return len(picked), frozenset(picked)


def hit_subtrees_in_tree(tree: Graph, subtrees) -> frozenset[int]:
    """Minimum vertex set meeting every target subtree of the tree.

    Roots the tree at its lowest-id leaf, then repeatedly picks the deepest
    vertex whose rooted subtree fully contains some unhit target (ties on
    depth broken by smaller id). That vertex is the shallowest member of the
    target, so picking it is always safe.
    """
    adj = tree.adjacency()
    if tree.n == 0:
        raise NotATree("empty graph")
    if tree.m != tree.n - 1 or len(tree.components()) != 1:
        raise NotATree("graph is not connected and acyclic")
    targets = []
    for i, s in enumerate(subtrees):
        vs = set(s)
        if not vs or any(not (1 <= v <= tree.n) for v in vs):
            raise NotASubtree(f"target {i + 1} is empty or out of range")
        if not _connected_in(adj, vs):
            raise NotASubtree(f"target {i + 1} does not induce a subtree")
        targets.append(vs)

    leaves = [v for v in tree.vertices() if len(adj[v]) <= 1]
    root = min(leaves)
    depth = {root: 0}
    order = [root]
    for v in order:
        for w in adj[v]:
            if w not in depth:
                depth[w] = depth[v] + 1
                order.append(w)

    chosen: set[int] = set()
    unhit = list(range(len(targets)))
    # shallowest member of a connected target is unique and lies inside it
    anchor = [min(t, key=lambda v: (depth[v], v)) for t in targets]
    while unhit:
        pick = max((anchor[i] for i in unhit), key=lambda v: (depth[v], -v))
        chosen.add(pick)
        unhit = [i for i in unhit if pick not in targets[i]]
    return frozenset(chosen)


def _connected_in(adj: dict[int, set[int]], vs: set[int]) -> bool:
    start = next(iter(vs))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w in vs and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == vs


def hit_paths_in_cycle(cycle_length: int, arcs) -> tuple[int, frozenset[int]]:
    """Exact minimum piercing of vertex arcs on a cycle.

    Tries every vertex as a solution member; deleting it opens the cycle
    into a path, where the remaining arcs are stabbed greedily. Among
    optima, the answer for the smallest tried vertex is returned.
    """
    if cycle_length < 3:
        raise ValidationError(f"cycle length {cycle_length} below 3")
    arcs = list(arcs)
    for arc in arcs:
        if not (1 <= arc.lo <= cycle_length and 1 <= arc.hi <= cycle_length):
            raise ValidationError(f"arc ({arc.lo},{arc.hi}) out of range")
        if arc.length(cycle_length) >= cycle_length:
            raise ValidationError("arc covers the whole cycle")
    if not arcs:
        return 0, frozenset()

    best: tuple[int, frozenset[int]] | None = None
    for v in range(1, cycle_length + 1):
        rest = [a for a in arcs if not a.contains(v)]
        # cut at v: position p maps to (p - v) mod L in 1..L-1
        ivs = [
            Interval((a.lo - v) % cycle_length, (a.hi - v) % cycle_length)
            for a in rest
        ]
        size, pts = stab_intervals(cycle_length - 1, ivs)
        back = frozenset({v} | {(q + v - 1) % cycle_length + 1 for q in pts})
        if best is None or 1 + size < best[0]:
            best = (1 + size, back)
    return best
