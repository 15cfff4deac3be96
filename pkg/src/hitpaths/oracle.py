"""Brute-force reference solvers used for cross-validation.

Small and slow on purpose: a bounded search tree for minimum hitting set
over arbitrary set families, exhaustive exact-budget enumeration for
flowers, and naive clique search.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from typing import Optional

from .errors import CapExceeded, ValidationError
from .flower import FlowerInstance
from .graph import Graph
from .instance_io import Solution


def default_cap() -> int:
    return int(os.environ.get("HITPATHS_CAP", 10**7))


@dataclass(frozen=True)
class SetSystem:
    universe: int
    sets: tuple[frozenset[int], ...]

    @staticmethod
    def build(universe: int, sets) -> "SetSystem":
        frozen = tuple(frozenset(s) for s in sets)
        for s in frozen:
            if any(not (1 <= v <= universe) for v in s):
                raise ValidationError("set member outside the universe")
        return SetSystem(universe, frozen)


def exact_min_hitting_set(
    sys: SetSystem, cap: int
) -> tuple[Optional[int], Optional[frozenset[int]]]:
    """Exact minimum hitting set of size at most cap, else (None, None).

    Bounded search tree: take the first unhit set, branch on its elements in
    ascending order, prune at the best size found so far. An empty target
    set is unhittable, so its presence reports the cap as exceeded.
    """
    if cap < 0:
        raise ValidationError("cap must be nonnegative")
    if any(not s for s in sys.sets):
        return None, None
    sets = [sorted(s) for s in sys.sets]
    best: list = [None, None]  # size, witness

    def dfs(chosen: set[int]) -> None:
        target = next((s for s in sets if not chosen.intersection(s)), None)
        if target is None:
            if best[0] is None or len(chosen) < best[0]:
                best[0], best[1] = len(chosen), frozenset(chosen)
            return
        bound = cap if best[0] is None else min(cap, best[0] - 1)
        if len(chosen) >= bound:
            return
        for v in target:
            chosen.add(v)
            dfs(chosen)
            chosen.discard(v)

    dfs(set())
    return best[0], best[1]


def flower_bruteforce(inst: FlowerInstance, cap: Optional[int] = None) -> Solution:
    """Enumerate all exact-budget petal subsets; first hit combination wins."""
    if cap is None:
        cap = default_cap()
    work = math.prod(
        math.comb(len(p), b) for p, b in zip(inst.petals, inst.budgets)
    )
    if work > cap:
        raise CapExceeded(f"{work} combinations exceed cap {cap}")
    if any(b > len(p) for p, b in zip(inst.petals, inst.budgets)):
        return Solution("NO")
    pools = [
        list(itertools.combinations(sorted(p), b))
        for p, b in zip(inst.petals, inst.budgets)
    ]
    for combo in itertools.product(*pools):
        chosen = frozenset(v for part in combo for v in part)
        cert = []
        for path in inst.paths:
            hits = sorted(chosen.intersection(path))
            if not hits:
                cert = None
                break
            cert.append(hits[0])
        if cert is not None:
            return Solution("YES", chosen, tuple(cert))
    return Solution("NO")


def has_k_clique(g: Graph, k: int) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Exhaustive scan over k-subsets in lexicographic order."""
    if k < 1:
        raise ValidationError("k must be at least 1")
    for combo in itertools.combinations(g.vertices(), k):
        if all(g.has_edge(u, v) for u, v in itertools.combinations(combo, 2)):
            return True, combo
    return False, None
