"""The fixed-parameter algorithm for hitting simple paths.

Pipeline: strip degree-<=1 vertices (forcing those demanded by singleton
targets), bridge components, dispatch simple cycles to the cycle solver,
and otherwise branch over which high-degree vertices join the solution and
which path components get their optimum budget versus optimum+1. Every
surviving branch becomes an exact-budget flower instance solved via signed
2-SAT; the first successful branch yields the answer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import FlowerShapeViolation, InvariantViolation, ValidationError
from .flower import FlowerInstance, make_flower, solve_flower
from .graph import (
    Graph,
    PathComponent,
    connect_components,
    cyclomatic_number,
    high_degree_set,
    path_components,
)
from .instance_io import (
    KIND_PATHS,
    HitPathsInstance,
    Solution,
    certificate_for,
    unhit_targets,
)
from .treecycle import CycleArc, Interval, hit_paths_in_cycle, stab_intervals


@dataclass(frozen=True)
class PreprocessResult:
    graph: Graph  # relabeled residual graph, min degree >= 2 (or empty)
    paths: tuple[tuple[int, ...], ...]  # in residual ids
    forced: frozenset[int]  # original ids forced into every solution
    t_remaining: int  # may be negative
    old_to_new: dict[int, int]
    new_to_old: dict[int, int]


@dataclass
class SolveStats:
    k: int = 0
    high_degree: int = 0
    components: int = 0
    branches_enumerated: int = 0
    branches_after_filter: int = 0
    flower_calls: int = 0
    solution_cost: Optional[int] = None
    best_cost: Optional[int] = None


class BranchInfeasible:
    """A guessed branch admits no solution (some target became unhittable)."""


@dataclass(frozen=True)
class DirectVerdict:
    """Branch outcome when no core remains: all of S was guessed into the
    solution, so surviving targets live inside single components."""

    feasible: bool


def preprocess(inst: HitPathsInstance) -> PreprocessResult:
    """Remove degree-<=1 vertices until the residual has min degree >= 2.

    A vertex demanded by a singleton target is forced into the solution and
    the budget drops by one; any other low-degree vertex can be skipped, so
    it is deleted and shaved off the ends of the targets containing it.
    """
    if inst.kind != KIND_PATHS:
        raise ValidationError("preprocessing applies to path instances only")
    g = inst.graph
    adj = {v: set(ns) for v, ns in g.adjacency().items()}
    alive = set(g.vertices())
    paths = [list(p) for p in inst.paths]
    forced: set[int] = set()
    t = inst.t
    k_before = cyclomatic_number(g)

    while True:
        low = sorted(v for v in alive if len(adj[v]) <= 1)
        if not low:
            break
        v = low[0]
        if any(p == [v] for p in paths):
            forced.add(v)
            t -= 1
            paths = [p for p in paths if v not in p]
        else:
            # v has degree <= 1, so it can only sit at the end of a target
            paths = [[u for u in p if u != v] for p in paths]
        for w in adj[v]:
            adj[w].discard(v)
        del adj[v]
        alive.discard(v)

    old_to_new = {v: i + 1 for i, v in enumerate(sorted(alive))}
    new_to_old = {i: v for v, i in old_to_new.items()}
    edges = {
        (min(old_to_new[u], old_to_new[w]), max(old_to_new[u], old_to_new[w]))
        for u in alive
        for w in adj[u]
        if u < w
    }
    residual = Graph(len(alive), frozenset(edges))
    assert cyclomatic_number(residual) == k_before
    new_paths = tuple(tuple(old_to_new[v] for v in p) for p in paths)
    assert all(p for p in new_paths)
    return PreprocessResult(residual, new_paths, frozenset(forced), t, old_to_new, new_to_old)


@dataclass(frozen=True)
class ComponentData:
    component: PathComponent
    opt: int
    internal: tuple[Interval, ...]  # targets fully inside, as position intervals


def component_budgets(g: Graph, s, paths) -> list[ComponentData]:
    """Per component of g - s: its internal targets and their piercing optimum.

    Budget candidates for the branching step are {opt, opt + 1}.
    """
    comps = path_components(g, set(s))
    out = []
    for comp in comps:
        vset = set(comp.vertices)
        pos = {v: i + 1 for i, v in enumerate(comp.vertices)}
        ivs = []
        for p in paths:
            if set(p) <= vset:
                js = [pos[v] for v in p]
                ivs.append(Interval(min(js), max(js)))
        ivs = [Interval(lo, hi) for lo, hi in sorted(set((iv.lo, iv.hi) for iv in ivs))]
        opt, _ = stab_intervals(len(comp.vertices), ivs)
        out.append(ComponentData(comp, opt, tuple(ivs)))
    return out


def build_flower_branch(
    s: list[int],
    comps: list[ComponentData],
    budgets: list[int],
    s_prime: set[int],
    paths,
    core_id: int,
) -> Union[BranchInfeasible, DirectVerdict, FlowerInstance]:
    """Turn one (S', budgets) guess into a flower instance.

    Delete S' and the targets it hits, drop targets that fully contain a
    positive-budget component, delete zero-budget components while shaving
    their vertices out of the targets, and finally identify the remaining
    high-degree vertices into the core.
    """
    comp_of: dict[int, int] = {}
    for ci, cd in enumerate(comps):
        for v in cd.component.vertices:
            comp_of[v] = ci
    core_set = set(s) - s_prime
    dead = set()  # vertices of zero-budget components
    for ci, cd in enumerate(comps):
        if budgets[ci] == 0:
            dead.update(cd.component.vertices)

    surviving: list[list[int]] = []
    for p in paths:
        pv = set(p)
        if pv & s_prime:
            continue
        touched = {comp_of[v] for v in p if v in comp_of}
        if any(budgets[ci] > 0 and set(comps[ci].component.vertices) <= pv for ci in touched):
            continue
        shrunk = [v for v in p if v not in dead]
        if not shrunk:
            return BranchInfeasible()
        surviving.append(shrunk)

    if not core_set:
        feasible = all(
            budgets[ci] <= len(comps[ci].component.vertices) for ci in range(len(comps))
        ) and all(all(v in comp_of and budgets[comp_of[v]] > 0 for v in p) for p in surviving)
        return DirectVerdict(feasible)

    petals = []
    petal_budgets = []
    links = set()
    for ci, cd in enumerate(comps):
        if budgets[ci] == 0:
            continue
        petals.append(cd.component.vertices)
        petal_budgets.append(budgets[ci])
        if cd.component.attach_left in core_set:
            links.add(cd.component.vertices[0])
        if cd.component.attach_right in core_set:
            links.add(cd.component.vertices[-1])

    flower_paths = []
    for p in surviving:
        seq: list[int] = []
        for v in p:
            mapped = core_id if v in core_set else v
            if not (seq and seq[-1] == core_id and mapped == core_id):
                seq.append(mapped)
        if seq.count(core_id) > 1:
            raise FlowerShapeViolation("target collapses onto the core more than once")
        flower_paths.append(seq)
    try:
        return make_flower(core_id, petals, petal_budgets, flower_paths, links)
    except ValidationError as exc:
        raise FlowerShapeViolation(str(exc)) from exc


def _fill_component(cd: ComponentData, budget: int) -> set[int]:
    """Exactly `budget` vertices of the component hitting all its internal
    targets: the greedy optimum padded with the highest unused positions."""
    _, pts = stab_intervals(len(cd.component.vertices), cd.internal)
    positions = set(pts)
    pad = len(cd.component.vertices)
    while len(positions) < budget and pad >= 1:
        positions.add(pad)
        pad -= 1
    assert len(positions) == budget
    return {cd.component.vertices[p - 1] for p in positions}


def _finish(inst: HitPathsInstance, chosen: set[int]) -> Solution:
    if len(chosen) > inst.t:
        raise InvariantViolation("assembled solution exceeds the budget")
    missed = unhit_targets(inst, chosen)
    if missed:
        raise InvariantViolation(f"assembled solution misses target {missed[0] + 1}")
    return Solution("YES", frozenset(chosen), certificate_for(inst, chosen))


def solve(
    inst: HitPathsInstance, stats: Optional[SolveStats] = None, optimize: bool = False
) -> Solution:
    """Decide whether some vertex set of size at most t hits every target.

    With optimize=True the branch scan continues past the first success to
    record the smallest branch cost in the stats; the returned solution is
    still the one from the first successful branch.
    """
    if inst.kind != KIND_PATHS:
        raise ValidationError("the FPT solver handles path targets only")
    if stats is None:
        stats = SolveStats()
    pre = preprocess(inst)
    stats.k = cyclomatic_number(inst.graph)
    if pre.graph.n == 0:
        if pre.t_remaining < 0:
            return Solution("NO")
        return _finish(inst, set(pre.forced))
    if pre.t_remaining < 0:
        return Solution("NO")

    g = connect_components(pre.graph)
    paths = pre.paths
    adj = g.adjacency()

    if all(len(adj[v]) == 2 for v in g.vertices()):
        return _solve_cycle(inst, pre, g, paths)

    s = high_degree_set(g)
    comps = component_budgets(g, s, paths)
    stats.high_degree = len(s)
    stats.components = len(comps)
    k = cyclomatic_number(g)

    total_opt = sum(cd.opt for cd in comps)
    nc = len(comps)
    # components where opt + 1 would not fit must always get the optimum
    must_opt_mask = 0
    for ci, cd in enumerate(comps):
        if cd.opt + 1 > len(cd.component.vertices):
            must_opt_mask |= 1 << ci
    core_id = g.n + 1

    first: Optional[Solution] = None
    for s_mask in range(1 << len(s)):
        s_prime = {s[i] for i in range(len(s)) if s_mask >> i & 1}
        base_cost = len(s_prime) + total_opt + nc
        for c_mask in range(1 << nc):
            stats.branches_enumerated += 1
            cost = base_cost - bin(c_mask).count("1")
            if cost > pre.t_remaining:
                continue
            if c_mask & must_opt_mask != must_opt_mask:
                continue
            stats.branches_after_filter += 1
            budgets = [
                cd.opt if c_mask >> ci & 1 else cd.opt + 1 for ci, cd in enumerate(comps)
            ]
            branch = build_flower_branch(s, comps, budgets, s_prime, paths, core_id)
            if isinstance(branch, BranchInfeasible):
                continue
            if isinstance(branch, DirectVerdict):
                if not branch.feasible:
                    continue
                chosen_new = set(s_prime)
                for ci, cd in enumerate(comps):
                    if budgets[ci] > 0:
                        chosen_new |= _fill_component(cd, budgets[ci])
            else:
                stats.flower_calls += 1
                fsol = solve_flower(branch)
                if fsol.verdict != "YES":
                    continue
                chosen_new = set(s_prime) | set(fsol.chosen)
            if first is None:
                stats.solution_cost = cost
                stats.best_cost = cost
                chosen = set(pre.forced) | {pre.new_to_old[v] for v in chosen_new}
                first = _finish(inst, chosen)
                if not optimize:
                    _check_branch_bound(stats, k)
                    return first
            elif stats.best_cost is None or cost < stats.best_cost:
                stats.best_cost = cost
    _check_branch_bound(stats, k)
    return first if first is not None else Solution("NO")


def _check_branch_bound(stats: SolveStats, k: int) -> None:
    assert stats.branches_enumerated <= 2 ** (2 * k) * 2 ** (3 * k)


def _solve_cycle(inst, pre: PreprocessResult, g: Graph, paths) -> Solution:
    """Residual graph is a single cycle; try every vertex exactly."""
    adj = g.adjacency()
    order = [1]
    prev: Optional[int] = None
    while len(order) < g.n:
        cur = order[-1]
        nxt = min(w for w in adj[cur] if w != prev)
        order.append(nxt)
        prev = cur
    pos = {v: i + 1 for i, v in enumerate(order)}
    length = g.n

    arcs = []
    full = 0
    for p in paths:
        ps = sorted(pos[v] for v in p)
        if len(ps) == length:
            full += 1
            continue
        arc = _positions_to_arc(ps, length)
        arcs.append(arc)
    size, pts = hit_paths_in_cycle(length, arcs) if arcs else (0, frozenset())
    if size == 0 and full:
        size, pts = 1, frozenset({1})
    if size > pre.t_remaining:
        return Solution("NO")
    chosen = set(pre.forced) | {pre.new_to_old[order[q - 1]] for q in pts}
    return _finish(inst, chosen)


def _positions_to_arc(ps: list[int], length: int) -> CycleArc:
    """Sorted distinct cycle positions covering a contiguous arc -> CycleArc."""
    gaps = [(b - a) % length for a, b in zip(ps, ps[1:] + ps[:1])]
    big = max(range(len(gaps)), key=lambda i: gaps[i])
    lo = ps[(big + 1) % len(ps)]
    hi = ps[big]
    arc = CycleArc(lo, hi)
    assert arc.length(length) == len(ps)
    return arc
