import itertools
import random

import pytest

from hitpaths import (
    CycleArc,
    Graph,
    Interval,
    NotASubtree,
    NotATree,
    ValidationError,
    hit_paths_in_cycle,
    hit_subtrees_in_tree,
    stab_intervals,
)

from conftest import brute_min_hitting


def brute_stab(length, intervals):
    return brute_min_hitting(length, [set(range(iv.lo, iv.hi + 1)) for iv in intervals])


def test_stab_examples():
    assert stab_intervals(5, []) == (0, frozenset())
    assert stab_intervals(5, [Interval(1, 2), Interval(2, 3)]) == (1, frozenset({2}))
    assert stab_intervals(5, [Interval(1, 2), Interval(4, 5)]) == (2, frozenset({2, 5}))


def test_stab_rejects_out_of_range():
    with pytest.raises(ValidationError):
        stab_intervals(3, [Interval(2, 4)])
    with pytest.raises(ValidationError):
        Interval(3, 2)


def test_stab_matches_bruteforce_exhaustive():
    # all interval families over a short line
    length = 6
    all_ivs = [Interval(lo, hi) for lo in range(1, length + 1) for hi in range(lo, length + 1)]
    rng = random.Random(3)
    for _ in range(300):
        ivs = rng.sample(all_ivs, rng.randint(0, 6))
        size, pts = stab_intervals(length, ivs)
        assert size == brute_stab(length, ivs)
        assert all(any(iv.contains(p) for p in pts) for iv in ivs)


def test_tree_greedy_examples():
    star = Graph.build(3, [(1, 2), (1, 3)])
    assert hit_subtrees_in_tree(star, [{1, 2}, {1, 3}]) == frozenset({1})
    path = Graph.build(3, [(1, 2), (2, 3)])
    assert hit_subtrees_in_tree(path, [{1}, {3}]) == frozenset({1, 3})
    assert hit_subtrees_in_tree(path, []) == frozenset()


def test_tree_greedy_errors():
    with pytest.raises(NotATree):
        hit_subtrees_in_tree(Graph.build(3, [(1, 2), (2, 3), (1, 3)]), [])
    with pytest.raises(NotATree):
        hit_subtrees_in_tree(Graph.build(4, [(1, 2), (3, 4)]), [])
    path = Graph.build(3, [(1, 2), (2, 3)])
    with pytest.raises(NotASubtree):
        hit_subtrees_in_tree(path, [{1, 3}])
    with pytest.raises(NotASubtree):
        hit_subtrees_in_tree(path, [set()])


def random_tree(rng, n):
    return Graph.build(n, [(rng.randint(1, v - 1), v) for v in range(2, n + 1)])


def random_subtree(rng, tree, adj):
    vs = {rng.randint(1, tree.n)}
    for _ in range(rng.randint(0, tree.n - 1)):
        frontier = sorted({w for v in vs for w in adj[v]} - vs)
        if not frontier:
            break
        vs.add(rng.choice(frontier))
    return vs


def test_tree_greedy_matches_bruteforce_random():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(2, 9)
        tree = random_tree(rng, n)
        adj = tree.adjacency()
        targets = [random_subtree(rng, tree, adj) for _ in range(rng.randint(0, 6))]
        got = hit_subtrees_in_tree(tree, targets)
        assert all(got & t for t in targets)
        assert len(got) == brute_min_hitting(n, targets)


def test_cycle_examples():
    assert hit_paths_in_cycle(4, []) == (0, frozenset())
    size, pts = hit_paths_in_cycle(4, [CycleArc(2, 3)])
    assert size == 1 and pts == frozenset({2})
    size, pts = hit_paths_in_cycle(4, [CycleArc(1, 2), CycleArc(3, 4)])
    assert size == 2 and len(pts) == 2


def test_cycle_errors():
    with pytest.raises(ValidationError):
        hit_paths_in_cycle(2, [])
    with pytest.raises(ValidationError):
        hit_paths_in_cycle(4, [CycleArc(1, 4)])
    with pytest.raises(ValidationError):
        hit_paths_in_cycle(4, [CycleArc(2, 1)])


def test_cycle_matches_bruteforce_random():
    rng = random.Random(17)
    for _ in range(300):
        length = rng.randint(3, 10)
        arcs = []
        for _ in range(rng.randint(1, 5)):
            lo = rng.randint(1, length)
            span = rng.randint(0, length - 2)
            arcs.append(CycleArc(lo, (lo + span - 1) % length + 1))
        size, pts = hit_paths_in_cycle(length, arcs)
        assert all(any(a.contains(p) for p in pts) for a in arcs)
        sets = [
            {(a.lo + off - 1) % length + 1 for off in range(a.length(length))}
            for a in arcs
        ]
        assert size == brute_min_hitting(length, sets)
