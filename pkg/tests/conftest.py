"""Shared randomized-test helpers: brute-force baselines and generators."""

from __future__ import annotations

import itertools
import random

from hitpaths import FlowerInstance, Graph, SignedFormula, SignedLiteral, make_flower
from hitpaths.mvsat import GE, LE


def brute_min_hitting(n: int, sets) -> int | None:
    """Smallest hitting-set size by exhaustive subset scan, None if unhittable."""
    families = [set(s) for s in sets]
    if any(not s for s in families):
        return None
    for size in range(0, n + 1):
        for combo in itertools.combinations(range(1, n + 1), size):
            cs = set(combo)
            if all(cs & fam for fam in families):
                return size
    return None


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]
    return Graph.build(n, edges)


def random_signed_formula(
    rng: random.Random, max_n: int, max_vals: int, max_width: int, max_clauses: int = 6
) -> SignedFormula:
    n = rng.randint(1, max_n)
    nvals = rng.randint(1, max_vals)
    clauses = []
    for _ in range(rng.randint(0, max_clauses)):
        width = rng.randint(1, max_width)
        lits = tuple(
            SignedLiteral(rng.randint(1, n), rng.choice([GE, LE]), rng.randint(1, nvals))
            for _ in range(width)
        )
        clauses.append(lits)
    return SignedFormula(n, nvals, tuple(clauses))


def random_flower(rng: random.Random, max_petals: int = 5, max_len: int = 7, max_b: int = 3) -> FlowerInstance:
    num_petals = rng.randint(1, max_petals)
    petals = []
    nxt = 1
    for _ in range(num_petals):
        length = rng.randint(1, max_len)
        petals.append(tuple(range(nxt, nxt + length)))
        nxt += length
    core = nxt
    budgets = [rng.randint(1, min(max_b, len(p))) for p in petals]

    paths = []
    for _ in range(rng.randint(0, 6)):
        shape = rng.random()
        i = rng.randrange(num_petals)
        petal = petals[i]
        if shape < 0.5:  # internal interval
            lo = rng.randint(1, len(petal))
            hi = rng.randint(lo, len(petal))
            paths.append(petal[lo - 1 : hi])
        elif shape < 0.65:  # suffix then core
            c = rng.randint(1, len(petal))
            paths.append(petal[c - 1 :] + (core,))
        elif shape < 0.8:  # core then prefix
            d = rng.randint(1, len(petal))
            paths.append((core,) + petal[:d])
        elif shape < 0.95:  # suffix, core, prefix of another petal
            j = rng.randrange(num_petals)
            if j == i:
                c = rng.randint(1, len(petal))
                paths.append(petal[c - 1 :] + (core,))
            else:
                c = rng.randint(1, len(petal))
                d = rng.randint(1, len(petals[j]))
                paths.append(petal[c - 1 :] + (core,) + petals[j][:d])
        else:
            paths.append((core,))
    return make_flower(core, petals, budgets, paths)
