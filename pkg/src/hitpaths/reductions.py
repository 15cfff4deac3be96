"""Hardness constructions as executable instance transformers, plus the
seeded random instance generator.

The three constructions (clique -> signed 3-SAT, signed 3-SAT -> hitting
3-leaf subtrees in a flower, signed 3-SAT -> hitting paths with feedback
vertex set {z, z'}) serve as the project's cross-validating test-corpus
factory rather than as complexity results.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import ClauseTooWide, InfeasibleConfig, TooFewEdges, ValidationError
from .graph import Graph
from .instance_io import KIND_PATHS, KIND_SUBGRAPHS, HitPathsInstance, make_instance
from .mvsat import GE, LE, SignedFormula, SignedLiteral
from .oracle import SetSystem, exact_min_hitting_set


def clique_to_signed3sat(g: Graph, k: int) -> SignedFormula:
    """Formula satisfiable iff g has a k-clique.

    Variables x_1..x_k pick clique vertices, pair variables pick connecting
    edges (numbered in sorted order). For each pair and edge index, four
    clauses pin the vertex variables to the edge's endpoints whenever the
    pair variable selects that edge. The truth value set is enlarged to
    cover vertex ids when the graph has fewer edges than vertices, with
    unit clauses keeping the pair variables inside the edge range.
    """
    if k < 2:
        raise ValidationError("k must be at least 2")
    edges = sorted(g.edges)
    num_edges = len(edges)
    if num_edges < math.comb(k, 2):
        raise TooFewEdges(f"{num_edges} edges cannot host {math.comb(k, 2)} clique pairs")
    nvals = max(num_edges, g.n)
    pair_var = {}
    nxt = k + 1
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            pair_var[(i, j)] = nxt
            nxt += 1
    clauses: list[tuple[SignedLiteral, ...]] = []
    for (i, j), e in pair_var.items():
        if nvals > num_edges:
            clauses.append((SignedLiteral(e, LE, num_edges),))
        for ell, (p, q) in enumerate(edges, start=1):
            guard = []
            if ell > 1:
                guard.append(SignedLiteral(e, LE, ell - 1))
            if ell < num_edges:
                guard.append(SignedLiteral(e, GE, ell + 1))
            for vertex_var, endpoint in ((i, p), (j, q)):
                clauses.append(tuple(guard + [SignedLiteral(vertex_var, LE, endpoint)]))
                clauses.append(tuple(guard + [SignedLiteral(vertex_var, GE, endpoint)]))
    return SignedFormula(nxt - 1, nvals, tuple(clauses))


def _simplify_clauses(f: SignedFormula) -> list[tuple[SignedLiteral, ...]]:
    """Drop trivially satisfied clauses and absorb same-sign duplicates.

    A clause with x_i <= c1 and x_i >= c2 for c2 <= c1 + 1 always holds.
    Two same-sign literals on one variable collapse to the weaker bound, so
    the remaining fragments on any one petal are disjoint.
    """
    out = []
    for clause in f.clauses:
        if len(clause) > 3:
            raise ClauseTooWide(f"clause of width {len(clause)} (max 3)")
        weakest: dict[tuple[int, str], int] = {}
        for lit in clause:
            key = (lit.var, lit.op)
            if key not in weakest:
                weakest[key] = lit.bound
            elif lit.op == GE:
                weakest[key] = min(weakest[key], lit.bound)
            else:
                weakest[key] = max(weakest[key], lit.bound)
        trivial = any(
            (var, LE) in weakest
            and (var, GE) in weakest
            and weakest[(var, GE)] <= weakest[(var, LE)] + 1
            for var in {v for v, _ in weakest}
        )
        if trivial:
            continue
        out.append(tuple(SignedLiteral(v, op, b) for (v, op), b in sorted(weakest.items())))
    return out


def signed3sat_to_subtree_instance(f: SignedFormula) -> HitPathsInstance:
    """Flower whose 3-leaf subtrees encode clauses; feasible at t = n iff SAT.

    Petal i has one vertex per truth value; a literal's prefix or suffix of
    the petal, joined through the core, forms the clause subgraph. Each full
    petal is also a target, pinning one pick per variable.
    """
    n, nvals = f.num_vars, f.num_values
    if n < 1:
        raise ValidationError("at least one variable required")
    clauses = _simplify_clauses(f)
    z = n * nvals + 1

    def vid(i: int, j: int) -> int:
        return (i - 1) * nvals + j

    edges = []
    for i in range(1, n + 1):
        for j in range(1, nvals):
            edges.append((vid(i, j), vid(i, j + 1)))
        edges.append((z, vid(i, 1)))
        if nvals > 1:
            edges.append((z, vid(i, nvals)))
    graph = Graph.build(z, edges)

    targets = []
    for i in range(1, n + 1):
        targets.append(tuple(vid(i, j) for j in range(1, nvals + 1)))
    for clause in clauses:
        vs = {z}
        for lit in clause:
            rng = range(1, lit.bound + 1) if lit.op == LE else range(lit.bound, nvals + 1)
            vs.update(vid(lit.var, j) for j in rng)
        targets.append(tuple(sorted(vs)))
    return make_instance(graph, targets, n, KIND_SUBGRAPHS)


def signed3sat_to_fvs2_instance(f: SignedFormula) -> HitPathsInstance:
    """Paths threaded through two universal vertices; feasible at t = n iff SAT.

    Clause fragments are visited in order, separated first by z and then by
    z'; removing {z, z'} leaves the disjoint variable paths, so the output
    has feedback vertex set of size two.
    """
    n, nvals = f.num_vars, f.num_values
    if n < 1:
        raise ValidationError("at least one variable required")
    clauses = _simplify_clauses(f)
    z = n * nvals + 1
    z_prime = z + 1

    def vid(i: int, j: int) -> int:
        return (i - 1) * nvals + j

    edges = []
    for i in range(1, n + 1):
        for j in range(1, nvals):
            edges.append((vid(i, j), vid(i, j + 1)))
    for i in range(1, n + 1):
        for j in range(1, nvals + 1):
            edges.append((z, vid(i, j)))
            edges.append((z_prime, vid(i, j)))
    graph = Graph.build(z_prime, edges)

    targets = []
    for i in range(1, n + 1):
        targets.append(tuple(vid(i, j) for j in range(1, nvals + 1)))
    separators = (z, z_prime)
    for clause in clauses:
        frags = []
        for lit in clause:
            rng = range(1, lit.bound + 1) if lit.op == LE else range(lit.bound, nvals + 1)
            frags.append([vid(lit.var, j) for j in rng])
        if not frags:
            targets.append((z,))
            continue
        walk = list(frags[0])
        for idx, frag in enumerate(frags[1:]):
            walk.append(separators[idx])
            walk.extend(frag)
        targets.append(tuple(walk))
    return make_instance(graph, targets, n, KIND_PATHS)


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int
    k: int
    n: int
    num_paths: int
    max_path_len: int = 6
    t_policy: str = "random"  # random | opt | opt-1 | opt+1


def gen_random_instance(cfg: GeneratorConfig) -> HitPathsInstance:
    """Seeded deterministic instance: random recursive tree plus k extra
    edges, targets from self-avoiding random walks, budget per policy."""
    if cfg.n < 1 or cfg.k < 0 or cfg.num_paths < 0 or cfg.max_path_len < 1:
        raise InfeasibleConfig("counts must be nonnegative and n, lengths positive")
    slack = math.comb(cfg.n, 2) - (cfg.n - 1)
    if cfg.k > slack:
        raise InfeasibleConfig(f"k={cfg.k} exceeds the {slack} available extra edges")
    rng = random.Random(cfg.seed)
    edges = set()
    for v in range(2, cfg.n + 1):
        u = rng.randint(1, v - 1)
        edges.add((u, v))
    pool = sorted(
        (u, v)
        for u in range(1, cfg.n + 1)
        for v in range(u + 1, cfg.n + 1)
        if (u, v) not in edges
    )
    edges.update(rng.sample(pool, cfg.k))
    graph = Graph.build(cfg.n, edges)
    adj = graph.adjacency()

    paths: list[tuple[int, ...]] = []
    seen_paths: set[tuple[int, ...]] = set()
    for _ in range(cfg.num_paths):
        for _attempt in range(50):
            walk = [rng.randint(1, cfg.n)]
            goal = rng.randint(1, cfg.max_path_len)
            while len(walk) < goal:
                options = sorted(set(adj[walk[-1]]) - set(walk))
                if not options:
                    break
                walk.append(rng.choice(options))
            if walk[0] > walk[-1]:
                walk.reverse()
            key = tuple(walk)
            if key not in seen_paths:
                seen_paths.add(key)
                paths.append(key)
                break
        else:
            paths.append(key)  # tiny graphs may force duplicates

    if cfg.t_policy == "random":
        t = rng.randint(0, cfg.n)
    else:
        system = SetSystem.build(cfg.n, [frozenset(p) for p in paths])
        opt, _ = exact_min_hitting_set(system, cfg.n)
        assert opt is not None
        if cfg.t_policy == "opt":
            t = opt
        elif cfg.t_policy == "opt-1":
            t = max(opt - 1, 0)
        elif cfg.t_policy == "opt+1":
            t = min(opt + 1, cfg.n)
        else:
            raise InfeasibleConfig(f"unknown t policy {cfg.t_policy!r}")
    return make_instance(graph, paths, t, KIND_PATHS)
