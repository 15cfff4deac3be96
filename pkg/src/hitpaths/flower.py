"""Polynomial solver for exact-budget path hitting in flower graphs.

A flower has a core vertex z whose removal leaves disjoint paths (petals)
with interiors not adjacent to z. Every petal admits a family of canonical
solutions indexed by their leftmost position; the well-defined indices form
a contiguous range and their rightmost positions are monotone in the index.
That structure lets each target path crossing the core be translated into a
signed 2-clause over per-petal index variables, so the whole problem
reduces to signed 2-SAT.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import (
    ContiguityViolation,
    FlowerShapeViolation,
    InvariantViolation,
    ValidationError,
)
from .instance_io import Solution
from .mvsat import GE, LE, SignedFormula, SignedLiteral, solve_tors2sat
from .treecycle import Interval


@dataclass(frozen=True)
class FlowerInstance:
    core: int
    petals: tuple[tuple[int, ...], ...]
    budgets: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]
    core_links: frozenset[int]  # petal endpoints adjacent to the core


def make_flower(core, petals, budgets, paths, core_links=None) -> FlowerInstance:
    """Validate and freeze a flower instance.

    When core_links is omitted, every petal endpoint is taken to be adjacent
    to the core (the fully wired flower).
    """
    petals = tuple(tuple(p) for p in petals)
    budgets = tuple(budgets)
    if len(budgets) != len(petals):
        raise ValidationError("one budget per petal required")
    if any(b < 1 for b in budgets):
        raise ValidationError("budgets must be at least 1")
    seen: set[int] = {core}
    for p in petals:
        if not p:
            raise ValidationError("empty petal")
        for v in p:
            if v in seen:
                raise ValidationError(f"vertex {v} appears twice in the flower")
            seen.add(v)
    endpoints = {p[0] for p in petals} | {p[-1] for p in petals}
    if core_links is None:
        core_links = endpoints
    core_links = frozenset(core_links)
    if not core_links <= endpoints:
        raise ValidationError("core link that is not a petal endpoint")

    pos = {}
    for i, p in enumerate(petals):
        for j, v in enumerate(p):
            pos[v] = (i, j + 1)

    def adjacent(u: int, v: int) -> bool:
        if u == core:
            return v in core_links
        if v == core:
            return u in core_links
        (pi, pj), (qi, qj) = pos[u], pos[v]
        return pi == qi and abs(pj - qj) == 1

    frozen_paths = []
    for idx, path in enumerate(paths):
        seq = tuple(path)
        if not seq or len(set(seq)) != len(seq):
            raise ValidationError(f"path {idx + 1} is empty or repeats a vertex")
        if any(v != core and v not in pos for v in seq):
            raise ValidationError(f"path {idx + 1} leaves the flower")
        if any(not adjacent(a, b) for a, b in zip(seq, seq[1:])):
            raise ValidationError(f"path {idx + 1} is not a path of the flower")
        frozen_paths.append(seq)
    return FlowerInstance(core, petals, budgets, tuple(frozen_paths), core_links)


def canonical_solution(
    petal_length: int, internal_paths, budget: int, ell: int
) -> Optional[frozenset[int]]:
    """The canonical solution starting at position ell, or None (NIL).

    Start from {ell}; repeatedly cover the uncovered internal interval with
    the smallest right endpoint by picking that endpoint; then pad with the
    highest unused positions at or right of ell. Defined only when the
    result has exactly `budget` positions and no internal interval lies
    strictly left of ell.
    """
    if not (1 <= ell <= petal_length):
        raise ValidationError(f"index {ell} out of range 1..{petal_length}")
    if any(iv.hi < ell for iv in internal_paths):
        return None
    chosen = {ell}
    while True:
        unhit = [iv for iv in internal_paths if not any(iv.contains(p) for p in chosen)]
        if not unhit:
            break
        chosen.add(min(iv.hi for iv in unhit))
    pad = petal_length
    while len(chosen) < budget and pad >= ell:
        if pad not in chosen:
            chosen.add(pad)
        pad -= 1
    if len(chosen) != budget:
        return None
    if min(chosen) != ell:
        raise InvariantViolation("canonical solution does not start at its index")
    return frozenset(chosen)


def canonical_table(petal_length: int, internal_paths, budget: int) -> list[Optional[frozenset[int]]]:
    """Canonical solutions for every index; slot 0 unused."""
    table: list[Optional[frozenset[int]]] = [None]
    for ell in range(1, petal_length + 1):
        table.append(canonical_solution(petal_length, internal_paths, budget, ell))
    return table


def canonical_range(petal_length: int, internal_paths, budget: int) -> Optional[tuple[int, int]]:
    """Contiguous range [l1, l2] of well-defined indices, or None if empty."""
    table = canonical_table(petal_length, internal_paths, budget)
    defined = [ell for ell in range(1, petal_length + 1) if table[ell] is not None]
    if not defined:
        return None
    lo, hi = defined[0], defined[-1]
    if defined != list(range(lo, hi + 1)):
        raise ContiguityViolation(f"defined indices {defined} are not contiguous")
    return lo, hi


def fragment_literal(
    petal_index: int, fragment: Interval, petal_length: int, table
) -> Optional[SignedLiteral]:
    """Literal over the petal's index variable characterizing when the
    canonical solution hits the given prefix or suffix fragment.

    Prefix [1,c]: hit iff the index is at most c. Suffix [c,L]: hit iff the
    rightmost canonical position reaches c, which by monotonicity happens
    from some smallest index on. Returns None when no well-defined
    canonical solution hits the fragment.
    """
    if fragment.lo == 1:
        return SignedLiteral(petal_index, LE, fragment.hi)
    if fragment.hi != petal_length:
        raise ValidationError(f"fragment [{fragment.lo},{fragment.hi}] is neither prefix nor suffix")
    for ell in range(1, petal_length + 1):
        sol = table[ell]
        if sol is not None and max(sol) >= fragment.lo:
            return SignedLiteral(petal_index, GE, ell)
    return None


def _classify_paths(inst: FlowerInstance):
    """Split targets into per-petal internal intervals and core-crossing
    fragment lists; returns (internal, crossing, has_core_singleton)."""
    pos = {}
    for i, p in enumerate(inst.petals):
        for j, v in enumerate(p):
            pos[v] = (i, j + 1)
    internal: list[list[Interval]] = [[] for _ in inst.petals]
    crossing: list[list[tuple[int, Interval]]] = []
    core_singleton = False
    for path in inst.paths:
        if inst.core not in path:
            ps = [pos[v] for v in path]
            i = ps[0][0]
            js = [j for _, j in ps]
            internal[i].append(Interval(min(js), max(js)))
            continue
        if len(path) == 1:
            core_singleton = True
            continue
        frags: list[tuple[int, Interval]] = []
        run: list[tuple[int, int]] = []
        for v in list(path) + [inst.core]:
            if v == inst.core:
                if run:
                    i = run[0][0]
                    js = [j for _, j in run]
                    frags.append((i, Interval(min(js), max(js))))
                    run = []
            else:
                run.append(pos[v])
        for i, iv in frags:
            length = len(inst.petals[i])
            if iv.lo != 1 and iv.hi != length:
                raise FlowerShapeViolation("core-crossing fragment is not a prefix or suffix")
        crossing.append(frags)
    return internal, crossing, core_singleton


def solve_flower(inst: FlowerInstance) -> Solution:
    """Decide the exact-budget hitting problem on a flower.

    Builds the signed 2-CNF over one index variable per petal: unit clauses
    bound each variable to its petal's well-defined canonical range, and
    each core-crossing target contributes a clause over the (at most two)
    petals holding its fragments. A satisfying assignment is decoded back
    into the union of the selected canonical solutions.
    """
    n = len(inst.petals)
    internal, crossing, core_singleton = _classify_paths(inst)
    if core_singleton:
        return Solution("NO")

    tables = []
    clauses: list[tuple[SignedLiteral, ...]] = []
    for i, petal in enumerate(inst.petals):
        # dedupe identical internal intervals; hitting one hits all copies
        ivs = sorted(set((iv.lo, iv.hi) for iv in internal[i]))
        ivs = [Interval(lo, hi) for lo, hi in ivs]
        internal[i] = ivs
        table = canonical_table(len(petal), ivs, inst.budgets[i])
        tables.append(table)
        defined = [ell for ell in range(1, len(petal) + 1) if table[ell] is not None]
        if not defined:
            return Solution("NO")
        if defined != list(range(defined[0], defined[-1] + 1)):
            raise ContiguityViolation(f"petal {i + 1} has gaps in its canonical indices")
        clauses.append((SignedLiteral(i + 1, GE, defined[0]),))
        clauses.append((SignedLiteral(i + 1, LE, defined[-1]),))

    seen_clauses = set()
    for frags in crossing:
        lits = []
        for i, iv in frags:
            lit = fragment_literal(i + 1, iv, len(inst.petals[i]), tables[i])
            if lit is not None:
                lits.append(lit)
        if not lits:
            return Solution("NO")
        key = tuple(sorted((l.var, l.op, l.bound) for l in lits))
        if key not in seen_clauses:
            seen_clauses.add(key)
            clauses.append(tuple(lits))

    num_values = max((len(p) for p in inst.petals), default=1)
    formula = SignedFormula(n, num_values, tuple(clauses))
    assignment = solve_tors2sat(formula)
    if assignment is None:
        return Solution("NO")

    chosen: set[int] = set()
    for i, petal in enumerate(inst.petals):
        sol = tables[i][assignment[i]]
        if sol is None:
            raise InvariantViolation(f"assignment picked an undefined index on petal {i + 1}")
        chosen.update(petal[p - 1] for p in sol)

    # independent verification: budgets exact, core excluded, all paths hit
    if inst.core in chosen:
        raise InvariantViolation("core vertex ended up in the solution")
    for i, petal in enumerate(inst.petals):
        if len(chosen.intersection(petal)) != inst.budgets[i]:
            raise InvariantViolation(f"budget violated on petal {i + 1}")
    cert = []
    for idx, path in enumerate(inst.paths):
        hits = sorted(chosen.intersection(path))
        if not hits:
            raise InvariantViolation(f"reconstructed solution misses path {idx + 1}")
        cert.append(hits[0])
    return Solution("YES", frozenset(chosen), tuple(cert))
