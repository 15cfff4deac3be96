"""Text formats for problem instances, signed formulas, and solutions.

All formats are line based in the DIMACS spirit: whitespace-separated
tokens, comment lines starting with "c", a single "p" header line first.

Instance file::

    p hitpaths <n> <m> <p> <t>     (or "p hitsub" for the subgraph variant)
    e <u> <v>                      (m edge lines)
    s <k> <v1> ... <vk>            (p target lines; ordered walk for
                                    hitpaths, vertex set for hitsub)

Signed formula file::

    p scnf <n> <N> <c>
    <lit> ... 0                    (c clause lines; literal +i:b means
                                    x_i >= b, -i:b means x_i <= b)

Solution file: "s <size> <v1> ... <vk>" for YES, "s -1" for NO.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import ParseError, ValidationError
from .graph import Graph, is_simple_path
from .mvsat import SignedFormula, SignedLiteral

KIND_PATHS = "paths"
KIND_SUBGRAPHS = "subgraphs"


@dataclass(frozen=True)
class HitPathsInstance:
    graph: Graph
    paths: tuple[tuple[int, ...], ...]
    t: int
    kind: str = KIND_PATHS


@dataclass(frozen=True)
class Solution:
    verdict: str  # "YES" or "NO"
    chosen: frozenset[int] = field(default_factory=frozenset)
    certificate: Optional[tuple[int, ...]] = None  # hitting vertex per path


def make_instance(graph: Graph, paths, t: int, kind: str = KIND_PATHS) -> HitPathsInstance:
    """Validate and freeze an instance. Duplicate targets are retained."""
    if kind not in (KIND_PATHS, KIND_SUBGRAPHS):
        raise ValidationError(f"unknown instance kind {kind!r}")
    if not (0 <= t <= graph.n):
        raise ValidationError(f"budget t={t} out of range 0..{graph.n}")
    frozen = []
    for idx, p in enumerate(paths):
        seq = tuple(p)
        if kind == KIND_PATHS:
            if not is_simple_path(graph, seq):
                raise ValidationError(f"target {idx + 1} is not a simple path of the graph")
        else:
            seq = tuple(sorted(seq))
            if len(set(seq)) != len(seq) or not seq:
                raise ValidationError(f"target {idx + 1} is not a nonempty vertex set")
            if any(not (1 <= v <= graph.n) for v in seq):
                raise ValidationError(f"target {idx + 1} has a vertex out of range")
            if not _induces_connected(graph, set(seq)):
                raise ValidationError(f"target {idx + 1} does not induce a connected subgraph")
        frozen.append(seq)
    return HitPathsInstance(graph, tuple(frozen), t, kind)


def _induces_connected(g: Graph, vs: set[int]) -> bool:
    adj = g.adjacency()
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


def unhit_targets(inst: HitPathsInstance, chosen) -> list[int]:
    """0-based indices of targets missed by the chosen vertex set."""
    cs = set(chosen)
    return [i for i, p in enumerate(inst.paths) if not cs.intersection(p)]


def certificate_for(inst: HitPathsInstance, chosen) -> tuple[int, ...]:
    """For each target, the smallest chosen vertex on it."""
    cs = set(chosen)
    cert = []
    for i, p in enumerate(inst.paths):
        hits = sorted(cs.intersection(p))
        if not hits:
            raise ValidationError(f"target {i + 1} is not hit")
        cert.append(hits[0])
    return tuple(cert)


def _content_lines(text: str) -> list[list[str]]:
    out = []
    for raw in text.splitlines():
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        out.append(tokens)
    return out


def _int(tok: str, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"bad {what} token {tok!r}") from None


def parse_instance(text: str) -> HitPathsInstance:
    lines = _content_lines(text)
    if not lines or lines[0][0] != "p":
        raise ParseError("missing 'p' header line")
    header = lines[0]
    if len(header) != 6 or header[1] not in ("hitpaths", "hitsub"):
        raise ParseError(f"bad header {' '.join(header)!r}")
    kind = KIND_PATHS if header[1] == "hitpaths" else KIND_SUBGRAPHS
    n, m, p, t = (_int(x, "header field") for x in header[2:])
    edges = []
    targets = []
    for tokens in lines[1:]:
        tag = tokens[0]
        if tag == "e":
            if len(tokens) != 3:
                raise ParseError(f"bad edge line {' '.join(tokens)!r}")
            edges.append((_int(tokens[1], "vertex"), _int(tokens[2], "vertex")))
        elif tag == "s":
            if len(tokens) < 2:
                raise ParseError(f"bad target line {' '.join(tokens)!r}")
            k = _int(tokens[1], "target size")
            vs = [_int(x, "vertex") for x in tokens[2:]]
            if k != len(vs):
                raise ParseError(f"target line announces {k} vertices, has {len(vs)}")
            targets.append(tuple(vs))
        else:
            raise ParseError(f"unknown line tag {tag!r}")
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    if len(targets) != p:
        raise ParseError(f"header announces {p} targets, found {len(targets)}")
    if t < 0 or t > n:
        raise ValidationError(f"budget t={t} out of range 0..{n}")
    graph = Graph.build(n, edges)
    return make_instance(graph, targets, t, kind)


def write_instance(inst: HitPathsInstance) -> str:
    word = "hitpaths" if inst.kind == KIND_PATHS else "hitsub"
    g = inst.graph
    lines = [f"p {word} {g.n} {g.m} {len(inst.paths)} {inst.t}"]
    for u, v in sorted(g.edges):
        lines.append(f"e {u} {v}")
    for p in inst.paths:
        lines.append("s " + " ".join(str(x) for x in (len(p),) + p))
    return "\n".join(lines) + "\n"


def parse_signed_formula(text: str) -> SignedFormula:
    lines = _content_lines(text)
    if not lines or lines[0][0] != "p":
        raise ParseError("missing 'p' header line")
    header = lines[0]
    if len(header) != 5 or header[1] != "scnf":
        raise ParseError(f"bad header {' '.join(header)!r}")
    n, nvals, c = (_int(x, "header field") for x in header[2:])
    if n < 0 or nvals < 1:
        raise ValidationError(f"bad variable or truth value count {n}/{nvals}")
    clauses = []
    for tokens in lines[1:]:
        if tokens[-1] != "0":
            raise ParseError("clause line not terminated by 0")
        lits = []
        for tok in tokens[:-1]:
            if len(tok) < 4 or tok[0] not in "+-" or ":" not in tok:
                raise ParseError(f"bad literal token {tok!r}")
            var_s, _, bound_s = tok[1:].partition(":")
            var = _int(var_s, "variable index")
            bound = _int(bound_s, "bound")
            if not (1 <= var <= n):
                raise ValidationError(f"variable x_{var} out of range 1..{n}")
            if not (1 <= bound <= nvals):
                raise ValidationError(f"bound {bound} out of range 1..{nvals}")
            op = ">=" if tok[0] == "+" else "<="
            lits.append(SignedLiteral(var, op, bound))
        clauses.append(tuple(lits))
    if len(clauses) != c:
        raise ParseError(f"header announces {c} clauses, found {len(clauses)}")
    return SignedFormula(n, nvals, tuple(clauses))


def write_signed_formula(f: SignedFormula) -> str:
    lines = [f"p scnf {f.num_vars} {f.num_values} {len(f.clauses)}"]
    for clause in f.clauses:
        toks = [("+" if lit.op == ">=" else "-") + f"{lit.var}:{lit.bound}" for lit in clause]
        lines.append(" ".join(toks + ["0"]))
    return "\n".join(lines) + "\n"


def parse_solution(text: str) -> Solution:
    lines = _content_lines(text)
    if len(lines) != 1 or lines[0][0] != "s":
        raise ParseError("expected a single 's' line")
    tokens = lines[0]
    size = _int(tokens[1], "solution size")
    if size == -1:
        if len(tokens) != 2:
            raise ParseError("NO solution line carries no vertices")
        return Solution("NO")
    vs = [_int(x, "vertex") for x in tokens[2:]]
    if size != len(vs):
        raise ParseError(f"solution announces {size} vertices, has {len(vs)}")
    if len(set(vs)) != len(vs):
        raise ValidationError("duplicate vertex in solution")
    return Solution("YES", frozenset(vs))


def write_solution(sol: Solution) -> str:
    if sol.verdict == "NO":
        return "s -1\n"
    vs = sorted(sol.chosen)
    return "s " + " ".join(str(x) for x in [len(vs)] + vs) + "\n"
