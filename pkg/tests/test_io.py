import random

import pytest

from hitpaths import (
    GE,
    KIND_SUBGRAPHS,
    LE,
    Graph,
    ParseError,
    SignedLiteral,
    Solution,
    ValidationError,
    make_instance,
    parse_instance,
    parse_signed_formula,
    parse_solution,
    write_instance,
    write_signed_formula,
    write_solution,
)
from hitpaths.reductions import GeneratorConfig, gen_random_instance

from conftest import random_signed_formula

TRIANGLE = "p hitpaths 3 3 1 1\ne 1 2\ne 2 3\ne 1 3\ns 2 1 2\n"


def test_parse_triangle():
    inst = parse_instance(TRIANGLE)
    assert inst.graph.n == 3 and inst.graph.m == 3
    assert inst.paths == ((1, 2),) and inst.t == 1


def test_parse_rejects_non_path_target():
    text = "p hitpaths 3 2 1 1\ne 1 2\ne 2 3\ns 2 1 3\n"
    with pytest.raises(ValidationError):
        parse_instance(text)


def test_parse_rejects_disconnected_subgraph_target():
    text = "p hitsub 3 2 1 1\ne 1 2\ne 2 3\ns 2 1 3\n"
    with pytest.raises(ValidationError):
        parse_instance(text)


def test_parse_rejects_count_mismatches():
    with pytest.raises(ParseError):
        parse_instance("p hitpaths 3 2 0 0\ne 1 2\n")
    with pytest.raises(ParseError):
        parse_instance("p hitpaths 3 1 1 0\ne 1 2\ns 3 1 2\n")
    with pytest.raises(ParseError):
        parse_instance("q hitpaths 3 0 0 0\n")


def test_comments_and_blank_lines_ignored():
    text = "c a triangle\n\n" + TRIANGLE
    assert parse_instance(text) == parse_instance(TRIANGLE)


def test_instance_roundtrip_random():
    for seed in range(30):
        rng = random.Random(seed)
        cfg = GeneratorConfig(
            seed=seed,
            k=rng.randint(0, 3),
            n=rng.randint(4, 12),
            num_paths=rng.randint(0, 8),
        )
        inst = gen_random_instance(cfg)
        assert parse_instance(write_instance(inst)) == inst


def test_subgraph_instance_roundtrip():
    g = Graph.build(4, [(1, 2), (2, 3), (2, 4)])
    inst = make_instance(g, [(1, 2, 3), (4,)], 2, KIND_SUBGRAPHS)
    assert parse_instance(write_instance(inst)) == inst


def test_parse_formula():
    f = parse_signed_formula("p scnf 2 3 1\n+1:2 -2:1 0\n")
    assert f.num_vars == 2 and f.num_values == 3
    assert f.clauses == ((SignedLiteral(1, GE, 2), SignedLiteral(2, LE, 1)),)


def test_parse_formula_errors():
    with pytest.raises(ValidationError):
        parse_signed_formula("p scnf 1 3 1\n+1:4 0\n")
    with pytest.raises(ValidationError):
        parse_signed_formula("p scnf 1 3 1\n+2:1 0\n")
    with pytest.raises(ParseError):
        parse_signed_formula("p scnf 1 3 1\n+1:2\n")
    with pytest.raises(ParseError):
        parse_signed_formula("p scnf 1 3 1\nx1>=2 0\n")


def test_parse_formula_accepts_empty_clause():
    f = parse_signed_formula("p scnf 1 3 1\n0\n")
    assert f.clauses == ((),)


def test_formula_roundtrip_random():
    rng = random.Random(7)
    for _ in range(50):
        f = random_signed_formula(rng, 4, 6, 3)
        assert parse_signed_formula(write_signed_formula(f)) == f


def test_solution_roundtrip():
    assert write_solution(Solution("YES", frozenset({2, 4}))) == "s 2 2 4\n"
    assert write_solution(Solution("NO")) == "s -1\n"
    assert write_solution(Solution("YES", frozenset())) == "s 0\n"
    for sol in (Solution("YES", frozenset({1, 5, 3})), Solution("NO"), Solution("YES")):
        back = parse_solution(write_solution(sol))
        assert back.verdict == sol.verdict and back.chosen == sol.chosen


def test_parse_solution_errors():
    with pytest.raises(ParseError):
        parse_solution("s 2 1\n")
    with pytest.raises(ValidationError):
        parse_solution("s 2 1 1\n")
    with pytest.raises(ParseError):
        parse_solution("s -1 3\n")


def test_fuzzed_bytes_error_cleanly():
    rng = random.Random(99)
    for _ in range(200):
        junk = "".join(rng.choice("ps echitab 0123456789-+:\n ") for _ in range(40))
        try:
            parse_instance(junk)
        except (ParseError, ValidationError):
            pass
