"""Exact solvers for hitting prescribed simple paths in graphs of small
cyclomatic number, with flower-graph and signed 2-SAT machinery, reference
oracles, hardness-construction generators, and a CLI."""

from .errors import (
    CapExceeded,
    ClauseTooWide,
    ContiguityViolation,
    EmptyTargetSet,
    FlowerShapeViolation,
    HitPathsError,
    InfeasibleConfig,
    InvariantViolation,
    NotAPath,
    NotASubtree,
    NotATree,
    ParseError,
    TooFewEdges,
    ValidationError,
)
from .flower import (
    FlowerInstance,
    canonical_range,
    canonical_solution,
    canonical_table,
    fragment_literal,
    make_flower,
    solve_flower,
)
from .fpt import PreprocessResult, SolveStats, preprocess, solve
from .graph import (
    Graph,
    PathComponent,
    connect_components,
    cyclomatic_number,
    high_degree_set,
    identify_vertices,
    is_simple_path,
    path_components,
)
from .instance_io import (
    KIND_PATHS,
    KIND_SUBGRAPHS,
    HitPathsInstance,
    Solution,
    make_instance,
    parse_instance,
    parse_signed_formula,
    parse_solution,
    write_instance,
    write_signed_formula,
    write_solution,
)
from .mvsat import (
    GE,
    LE,
    BoolCnf,
    SignedFormula,
    SignedLiteral,
    enumerate_signed,
    signed_to_classical,
    solve_2sat,
    solve_tors2sat,
)
from .oracle import SetSystem, exact_min_hitting_set, flower_bruteforce, has_k_clique
from .reductions import (
    GeneratorConfig,
    clique_to_signed3sat,
    gen_random_instance,
    signed3sat_to_fvs2_instance,
    signed3sat_to_subtree_instance,
)
from .treecycle import (
    CycleArc,
    Interval,
    hit_paths_in_cycle,
    hit_subtrees_in_tree,
    stab_intervals,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "1.0.0"
