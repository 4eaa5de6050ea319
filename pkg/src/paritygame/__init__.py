"""Parity game toolkit: minimisation by strong bisimilarity and
divergence-sensitive stuttering equivalence, complete solvers, and lifting
of quotient strategies back to the original game."""

from .game import (
    EVEN,
    INFINITY,
    ODD,
    Game,
    GameStats,
    Path,
    Play,
    Strategy,
    cmp_proximity,
    consistent,
    convert_priorities,
    distance,
    min_vertex,
    play_from,
    stats,
    validate,
)
from .generators import gen_branch, gen_chain, gen_divergent_pair, gen_random
from .io import FormatError, parse_pgsolver, parse_solution, write_pgsolver, write_solution
from .reduction import (
    Partition,
    compute_divergent,
    initial_partition,
    oracle_strong_pairs,
    oracle_stuttering_pairs,
    partition_from_relation,
    quotient,
    refine_strong,
    refine_stuttering,
    write_partition,
)
from .solvers import (
    ProgressMeasure,
    Solution,
    attractor,
    progress_measure,
    solve,
    solve_brute,
    solve_spm,
    solve_zielonka,
    winner_equivalent,
)
from .strategy import (
    LiftContext,
    PathStrategyOracle,
    VerifyResult,
    entry_set,
    lift_solution,
    lift_strategy,
    mimick_next,
    target_class,
    target_vertex,
    verify_strategy,
)

__version__ = "0.1.0"

__all__ = [
    "EVEN",
    "ODD",
    "INFINITY",
    "Game",
    "GameStats",
    "Path",
    "Play",
    "Strategy",
    "Partition",
    "Solution",
    "ProgressMeasure",
    "LiftContext",
    "PathStrategyOracle",
    "VerifyResult",
    "FormatError",
    "validate",
    "stats",
    "distance",
    "cmp_proximity",
    "min_vertex",
    "consistent",
    "play_from",
    "convert_priorities",
    "parse_pgsolver",
    "write_pgsolver",
    "parse_solution",
    "write_solution",
    "initial_partition",
    "refine_strong",
    "refine_stuttering",
    "compute_divergent",
    "quotient",
    "write_partition",
    "oracle_stuttering_pairs",
    "oracle_strong_pairs",
    "partition_from_relation",
    "attractor",
    "solve",
    "solve_zielonka",
    "solve_spm",
    "solve_brute",
    "progress_measure",
    "winner_equivalent",
    "entry_set",
    "target_class",
    "target_vertex",
    "mimick_next",
    "lift_strategy",
    "lift_solution",
    "verify_strategy",
    "gen_random",
    "gen_chain",
    "gen_branch",
    "gen_divergent_pair",
]
