"""Command-line front end.

Subcommands: ``info``, ``solve``, ``reduce``, ``generate``, ``verify`` and
``bench``.  Exit codes: 0 on success, 1 on a domain failure (parse error,
failed verification, benchmark winner mismatch), 2 on usage errors.

Game files use the PGSolver format.  ``--convention`` states how priorities
in files are read and written; it defaults to ``max``, matching the
surrounding tool ecosystem, while everything internal is min-parity.
"""

from __future__ import annotations

import argparse
import sys

from . import bench as bench_mod
from .game import EVEN, ODD, Game, Strategy, convert_priorities, stats
from .generators import gen_branch, gen_chain, gen_divergent_pair, gen_random
from .io import (
    FormatError,
    parse_pgsolver,
    parse_solution,
    write_pgsolver,
    write_solution,
)
from .reduction import quotient, refine_strong, refine_stuttering, write_partition
from .solvers import solve
from .strategy import verify_strategy


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _read_game(path: str, convention: str) -> Game:
    with open(path, "r", encoding="ascii") as fh:
        return parse_pgsolver(fh.read(), convention)


def _write_text(path: str | None, text: str):
    if path is None or path == "-":
        print(text)
    else:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text + "\n")


def _game_to_text(game: Game, convention: str) -> str:
    if convention == "max":
        game = convert_priorities(game, "min_to_max")
    return write_pgsolver(game)


def _build_parser() -> _Parser:
    parser = _Parser(prog="paritygame", description=__doc__)
    parser.add_argument(
        "--convention",
        choices=("min", "max"),
        default="max",
        help="priority convention of game files (default: max)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="print game statistics")
    p_info.add_argument("file")

    p_solve = sub.add_parser("solve", help="solve a game, print the solution")
    p_solve.add_argument("file")
    p_solve.add_argument(
        "--algorithm", choices=("zielonka", "spm", "brute"), default="zielonka"
    )

    p_reduce = sub.add_parser("reduce", help="minimise a game")
    p_reduce.add_argument("file")
    p_reduce.add_argument(
        "--equivalence", choices=("strong", "stuttering"), default="stuttering"
    )
    p_reduce.add_argument("-o", "--output", help="quotient game file (default: stdout)")
    p_reduce.add_argument("--map", dest="map_file", help="write the block map here")

    p_gen = sub.add_parser("generate", help="generate a game family member")
    p_gen.add_argument(
        "--family",
        choices=("random", "chain", "branch", "divergent-pair"),
        required=True,
    )
    p_gen.add_argument("--n", type=int, default=8, help="vertex count parameter")
    p_gen.add_argument("--degree", type=int, default=3, help="random family: max out-degree")
    p_gen.add_argument("--pmax", type=int, default=3, help="random family: max priority")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--chain-priority", type=int, default=1)
    p_gen.add_argument("--chain-owner", type=int, choices=(EVEN, ODD), default=ODD)
    p_gen.add_argument("--sink-priority", type=int, default=0)
    p_gen.add_argument("-o", "--output")

    p_verify = sub.add_parser("verify", help="check a solution file against a game")
    p_verify.add_argument("file")
    p_verify.add_argument("solution")

    p_bench = sub.add_parser("bench", help="benchmark direct vs reduce-then-solve")
    p_bench.add_argument("files", nargs="*", help="game files to benchmark")
    p_bench.add_argument("--family", choices=("random", "chain"))
    p_bench.add_argument("--n", default="", help="comma-separated sizes for --family")
    p_bench.add_argument("--count", type=int, default=1, help="random games per size")
    p_bench.add_argument("--degree", type=int, default=3)
    p_bench.add_argument("--pmax", type=int, default=3)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument(
        "--methods", default="all", help="comma list of direct,strong,stuttering or all"
    )
    p_bench.add_argument("--solvers", default="zielonka", help="comma list of solvers")
    p_bench.add_argument("--repetitions", type=int, default=3)
    p_bench.add_argument("--jobs", type=int, default=1)
    p_bench.add_argument("-o", "--output", help="CSV output file (default: stdout)")
    return parser


def _cmd_info(args) -> int:
    game = _read_game(args.file, args.convention)
    s = stats(game)
    print(f"vertices:   {s.vertex_count}")
    print(f"edges:      {s.edge_count}")
    print(f"priorities: {s.priority_count} {list(s.priorities_present)}")
    return 0


def _cmd_solve(args) -> int:
    game = _read_game(args.file, args.convention)
    solution = solve(game, args.algorithm)
    print(write_solution(game, solution.winner, solution.strategy_even, solution.strategy_odd))
    return 0


def _cmd_reduce(args) -> int:
    game = _read_game(args.file, args.convention)
    refine = refine_strong if args.equivalence == "strong" else refine_stuttering
    part = refine(game)
    reduced, _ = quotient(game, part)
    _write_text(args.output, _game_to_text(reduced, args.convention))
    if args.map_file:
        _write_text(args.map_file, write_partition(part))
    print(
        f"reduced {game.vertex_count} vertices / {game.edge_count} edges "
        f"to {reduced.vertex_count} / {reduced.edge_count}",
        file=sys.stderr,
    )
    return 0


def _cmd_generate(args) -> int:
    if args.family == "random":
        game = gen_random(args.n, args.degree, args.pmax, args.seed)
    elif args.family == "chain":
        game = gen_chain(args.n, args.chain_priority, args.chain_owner, args.sink_priority)
    elif args.family == "branch":
        game = gen_branch()
    else:
        game = gen_divergent_pair()
    _write_text(args.output, _game_to_text(game, args.convention))
    return 0


def _cmd_verify(args) -> int:
    game = _read_game(args.file, args.convention)
    with open(args.solution, "r", encoding="ascii") as fh:
        winner, moves = parse_solution(fh.read())
    if len(winner) != game.vertex_count:
        print("solution does not cover the game's vertices", file=sys.stderr)
        return 1
    for player in (EVEN, ODD):
        region = [v for v in game.vertices() if winner[v] == player]
        strat = Strategy(
            player, {v: w for v, w in moves.items() if game.owner[v] == player}
        )
        result = verify_strategy(game, player, region, strat)
        if not result:
            print(
                f"player {player}: {result.reason}; witness {result.witness}",
                file=sys.stderr,
            )
            return 1
    print("solution verified: both strategies win their regions")
    return 0


def _cmd_bench(args) -> int:
    games: list[tuple[str, Game]] = []
    for path in args.files:
        games.append((path, _read_game(path, args.convention)))
    if args.family:
        sizes = [int(tok) for tok in args.n.split(",") if tok]
        if not sizes:
            raise _UsageError("--family needs --n with at least one size")
        for n in sizes:
            if args.family == "chain":
                games.append((f"chain-{n}", gen_chain(n, 1, ODD, 0)))
            else:
                for i in range(args.count):
                    seed = args.seed + i
                    games.append(
                        (
                            f"random-{n}-s{seed}",
                            gen_random(n, args.degree, args.pmax, seed),
                        )
                    )
    if not games:
        raise _UsageError("nothing to benchmark: pass game files or --family")
    aliases = {"strong": "strong+solve", "stuttering": "stuttering+solve"}
    methods = (
        bench_mod.METHODS
        if args.methods == "all"
        else tuple(aliases.get(tok, tok) for tok in args.methods.split(",") if tok)
    )
    solvers = tuple(tok for tok in args.solvers.split(",") if tok)
    records = bench_mod.run_benchmark(
        games,
        methods=methods,
        solvers=solvers,
        repetitions=args.repetitions,
        jobs=args.jobs,
    )
    _write_text(args.output, bench_mod.records_to_csv(records))
    return 0


_COMMANDS = {
    "info": _cmd_info,
    "solve": _cmd_solve,
    "reduce": _cmd_reduce,
    "generate": _cmd_generate,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def cli_dispatch(argv: list[str]) -> int:
    """Run one CLI invocation; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2
    try:
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (FormatError, OSError, ValueError, bench_mod.WinnerMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
