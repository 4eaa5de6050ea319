"""Benchmark harness: direct solving versus reduce-then-solve.

For each (game, method, solver) combination one record is produced with
the original and reduced sizes and the wall-clock reduction and solving
times (best of a configurable number of repetitions, microsecond
resolution internally, milliseconds in the CSV).  The winner of vertex 0
is cross-checked across all methods per game; a mismatch means a soundness
bug and aborts the run.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .game import Game
from .reduction import quotient, refine_strong, refine_stuttering
from .solvers import solve

METHODS = ("direct", "strong+solve", "stuttering+solve")
CSV_SCHEMA_COMMENT = "# paritygame bench csv, schema v1; times are milliseconds"
CSV_HEADER = (
    "game,method,solver,orig_v,orig_e,red_v,red_e,"
    "t_reduce_ms,t_solve_ms,t_total_ms,winner_v0,runs"
)


class WinnerMismatchError(RuntimeError):
    """Different methods disagree on the winner of vertex 0."""


@dataclass
class BenchRecord:
    game_id: str
    method: str
    solver: str
    orig_v: int
    orig_e: int
    red_v: int
    red_e: int
    reduce_us: int
    solve_us: int
    winner_v0: int
    runs: int

    @property
    def total_us(self) -> int:
        return self.reduce_us + self.solve_us

    def csv_row(self) -> str:
        return ",".join(
            [
                self.game_id,
                self.method,
                self.solver,
                str(self.orig_v),
                str(self.orig_e),
                str(self.red_v),
                str(self.red_e),
                f"{self.reduce_us / 1000:.3f}",
                f"{self.solve_us / 1000:.3f}",
                f"{self.total_us / 1000:.3f}",
                str(self.winner_v0),
                str(self.runs),
            ]
        )


def _measure_once(game: Game, method: str, solver: str):
    if method == "direct":
        t0 = time.perf_counter_ns()
        solution = solve(game, solver)
        t1 = time.perf_counter_ns()
        return 0, (t1 - t0) // 1000, game.vertex_count, game.edge_count, solution.winner[0]
    refine = refine_strong if method == "strong+solve" else refine_stuttering
    t0 = time.perf_counter_ns()
    part = refine(game)
    reduced, vmap = quotient(game, part)
    t1 = time.perf_counter_ns()
    solution = solve(reduced, solver)
    t2 = time.perf_counter_ns()
    return (
        (t1 - t0) // 1000,
        (t2 - t1) // 1000,
        reduced.vertex_count,
        reduced.edge_count,
        solution.winner[vmap[0]],
    )


def _bench_one(args) -> BenchRecord:
    game_id, game, method, solver, repetitions = args
    best = None
    for _ in range(repetitions):
        sample = _measure_once(game, method, solver)
        if best is None or sample[0] + sample[1] < best[0] + best[1]:
            best = sample
    reduce_us, solve_us, red_v, red_e, winner = best
    return BenchRecord(
        game_id=game_id,
        method=method,
        solver=solver,
        orig_v=game.vertex_count,
        orig_e=game.edge_count,
        red_v=red_v,
        red_e=red_e,
        reduce_us=reduce_us,
        solve_us=solve_us,
        winner_v0=winner,
        runs=repetitions,
    )


def run_benchmark(
    games: list[tuple[str, Game]],
    methods=METHODS,
    solvers=("zielonka",),
    repetitions: int = 3,
    jobs: int = 1,
) -> list[BenchRecord]:
    """One record per (game, method, solver); raises
    :class:`WinnerMismatchError` when methods disagree on a game."""
    for m in methods:
        if m not in METHODS:
            raise ValueError(f"unknown method {m!r}")
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    tasks = [
        (game_id, game, method, solver, repetitions)
        for game_id, game in games
        for method in methods
        for solver in solvers
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_bench_one, tasks))
    else:
        records = [_bench_one(t) for t in tasks]

    by_game: dict[str, set[int]] = {}
    for r in records:
        by_game.setdefault(r.game_id, set()).add(r.winner_v0)
    for game_id, winners in by_game.items():
        if len(winners) > 1:
            raise WinnerMismatchError(
                f"game {game_id}: methods disagree on the winner of vertex 0"
            )
    return records


def records_to_csv(records: list[BenchRecord]) -> str:
    lines = [CSV_SCHEMA_COMMENT, CSV_HEADER]
    lines.extend(r.csv_row() for r in records)
    return "\n".join(lines)
