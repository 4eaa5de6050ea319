"""Complete parity-game solvers.

Three interchangeable solvers produce winners plus memoryless winning
strategies for both players:

* :func:`solve_zielonka` — the recursive attractor decomposition, phrased
  directly for the min-parity winner convention;
* :func:`solve_spm` — small progress measures, run on the max-converted
  game (the lattice's standard presentation), with the second player's
  strategy obtained from the dual game;
* :func:`solve_brute` — strategy enumeration with a one-player cycle
  analysis, usable as an oracle on tiny games.
"""

from __future__ import annotations

import itertools
import sys
from collections import deque
from dataclasses import dataclass

from .game import EVEN, ODD, Game, Strategy, convert_priorities
from .graphs import strongly_connected_components


@dataclass
class Solution:
    """Winner per vertex plus a winning strategy for each player, defined on
    exactly the vertices that player owns and wins."""

    winner: list[int]
    strategy_even: Strategy
    strategy_odd: Strategy

    def region(self, player: int) -> list[int]:
        return [v for v, w in enumerate(self.winner) if w == player]

    def strategy(self, player: int) -> Strategy:
        return self.strategy_even if player == EVEN else self.strategy_odd


def winner_equivalent(solution: Solution, v: int, u: int) -> bool:
    return solution.winner[v] == solution.winner[u]


def _attract(
    game: Game, player: int, targets: list[int], alive: list[bool]
) -> tuple[set[int], dict[int, int]]:
    """Attractor of ``targets`` for ``player`` inside the subgame ``alive``,
    with a deterministic attractor strategy for the attracted player-owned
    vertices outside the target set."""
    in_attr = set(targets)
    witness: dict[int, int] = {}
    escape: dict[int, int] = {}
    queue = deque(sorted(in_attr))
    while queue:
        u = queue.popleft()
        for p in game.predecessors[u]:
            if not alive[p] or p in in_attr:
                continue
            if game.owner[p] == player:
                # witness chosen before p joins, so a self-loop can never be
                # picked and witness chains always shorten the rank
                witness[p] = min(w for w in game.successors[p] if w in in_attr)
                in_attr.add(p)
                queue.append(p)
            else:
                if p not in escape:
                    escape[p] = sum(1 for w in game.successors[p] if alive[w])
                escape[p] -= 1
                if escape[p] == 0:
                    in_attr.add(p)
                    queue.append(p)
    return in_attr, witness


def attractor(game: Game, player: int, targets) -> list[int]:
    """Least set containing ``targets`` that ``player`` can force plays
    into: player vertices with a successor inside, opponent vertices with
    all successors inside.  Returned in ascending vertex order."""
    alive = [True] * game.vertex_count
    attr, _ = _attract(game, player, sorted(set(targets)), alive)
    return sorted(attr)


def solve_zielonka(game: Game) -> Solution:
    """Recursive attractor-based solver (min-parity).

    Each level removes the attractor of the lowest-priority vertices for
    the matching player, solves the remainder, and either claims the whole
    subgame or re-runs it without the opponent's established region.
    """
    n = game.vertex_count
    moves: dict[int, dict[int, int]] = {EVEN: {}, ODD: {}}
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 2 * n + 1000))

    def rec(alive: list[bool], size: int) -> tuple[set[int], set[int]]:
        if size == 0:
            return set(), set()
        m = min(game.priority[v] for v in range(n) if alive[v])
        side = m % 2
        lowest = [v for v in range(n) if alive[v] and game.priority[v] == m]
        attr, witness = _attract(game, side, lowest, alive)
        sub = alive[:]
        for v in attr:
            sub[v] = False
        regions = rec(sub, size - len(attr))
        if not regions[1 - side]:
            for v in lowest:
                if game.owner[v] == side:
                    moves[side][v] = min(w for w in game.successors[v] if alive[w])
            moves[side].update(witness)
            full = {v for v in range(n) if alive[v]}
            return (full, set()) if side == EVEN else (set(), full)
        opp = 1 - side
        trap, trap_witness = _attract(game, opp, sorted(regions[opp]), alive)
        moves[opp].update(trap_witness)
        rest = alive[:]
        for v in trap:
            rest[v] = False
        regions2 = rec(rest, size - len(trap))
        regions2[opp].update(trap)
        return regions2

    region_even, region_odd = rec([True] * n, n)
    winner = [EVEN if v in region_even else ODD for v in range(n)]
    strategies = {}
    for player in (EVEN, ODD):
        strategies[player] = Strategy(
            player,
            {
                v: w
                for v, w in moves[player].items()
                if winner[v] == player and game.owner[v] == player
            },
        )
    return Solution(winner, strategies[EVEN], strategies[ODD])


# ---------------------------------------------------------------------------
# Small progress measures.

TOP = None  # sentinel: the measure lattice's top element


@dataclass
class ProgressMeasure:
    """Per-vertex measure for the max-parity lifting algorithm.

    ``odd_priorities`` lists the odd priorities of the game in decreasing
    order of significance; a non-top value is a tuple with one component
    per odd priority, bounded by the number of vertices carrying it.
    """

    odd_priorities: list[int]
    bounds: list[int]
    value: list[tuple[int, ...] | None]

    def is_top(self, v: int) -> bool:
        return self.value[v] is TOP

    def in_bounds(self, v: int) -> bool:
        t = self.value[v]
        return t is TOP or all(0 <= c <= b for c, b in zip(t, self.bounds))


def _spm_even_half(game: Game) -> tuple[ProgressMeasure, list[bool], dict[int, int]]:
    """Even player's winning set and strategy via measure lifting on the
    max-converted game; also returns the converged measure."""
    gmax = convert_priorities(game, "min_to_max")
    n = gmax.vertex_count
    d = max(gmax.priority, default=0)
    odd_ps = [p for p in range(d, 0, -1) if p % 2 == 1]
    bounds = [sum(1 for v in range(n) if gmax.priority[v] == p) for p in odd_ps]
    width = len(odd_ps)
    # number of significant components for each priority p: those >= p
    prefix_len = [sum(1 for q in odd_ps if q >= p) for p in range(d + 1)]

    measure = ProgressMeasure(odd_ps, bounds, [(0,) * width] * n)
    value = measure.value

    def prog(v: int, w: int) -> tuple[int, ...] | None:
        mw = value[w]
        if mw is TOP:
            return TOP
        k = prefix_len[gmax.priority[v]]
        head = list(mw[:k])
        if gmax.priority[v] % 2 == 1:
            for j in range(k - 1, -1, -1):
                if head[j] < bounds[j]:
                    head[j] += 1
                    break
                head[j] = 0
            else:
                return TOP
        return tuple(head) + (0,) * (width - k)

    def less(a, b) -> bool:
        if b is TOP:
            return a is not TOP
        return a is not TOP and a < b

    changed = True
    while changed:
        changed = False
        for v in range(n):
            options = [prog(v, w) for w in gmax.successors[v]]
            if gmax.owner[v] == EVEN:
                best = options[0]
                for o in options[1:]:
                    if less(o, best):
                        best = o
            else:
                best = options[0]
                for o in options[1:]:
                    if less(best, o):
                        best = o
            if less(value[v], best):
                value[v] = best
                assert measure.in_bounds(v)
                changed = True

    even_wins = [value[v] is not TOP for v in range(n)]
    strategy: dict[int, int] = {}
    for v in range(n):
        if even_wins[v] and gmax.owner[v] == EVEN:
            strategy[v] = min(
                gmax.successors[v],
                key=lambda w: (
                    (1,) if prog(v, w) is TOP else (0, prog(v, w)),
                    (1,) if value[w] is TOP else (0, value[w]),
                    w,
                ),
            )
    return measure, even_wins, strategy


def progress_measure(game: Game) -> ProgressMeasure:
    """Converged measure of the max-converted game (diagnostic view of the
    lifting run behind the even half of :func:`solve_spm`): a vertex is
    top exactly when the odd player wins it."""
    measure, _, _ = _spm_even_half(game)
    return measure


def solve_spm(game: Game) -> Solution:
    """Small progress measures for both players.

    The primal run yields the even player's region and strategy; the odd
    player's side comes from the dual game (owners swapped, priorities
    shifted by one), whose even player coincides with the original odd one.
    """
    _, even_wins, even_moves = _spm_even_half(game)
    dual = Game(
        [p + 1 for p in game.priority],
        [1 - o for o in game.owner],
        game.successors,
        game.names,
    )
    _, odd_wins, odd_moves = _spm_even_half(dual)
    for v in game.vertices():
        if even_wins[v] == odd_wins[v]:
            raise RuntimeError(f"progress measure halves disagree at vertex {v}")
    winner = [EVEN if even_wins[v] else ODD for v in game.vertices()]
    return Solution(
        winner,
        Strategy(EVEN, even_moves),
        Strategy(ODD, odd_moves),
    )


# ---------------------------------------------------------------------------
# Brute-force oracle.

BRUTE_VERTEX_LIMIT = 10
BRUTE_CHOICE_LIMIT = 10**6


def _cycle_wins(game: Game, player: int, fixed: dict[int, int]) -> set[int]:
    """Vertices from which the free-moving opponent can reach a cycle whose
    minimum priority has the opponent's parity, when ``player`` is pinned
    to the memoryless strategy ``fixed``."""
    n = game.vertex_count

    def restricted(v: int) -> list[int]:
        if game.owner[v] == player:
            return [fixed[v]]
        return list(game.successors[v])

    opponent = 1 - player
    bad: set[int] = set()
    for q in sorted(set(game.priority)):
        if q % 2 != opponent:
            continue
        sub = [v for v in range(n) if game.priority[v] >= q]
        sub_set = set(sub)
        sccs = strongly_connected_components(
            sub, lambda v: [w for w in restricted(v) if w in sub_set]
        )
        for comp in sccs:
            if not any(game.priority[v] == q for v in comp):
                continue
            if len(comp) > 1 or comp[0] in restricted(comp[0]):
                bad.update(comp)
    # backward reachability of a bad cycle in the restricted graph
    reach = set(bad)
    queue = deque(bad)
    while queue:
        u = queue.popleft()
        for p in game.predecessors[u]:
            if p not in reach and u in restricted(p):
                reach.add(p)
                queue.append(p)
    return reach


def _brute_side(game: Game, player: int) -> tuple[set[int], dict[int, int]]:
    own = [v for v in game.vertices() if game.owner[v] == player]
    count = 1
    for v in own:
        count *= len(game.successors[v])
        if count > BRUTE_CHOICE_LIMIT:
            raise ValueError("brute-force solver: strategy space too large")
    union: set[int] = set()
    best: set[int] = set()
    best_moves: dict[int, int] = {}
    for choice in itertools.product(*(game.successors[v] for v in own)):
        moves = dict(zip(own, choice))
        wins = set(game.vertices()) - _cycle_wins(game, player, moves)
        union |= wins
        if len(wins) > len(best):
            best = wins
            best_moves = moves
    if best != union:
        raise RuntimeError("no single strategy dominates; determinacy violated?")
    return best, best_moves


def solve_brute(game: Game) -> Solution:
    """Exhaustive solver: enumerate one player's memoryless strategies and
    settle each against a free-moving opponent via cycle analysis.  Only
    for small games (the enumeration is exponential)."""
    if game.vertex_count > BRUTE_VERTEX_LIMIT:
        raise ValueError(
            f"brute-force solver limited to {BRUTE_VERTEX_LIMIT} vertices"
        )
    even_region, even_moves = _brute_side(game, EVEN)
    odd_region, odd_moves = _brute_side(game, ODD)
    if even_region | odd_region != set(game.vertices()) or even_region & odd_region:
        raise RuntimeError("winning regions do not partition the vertex set")
    winner = [EVEN if v in even_region else ODD for v in game.vertices()]
    return Solution(
        winner,
        Strategy(EVEN, {v: w for v, w in even_moves.items() if v in even_region}),
        Strategy(ODD, {v: w for v, w in odd_moves.items() if v in odd_region}),
    )


def solve(game: Game, algorithm: str = "zielonka") -> Solution:
    """Dispatch by algorithm name (``zielonka``, ``spm`` or ``brute``)."""
    try:
        fn = {"zielonka": solve_zielonka, "spm": solve_spm, "brute": solve_brute}[algorithm]
    except KeyError:
        raise ValueError(f"unknown algorithm {algorithm!r}") from None
    return fn(game)
