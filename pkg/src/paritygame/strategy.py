"""Lifting winning strategies from a stuttering quotient back to the
original game, plus an independent strategy verifier.

Given a winning memoryless strategy on the quotient, the lifted strategy
shadows it: inside a block it steers along intra-block edges towards an
exit onto the chosen target vertex, and where the quotient strategy stays
put (a divergent block's self-loop) it keeps the play inside the block.
With a memoryless quotient strategy every selector below depends only on
the final vertex of the play, which is asserted by the test suite rather
than assumed.

:func:`verify_strategy` is the safety net: it checks region closure and
the parity of every cycle of the strategy-restricted graph, so a defective
lifted strategy is reported as a hard error instead of being trusted.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .game import EVEN, ODD, Game, Path, Strategy
from .graphs import strongly_connected_components
from .reduction import Partition
from .solvers import Solution


@dataclass
class LiftContext:
    """Everything needed to transport one player's quotient strategy back
    to the original game.

    ``vmap`` sends each vertex to its quotient vertex (block);
    ``quotient_strategy`` must be winning for ``player`` on the quotient
    vertices listed in ``winning_blocks``.
    """

    game: Game
    partition: Partition
    quotient: Game
    vmap: list[int]
    quotient_strategy: Strategy
    player: int
    winning_blocks: set[int]

    def __post_init__(self):
        if self.partition.kind != "stuttering":
            raise ValueError("strategy lifting requires a stuttering partition")
        if self.vmap != self.partition.block_of:
            raise ValueError("vmap does not match the partition")
        if self.quotient_strategy.player != self.player:
            raise ValueError("quotient strategy belongs to the other player")
        for c, t in self.quotient_strategy.moves.items():
            if not self.quotient.has_edge(c, t):
                raise ValueError(f"quotient strategy move {c}->{t} is not an edge")

    @classmethod
    def from_solution(
        cls,
        game: Game,
        partition: Partition,
        quotient: Game,
        vmap: list[int],
        solution: Solution,
        player: int,
    ) -> "LiftContext":
        winning = {b for b in quotient.vertices() if solution.winner[b] == player}
        return cls(game, partition, quotient, vmap, solution.strategy(player), player, winning)

    def won_region(self) -> list[int]:
        """Preimage of the winning quotient vertices."""
        return [v for v in self.game.vertices() if self.vmap[v] in self.winning_blocks]


def _path_vertices(p: Path | Sequence[int]) -> tuple[int, ...]:
    return p.vertices if isinstance(p, Path) else tuple(p)


def _check_in_won_blocks(ctx: LiftContext, vs: tuple[int, ...]):
    if not Path(vs).is_valid(ctx.game):
        raise ValueError("sequence is not a path of the game")
    for v in vs:
        if ctx.vmap[v] not in ctx.winning_blocks:
            raise ValueError(f"path vertex {v} lies outside the winning blocks")


def entry_set(ctx: LiftContext, p: Path | Sequence[int]) -> list[int]:
    """Vertices of new blocks that strategy-consistent continuations of the
    play may enter next.

    With a memoryless quotient strategy the set is a function of the final
    block alone: the chosen successor block at own vertices (empty when the
    strategy stays on a divergent block), every other successor block at
    opponent vertices.
    """
    vs = _path_vertices(p)
    _check_in_won_blocks(ctx, vs)
    c = ctx.vmap[vs[-1]]
    if ctx.quotient.owner[c] == ctx.player:
        if c not in ctx.quotient_strategy.moves:
            raise ValueError(f"quotient strategy undefined at winning block {c}")
        t = ctx.quotient_strategy.moves[c]
        if t == c:
            return []
        return list(ctx.partition.blocks[t])
    out: list[int] = []
    for b in ctx.quotient.successors[c]:
        if b != c:
            out.extend(ctx.partition.blocks[b])
    return sorted(out)


def target_class(ctx: LiftContext, p: Path | Sequence[int]) -> int:
    """Block of the least entry vertex: the unique block the lifted
    strategy will steer the play into."""
    entries = entry_set(ctx, p)
    if not entries:
        raise ValueError("target_class of an empty entry set")
    return ctx.vmap[min(entries)]


def target_vertex(ctx: LiftContext, p: Path | Sequence[int]) -> int:
    """Least target-class vertex reachable by an intra-block run from the
    end of the play followed by a single exit edge."""
    tclass = target_class(ctx, p)
    vs = _path_vertices(p)
    last = vs[-1]
    b = ctx.vmap[last]
    game = ctx.game
    block_of = ctx.vmap
    closure = {last}
    stack = [last]
    while stack:
        x = stack.pop()
        for w in game.successors[x]:
            if block_of[w] == b and w not in closure:
                closure.add(w)
                stack.append(w)
    candidates = {
        u for w in closure for u in game.successors[w] if block_of[u] == tclass
    }
    assert candidates, "stable block lost its exit onto the target class"
    return min(candidates)


def _exit_distances(ctx: LiftContext, block: int, t: int) -> dict[int, int]:
    """Shortest number of steps from each block member to the target vertex
    ``t`` using intra-block edges and one final exit edge."""
    game = ctx.game
    members = ctx.partition.blocks[block]
    member_set = set(members)
    dist = {w: 1 for w in members if game.has_edge(w, t)}
    frontier = deque(sorted(dist))
    while frontier:
        w = frontier.popleft()
        for q in game.predecessors[w]:
            if q in member_set and q not in dist:
                dist[q] = dist[w] + 1
                frontier.append(q)
    return dist


def mimick_next(ctx: LiftContext, p: Path | Sequence[int]) -> int:
    """Next move of the lifted strategy after play ``p`` (whose final
    vertex the lifting player owns).

    When an exit is wanted and directly available, take it; otherwise move
    to the inert successor closest to an exit onto the target vertex.
    Proximity is measured along intra-block steps: a globally short route
    that first leaves the block is no help to a play that must stay inert,
    and ranking by graph distance can lock the play into an intra-block
    cycle.  With an empty entry set the block is divergent and the play
    simply stays inside it.
    """
    vs = _path_vertices(p)
    last = vs[-1]
    game = ctx.game
    if game.owner[last] != ctx.player:
        raise ValueError(f"path ends at vertex {last} not owned by player {ctx.player}")
    entries = entry_set(ctx, p)
    b = ctx.vmap[last]
    inert = [u for u in game.successors[last] if ctx.vmap[u] == b]
    if not entries:
        assert ctx.partition.divergent[b], "empty entry set at a non-divergent block"
        assert inert, "divergent block member without an intra-block move"
        return min(inert)
    t = target_vertex(ctx, p)
    if game.has_edge(last, t):
        return t
    dist = _exit_distances(ctx, b, t)
    assert any(u in dist for u in inert), "no inert route towards the target"
    return min(inert, key=lambda u: (dist.get(u, float("inf")), u))


def lift_strategy(ctx: LiftContext) -> Strategy:
    """Memoryless strategy on the original game induced by the quotient
    strategy: defined on the player's vertices of every winning block."""
    moves = {}
    for v in ctx.game.vertices():
        if ctx.game.owner[v] == ctx.player and ctx.vmap[v] in ctx.winning_blocks:
            moves[v] = mimick_next(ctx, (v,))
    return Strategy(ctx.player, moves)


@dataclass
class PathStrategyOracle:
    """Path-dependent strategy interface over the lifting construction:
    feed it any play ending at an owned vertex, get the next vertex."""

    context: LiftContext

    def next_move(self, p: Path | Sequence[int]) -> int:
        return mimick_next(self.context, p)

    def __call__(self, p: Path | Sequence[int]) -> int:
        return self.next_move(p)


@dataclass
class VerifyResult:
    ok: bool
    reason: str = ""
    witness: tuple = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.ok


def _find_cycle(start: int, comp: set[int], succ) -> list[int]:
    """A cycle through ``start`` inside a strongly connected set."""
    parent: dict[int, int] = {}
    frontier = deque([start])
    while frontier:
        x = frontier.popleft()
        for w in succ(x):
            if w == start:
                cycle = [x]
                while x != start:
                    x = parent[x]
                    cycle.append(x)
                return list(reversed(cycle))
            if w in comp and w not in parent:
                parent[w] = x
                frontier.append(w)
    raise AssertionError("no cycle through a cyclic SCC vertex")


def verify_strategy(
    game: Game, player: int, region, strategy: Strategy
) -> VerifyResult:
    """Independent check that ``strategy`` wins everywhere on ``region``.

    Verifies (a) the opponent cannot leave the region and the strategy does
    not either, and (b) every cycle of the strategy-restricted graph inside
    the region has a minimum priority of the player's parity.  On failure
    the result carries an escaping edge, an uncovered vertex, or a witness
    cycle.
    """
    W = set(region)
    opponent = 1 - player
    for v in sorted(W):
        if game.owner[v] == opponent:
            for w in game.successors[v]:
                if w not in W:
                    return VerifyResult(False, "opponent can escape the region", (v, w))
        else:
            if v not in strategy.moves:
                return VerifyResult(False, "strategy undefined inside the region", (v,))
            w = strategy.moves[v]
            if not game.has_edge(v, w):
                return VerifyResult(False, "strategy move is not a game edge", (v, w))
            if w not in W:
                return VerifyResult(False, "strategy leaves the region", (v, w))

    def restricted(v: int) -> list[int]:
        if game.owner[v] == player:
            return [strategy.moves[v]]
        return list(game.successors[v])

    for q in sorted({game.priority[v] for v in W}):
        if q % 2 == player:
            continue
        sub = [v for v in sorted(W) if game.priority[v] >= q]
        sub_set = set(sub)
        sccs = strongly_connected_components(
            sub, lambda v: [w for w in restricted(v) if w in sub_set]
        )
        for comp in sccs:
            if not any(game.priority[v] == q for v in comp):
                continue
            cyclic = len(comp) > 1 or comp[0] in restricted(comp[0])
            if not cyclic:
                continue
            start = min(v for v in comp if game.priority[v] == q)
            comp_set = set(comp)
            cycle = _find_cycle(start, comp_set, lambda v: [w for w in restricted(v) if w in comp_set])
            return VerifyResult(
                False, f"cycle with losing minimal priority {q}", tuple(cycle)
            )
    return VerifyResult(True)


def lift_solution(
    game: Game,
    partition: Partition,
    quotient_game: Game,
    vmap: list[int],
    quotient_solution: Solution,
) -> Solution:
    """Full solution of the original game out of a solved quotient: winners
    transfer along the block map and both strategies are lifted."""
    winner = [quotient_solution.winner[vmap[v]] for v in game.vertices()]
    strategies = {}
    for player in (EVEN, ODD):
        ctx = LiftContext.from_solution(
            game, partition, quotient_game, vmap, quotient_solution, player
        )
        strategies[player] = lift_strategy(ctx)
    return Solution(winner, strategies[EVEN], strategies[ODD])
