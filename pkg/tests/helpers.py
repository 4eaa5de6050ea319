"""Helpers shared between the strategy tests and the acceptance suite."""

from paritygame import Game, LiftContext, quotient, refine_stuttering, solve_zielonka


def make_context(game: Game, player: int) -> LiftContext:
    part = refine_stuttering(game)
    reduced, vmap = quotient(game, part)
    qsol = solve_zielonka(reduced)
    return LiftContext.from_solution(game, part, reduced, vmap, qsol, player)


def random_consistent_walk(game, ctx, rng, start, max_len=10):
    """A play inside the winning blocks whose block projection follows the
    quotient strategy; at owned vertices it may also stay inert."""
    walk = [start]
    for _ in range(max_len):
        v = walk[-1]
        if game.owner[v] == ctx.player:
            c = ctx.vmap[v]
            tgt = ctx.quotient_strategy.moves[c]
            allowed = [
                w
                for w in game.successors[v]
                if ctx.vmap[w] == c or ctx.vmap[w] == tgt
            ]
        else:
            allowed = [
                w for w in game.successors[v] if ctx.vmap[w] in ctx.winning_blocks
            ]
        if not allowed:
            break
        walk.append(allowed[rng.below(len(allowed))])
    return walk
