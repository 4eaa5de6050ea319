"""Solving games and carrying quotient strategies back to the original.

Winning a reduced game is only half the story: to explain *how* a player
wins the original game we lift the quotient strategy.  Inside each block
the lifted strategy walks along intra-block edges towards an exit onto
the target vertex chosen from the quotient move; an independent verifier
then certifies the result, so nothing rests on the construction alone.
"""

from paritygame import (
    EVEN,
    ODD,
    LiftContext,
    gen_random,
    lift_strategy,
    quotient,
    refine_stuttering,
    solve_brute,
    solve_spm,
    solve_zielonka,
    verify_strategy,
)

game = gen_random(10, 3, 2, 46)

# Three solvers, one answer.
for solver in (solve_zielonka, solve_spm, solve_brute):
    solution = solver(game)
    print(f"{solver.__name__:>14}: winners {solution.winner}")

direct = solve_zielonka(game)
print("even strategy:", direct.strategy_even.moves)
print("odd strategy: ", direct.strategy_odd.moves)

# Reduce, solve the quotient, lift both strategies, verify them.
part = refine_stuttering(game)
reduced, vmap = quotient(game, part)
print(f"\nreduced {game.vertex_count} vertices to {reduced.vertex_count}")
reduced_solution = solve_zielonka(reduced)

for player in (EVEN, ODD):
    ctx = LiftContext.from_solution(game, part, reduced, vmap, reduced_solution, player)
    lifted = lift_strategy(ctx)
    region = ctx.won_region()
    result = verify_strategy(game, player, region, lifted)
    print(f"player {player}: wins {region}, lifted moves {lifted.moves}, "
          f"verified: {result.ok}")
    assert region == direct.region(player)
