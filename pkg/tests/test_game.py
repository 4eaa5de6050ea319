"""Game representation, orderings, plays and priority conversion."""

import pytest

from paritygame import (
    EVEN,
    INFINITY,
    ODD,
    Game,
    Path,
    Strategy,
    cmp_proximity,
    consistent,
    convert_priorities,
    distance,
    gen_chain,
    gen_random,
    min_vertex,
    play_from,
    solve_zielonka,
    stats,
    validate,
)


def test_validate_clean_game(g1):
    assert validate(g1) == []


def test_validate_totality_violation():
    g = Game(priority=[0, 1], owner=[EVEN, ODD], successors=[[1], []])
    violations = validate(g)
    assert len(violations) == 1 and "totality(v1)" in violations[0]


def test_validate_dangling_edge():
    g = Game(priority=[0, 1], owner=[EVEN, ODD], successors=[[1], [7]])
    assert any("dangling_edge" in v for v in validate(g))


def test_successor_lists_normalised():
    g = Game(priority=[0], owner=[EVEN], successors=[[0, 0, 0]])
    assert g.successors == ((0,),)
    assert g.predecessors == ((0,),)


def test_stats_g1(g1):
    s = stats(g1)
    assert (s.vertex_count, s.edge_count, s.priority_count) == (2, 2, 2)
    assert s.priorities_present == (0, 1)


def test_stats_branch_fixture():
    from paritygame import gen_branch

    s = stats(gen_branch())
    assert (s.vertex_count, s.edge_count, s.priority_count) == (4, 4, 2)
    assert s.priorities_present == (0, 1)


def test_stats_self_loop():
    g = Game(priority=[5], owner=[ODD], successors=[[0]])
    s = stats(g)
    assert (s.vertex_count, s.edge_count, s.priority_count) == (1, 1, 1)
    assert s.priorities_present == (5,)


def test_distance_examples(g1, g4):
    assert distance(g1, 0, 1) == 1
    assert distance(g1, 0, 0) == 0
    chain = gen_chain(3, 1, ODD, 0)
    assert distance(chain, 0, 3) == 3
    # a's only edge is its self-loop, b is unreachable from it
    assert distance(g4, 1, 2) == INFINITY


def test_distance_triangle_inequality_along_edges():
    for seed in range(20):
        g = gen_random(1 + seed % 12, 3, 3, seed)
        for u in g.vertices():
            for v in g.vertices():
                for w in g.successors[v]:
                    assert distance(g, v, u) <= 1 + distance(g, w, u)


def test_cmp_proximity_target_is_minimal():
    g = gen_random(9, 3, 3, 3)
    for u in g.vertices():
        for v in g.vertices():
            if v != u:
                assert cmp_proximity(g, u, u, v) == -1


def test_cmp_proximity_chain_distances():
    chain = gen_chain(3, 1, ODD, 0)
    # c2 (distance 2 to the sink) precedes c1 (distance 3)
    assert cmp_proximity(chain, 3, 1, 0) == -1
    assert cmp_proximity(chain, 3, 0, 1) == 1


def test_cmp_proximity_ties_break_by_index(g1):
    g = Game(priority=[0, 0, 0], owner=[EVEN] * 3, successors=[[2], [2], [2]])
    assert cmp_proximity(g, 2, 0, 1) == -1
    with pytest.raises(ValueError):
        cmp_proximity(g, 2, 1, 1)


def test_cmp_proximity_is_strict_total_order():
    for seed in range(10):
        g = gen_random(7, 3, 2, seed)
        for u in g.vertices():
            for a in g.vertices():
                for b in g.vertices():
                    if a == b:
                        continue
                    assert cmp_proximity(g, u, a, b) == -cmp_proximity(g, u, b, a)
            order = sorted(
                g.vertices(),
                key=lambda a: (distance(g, a, u), a),
            )
            for i in range(len(order) - 1):
                assert cmp_proximity(g, u, order[i], order[i + 1]) == -1


def test_min_vertex():
    assert min_vertex({3, 1, 2}) == 1
    assert min_vertex({0}) == 0
    with pytest.raises(ValueError):
        min_vertex(set())


def test_consistent_examples(g1, g4):
    phi = Strategy(EVEN, {0: 1})
    assert consistent(g1, Path((0, 1, 0)), phi)
    assert not consistent(g4, Path((0, 2)), Strategy(EVEN, {0: 1}))
    assert consistent(g4, Path((2,)), Strategy(EVEN, {0: 1}))


def test_consistent_ignores_vertices_outside_domain(g4):
    # v0 unconstrained when the strategy says nothing about it
    assert consistent(g4, Path((0, 2, 2)), Strategy(EVEN, {1: 1}))


def test_play_from_forced_cycle(g1):
    play, winner = play_from(g1, Strategy(EVEN, {0: 1}), Strategy(ODD, {1: 0}), 0)
    assert play.prefix == ()
    assert play.cycle == (0, 1)
    assert winner == EVEN


def test_play_from_choice(g4):
    odd = Strategy(ODD, {2: 2})
    play, winner = play_from(g4, Strategy(EVEN, {0: 1, 1: 1}), odd, 0)
    assert (play.prefix, play.cycle, winner) == ((0,), (1,), EVEN)
    play, winner = play_from(g4, Strategy(EVEN, {0: 2, 1: 1}), odd, 0)
    assert (play.prefix, play.cycle, winner) == ((0,), (2,), ODD)


def test_play_from_missing_move(g4):
    with pytest.raises(ValueError):
        play_from(g4, Strategy(EVEN, {0: 2}), Strategy(ODD, {}), 0)


def test_play_from_lengths_bounded():
    for seed in range(20):
        g = gen_random(1 + seed % 10, 3, 3, seed)
        se = Strategy(EVEN, {v: g.successors[v][0] for v in g.vertices() if g.owner[v] == EVEN})
        so = Strategy(ODD, {v: g.successors[v][-1] for v in g.vertices() if g.owner[v] == ODD})
        for v in g.vertices():
            play, _ = play_from(g, se, so, v)
            assert len(play.prefix) <= g.vertex_count
            assert 1 <= len(play.cycle) <= g.vertex_count
            assert play.is_valid(g)


def test_convert_priorities_reflects_at_even_bound(g1):
    converted = convert_priorities(g1, "min_to_max")
    assert converted.priority == (2, 1)


def test_convert_priorities_all_equal_stay_equal():
    g = Game(priority=[3, 3], owner=[EVEN, ODD], successors=[[1], [0]])
    converted = convert_priorities(g, "min_to_max")
    assert len(set(converted.priority)) == 1


def test_convert_priorities_involution():
    # the reflection is an involution whenever priority 0 or 1 is present
    for seed in range(30):
        g = gen_random(1 + seed % 10, 3, 3, seed)
        if min(g.priority) > 1:
            continue
        twice = convert_priorities(convert_priorities(g, "min_to_max"), "max_to_min")
        assert twice.priority == g.priority


def test_convert_priorities_preserves_winner(g1):
    # the reflected game carries the same winners under the opposite
    # reading; with min-parity solvers that is testable as a double
    # conversion (the induced priority shift is always even)
    for seed in range(30):
        g = gen_random(1 + seed % 12, 3, 3, seed)
        round_tripped = convert_priorities(
            convert_priorities(g, "min_to_max"), "max_to_min"
        )
        assert solve_zielonka(g).winner == solve_zielonka(round_tripped).winner
    g1_twice = convert_priorities(convert_priorities(g1, "min_to_max"), "max_to_min")
    assert solve_zielonka(g1).winner == solve_zielonka(g1_twice).winner


def test_path_validity(g1):
    assert Path((0, 1, 0)).is_valid(g1)
    assert not Path((0, 0)).is_valid(g1)
    with pytest.raises(ValueError):
        Path(())
