"""Shared fixture games.

g1: two vertices in a forced 2-cycle with priorities 0/1.
g2(n): chain of n odd vertices (priority 1) into an even self-loop sink
       (priority 0) — built by gen_chain.
g3: three even priority-0 vertices funnelling into an odd self-loop sink.
g4: an even choice vertex between a winning (priority 0) and a losing
    (priority 1) self-loop.
g5: a divergent odd 2-cycle with an escape edge to an even self-loop sink.
"""

import pytest

from paritygame import EVEN, ODD, Game


@pytest.fixture
def g1() -> Game:
    return Game(priority=[0, 1], owner=[EVEN, ODD], successors=[[1], [0]])


@pytest.fixture
def g4() -> Game:
    # v=0 chooses between a=1 (even self-loop) and b=2 (odd self-loop)
    return Game(
        priority=[0, 0, 1],
        owner=[EVEN, EVEN, ODD],
        successors=[[1, 2], [1], [2]],
    )
