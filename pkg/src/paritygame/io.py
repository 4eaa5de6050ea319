"""Reading and writing games in the PGSolver text format.

Grammar::

    file     := header? line+
    header   := "parity" <max-id> ";"
    line     := <id> <priority> <owner> <succ> ("," <succ>)* name? ";"
    name     := '"' <characters> '"'

Owner 0 is the even player, 1 the odd player.  Whitespace is free-form;
comments are not supported.  Internally the toolkit always uses min-parity
winner semantics: parsing with ``convention="max"`` reflects the priorities
on input (and writing converts back at the CLI boundary).

A companion, equally line-oriented format stores solutions: a header
``solution <max-id>;`` followed by ``<id> <winner> (<move>)? ;`` per
vertex, the move being present exactly when the winner owns the vertex.
"""

from __future__ import annotations

import re

from .game import EVEN, ODD, Game, Strategy, convert_priorities


class FormatError(ValueError):
    """Malformed game or solution text; carries a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


_HEADER_RE = re.compile(r"^\s*parity\s+(\d+)\s*;\s*$")
_VERTEX_RE = re.compile(
    r"^\s*(\d+)\s+(\d+)\s+([01])(?:\s+([0-9][0-9,\s]*?))?\s*(?:\"([^\"]*)\")?\s*;\s*$"
)


def parse_pgsolver(text: str | bytes, convention: str = "min") -> Game:
    """Parse PGSolver text into a validated game.

    ``convention`` states how priorities in the file are to be read:
    ``"min"`` takes them verbatim, ``"max"`` reflects them so that internal
    semantics is always min-parity.
    """
    if convention not in ("min", "max"):
        raise ValueError(f"unknown priority convention {convention!r}")
    if isinstance(text, bytes):
        text = text.decode("ascii")

    entries: dict[int, tuple[int, int, list[int], str | None]] = {}
    lines = text.split("\n")
    start = 0
    if lines and _HEADER_RE.match(lines[0]):
        start = 1
    for lineno, raw in enumerate(lines[start:], start=start + 1):
        if not raw.strip():
            continue
        m = _VERTEX_RE.match(raw)
        if m is None:
            raise FormatError(lineno, f"cannot parse vertex line {raw.strip()!r}")
        vid = int(m.group(1))
        if vid in entries:
            raise FormatError(lineno, f"duplicate vertex id {vid}")
        succ_field = (m.group(4) or "").strip()
        if not succ_field:
            raise FormatError(lineno, f"vertex {vid} has an empty successor list")
        try:
            succs = [int(tok) for tok in succ_field.split(",")]
        except ValueError:
            raise FormatError(lineno, f"bad successor list {succ_field!r}") from None
        entries[vid] = (int(m.group(2)), int(m.group(3)), succs, m.group(5))

    if not entries:
        raise FormatError(1, "no vertices in input")
    n = max(entries) + 1
    for vid in range(n):
        if vid not in entries:
            raise FormatError(1, f"vertex ids are not contiguous: {vid} is missing")
    priority = [entries[v][0] for v in range(n)]
    owner = [entries[v][1] for v in range(n)]
    successors = [entries[v][2] for v in range(n)]
    names = [entries[v][3] for v in range(n)]
    for v in range(n):
        for w in successors[v]:
            if not (0 <= w < n):
                raise FormatError(1, f"dangling successor id {w} at vertex {v}")
    if all(nm is None for nm in names):
        names = None
    game = Game(priority, owner, successors, names)
    if convention == "max":
        game = convert_priorities(game, "max_to_min")
    return game


def write_pgsolver(game: Game) -> str:
    """Serialise a game, deterministically: ascending vertex order and
    sorted successor lists, priorities written verbatim (min-parity)."""
    out = [f"parity {game.vertex_count - 1};"]
    for v in game.vertices():
        succs = ",".join(str(w) for w in game.successors[v])
        name = ""
        if game.names is not None and game.names[v]:
            name = f' "{game.names[v]}"'
        out.append(f"{v} {game.priority[v]} {game.owner[v]} {succs}{name};")
    return "\n".join(out)


def write_solution(game: Game, winner, strategy_even: Strategy, strategy_odd: Strategy) -> str:
    """Serialise winners and winning moves; the move column is present
    exactly at vertices owned by their winner."""
    moves = {EVEN: strategy_even.moves, ODD: strategy_odd.moves}
    out = [f"solution {game.vertex_count - 1};"]
    for v in game.vertices():
        w = winner[v]
        if game.owner[v] == w:
            out.append(f"{v} {w} {moves[w][v]};")
        else:
            out.append(f"{v} {w};")
    return "\n".join(out)


_SOLUTION_RE = re.compile(r"^\s*(\d+)\s+([01])(?:\s+(\d+))?\s*;\s*$")
_SOLUTION_HEADER_RE = re.compile(r"^\s*solution\s+(\d+)\s*;\s*$")


def parse_solution(text: str) -> tuple[list[int], dict[int, int]]:
    """Parse solution text; returns the winner per vertex and the move map
    (over all vertices that carry one)."""
    winners: dict[int, int] = {}
    moves: dict[int, int] = {}
    lines = text.split("\n")
    start = 0
    if lines and _SOLUTION_HEADER_RE.match(lines[0]):
        start = 1
    for lineno, raw in enumerate(lines[start:], start=start + 1):
        if not raw.strip():
            continue
        m = _SOLUTION_RE.match(raw)
        if m is None:
            raise FormatError(lineno, f"cannot parse solution line {raw.strip()!r}")
        vid = int(m.group(1))
        if vid in winners:
            raise FormatError(lineno, f"duplicate vertex id {vid}")
        winners[vid] = int(m.group(2))
        if m.group(3) is not None:
            moves[vid] = int(m.group(3))
    if not winners:
        raise FormatError(1, "no vertices in solution")
    n = max(winners) + 1
    for vid in range(n):
        if vid not in winners:
            raise FormatError(1, f"vertex ids are not contiguous: {vid} is missing")
    return [winners[v] for v in range(n)], moves
