"""Partition refinement for parity games.

Two equivalences are computed by signature-based refinement from the
initial (priority, owner) partition:

* strong bisimilarity: vertices in a block must reach the same set of
  successor blocks in one step;
* divergence-sensitive stuttering equivalence: vertices in a block must
  agree on (a) whether an infinite path can stay inside the block and
  (b) which other blocks are reachable after a run of intra-block edges.

Both refinements are deterministic: blocks are numbered by their least
member and split groups are ordered before new ids are handed out.  A
relational greatest-fixpoint oracle for each equivalence is included for
cross-checking on small games.
"""

from __future__ import annotations

from dataclasses import dataclass

from .game import Game
from .graphs import strongly_connected_components, vertices_with_infinite_path


@dataclass
class Partition:
    """Disjoint blocks over the vertex set.

    ``blocks`` maps dense block ids to sorted vertex lists, the block
    representative being the least member.  ``divergent`` flags (per block)
    are meaningful for stuttering partitions: they record whether an
    infinite path can stay inside the block.  ``kind`` records which
    refinement produced the partition (``"initial"``, ``"strong"`` or
    ``"stuttering"``).
    """

    block_of: list[int]
    blocks: list[list[int]]
    divergent: list[bool]
    kind: str

    @property
    def block_count(self) -> int:
        return len(self.blocks)


def _initial_blocks(game: Game) -> tuple[list[int], dict[int, list[int]]]:
    groups: dict[tuple[int, int], list[int]] = {}
    for v in game.vertices():
        groups.setdefault((game.priority[v], game.owner[v]), []).append(v)
    ordered = sorted(groups.values(), key=lambda vs: vs[0])
    block_of = [0] * game.vertex_count
    blocks: dict[int, list[int]] = {}
    for b, vs in enumerate(ordered):
        blocks[b] = vs
        for v in vs:
            block_of[v] = b
    return block_of, blocks


def _finalize(game: Game, block_of: list[int], blocks: dict[int, list[int]], kind: str) -> Partition:
    ordered = sorted(blocks.values(), key=lambda vs: vs[0])
    final_of = [0] * game.vertex_count
    for b, vs in enumerate(ordered):
        for v in vs:
            final_of[v] = b
    part = Partition(block_of=final_of, blocks=[list(vs) for vs in ordered],
                     divergent=[False] * len(ordered), kind=kind)
    flags = compute_divergent(game, part)
    for b, vs in enumerate(ordered):
        flag = flags[vs[0]]
        if kind == "stuttering":
            assert all(flags[v] == flag for v in vs), "divergence not uniform in stable block"
        part.divergent[b] = flag
    return part


def initial_partition(game: Game) -> Partition:
    """Coarsest partition whose blocks agree on priority and owner."""
    block_of, blocks = _initial_blocks(game)
    return _finalize(game, block_of, blocks, kind="initial")


def compute_divergent(game: Game, partition: Partition) -> list[bool]:
    """Per-vertex divergence flags with respect to a partition: a vertex
    diverges iff it can reach, along intra-block edges, an intra-block
    cycle."""
    block_of = partition.block_of

    def intra(v: int) -> list[int]:
        b = block_of[v]
        return [w for w in game.successors[v] if block_of[w] == b]

    alive = vertices_with_infinite_path(game.vertices(), intra)
    return [v in alive for v in game.vertices()]


def refine_strong(game: Game) -> Partition:
    """Coarsest refinement of the initial partition in which all members of
    a block have identical sets of successor blocks (strong bisimilarity).

    Signatures are cached per vertex and recomputed only for vertices whose
    successors changed block.  Blocks stay signature-uniform between
    rounds, so a round splits off exactly the members whose signature
    changed, never rescanning the remainder; long split cascades (chains)
    therefore stay linear.
    """
    n = game.vertex_count
    block_of, initial = _initial_blocks(game)
    blocks: dict[int, set[int]] = {b: set(vs) for b, vs in initial.items()}
    next_id = len(blocks)
    sig: list[tuple[int, ...] | None] = [None] * n
    dirty = set(range(n))
    while dirty:
        changed: dict[int, list[int]] = {}
        for v in sorted(dirty):
            s = tuple(sorted({block_of[w] for w in game.successors[v]}))
            if s != sig[v]:
                sig[v] = s
                changed.setdefault(block_of[v], []).append(v)
        moved: list[int] = []
        for b in sorted(changed):
            members = blocks[b]
            touched = changed[b]
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in touched:
                groups.setdefault(sig[v], []).append(v)  # type: ignore[arg-type]
            parts = sorted(groups.values(), key=lambda g: (-len(g), g[0]))
            if len(touched) == len(members):
                if len(parts) == 1:
                    continue  # whole block re-signed uniformly
                blocks[b] = set(parts[0])
                parts = parts[1:]
            else:
                # untouched members share the stale-but-valid signature and
                # keep the block id; every changed group splits away
                members.difference_update(touched)
            for part in parts:
                blocks[next_id] = set(part)
                for v in part:
                    block_of[v] = next_id
                moved.extend(part)
                next_id += 1
        dirty = set()
        for u in moved:
            dirty.update(game.predecessors[u])
    final = {b: sorted(vs) for b, vs in blocks.items()}
    return _finalize(game, block_of, final, kind="strong")


def _stuttering_signatures(
    game: Game, block_of: list[int], members: list[int]
) -> dict[int, tuple[bool, frozenset[int]]]:
    """Signature (divergence bit, exit-block set) for each member of one
    block, with exits propagated backwards over intra-block edges."""
    member_set = set(members)
    intra = {v: [w for w in game.successors[v] if w in member_set] for v in members}

    divergent = vertices_with_infinite_path(members, intra.__getitem__)

    # Exit sets are constant on intra-block SCCs; Tarjan emits components
    # before the components that reach them, so one pass suffices.
    sccs = strongly_connected_components(members, intra.__getitem__)
    scc_of: dict[int, int] = {}
    for i, comp in enumerate(sccs):
        for v in comp:
            scc_of[v] = i
    scc_exits: list[frozenset[int]] = []
    for i, comp in enumerate(sccs):
        exits: set[int] = set()
        for v in comp:
            for w in game.successors[v]:
                if w not in member_set:
                    exits.add(block_of[w])
            for w in intra[v]:
                if scc_of[w] != i:
                    exits |= scc_exits[scc_of[w]]
        scc_exits.append(frozenset(exits))

    return {v: (v in divergent, scc_exits[scc_of[v]]) for v in members}


def refine_stuttering(game: Game) -> Partition:
    """Coarsest refinement of the initial partition that is stable for
    divergence-sensitive stuttering equivalence.

    Each round recomputes, for every block that may still split, the
    members' divergence flags and exit-block sets with respect to the
    current partition, then splits all blocks at once.  A block needs
    re-examination only when it was just split or when a successor of one
    of its members changed block.
    """
    block_of, blocks = _initial_blocks(game)
    next_id = len(blocks)
    pending = {b for b, vs in blocks.items() if len(vs) > 1}
    while pending:
        splits: list[tuple[int, list[list[int]]]] = []
        for b in sorted(pending):
            members = blocks[b]
            sigs = _stuttering_signatures(game, block_of, members)
            groups: dict[tuple[bool, frozenset[int]], list[int]] = {}
            for v in members:
                groups.setdefault(sigs[v], []).append(v)
            if len(groups) > 1:
                splits.append((b, sorted(groups.values(), key=lambda g: (-len(g), g[0]))))
        pending = set()
        moved: list[int] = []
        for b, parts in splits:
            blocks[b] = parts[0]
            pending.add(b)
            for part in parts[1:]:
                blocks[next_id] = part
                for v in part:
                    block_of[v] = next_id
                moved.extend(part)
                pending.add(next_id)
                next_id += 1
        for u in moved:
            for p in game.predecessors[u]:
                pending.add(block_of[p])
        pending = {b for b in pending if len(blocks[b]) > 1}
    return _finalize(game, block_of, blocks, kind="stuttering")


def quotient(game: Game, partition: Partition) -> tuple[Game, list[int]]:
    """Quotient game of a stable partition plus the vertex-to-block map.

    Block priorities and owners come from the representative (blocks are
    uniform by construction).  For strong partitions a block keeps a
    self-loop iff some member has an intra-block edge; for stuttering
    partitions intra-block edges collapse into a self-loop exactly on
    divergent blocks.
    """
    if partition.kind not in ("strong", "stuttering"):
        raise ValueError(f"cannot quotient a partition of kind {partition.kind!r}")
    block_of = partition.block_of
    priority = []
    owner = []
    successors = []
    for b, members in enumerate(partition.blocks):
        rep = members[0]
        priority.append(game.priority[rep])
        owner.append(game.owner[rep])
        targets = {block_of[w] for v in members for w in game.successors[v]}
        if partition.kind == "stuttering":
            targets.discard(b)
            if partition.divergent[b]:
                targets.add(b)
        assert targets, f"quotient block {b} has no successor (totality broken)"
        successors.append(sorted(targets))
    return Game(priority, owner, successors), list(block_of)


def write_partition(partition: Partition) -> str:
    """Debug dump: one line ``<vertex> <block> <divergent{0,1}>`` per vertex."""
    lines = []
    for v, b in enumerate(partition.block_of):
        lines.append(f"{v} {b} {1 if partition.divergent[b] else 0}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Relational greatest-fixpoint oracles (test equipment, small games only).


def _divergent_wrt(game: Game, rel: set[tuple[int, int]], v: int) -> bool:
    related = {u for u in game.vertices() if (v, u) in rel}

    def succ(x: int) -> list[int]:
        return [w for w in game.successors[x] if w in related]

    return v in vertices_with_infinite_path(related, succ)


def _inert_closure(game: Game, rel: set[tuple[int, int]], start: int) -> list[int]:
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in game.successors[x]:
            if (x, y) in rel and y not in seen:
                seen.add(y)
                stack.append(y)
    return sorted(seen)


def oracle_stuttering_pairs(game: Game) -> set[tuple[int, int]]:
    """Stuttering equivalence as a relation, by greatest-fixpoint deletion.

    Starts from all priority/owner-equal pairs and repeatedly removes pairs
    violating the transfer condition or the divergence agreement, with
    inert steps and divergence evaluated against the current relation.

    The transfer condition is monotone in the relation, so its violations
    are deleted down to a fixpoint first; only then are divergence flags
    compared.  Interleaving the two over-deletes: while transfer-doomed
    pairs are still present, they can lend one vertex of a pair a spurious
    divergence witness that its partner already lost, splitting pairs that
    the largest stuttering bisimulation keeps together.

    Quadratic in pairs per pass; intended for games with at most a dozen
    vertices.
    """
    n = game.vertex_count
    rel = {
        (v, w)
        for v in range(n)
        for w in range(n)
        if game.priority[v] == game.priority[w] and game.owner[v] == game.owner[w]
    }

    def transfer_ok(v: int, w: int) -> bool:
        closure = _inert_closure(game, rel, w)
        for u in game.successors[v]:
            if (v, u) in rel and (u, w) in rel:
                continue
            if not any(
                (v, w2) in rel and any((u, u2) in rel for u2 in game.successors[w2])
                for w2 in closure
            ):
                return False
        return True

    while True:
        while True:
            bad: set[tuple[int, int]] = set()
            for (v, w) in rel:
                if v == w or (w, v) in bad:
                    continue
                if not transfer_ok(v, w):
                    bad.add((v, w))
                    bad.add((w, v))
            if not bad:
                break
            rel -= bad
        div = [_divergent_wrt(game, rel, v) for v in range(n)]
        bad = {
            (v, w)
            for (v, w) in rel
            if v != w and div[v] != div[w]
        }
        if not bad:
            return rel
        rel -= {(w, v) for (v, w) in bad} | bad


def oracle_strong_pairs(game: Game) -> set[tuple[int, int]]:
    """Strong bisimilarity as a relation, by greatest-fixpoint deletion."""
    n = game.vertex_count
    rel = {
        (v, w)
        for v in range(n)
        for w in range(n)
        if game.priority[v] == game.priority[w] and game.owner[v] == game.owner[w]
    }
    while True:
        bad: set[tuple[int, int]] = set()
        for (v, w) in rel:
            if v == w or (w, v) in bad:
                continue
            ok = all(
                any((u, u2) in rel for u2 in game.successors[w])
                for u in game.successors[v]
            ) and all(
                any((u2, u) in rel for u2 in game.successors[v])
                for u in game.successors[w]
            )
            if not ok:
                bad.add((v, w))
                bad.add((w, v))
        if not bad:
            return rel
        rel -= bad


def partition_from_relation(game: Game, rel: set[tuple[int, int]]) -> list[list[int]]:
    """Blocks induced by an equivalence relation, sorted by representative."""
    seen: set[int] = set()
    blocks: list[list[int]] = []
    for v in game.vertices():
        if v in seen:
            continue
        cls = sorted(u for u in game.vertices() if (v, u) in rel)
        seen.update(cls)
        blocks.append(cls)
    return blocks
