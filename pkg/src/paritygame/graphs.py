"""Small graph helpers shared by the refinement engine, the solvers and the
strategy verifier: iterative strongly-connected components and the set of
vertices admitting an infinite path."""

from __future__ import annotations

from typing import Callable, Iterable, Sequence


def strongly_connected_components(
    nodes: Iterable[int], succ: Callable[[int], Sequence[int]]
) -> list[list[int]]:
    """Tarjan's algorithm, iterative.

    ``succ(v)`` may mention vertices outside ``nodes``; those are ignored.
    Components are emitted in reverse topological order (every component
    precedes the components that can reach it).
    """
    nodes = list(nodes)
    node_set = set(nodes)
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    sccs: list[list[int]] = []
    counter = 0

    for root in nodes:
        if root in index:
            continue
        # (vertex, iterator position) call stack
        work = [(root, 0)]
        while work:
            v, pos = work.pop()
            if pos == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            recurse = False
            succs = succ(v)
            for i in range(pos, len(succs)):
                w = succs[i]
                if w not in node_set:
                    continue
                if w not in index:
                    work.append((v, i + 1))
                    work.append((w, 0))
                    recurse = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                sccs.append(comp)
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return sccs


def vertices_with_infinite_path(
    nodes: Iterable[int], succ: Callable[[int], Sequence[int]]
) -> set[int]:
    """Vertices from which an infinite path exists inside the subgraph
    spanned by ``nodes``.

    Computed by repeatedly peeling vertices without remaining successors;
    whatever survives can reach a cycle.
    """
    nodes = list(nodes)
    node_set = set(nodes)
    out_deg = {}
    preds: dict[int, list[int]] = {v: [] for v in nodes}
    for v in nodes:
        k = 0
        for w in succ(v):
            if w in node_set:
                k += 1
                preds[w].append(v)
        out_deg[v] = k
    queue = [v for v in nodes if out_deg[v] == 0]
    dead = set(queue)
    while queue:
        v = queue.pop()
        for p in preds[v]:
            if p in dead:
                continue
            out_deg[p] -= 1
            if out_deg[p] == 0:
                dead.add(p)
                queue.append(p)
    return node_set - dead
