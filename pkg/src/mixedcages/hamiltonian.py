"""Backtracking search for Hamiltonian cycles in the undirected part of a graph."""

from __future__ import annotations

from .core import MixedGraph


class NoHamiltonianCycle(RuntimeError):
    """No cycle found; ``exhausted`` tells whether the search space was closed."""

    def __init__(self, msg: str, exhausted: bool):
        super().__init__(msg)
        self.exhausted = exhausted


def find_hamiltonian_cycle(G: MixedGraph, budget: int = 10**7, start: int = 0) -> list[int]:
    """Return a Hamiltonian cycle of the edge graph as a vertex list.

    Extends a path from ``start``, preferring neighbours with fewest free
    neighbours. Prunes when an unvisited vertex has fewer than two usable
    neighbours or the unvisited vertices stop being connected to the path
    end. ``budget`` caps the number of path extensions.
    """
    n = G.n
    adj = [list(G.nbrs[v]) for v in range(n)]
    if n < 3 or any(len(a) < 2 for a in adj):
        raise NoHamiltonianCycle("minimum degree below 2", exhausted=True)
    visited = [False] * n
    free = [len(adj[v]) for v in range(n)]  # unvisited neighbours
    path = [start]
    visited[start] = True
    for u in adj[start]:
        free[u] -= 1
    steps = 0

    def dead_end(end: int) -> bool:
        # every unvisited vertex needs two usable neighbours; the start
        # and the current end each count as usable
        for v in range(n):
            if visited[v]:
                continue
            usable = free[v] + (start in G.nbrs[v]) + (end in G.nbrs[v] and end != start)
            if usable < 2:
                return True
        # connectivity of unvisited vertices together with the end
        remaining = n - len(path)
        seen = {end}
        stack = [end]
        count = 0
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not visited[y] and y not in seen:
                    seen.add(y)
                    count += 1
                    stack.append(y)
        return count < remaining

    def extend() -> bool:
        nonlocal steps
        end = path[-1]
        if len(path) == n:
            return start in G.nbrs[end]
        steps += 1
        if steps > budget:
            raise NoHamiltonianCycle(f"budget of {budget} steps exhausted", exhausted=False)
        cands = sorted((free[y], y) for y in adj[end] if not visited[y])
        for _, y in cands:
            visited[y] = True
            path.append(y)
            for u in adj[y]:
                free[u] -= 1
            if not dead_end(y) and extend():
                return True
            for u in adj[y]:
                free[u] += 1
            path.pop()
            visited[y] = False
        return False

    if extend():
        return path
    raise NoHamiltonianCycle("graph is not Hamiltonian", exhausted=True)
