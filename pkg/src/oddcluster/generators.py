"""Deterministic graph families: same (family, params, seed) gives the same graph."""

from __future__ import annotations

import random

from .graph import Graph, GraphError, connected_components, norm_edge


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def grid(rows: int, cols: int) -> Graph:
    if rows < 1 or cols < 1:
        raise GraphError("grid needs rows, cols >= 1")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def gnp(n: int, p: float, seed: int = 0) -> Graph:
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph(n, edges)


def random_bipartite(n: int, p: float, seed: int = 0) -> Graph:
    """Fixed halves 0..ceil(n/2)-1 and the rest; each cross pair kept with probability p."""
    rng = random.Random(seed)
    cut = (n + 1) // 2
    edges = [(i, j) for i in range(cut) for j in range(cut, n) if rng.random() < p]
    return Graph(n, edges)


def chain_components(g: Graph) -> Graph:
    """Make g connected by linking the minimum vertices of consecutive components."""
    comps = connected_components(g)
    extra = [(min(a), min(b)) for a, b in zip(comps, comps[1:])]
    return Graph(g.n, g.edges() + extra)


def connected_gnp(n: int, p: float, seed: int = 0) -> Graph:
    return chain_components(gnp(n, p, seed))


def connected_bipartite(n: int, p: float, seed: int = 0) -> Graph:
    """Random tree plus parity-respecting chords, so connected and bipartite."""
    if n < 1:
        raise GraphError("need n >= 1")
    rng = random.Random(seed)
    depth = [0] * n
    edges = []
    for v in range(1, n):
        u = rng.randrange(v)
        depth[v] = depth[u] + 1
        edges.append((u, v))
    present = {norm_edge(u, v) for u, v in edges}
    for i in range(n):
        for j in range(i + 1, n):
            if depth[i] % 2 != depth[j] % 2 and (i, j) not in present and rng.random() < p:
                edges.append((i, j))
    return Graph(n, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)
