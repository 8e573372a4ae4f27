"""Vertex connectivity and randomized generic rigidity of graphs.

Connectivity is exact: internally-disjoint path counts via unit-capacity
max-flow on a vertex-split digraph, minimised over non-adjacent pairs
(complete graphs are n-1 connected by convention).

Rigidity in dimension d is decided by the rank of the bar-joint rigidity
matrix at random integer placements.  A placement certifying the maximal
rank proves generic rigidity outright; sub-maximal modular rank is
re-checked exactly over the rationals before a trial counts as evidence
of flexibility, so only "flexible" verdicts carry (vanishing) error
probability.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .complexes import Complex
from .linalg import FieldSpec, QQ, is_prime, rank

__all__ = ["Graph", "graph_of", "vertex_connectivity", "is_generically_d_rigid",
           "rigidity_matrix"]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for a, b in self.edges:
            if a == b:
                raise ValueError("loops are not allowed")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise ValueError("edge endpoint out of range")
            if a > b:
                raise ValueError("edges must be sorted pairs")


def graph_of(c: Complex) -> Graph:
    """The 1-skeleton of a complex as an abstract graph."""
    return Graph(c.n_vertices, frozenset(c.faces(1)))


def _max_internally_disjoint(adj: list[set[int]], n: int, s: int, t: int) -> int:
    """Menger count via unit-capacity max-flow with node splitting."""
    # node 2v = v_in, 2v+1 = v_out; v_in -> v_out capacity 1, edges capacity n
    cap: dict[tuple[int, int], int] = {}
    nbr: list[set[int]] = [set() for _ in range(2 * n)]

    def add(u, v, c):
        cap[(u, v)] = cap.get((u, v), 0) + c
        cap.setdefault((v, u), 0)
        nbr[u].add(v)
        nbr[v].add(u)

    for v in range(n):
        add(2 * v, 2 * v + 1, 1)
    for u in range(n):
        for w in adj[u]:
            if u < w:
                add(2 * u + 1, 2 * w, n)
                add(2 * w + 1, 2 * u, n)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        prev = {source: source}
        queue = [source]
        while queue and sink not in prev:
            u = queue.pop(0)
            for v in sorted(nbr[u]):
                if v not in prev and cap.get((u, v), 0) > 0:
                    prev[v] = u
                    queue.append(v)
        if sink not in prev:
            return flow
        v = sink
        while v != source:
            u = prev[v]
            cap[(u, v)] -= 1
            cap[(v, u)] += 1
            v = u
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """Exact vertex connectivity; n-1 for complete graphs."""
    if g.n < 2:
        raise ValueError("connectivity needs at least two nodes")
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for a, b in g.edges:
        adj[a].add(b)
        adj[b].add(a)
    nonadjacent = [(s, t) for s in range(g.n) for t in range(s + 1, g.n)
                   if t not in adj[s]]
    if not nonadjacent:
        return g.n - 1
    best = g.n
    for s, t in nonadjacent:
        best = min(best, _max_internally_disjoint(adj, g.n, s, t))
        if best == 0:
            return 0
    return best


def rigidity_matrix(placement: list[tuple[int, ...]], edges, d: int):
    """One row per edge {u,v}: block p(u)-p(v) at u, p(v)-p(u) at v."""
    n = len(placement)
    rows = []
    for u, v in sorted(edges):
        row = [0] * (d * n)
        for k in range(d):
            diff = placement[u][k] - placement[v][k]
            row[d * u + k] = diff
            row[d * v + k] = -diff
        rows.append(row)
    return rows


def _random_prime(rng: random.Random) -> int:
    while True:
        cand = rng.randrange(2**30, 2**31) | 1
        if is_prime(cand):
            return cand


def is_generically_d_rigid(g: Graph, d: int, trials: int = 3, seed: int = 0) -> bool:
    """Randomized generic d-rigidity test.

    Rigid iff some trial placement achieves rank d*n - C(d+1,2)
    (or C(n,2) for very small n, where rigid means complete).
    """
    if d < 1:
        raise ValueError("dimension must be positive")
    n = g.n
    if n <= 1:
        return True
    target = min(d * n - d * (d + 1) // 2, n * (n - 1) // 2)
    if target <= 0:
        return True
    if len(g.edges) < target:
        return False
    rng = random.Random(seed)
    for _ in range(max(1, trials)):
        placement = [tuple(rng.randrange(-2**31, 2**31) for _ in range(d))
                     for _ in range(n)]
        rows = rigidity_matrix(placement, g.edges, d)
        p = _random_prime(rng)
        if rank(rows, FieldSpec(p)) == target:
            return True
        if rank(rows, QQ) == target:
            return True
    return False
