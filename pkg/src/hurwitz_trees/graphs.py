"""The elementary Hurwitz graph, the extended Hurwitz graph and the geometric tree graph.

All three are materialized as dense integer ids with sorted neighbour lists.
Eccentricities come from breadth-first sweeps over every source.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Hashable, Sequence

import numpy as np
from scipy.sparse import csr_matrix

from .factorization import CapExceeded, Word, enumerate_fn
from .geomtree import GeometricTree, edges_cross, enumerate_noncrossing_trees, gamma
from .moves import extended_left, extended_right, find_move, left_move, right_move
from .perm import Transposition

KINDS = ("hurwitz", "extended", "treegraph")
DEFAULT_METRICS_CAP = 7

# sources advanced together in one eccentricity sweep
_SWEEP_BATCH = 512


@dataclass(frozen=True, eq=False)
class GraphHandle:
    kind: str
    n: int
    vertices: tuple[Hashable, ...]
    index: dict
    adjacency: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def id_of(self, v: Hashable) -> int:
        try:
            return self.index[v]
        except KeyError:
            raise KeyError(f"{v} is not a vertex of the {self.kind} graph for n={self.n}") from None

    def edge_count(self) -> int:
        return sum(map(len, self.adjacency)) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a, nbrs in enumerate(self.adjacency) for b in nbrs if a < b]


@dataclass(frozen=True)
class MetricsReport:
    radius: int
    diameter: int
    center: tuple[int, ...]
    eccentricities: tuple[int, ...]

    def to_json(self, kind: str, n: int) -> dict:
        hist = Counter(self.eccentricities)
        return {
            "kind": kind,
            "n": n,
            "radius": self.radius,
            "diameter": self.diameter,
            "center_size": len(self.center),
            "ecc_histogram": {str(k): hist[k] for k in sorted(hist)},
        }


def word_neighbors(w: Word, extended: bool) -> set[Word]:
    m = len(w)
    out = set()
    for i in range(1, m):
        out.add(right_move(w, i))
        out.add(left_move(w, i))
    if extended:
        for i, j in combinations(range(1, m + 1), 2):
            out.add(extended_right(w, i, j))
            out.add(extended_left(w, i, j))
    out.discard(w)
    return out


def tree_neighbors(tree: GeometricTree) -> set[frozenset[Transposition]]:
    """Edge sets of all trees ``tree - e + f`` that stay non-crossing."""
    out = set()
    for e in tree.edges:
        rest = tree.edges - {e}
        # label the side of e.a after deleting e
        side = {e.a}
        queue = deque([e.a])
        while queue:
            x = queue.popleft()
            for y in tree.adjacency[x]:
                if y not in side and Transposition.of(x, y) != e:
                    side.add(y)
                    queue.append(y)
        for a, b in combinations(tree.vertices, 2):
            f = Transposition(a, b)
            if f == e or (a in side) == (b in side):
                continue
            if not any(edges_cross(f, g) for g in rest):
                out.add(rest | {f})
    return out


def build_graph(kind: str, n: int, cap: int = DEFAULT_METRICS_CAP) -> GraphHandle:
    if kind not in KINDS:
        raise ValueError(f"unknown graph kind {kind!r}; expected one of {', '.join(KINDS)}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the metrics cap {cap}")
    return _build(kind, n)


@lru_cache(maxsize=None)
def _build(kind: str, n: int) -> GraphHandle:
    if kind == "treegraph":
        trees = list(enumerate_noncrossing_trees(n, cap=n))
        tree_index = _tree_index(trees)
        adj = tuple(tuple(sorted(tree_index[s] for s in tree_neighbors(t))) for t in trees)
        return GraphHandle(kind, n, tuple(trees), tree_index, adj)
    words = list(enumerate_fn(n, cap=n))
    index = {w: i for i, w in enumerate(words)}
    extended = kind == "extended"
    adj = tuple(tuple(sorted(index[v] for v in word_neighbors(w, extended))) for w in words)
    return GraphHandle(kind, n, tuple(words), index, adj)


class _TreeIndex(dict):
    """Looks trees up by edge set so a GeometricGraph image finds its tree."""

    def __getitem__(self, key):
        if hasattr(key, "edges"):
            key = key.edges
        return super().__getitem__(frozenset(key))

    def __contains__(self, key) -> bool:
        if hasattr(key, "edges"):
            key = key.edges
        return super().__contains__(frozenset(key))


def _tree_index(trees: Sequence[GeometricTree]) -> dict:
    return _TreeIndex((t.edges, i) for i, t in enumerate(trees))


def bfs_distances(g: GraphHandle, source: int) -> list[int]:
    dist = [-1] * len(g)
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def bfs_path(g: GraphHandle, u: int, v: int) -> list[int]:
    """A shortest path from u to v as a list of ids (ties broken by smallest id)."""
    parent = {u: u}
    queue = deque([u])
    while queue and v not in parent:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if y not in parent:
                parent[y] = x
                queue.append(y)
    if v not in parent:
        raise ValueError(f"vertices {u} and {v} are disconnected")
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    return path[::-1]


def bfs_distance(g: GraphHandle, u: Hashable, v: Hashable) -> int:
    return len(bfs_path(g, g.id_of(u), g.id_of(v))) - 1


def _csr(g: GraphHandle) -> csr_matrix:
    rows = np.repeat(np.arange(len(g)), [len(a) for a in g.adjacency])
    cols = np.fromiter((y for a in g.adjacency for y in a), dtype=np.int64, count=len(rows))
    return csr_matrix((np.ones(len(rows), dtype=np.float32), (rows, cols)), shape=(len(g), len(g)))


@lru_cache(maxsize=None)
def eccentricities(g: GraphHandle) -> tuple[int, ...]:
    """Eccentricity of every vertex.

    Runs a batch of breadth-first searches at once: column s of ``front`` is
    the current frontier of source s, advanced by one sparse product per level.
    """
    adj = _csr(g)
    size = len(g)
    out = np.zeros(size, dtype=np.int64)
    for start in range(0, size, _SWEEP_BATCH):
        idx = np.arange(start, min(start + _SWEEP_BATCH, size))
        cols = np.arange(len(idx))
        seen = np.zeros((size, len(idx)), dtype=bool)
        seen[idx, cols] = True
        front = seen.copy()
        level = 0
        while True:
            nxt = (adj @ front.astype(np.float32)) > 0
            nxt &= ~seen
            reached = nxt.any(axis=0)
            if not reached.any():
                break
            level += 1
            out[idx[reached]] = level
            seen |= nxt
            front = nxt
        if not seen.all():
            raise ValueError(f"the {g.kind} graph for n={g.n} is disconnected")
    return tuple(int(x) for x in out)


def metrics(g: GraphHandle) -> MetricsReport:
    ecc = eccentricities(g)
    radius, diameter = min(ecc), max(ecc)
    center = tuple(i for i, e in enumerate(ecc) if e == radius)
    return MetricsReport(radius, diameter, center, ecc)


def is_central(g: GraphHandle, v: Hashable) -> bool:
    ecc = eccentricities(g)
    return ecc[g.id_of(v)] == min(ecc)


def project_path_to_treegraph(path: Sequence[Word]) -> list[GeometricTree]:
    """Image of an extended-graph walk in the tree graph, repeated trees collapsed."""
    for a, b in zip(path, path[1:]):
        if a != b and find_move(a, b, extended=True) is None:
            raise ValueError(f"{a} and {b} are not adjacent in the extended Hurwitz graph")
    out: list[GeometricTree] = []
    for w in path:
        t = gamma(w).as_tree()
        if not out or out[-1].edges != t.edges:
            out.append(t)
    return out


def hurwitz_radius_formula(n: int) -> int:
    return math.comb(n - 1, 2)
