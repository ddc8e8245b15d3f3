"""Geometric graphs on labelled points in convex position.

Labels sit clockwise on a circle. Everything here is combinatorial: a crossing
is an interleaving of endpoints in the cyclic order, never a coordinate test.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

from .factorization import DEFAULT_ENUM_CAP, Word, check_cap
from .perm import Transposition


def cyclic_rank(k: int, a: int, n: int) -> int:
    """Position of ``a`` in the rotation ``k, k+1, ..., n, 1, ..., k-1``."""
    return (a - k) % n


def cyclic_less(k: int, a: int, b: int, n: int) -> bool:
    """True iff ``a <_k b``."""
    return cyclic_rank(k, a, n) < cyclic_rank(k, b, n)


def edges_cross(e: Transposition, f: Transposition) -> bool:
    """Disjoint chords whose endpoints interleave around the circle."""
    if e.a in f or e.b in f:
        return False
    return (e.a < f.a < e.b) != (e.a < f.b < e.b)


@dataclass(frozen=True)
class GeometricGraph:
    vertices: tuple[int, ...]
    edges: frozenset[Transposition]
    n: int

    def __post_init__(self) -> None:
        vs = set(self.vertices)
        for e in self.edges:
            if e.a not in vs or e.b not in vs:
                raise ValueError(f"edge {e} leaves the vertex set {self.vertices}")

    @classmethod
    def spanning(cls, edges: Iterable[Transposition], n: int) -> "GeometricGraph":
        return cls(tuple(range(1, n + 1)), frozenset(edges), n)

    @cached_property
    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for e in sorted(self.edges):
            adj[e.a].append(e.b)
            adj[e.b].append(e.a)
        return adj

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def leaves(self) -> list[int]:
        return [v for v in self.vertices if self.degree(v) == 1]

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        queue = deque(seen)
        while queue:
            for y in self.adjacency[queue.popleft()]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return len(seen) == len(self.vertices)

    def is_noncrossing(self) -> bool:
        return not any(edges_cross(e, f) for e, f in combinations(self.edges, 2))

    def is_noncrossing_tree(self) -> bool:
        return (
            len(self.edges) == len(self.vertices) - 1
            and self.is_connected()
            and self.is_noncrossing()
        )

    def successor(self, v: int) -> int:
        """Next vertex clockwise within the vertex set."""
        vs = self.vertices
        return vs[(vs.index(v) + 1) % len(vs)]

    def predecessor(self, v: int) -> int:
        vs = self.vertices
        return vs[(vs.index(v) - 1) % len(vs)]

    def is_boundary_edge(self, e: Transposition) -> bool:
        return self.successor(e.a) == e.b or self.successor(e.b) == e.a

    @property
    def key(self) -> tuple[Transposition, ...]:
        return tuple(sorted(self.edges))

    def as_tree(self) -> "GeometricTree":
        return GeometricTree(self.vertices, self.edges, self.n)

    def __str__(self) -> str:
        return ",".join(map(str, self.key))


@dataclass(frozen=True)
class GeometricTree(GeometricGraph):
    """A non-crossing spanning tree of its vertex set."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not self.is_noncrossing_tree():
            raise ValueError(f"edges {sorted(self.edges)} do not form a non-crossing tree")

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "GeometricTree":
        w = Word.parse(text)
        m = max((t.b for t in w.letters), default=1) if n is None else n
        return cls(tuple(range(1, m + 1)), frozenset(w.letters), m)

    def remove_leaf(self, leaf: int) -> "GeometricTree":
        (nbr,) = self.adjacency[leaf]
        return GeometricTree(
            tuple(v for v in self.vertices if v != leaf),
            self.edges - {Transposition.of(leaf, nbr)},
            self.n,
        )

    def vertex_path(self, u: int, v: int) -> list[int]:
        parent = {u: u}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            if x == v:
                break
            for y in self.adjacency[x]:
                if y not in parent:
                    parent[y] = x
                    queue.append(y)
        path = [v]
        while path[-1] != u:
            path.append(parent[path[-1]])
        path.reverse()
        return path

    def edge_path(self, e: Transposition, f: Transposition) -> list[Transposition]:
        """The unique sequence e = e_1, ..., e_m = f of consecutively adjacent edges."""
        if e == f:
            return [e]
        verts = self.vertex_path(e.a, f.a)
        seq = [Transposition.of(x, y) for x, y in zip(verts, verts[1:])]
        if not seq or seq[0] != e:
            seq.insert(0, e)
        if seq[-1] != f:
            seq.append(f)
        return seq


def gamma(w: Word) -> GeometricGraph:
    """Forget letter order; each letter becomes a chord on [n]."""
    return GeometricGraph.spanning(w.letters, w.n)


def has_cyclically_decreasing_neighbors(w: Word) -> bool:
    """Whenever t_i = (a c) precedes t_j = (a b), require b <_a c."""
    n = w.n
    for i, s in enumerate(w.letters):
        for t in w.letters[i + 1:]:
            for a in (s.a, s.b):
                if t.moves(a):
                    c, b = s.other(a), t.other(a)
                    if not cyclic_less(a, b, c, n):
                        return False
    return True


def covers(tree: GeometricGraph, e: Transposition, f: Transposition) -> bool:
    """``e`` precedes ``f`` at a shared vertex: (i j) before (i k) iff k <_i j."""
    if e == f:
        return False
    for i in (e.a, e.b):
        if f.moves(i):
            return cyclic_less(i, f.other(i), e.other(i), tree.n)
    return False


@dataclass(frozen=True)
class EdgeOrder:
    """The tree order on the edges of a geometric tree.

    ``covers`` holds the generating pairs between adjacent edges; ``less`` is
    their transitive closure, evaluated by walking the unique tree path.
    """

    tree: GeometricTree
    covers: frozenset[tuple[Transposition, Transposition]] = field(repr=False)

    def less(self, e: Transposition, f: Transposition) -> bool:
        if e == f:
            return False
        path = self.tree.edge_path(e, f)
        return all((x, y) in self.covers for x, y in zip(path, path[1:]))

    def comparable(self, e: Transposition, f: Transposition) -> bool:
        return self.less(e, f) or self.less(f, e)

    def successors(self, e: Transposition) -> list[Transposition]:
        return sorted(f for x, f in self.covers if x == e)


def tree_order(tree: GeometricTree) -> EdgeOrder:
    pairs = set()
    for v in tree.vertices:
        star = [Transposition.of(v, u) for u in tree.adjacency[v]]
        for e in star:
            for f in star:
                if covers(tree, e, f):
                    pairs.add((e, f))
    return EdgeOrder(tree, frozenset(pairs))


def is_linear(tree: GeometricTree) -> bool:
    order = tree_order(tree)
    return all(order.comparable(e, f) for e, f in combinations(sorted(tree.edges), 2))


@dataclass(frozen=True)
class CaterpillarWitness:
    is_boundary_caterpillar: bool
    spine_vertices: tuple[int, ...]
    spine_edges: tuple[Transposition, ...]
    legs: tuple[Transposition, ...]


def caterpillar_witness(tree: GeometricTree) -> CaterpillarWitness:
    """Strip the leaves; the tree is a boundary caterpillar iff what remains is a
    single vertex or a path of consecutive boundary edges."""
    vs = tree.vertices
    if len(vs) <= 2:
        # a lone vertex, or a lone edge whose spine is its smaller endpoint
        return CaterpillarWitness(True, vs[:1], (), tuple(sorted(tree.edges)))
    spine_v = tuple(v for v in vs if tree.degree(v) > 1)
    spine_set = set(spine_v)
    spine_e = tuple(sorted(e for e in tree.edges if e.a in spine_set and e.b in spine_set))
    legs = tuple(sorted(tree.edges - set(spine_e)))
    spine_deg = {v: 0 for v in spine_v}
    for e in spine_e:
        spine_deg[e.a] += 1
        spine_deg[e.b] += 1
    is_path = all(d <= 2 for d in spine_deg.values())
    ok = is_path and all(tree.is_boundary_edge(e) for e in spine_e)
    return CaterpillarWitness(ok, spine_v, spine_e, legs)


def linear_extensions(tree: GeometricTree) -> list[Word]:
    """All words whose letter order extends the tree order, in lexicographic order."""
    order = tree_order(tree)
    edges = sorted(tree.edges)
    indeg = {e: 0 for e in edges}
    succ = {e: order.successors(e) for e in edges}
    for e in edges:
        for f in succ[e]:
            indeg[f] += 1
    out: list[Word] = []
    prefix: list[Transposition] = []

    def rec() -> None:
        if len(prefix) == len(edges):
            out.append(Word(tuple(prefix), tree.n))
            return
        for e in edges:
            if indeg[e] == 0:
                indeg[e] = -1
                for f in succ[e]:
                    indeg[f] -= 1
                prefix.append(e)
                rec()
                prefix.pop()
                for f in succ[e]:
                    indeg[f] += 1
                indeg[e] = 0

    rec()
    return out


def enumerate_noncrossing_trees(n: int, cap: int = DEFAULT_ENUM_CAP) -> Iterator[GeometricTree]:
    """Every non-crossing spanning tree on [n], ordered by sorted edge list.

    Include/exclude over chords in lexicographic order, pruning crossings,
    cycles, and vertices left isolated once all their chords are decided.
    """
    check_cap(n, cap)
    chords = [Transposition(a, b) for a, b in combinations(range(1, n + 1), 2)]
    # vertex v has no undecided chords once index last_use[v] is passed
    last_use = {v: max(i for i, c in enumerate(chords) if c.moves(v)) for v in range(1, n + 1)} if n > 1 else {}
    need = n - 1
    chosen: list[Transposition] = []
    comp = list(range(n + 1))
    deg = [0] * (n + 1)
    done_at: dict[int, list[int]] = {}
    for v, i in last_use.items():
        done_at.setdefault(i, []).append(v)

    def rec(idx: int) -> Iterator[GeometricTree]:
        if len(chosen) == need:
            yield GeometricTree(tuple(range(1, n + 1)), frozenset(chosen), n)
            return
        if len(chords) - idx < need - len(chosen):
            return
        c = chords[idx]
        closing = done_at.get(idx, [])
        if comp[c.a] != comp[c.b] and not any(edges_cross(c, d) for d in chosen):
            saved = comp[:]
            old, new = comp[c.b], comp[c.a]
            for v in range(1, n + 1):
                if comp[v] == old:
                    comp[v] = new
            chosen.append(c)
            deg[c.a] += 1
            deg[c.b] += 1
            if all(deg[v] for v in closing):
                yield from rec(idx + 1)
            deg[c.a] -= 1
            deg[c.b] -= 1
            chosen.pop()
            comp[:] = saved
        if all(deg[v] for v in closing):
            yield from rec(idx + 1)

    if n == 1:
        yield GeometricTree((1,), frozenset(), 1)
        return
    yield from rec(0)


def find_boundary_leaf(tree: GeometricTree) -> tuple[int, Transposition]:
    """Smallest leaf whose only edge joins it to a cyclic neighbour."""
    if len(tree.vertices) < 2:
        raise ValueError("a tree with one vertex has no leaves")
    for leaf in tree.leaves():
        (nbr,) = tree.adjacency[leaf]
        if nbr in (tree.successor(leaf), tree.predecessor(leaf)):
            return leaf, Transposition.of(leaf, nbr)
    raise AssertionError(f"no boundary leaf in {tree}; the tree cannot be non-crossing")
