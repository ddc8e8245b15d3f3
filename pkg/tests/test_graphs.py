import math

import pytest

from hurwitz_trees.factorization import CapExceeded, Word, enumerate_fn
from hurwitz_trees.geomtree import caterpillar_witness, enumerate_noncrossing_trees, gamma
from hurwitz_trees.graphs import (
    KINDS,
    bfs_distance,
    bfs_distances,
    bfs_path,
    build_graph,
    eccentricities,
    is_central,
    metrics,
    project_path_to_treegraph,
)
from hurwitz_trees.moves import build_central_word, extended_left, extended_right
from hurwitz_trees.verify import star_word

from oracles import bfs


def w(text):
    return Word.parse(text)


@pytest.mark.parametrize("kind", KINDS)
def test_n3_graphs_are_triangles(kind):
    g = build_graph(kind, 3)
    assert len(g) == 3 and g.edge_count() == 3
    m = metrics(g)
    assert m.radius == m.diameter == 1
    assert all(is_central(g, v) for v in g.vertices)


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("n", [1, 2])
def test_degenerate_sizes(kind, n):
    g = build_graph(kind, n)
    assert len(g) == 1 and g.edge_count() == 0
    assert metrics(g).radius == 0


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_adjacency_is_simple_and_undirected(kind, n):
    g = build_graph(kind, n)
    for a, nbrs in enumerate(g.adjacency):
        assert a not in nbrs
        assert len(set(nbrs)) == len(nbrs)
        for b in nbrs:
            assert a in g.adjacency[b]
        if kind == "hurwitz":
            assert len(nbrs) <= 2 * (n - 2)
        if kind == "extended":
            assert len(nbrs) <= (n - 1) * (n - 2)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_vertex_counts(n):
    assert len(build_graph("hurwitz", n)) == n ** (n - 2)
    assert len(build_graph("extended", n)) == n ** (n - 2)
    assert len(build_graph("treegraph", n)) == len(list(enumerate_noncrossing_trees(n)))


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("n", [3, 4, 5])
def test_eccentricities_match_python_bfs(kind, n):
    g = build_graph(kind, n)
    adj = dict(enumerate(g.adjacency))
    expected = tuple(max(bfs(adj, s).values()) for s in range(len(g)))
    assert eccentricities(g) == expected
    assert all(len(bfs(adj, s)) == len(g) for s in range(len(g)))


def test_bfs_distance_examples():
    g = build_graph("hurwitz", 3)
    for u in g.vertices:
        assert bfs_distance(g, u, u) == 0
        for v in g.vertices:
            if u != v:
                assert bfs_distance(g, u, v) == 1
    with pytest.raises(KeyError):
        bfs_distance(g, w("2-3,1-2"), w("1-2,2-3"))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_distance_to_star_counts_missing_letters(n):
    g = build_graph("extended", n)
    s1 = star_word(1, n)
    for x in g.vertices:
        assert bfs_distance(g, x, s1) == len(set(x.letters) - set(s1.letters))


@pytest.mark.parametrize("n, radius", [(3, 1), (4, 3), (5, 6), (6, 10)])
def test_hurwitz_radius(n, radius):
    assert metrics(build_graph("hurwitz", n)).radius == radius == math.comb(n - 1, 2)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_extended_radius_and_stars(n):
    g = build_graph("extended", n)
    m = metrics(g)
    assert m.radius == n - 2
    for c in range(1, n + 1):
        assert is_central(g, star_word(c, n))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_caterpillar_words_are_central(n):
    g = build_graph("hurwitz", n)
    for x in g.vertices:
        if caterpillar_witness(gamma(x).as_tree()).is_boundary_caterpillar:
            assert is_central(g, x)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_built_words_are_central(n):
    g = build_graph("hurwitz", n)
    for tr in enumerate_noncrossing_trees(n):
        assert is_central(g, build_central_word(tr))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_metrics_report_invariants(n):
    for kind in KINDS:
        m = metrics(build_graph(kind, n))
        assert m.radius <= m.diameter <= 2 * m.radius
        assert all(m.eccentricities[i] == m.radius for i in m.center)
        assert len(m.center) == m.eccentricities.count(m.radius)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_extended_diameter_bounds(n):
    de = metrics(build_graph("extended", n)).diameter
    dg = metrics(build_graph("treegraph", n)).diameter
    assert math.ceil(3 * n / 2 - 5) <= de <= 2 * n - 4
    assert dg <= de


@pytest.mark.parametrize("n", [3, 4, 5])
def test_extended_edges_project_to_tree_graph_edges(n):
    g = build_graph("extended", n)
    tg = build_graph("treegraph", n)
    for a, b in g.edges():
        ta, tb = gamma(g.vertices[a]), gamma(g.vertices[b])
        assert ta.edges == tb.edges or tg.id_of(tb) in tg.adjacency[tg.id_of(ta)]


def test_project_path_examples():
    x = w("1-2,2-3,3-4")
    assert len(project_path_to_treegraph([x, x, x])) == 1
    step = [w("1-2,2-3"), w("1-3,1-2")]
    trees = project_path_to_treegraph(step)
    assert len(trees) == 2 and len(trees[0].edges ^ trees[1].edges) == 2
    with pytest.raises(ValueError):
        project_path_to_treegraph([w("1-2,2-3,3-4"), w("1-4,1-3,1-2")])


@pytest.mark.parametrize("n", [4, 5])
def test_projected_shortest_paths_are_long_enough(n):
    g = build_graph("extended", n)
    tg = build_graph("treegraph", n)
    for u in range(0, len(g), 7):
        dist = bfs_distances(g, u)
        for v in range(len(g)):
            path = [g.vertices[i] for i in bfs_path(g, u, v)]
            trees = project_path_to_treegraph(path)
            assert len(trees) <= len(path)
            for a, b in zip(trees, trees[1:]):
                assert tg.id_of(b) in tg.adjacency[tg.id_of(a)]
            d_trees = bfs_distance(tg, trees[0], trees[-1])
            assert len(trees) - 1 >= d_trees
            assert dist[v] >= d_trees


def test_single_extended_step_projects_to_at_most_one_swap():
    for x in enumerate_fn(3):
        for y in (extended_left(x, 1, 2), extended_right(x, 1, 2)):
            assert len(project_path_to_treegraph([x, y])) <= 2


def test_graph_caps_and_kinds():
    with pytest.raises(CapExceeded):
        build_graph("hurwitz", 8)
    with pytest.raises(ValueError):
        build_graph("nope", 3)


def test_hurwitz_graph_n7_connected():
    g = build_graph("hurwitz", 7)
    assert len(g) == 7**5
    assert min(bfs_distances(g, 0)) == 0 and -1 not in bfs_distances(g, 0)
