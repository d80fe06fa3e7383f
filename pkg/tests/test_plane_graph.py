import json
import random

import pytest

from planarqueues.errors import EmbeddingError, InputError
from planarqueues.plane_graph import (
    PlaneGraph,
    bfs_layering,
    compute_faces,
    gen_maximal_outerplanar,
    gen_maximal_planar,
    gen_planar_3tree,
    named,
    parse_plane_graph,
    serialize_plane_graph,
    triangulate,
    validate,
)

TRIANGLE_JSON = json.dumps(
    {"n": 3, "rotations": [[1, 2], [2, 0], [0, 1]], "outer_face": [0, 1, 2]}
)


def brute_force_distances(g: PlaneGraph, root: int) -> list[int]:
    """Bellman-Ford style relaxation, independent of the BFS code path."""
    inf = 10**9
    dist = [inf] * g.n
    dist[root] = 0
    for _ in range(g.n):
        changed = False
        for u in range(g.n):
            for v in g.neighbors(u):
                if dist[u] + 1 < dist[v]:
                    dist[v] = dist[u] + 1
                    changed = True
        if not changed:
            break
    return dist


def test_parse_triangle():
    g = parse_plane_graph(TRIANGLE_JSON)
    assert g.n == 3
    faces = compute_faces(g)
    assert len(faces.faces) == 2
    assert all(len(f) == 3 for f in faces.faces)


def test_parse_syntax_error():
    with pytest.raises(InputError):
        parse_plane_graph("{not json")
    with pytest.raises(InputError):
        parse_plane_graph('{"n": 2}')


def test_parse_symmetry_violation():
    bad = json.dumps(
        {"n": 3, "rotations": [[1, 2], [0], [0, 1]], "outer_face": [0, 1, 2]}
    )
    with pytest.raises(EmbeddingError):
        parse_plane_graph(bad)


def test_validate_rejects_disconnected():
    g = PlaneGraph(((1,), (0,), (3,), (2,)), (0, 1))
    with pytest.raises(EmbeddingError):
        validate(g)


def test_validate_rejects_bad_outer_face():
    g = PlaneGraph(((1, 2), (2, 0), (0, 1)), (0, 2, 1, 1))
    with pytest.raises(EmbeddingError):
        validate(g)


def test_named_graphs_valid():
    for name, n, e, f in [("triangle", 3, 3, 2), ("k4", 4, 6, 4), ("octahedron", 6, 12, 8)]:
        g = named(name)
        validate(g)
        assert g.n == n
        assert g.edge_count() == e
        faces = compute_faces(g)
        assert len(faces.faces) == f
        assert all(len(w) == 3 for w in faces.faces)
    with pytest.raises(InputError):
        named("petersen")


def test_octahedron_structure():
    g = named("octahedron")
    assert all(g.degree(v) == 4 for v in range(6))
    # antipodal pairs are the non-edges
    non_edges = {(0, 3), (1, 4), (2, 5)}
    for u in range(6):
        for v in range(u + 1, 6):
            assert g.has_edge(u, v) == ((u, v) not in non_edges)


def test_serialize_round_trip():
    for name in ["triangle", "k4", "octahedron"]:
        g = named(name)
        assert parse_plane_graph(serialize_plane_graph(g)) == g
    g = gen_maximal_planar(40, 11)
    assert parse_plane_graph(serialize_plane_graph(g)) == g


def test_triangulate_square():
    # 4-cycle: one chord, two inner triangles
    g = PlaneGraph(((1, 3), (2, 0), (3, 1), (0, 2)), (0, 1, 2, 3))
    out, added = triangulate(g)
    assert len(added) == 2  # one inner chord + one outer chord
    validate(out)
    faces = compute_faces(out)
    assert all(len(w) == 3 for w in faces.faces)
    assert out.edge_count() == 3 * 4 - 6


def test_triangulate_identity_on_maximal():
    g = gen_maximal_planar(30, 5)
    out, added = triangulate(g)
    assert added == frozenset()
    assert out == g


def test_triangulate_hub_on_hexagon():
    # 6-cycle plus one hub joined to two opposite cycle vertices
    rot = [
        [1, 5, 6],  # 0: cycle nbrs 1,5 + hub
        [2, 0],
        [3, 1],
        [4, 2, 6],  # 3: + hub
        [5, 3],
        [0, 4],
        [3, 0],  # hub inside, sees 3 and 0
    ]
    g = PlaneGraph(tuple(tuple(r) for r in rot), (0, 1, 2, 3, 4, 5))
    validate(g)
    out, added = triangulate(g)
    validate(out)
    faces = compute_faces(out)
    assert all(len(w) == 3 for w in faces.faces)
    assert out.edge_count() == 3 * 7 - 6
    # original edges survive
    for u, v in g.edges():
        assert out.has_edge(u, v)


def test_triangulate_path():
    g = PlaneGraph(((1,), (0, 2), (1,)), (0, 1, 2, 1))
    out, added = triangulate(g)
    validate(out)
    assert out.edge_count() == 3
    assert added == frozenset({(0, 2)})


def test_triangulate_tree_and_random_subgraphs():
    rng = random.Random(99)
    for trial in range(20):
        n = rng.randrange(4, 30)
        g = gen_maximal_planar(n, trial)
        # delete a random set of non-bridging edges by rebuilding rotations
        keep_prob = 0.7
        adj = [set() for _ in range(n)]
        for u, v in g.edges():
            if rng.random() < keep_prob:
                adj[u].add(v)
                adj[v].add(u)
        rot = tuple(tuple(x for x in g.rotations[v] if x in adj[v]) for v in range(n))
        sub = PlaneGraph(rot, ())
        # pick any face of the subgraph as outer; skip disconnected samples
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in rot[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != n or any(len(r) == 0 for r in rot):
            continue
        from planarqueues.plane_graph import _trace_faces

        walk = _trace_faces(sub)[0]
        sub = PlaneGraph(rot, tuple(walk))
        validate(sub)
        out, _ = triangulate(sub)
        validate(out)
        assert all(len(w) == 3 for w in compute_faces(out).faces)


def test_bfs_path():
    g = PlaneGraph(((1,), (0, 2), (1,)), (0, 1, 2, 1))
    bl = bfs_layering(g, 0)
    assert bl.layer == (0, 1, 2)
    assert bl.parent == (None, 0, 1)


def test_bfs_octahedron_and_k4():
    g = named("octahedron")
    for root in range(6):
        bl = bfs_layering(g, root)
        sizes = {}
        for l in bl.layer:
            sizes[l] = sizes.get(l, 0) + 1
        assert sizes == {0: 1, 1: 4, 2: 1}
        assert bl.layer == tuple(brute_force_distances(g, root))
    k4 = named("k4")
    bl = bfs_layering(k4, 2)
    assert sorted(bl.layer) == [0, 1, 1, 1]


def test_bfs_matches_brute_force_on_corpus():
    for seed in range(10):
        g = gen_maximal_planar(50, seed)
        bl = bfs_layering(g, seed % g.n)
        assert list(bl.layer) == brute_force_distances(g, seed % g.n)
        for v in range(g.n):
            p = bl.parent[v]
            if v == bl.root:
                assert p is None
            else:
                assert p is not None and g.has_edge(v, p)
                assert bl.layer[p] == bl.layer[v] - 1
                assert p == min(
                    u for u in g.neighbors(v) if bl.layer[u] == bl.layer[v] - 1
                )


def test_gen_maximal_planar():
    assert gen_maximal_planar(3, 0) == named("triangle")
    g4 = gen_maximal_planar(4, 123)
    assert sorted(g4.edges()) == named("k4").edges()
    g = gen_maximal_planar(100, 7)
    validate(g)
    assert g.edge_count() == 294
    assert all(len(w) == 3 for w in compute_faces(g).faces)
    # determinism
    assert gen_maximal_planar(100, 7) == g
    assert gen_maximal_planar(100, 8) != g
    with pytest.raises(InputError):
        gen_maximal_planar(2, 0)


def test_gen_planar_3tree():
    assert sorted(gen_planar_3tree(4, 99).edges()) == named("k4").edges()
    g = gen_planar_3tree(60, 3)
    validate(g)
    assert g.edge_count() == 3 * 60 - 6
    # elimination order of degree-3 vertices exists (checked in three_tree tests
    # too, but assert the generator's own guarantee structurally here)
    adj = g.adjacency_sets()
    alive = set(range(g.n))
    while len(alive) > 3:
        v = next(x for x in sorted(alive) if len(adj[x]) == 3)
        for u in adj[v]:
            adj[u].discard(v)
        adj[v] = set()
        alive.discard(v)
    with pytest.raises(InputError):
        gen_planar_3tree(2, 0)


def test_gen_maximal_outerplanar():
    g = gen_maximal_outerplanar(5, 4)
    validate(g)
    assert g.n == 5 and g.edge_count() == 7
    assert len(g.outer_face) == 5
    for n, seed in [(10, 0), (50, 1), (200, 2)]:
        g = gen_maximal_outerplanar(n, seed)
        validate(g)
        assert g.edge_count() == 2 * n - 3
        assert len(set(g.outer_face)) == n
        faces = compute_faces(g)
        inner = faces.inner_faces()
        assert all(len(w) == 3 for w in inner)
        assert len(inner) == n - 2
    with pytest.raises(InputError):
        gen_maximal_outerplanar(1, 0)


def test_euler_on_generated_corpus():
    for seed in range(5):
        for gen in (gen_maximal_planar, gen_planar_3tree, gen_maximal_outerplanar):
            g = gen(25, seed)
            faces = compute_faces(g)
            assert g.n - g.edge_count() + len(faces.faces) == 2
