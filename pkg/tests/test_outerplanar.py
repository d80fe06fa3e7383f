from fractions import Fraction

import pytest

from planarqueues.errors import InputError
from planarqueues.linear_layout import canon_edge, verify_queue_layout
from planarqueues.outerplanar import (
    augment_component,
    check_drawing,
    default_fixed_vertex,
    draw_outerplanar,
    drawing_order,
    face_roles,
    removal_sequence,
    two_queue_layout,
)
from planarqueues.plane_graph import (
    PlaneGraph,
    compute_faces,
    gen_maximal_outerplanar,
    named,
    validate,
)


def fan(n: int) -> PlaneGraph:
    """Maximal outerplanar fan: path 1..n-1 plus hub 0 joined to all.

    Built by repeated ear insertion on the edge (last, 0), the same update
    rule the generator uses, so the embedding is consistent by construction.
    """
    rot: list[list[int]] = [[1, 2], [2, 0], [0, 1]]
    cycle = [0, 1, 2]
    for v in range(3, n):
        ci, cj = v - 1, 0
        rot[ci].insert(rot[ci].index(cj) + 1, v)
        rot[cj].insert(rot[cj].index(ci), v)
        rot.append([ci, cj])
        cycle.insert(cycle.index(ci) + 1, v)
    g = PlaneGraph(tuple(tuple(r) for r in rot), tuple(cycle))
    validate(g)
    return g


def square_with_diagonal() -> PlaneGraph:
    # cycle 0,1,2,3 with chord (0,2); degree-2 corners are 1 and 3
    rot = [
        (1, 2, 3),
        (2, 0),
        (3, 0, 1),
        (0, 2),
    ]
    g = PlaneGraph(rot, (0, 3, 2, 1))
    validate(g)
    return g


def test_removal_sequence_triangle():
    g = named("triangle")
    assert removal_sequence(g, 0) == []


def test_removal_sequence_fan():
    g = fan(5)
    fixed = default_fixed_vertex(g)
    assert fixed == 1  # hub has high degree; 1 is an ear
    seq = removal_sequence(g, fixed)
    assert len(seq) == 2
    assert fixed not in {v for v, _, _ in seq}


def test_removal_sequence_square():
    g = square_with_diagonal()
    seq = removal_sequence(g, 1)
    assert seq == [(3, 0, 2)]
    seq = removal_sequence(g, 3)
    assert seq == [(1, 0, 2)]


def test_removal_sequence_rejects_bad_fixed():
    g = square_with_diagonal()
    with pytest.raises(InputError):
        removal_sequence(g, 0)  # degree 3


def test_removal_sequence_rejects_non_maximal():
    square = PlaneGraph(((1, 3), (2, 0), (3, 1), (0, 2)), (0, 1, 2, 3))
    with pytest.raises(InputError):
        removal_sequence(square, 0)


def test_draw_triangle_base_placement():
    g = named("triangle")
    d = draw_outerplanar(g, fixed=0)
    assert (d.x[0], d.y[0]) == (Fraction(2), 0)
    assert (d.x[1], d.y[1]) == (Fraction(0), 1)
    assert (d.x[2], d.y[2]) == (Fraction(1), 2)
    assert d.span[canon_edge(0, 1)] == 1
    assert d.span[canon_edge(1, 2)] == 1
    assert d.span[canon_edge(0, 2)] == 2
    assert check_drawing(d, g, check_planarity=True).ok


def test_draw_span1_insertion_by_hand():
    # square + diagonal, fixed=1: removal peels 3, base triangle is (1,0,2)
    # with y=0 at fixed=1, vertices 0,2 at (0,1),(1,2). Vertex 3 re-attaches
    # to (0,2), a span-1 edge with top 2 at y=2: v lands at y=3, x=1/2.
    g = square_with_diagonal()
    d = draw_outerplanar(g, fixed=1)
    assert d.y[3] == 3
    assert d.x[3] == Fraction(1, 2)
    assert d.span[canon_edge(3, 2)] == 1
    assert d.span[canon_edge(3, 0)] == 2
    assert check_drawing(d, g, check_planarity=True).ok


def test_draw_span2_insertion_by_hand():
    # fan on 4: cycle 0,1,2,3 with hub edges; build explicitly:
    # vertices 1..3 on a path, 0 joined to all. fixed=1: peel 2? degree of
    # 2 is 3 (0,1,3). Ears: 1 and 3. fixed=1 -> remove 3 first (ear on (0,2)).
    g = fan(4)
    d = draw_outerplanar(g, fixed=1)
    # base triangle: {1, 0, 2}: fixed=1 at (2,0); y=0 -> (0,1); z=2 -> (1,2)
    # then 3 attaches to (0,2): y(0)=1,y(2)=2 span 1; v above: y=3, x=(x0+x2)/2
    assert d.y[3] == 3 and d.x[3] == Fraction(1, 2)
    # now simulate a span-2 insertion: vertex on edge (3,0): spans |3-1|=2
    # fan(5) peels to the same base and exercises the quarter-point rule.
    g5 = fan(5)
    d5 = draw_outerplanar(g5, fixed=1)
    assert check_drawing(d5, g5, check_planarity=True).ok
    for e, s in d5.span.items():
        assert s == abs(d5.y[e[0]] - d5.y[e[1]])


def test_two_queue_layout_triangle():
    g = named("triangle")
    d = draw_outerplanar(g, fixed=0)
    layout = two_queue_layout(d)
    # order: decreasing y -> 2, 1, 0
    assert layout.order.sequence() == [2, 1, 0]
    assert layout.queue_of[canon_edge(1, 2)] == 0
    assert layout.queue_of[canon_edge(0, 1)] == 0
    assert layout.queue_of[canon_edge(0, 2)] == 1
    assert verify_queue_layout(layout, g.edges()).ok


def test_two_queue_layout_500_vertex_corpus():
    g = gen_maximal_outerplanar(500, 77)
    d = draw_outerplanar(g)
    layout = two_queue_layout(d)
    assert layout.queue_count <= 2
    assert verify_queue_layout(layout, g.edges()).ok
    assert check_drawing(d, g).ok


def test_drawing_corpus_with_planarity():
    for n, seed in [(6, 0), (8, 1), (10, 2), (12, 3)]:
        g = gen_maximal_outerplanar(n, seed)
        d = draw_outerplanar(g)
        v = check_drawing(d, g, check_planarity=True)
        assert v.ok, v.violations


def test_face_roles_base_and_insertions():
    g = square_with_diagonal()
    d = draw_outerplanar(g, fixed=1)
    faces = compute_faces(g).inner_faces()
    roles = face_roles(d, faces)
    # base triangle (1,0,2): top=2 (y=2), middle=0 (y=1), bottom=1 (y=0)
    assert roles[frozenset({1, 0, 2})] == (2, 0, 1)
    # face (3,0,2) created by span-1 insertion: top is the new vertex 3
    assert roles[frozenset({3, 0, 2})] == (3, 2, 0)


def test_face_roles_rejects_flat_face():
    g = named("triangle")
    d = draw_outerplanar(g, fixed=0)
    d.y[2] = d.y[1]
    from planarqueues.errors import InvariantError

    with pytest.raises(InvariantError):
        face_roles(d, [(0, 1, 2)])


def test_augment_single_vertex_and_edge():
    g1 = PlaneGraph(((),), (0,))
    out, dummy = augment_component(g1)
    assert out == g1 and dummy == frozenset()
    g2 = PlaneGraph(((1,), (0,)), (0, 1))
    out, dummy = augment_component(g2)
    assert out == g2 and dummy == frozenset()


def test_augment_two_triangles_sharing_cut_vertex():
    # triangles (2,0,1) and (2,3,4) sharing vertex 2
    rot = [
        (1, 2),
        (2, 0),
        (0, 4, 3, 1),
        (4, 2),
        (2, 3),
    ]
    g = PlaneGraph(tuple(rot), (0, 1, 2, 3, 4, 2))
    validate(g)
    out, dummy = augment_component(g)
    validate(out)
    assert len(dummy) == 1
    assert out.edge_count() == 2 * 5 - 3
    inner = compute_faces(out).inner_faces()
    assert all(len(f) == 3 for f in inner)
    # both original triangles survive as faces
    face_sets = {frozenset(f) for f in inner}
    assert frozenset({0, 1, 2}) in face_sets
    assert frozenset({2, 3, 4}) in face_sets


def test_augment_star_and_path():
    # star K_{1,3}: center 0
    rot = [(1, 2, 3), (0,), (0,), (0,)]
    g = PlaneGraph(tuple(rot), (0, 1, 0, 3, 0, 2))
    validate(g)
    out, dummy = augment_component(g)
    validate(out)
    assert out.edge_count() == 2 * 4 - 3
    d = draw_outerplanar(out)
    assert check_drawing(d, out, check_planarity=True).ok
    # path on 4 vertices: pocket face needs an extra chord
    rot = [(1,), (0, 2), (1, 3), (2,)]
    g = PlaneGraph(tuple(rot), (0, 1, 2, 3, 2, 1))
    validate(g)
    out, dummy = augment_component(g)
    validate(out)
    assert out.edge_count() == 5
    d = draw_outerplanar(out)
    assert check_drawing(d, out, check_planarity=True).ok


def test_augment_random_sub_outerplanar():
    import random

    rng = random.Random(123)
    for trial in range(30):
        n = rng.randrange(4, 40)
        g = gen_maximal_outerplanar(n, trial)
        # drop random chords (keep the outer cycle) to create cut structure
        cyc_edges = set()
        oc = g.outer_face
        for i in range(len(oc)):
            cyc_edges.add(canon_edge(oc[i], oc[(i + 1) % len(oc)]))
        keep = {
            e
            for e in (canon_edge(*x) for x in g.edges())
            if e in cyc_edges or rng.random() < 0.4
        }
        rot = tuple(
            tuple(u for u in g.rotations[v] if canon_edge(u, v) in keep)
            for v in range(n)
        )
        sub = PlaneGraph(rot, g.outer_face)
        validate(sub)
        out, dummy = augment_component(sub)
        validate(out)
        assert out.edge_count() == 2 * n - 3
        d = draw_outerplanar(out)
        res = check_drawing(d, out, check_planarity=(n <= 12))
        assert res.ok, res.violations
        layout = two_queue_layout(d)
        assert verify_queue_layout(layout, out.edges()).ok


def test_drawing_deterministic():
    g = gen_maximal_outerplanar(40, 5)
    d1 = draw_outerplanar(g)
    d2 = draw_outerplanar(g)
    assert d1.x == d2.x and d1.y == d2.y and d1.span == d2.span
    assert drawing_order(d1) == drawing_order(d2)
