"""Straight-line drawings of biconnected maximal outerplane graphs.

The drawing keeps three invariants: the outer cycle splits into two
strictly x-monotone envelopes, adjacent vertices differ in y by exactly 1
or 2 (the edge's span), and the lower envelope is one single edge.  The
construction peels degree-2 vertices down to a triangle that keeps one
designated degree-2 vertex, places that triangle at (2,0), (0,1), (1,2),
and re-inserts the peeled vertices with midpoint (span-1) or quarter-point
(span-2) rules.  x-coordinates are exact dyadic rationals, so all
monotonicity checks are exact.

Sorting the vertices by decreasing y (ties by increasing x) and splitting
edges by span yields a 2-queue layout of the drawn graph.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import InputError, InvariantError
from .linear_layout import Edge, QueueLayout, Verdict, VertexOrder, canon_edge
from .plane_graph import PlaneGraph, _insert_chord, compute_faces


@dataclass
class OuterplanarDrawing:
    """Exact coordinates plus per-edge spans for one drawn component."""

    x: dict[int, Fraction]
    y: dict[int, int]
    span: dict[Edge, int]
    fixed_vertex: int
    inner_faces: list[tuple[int, int, int]]

    def vertices(self) -> list[int]:
        return sorted(self.x)


# ---------------------------------------------------------------------------
# Augmentation of a connected outerplane graph
# ---------------------------------------------------------------------------


def augment_component(g: PlaneGraph) -> tuple[PlaneGraph, frozenset[Edge]]:
    """Augment a connected outerplane graph to biconnected maximal outerplane.

    The outer walk's first-occurrence sequence becomes a Hamiltonian outer
    cycle; missing cycle edges and chords triangulating the new pockets are
    added and reported as dummy edges.  Existing inner triangular faces stay
    faces.  Graphs with fewer than three vertices are returned unchanged
    (their drawings are special-cased).
    """
    n = g.n
    if n <= 2:
        return g, frozenset()
    seen: set[int] = set()
    cycle: list[int] = []
    for v in g.outer_face:
        if v not in seen:
            seen.add(v)
            cycle.append(v)
    if len(cycle) != n:
        raise InputError("not an outerplane graph: some vertex misses the outer face")

    cyc_pos = {v: i for i, v in enumerate(cycle)}
    old_edges = {canon_edge(u, v) for u, v in g.edges()}
    dummies: set[Edge] = set()
    adj = [set(g.neighbors(v)) for v in range(n)]
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % n]
        if v not in adj[u]:
            adj[u].add(v)
            adj[v].add(u)
            dummies.add(canon_edge(u, v))

    # rotations for the circular layout: neighbors by descending cyclic offset
    rot = [
        sorted(adj[v], key=lambda u: -((cyc_pos[u] - cyc_pos[v]) % n))
        for v in range(n)
    ]
    aug = PlaneGraph(tuple(tuple(r) for r in rot), tuple(cycle))

    # triangulate leftover pockets (faces created next to the new cycle edges)
    rot_l = [list(r) for r in rot]
    edges = {canon_edge(u, v) for u, v in aug.edges()}
    fs = compute_faces(aug)
    stack = [list(f) for i, f in enumerate(fs.faces) if i != fs.outer_index]
    while stack:
        walk = stack.pop()
        while len(walk) > 3:
            m = len(walk)
            cut = None
            p = walk.index(min(walk))
            for t in [p] + list(range(m)):
                a, c = walk[t], walk[(t + 2) % m]
                if a != c and canon_edge(a, c) not in edges:
                    cut = t
                    break
            if cut is None:
                raise InvariantError(f"pocket {walk} cannot be triangulated")
            a, c = walk[cut], walk[(cut + 2) % m]
            dummies.add(canon_edge(a, c))
            _, walk = _insert_chord(rot_l, edges, walk, cut, (cut + 2) % m)
    aug = PlaneGraph(tuple(tuple(r) for r in rot_l), tuple(cycle))

    if aug.edge_count() != 2 * n - 3:
        raise InvariantError("augmentation did not reach maximal outerplane size")
    for e in old_edges:
        assert e not in dummies
    return aug, frozenset(dummies)


# ---------------------------------------------------------------------------
# Peeling order and the drawing
# ---------------------------------------------------------------------------


def _check_biconnected_maximal(g: PlaneGraph) -> None:
    n = g.n
    if n < 3:
        raise InputError("need at least 3 vertices")
    if len(set(g.outer_face)) != n or len(g.outer_face) != n:
        raise InputError(
            "outer face is not a simple cycle through all vertices: "
            f"{g.outer_face}"
        )
    if g.edge_count() != 2 * n - 3:
        raise InputError(f"edge count {g.edge_count()} != 2n-3; not maximal")
    faces = compute_faces(g)
    for i, f in enumerate(faces.faces):
        if i != faces.outer_index and len(f) != 3:
            raise InputError(f"inner face {f} is not a triangle")


def removal_sequence(
    g: PlaneGraph, fixed: int
) -> list[tuple[int, int, int]]:
    """Peel degree-2 vertices, never `fixed`, down to a triangle around it.

    Returns triples (v, u, w): v was removed while adjacent to u and w.
    In a biconnected maximal outerplane graph degree-2 vertices are pairwise
    non-adjacent once n >= 4, so an eligible vertex always exists and the
    degree of `fixed` stays 2 throughout.
    """
    _check_biconnected_maximal(g)
    if g.degree(fixed) != 2:
        raise InputError(f"fixed vertex {fixed} has degree {g.degree(fixed)}, not 2")
    n = g.n
    adj = [set(g.neighbors(v)) for v in range(n)]
    alive = n
    removed = [False] * n
    heap = [v for v in range(n) if len(adj[v]) == 2 and v != fixed]
    heapq.heapify(heap)
    seq: list[tuple[int, int, int]] = []
    while alive > 3:
        while True:
            if not heap:
                raise InputError("no removable degree-2 vertex; graph not maximal outerplane")
            v = heapq.heappop(heap)
            if not removed[v] and len(adj[v]) == 2 and v != fixed:
                break
        u, w = sorted(adj[v])
        if w not in adj[u]:
            raise InputError(f"vertices {u},{w} around degree-2 vertex {v} not adjacent")
        adj[u].discard(v)
        adj[w].discard(v)
        adj[v].clear()
        removed[v] = True
        alive -= 1
        seq.append((v, u, w))
        for t in (u, w):
            if len(adj[t]) == 2 and t != fixed and not removed[t]:
                heapq.heappush(heap, t)
    assert not removed[fixed] and len(adj[fixed]) == 2
    return seq


def default_fixed_vertex(g: PlaneGraph) -> int:
    """Lowest-id degree-2 vertex."""
    for v in range(g.n):
        if g.degree(v) == 2:
            return v
    raise InputError("graph has no degree-2 vertex")


def draw_outerplanar(g: PlaneGraph, fixed: Optional[int] = None) -> OuterplanarDrawing:
    """Straight-line drawing of a biconnected maximal outerplane graph."""
    if fixed is None:
        fixed = default_fixed_vertex(g)
    seq = removal_sequence(g, fixed)
    removed_set = {v for v, _, _ in seq}
    base = sorted(v for v in range(g.n) if v not in removed_set)
    others = [v for v in base if v != fixed]
    yb, zb = others[0], others[1]

    x: dict[int, Fraction] = {
        fixed: Fraction(2),
        yb: Fraction(0),
        zb: Fraction(1),
    }
    y: dict[int, int] = {fixed: 0, yb: 1, zb: 2}
    span: dict[Edge, int] = {
        canon_edge(fixed, yb): 1,
        canon_edge(yb, zb): 1,
        canon_edge(zb, fixed): 2,
    }
    inner_faces: list[tuple[int, int, int]] = [(fixed, yb, zb)]
    base_lower_edge = canon_edge(fixed, yb)

    for v, u, w in reversed(seq):
        if canon_edge(u, w) == base_lower_edge:
            raise InvariantError(
                "insertion targeted the lower envelope; invariant breached"
            )
        hi, lo = (u, w) if y[u] > y[w] else (w, u)
        s = y[hi] - y[lo]
        if s == 1:
            y[v] = y[hi] + 1
            x[v] = Fraction(x[hi] + x[lo], 2)
            span[canon_edge(v, hi)] = 1
            span[canon_edge(v, lo)] = 2
        elif s == 2:
            # quarter-point toward the lower endpoint: at mid-height the
            # replaced segment sits at the midpoint x, so the new vertex must
            # be strictly beyond it on the outer side
            y[v] = y[hi] - 1
            x[v] = (x[hi] + 3 * x[lo]) / 4
            span[canon_edge(v, hi)] = 1
            span[canon_edge(v, lo)] = 1
        else:
            raise InvariantError(f"edge ({u},{w}) has span {s}, outside {{1,2}}")
        inner_faces.append((v, u, w))

    return OuterplanarDrawing(x, y, span, fixed, inner_faces)


# ---------------------------------------------------------------------------
# Layout and face roles
# ---------------------------------------------------------------------------


def drawing_order(d: OuterplanarDrawing) -> list[int]:
    """Vertices by decreasing y, ties by increasing x."""
    return sorted(d.x, key=lambda v: (-d.y[v], d.x[v]))


def two_queue_layout(d: OuterplanarDrawing) -> QueueLayout:
    """Order by the drawing, queue 0 = span-1 edges, queue 1 = span-2 edges."""
    seq = drawing_order(d)
    # drawings carry original vertex ids; compress them for VertexOrder
    ids = sorted(d.x)
    if ids == list(range(len(ids))):
        order = VertexOrder.from_sequence(seq)
        queue_of = {e: s - 1 for e, s in d.span.items()}
    else:
        remap = {v: i for i, v in enumerate(ids)}
        order = VertexOrder.from_sequence([remap[v] for v in seq])
        queue_of = {
            canon_edge(remap[a], remap[b]): s - 1 for (a, b), s in d.span.items()
        }
    count = max(queue_of.values(), default=-1) + 1
    return QueueLayout(order, queue_of, count)


def face_roles(
    d: OuterplanarDrawing, faces: Iterable[tuple[int, ...]]
) -> dict[frozenset[int], tuple[int, int, int]]:
    """Per triangular face the (top, middle, bottom) vertices by y-coordinate."""
    out: dict[frozenset[int], tuple[int, int, int]] = {}
    for f in faces:
        if len(f) != 3:
            raise InputError(f"face {f} is not a triangle")
        ys = {d.y[v] for v in f}
        if len(ys) != 3:
            raise InvariantError(f"face {f} has repeated y-coordinates")
        top, mid, bot = sorted(f, key=lambda v: -d.y[v])
        out[frozenset(f)] = (top, mid, bot)
    return out


# ---------------------------------------------------------------------------
# Drawing checks (used by tests and the acceptance suite)
# ---------------------------------------------------------------------------


def _orient(ax, ay, bx, by, cx, cy) -> int:
    v = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return (v > 0) - (v < 0)


def _segments_cross(p1, p2, p3, p4) -> bool:
    """Proper or improper crossing of closed segments sharing no endpoint."""
    d1 = _orient(*p3, *p4, *p1)
    d2 = _orient(*p3, *p4, *p2)
    d3 = _orient(*p1, *p2, *p3)
    d4 = _orient(*p1, *p2, *p4)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and (
        (d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)
    ):
        return True

    def on_segment(p, q, r) -> bool:
        return (
            min(p[0], q[0]) <= r[0] <= max(p[0], q[0])
            and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])
        )

    if d1 == 0 and on_segment(p3, p4, p1):
        return True
    if d2 == 0 and on_segment(p3, p4, p2):
        return True
    if d3 == 0 and on_segment(p1, p2, p3):
        return True
    if d4 == 0 and on_segment(p1, p2, p4):
        return True
    return False


def check_drawing(
    d: OuterplanarDrawing,
    g: PlaneGraph,
    check_planarity: bool = False,
) -> Verdict:
    """Verify all drawing invariants of d against the drawn graph g.

    Checks envelopes (outer cycle = two strictly x-monotone paths), spans in
    {1, 2} matching y-differences, the single-edge lower envelope, distinct
    vertex positions, no vertical edges, and the per-vertex face-role bounds
    (each vertex tops at most two inner faces and sides at most two).  With
    check_planarity, also runs an exact all-pairs segment intersection test.
    """
    violations: list[str] = []
    pts = {v: (d.x[v], Fraction(d.y[v])) for v in d.x}
    if len({p for p in pts.values()}) != len(pts):
        violations.append("two vertices share coordinates")
    edges = [canon_edge(u, v) for u, v in g.edges()]
    for u, v in edges:
        e = canon_edge(u, v)
        if e not in d.span:
            violations.append(f"edge {e} has no span")
            continue
        if d.span[e] != abs(d.y[u] - d.y[v]) or d.span[e] not in (1, 2):
            violations.append(f"edge {e}: span {d.span[e]} vs dy {abs(d.y[u]-d.y[v])}")
        if d.x[u] == d.x[v]:
            violations.append(f"edge {e} is vertical")

    cyc = list(g.outer_face)
    n = len(cyc)
    if len(set(cyc)) == n and n >= 3:
        lo = min(range(n), key=lambda i: d.x[cyc[i]])
        hi = max(range(n), key=lambda i: d.x[cyc[i]])
        arcs = []
        for step in (1, -1):
            arc = [cyc[lo]]
            i = lo
            while i != hi:
                i = (i + step) % n
                arc.append(cyc[i])
            arcs.append(arc)
        for arc in arcs:
            for a, b in zip(arc, arc[1:]):
                if not d.x[a] < d.x[b]:
                    violations.append(
                        f"outer arc not strictly x-monotone at ({a},{b})"
                    )
        short = min(arcs, key=len)
        if len(short) != 2:
            violations.append("lower envelope is not a single edge")
        else:
            expected_bottom = min(d.x, key=lambda v: (d.y[v], d.x[v]))
            if d.fixed_vertex not in short or d.y[d.fixed_vertex] != d.y[expected_bottom]:
                violations.append("lower envelope does not contain the fixed vertex")
    else:
        violations.append("outer face is not a simple spanning cycle")

    top_count: dict[int, int] = {}
    side_count: dict[int, int] = {}
    for f in d.inner_faces:
        top, mid, _bot = sorted(f, key=lambda v: -d.y[v])
        top_count[top] = top_count.get(top, 0) + 1
        side_count[mid] = side_count.get(mid, 0) + 1
    for v, c in top_count.items():
        if c > 2:
            violations.append(f"vertex {v} is the top vertex of {c} > 2 faces")
    for v, c in side_count.items():
        if c > 2:
            violations.append(f"vertex {v} is the side vertex of {c} > 2 faces")

    if check_planarity:
        for i in range(len(edges)):
            for j in range(i + 1, len(edges)):
                a, b = edges[i]
                c, e2 = edges[j]
                if {a, b} & {c, e2}:
                    continue
                if _segments_cross(pts[a], pts[b], pts[c], pts[e2]):
                    violations.append(
                        f"edges {edges[i]} and {edges[j]} cross in the drawing"
                    )
    return Verdict(not violations, violations)


def drawing_to_json_dict(d: OuterplanarDrawing) -> dict:
    ids = sorted(d.x)
    return {
        "vertices": ids,
        "coords": [
            [d.x[v].numerator, d.x[v].denominator, d.y[v]] for v in ids
        ],
        "spans": [[u, v, d.span[canon_edge(u, v)]] for u, v in sorted(d.span)],
        "fixed": d.fixed_vertex,
    }
