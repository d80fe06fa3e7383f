"""Peeling-into-levels layouts of maximal plane 3-trees in five queues.

Vertices are partitioned into levels by iterated removal of the outer
boundary; every edge is a level edge (same level) or a binding edge
(adjacent levels).  Each connected component of a level's induced
subgraph is an internally triangulated outerplane graph living inside a
triangular face of the previous level's component, adjacent to exactly
that face's three corners.

The layout orders levels ascending, keeps components contiguous, and
inside each component follows its straight-line drawing.  Level edges
take queues 0 and 1 by span; a binding edge takes queue 2, 3, or 4
according to whether its upper endpoint is the middle, top, or bottom
vertex of the face containing the lower endpoint's component.  With the
components of a level ordered by the drawing positions of their faces'
corners (top, then middle, then bottom, then lowest contained id), this
split is the one that leaves every queue nesting-free and makes each
vertex's queue-2 successors precede its queue-3 successors.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Optional

from .errors import InputError, InvariantError
from .linear_layout import Edge, QueueLayout, Verdict, VertexOrder, canon_edge
from .outerplanar import (
    OuterplanarDrawing,
    augment_component,
    default_fixed_vertex,
    draw_outerplanar,
    drawing_order,
)
from .plane_graph import PlaneGraph
from fractions import Fraction


@dataclass
class LevelComponent:
    index: int
    level: int
    vertices: list[int]
    corners: Optional[tuple[int, int, int]]  # sorted; None on level 0
    parent_comp: Optional[int]


@dataclass
class PeelingLevels:
    level: tuple[int, ...]
    depth: int  # highest level index
    components: list[list[LevelComponent]]  # per level, ordered by min vertex
    comp_of: tuple[int, ...]

    def component(self, idx: int) -> LevelComponent:
        for per_level in self.components:
            for c in per_level:
                if c.index == idx:
                    return c
        raise KeyError(idx)

    def edge_class(self, u: int, v: int) -> str:
        return "level" if self.level[u] == self.level[v] else "binding"


@dataclass
class ThreeTreeLayout:
    layout: QueueLayout
    levels: PeelingLevels
    drawings: dict[int, OuterplanarDrawing]  # per component index
    dummy_edges: dict[int, frozenset[Edge]]
    roles: dict[int, tuple[int, int, int]]  # per component: top, middle, bottom


# ---------------------------------------------------------------------------
# 3-tree recognition
# ---------------------------------------------------------------------------


def verify_3tree(g: PlaneGraph) -> tuple[bool, Optional[list[int]]]:
    """Check the degree-3 elimination property of a maximal planar graph.

    Returns (True, elimination order) when repeated deletion of the
    lowest-id degree-3 vertex reduces g to a triangle, else (False, None).
    """
    n = g.n
    if n < 3 or g.edge_count() != 3 * n - 6:
        raise InputError("graph is not maximal planar (E != 3n-6)")
    if n == 3:
        return True, []
    adj = g.adjacency_sets()
    heap = [v for v in range(n) if len(adj[v]) == 3]
    heapq.heapify(heap)
    removed = [False] * n
    order: list[int] = []
    alive = n
    while alive > 3:
        v = None
        while heap:
            cand = heapq.heappop(heap)
            if not removed[cand] and len(adj[cand]) == 3:
                v = cand
                break
        if v is None:
            return False, None
        nbrs = sorted(adj[v])
        for a in nbrs:
            for b in nbrs:
                if a < b and b not in adj[a]:
                    return False, None
        for u in nbrs:
            adj[u].discard(v)
            if len(adj[u]) == 3:
                heapq.heappush(heap, u)
        adj[v].clear()
        removed[v] = True
        order.append(v)
        alive -= 1
    return True, order


# ---------------------------------------------------------------------------
# Peeling
# ---------------------------------------------------------------------------


def peel_into_levels(g: PlaneGraph) -> PeelingLevels:
    """Levels, per-level components, and component-to-face bookkeeping."""
    ok, _ = verify_3tree(g)
    if not ok:
        raise InputError("graph is not a planar 3-tree")
    n = g.n
    outer = set(g.outer_face)
    if len(g.outer_face) != 3:
        raise InputError("outer face of a maximal plane graph must be a triangle")

    # peeling levels coincide with BFS layers from the outer triple: in a
    # maximal plane graph a vertex is on its component's outer boundary
    # exactly when it has a neighbor on the previous level
    level = [-1] * n
    frontier = sorted(outer)
    for v in frontier:
        level[v] = 0
    depth = 0
    while frontier:
        nxt = []
        for v in frontier:
            for u in g.neighbors(v):
                if level[u] < 0:
                    level[u] = level[v] + 1
                    nxt.append(u)
        frontier = sorted(nxt)
        if frontier:
            depth = level[frontier[0]]

    for u, v in g.edges():
        if abs(level[u] - level[v]) > 1:
            raise InvariantError(f"edge ({u},{v}) spans more than one level")

    comp_of = [-1] * n
    components: list[list[LevelComponent]] = [[] for _ in range(depth + 1)]
    next_idx = 0
    for v in range(n):
        if comp_of[v] >= 0:
            continue
        lv = level[v]
        stack = [v]
        comp_of[v] = next_idx
        verts = [v]
        while stack:
            x = stack.pop()
            for u in g.neighbors(x):
                if level[u] == lv and comp_of[u] < 0:
                    comp_of[u] = next_idx
                    verts.append(u)
                    stack.append(u)
        components[lv].append(
            LevelComponent(next_idx, lv, sorted(verts), None, None)
        )
        next_idx += 1

    if len(components[0]) != 1 or set(components[0][0].vertices) != outer:
        raise InvariantError("level 0 is not exactly the outer face")

    for lv in range(1, depth + 1):
        for comp in components[lv]:
            corner_set: set[int] = set()
            for x in comp.vertices:
                for u in g.neighbors(x):
                    if level[u] == lv - 1:
                        corner_set.add(u)
            if len(corner_set) != 3:
                raise InputError(
                    f"component {comp.vertices} has {len(corner_set)} "
                    "previous-level neighbors, expected 3"
                )
            corners = tuple(sorted(corner_set))
            for a in corners:
                for b in corners:
                    if a < b and not g.has_edge(a, b):
                        raise InvariantError(
                            f"corners {corners} of a component are not a triangle"
                        )
            parents = {comp_of[c] for c in corners}
            if len(parents) != 1:
                raise InvariantError("containing-face corners span components")
            comp.corners = corners  # type: ignore[assignment]
            comp.parent_comp = parents.pop()

    return PeelingLevels(tuple(level), depth, components, tuple(comp_of))


# ---------------------------------------------------------------------------
# Component extraction and drawing
# ---------------------------------------------------------------------------


def _component_outer_walk(
    g: PlaneGraph, levels: PeelingLevels, comp: LevelComponent
) -> list[int]:
    """Outer face walk of the component's induced embedding."""
    lv = comp.level
    if lv == 0:
        return list(g.outer_face)
    verts = comp.vertices
    if len(verts) == 1:
        return [verts[0]]
    # anchor: enter some component vertex from a containing-face corner and
    # continue the face walk inside the induced embedding
    x = None
    u_anchor = None
    for cand in verts:
        nbrs = [u for u in g.neighbors(cand) if levels.level[u] == lv - 1]
        if nbrs:
            x = cand
            u_anchor = min(nbrs)
            break
    if x is None:
        raise InvariantError("component has no contact with the previous level")
    same = [set() for _ in range(0)]  # placeholder to appease linters

    def induced_rot(v: int) -> list[int]:
        return [u for u in g.neighbors(v) if levels.level[u] == lv]

    rot_map = {v: induced_rot(v) for v in verts}
    # first same-level neighbor scanning backward from the anchor corner
    full = g.neighbors(x)
    i = full.index(u_anchor)
    w = None
    for k in range(1, len(full) + 1):
        cand = full[i - k]
        if levels.level[cand] == lv:
            w = cand
            break
    if w is None:
        raise InvariantError("anchored vertex has no same-level neighbor")
    walk = []
    u, v = x, w
    start = (u, v)
    while True:
        walk.append(u)
        rot_v = rot_map[v]
        j = rot_v.index(u)
        u, v = v, rot_v[j - 1]
        if (u, v) == start:
            break
    return walk


def _draw_component(
    g: PlaneGraph, levels: PeelingLevels, comp: LevelComponent
) -> tuple[OuterplanarDrawing, frozenset[Edge]]:
    """Drawing of one level component in original vertex ids."""
    verts = comp.vertices
    if len(verts) == 1:
        v = verts[0]
        return OuterplanarDrawing({v: Fraction(0)}, {v: 0}, {}, v, []), frozenset()
    if len(verts) == 2:
        a, b = verts
        d = OuterplanarDrawing(
            {a: Fraction(0), b: Fraction(1)},
            {a: 1, b: 0},
            {canon_edge(a, b): 1},
            a,
            [],
        )
        return d, frozenset()
    walk = _component_outer_walk(g, levels, comp)
    remap = {v: i for i, v in enumerate(verts)}
    back = list(verts)
    lv = comp.level
    rot = tuple(
        tuple(remap[u] for u in g.neighbors(v) if levels.level[u] == lv)
        for v in verts
    )
    sub = PlaneGraph(rot, tuple(remap[v] for v in walk))
    aug, dummies = augment_component(sub)
    d = draw_outerplanar(aug, default_fixed_vertex(aug))
    x = {back[v]: xv for v, xv in d.x.items()}
    y = {back[v]: yv for v, yv in d.y.items()}
    span = {canon_edge(back[a], back[b]): s for (a, b), s in d.span.items()}
    faces = [tuple(back[v] for v in f) for f in d.inner_faces]
    dummy = frozenset(canon_edge(back[a], back[b]) for a, b in dummies)
    return OuterplanarDrawing(x, y, span, back[d.fixed_vertex], faces), dummy


# ---------------------------------------------------------------------------
# Five-queue layout
# ---------------------------------------------------------------------------


def five_queue_layout(g: PlaneGraph, levels: PeelingLevels) -> ThreeTreeLayout:
    """Layout of a maximal plane 3-tree in at most five queues."""
    drawings: dict[int, OuterplanarDrawing] = {}
    dummy_edges: dict[int, frozenset[Edge]] = {}
    for per_level in levels.components:
        for comp in per_level:
            d, dummy = _draw_component(g, levels, comp)
            drawings[comp.index] = d
            dummy_edges[comp.index] = dummy

    roles: dict[int, tuple[int, int, int]] = {}
    for per_level in levels.components[1:]:
        for comp in per_level:
            assert comp.corners is not None and comp.parent_comp is not None
            pd = drawings[comp.parent_comp]
            face_ok = any(
                frozenset(f) == frozenset(comp.corners) for f in pd.inner_faces
            )
            if not face_ok:
                raise InvariantError(
                    f"containing face {comp.corners} is not a face of the "
                    "parent component's drawing"
                )
            top, mid, bot = sorted(comp.corners, key=lambda v: -pd.y[v])
            roles[comp.index] = (top, mid, bot)

    seq: list[int] = []
    pos: dict[int, int] = {}
    for lv, per_level in enumerate(levels.components):
        if lv == 0:
            ordered = list(per_level)
        else:
            ordered = sorted(
                per_level,
                key=lambda c: (
                    pos[roles[c.index][0]],
                    pos[roles[c.index][1]],
                    pos[roles[c.index][2]],
                    c.vertices[0],
                ),
            )
        for comp in ordered:
            for v in drawing_order(drawings[comp.index]):
                pos[v] = len(seq)
                seq.append(v)

    order = VertexOrder.from_sequence(seq)
    queue_of: dict[Edge, int] = {}
    for u, v in g.edges():
        e = canon_edge(u, v)
        lu, lvl = levels.level[u], levels.level[v]
        if lu == lvl:
            d = drawings[levels.comp_of[u]]
            queue_of[e] = d.span[e] - 1
        else:
            upper, lower = (u, v) if lu < lvl else (v, u)
            comp_idx = levels.comp_of[lower]
            top, mid, bot = roles[comp_idx]
            if upper == top:
                queue_of[e] = 2
            elif upper == mid:
                queue_of[e] = 3
            elif upper == bot:
                queue_of[e] = 4
            else:
                raise InvariantError(
                    f"binding edge ({u},{v}) does not lead to a containing-face corner"
                )
    count = max(queue_of.values(), default=-1) + 1
    return ThreeTreeLayout(
        QueueLayout(order, queue_of, count), levels, drawings, dummy_edges, roles
    )


# ---------------------------------------------------------------------------
# Structure checks
# ---------------------------------------------------------------------------


def binding_neighbor_sets(
    t: ThreeTreeLayout, g: PlaneGraph, u: int
) -> tuple[list[int], list[int], list[int]]:
    """Next-level neighbors of u split by binding queue (2, 3, 4)."""
    lv = t.levels.level[u]
    out: tuple[list[int], list[int], list[int]] = ([], [], [])
    for v in g.neighbors(u):
        if t.levels.level[v] == lv + 1:
            q = t.layout.queue_of[canon_edge(u, v)]
            out[q - 2].append(v)
    return out


def check_binding_locality(t: ThreeTreeLayout, g: PlaneGraph) -> Verdict:
    """Per vertex: queue-2 successors precede queue-3 successors, and each
    of the two neighbor groups meets at most two next-level components."""
    violations: list[str] = []
    order = t.layout.order
    for u in range(g.n):
        if t.levels.level[u] >= t.levels.depth:
            continue
        n2, n3, _n4 = binding_neighbor_sets(t, g, u)
        if n2 and n3:
            if max(order.position[v] for v in n2) >= min(
                order.position[v] for v in n3
            ):
                violations.append(
                    f"vertex {u}: a queue-2 successor follows a queue-3 successor"
                )
        for label, group in (("2", n2), ("3", n3)):
            comps = {t.levels.comp_of[v] for v in group}
            if len(comps) > 2:
                violations.append(
                    f"vertex {u}: queue-{label} successors span "
                    f"{len(comps)} components"
                )
    return Verdict(not violations, violations)


def check_layout_structure(t: ThreeTreeLayout, g: PlaneGraph) -> Verdict:
    """Level order, component contiguity, and the queue split of the layout."""
    violations: list[str] = []
    order = t.layout.order
    seq = order.sequence()
    lv = [t.levels.level[v] for v in seq]
    if lv != sorted(lv):
        violations.append("levels are not ascending in the order")
    comp_positions: dict[int, list[int]] = {}
    for p, v in enumerate(seq):
        comp_positions.setdefault(t.levels.comp_of[v], []).append(p)
    for c, ps in comp_positions.items():
        if ps[-1] - ps[0] + 1 != len(ps):
            violations.append(f"component {c} is not contiguous in the order")
    for u, v in g.edges():
        q = t.layout.queue_of[canon_edge(u, v)]
        if t.levels.level[u] == t.levels.level[v]:
            if q not in (0, 1):
                violations.append(f"level edge ({u},{v}) in queue {q}")
        elif q not in (2, 3, 4):
            violations.append(f"binding edge ({u},{v}) in queue {q}")
    if t.layout.queue_count > 5:
        violations.append(f"queue count {t.layout.queue_count} exceeds 5")
    return Verdict(not violations, violations)
