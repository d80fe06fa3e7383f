"""Combinatorial plane graphs: rotation systems, faces, triangulation,
BFS layerings, and seeded graph generators.

A plane graph is stored as a clockwise rotation (cyclic neighbor order)
per vertex plus a designated outer face walk.  Faces are traversed with
one fixed convention: from the directed edge (u -> v) the walk continues
with (v -> w) where w immediately precedes u in the clockwise rotation
of v.  Under this convention every face walk keeps its region to the
right of the direction of travel; the outer face walk comes out
counterclockwise in a standard drawing.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import EmbeddingError, InputError


@dataclass(frozen=True)
class PlaneGraph:
    """Undirected simple plane graph: clockwise rotations + outer face walk."""

    rotations: tuple[tuple[int, ...], ...]
    outer_face: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.rotations)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotations[v]

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def edge_count(self) -> int:
        return sum(len(r) for r in self.rotations) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (min, max) pairs, sorted."""
        out = []
        for u, rot in enumerate(self.rotations):
            for v in rot:
                if u < v:
                    out.append((u, v))
        out.sort()
        return out

    def adjacency_sets(self) -> list[set[int]]:
        return [set(r) for r in self.rotations]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.rotations[u]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "rotations": [list(r) for r in self.rotations],
            "outer_face": list(self.outer_face),
        }


@dataclass(frozen=True)
class FaceSet:
    """All face walks of a plane graph; walks are canonically rotated."""

    faces: tuple[tuple[int, ...], ...]
    outer_index: int

    def inner_faces(self) -> list[tuple[int, ...]]:
        return [f for i, f in enumerate(self.faces) if i != self.outer_index]


@dataclass(frozen=True)
class BfsLayering:
    """BFS distances from `root` plus a deterministic parent choice."""

    root: int
    layer: tuple[int, ...]
    parent: tuple[Optional[int], ...]

    def layers(self) -> list[list[int]]:
        depth = max(self.layer) + 1
        out: list[list[int]] = [[] for _ in range(depth)]
        for v, l in enumerate(self.layer):
            out[l].append(v)
        return out


# ---------------------------------------------------------------------------
# Validation and faces
# ---------------------------------------------------------------------------


def _canonical_walk(walk: Iterable[int]) -> tuple[int, ...]:
    """Rotate a cyclic walk to its lexicographically smallest rotation."""
    w = tuple(walk)
    if not w:
        return w
    m = min(w)
    best = None
    for i, v in enumerate(w):
        if v == m:
            cand = w[i:] + w[:i]
            if best is None or cand < best:
                best = cand
    return best  # type: ignore[return-value]


def validate(g: PlaneGraph) -> None:
    """Raise EmbeddingError unless g is a valid connected simple plane graph."""
    n = g.n
    if n == 0:
        raise EmbeddingError("graph has no vertices")
    for v, rot in enumerate(g.rotations):
        seen = set()
        for u in rot:
            if not (0 <= u < n):
                raise EmbeddingError(f"vertex {v}: neighbor {u} out of range")
            if u == v:
                raise EmbeddingError(f"vertex {v}: self-loop")
            if u in seen:
                raise EmbeddingError(f"vertex {v}: repeated neighbor {u}")
            seen.add(u)
    for v, rot in enumerate(g.rotations):
        for u in rot:
            if v not in g.rotations[u]:
                raise EmbeddingError(
                    f"asymmetric adjacency: {u} in rotation of {v} "
                    f"but {v} not in rotation of {u}"
                )
    # connectivity
    if n > 1:
        seen_v = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in g.rotations[v]:
                if u not in seen_v:
                    seen_v.add(u)
                    stack.append(u)
        if len(seen_v) != n:
            missing = next(v for v in range(n) if v not in seen_v)
            raise EmbeddingError(f"graph is disconnected: vertex {missing} unreachable")
    faces = _trace_faces(g)
    e = g.edge_count()
    if n - e + len(faces) != 2:
        raise EmbeddingError(
            f"Euler check failed: V={n} E={e} F={len(faces)} (V-E+F != 2)"
        )
    outer = _canonical_walk(g.outer_face)
    if outer not in {(_canonical_walk(f)) for f in faces}:
        raise EmbeddingError("outer_face is not a face of the embedding")


def _trace_faces(g: PlaneGraph) -> list[tuple[int, ...]]:
    """Face walks under the fixed traversal convention (uncanonicalized)."""
    index = [dict((u, i) for i, u in enumerate(rot)) for rot in g.rotations]
    visited: set[tuple[int, int]] = set()
    faces: list[tuple[int, ...]] = []
    for u0, rot in enumerate(g.rotations):
        for v0 in rot:
            if (u0, v0) in visited:
                continue
            walk = []
            u, v = u0, v0
            while (u, v) not in visited:
                visited.add((u, v))
                walk.append(u)
                i = index[v][u]
                w = g.rotations[v][i - 1]
                u, v = v, w
            faces.append(tuple(walk))
    return faces


def compute_faces(g: PlaneGraph) -> FaceSet:
    """All faces of g; identifies which is the designated outer face."""
    faces = [_canonical_walk(f) for f in _trace_faces(g)]
    outer = _canonical_walk(g.outer_face)
    try:
        outer_index = faces.index(outer)
    except ValueError:
        raise EmbeddingError("outer_face is not a face of the embedding") from None
    return FaceSet(tuple(faces), outer_index)


def directed_face_map(faces: FaceSet) -> dict[tuple[int, int], int]:
    """Map each directed edge (u, v) to the index of the face walk using it."""
    out: dict[tuple[int, int], int] = {}
    for i, f in enumerate(faces.faces):
        m = len(f)
        for k in range(m):
            out[(f[k], f[(k + 1) % m])] = i
    return out


# ---------------------------------------------------------------------------
# Triangulation
# ---------------------------------------------------------------------------


def _insert_chord(
    rot: list[list[int]],
    edges: set[tuple[int, int]],
    walk: list[int],
    i: int,
    j: int,
) -> tuple[list[int], list[int]]:
    """Add chord (walk[i], walk[j]) inside the face bounded by `walk`.

    Splits the walk into two sub-walks sharing the chord.  Rotation lists
    are updated so both sub-walks are faces of the new embedding.
    """
    m = len(walk)
    x, y = walk[i], walk[j]
    # y enters rotation(x) between walk[i+1] and walk[i-1]
    rot[x].insert(rot[x].index(walk[(i - 1) % m]), y)
    rot[y].insert(rot[y].index(walk[(j - 1) % m]), x)
    edges.add((min(x, y), max(x, y)))
    if i < j:
        w1 = walk[i : j + 1]
        w2 = walk[j:] + walk[: i + 1]
    else:
        w1 = walk[i:] + walk[: j + 1]
        w2 = walk[j : i + 1]
    return w1, w2


def triangulate(g: PlaneGraph) -> tuple[PlaneGraph, frozenset[tuple[int, int]]]:
    """Add edges until every face (outer included) is a triangle.

    Per face the primary strategy is a fan from its lowest-id corner; when
    a fan chord already exists elsewhere we fall back to ear clipping and,
    failing that, to an arbitrary valid chord split.  The input embedding
    is preserved as a sub-embedding.
    """
    if g.n < 3:
        raise InputError("cannot triangulate a graph with fewer than 3 vertices")
    rot = [list(r) for r in g.rotations]
    edges = {(min(u, v), max(u, v)) for u, v in g.edges()}
    face_set = compute_faces(g)
    outer_step = (g.outer_face[0], g.outer_face[1]) if len(g.outer_face) >= 2 else None
    added: list[tuple[int, int]] = []

    def chord_ok(a: int, c: int) -> bool:
        return a != c and (min(a, c), max(a, c)) not in edges

    stack = [list(f) for f in face_set.faces]
    while stack:
        walk = stack.pop()
        while len(walk) > 3:
            m = len(walk)
            cut = None
            # fan step from the lowest-id corner
            p = walk.index(min(walk))
            if chord_ok(walk[p], walk[(p + 2) % m]):
                cut = p
            else:
                for t in range(m):
                    if chord_ok(walk[t], walk[(t + 2) % m]):
                        cut = t
                        break
            if cut is not None:
                i, j = cut, (cut + 2) % m
                before = len(edges)
                tri, rest = _insert_chord(rot, edges, walk, i, j)
                assert len(edges) == before + 1 and len(tri) == 3
                added.append((min(walk[i], walk[j]), max(walk[i], walk[j])))
                walk = rest
                continue
            # general split on any valid non-adjacent pair
            split = None
            for i in range(m):
                for d in range(2, m - 1):
                    j = (i + d) % m
                    if chord_ok(walk[i], walk[j]):
                        split = (i, j)
                        break
                if split:
                    break
            if split is None:
                raise EmbeddingError(f"cannot triangulate face walk {walk}")
            i, j = split
            added.append((min(walk[i], walk[j]), max(walk[i], walk[j])))
            w1, w2 = _insert_chord(rot, edges, walk, i, j)
            stack.append(w2)
            walk = w1

    result = PlaneGraph(tuple(tuple(r) for r in rot), g.outer_face)
    # the outer face may have been subdivided; keep the triangle that
    # retained the first directed step of the original outer walk
    new_faces = _trace_faces(result)
    outer_walk = None
    if outer_step is None:
        outer_walk = result.outer_face
    else:
        for f in new_faces:
            mm = len(f)
            for k in range(mm):
                if (f[k], f[(k + 1) % mm]) == outer_step:
                    outer_walk = _canonical_walk(f)
                    break
            if outer_walk:
                break
    assert outer_walk is not None
    result = PlaneGraph(result.rotations, tuple(outer_walk))
    return result, frozenset(added)


# ---------------------------------------------------------------------------
# BFS layering
# ---------------------------------------------------------------------------


def bfs_layering(g: PlaneGraph, root: int) -> BfsLayering:
    """BFS distances from root; parent = lowest-id neighbor one layer up."""
    if not (0 <= root < g.n):
        raise InputError(f"root {root} out of range")
    layer = [-1] * g.n
    layer[root] = 0
    frontier = [root]
    while frontier:
        nxt = []
        for v in frontier:
            for u in g.rotations[v]:
                if layer[u] < 0:
                    layer[u] = layer[v] + 1
                    nxt.append(u)
        frontier = sorted(nxt)
    if min(layer) < 0:
        raise InputError("graph is disconnected; BFS layering undefined")
    parent: list[Optional[int]] = [None] * g.n
    for v in range(g.n):
        if v == root:
            continue
        parent[v] = min(u for u in g.rotations[v] if layer[u] == layer[v] - 1)
    return BfsLayering(root, tuple(layer), tuple(parent))


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

_TRIANGLE = PlaneGraph(((1, 2), (2, 0), (0, 1)), (0, 1, 2))

_K4 = PlaneGraph(((2, 3, 1), (0, 3, 2), (1, 3, 0), (2, 1, 0)), (0, 1, 2))

_OCTAHEDRON = PlaneGraph(
    (
        (1, 5, 4, 2),
        (5, 0, 2, 3),
        (3, 1, 0, 4),
        (5, 1, 2, 4),
        (3, 2, 0, 5),
        (4, 0, 1, 3),
    ),
    (3, 4, 5),
)

NAMED_GRAPHS = {"triangle": _TRIANGLE, "k4": _K4, "octahedron": _OCTAHEDRON}


def named(name: str) -> PlaneGraph:
    try:
        return NAMED_GRAPHS[name]
    except KeyError:
        raise InputError(
            f"unknown graph name {name!r}; choose from {sorted(NAMED_GRAPHS)}"
        ) from None


def _stack_vertex(
    rot: list[list[int]], walk: tuple[int, int, int], v: int
) -> list[tuple[int, int, int]]:
    """Insert v inside the triangular face `walk`, joined to all corners.

    Appends the rotation of v (rot must have length v) and returns the three
    replacement face walks, orientation preserved.
    """
    a, b, c = walk
    assert len(rot) == v
    rot.append([a, b, c])
    rot[a].insert(rot[a].index(c), v)
    rot[b].insert(rot[b].index(a), v)
    rot[c].insert(rot[c].index(b), v)
    return [(a, b, v), (b, c, v), (c, a, v)]


def gen_maximal_planar(n: int, seed: int) -> PlaneGraph:
    """Random maximal planar graph via repeated stacking into a random face.

    Every face (outer included) is a candidate; when the outer face is hit,
    the replacement walk that keeps the original first boundary step stays
    outer.  E = 3n - 6 and all faces are triangles.
    """
    if n < 3:
        raise InputError("maximal planar generation needs n >= 3")
    rng = random.Random(seed)
    rot: list[list[int]] = [[1, 2], [2, 0], [0, 1]]
    faces: list[tuple[int, int, int]] = [(0, 1, 2), (0, 2, 1)]
    outer_idx = 0
    for v in range(3, n):
        fi = rng.randrange(len(faces))
        new = _stack_vertex(rot, faces[fi], v)
        faces[fi] = new[0]
        faces.extend(new[1:])
        # new[0] keeps the first step of the old walk, so outer_idx stays valid
    return PlaneGraph(tuple(tuple(r) for r in rot), faces[outer_idx])


def gen_planar_3tree(n: int, seed: int) -> PlaneGraph:
    """Random maximal planar 3-tree (stacked triangulation).

    Stacking a degree-3 vertex into any face preserves the 3-tree property,
    so this shares its construction with gen_maximal_planar but draws from
    an independent seed stream.
    """
    if n < 3:
        raise InputError("planar 3-tree generation needs n >= 3")
    return gen_maximal_planar(n, seed ^ 0x3EE3)


def gen_maximal_outerplanar(n: int, seed: int) -> PlaneGraph:
    """Random maximal outerplanar graph via ear insertion on the outer cycle.

    All vertices stay on the outer face; E = 2n - 3 and all inner faces are
    triangles.
    """
    if n < 3:
        raise InputError("maximal outerplanar generation needs n >= 3")
    rng = random.Random(seed)
    rot: list[list[int]] = [[1, 2], [2, 0], [0, 1]]
    cycle = [0, 1, 2]
    for v in range(3, n):
        i = rng.randrange(len(cycle))
        ci, cj = cycle[i], cycle[(i + 1) % len(cycle)]
        rot[ci].insert(rot[ci].index(cj) + 1, v)
        rot[cj].insert(rot[cj].index(ci), v)
        rot.append([ci, cj])
        cycle.insert(i + 1, v)
    return PlaneGraph(tuple(tuple(r) for r in rot), tuple(cycle))


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def parse_plane_graph(text: str) -> PlaneGraph:
    """Parse the JSON graph format and validate the embedding."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"syntax error: {exc}") from None
    if not isinstance(data, dict):
        raise InputError("syntax error: top level must be an object")
    try:
        n = data["n"]
        rotations = data["rotations"]
        outer = data["outer_face"]
    except KeyError as exc:
        raise InputError(f"syntax error: missing key {exc}") from None
    if (
        not isinstance(n, int)
        or not isinstance(rotations, list)
        or not isinstance(outer, list)
        or len(rotations) != n
        or not all(
            isinstance(r, list) and all(isinstance(u, int) for u in r)
            for r in rotations
        )
        or not all(isinstance(u, int) for u in outer)
    ):
        raise InputError("syntax error: malformed graph object")
    g = PlaneGraph(tuple(tuple(r) for r in rotations), tuple(outer))
    validate(g)
    return g


def serialize_plane_graph(g: PlaneGraph) -> str:
    return json.dumps(g.to_json_dict(), sort_keys=True, separators=(",", ":"))
