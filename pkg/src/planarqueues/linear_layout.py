"""Vertex orders, rainbow detection, queue layouts and their verification,
plus an exact brute-force queue-number oracle for small instances.

Edges are canonical (min, max) tuples throughout.  A queue layout pairs a
vertex order with an edge -> queue map such that no two independent edges
in one queue nest (one endpoint interval strictly inside the other).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import InputError
from .plane_graph import PlaneGraph

Edge = tuple[int, int]


def canon_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class VertexOrder:
    """Bijection vertex id -> position."""

    position: tuple[int, ...]

    def __post_init__(self):
        n = len(self.position)
        if sorted(self.position) != list(range(n)):
            raise InputError("vertex order positions are not a bijection")

    @classmethod
    def from_sequence(cls, seq: Sequence[int]) -> "VertexOrder":
        pos = [-1] * len(seq)
        for i, v in enumerate(seq):
            pos[v] = i
        return cls(tuple(pos))

    @property
    def n(self) -> int:
        return len(self.position)

    def sequence(self) -> list[int]:
        seq = [-1] * self.n
        for v, p in enumerate(self.position):
            seq[p] = v
        return seq

    def before(self, u: int, v: int) -> bool:
        return self.position[u] < self.position[v]


@dataclass
class QueueLayout:
    """A vertex order plus an edge -> queue assignment."""

    order: VertexOrder
    queue_of: dict[Edge, int]
    queue_count: int

    def queues(self) -> list[list[Edge]]:
        out: list[list[Edge]] = [[] for _ in range(self.queue_count)]
        for e in sorted(self.queue_of):
            out[self.queue_of[e]].append(e)
        return out

    def to_json_dict(self) -> dict:
        return {
            "order": self.order.sequence(),
            "queues": [[[u, v] for u, v in q] for q in self.queues()],
        }


@dataclass
class Verdict:
    """Outcome of a structural check, with human-readable violations."""

    ok: bool
    violations: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


# ---------------------------------------------------------------------------
# Rainbows and nesting depth
# ---------------------------------------------------------------------------


def _interval(order: VertexOrder, e: Edge) -> tuple[int, int]:
    a, b = order.position[e[0]], order.position[e[1]]
    return (a, b) if a < b else (b, a)


def is_nested(order: VertexOrder, e1: Edge, e2: Edge) -> bool:
    """True iff e1 and e2 are independent and one strictly contains the other."""
    if set(e1) & set(e2):
        return False
    l1, r1 = _interval(order, e1)
    l2, r2 = _interval(order, e2)
    return (l1 < l2 and r2 < r1) or (l2 < l1 and r1 < r2)


class _MaxBIT:
    """Fenwick tree for prefix maxima of (value, payload) pairs."""

    def __init__(self, size: int):
        self.size = size
        self.tree: list[tuple[int, int]] = [(0, -1)] * (size + 1)

    def update(self, i: int, value: tuple[int, int]) -> None:
        i += 1
        while i <= self.size:
            if value > self.tree[i]:
                self.tree[i] = value
            i += i & (-i)

    def query(self, i: int) -> tuple[int, int]:
        # max over indices [0, i]
        i += 1
        best = (0, -1)
        while i > 0:
            if self.tree[i] > best:
                best = self.tree[i]
            i -= i & (-i)
        return best


def _chain_depths(intervals: list[tuple[int, int]]) -> tuple[list[int], list[int]]:
    """For each interval, the longest strict-containment chain ending at it
    (the interval innermost).  Returns (depths, predecessor indices).

    Chains require left strictly increasing and right strictly decreasing,
    which also enforces endpoint disjointness.
    """
    m = len(intervals)
    depths = [0] * m
    preds = [-1] * m
    if m == 0:
        return depths, preds
    rights = sorted({r for _, r in intervals}, reverse=True)
    rank = {r: i for i, r in enumerate(rights)}  # larger right -> smaller rank
    bit = _MaxBIT(len(rights))
    idx_sorted = sorted(range(m), key=lambda i: (intervals[i][0], intervals[i][1]))
    i = 0
    while i < m:
        j = i
        left = intervals[idx_sorted[i]][0]
        while j < m and intervals[idx_sorted[j]][0] == left:
            j += 1
        group = idx_sorted[i:j]
        for k in group:
            r = intervals[k][1]
            # strictly larger rights = ranks strictly smaller than rank[r]
            best, who = bit.query(rank[r] - 1) if rank[r] > 0 else (0, -1)
            depths[k] = best + 1
            preds[k] = who
        for k in group:
            bit.update(rank[intervals[k][1]], (depths[k], k))
        i = j
    return depths, preds


def max_rainbow(
    order: VertexOrder, edges: Iterable[Edge]
) -> tuple[int, list[Edge]]:
    """Largest set of pairwise nested independent edges, with a witness."""
    es = sorted({canon_edge(*e) for e in edges})
    if not es:
        return 0, []
    intervals = [_interval(order, e) for e in es]
    depths, preds = _chain_depths(intervals)
    best = max(range(len(es)), key=lambda i: depths[i])
    witness = []
    i = best
    while i >= 0:
        witness.append(es[i])
        i = preds[i]
    witness.reverse()  # outermost first
    return depths[best], witness


def nesting_depths(order: VertexOrder, edges: Iterable[Edge]) -> dict[Edge, int]:
    """Depth of each edge: size of the largest rainbow having it innermost."""
    es = sorted({canon_edge(*e) for e in edges})
    intervals = [_interval(order, e) for e in es]
    depths, _ = _chain_depths(intervals)
    return dict(zip(es, depths))


def assign_by_depth(order: VertexOrder, edges: Iterable[Edge]) -> QueueLayout:
    """Queue layout with queue_of(e) = nesting depth of e minus one.

    Two edges of equal depth cannot nest (nesting increments depth), so the
    number of queues equals the maximum rainbow size.
    """
    depths = nesting_depths(order, edges)
    queue_of = {e: d - 1 for e, d in depths.items()}
    count = max(depths.values(), default=0)
    return QueueLayout(order, queue_of, count)


def verify_queue_layout(
    layout: QueueLayout, edges: Iterable[Edge], max_violations: int = 50
) -> Verdict:
    """Check the no-nesting contract of every queue.

    Fast path is a rainbow scan per queue; offending pairs are enumerated
    only on failure, capped at `max_violations`.
    """
    es = sorted({canon_edge(*e) for e in edges})
    violations: list[str] = []
    missing = [e for e in es if e not in layout.queue_of]
    if missing:
        violations.append(f"{len(missing)} edges lack a queue, e.g. {missing[0]}")
    for e, q in layout.queue_of.items():
        if not (0 <= q < layout.queue_count):
            violations.append(f"edge {e} assigned out-of-range queue {q}")
    by_queue: dict[int, list[Edge]] = {}
    for e in es:
        q = layout.queue_of.get(e)
        if q is not None:
            by_queue.setdefault(q, []).append(e)
    for q in sorted(by_queue):
        qes = by_queue[q]
        size, _ = max_rainbow(layout.order, qes)
        if size >= 2:
            found = 0
            for i in range(len(qes)):
                for j in range(i + 1, len(qes)):
                    if is_nested(layout.order, qes[i], qes[j]):
                        violations.append(
                            f"queue {q}: edges {qes[i]} and {qes[j]} nest"
                        )
                        found += 1
                        if found >= max_violations:
                            break
                if found >= max_violations:
                    break
    return Verdict(not violations, violations)


# ---------------------------------------------------------------------------
# Exact queue number (brute force with pruning)
# ---------------------------------------------------------------------------


def exact_queue_layout(
    n: int, edges: Iterable[Edge], n_limit: int = 9
) -> tuple[int, VertexOrder]:
    """Minimum max-rainbow over all vertex orders, with a witnessing order.

    Branch-and-bound over order prefixes: an edge completes when its second
    endpoint is placed, and a completed edge's chain depth is final because
    anything nested inside it completed earlier.  Prefixes whose running
    rainbow already matches the incumbent are cut; orders that are reverses
    of explored ones are skipped.
    """
    if n > n_limit:
        raise InputError(
            f"instance too large for exact search: n={n} > limit {n_limit}"
        )
    es = sorted({canon_edge(*e) for e in edges})
    if not es:
        return 0, VertexOrder.from_sequence(list(range(n)))
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in es:
        adj[u].append(v)
        adj[v].append(u)

    ident = VertexOrder.from_sequence(list(range(n)))
    best_k = assign_by_depth(ident, es).queue_count
    best_order = ident

    pos = [-1] * n
    placed: list[int] = []
    completed: list[tuple[int, int, int]] = []  # (left, right, depth)
    max_stack = [0]

    def dfs() -> None:
        nonlocal best_k, best_order
        depth_here = max_stack[-1]
        if depth_here >= best_k:
            return
        p = len(placed)
        if p == n:
            best_k = depth_here
            best_order = VertexOrder.from_sequence(list(placed))
            return
        for v in range(n):
            if pos[v] >= 0:
                continue
            if p == n - 1 and placed and v < placed[0]:
                continue  # reverse of an explored order
            pos[v] = p
            placed.append(v)
            added = 0
            new_max = max_stack[-1]
            for u in adj[v]:
                lu = pos[u]
                if 0 <= lu < p:
                    d = 1
                    for (l2, r2, d2) in completed:
                        if lu < l2 and r2 < p and d2 + 1 > d:
                            d = d2 + 1
                    completed.append((lu, p, d))
                    added += 1
                    if d > new_max:
                        new_max = d
            max_stack.append(new_max)
            dfs()
            max_stack.pop()
            for _ in range(added):
                completed.pop()
            placed.pop()
            pos[v] = -1

    dfs()
    return best_k, best_order


def exact_queue_number(
    graph_or_edges: PlaneGraph | Iterable[Edge],
    n_limit: int = 9,
    n: Optional[int] = None,
) -> int:
    """qn(G): the minimum k over all vertex orders (exact, small n only)."""
    if isinstance(graph_or_edges, PlaneGraph):
        nn = graph_or_edges.n
        es = graph_or_edges.edges()
    else:
        es = [canon_edge(*e) for e in graph_or_edges]
        nn = n if n is not None else (max((max(e) for e in es), default=-1) + 1)
    k, _ = exact_queue_layout(nn, es, n_limit=n_limit)
    return k


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def serialize_layout(layout: QueueLayout) -> str:
    return json.dumps(layout.to_json_dict(), sort_keys=True, separators=(",", ":"))


def parse_layout(text: str) -> QueueLayout:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"syntax error: {exc}") from None
    try:
        seq = data["order"]
        queues = data["queues"]
    except (TypeError, KeyError) as exc:
        raise InputError(f"syntax error: bad layout object ({exc})") from None
    if not isinstance(seq, list) or not isinstance(queues, list):
        raise InputError("syntax error: bad layout object")
    order = VertexOrder.from_sequence(seq)
    queue_of: dict[Edge, int] = {}
    for qi, q in enumerate(queues):
        for pair in q:
            if not (isinstance(pair, list) and len(pair) == 2):
                raise InputError("syntax error: bad queue entry")
            e = canon_edge(pair[0], pair[1])
            if e in queue_of:
                raise InputError(f"edge {e} assigned to two queues")
            queue_of[e] = qi
    return QueueLayout(order, queue_of, len(queues))
