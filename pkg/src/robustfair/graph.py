"""Directed graphs, reachability under edge faults, and maximally disjoint strands.

The strand machinery is the skeleton of the single-pair dual fault-tolerant
preserver: two s-t paths that overlap only where the graph forces them to
(s-t cut edges and cut vertices), plus "coupling" side paths between them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .errors import InputError

Edge = tuple[int, int]


@dataclass(frozen=True)
class DirectedGraph:
    """Immutable digraph on vertices 0..n-1 with no duplicate edges."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"vertex count must be non-negative, got {self.n}")
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge ({u},{v}) out of range for n={self.n}")
            if (u, v) in seen:
                raise InputError(f"duplicate edge ({u},{v})")
            seen.add((u, v))

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def successors(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            out[u].append(v)
        return tuple(tuple(sorted(vs)) for vs in out)

    @cached_property
    def predecessors(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            inc[v].append(u)
        return tuple(tuple(sorted(us)) for us in inc)

    def without_edges(self, removed: Iterable[Edge]) -> "DirectedGraph":
        dropped = set(removed)
        return DirectedGraph(self.n, tuple(e for e in self.edges if e not in dropped))

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise InputError(f"vertex {v} out of range for n={self.n}")


@dataclass(frozen=True)
class Path:
    """A directed trail given by its vertex sequence; edges are consecutive pairs."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))
        if not self.vertices:
            raise InputError("a path needs at least one vertex")
        if len(set(self.edges)) != len(self.edges):
            raise InputError("path repeats an edge")

    @property
    def edges(self) -> tuple[Edge, ...]:
        vs = self.vertices
        return tuple((vs[i], vs[i + 1]) for i in range(len(vs) - 1))

    @property
    def first(self) -> int:
        return self.vertices[0]

    @property
    def last(self) -> int:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.vertices)

    def validate_in(self, g: DirectedGraph) -> None:
        for e in self.edges:
            if e not in g.edge_set:
                raise InputError(f"path edge {e} not present in host graph")


@dataclass(frozen=True)
class StrandDecomposition:
    """Two maximally disjoint s-t strands; they overlap exactly on cut edges/vertices."""

    strand1: Path
    strand2: Path
    pair: Edge

    @property
    def shared_edges(self) -> frozenset[Edge]:
        return frozenset(self.strand1.edges) & frozenset(self.strand2.edges)

    @property
    def shared_internal_vertices(self) -> frozenset[int]:
        s, t = self.pair
        both = set(self.strand1.vertices) & set(self.strand2.vertices)
        return frozenset(both - {s, t})

    @property
    def strand_edges(self) -> frozenset[Edge]:
        return frozenset(self.strand1.edges) | frozenset(self.strand2.edges)

    @property
    def strand_vertices(self) -> frozenset[int]:
        return frozenset(self.strand1.vertices) | frozenset(self.strand2.vertices)


def reachable(g: DirectedGraph, s: int, t: int, faults: Iterable[Edge] = ()) -> bool:
    """True iff a directed s->t path survives after removing the fault edges."""
    g.check_vertex(s)
    g.check_vertex(t)
    fault_set = set()
    for e in faults:
        e = (int(e[0]), int(e[1]))
        if e not in g.edge_set:
            raise InputError(f"fault edge {e} is not an edge of the graph")
        fault_set.add(e)
    if s == t:
        return True
    seen = bytearray(g.n)
    seen[s] = 1
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for v in g.successors[u]:
            if seen[v] or (u, v) in fault_set:
                continue
            if v == t:
                return True
            seen[v] = 1
            queue.append(v)
    return False


# ---------------------------------------------------------------------------
# Maximally disjoint strands via min-cost flow.
#
# Each vertex v (other than s, t) is split into v_in -> v_out with two unit
# arcs: the second passage costs 1.  Each original edge gets two unit arcs,
# the second costing EDGE_BIG.  A min-cost 2-unit flow therefore shares an
# edge only when it is an s-t cut edge and a vertex only when it is an s-t
# cut vertex: those sharings are forced in every pair of s-t paths, and a
# pair avoiding all other sharing exists, so the optimum cannot do worse.
# ---------------------------------------------------------------------------


class _FlowNet:
    def __init__(self, num_nodes: int):
        self.adj: list[list[int]] = [[] for _ in range(num_nodes)]
        # arcs stored flat: to, cap, cost; arc i^1 is the reverse of arc i
        self.to: list[int] = []
        self.cap: list[int] = []
        self.cost: list[int] = []
        self.meta: list[Optional[tuple]] = []

    def add(self, u: int, v: int, cap: int, cost: int, meta: Optional[tuple]) -> int:
        idx = len(self.to)
        self.to.append(v)
        self.cap.append(cap)
        self.cost.append(cost)
        self.meta.append(meta)
        self.adj[u].append(idx)
        self.to.append(u)
        self.cap.append(0)
        self.cost.append(-cost)
        self.meta.append(None)
        self.adj[v].append(idx + 1)
        return idx

    def shortest_augment(self, src: int, dst: int) -> bool:
        """One successive-shortest-path augmentation (Bellman-Ford, deterministic)."""
        big = float("inf")
        dist = [big] * len(self.adj)
        pred_arc: list[int] = [-1] * len(self.adj)
        dist[src] = 0
        in_queue = [False] * len(self.adj)
        queue = deque([src])
        in_queue[src] = True
        while queue:
            u = queue.popleft()
            in_queue[u] = False
            for idx in self.adj[u]:
                if self.cap[idx] <= 0:
                    continue
                v = self.to[idx]
                nd = dist[u] + self.cost[idx]
                if nd < dist[v]:
                    dist[v] = nd
                    pred_arc[v] = idx
                    if not in_queue[v]:
                        queue.append(v)
                        in_queue[v] = True
        if dist[dst] == big:
            return False
        v = dst
        while v != src:
            idx = pred_arc[v]
            self.cap[idx] -= 1
            self.cap[idx ^ 1] += 1
            v = self.to[idx ^ 1]
        return True


def _walks_from_flow(net: _FlowNet, src: int, dst: int, units: int) -> list[list[int]]:
    """Decompose the computed flow into `units` s-t vertex walks, trimming loops."""
    flow_out: list[list[int]] = [[] for _ in range(len(net.adj))]
    for u in range(len(net.adj)):
        for idx in net.adj[u]:
            if idx % 2 == 0 and net.cap[idx ^ 1] > 0:  # forward arc carrying flow
                flow_out[u].append(idx)
    remaining = {idx: net.cap[idx ^ 1] for u in range(len(net.adj)) for idx in flow_out[u]}

    walks = []
    for _ in range(units):
        verts: list[int] = []
        pos: dict[int, int] = {}
        node = src
        while True:
            meta_v = None
            # pick the carried arc with the smallest annotated target, for stability
            best = None
            for idx in flow_out[node]:
                if remaining[idx] <= 0:
                    continue
                key = (net.meta[idx] is None, net.meta[idx], idx)
                if best is None or key < best[0]:
                    best = (key, idx)
            assert best is not None, "flow conservation violated during decomposition"
            idx = best[1]
            remaining[idx] -= 1
            meta_v = net.meta[idx]
            if meta_v is not None and meta_v[0] == "edge":
                v = meta_v[2]
                if v in pos:  # excise the loop; its flow stays consumed
                    cut = pos[v]
                    for w in verts[cut + 1 :]:
                        pos.pop(w, None)
                    del verts[cut + 1 :]
                else:
                    if not verts:
                        verts.append(meta_v[1])
                        pos[meta_v[1]] = 0
                    verts.append(v)
                    pos[v] = len(verts) - 1
            node = net.to[idx]
            if node == dst:
                break
        walks.append(verts)
    return walks


def two_maximally_disjoint_paths(
    g: DirectedGraph, s: int, t: int
) -> Optional[StrandDecomposition]:
    """Compute two s->t strands meeting only at s-t cut edges and cut vertices.

    Returns None when t is unreachable from s.  Deterministic: ties in the
    underlying min-cost flow are broken by vertex id.
    """
    g.check_vertex(s)
    g.check_vertex(t)
    if s == t:
        p = Path((s,))
        return StrandDecomposition(p, p, (s, t))
    if not reachable(g, s, t):
        return None

    def node_in(v: int) -> int:
        return 2 * v

    def node_out(v: int) -> int:
        return 2 * v + 1

    edge_big = g.n + 3  # outweighs any possible total of vertex-sharing costs
    net = _FlowNet(2 * g.n)
    for v in range(g.n):
        if v == s or v == t:
            continue
        net.add(node_in(v), node_out(v), 1, 0, ("vert", v))
        net.add(node_in(v), node_out(v), 1, 1, ("vert", v))
    for u, v in g.edges:
        net.add(node_out(u), node_in(v), 1, 0, ("edge", u, v))
        net.add(node_out(u), node_in(v), 1, edge_big, ("edge", u, v))

    src, dst = node_out(s), node_in(t)
    for unit in range(2):
        ok = net.shortest_augment(src, dst)
        assert ok, "second unit must always route once edge duplicates exist"

    w1, w2 = _walks_from_flow(net, src, dst, 2)
    p1 = Path(tuple(w1))
    p2 = Path(tuple(w2))
    if p2.vertices < p1.vertices:
        p1, p2 = p2, p1
    return StrandDecomposition(p1, p2, (s, t))


@dataclass(frozen=True)
class CouplingPoints:
    """Earliest strand vertices that reach v while avoiding all strand edges.

    `pointK`/`pathK` refer to strand K of the decomposition.  A vertex lying
    on a strand is always its own coupling point there, via the empty path.
    """

    point1: Optional[int]
    path1: Optional[Path]
    point2: Optional[int]
    path2: Optional[Path]

    @property
    def points(self) -> tuple[Optional[int], Optional[int]]:
        return (self.point1, self.point2)


def _reach_to_target(g: DirectedGraph, banned: frozenset[Edge], v: int) -> dict[int, int]:
    """BFS on reversed edges from v avoiding banned edges; maps u -> next hop toward v."""
    nxt = {v: v}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for u in g.predecessors[x]:
            if u in nxt or (u, x) in banned:
                continue
            nxt[u] = x
            queue.append(u)
    return nxt


def _witness(nxt: dict[int, int], u: int, v: int) -> Path:
    verts = [u]
    while verts[-1] != v:
        verts.append(nxt[verts[-1]])
    return Path(tuple(verts))


def earliest_coupling_points(
    g: DirectedGraph, strands: StrandDecomposition, v: int
) -> CouplingPoints:
    """Coupling points of v on each strand, with one witness path apiece."""
    g.check_vertex(v)
    if v not in strands.strand_vertices:
        raise InputError(f"vertex {v} does not lie on either strand")
    banned = strands.strand_edges
    nxt = _reach_to_target(g, banned, v)
    found: list[tuple[Optional[int], Optional[Path]]] = []
    for strand in (strands.strand1, strands.strand2):
        hit: tuple[Optional[int], Optional[Path]] = (None, None)
        for u in strand.vertices:
            if u in nxt:
                hit = (u, _witness(nxt, u, v))
                break
        found.append(hit)
    return CouplingPoints(found[0][0], found[0][1], found[1][0], found[1][1])
