"""Signed multigraphs: half-edge orientations, switching, and minor rewrites.

All values are immutable; every operation returns a fresh graph, so sharing
across threads is safe.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable, NamedTuple


class Edge(NamedTuple):
    """Undirected signed edge; slot 0 is the half-edge at ``u``, slot 1 at ``v``."""

    u: int
    v: int
    sign: int

    def is_loop(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True)
class SignedGraph:
    """Multigraph with a sign in {+1, -1} on every edge.

    Loops and parallel edges are allowed, as are edgeless and vertexless
    graphs.  Edge ids are positions in ``edges`` and stay dense (0..m-1)
    under deletion and contraction.
    """

    num_vertices: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.num_vertices < 0:
            raise ValueError(f"num_vertices must be nonnegative, got {self.num_vertices}")
        object.__setattr__(self, "edges", tuple(Edge(*e) for e in self.edges))
        for i, e in enumerate(self.edges):
            if not (0 <= e.u < self.num_vertices and 0 <= e.v < self.num_vertices):
                raise ValueError(
                    f"edge {i} has endpoint outside 0..{self.num_vertices - 1}: {e}"
                )
            if e.sign not in (1, -1):
                raise ValueError(f"edge {i} has sign {e.sign!r}, expected +1 or -1")

    @classmethod
    def from_edges(
        cls, num_vertices: int, triples: Iterable[tuple[int, int, int]]
    ) -> SignedGraph:
        return cls(num_vertices, tuple(Edge(u, v, s) for u, v, s in triples))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def negative_edge_ids(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.edges) if e.sign == -1)


@dataclass(frozen=True)
class Orientation:
    """Direction of every half-edge: ``taus[e]`` holds tau at slot 0 and slot 1.

    An orientation of a graph is valid when tau(e,0) * tau(e,1) == -sign(e)
    for every edge; +1 means the half-edge points toward its endpoint.
    """

    taus: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "taus", tuple(tuple(t) for t in self.taus))
        for i, (t0, t1) in enumerate(self.taus):
            if t0 not in (1, -1) or t1 not in (1, -1):
                raise ValueError(f"edge {i}: tau values must be +1 or -1, got {(t0, t1)}")

    def tau(self, edge_id: int, slot: int) -> int:
        return self.taus[edge_id][slot]

    def satisfies(self, g: SignedGraph) -> bool:
        return len(self.taus) == g.num_edges and all(
            t0 * t1 == -e.sign for (t0, t1), e in zip(self.taus, g.edges)
        )


def default_orientation(g: SignedGraph) -> Orientation:
    """Canonical orientation: tau(e,0) = -1 and tau(e,1) = sign(e).

    A positive edge then points u -> v like an ordinary digraph arc; a
    negative edge has both half-edges directed away from their endpoints.
    """
    return Orientation(tuple((-1, e.sign) for e in g.edges))


def reverse_edge(o: Orientation, edge_id: int) -> Orientation:
    """Negate both tau values of one edge; validity is preserved."""
    if not 0 <= edge_id < len(o.taus):
        raise ValueError(f"no edge with id {edge_id}")
    taus = list(o.taus)
    t0, t1 = taus[edge_id]
    taus[edge_id] = (-t0, -t1)
    return Orientation(tuple(taus))


def _check_edge_id(g: SignedGraph, edge_id: int) -> Edge:
    if not 0 <= edge_id < g.num_edges:
        raise ValueError(f"no edge with id {edge_id} (graph has {g.num_edges} edges)")
    return g.edges[edge_id]


def _check_edge_ids(g: SignedGraph, ids: Iterable[int]) -> frozenset[int]:
    out = frozenset(ids)
    for i in out:
        _check_edge_id(g, i)
    return out


def switch(g: SignedGraph, x: Iterable[int]) -> SignedGraph:
    """Negate the sign of every edge with exactly one endpoint in ``x``.

    Loops lie in no edge-cut and are never affected.
    """
    xs = frozenset(x)
    for v in xs:
        if not 0 <= v < g.num_vertices:
            raise ValueError(f"vertex {v} out of range 0..{g.num_vertices - 1}")
    edges = tuple(
        Edge(e.u, e.v, -e.sign if (e.u in xs) != (e.v in xs) else e.sign)
        for e in g.edges
    )
    return SignedGraph(g.num_vertices, edges)


def is_edge_cut(g: SignedGraph, d: Iterable[int]) -> bool:
    """Whether ``d`` equals delta(X) for some vertex subset X.

    Decided by 2-coloring: an edge in ``d`` forces its endpoints into
    different sides, any other edge forces them into the same side.  A loop
    has both ends on one side, so any ``d`` containing a loop fails.
    """
    ids = _check_edge_ids(g, d)
    for i in ids:
        if g.edges[i].is_loop():
            return False
    adj: list[list[tuple[int, bool]]] = [[] for _ in range(g.num_vertices)]
    for i, e in enumerate(g.edges):
        if e.is_loop():
            continue
        cut = i in ids
        adj[e.u].append((e.v, cut))
        adj[e.v].append((e.u, cut))
    side = [-1] * g.num_vertices
    for root in range(g.num_vertices):
        if side[root] != -1:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            w = stack.pop()
            for nb, cut in adj[w]:
                want = side[w] ^ 1 if cut else side[w]
                if side[nb] == -1:
                    side[nb] = want
                    stack.append(nb)
                elif side[nb] != want:
                    return False
    return True


def signatures_equivalent(g1: SignedGraph, g2: SignedGraph) -> bool:
    """Whether two signatures of the same underlying graph differ by an edge-cut."""
    same_underlying = (
        g1.num_vertices == g2.num_vertices
        and g1.num_edges == g2.num_edges
        and all((a.u, a.v) == (b.u, b.v) for a, b in zip(g1.edges, g2.edges))
    )
    if not same_underlying:
        raise ValueError("graphs have different underlying vertex/edge structure")
    diff = g1.negative_edge_ids() ^ g2.negative_edge_ids()
    return is_edge_cut(g1, diff)


def cycle_sign(g: SignedGraph, cycle: Iterable[int]) -> int:
    """Product of the signs of the given edges, each counted once."""
    sign = 1
    for i in _check_edge_ids(g, cycle):
        sign *= g.edges[i].sign
    return sign


def delete_edge(g: SignedGraph, edge_id: int) -> SignedGraph:
    """Remove one edge; later edge ids shift down by one, vertices unchanged."""
    _check_edge_id(g, edge_id)
    return SignedGraph(
        g.num_vertices, g.edges[:edge_id] + g.edges[edge_id + 1 :]
    )


def contract_edge(g: SignedGraph, edge_id: int) -> SignedGraph:
    """Merge the endpoints of a positive non-loop edge and drop the edge.

    The merged vertex takes the smaller endpoint index and higher-indexed
    vertices shift down, so the result is deterministic.  Parallel edges
    between the endpoints become loops and keep their signs.
    """
    e = _check_edge_id(g, edge_id)
    if e.is_loop():
        raise ValueError(f"edge {edge_id} is a loop and cannot be contracted")
    if e.sign != 1:
        raise ValueError(
            f"edge {edge_id} is negative; switch to an equivalent signature first"
        )
    a, b = min(e.u, e.v), max(e.u, e.v)

    def remap(w: int) -> int:
        if w == b:
            return a
        return w - 1 if w > b else w

    edges = tuple(
        Edge(remap(f.u), remap(f.v), f.sign)
        for i, f in enumerate(g.edges)
        if i != edge_id
    )
    return SignedGraph(g.num_vertices - 1, edges)


def make_edge_positive(g: SignedGraph, edge_id: int) -> SignedGraph:
    """Switch, if needed, so the given non-loop edge gets sign +1.

    Switching happens at the lower-indexed endpoint; the result is always
    signature-equivalent to the input.  A negative loop cannot be repaired
    this way since loops lie in no edge-cut.
    """
    e = _check_edge_id(g, edge_id)
    if e.is_loop():
        raise ValueError(f"edge {edge_id} is a loop; its sign is switching-invariant")
    if e.sign == 1:
        return g
    return switch(g, {min(e.u, e.v)})


def connected_components(g: SignedGraph) -> list[SignedGraph]:
    """Split into vertex-disjoint components, each densely relabeled.

    Components are ordered by their smallest original vertex; isolated
    vertices form singleton components.  Edge order is preserved within
    each component.
    """
    parent = list(range(g.num_vertices))

    def find(w: int) -> int:
        while parent[w] != w:
            parent[w] = parent[parent[w]]
            w = parent[w]
        return w

    for e in g.edges:
        ru, rv = find(e.u), find(e.v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)

    members: dict[int, list[int]] = {}
    for v in range(g.num_vertices):
        members.setdefault(find(v), []).append(v)

    out = []
    for root in sorted(members):
        verts = members[root]
        vmap = {old: new for new, old in enumerate(verts)}
        edges = tuple(
            Edge(vmap[e.u], vmap[e.v], e.sign) for e in g.edges if find(e.u) == root
        )
        out.append(SignedGraph(len(verts), edges))
    return out


def parse_graph_text(text: str) -> SignedGraph:
    """Parse the plain-text graph format.

    Line 1 (ignoring blanks and ``#`` comments) is ``vertices N``; each
    following line is ``edge u v +`` or ``edge u v -`` with 0-based vertex
    indices.  Edge ids are assigned in file order.
    """
    num_vertices: int | None = None
    triples: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if num_vertices is None:
            if len(fields) != 2 or fields[0] != "vertices":
                raise ValueError(f"line {lineno}: expected 'vertices N', got {line!r}")
            try:
                num_vertices = int(fields[1])
            except ValueError:
                raise ValueError(f"line {lineno}: vertex count {fields[1]!r} is not an integer") from None
            if num_vertices < 0:
                raise ValueError(f"line {lineno}: vertex count must be nonnegative")
            continue
        if len(fields) != 4 or fields[0] != "edge":
            raise ValueError(f"line {lineno}: expected 'edge u v <+|->', got {line!r}")
        try:
            u, v = int(fields[1]), int(fields[2])
        except ValueError:
            raise ValueError(f"line {lineno}: endpoints must be integers") from None
        if fields[3] not in ("+", "-"):
            raise ValueError(f"line {lineno}: sign must be '+' or '-', got {fields[3]!r}")
        triples.append((u, v, 1 if fields[3] == "+" else -1))
    if num_vertices is None:
        raise ValueError("missing 'vertices N' line")
    return SignedGraph.from_edges(num_vertices, triples)


def graph_to_text(g: SignedGraph) -> str:
    """Serialize to the plain-text format; inverse of :func:`parse_graph_text`."""
    lines = [f"vertices {g.num_vertices}"]
    lines.extend(f"edge {e.u} {e.v} {'+' if e.sign == 1 else '-'}" for e in g.edges)
    return "\n".join(lines) + "\n"


def graph_fingerprint(g: SignedGraph) -> str:
    """Stable digest of the graph's canonical text form."""
    return hashlib.sha256(graph_to_text(g).encode("ascii")).hexdigest()
