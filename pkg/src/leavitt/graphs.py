"""Finite directed multigraphs and the path analyses the algebra layer relies on.

Vertices and edges are identified by string labels.  Declaration order is
significant: it fixes the rewrite pivot per vertex (see ``Graph.special_edge``)
and makes every witness this library produces deterministic.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import GraphError, PathError, PreconditionError

__all__ = [
    "Edge",
    "Graph",
    "Path",
    "CspTag",
    "CspClass",
    "make_graph",
    "build_named",
    "line_graph",
    "rose_graph",
    "rose_with_tail",
    "reaches",
    "is_acyclic",
    "cycle_vertices",
    "cycles_no_exit",
    "cycle_connect_violations",
    "csp_class",
    "csp_pair",
    "initial_subgraph",
    "downstream",
]


@dataclass(frozen=True)
class Edge:
    """A directed edge: ``label`` runs from vertex ``src`` to vertex ``dst``."""

    label: str
    src: str
    dst: str


@dataclass(frozen=True)
class Path:
    """A composable edge sequence, or an empty path sitting at ``anchor``.

    ``anchor`` is always the source vertex; for the empty path it is also the
    range.  Paths are plain data: validation and range computation live on
    ``Graph`` because they need the edge table.
    """

    anchor: str
    edges: tuple[str, ...] = ()

    def __len__(self):
        return len(self.edges)

    @property
    def is_vertex(self) -> bool:
        return not self.edges


@dataclass(frozen=True)
class Graph:
    """A finite directed multigraph with ordered, uniquely labelled parts.

    Parallel edges and self-loops are allowed.  Vertex and edge labels live in
    one namespace so that element expressions resolve unambiguously.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        seen = set()
        for v in self.vertices:
            if v in seen:
                raise GraphError(f"duplicate vertex label {v!r}")
            seen.add(v)
        vertex_set = seen
        labels = set()
        for e in self.edges:
            if e.label in labels:
                raise GraphError(f"duplicate edge label {e.label!r}")
            if e.label in vertex_set:
                raise GraphError(f"label {e.label!r} used for both a vertex and an edge")
            labels.add(e.label)
            if e.src not in vertex_set:
                raise GraphError(f"unknown vertex {e.src!r} as source of edge {e.label!r}")
            if e.dst not in vertex_set:
                raise GraphError(f"unknown vertex {e.dst!r} as range of edge {e.label!r}")

    # -- lookup tables ----------------------------------------------------

    @cached_property
    def _edge_map(self) -> dict[str, Edge]:
        return {e.label: e for e in self.edges}

    @cached_property
    def _out(self) -> dict[str, tuple[Edge, ...]]:
        table: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            table[e.src].append(e)
        return {v: tuple(es) for v, es in table.items()}

    @cached_property
    def _in(self) -> dict[str, tuple[Edge, ...]]:
        table: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            table[e.dst].append(e)
        return {v: tuple(es) for v, es in table.items()}

    @cached_property
    def _vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    # -- basic queries -----------------------------------------------------

    def has_vertex(self, v: str) -> bool:
        return v in self._vertex_index

    def check_vertex(self, v: str) -> str:
        if v not in self._vertex_index:
            raise GraphError(f"unknown vertex {v!r}")
        return v

    def vertex_index(self, v: str) -> int:
        self.check_vertex(v)
        return self._vertex_index[v]

    def edge(self, label: str) -> Edge:
        try:
            return self._edge_map[label]
        except KeyError:
            raise GraphError(f"unknown edge {label!r}") from None

    def has_edge(self, label: str) -> bool:
        return label in self._edge_map

    def out_edges(self, v: str) -> tuple[Edge, ...]:
        self.check_vertex(v)
        return self._out[v]

    def in_edges(self, v: str) -> tuple[Edge, ...]:
        self.check_vertex(v)
        return self._in[v]

    def out_degree(self, v: str) -> int:
        return len(self.out_edges(v))

    def is_sink(self, v: str) -> bool:
        return not self.out_edges(v)

    def sinks(self) -> tuple[str, ...]:
        return tuple(v for v in self.vertices if not self._out[v])

    def special_edge(self, v: str) -> Optional[Edge]:
        """The designated out-edge of ``v`` (last in declared order), if any.

        The algebra layer eliminates ``e e*`` for this edge via the vertex
        relation; every other out-edge keeps its ``f f*`` monomial.
        """
        out = self.out_edges(v)
        return out[-1] if out else None

    # -- paths --------------------------------------------------------------

    def path(self, edges: Iterable[str] = (), at: Optional[str] = None) -> Path:
        """Build a validated path from edge labels, or an empty path ``at`` a vertex."""
        labels = tuple(edges)
        if not labels:
            if at is None:
                raise PathError("empty path needs an anchor vertex")
            return Path(self.check_vertex(at))
        head = self.edge(labels[0])
        if at is not None and at != head.src:
            raise PathError(f"anchor {at!r} does not match source {head.src!r}")
        prev = head
        for label in labels[1:]:
            e = self.edge(label)
            if e.src != prev.dst:
                raise PathError(
                    f"edges {prev.label!r} and {e.label!r} do not compose "
                    f"({prev.dst!r} != {e.src!r})"
                )
            prev = e
        return Path(head.src, labels)

    def check_path(self, p: Path) -> Path:
        """Validate a raw ``Path`` against this graph."""
        rebuilt = self.path(p.edges, at=p.anchor if p.is_vertex else None)
        if not p.is_vertex and p.anchor != rebuilt.anchor:
            raise PathError(f"path anchor {p.anchor!r} does not match its first edge")
        return rebuilt

    def path_range(self, p: Path) -> str:
        return p.anchor if p.is_vertex else self.edge(p.edges[-1]).dst

    def path_vertices(self, p: Path) -> tuple[str, ...]:
        """Vertex itinerary of ``p``, source first."""
        verts = [p.anchor]
        for label in p.edges:
            verts.append(self.edge(label).dst)
        return tuple(verts)


def make_graph(vertices: Sequence[str], edges: Iterable[tuple[str, str, str]]) -> Graph:
    """Convenience constructor taking ``(label, src, dst)`` triples."""
    return Graph(tuple(vertices), tuple(Edge(*t) for t in edges))


# -- named constructions ----------------------------------------------------


def line_graph(n: int) -> Graph:
    """The n-vertex chain: v1 -> v2 -> ... -> vn along edges y1 ... y(n-1)."""
    if n < 1:
        raise PreconditionError("line graph needs n >= 1")
    vertices = [f"v{i}" for i in range(1, n + 1)]
    edges = [(f"y{i}", f"v{i}", f"v{i + 1}") for i in range(1, n)]
    return make_graph(vertices, edges)


def rose_graph(n: int) -> Graph:
    """One vertex ``v`` carrying n self-loops y1 ... yn."""
    if n < 1:
        raise PreconditionError("rose graph needs n >= 1")
    return make_graph(["v"], [(f"y{i}", "v", "v") for i in range(1, n + 1)])


def rose_with_tail(n: int, m: int) -> Graph:
    """An m-vertex chain (edges e1 ... e(m-1)) feeding n loops f1 ... fn at the last vertex."""
    if n < 2:
        raise PreconditionError("rose_with_tail needs n >= 2")
    if m < 1:
        raise PreconditionError("rose_with_tail needs m >= 1")
    vertices = [f"v{i}" for i in range(1, m + 1)]
    edges = [(f"e{i}", f"v{i}", f"v{i + 1}") for i in range(1, m)]
    edges += [(f"f{i}", f"v{m}", f"v{m}") for i in range(1, n + 1)]
    return make_graph(vertices, edges)


def build_named(kind: str, *params: int) -> Graph:
    """Dispatch on a named construction: ``line``, ``rose``, or ``enm``."""
    if kind == "line":
        (n,) = params
        return line_graph(n)
    if kind == "rose":
        (n,) = params
        return rose_graph(n)
    if kind == "enm":
        n, m = params
        return rose_with_tail(n, m)
    raise PreconditionError(f"unknown named graph kind {kind!r}")


# -- reachability and cycles -------------------------------------------------


def reaches(g: Graph, v: str, w: str) -> bool:
    """True iff ``w == v`` or some path runs from ``v`` to ``w``."""
    g.check_vertex(v)
    g.check_vertex(w)
    if v == w:
        return True
    return w in _reachable_from(g, (v,))


def _reachable_from(g: Graph, starts: Iterable[str], skip: Optional[str] = None) -> set[str]:
    """Vertices reachable from ``starts`` (inclusive), never stepping through ``skip``."""
    seen: set[str] = set()
    queue = deque(s for s in starts if s != skip)
    seen.update(queue)
    while queue:
        u = queue.popleft()
        for e in g.out_edges(u):
            if e.dst != skip and e.dst not in seen:
                seen.add(e.dst)
                queue.append(e.dst)
    return seen


def _coreachable_to(g: Graph, targets: Iterable[str], skip: Optional[str] = None) -> set[str]:
    seen: set[str] = set()
    queue = deque(t for t in targets if t != skip)
    seen.update(queue)
    while queue:
        u = queue.popleft()
        for e in g.in_edges(u):
            if e.src != skip and e.src not in seen:
                seen.add(e.src)
                queue.append(e.src)
    return seen


def is_acyclic(g: Graph) -> bool:
    """True iff no vertex lies on a nontrivial closed walk (Kahn peeling)."""
    indeg = {v: len(g.in_edges(v)) for v in g.vertices}
    queue = deque(v for v in g.vertices if indeg[v] == 0)
    removed = 0
    while queue:
        u = queue.popleft()
        removed += 1
        for e in g.out_edges(u):
            indeg[e.dst] -= 1
            if indeg[e.dst] == 0:
                queue.append(e.dst)
    return removed == len(g.vertices)


def cycle_vertices(g: Graph) -> frozenset[str]:
    """All vertices lying on some cycle."""
    on_cycle = set()
    for v in g.vertices:
        for e in g.out_edges(v):
            if e.dst == v or reaches(g, e.dst, v):
                on_cycle.add(v)
                break
    return frozenset(on_cycle)


def _canonical_rotation(labels: tuple[str, ...]) -> tuple[str, ...]:
    rotations = [labels[i:] + labels[:i] for i in range(len(labels))]
    return min(rotations)


def cycles_no_exit(g: Graph) -> tuple[Path, ...]:
    """Every cycle none of whose vertices emits a second edge.

    A cycle lacks an exit exactly when each of its vertices has out-degree 1,
    so the exitless cycles are the cycles of the partial functional graph of
    out-degree-1 vertices.  Disjoint by construction; returned sorted by
    (length, edge labels), each rotated to its least edge-label sequence.
    """
    succ = {v: g.out_edges(v)[0] for v in g.vertices if g.out_degree(v) == 1}
    state: dict[str, int] = {}  # 0 in progress, 1 done
    found: list[tuple[str, ...]] = []
    for start in g.vertices:
        if start not in succ or start in state:
            continue
        trail: list[str] = []
        u = start
        while u in succ and u not in state:
            state[u] = 0
            trail.append(u)
            u = succ[u].dst
        if u in succ and state.get(u) == 0:
            # walked into our own trail: the tail from u onward is a cycle
            cycle_nodes = trail[trail.index(u):]
            found.append(tuple(succ[w].label for w in cycle_nodes))
        for w in trail:
            state[w] = 1
    canon = sorted({_canonical_rotation(c) for c in found}, key=lambda c: (len(c), c))
    return tuple(g.path(c) for c in canon)


def cycle_connect_violations(g: Graph) -> frozenset[str]:
    """Vertices from which no cycle vertex is reachable."""
    on_cycle = cycle_vertices(g)
    bad = set()
    for v in g.vertices:
        if not (_reachable_from(g, (v,)) & on_cycle):
            bad.add(v)
    return frozenset(bad)


# -- closed simple paths ------------------------------------------------------


class CspTag(enum.Enum):
    """How many closed simple paths are based at a vertex: 0, 1, or at least 2."""

    ZERO = "zero"
    ONE = "one"
    TWO_OR_MORE = "two_or_more"


@dataclass(frozen=True)
class CspClass:
    tag: CspTag
    witnesses: tuple[Path, ...]


def _csp_census(g: Graph, v: str) -> int:
    """Count closed simple paths based at ``v``, saturating at 2.

    A closed simple path leaves ``v`` once and returns once, so between its
    first and last edge it walks the graph with ``v`` deleted.  Restrict that
    interior to vertices that are both reachable from an out-neighbour and
    co-reachable to an in-neighbour; if the restriction has a cycle the count
    is infinite, otherwise it is a finite walk count over a DAG.
    """
    loops = sum(1 for e in g.out_edges(v) if e.dst == v)
    if loops >= 2:
        return 2
    entries = [e for e in g.out_edges(v) if e.dst != v]
    exits = [e for e in g.in_edges(v) if e.src != v]
    if not entries or not exits:
        return min(loops, 2)
    reach = _reachable_from(g, (e.dst for e in entries), skip=v)
    coreach = _coreachable_to(g, (e.src for e in exits), skip=v)
    useful = reach & coreach
    if not useful:
        return min(loops, 2)
    inner = [e for e in g.edges if e.src in useful and e.dst in useful]
    if not _edges_acyclic(useful, inner):
        return 2
    # saturated walk counts over the interior DAG, one sweep per exit target
    total = loops
    targets = {e.src for e in exits}
    counts: dict[str, dict[str, int]] = {}
    for t in targets:
        if t not in useful:
            continue
        counts[t] = _saturated_walk_counts(useful, inner, t)
    for e in entries:
        for f in exits:
            total += counts.get(f.src, {}).get(e.dst, 0)
            if total >= 2:
                return 2
    return total


def _edges_acyclic(vertices: set[str], edges: list[Edge]) -> bool:
    indeg = {v: 0 for v in vertices}
    for e in edges:
        indeg[e.dst] += 1
    out: dict[str, list[Edge]] = {v: [] for v in vertices}
    for e in edges:
        out[e.src].append(e)
    queue = deque(v for v in vertices if indeg[v] == 0)
    removed = 0
    while queue:
        u = queue.popleft()
        removed += 1
        for e in out[u]:
            indeg[e.dst] -= 1
            if indeg[e.dst] == 0:
                queue.append(e.dst)
    return removed == len(vertices)


def _saturated_walk_counts(vertices: set[str], edges: list[Edge], target: str) -> dict[str, int]:
    """Walk counts from each vertex to ``target`` in an acyclic edge set, capped at 2."""
    out: dict[str, list[Edge]] = {v: [] for v in vertices}
    for e in edges:
        out[e.src].append(e)
    # reverse-topological order via Kahn on out-degree
    outdeg = {v: len(out[v]) for v in vertices}
    queue = deque(v for v in vertices if outdeg[v] == 0)
    order = []
    incoming: dict[str, list[Edge]] = {v: [] for v in vertices}
    for e in edges:
        incoming[e.dst].append(e)
    while queue:
        u = queue.popleft()
        order.append(u)
        for e in incoming[u]:
            outdeg[e.src] -= 1
            if outdeg[e.src] == 0:
                queue.append(e.src)
    counts = {v: 0 for v in vertices}
    for u in order:
        c = 1 if u == target else 0
        for e in out[u]:
            c += counts[e.dst]
        counts[u] = min(c, 2)
    return counts


def csp_enumeration_bound(g: Graph) -> int:
    """Safe length bound: enumeration below it decides the 0/1/2+ trichotomy."""
    return (len(g.edges) + 1) * (len(g.vertices) + 1)


def _enumerate_csp(g: Graph, v: str, needed: int, bound: Optional[int] = None) -> list[Path]:
    """The ``needed`` first closed simple paths at ``v`` in (length, labels) order."""
    if bound is None:
        bound = csp_enumeration_bound(g)
    coreach = _coreachable_to(g, (e.src for e in g.in_edges(v)), skip=v)
    coreach.add(v)
    found: list[Path] = []

    def extend(prefix: list[str], current: str, remaining: int):
        if len(found) >= needed:
            return
        for e in sorted(g.out_edges(current), key=lambda e: e.label):
            if len(found) >= needed:
                return
            if e.dst == v:
                if remaining == 1:
                    found.append(g.path(prefix + [e.label]))
                continue
            if remaining > 1 and e.dst in coreach:
                extend(prefix + [e.label], e.dst, remaining - 1)

    for length in range(1, bound + 1):
        extend([], v, length)
        if len(found) >= needed:
            break
    return found[:needed]


def csp_class(g: Graph, v: str) -> CspClass:
    """Decide whether 0, 1, or at least 2 closed simple paths are based at ``v``.

    Witnesses (one for the singleton case, the two least for the rich case)
    come from bounded enumeration, ordered by length then edge labels.
    """
    g.check_vertex(v)
    census = _csp_census(g, v)
    if census == 0:
        return CspClass(CspTag.ZERO, ())
    needed = 1 if census == 1 else 2
    witnesses = _enumerate_csp(g, v, needed)
    if len(witnesses) != needed:
        raise LookupError(f"internal: census {census} but found {len(witnesses)} witnesses")
    tag = CspTag.ONE if census == 1 else CspTag.TWO_OR_MORE
    return CspClass(tag, tuple(witnesses))


def csp_pair(g: Graph, v: str) -> tuple[Path, Path]:
    """Two distinct closed simple paths at ``v``; only valid in the 2+ class."""
    cls = csp_class(g, v)
    if cls.tag is not CspTag.TWO_OR_MORE:
        raise PreconditionError(
            f"vertex {v!r} carries {cls.tag.value} closed simple paths, need two_or_more"
        )
    return cls.witnesses[0], cls.witnesses[1]


# -- derived subgraphs ---------------------------------------------------------


def initial_subgraph(g: Graph, i: int) -> Graph:
    """Subgraph spanned by the first ``i`` declared vertices and all edges they emit.

    The vertex set also picks up the ranges of those edges, so the result is a
    well-formed graph; the chain over ``i`` is monotone.
    """
    if not 1 <= i <= len(g.vertices):
        raise PreconditionError(f"index {i} out of range 1..{len(g.vertices)}")
    first = set(g.vertices[:i])
    edges = [e for e in g.edges if e.src in first]
    keep = first | {e.dst for e in edges}
    return Graph(
        tuple(v for v in g.vertices if v in keep),
        tuple(edges),
    )


def downstream(g: Graph, w: str) -> Graph:
    """The restriction of ``g`` to everything reachable from ``w``."""
    g.check_vertex(w)
    keep = _reachable_from(g, (w,))
    edges = tuple(e for e in g.edges if e.src in keep)
    for e in edges:
        if e.dst not in keep:  # ranges of kept edges are reachable by construction
            raise GraphError(f"internal: downstream set not closed at edge {e.label!r}")
    return Graph(tuple(v for v in g.vertices if v in keep), edges)
