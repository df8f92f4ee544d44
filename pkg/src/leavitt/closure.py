"""Hereditary and saturated vertex sets, and the witnessed closure of a subset.

A set is hereditary when it swallows everything reachable from it, and
saturated when it contains every emitting vertex whose edge ranges all lie
inside.  The closure of a set is the least superset with both properties; it
is computed level by level, and every adjoined vertex carries a witness record
explaining which rule admitted it.  Those witnesses are replayed verbatim by
the constructive ideal machinery, so their determinism matters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .errors import PreconditionError
from .graphs import Graph, reaches

__all__ = [
    "HereditaryStep",
    "SaturatedStep",
    "ClosureTrace",
    "subset_flags",
    "hs_closure",
    "trivial_hs_only",
    "enumerate_hs",
]


@dataclass(frozen=True)
class HereditaryStep:
    """``vertex`` joined because ``edge`` reaches it from inside the closure."""

    vertex: str
    edge: str


@dataclass(frozen=True)
class SaturatedStep:
    """``vertex`` joined because every edge it emits (all of ``edges``) lands inside."""

    vertex: str
    edges: tuple[str, ...]


ClosureStep = Union[HereditaryStep, SaturatedStep]


@dataclass(frozen=True)
class ClosureTrace:
    """Leveled closure record: ``levels[0]`` is the seed, the last level is a fixed point.

    ``steps`` lists one witness per adjoined vertex in discovery order (levels
    in order, vertices in declared order inside a level); each step refers
    only to vertices admitted earlier.
    """

    levels: tuple[frozenset[str], ...]
    steps: tuple[ClosureStep, ...]

    def step_for(self, vertex: str) -> Optional[ClosureStep]:
        for s in self.steps:
            if s.vertex == vertex:
                return s
        return None

    def replay(self) -> frozenset[str]:
        """Re-run the witnesses from the seed; used to audit trace soundness."""
        current = set(self.levels[0])
        for s in self.steps:
            current.add(s.vertex)
        return frozenset(current)


def _check_subset(g: Graph, xs: Iterable[str]) -> frozenset[str]:
    xs = frozenset(xs)
    for v in xs:
        g.check_vertex(v)
    return xs


def subset_flags(g: Graph, xs: Iterable[str]) -> tuple[bool, bool]:
    """(hereditary, saturated) for a vertex set, each straight from the definition."""
    xs = _check_subset(g, xs)
    hereditary = all(
        v in xs
        for w in xs
        for v in g.vertices
        if reaches(g, w, v)
    )
    saturated = True
    for v in g.vertices:
        out = g.out_edges(v)
        if out and all(e.dst in xs for e in out) and v not in xs:
            saturated = False
            break
    return hereditary, saturated


def hs_closure(g: Graph, xs: Iterable[str]) -> tuple[frozenset[str], ClosureTrace]:
    """The least hereditary and saturated superset of ``xs``, with its trace.

    Each round scans vertices in declared order against the previous level:
    a vertex enters by a hereditary witness if some already-admitted vertex
    emits an edge onto it (first such edge in declared order wins), otherwise
    by a saturated witness if it emits edges and all their ranges are already
    in.  Rounds repeat until nothing changes.
    """
    current = _check_subset(g, xs)
    levels = [current]
    steps: list[ClosureStep] = []
    while True:
        additions: list[ClosureStep] = []
        for u in g.vertices:
            if u in current:
                continue
            hereditary_edge = next(
                (e for e in g.edges if e.dst == u and e.src in current), None
            )
            if hereditary_edge is not None:
                additions.append(HereditaryStep(u, hereditary_edge.label))
                continue
            out = g.out_edges(u)
            if out and all(e.dst in current for e in out):
                additions.append(SaturatedStep(u, tuple(e.label for e in out)))
        if not additions:
            break
        current = current | {s.vertex for s in additions}
        levels.append(current)
        steps.extend(additions)
    return current, ClosureTrace(tuple(levels), tuple(steps))


def trivial_hs_only(g: Graph) -> tuple[bool, Optional[frozenset[str]]]:
    """Decide whether the only hereditary saturated subsets are empty and full.

    Equivalent to: the closure of every singleton is the whole vertex set.  A
    failing closure is itself a proper nonempty hereditary saturated subset and
    is returned as the counterexample.
    """
    everything = frozenset(g.vertices)
    for v in g.vertices:
        closed, _ = hs_closure(g, {v})
        if closed != everything:
            return False, closed
    return True, None


def enumerate_hs(g: Graph, max_vertices: int = 16) -> tuple[frozenset[str], ...]:
    """Every hereditary saturated subset, by exhaustive scan (guarded by size).

    Subsets are checked in binary-counter order over the declared vertex
    sequence, so the empty set comes first and the full set last.
    """
    n = len(g.vertices)
    if n > max_vertices:
        raise PreconditionError(
            f"enumerate_hs guard: {n} vertices exceeds the limit of {max_vertices}"
        )
    out_table = [(v, g.out_edges(v)) for v in g.vertices]
    results = []
    for mask in range(1 << n):
        xs = frozenset(g.vertices[i] for i in range(n) if mask >> i & 1)
        ok = True
        for e in g.edges:
            if e.src in xs and e.dst not in xs:
                ok = False
                break
        if not ok:
            continue
        for v, out in out_table:
            if out and v not in xs and all(e.dst in xs for e in out):
                ok = False
                break
        if ok:
            results.append(xs)
    return tuple(results)
