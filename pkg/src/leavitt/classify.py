"""Aggregate verdicts for a graph algebra, with machine-checkable witnesses.

Simplicity asks for a trivial hereditary-saturated lattice plus an exit on
every cycle; pure infiniteness additionally asks every vertex to connect to a
cycle.  Finite dimensionality coincides with acyclicity for finite graphs.
Every false condition ships a concrete witness so a verdict can be audited
without re-running the decision procedure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .closure import trivial_hs_only
from .errors import GraphError
from .graphs import (
    CspTag,
    Graph,
    Path,
    csp_class,
    cycle_connect_violations,
    cycles_no_exit,
    is_acyclic,
)

__all__ = ["Witnesses", "Verdict", "classify"]

_TAG_NAMES = {CspTag.ZERO: "V0", CspTag.ONE: "V1", CspTag.TWO_OR_MORE: "V2"}


@dataclass(frozen=True)
class Witnesses:
    proper_hs_subset: Optional[frozenset[str]]
    exitless_cycle: Optional[Path]
    unconnected_vertex: Optional[str]


@dataclass(frozen=True)
class Verdict:
    acyclic: bool
    finite_dimensional: bool
    simple: bool
    purely_infinite_simple: bool
    trivial_lattice: bool
    cycles_have_exits: bool
    all_connect_to_cycle: bool
    v_partition: Mapping[str, str]
    witnesses: Witnesses


def classify(g: Graph) -> Verdict:
    """Compute all verdict flags, the vertex partition, and failure witnesses."""
    if not g.vertices:
        raise GraphError("cannot classify the empty graph")
    trivial, bad_subset = trivial_hs_only(g)
    exitless = cycles_no_exit(g)
    violations = cycle_connect_violations(g)
    partition = {v: _TAG_NAMES[csp_class(g, v).tag] for v in g.vertices}
    acyclic = is_acyclic(g)
    simple = trivial and not exitless
    return Verdict(
        acyclic=acyclic,
        finite_dimensional=acyclic,
        simple=simple,
        purely_infinite_simple=simple and not violations,
        trivial_lattice=trivial,
        cycles_have_exits=not exitless,
        all_connect_to_cycle=not violations,
        v_partition=partition,
        witnesses=Witnesses(
            proper_hs_subset=bad_subset,
            exitless_cycle=exitless[0] if exitless else None,
            unconnected_vertex=(
                min(violations, key=g.vertex_index) if violations else None
            ),
        ),
    )
