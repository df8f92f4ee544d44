"""Exact symbolic workbench for Leavitt path algebras of finite directed graphs.

The package splits into thin layers: ``graphs`` holds the multigraph model and
its path analyses, ``closure`` the hereditary/saturated machinery, ``algebra``
the exact normal-form arithmetic, ``reduction`` the constructive witness
algorithms, ``classify`` the aggregate verdicts, ``matrix_iso`` the explicit
matrix realizations, ``exprio`` the text formats, and ``cli`` the command-line
front end.
"""

from .algebra import (
    INFINITE,
    Element,
    Monomial,
    PrimeField,
    QQ,
    RationalField,
    add,
    dim_basis,
    edge,
    ghost,
    ghost_path_element,
    graded_parts,
    linear,
    local_unit,
    monomial_element,
    mul,
    normalize,
    path_element,
    star,
    vertex,
    zero,
)
from .classify import Verdict, Witnesses, classify
from .closure import (
    ClosureTrace,
    HereditaryStep,
    SaturatedStep,
    enumerate_hs,
    hs_closure,
    subset_flags,
    trivial_hs_only,
)
from .errors import (
    CapExhaustedError,
    GraphError,
    LeavittError,
    ParseError,
    PathError,
    PreconditionError,
)
from .exprio import format_element, parse_element, parse_graph, serialize_graph
from .graphs import (
    CspClass,
    CspTag,
    Edge,
    Graph,
    Path,
    build_named,
    csp_class,
    csp_pair,
    cycle_connect_violations,
    cycles_no_exit,
    downstream,
    initial_subgraph,
    is_acyclic,
    line_graph,
    make_graph,
    reaches,
    rose_graph,
    rose_with_tail,
)
from .matrix_iso import (
    GeneratorMap,
    LineIsoReport,
    MatrixOverElement,
    RelationReport,
    line_matrix_map,
    surjectivity_witness,
    tailed_rose_matrix_map,
    verify_line_iso,
    verify_relations,
)
from .reduction import (
    ReductionResult,
    ReductionTrace,
    annihilate_closed,
    clear_ghosts_right,
    ghost_degree,
    ideal_witness,
    orthogonal_closed_path,
    pair_transitivity,
    real_degree,
    reduce_step_left,
    reduce_to_vertex,
)

__version__ = "0.1.0"
