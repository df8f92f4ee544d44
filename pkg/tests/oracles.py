"""Independent brute-force oracles and random generators for the test suite.

Nothing here reuses the decision procedures under test: cycles are found by
exhaustive DFS over edge sequences, closed-simple-path classes by saturated
walk counting up to the safe length bound, and elements are audited straight
against the normal-form definition.
"""

from fractions import Fraction

from leavitt import Graph, make_graph
from leavitt.algebra import Element, Monomial, QQ, normalize
from leavitt.closure import enumerate_hs


# -- random data ---------------------------------------------------------------


def random_multigraph(rng, max_vertices=6, max_edges=12) -> Graph:
    n = rng.randint(1, max_vertices)
    vertices = [f"v{i}" for i in range(1, n + 1)]
    m = rng.randint(0, max_edges)
    edges = [
        (f"e{k}", rng.choice(vertices), rng.choice(vertices))
        for k in range(1, m + 1)
    ]
    return make_graph(vertices, edges)


def random_path_pair(rng, g, max_len=4):
    """A pair of paths with a common range, built by a forward and a backward walk."""
    p_edges = []
    at = rng.choice(g.vertices)
    for _ in range(rng.randint(0, max_len)):
        out = g.out_edges(at)
        if not out:
            break
        e = rng.choice(out)
        p_edges.append(e.label)
        at = e.dst
    q_edges = []
    cur = at
    for _ in range(rng.randint(0, max_len)):
        incoming = g.in_edges(cur)
        if not incoming:
            break
        e = rng.choice(incoming)
        q_edges.insert(0, e.label)
        cur = e.src
    p = g.path(p_edges, at=None if p_edges else at)
    q = g.path(q_edges, at=None if q_edges else at)
    return p, q


def random_element(rng, g, field=QQ, max_terms=8, max_len=4) -> Element:
    raw = []
    for _ in range(rng.randint(1, max_terms)):
        coeff = rng.choice([-3, -2, -1, 1, 2, 3])
        p, q = random_path_pair(rng, g, max_len)
        raw.append((coeff, p, q))
    return normalize(g, raw, field)


def random_nonzero_element(rng, g, field=QQ, max_terms=8, max_len=4) -> Element:
    while True:
        el = random_element(rng, g, field, max_terms, max_len)
        if not el.is_zero:
            return el


# -- structural audit of elements ------------------------------------------------


def assert_valid_element(el: Element):
    """Check every stored monomial against the normal-form definition."""
    g = el.graph
    for m, c in el.terms.items():
        assert c != el.field.zero, "zero coefficient stored"
        p = g.check_path(m.real)
        q = g.check_path(m.ghost)
        assert g.path_range(p) == g.path_range(q), "range mismatch in stored monomial"
        if p.edges and q.edges and p.edges[-1] == q.edges[-1]:
            last = g.edge(p.edges[-1])
            assert g.special_edge(last.src).label != last.label, (
                "stored monomial still carries a reducible junction"
            )


# -- cycle oracles -----------------------------------------------------------------


def enumerate_simple_cycles(g: Graph):
    """All simple cycles as edge-label tuples, each found from its least vertex."""
    index = {v: i for i, v in enumerate(g.vertices)}
    cycles = []

    def extend(base, at, visited, trail):
        for e in g.out_edges(at):
            if e.dst == base:
                cycles.append(tuple(trail + [e.label]))
            elif index[e.dst] > index[base] and e.dst not in visited:
                extend(base, e.dst, visited | {e.dst}, trail + [e.label])

    for base in g.vertices:
        extend(base, base, {base}, [])
    return cycles


def cycle_has_exit(g: Graph, cycle) -> bool:
    for label in cycle:
        src = g.edge(label).src
        if any(e.label != label for e in g.out_edges(src)):
            return True
    return False


def canonical_cycle(labels) -> tuple:
    rotations = [tuple(labels[i:]) + tuple(labels[:i]) for i in range(len(labels))]
    return min(rotations)


def oracle_cycles_no_exit(g: Graph) -> set:
    return {
        canonical_cycle(c)
        for c in enumerate_simple_cycles(g)
        if not cycle_has_exit(g, c)
    }


def oracle_reachable(g: Graph, start: str) -> set:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for e in g.out_edges(u):
            if e.dst not in seen:
                seen.add(e.dst)
                stack.append(e.dst)
    return seen


# -- closed-simple-path oracle --------------------------------------------------------


def oracle_csp_tag(g: Graph, v: str) -> str:
    """Count closed simple paths at ``v`` by saturated walk counting.

    Sums, over every length up to the safe bound, the number of walks that
    leave ``v``, stay off ``v``, and come back; every count is capped at 2,
    which preserves the 0/1/2+ trichotomy exactly.
    """
    bound = (len(g.edges) + 1) * (len(g.vertices) + 1)
    total = sum(1 for e in g.out_edges(v) if e.dst == v)
    others = [u for u in g.vertices if u != v]
    into = {u: 0 for u in others}
    for e in g.out_edges(v):
        if e.dst != v:
            into[e.dst] += 1
    back = {u: sum(1 for e in g.out_edges(u) if e.dst == v) for u in others}
    weights = {u: min(into[u], 2) for u in others}
    for _length in range(2, bound + 1):
        if total >= 2:
            break
        step_total = 0
        for u in others:
            step_total += weights[u] * back[u]
        total = min(total + min(step_total, 2), 2)
        nxt = {u: 0 for u in others}
        for e in g.edges:
            if e.src != v and e.dst != v:
                nxt[e.dst] += weights[e.src]
        weights = {u: min(c, 2) for u, c in nxt.items()}
        if all(c == 0 for c in weights.values()):
            break
    tags = {0: "zero", 1: "one", 2: "two_or_more"}
    return tags[min(total, 2)]


# -- classification oracle --------------------------------------------------------------


def oracle_simple(g: Graph) -> bool:
    trivial = len(enumerate_hs(g)) == 2
    exits = all(cycle_has_exit(g, c) for c in enumerate_simple_cycles(g))
    return trivial and exits


def oracle_purely_infinite_simple(g: Graph) -> bool:
    if not oracle_simple(g):
        return False
    on_cycle = {g.edge(label).src for c in enumerate_simple_cycles(g) for label in c}
    return all(oracle_reachable(g, v) & on_cycle for v in g.vertices)


def oracle_minimal_hs_superset(g: Graph, xs) -> frozenset:
    """Intersection of every hereditary saturated subset containing ``xs``."""
    xs = frozenset(xs)
    members = [h for h in enumerate_hs(g) if xs <= h]
    out = frozenset(g.vertices)
    for h in members:
        out &= h
    return out


EXAMPLE_TWO_VERTEX_THREE_EDGE = make_graph(
    ["v", "w"], [("e", "v", "w"), ("f", "v", "w"), ("g", "w", "v")]
)


def fraction_is_exact(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, float)
