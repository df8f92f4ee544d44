import random

import pytest

from leavitt import (
    CapExhaustedError,
    PreconditionError,
    QQ,
    annihilate_closed,
    clear_ghosts_right,
    edge,
    ghost,
    ghost_degree,
    ideal_witness,
    line_graph,
    linear,
    mul,
    orthogonal_closed_path,
    pair_transitivity,
    parse_element,
    path_element,
    real_degree,
    reduce_step_left,
    reduce_to_vertex,
    rose_graph,
    rose_with_tail,
    star,
    vertex,
    zero,
)
from leavitt.algebra import add

from oracles import EXAMPLE_TWO_VERTEX_THREE_EDGE, random_nonzero_element

WITNESS_GRAPHS = [rose_graph(2), rose_with_tail(2, 2), EXAMPLE_TWO_VERTEX_THREE_EDGE]


class TestDegrees:
    def test_examples(self):
        g = line_graph(3)
        assert real_degree(vertex(g, "v1")) == 0
        assert real_degree(path_element(g, g.path(["y1", "y2"]))) == 2
        assert real_degree(ghost(g, "y1")) == 0
        assert ghost_degree(ghost(g, "y1")) == 1
        assert real_degree(zero(g)) == 0


class TestStepLeft:
    def test_examples(self):
        g = rose_graph(2)
        m, r = reduce_step_left(edge(g, "y1"))
        assert m == ghost(g, "y1") and r == vertex(g, "v")
        a = linear(1, vertex(g, "v"), -1, edge(g, "y1"))
        m, r = reduce_step_left(a)
        assert m == ghost(g, "y1")
        assert r == linear(1, ghost(g, "y1"), -1, vertex(g, "v"))
        g3 = line_graph(3)
        m, r = reduce_step_left(path_element(g3, g3.path(["y1", "y2"])))
        assert m == ghost(g3, "y1") and r == edge(g3, "y2")

    def test_preconditions(self):
        g = rose_graph(2)
        with pytest.raises(PreconditionError):
            reduce_step_left(zero(g))
        with pytest.raises(PreconditionError):
            reduce_step_left(vertex(g, "v"))

    def test_strict_decrease_on_randoms(self):
        rng = random.Random(61)
        for g in WITNESS_GRAPHS:
            for _ in range(80):
                a = random_nonzero_element(rng, g)
                if real_degree(a) == 0:
                    continue
                m, r = reduce_step_left(a)
                assert not r.is_zero
                assert real_degree(r) < real_degree(a)
                assert mul(m, a) == r


class TestClearGhosts:
    def test_examples(self):
        g = rose_graph(2)
        q, r = clear_ghosts_right(ghost(g, "y1"))
        assert q.edges == ("y1",) and r == vertex(g, "v")
        a = add(vertex(g, "v"), ghost(g, "y1"))
        q, r = clear_ghosts_right(a)
        assert q.edges == ("y1",)
        assert r == add(vertex(g, "v"), edge(g, "y1"))
        g3 = line_graph(3)
        q, r = clear_ghosts_right(vertex(g3, "v2"))
        assert q.edges == () and q.anchor == "v2" and r == vertex(g3, "v2")

    def test_preconditions(self):
        g = rose_graph(2)
        with pytest.raises(PreconditionError):
            clear_ghosts_right(zero(g))
        with pytest.raises(PreconditionError):
            clear_ghosts_right(edge(g, "y1"))

    def test_result_real_only_with_vertex_coefficient(self):
        rng = random.Random(67)
        for g in WITNESS_GRAPHS:
            done = 0
            while done < 40:
                a = random_nonzero_element(rng, g)
                if real_degree(a) != 0:
                    continue
                done += 1
                q, r = clear_ghosts_right(a)
                assert ghost_degree(r) == 0
                w = g.path_range(q)
                assert mul(vertex(g, w), mul(r, vertex(g, w))).coeff(
                    next(iter(vertex(g, w).terms))
                ) != QQ.zero
                assert mul(a, path_element(g, q)) == r


class TestAnnihilate:
    def test_examples(self):
        g = rose_graph(2)
        lam = annihilate_closed(vertex(g, "v"), "v")
        assert lam.edges == ()
        a = linear(1, vertex(g, "v"), -1, edge(g, "y1"))
        lam = annihilate_closed(a, "v")
        assert lam.edges == ("y2",)
        b = add(vertex(g, "v"), path_element(g, g.path(["y1", "y1"])))
        lam = annihilate_closed(b, "v")
        assert lam.edges == ("y2",)

    def test_result_verified(self):
        g = EXAMPLE_TWO_VERTEX_THREE_EDGE
        a = add(vertex(g, "v"), path_element(g, g.path(["e", "g"])))
        lam = annihilate_closed(a, "v")
        lam_el = path_element(g, lam)
        assert mul(mul(star(lam_el), a), lam_el) == vertex(g, g.path_range(lam))

    def test_preconditions(self):
        g = rose_graph(2)
        with pytest.raises(PreconditionError):
            annihilate_closed(edge(g, "y1"), "v")  # no vertex coefficient
        with pytest.raises(PreconditionError):
            annihilate_closed(add(vertex(g, "v"), ghost(g, "y1")), "v")

    def test_cap_exhaustion_without_exits(self):
        g = rose_graph(1)
        a = linear(1, vertex(g, "v"), -1, edge(g, "y1"))
        with pytest.raises(CapExhaustedError) as exc:
            annihilate_closed(a, "v")
        assert exc.value.diagnostics["closed_paths"] == [["y1"]]


class TestReduceToVertex:
    def test_examples(self):
        g = rose_graph(2)
        res = reduce_to_vertex(vertex(g, "v"))
        assert (res.left, res.right, res.vertex) == (vertex(g, "v"), vertex(g, "v"), "v")
        res = reduce_to_vertex(edge(g, "y1"))
        assert res.left == ghost(g, "y1") and res.right == vertex(g, "v") and res.vertex == "v"

    def test_random_elements_verified(self):
        rng = random.Random(71)
        for g in WITNESS_GRAPHS:
            for _ in range(60):
                a = random_nonzero_element(rng, g)
                res = reduce_to_vertex(a)
                assert mul(mul(res.left, a), res.right) == vertex(g, res.vertex)

    def test_trace_steps_are_verified_moves(self):
        g = rose_with_tail(2, 2)
        a = parse_element(g, "2*v1 - e1.f1 + f2^*.e1^*")
        res = reduce_to_vertex(a)
        for step in res.trace.steps:
            check = step.before
            if step.left is not None:
                check = mul(step.left, check)
            if step.right is not None:
                check = mul(check, step.right)
            assert check == step.after
        kinds = [s.kind for s in res.trace.steps]
        assert kinds.count("right_path") == 1
        assert kinds.count("vertex_pick") == 1
        assert kinds.count("annihilate") == 1

    def test_zero_rejected(self):
        with pytest.raises(PreconditionError):
            reduce_to_vertex(zero(rose_graph(2)))

    def test_negative_control_rose1(self):
        g = rose_graph(1)
        a = linear(1, vertex(g, "v"), -1, edge(g, "y1"))
        with pytest.raises(CapExhaustedError):
            reduce_to_vertex(a)


class TestOrthogonalFamily:
    def test_examples(self):
        g = rose_graph(2)
        p, q = g.path(["y1"]), g.path(["y2"])
        assert orthogonal_closed_path(g, p, q, 1).edges == ("y2",)
        assert orthogonal_closed_path(g, p, q, 2).edges == ("y1", "y2")
        c1 = path_element(g, orthogonal_closed_path(g, p, q, 1))
        c2 = path_element(g, orthogonal_closed_path(g, p, q, 2))
        assert mul(star(c2), c1).is_zero

    def test_orthogonality_both_graphs(self):
        cases = [
            (rose_graph(2), ["y1"], ["y2"]),
            (EXAMPLE_TWO_VERTEX_THREE_EDGE, ["e", "g"], ["f", "g"]),
        ]
        for g, p_edges, q_edges in cases:
            p, q = g.path(p_edges), g.path(q_edges)
            base = p.anchor
            for m in range(1, 6):
                cm = path_element(g, orthogonal_closed_path(g, p, q, m))
                for n in range(1, 6):
                    cn = path_element(g, orthogonal_closed_path(g, p, q, n))
                    product = mul(star(cm), cn)
                    if m == n:
                        assert product == vertex(g, base)
                    else:
                        assert product.is_zero

    def test_validation(self):
        g = rose_graph(2)
        p, q = g.path(["y1"]), g.path(["y2"])
        with pytest.raises(PreconditionError):
            orthogonal_closed_path(g, p, p, 1)
        with pytest.raises(PreconditionError):
            orthogonal_closed_path(g, p, q, 0)
        g3 = line_graph(3)
        with pytest.raises(PreconditionError):
            orthogonal_closed_path(g3, g3.path(["y1"]), g3.path(["y2"]), 1)


class TestIdealWitness:
    def test_examples(self):
        g = line_graph(3)
        assert ideal_witness(g, "v2", "v2") == (
            (vertex(g, "v2"), vertex(g, "v2")),
        )
        pairs = ideal_witness(g, "v1", "v3")
        assert len(pairs) == 1
        left, right = pairs[0]
        assert left == star(path_element(g, g.path(["y1", "y2"])))
        assert right == path_element(g, g.path(["y1", "y2"]))
        pairs = ideal_witness(g, "v3", "v2")
        assert pairs == ((edge(g, "y2"), ghost(g, "y2")),)

    def test_sums_reproduce_target(self):
        graphs = [line_graph(n) for n in range(1, 6)] + [rose_graph(2), rose_with_tail(3, 3)]
        for g in graphs:
            for v in g.vertices:
                for u in g.vertices:
                    pairs = ideal_witness(g, v, u)
                    total = zero(g)
                    for left, right in pairs:
                        total = add(total, mul(mul(left, vertex(g, v)), right))
                    assert total == vertex(g, u)

    def test_outside_closure_rejected(self):
        from leavitt import make_graph

        isolated = make_graph(["u", "z"], [])
        with pytest.raises(PreconditionError):
            ideal_witness(isolated, "u", "z")


class TestPairTransitivity:
    def test_trivial_pair(self):
        g = rose_graph(2)
        v = vertex(g, "v")
        a, b = pair_transitivity(v, v)
        assert mul(mul(a, v), b) == v

    def test_edge_to_edge(self):
        g = rose_graph(2)
        alpha, beta = edge(g, "y1"), edge(g, "y2")
        a, b = pair_transitivity(alpha, beta)
        assert mul(mul(a, alpha), b) == beta

    def test_random_pairs_all_graphs(self):
        rng = random.Random(73)
        for g in WITNESS_GRAPHS:
            for _ in range(12):
                alpha = random_nonzero_element(rng, g, max_terms=4, max_len=3)
                beta = random_nonzero_element(rng, g, max_terms=4, max_len=3)
                a, b = pair_transitivity(alpha, beta)
                assert mul(mul(a, alpha), b) == beta

    def test_rejects_zero_and_wrong_graphs(self):
        g = rose_graph(2)
        with pytest.raises(PreconditionError):
            pair_transitivity(zero(g), vertex(g, "v"))
        with pytest.raises(PreconditionError):
            pair_transitivity(vertex(g, "v"), zero(g))
        g3 = line_graph(3)
        with pytest.raises(PreconditionError):
            pair_transitivity(vertex(g3, "v1"), vertex(g3, "v2"))
