"""Tour: building graphs and reading their classification verdicts.

Three graphs tell the whole story of the classification:

* the finite line, whose algebra is a matrix algebra: simple but tame;
* the rose with n >= 2 loops, the classical purely infinite simple algebra;
* a single loop, which fails the exit condition and is not simple at all.
"""

from leavitt import classify, line_graph, make_graph, rose_graph


def show(name, graph):
    verdict = classify(graph)
    print(f"--- {name}: {len(graph.vertices)} vertices, {len(graph.edges)} edges")
    print(f"    trivial hereditary/saturated lattice: {verdict.trivial_lattice}")
    print(f"    every cycle has an exit:              {verdict.cycles_have_exits}")
    print(f"    every vertex connects to a cycle:     {verdict.all_connect_to_cycle}")
    print(f"    simple: {verdict.simple}   purely infinite simple: {verdict.purely_infinite_simple}")
    print(f"    vertex classes: {dict(verdict.v_partition)}")
    w = verdict.witnesses
    if w.proper_hs_subset is not None:
        print(f"    counterexample subset: {sorted(w.proper_hs_subset)}")
    if w.exitless_cycle is not None:
        print(f"    exitless cycle: {'.'.join(w.exitless_cycle.edges)}")
    if w.unconnected_vertex is not None:
        print(f"    vertex with no route to a cycle: {w.unconnected_vertex}")


show("line(4)", line_graph(4))
show("rose(2)", rose_graph(2))
show("rose(1)", rose_graph(1))

# the two-vertex, three-edge graph: two parallel edges v -> w and one edge back
paired = make_graph(["v", "w"], [("e", "v", "w"), ("f", "v", "w"), ("g", "w", "v")])
show("two parallel edges plus a return edge", paired)
