"""Tour: hereditary/saturated subsets and witnessed closures.

The closure of a vertex set is computed level by level; each new vertex
carries a replayable witness, and the simplicity test reduces to "every
singleton closes up to the whole vertex set".
"""

from leavitt import (
    HereditaryStep,
    enumerate_hs,
    hs_closure,
    line_graph,
    make_graph,
    subset_flags,
    trivial_hs_only,
)

g = line_graph(3)
print("line(3): subset {v3}:", subset_flags(g, {"v3"}), "(hereditary but not saturated)")

closed, trace = hs_closure(g, {"v2"})
print("closure of {v2}:", sorted(closed))
for level, members in enumerate(trace.levels):
    print(f"  level {level}: {sorted(members)}")
for step in trace.steps:
    if isinstance(step, HereditaryStep):
        e = g.edge(step.edge)
        print(f"  {step.vertex} joined: hereditary step along {e.label} ({e.src} -> {e.dst})")
    else:
        print(f"  {step.vertex} joined: saturated step, out-edges {step.edges} all land inside")
print("replay reconstructs the closure:", trace.replay() == closed)

print("line(3) has a trivial lattice:", trivial_hs_only(g))
print("all hereditary saturated subsets of line(3):",
      [sorted(x) for x in enumerate_hs(g)])

split = make_graph(["u", "z", "t"], [("a", "u", "z")])
ok, counterexample = trivial_hs_only(split)
print("a disconnected graph fails with witness:", ok, sorted(counterexample))
print("its full lattice:", [sorted(x) for x in enumerate_hs(split)])
