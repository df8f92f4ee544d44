"""Tour: explicit matrix realizations checked on generators.

The line graph's algebra is the full matrix algebra, and the tailed rose
realizes matrices over the rose algebra.  Both maps are verified relation by
relation; surjectivity comes with explicit monomial preimages, and
injectivity rides on simplicity of the source.
"""

from leavitt import (
    classify,
    format_element,
    rose_with_tail,
    surjectivity_witness,
    tailed_rose_matrix_map,
    verify_line_iso,
    verify_relations,
)

report = verify_line_iso(3)
print("line(3) realization:",
      f"{len(report.relations.checks)} relations, all zero: {report.relations.passed},",
      f"dimension {report.dimension} (expected {report.expected_dimension})")

gmap = tailed_rose_matrix_map(2, 2)
print("tailed rose (n=2 loops, m=2 chain) images:")
for label in ("v1", "v2"):
    print(f"  {label} ->", gmap.vertex_images[label])
for label in ("e1", "f1"):
    print(f"  {label} ->", gmap.edge_images[label])

rel = verify_relations(gmap)
print(f"relations: {len(rel.checks)} checked, failures: {len(rel.failures())}")

x_wit, y_wit = surjectivity_witness(2, 2, 1, 2, 1)
print("preimage of the starred loop in slot (1,2):", format_element(x_wit))
print("preimage of the loop in slot (1,2):        ", format_element(y_wit))

print("source algebra simple (so the map is injective):",
      classify(rose_with_tail(2, 2)).simple)
