"""Tour: exact arithmetic with normal-form monomials.

Every element is a rational (or prime-field) combination of monomials p q*,
kept in a canonical rewritten form, so equality is just dictionary equality
and zero-testing is exact.
"""

from fractions import Fraction

from leavitt import (
    PrimeField,
    dim_basis,
    edge,
    format_element,
    ghost,
    graded_parts,
    line_graph,
    local_unit,
    mul,
    parse_element,
    rose_graph,
    star,
    vertex,
)

g = rose_graph(2)

print("ghost-meets-real collapses:")
print("  y1^* . y1 =", format_element(mul(ghost(g, "y1"), edge(g, "y1"))))
print("  y1^* . y2 =", format_element(mul(ghost(g, "y1"), edge(g, "y2"))))

print("the vertex relation rewrites the designated loop:")
print("  y2.y2^*           =", format_element(parse_element(g, "y2.y2^*")))
print("  y1.y1^* + y2.y2^* =", format_element(parse_element(g, "y1.y1^* + y2.y2^*")))

a = parse_element(g, "1/2*y1 - v + y2.y1^*")
print("a =", format_element(a))
print("star(a) =", format_element(star(a)))
print("graded parts of a:", {d: format_element(part) for d, part in graded_parts(a).items()})
print("a * star(a) =", format_element(mul(a, star(a))))

print("scalars stay exact:", Fraction(1, 3) * parse_element(g, "y1") == parse_element(g, "1/3*y1"))

f5 = PrimeField(5)
b = parse_element(g, "3*v + 4*y1", f5)
print("over GF(5): 3v + 4y1 doubled =", format_element(b + b))

line = line_graph(4)
print("dimension of the line(4) algebra:", dim_basis(line), "(a 4x4 matrix algebra)")
print("dimension over the rose:", dim_basis(g))
print("local unit for y2 on line(4):", format_element(local_unit([edge(line, "y2")])))
print("sinks keep their own identity:", format_element(vertex(line, "v4")))
