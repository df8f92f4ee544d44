"""Tour: graph documents, element text, and the command-line front end.

Graphs travel as small JSON documents whose declaration order matters (it
pins the rewrite pivots).  Elements travel in a dotted-factor grammar.  The
``leavitt`` console script exposes every capability; here we call its
entry point in-process.
"""

import tempfile
from pathlib import Path

from leavitt import (
    format_element,
    parse_element,
    parse_graph,
    rose_graph,
    serialize_graph,
)
from leavitt.cli import run

doc = serialize_graph(rose_graph(2))
print("the rose(2) document:")
print(doc)

g = parse_graph(doc)
el = parse_element(g, "1/2*y1.y1^* - v")
print("parsed and normalized:", format_element(el))
print("round trip holds:", parse_element(g, format_element(el)) == el)

with tempfile.TemporaryDirectory() as tmp:
    graph_file = Path(tmp) / "rose2.graph"
    graph_file.write_text(doc)
    print("\n$ leavitt classify rose2.graph")
    run(["classify", str(graph_file)])
    print("\n$ leavitt dim rose2.graph")
    run(["dim", str(graph_file)])
    print("\n$ leavitt pair rose2.graph --alpha y1 --beta y2")
    run(["pair", str(graph_file), "--alpha", "y1", "--beta", "y2"])
    print("\n$ leavitt verify-iso enm --n 2 --m 2")
    run(["verify-iso", "enm", "--n", "2", "--m", "2"])
