"""Text formats: JSON graph documents and the element expression grammar.

Graph documents are JSON objects with two keys, ``vertices`` (array of label
strings) and ``edges`` (array of ``{"name", "src", "dst"}`` objects); the
declaration order is preserved on round trips because it pins the rewrite
pivots and every deterministic witness downstream.

Element grammar::

    element  := ws term (ws ('+'|'-') ws term)*
    term     := (rational ws '*')? factor (ws '.' ws factor)*
    factor   := ident ('^*')?
    rational := integer ('/' positive-integer)?
    ident    := [A-Za-z_][A-Za-z0-9_]*

A factor names a vertex, an edge, or with the ``^*`` suffix a ghost edge.
Chains that fail to compose are not errors: the algebra already makes them
zero, and the parser simply returns that zero.
"""

from __future__ import annotations

import json
import re

from . import algebra as alg
from .algebra import Element, Field, QQ, monomial_key
from .errors import ParseError
from .graphs import Graph, make_graph

__all__ = ["parse_graph", "serialize_graph", "parse_element", "format_element"]


def parse_graph(text: str) -> Graph:
    """Read a JSON graph document into a validated graph."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed graph document: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("graph document must be a JSON object")
    vertices = doc.get("vertices")
    edges = doc.get("edges")
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise ParseError('graph document needs "vertices": [string, ...]')
    if not isinstance(edges, list):
        raise ParseError('graph document needs "edges": [object, ...]')
    triples = []
    for item in edges:
        if (
            not isinstance(item, dict)
            or not all(isinstance(item.get(k), str) for k in ("name", "src", "dst"))
        ):
            raise ParseError('each edge needs string fields "name", "src", "dst"')
        triples.append((item["name"], item["src"], item["dst"]))
    return make_graph(vertices, triples)


def serialize_graph(g: Graph) -> str:
    """Emit the JSON document for ``g``, preserving declaration order."""
    doc = {
        "vertices": list(g.vertices),
        "edges": [{"name": e.label, "src": e.src, "dst": e.dst} for e in g.edges],
    }
    return json.dumps(doc, indent=2) + "\n"


_RATIONAL = re.compile(r"-?\d+(?:/\d+)?")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class _Parser:
    def __init__(self, g: Graph, text: str, field: Field):
        self.g = g
        self.text = text
        self.pos = 0
        self.field = field

    def error(self, message: str):
        raise ParseError(f"{message} (at position {self.pos})")

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> Element:
        self.skip_ws()
        if self.pos >= len(self.text):
            self.error("empty expression")
        total = self.term()
        while True:
            self.skip_ws()
            sign = self.peek()
            if sign not in ("+", "-"):
                break
            self.pos += 1
            nxt = self.term()
            if sign == "-":
                nxt = self.field.neg(self.field.one) * nxt
            total = alg.add(total, nxt)
        self.skip_ws()
        if self.pos != len(self.text):
            self.error(f"unexpected character {self.peek()!r}")
        return total

    def term(self) -> Element:
        self.skip_ws()
        coeff = self.field.one
        m = _RATIONAL.match(self.text, self.pos)
        if m:
            self.pos = m.end()
            self.skip_ws()
            if self.peek() != "*":
                # the zero element prints as a bare "0"; other bare scalars
                # are not elements of the algebra
                if self.rational(m.group()) == self.field.zero:
                    return alg.zero(self.g, self.field)
                self.error("a coefficient must be followed by '*' and a factor")
            self.pos += 1
            coeff = self.rational(m.group())
        out = self.factor()
        while True:
            self.skip_ws()
            if self.peek() != ".":
                break
            self.pos += 1
            out = alg.mul(out, self.factor())
        return coeff * out

    def rational(self, text: str):
        if "/" in text:
            num, den = text.split("/")
            if int(den) == 0:
                self.error("zero denominator")
            return self.field.from_ratio(int(num), int(den))
        return self.field.coerce(int(text))

    def factor(self) -> Element:
        self.skip_ws()
        m = _IDENT.match(self.text, self.pos)
        if not m:
            self.error("expected an identifier")
        name = m.group()
        self.pos = m.end()
        starred = self.text.startswith("^*", self.pos)
        if starred:
            self.pos += 2
        if self.g.has_vertex(name):
            return alg.vertex(self.g, name, self.field)  # a starred vertex is itself
        if self.g.has_edge(name):
            if starred:
                return alg.ghost(self.g, name, self.field)
            return alg.edge(self.g, name, self.field)
        self.error(f"unknown identifier {name!r}")


def parse_element(g: Graph, text: str, field: Field = QQ) -> Element:
    """Parse, resolve against ``g``, and normalize an element expression."""
    return _Parser(g, text, field).parse()


def _coeff_text(field: Field, c) -> str:
    return field.format(c)


def format_element(a: Element) -> str:
    """Canonical text: terms sorted by total degree then monomial labels.

    ``parse_element`` applied to the output reproduces ``a`` exactly.
    """
    if a.is_zero:
        return "0"
    field = a.field
    pieces = []
    for m in a.support():
        factors = list(m.real.edges) + [f"{e}^*" for e in reversed(m.ghost.edges)]
        body = ".".join(factors) if factors else m.real.anchor
        pieces.append((a.coeff(m), body))
    chunks = []
    for idx, (c, body) in enumerate(pieces):
        negative = isinstance(field, alg.RationalField) and c < 0
        magnitude = field.neg(c) if negative else c
        if idx == 0:
            # a bare leading minus is not in the grammar, so spell the sign
            # inside the coefficient ("-1*v", "-2/3*y1")
            if magnitude == field.one and not negative:
                chunks.append(body)
            else:
                chunks.append(f"{_coeff_text(field, c)}*{body}")
        else:
            text = body if magnitude == field.one else f"{_coeff_text(field, magnitude)}*{body}"
            chunks.append(f"{' - ' if negative else ' + '}{text}")
    return "".join(chunks)
