"""Generator-level verification of the explicit matrix realizations.

Two families are realized and checked relation by relation: the n-vertex line
graph lands in n x n matrix units over the one-vertex algebra, and the tailed
rose (m-chain into n loops) lands in m x m matrices over the n-loop rose
algebra.  Matrices carry algebra elements as entries, so every check reduces
to exact engine arithmetic; injectivity is never tested directly but follows
from simplicity of the source, which the classifier confirms separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from . import algebra as alg
from .algebra import Element, Field, QQ
from .errors import PreconditionError
from .graphs import Graph, line_graph, make_graph, rose_graph, rose_with_tail

__all__ = [
    "MatrixOverElement",
    "GeneratorMap",
    "RelationCheck",
    "RelationReport",
    "LineIsoReport",
    "tailed_rose_matrix_map",
    "line_matrix_map",
    "verify_relations",
    "surjectivity_witness",
    "verify_line_iso",
]


class MatrixOverElement:
    """A square matrix with algebra elements as entries, 1-based indices.

    Zero entries are never stored.  Matrix units multiply the usual way:
    ``unit(i, j) * unit(k, l)`` is ``unit(i, l)`` when ``j == k`` else zero.
    """

    __slots__ = ("size", "graph", "field", "_entries")

    def __init__(self, size: int, graph: Graph, field: Field, entries: dict):
        self.size = size
        self.graph = graph
        self.field = field
        self._entries = {pos: el for pos, el in entries.items() if not el.is_zero}

    @classmethod
    def zeros(cls, size: int, graph: Graph, field: Field = QQ):
        return cls(size, graph, field, {})

    @classmethod
    def unit(cls, size: int, graph: Graph, i: int, j: int,
             entry: Optional[Element] = None, field: Field = QQ):
        """The matrix unit at ``(i, j)``; the default entry is the base identity."""
        if not (1 <= i <= size and 1 <= j <= size):
            raise PreconditionError(f"matrix index ({i}, {j}) outside 1..{size}")
        if entry is None:
            entry = _identity(graph, field)
        return cls(size, graph, entry.field, {(i, j): entry})

    @property
    def entries(self) -> Mapping[tuple[int, int], Element]:
        return dict(self._entries)

    @property
    def is_zero(self) -> bool:
        return not self._entries

    def entry(self, i: int, j: int) -> Element:
        return self._entries.get((i, j), alg.zero(self.graph, self.field))

    def _check(self, other):
        if self.size != other.size or self.graph != other.graph or self.field != other.field:
            raise PreconditionError("matrix shapes or base algebras differ")

    def __eq__(self, other):
        if not isinstance(other, MatrixOverElement):
            return NotImplemented
        return (
            self.size == other.size
            and self.graph == other.graph
            and self.field == other.field
            and self._entries == other._entries
        )

    __hash__ = None

    def __add__(self, other):
        self._check(other)
        merged = dict(self._entries)
        for pos, el in other._entries.items():
            merged[pos] = alg.add(merged[pos], el) if pos in merged else el
        return MatrixOverElement(self.size, self.graph, self.field, merged)

    def __sub__(self, other):
        return self + other.scale(self.field.neg(self.field.one))

    def __mul__(self, other):
        if not isinstance(other, MatrixOverElement):
            return NotImplemented
        self._check(other)
        acc: dict = {}
        for (i, k), a in self._entries.items():
            for (k2, j), b in other._entries.items():
                if k != k2:
                    continue
                prod = alg.mul(a, b)
                if prod.is_zero:
                    continue
                pos = (i, j)
                acc[pos] = alg.add(acc[pos], prod) if pos in acc else prod
        return MatrixOverElement(self.size, self.graph, self.field, acc)

    def scale(self, c):
        return MatrixOverElement(
            self.size, self.graph, self.field,
            {pos: c * el for pos, el in self._entries.items()},
        )

    def star(self):
        """Conjugate transpose: entries starred, indices swapped."""
        return MatrixOverElement(
            self.size, self.graph, self.field,
            {(j, i): alg.star(el) for (i, j), el in self._entries.items()},
        )

    def __repr__(self):
        cells = ", ".join(f"({i},{j}): {el!r}" for (i, j), el in sorted(self._entries.items()))
        return f"<Matrix {self.size}x{self.size} {{{cells}}}>"


def _identity(g: Graph, field: Field) -> Element:
    out = alg.zero(g, field)
    for v in g.vertices:
        out = alg.add(out, alg.vertex(g, v, field))
    return out


@dataclass(frozen=True)
class GeneratorMap:
    """Images of every vertex, edge, and ghost edge of a source graph."""

    source: Graph
    size: int
    base: Graph
    field: Field
    vertex_images: Mapping[str, MatrixOverElement]
    edge_images: Mapping[str, MatrixOverElement]
    ghost_images: Mapping[str, MatrixOverElement]

    def __post_init__(self):
        for v in self.source.vertices:
            if v not in self.vertex_images:
                raise PreconditionError(f"no image for vertex {v!r}")
        for e in self.source.edges:
            if e.label not in self.edge_images:
                raise PreconditionError(f"no image for edge {e.label!r}")
            if e.label not in self.ghost_images:
                raise PreconditionError(f"no image for ghost edge {e.label!r}")

    def image(self, element: Element) -> MatrixOverElement:
        """Extend the generator images linearly and multiplicatively."""
        if element.graph != self.source:
            raise PreconditionError("element lives over a different graph")
        out = MatrixOverElement.zeros(self.size, self.base, self.field)
        for m, c in element.terms.items():
            acc = self.vertex_images[m.real.anchor]
            for label in m.real.edges:
                acc = acc * self.edge_images[label]
            for label in reversed(m.ghost.edges):
                acc = acc * self.ghost_images[label]
            out = out + acc.scale(c)
        return out


def tailed_rose_matrix_map(n: int, m: int, field: Field = QQ) -> GeneratorMap:
    """The generator map from the tailed rose onto m x m matrices over the rose.

    Chain vertices map to diagonal units, chain edges to superdiagonal units,
    and the i-th loop to the i-th rose loop sitting in the (m, m) corner (its
    ghost to the starred loop there).
    """
    source = rose_with_tail(n, m)
    base = rose_graph(n)
    one = _identity(base, field)
    vertex_images = {
        f"v{i}": MatrixOverElement.unit(m, base, i, i, one, field) for i in range(1, m + 1)
    }
    edge_images = {}
    ghost_images = {}
    for i in range(1, m):
        edge_images[f"e{i}"] = MatrixOverElement.unit(m, base, i, i + 1, one, field)
        ghost_images[f"e{i}"] = MatrixOverElement.unit(m, base, i + 1, i, one, field)
    for i in range(1, n + 1):
        loop = alg.edge(base, f"y{i}", field)
        edge_images[f"f{i}"] = MatrixOverElement.unit(m, base, m, m, loop, field)
        ghost_images[f"f{i}"] = MatrixOverElement.unit(m, base, m, m, alg.star(loop), field)
    return GeneratorMap(source, m, base, field, vertex_images, edge_images, ghost_images)


def line_matrix_map(n: int, field: Field = QQ) -> GeneratorMap:
    """The generator map from the n-vertex line onto n x n matrix units."""
    source = line_graph(n)
    base = make_graph(["v"], [])
    one = alg.vertex(base, "v", field)
    vertex_images = {
        f"v{i}": MatrixOverElement.unit(n, base, i, i, one, field) for i in range(1, n + 1)
    }
    edge_images = {
        f"y{i}": MatrixOverElement.unit(n, base, i, i + 1, one, field) for i in range(1, n)
    }
    ghost_images = {
        f"y{i}": MatrixOverElement.unit(n, base, i + 1, i, one, field) for i in range(1, n)
    }
    return GeneratorMap(source, n, base, field, vertex_images, edge_images, ghost_images)


@dataclass(frozen=True)
class RelationCheck:
    label: str
    holds: bool


@dataclass(frozen=True)
class RelationReport:
    checks: tuple[RelationCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.holds for c in self.checks)

    def failures(self) -> tuple[RelationCheck, ...]:
        return tuple(c for c in self.checks if not c.holds)


def verify_relations(gmap: GeneratorMap) -> RelationReport:
    """Evaluate the image of every defining relation of the source algebra.

    Checks vertex idempotence and orthogonality, edge anchoring on both sides
    for real and ghost edges, both Cuntz-Krieger relations (the vertex
    relation only at emitting vertices), and reports each image as zero or
    not.
    """
    g = gmap.source
    checks: list[RelationCheck] = []

    def record(label: str, image: MatrixOverElement):
        checks.append(RelationCheck(label, image.is_zero))

    V = gmap.vertex_images
    E = gmap.edge_images
    Gh = gmap.ghost_images
    for vi in g.vertices:
        for vj in g.vertices:
            image = V[vi] * V[vj]
            if vi == vj:
                image = image - V[vi]
            record(f"{vi}.{vj} - delta.{vi}", image)
    for e in g.edges:
        record(f"{e.label} - {e.label}.{e.dst}", E[e.label] - E[e.label] * V[e.dst])
        record(f"{e.label} - {e.src}.{e.label}", E[e.label] - V[e.src] * E[e.label])
        record(f"{e.label}^* - {e.label}^*.{e.src}", Gh[e.label] - Gh[e.label] * V[e.src])
        record(f"{e.label}^* - {e.dst}.{e.label}^*", Gh[e.label] - V[e.dst] * Gh[e.label])
    for e in g.edges:
        for f in g.edges:
            image = Gh[e.label] * E[f.label]
            if e.label == f.label:
                image = image - V[f.dst]
            record(f"{e.label}^*.{f.label} - delta.{f.dst}", image)
    for v in g.vertices:
        out = g.out_edges(v)
        if not out:
            continue
        image = V[v]
        for e in out:
            image = image - E[e.label] * Gh[e.label]
        record(f"{v} - sum {v}-loops e.e^*", image)
    return RelationReport(tuple(checks))


def surjectivity_witness(n: int, m: int, i: int, j: int, k: int,
                         field: Field = QQ) -> tuple[Element, Element]:
    """Preimages of the two generating corners of the (i, j) matrix slot.

    Returns the monomials mapping onto ``x_k e_ij`` (starred loop in the slot)
    and ``y_k e_ij`` (plain loop in the slot): ride the chain from i up to the
    loop vertex, apply the loop or its ghost, ride back down to j.  Both are
    verified through the generator map before being returned.
    """
    if not (1 <= i <= m and 1 <= j <= m):
        raise PreconditionError(f"matrix indices ({i}, {j}) outside 1..{m}")
    if not 1 <= k <= n:
        raise PreconditionError(f"loop index {k} outside 1..{n}")
    gmap = tailed_rose_matrix_map(n, m, field)
    g = gmap.source
    chain_up = [f"e{t}" for t in range(i, m)]
    chain_down = [f"e{t}" for t in range(j, m)]
    loop = f"f{k}"
    anchor_i = f"v{i}"
    anchor_j = f"v{j}"
    x_wit = alg.normalize(
        g,
        [(1, g.path(chain_up, at=anchor_i if not chain_up else None),
          g.path(chain_down + [loop], at=None))],
        field,
    )
    y_wit = alg.normalize(
        g,
        [(1, g.path(chain_up + [loop], at=None),
          g.path(chain_down, at=anchor_j if not chain_down else None))],
        field,
    )
    base = gmap.base
    x_target = MatrixOverElement.unit(m, base, i, j, alg.star(alg.edge(base, f"y{k}", field)), field)
    y_target = MatrixOverElement.unit(m, base, i, j, alg.edge(base, f"y{k}", field), field)
    if gmap.image(x_wit) != x_target or gmap.image(y_wit) != y_target:
        raise PreconditionError("surjectivity witness failed its image check")
    return x_wit, y_wit


@dataclass(frozen=True)
class LineIsoReport:
    relations: RelationReport
    dimension: int
    expected_dimension: int

    @property
    def passed(self) -> bool:
        return self.relations.passed and self.dimension == self.expected_dimension


def verify_line_iso(n: int, field: Field = QQ) -> LineIsoReport:
    """Check the line-graph matrix realization and the forced dimension n*n."""
    if n < 1:
        raise PreconditionError("line size must be at least 1")
    gmap = line_matrix_map(n, field)
    report = verify_relations(gmap)
    dim = alg.dim_basis(line_graph(n))
    return LineIsoReport(report, dim, n * n)
