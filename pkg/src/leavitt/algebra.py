"""Exact arithmetic in the graph algebra spanned by normal-form monomials p q*.

Elements are sparse scalar combinations of monomials, where a monomial pairs a
real path ``p`` with a ghost path ``q`` (stored un-starred) sharing a range
vertex.  Two rewrite facts keep everything canonical:

* a ghost edge meets a real edge only at the junction of a product, where
  ``e* f`` collapses to a range vertex or to zero;
* at each emitting vertex one designated out-edge (the graph's
  ``special_edge``) has its ``e e*`` monomial eliminated in favour of the
  vertex minus the remaining ``f f*`` terms.

A monomial therefore has at most one reducible junction (its last edge pair),
rewriting strictly shortens it, and normal forms are unique.  Scalars are
exact rationals by default or prime-field residues on request; no floats
appear anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from .errors import PreconditionError
from .graphs import Graph, Path, is_acyclic

__all__ = [
    "RationalField",
    "PrimeField",
    "QQ",
    "Monomial",
    "Element",
    "INFINITE",
    "zero",
    "vertex",
    "edge",
    "ghost",
    "path_element",
    "ghost_path_element",
    "monomial_element",
    "normalize",
    "add",
    "linear",
    "mul",
    "star",
    "graded_parts",
    "dim_basis",
    "local_unit",
    "monomial_key",
]


# -- scalar fields -------------------------------------------------------------


class RationalField:
    """Exact rational scalars backed by ``fractions.Fraction``."""

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise PreconditionError(f"cannot coerce {x!r} into the rational field")

    def from_ratio(self, num: int, den: int) -> Fraction:
        return Fraction(num, den)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise PreconditionError("rational inverse of zero")
        return 1 / Fraction(a)

    def format(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(RationalField)

    def __repr__(self):
        return "QQ"


QQ = RationalField()


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    """Residues modulo a prime, stored as ints in ``0..modulus-1``."""

    modulus: int

    def __post_init__(self):
        if not _is_prime(self.modulus):
            raise PreconditionError(f"prime-field modulus must be prime, got {self.modulus}")

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def coerce(self, x) -> int:
        if isinstance(x, int):
            return x % self.modulus
        if isinstance(x, Fraction):
            return self.from_ratio(x.numerator, x.denominator)
        raise PreconditionError(f"cannot coerce {x!r} into GF({self.modulus})")

    def from_ratio(self, num: int, den: int) -> int:
        return self.mul(num % self.modulus, self.inv(den))

    def add(self, a, b):
        return (a + b) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def inv(self, a):
        a %= self.modulus
        if a == 0:
            raise PreconditionError(f"inverse of zero in GF({self.modulus})")
        return pow(a, -1, self.modulus)

    def format(self, a) -> str:
        return str(a)


Field = Union[RationalField, PrimeField]


# -- monomials and elements -----------------------------------------------------


class Monomial(NamedTuple):
    """Normal-form basis monomial ``real . ghost*`` with matching ranges."""

    real: Path
    ghost: Path


def monomial_key(m: Monomial):
    """Canonical order: total length, then real length, then labels, then anchors."""
    return (
        len(m.real.edges) + len(m.ghost.edges),
        len(m.real.edges),
        m.real.edges,
        m.ghost.edges,
        m.real.anchor,
        m.ghost.anchor,
    )


class Element:
    """An immutable scalar combination of normal-form monomials over one graph.

    The empty combination is zero.  Stored coefficients are never zero, and
    every stored monomial satisfies the junction normal form.
    """

    __slots__ = ("graph", "field", "_terms")

    def __init__(self, graph: Graph, field: Field, terms: dict):
        self.graph = graph
        self.field = field
        self._terms = terms

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def support(self) -> tuple[Monomial, ...]:
        return tuple(sorted(self._terms, key=monomial_key))

    def coeff(self, m: Monomial):
        return self._terms.get(m, self.field.zero)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return (
            self.graph == other.graph
            and self.field == other.field
            and self._terms == other._terms
        )

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return linear(self.field.one, self, self.field.one, other)

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return linear(self.field.one, self, self.field.neg(self.field.one), other)

    def __neg__(self):
        return linear(self.field.neg(self.field.one), self, self.field.zero, zero(self.graph, self.field))

    def __mul__(self, other):
        if isinstance(other, Element):
            return mul(self, other)
        return _scale(self, other)

    def __rmul__(self, other):
        return _scale(self, other)

    def __repr__(self):
        from .exprio import format_element

        return f"<Element {format_element(self)}>"


def _scale(a: Element, c) -> Element:
    c = a.field.coerce(c)
    if c == a.field.zero:
        return zero(a.graph, a.field)
    return Element(a.graph, a.field, {m: a.field.mul(c, k) for m, k in a._terms.items()})


def _check_same(a: Element, b: Element):
    if a.graph != b.graph:
        raise PreconditionError("elements live over different graphs")
    if a.field != b.field:
        raise PreconditionError("elements use different scalar fields")


# -- construction ----------------------------------------------------------------


def zero(g: Graph, field: Field = QQ) -> Element:
    return Element(g, field, {})


def vertex(g: Graph, v: str, field: Field = QQ) -> Element:
    p = g.path(at=v)
    return Element(g, field, {Monomial(p, p): field.one})


def edge(g: Graph, label: str, field: Field = QQ) -> Element:
    return path_element(g, g.path([label]), field)


def ghost(g: Graph, label: str, field: Field = QQ) -> Element:
    return ghost_path_element(g, g.path([label]), field)


def path_element(g: Graph, p: Path, field: Field = QQ) -> Element:
    """The monomial ``p`` with an empty ghost part."""
    p = g.check_path(p)
    anchor = g.path_range(p)
    return Element(g, field, {Monomial(p, Path(anchor)): field.one})


def ghost_path_element(g: Graph, q: Path, field: Field = QQ) -> Element:
    """The monomial ``q*`` with an empty real part."""
    q = g.check_path(q)
    anchor = g.path_range(q)
    return Element(g, field, {Monomial(Path(anchor), q): field.one})


def monomial_element(g: Graph, p: Path, q: Path, coeff=1, field: Field = QQ) -> Element:
    return normalize(g, [(coeff, p, q)], field)


# -- the rewrite core -------------------------------------------------------------


def _drop_last(p: Path) -> Path:
    return Path(p.anchor, p.edges[:-1])


def _bump(field: Field, sink: dict, key: Monomial, c):
    new = field.add(sink.get(key, field.zero), c)
    if new == field.zero:
        sink.pop(key, None)
    else:
        sink[key] = new


def _accumulate(g: Graph, field: Field, sink: dict, p: Path, q: Path, c):
    """Fold ``c * p q*`` into ``sink`` in normal form.

    Only the junction (the shared last edge) can be reducible.  When it is the
    special edge at its source vertex, trade it for the vertex relation: the
    shortened monomial may reduce again, while the sibling-edge terms are
    already normal because their last edges are not special.
    """
    while True:
        if p.edges and q.edges and p.edges[-1] == q.edges[-1]:
            last = g.edge(p.edges[-1])
            if g.special_edge(last.src).label == last.label:
                p = _drop_last(p)
                q = _drop_last(q)
                for f in g.out_edges(last.src):
                    if f.label == last.label:
                        continue
                    key = Monomial(
                        Path(p.anchor, p.edges + (f.label,)),
                        Path(q.anchor, q.edges + (f.label,)),
                    )
                    _bump(field, sink, key, field.neg(c))
                continue
        break
    _bump(field, sink, Monomial(p, q), c)


def normalize(g: Graph, raw: Iterable[tuple[object, Path, Path]], field: Field = QQ) -> Element:
    """Build an element from ``(coefficient, real path, ghost path)`` triples.

    Triples whose paths have different ranges denote zero and are dropped, as
    are zero coefficients.  Paths are validated against the graph.
    """
    sink: dict = {}
    for c, p, q in raw:
        c = field.coerce(c)
        p = g.check_path(p)
        q = g.check_path(q)
        if c == field.zero or g.path_range(p) != g.path_range(q):
            continue
        _accumulate(g, field, sink, p, q, c)
    return Element(g, field, sink)


def add(a: Element, b: Element) -> Element:
    return linear(a.field.one, a, a.field.one, b)


def linear(c1, a: Element, c2, b: Element) -> Element:
    """The combination ``c1*a + c2*b`` with zero coefficients pruned."""
    _check_same(a, b)
    field = a.field
    c1 = field.coerce(c1)
    c2 = field.coerce(c2)
    sink: dict = {}
    for m, k in a._terms.items():
        _bump(field, sink, m, field.mul(c1, k))
    for m, k in b._terms.items():
        _bump(field, sink, m, field.mul(c2, k))
    return Element(a.graph, field, sink)


def _strip_prefix(g: Graph, x: Path, y: Path) -> Optional[Path]:
    """The tail ``t`` with ``y = x . t``, or None when ``x`` is not a prefix of ``y``."""
    if x.anchor != y.anchor or len(x.edges) > len(y.edges):
        return None
    if y.edges[: len(x.edges)] != x.edges:
        return None
    return Path(g.path_range(x), y.edges[len(x.edges):])


def _concat(x: Path, y: Path) -> Path:
    return Path(x.anchor, x.edges + y.edges)


def mul(a: Element, b: Element) -> Element:
    """Bilinear product.

    For monomials ``p q*`` and ``r s*`` the junction ``q* r`` survives only
    when one path extends the other: ``r = q.t`` yields ``(p.t) s*`` and
    ``q = r.t`` yields ``p (s.t)*``; otherwise the pair contributes nothing.
    """
    _check_same(a, b)
    g = a.graph
    field = a.field
    sink: dict = {}
    for (p1, q1), c1 in a._terms.items():
        for (p2, q2), c2 in b._terms.items():
            t = _strip_prefix(g, q1, p2)
            if t is not None:
                _accumulate(g, field, sink, _concat(p1, t), q2, field.mul(c1, c2))
                continue
            t = _strip_prefix(g, p2, q1)
            if t is not None:
                _accumulate(g, field, sink, p1, _concat(q2, t), field.mul(c1, c2))
    return Element(g, field, sink)


def star(a: Element) -> Element:
    """The involution extending ``p q* -> q p*``; an anti-automorphism."""
    sink: dict = {}
    for (p, q), c in a._terms.items():
        _accumulate(a.graph, a.field, sink, q, p, c)
    return Element(a.graph, a.field, sink)


def graded_parts(a: Element) -> dict[int, Element]:
    """Split by degree (real length minus ghost length); parts sum back to ``a``."""
    buckets: dict[int, dict] = {}
    for m, c in a._terms.items():
        d = len(m.real.edges) - len(m.ghost.edges)
        buckets.setdefault(d, {})[m] = c
    return {
        d: Element(a.graph, a.field, terms)
        for d, terms in sorted(buckets.items())
    }


# -- dimension and local units -----------------------------------------------------


class _InfiniteDimension:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"


INFINITE = _InfiniteDimension()


def dim_basis(g: Graph) -> Union[int, _InfiniteDimension]:
    """Count the normal-form monomials, or INFINITE when the graph has a cycle.

    Cyclic graphs carry the linearly independent powers of a closed path, so
    only the acyclic case is counted: paths ending at each vertex are tallied
    by dynamic programming, every range-matched pair contributes, and pairs
    whose shared last edge is special are the ones the rewrite removes.
    """
    if not is_acyclic(g):
        return INFINITE
    ending: dict[str, int] = {}
    # Kahn order so that counts at a vertex see all incoming sources first
    indeg = {v: len(g.in_edges(v)) for v in g.vertices}
    queue = [v for v in g.vertices if indeg[v] == 0]
    order = []
    while queue:
        u = queue.pop()
        order.append(u)
        for e in g.out_edges(u):
            indeg[e.dst] -= 1
            if indeg[e.dst] == 0:
                queue.append(e.dst)
    for u in order:
        ending[u] = 1 + sum(ending[e.src] for e in g.in_edges(u))
    total = sum(n * n for n in ending.values())
    removed = sum(ending[v] ** 2 for v in g.vertices if g.out_edges(v))
    return total - removed


def local_unit(elements: Sequence[Element]) -> Element:
    """A sum of distinct vertices acting as a two-sided identity on the inputs.

    The covering set collects the source of every real and ghost path in the
    supports; vertices appear in declared order.
    """
    if not elements:
        raise PreconditionError("local_unit needs at least one element")
    first = elements[0]
    for other in elements[1:]:
        _check_same(first, other)
    cover = set()
    for el in elements:
        for m in el._terms:
            cover.add(m.real.anchor)
            cover.add(m.ghost.anchor)
    g = first.graph
    field = first.field
    terms = {}
    for v in g.vertices:
        if v in cover:
            p = Path(v)
            terms[Monomial(p, p)] = field.one
    return Element(g, field, terms)
