"""Type-I geodesic stabilizers: walks along the 1-skeleton of the simplex.

A periodic geodesic of type I runs along a union of simplex edges.  At each
endpoint the vertex stabilizer either reflects the geodesic back (so the
vertex group becomes a factor of the amalgam) or continues it into another
edge of the same label.  The local rule depends on the vertex type and on
the angle slot of the incoming edge; it is encoded as data in
:class:`EdgeBehaviorTable` and :class:`ExtensionPairing`.

Angle slots at a vertex are numbered 0, 1, 2 in order of increasing angle
``pi/m``, that is by decreasing label; ties are broken by the generator pair.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum

from .coxeter import CoxeterDiagram, CuspType, vertex_profile
from .errors import LoopDetected, UnsupportedAmalgam
from .groups import C2xA5, C2xS4, S4, FiniteGroupType

MAX_STATES = 12


class VertexForm(str, Enum):
    PRODUCT_C2 = "ProductC2"  # G_v = Z/2 x D_k
    DOUBLED = "Doubled"  # G_v = D_2k

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Extends:
    def __str__(self):
        return "Extends"


@dataclass(frozen=True)
class Reflects:
    form: VertexForm

    def __str__(self):
        return f"Reflects({self.form})"


EXTENDS = Extends()
PRODUCT = Reflects(VertexForm.PRODUCT_C2)
DOUBLED = Reflects(VertexForm.DOUBLED)


def _default_rules() -> dict:
    rules = {
        FiniteGroupType.elem_abelian2(3): (PRODUCT, PRODUCT, PRODUCT),
        FiniteGroupType.c2_dihedral(2): (PRODUCT, PRODUCT, PRODUCT),
        S4: (EXTENDS, EXTENDS, DOUBLED),
        C2xS4: (PRODUCT, DOUBLED, PRODUCT),
        C2xA5: (DOUBLED, DOUBLED, PRODUCT),
    }
    for n in range(3, 7):
        rules[FiniteGroupType.c2_dihedral(n)] = (PRODUCT, EXTENDS, EXTENDS)
    return rules


def _default_pairing() -> dict:
    pairing = {(S4, 0): 1, (S4, 1): 0}
    for n in range(3, 7):
        t = FiniteGroupType.c2_dihedral(n)
        if n % 2:
            pairing[(t, 1)], pairing[(t, 2)] = 2, 1
        else:
            pairing[(t, 1)], pairing[(t, 2)] = 1, 2
    return pairing


@dataclass
class EdgeBehaviorTable:
    """(vertex type, angle slot) -> Extends | Reflects(form).

    Vertex types are the uncanonicalized tags produced by the rank-3
    classification.
    """

    rules: dict = field(default_factory=_default_rules)

    def behavior(self, vertex: FiniteGroupType, slot: int):
        try:
            return self.rules[vertex][slot]
        except KeyError:
            raise KeyError(f"no edge behavior for vertex type {vertex}") from None

    def with_rule(self, vertex: FiniteGroupType, slot: int, behavior) -> EdgeBehaviorTable:
        """A copy with one entry replaced."""
        rules = dict(self.rules)
        row = list(rules[vertex])
        row[slot] = behavior
        rules[vertex] = tuple(row)
        return EdgeBehaviorTable(rules)


@dataclass
class ExtensionPairing:
    """(vertex type, incoming slot) -> outgoing slot, for Extends slots.

    A slot paired with itself is a fold: the central involution of the vertex
    group reverses the geodesic, which therefore reflects there with vertex
    group ``Z/2 x D_k``.
    """

    pairs: dict = field(default_factory=_default_pairing)

    def target(self, vertex: FiniteGroupType, slot: int) -> int:
        return self.pairs[(vertex, slot)]

    def is_involution(self) -> bool:
        return all(self.pairs[(v, self.pairs[(v, s)])] == s for v, s in self.pairs)


DEFAULT_TABLE = EdgeBehaviorTable()
DEFAULT_PAIRING = ExtensionPairing()

# ---------------------------------------------------------------------------
# descriptors


class AmalgamTag(str, Enum):
    DK_TIMES_DINF = "DkTimesDinf"
    D4_STAR_D2_D4 = "D4starD2D4"
    MIXED_D2_D4 = "MixedD2D4"
    LOOP = "LoopType"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class CanonicalType:
    tag: AmalgamTag
    k: int = 0

    def __str__(self):
        if self.tag in (AmalgamTag.DK_TIMES_DINF, AmalgamTag.LOOP):
            return f"{self.tag}({self.k})"
        return str(self.tag)


@dataclass(frozen=True)
class StabilizerDescriptor:
    """Amalgam ``G_v *_{D_k} G_w`` of the two reflecting vertex groups."""

    k: int
    left: VertexForm
    right: VertexForm

    def reversed(self) -> StabilizerDescriptor:
        return StabilizerDescriptor(self.k, self.right, self.left)

    @property
    def canonical(self) -> CanonicalType:
        forms = {self.left, self.right}
        k = self.k
        if forms == {VertexForm.PRODUCT_C2} or k % 2 == 1:
            return CanonicalType(AmalgamTag.DK_TIMES_DINF, k)
        if k == 2:
            if forms == {VertexForm.DOUBLED}:
                return CanonicalType(AmalgamTag.D4_STAR_D2_D4)
            return CanonicalType(AmalgamTag.MIXED_D2_D4)
        raise UnsupportedAmalgam(
            f"amalgam over D_{k} with a D_{2 * k} factor is outside the catalog"
        )

    def render(self) -> str:
        k = self.k
        forms = (self.left, self.right)
        if forms == (VertexForm.PRODUCT_C2,) * 2:
            return f"D_{k} x D_inf"
        if forms == (VertexForm.DOUBLED,) * 2:
            return f"D_{2 * k} *_{{D_{k}}} D_{2 * k}"
        return f"(D_{k} x Z_2) *_{{D_{k}}} D_{2 * k}"

    def __str__(self):
        return self.render()

    def sort_key(self):
        return (self.k, self.render())


def _ordered(left: VertexForm, right: VertexForm) -> tuple[VertexForm, VertexForm]:
    # the product side is written first in mixed amalgams
    if left == VertexForm.DOUBLED and right == VertexForm.PRODUCT_C2:
        return right, left
    return left, right


# ---------------------------------------------------------------------------
# walking


@dataclass(frozen=True)
class GeodesicPath:
    """A maximal walk: edges in order, and the verdict at each end.

    ``ends`` holds a :class:`VertexForm` per end, or ``None`` for a path
    discarded at an ideal vertex.
    """

    edges: tuple[tuple[int, int], ...]
    label: int
    ends: tuple[VertexForm | None, VertexForm | None]
    end_vertices: tuple[int, int]

    @property
    def discarded(self) -> bool:
        return None in self.ends

    def descriptor(self) -> StabilizerDescriptor:
        if self.discarded:
            raise ValueError("discarded paths carry no stabilizer")
        return StabilizerDescriptor(self.label, *_ordered(*self.ends))


def _slots(diagram: CoxeterDiagram, v: int) -> list[tuple[int, int]]:
    """Incident edges of vertex ``v`` in slot order."""
    gens = diagram.vertex_generators(v)
    edges = [(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    return sorted(edges, key=lambda e: (-diagram.label(*e), e))


class _Walker:
    def __init__(self, diagram, table, pairing):
        self.diagram = diagram
        self.profile = vertex_profile(diagram)
        self.table = table
        self.pairing = pairing

    def ray(self, edge, toward):
        """Follow ``edge`` into vertex ``toward``; return (edges, verdict, vertex)."""
        label = self.diagram.label(*edge)
        visited, edges = set(), []
        while True:
            state = (edge, toward)
            if state in visited or len(visited) >= MAX_STATES:
                raise LoopDetected(
                    f"walk along label-{label} edges revisits {edge} toward vertex {toward}",
                    descriptor=CanonicalType(AmalgamTag.LOOP, label),
                )
            visited.add(state)
            cls = self.profile[toward]
            if cls.is_affine:
                return edges, None, toward
            slots = _slots(self.diagram, toward)
            slot = slots.index(edge)
            behavior = self.table.behavior(cls.group, slot)
            if isinstance(behavior, Reflects):
                return edges, behavior.form, toward
            out = self.pairing.target(cls.group, slot)
            if out == slot:
                return edges, VertexForm.PRODUCT_C2, toward
            nxt = slots[out]
            assert self.diagram.label(*nxt) == label, "extension changed the edge label"
            edges.append(nxt)
            a, b = self.diagram.edge_endpoints(nxt)
            edge, toward = nxt, (b if a == toward else a)

    def path(self, edge) -> GeodesicPath:
        a, b = self.diagram.edge_endpoints(edge)
        left_edges, left, va = self.ray(edge, a)
        right_edges, right, vb = self.ray(edge, b)
        edges = tuple(reversed(left_edges)) + (edge,) + tuple(right_edges)
        if len(set(edges)) != len(edges):
            raise LoopDetected(
                f"walk from {edge} closes up",
                descriptor=CanonicalType(AmalgamTag.LOOP, self.diagram.label(*edge)),
            )
        return GeodesicPath(edges, self.diagram.label(*edge), (left, right), (va, vb))


def geodesic_paths(
    diagram: CoxeterDiagram,
    table: EdgeBehaviorTable = DEFAULT_TABLE,
    pairing: ExtensionPairing = DEFAULT_PAIRING,
) -> list[GeodesicPath]:
    """Every maximal path, discarded ones included, in order of first edge."""
    walker = _Walker(diagram, table, pairing)
    consumed, paths = set(), []
    for edge in diagram.edges():
        if edge in consumed:
            continue
        p = walker.path(edge)
        consumed.update(p.edges)
        paths.append(p)
    return paths


def enumerate_type1(
    diagram: CoxeterDiagram,
    table: EdgeBehaviorTable = DEFAULT_TABLE,
    pairing: ExtensionPairing = DEFAULT_PAIRING,
) -> list[StabilizerDescriptor]:
    """Stabilizers of type-I geodesics up to conjugacy, one per maximal path."""
    out = [p.descriptor() for p in geodesic_paths(diagram, table, pairing) if not p.discarded]
    return sorted(out, key=StabilizerDescriptor.sort_key)


def cusp_groups(diagram: CoxeterDiagram) -> list[CuspType]:
    profile = vertex_profile(diagram)
    return sorted((c.cusp for c in profile.classes if c.is_affine), key=lambda c: c.value)


def render_multiset(items) -> str:
    """``a, b (twice)`` style rendering of a multiset of strings; ``-`` if empty."""
    counts = Counter(str(x) for x in items)
    if not counts:
        return "-"
    words = {2: "twice", 3: "three times", 4: "four times"}
    parts = []
    for s in sorted(counts):
        c = counts[s]
        parts.append(s if c == 1 else f"{s} ({words.get(c, f'{c} times')})")
    return ", ".join(parts)
