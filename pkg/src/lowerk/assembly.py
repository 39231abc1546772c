"""From a Coxeter diagram to its lower K-groups.

Pipeline: the truncated simplex is a cocompact model for proper actions;
its stabilizers feed a two-column chain complex of ``Wh_q`` groups whose
homology is the E2 page.  Adding the cokernels of the relative assembly maps
of the type-I geodesic stabilizers gives the K-groups.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from sympy import factorint

from .coxeter import CoxeterDiagram, vertex_profile
from .errors import MissingInducedMap, NonCollapsingPage, UnknownTag
from .finite_groups import ktheory_of
from .geodesics import AmalgamTag, CanonicalType, enumerate_type1
from .groups import C2, TRIVIAL, C2xA5, FiniteGroupType
from .kvalue import INF_Z2, NIL0, NIL1, ZERO, KValue
from .snf import invariant_factors

DEGREES = (1, 0, -1, -2)  # -2 stands for every n <= -2


# ---------------------------------------------------------------------------
# cell complex


@dataclass(frozen=True)
class Cell:
    dim: int
    stabilizer: FiniteGroupType
    origin: str  # simplex face/edge/vertex, truncation face/edge/vertex
    key: tuple

    def __str__(self):
        return f"{self.origin}{self.key}: {self.stabilizer}"


@dataclass
class EquivariantCellComplex:
    diagram: CoxeterDiagram
    cells: dict[int, list[Cell]] = field(default_factory=lambda: {d: [] for d in range(4)})
    boundary: dict[Cell, tuple[Cell, Cell]] = field(default_factory=dict)

    def counts(self) -> tuple[int, int, int, int]:
        return tuple(len(self.cells[d]) for d in range(4))

    def stabilizers(self, dim: int) -> Counter:
        return Counter(c.stabilizer.canonical() for c in self.cells[dim])


def build_cell_complex(diagram: CoxeterDiagram) -> EquivariantCellComplex:
    profile = vertex_profile(diagram)
    ideal = set(profile.ideal_vertices())
    cx = EquivariantCellComplex(diagram)
    cx.cells[3].append(Cell(3, TRIVIAL, "simplex", ()))
    for i in range(4):
        cx.cells[2].append(Cell(2, C2, "face", (i,)))
    for v in sorted(ideal):
        cx.cells[2].append(Cell(2, TRIVIAL, "truncation face", (v,)))

    vertex_cell = {}
    for v in range(4):
        if v not in ideal:
            vertex_cell[v] = Cell(0, profile[v].group, "vertex", (v,))
            cx.cells[0].append(vertex_cell[v])
    trunc_vertex = {}
    for v in sorted(ideal):
        for e in diagram.edges():
            if v not in e:
                dihedral = FiniteGroupType.dihedral(diagram.label(*e))
                trunc_vertex[(v, e)] = Cell(0, dihedral, "truncation vertex", (v, e))
                cx.cells[0].append(trunc_vertex[(v, e)])

    def end(v, e):
        return trunc_vertex[(v, e)] if v in ideal else vertex_cell[v]

    for e in diagram.edges():
        a, b = diagram.edge_endpoints(e)
        cell = Cell(1, FiniteGroupType.dihedral(diagram.label(*e)), "edge", e)
        cx.cells[1].append(cell)
        cx.boundary[cell] = (end(a, e), end(b, e))
    for v in sorted(ideal):
        for i in range(4):
            if i == v:
                continue
            j, k = (x for x in range(4) if x not in (v, i))
            cell = Cell(1, C2, "truncation edge", (v, i))
            cx.cells[1].append(cell)
            e1, e2 = tuple(sorted((i, j))), tuple(sorted((i, k)))
            cx.boundary[cell] = (trunc_vertex[(v, e1)], trunc_vertex[(v, e2)])
    return cx


# ---------------------------------------------------------------------------
# induced maps


def _d(n):
    return FiniteGroupType.dihedral(n)


@dataclass
class InducedMapCatalog:
    """(edge type, vertex type, q) -> integer matrix on the free generators.

    Keys use canonical types.  The matrix has one row per free generator of
    the target and one column per free generator of the source.
    """

    maps: dict = field(
        default_factory=lambda: {
            (_d(5), _d(10), 1): [[1], [0]],
            (_d(5), C2xA5, 1): [[1], [0]],
            (_d(6), FiniteGroupType.c2_dihedral(6), -1): [[1], [0], [0]],
            (_d(5), _d(5), 1): [[1]],
            (_d(6), _d(6), -1): [[1]],
        }
    )

    def matrix(self, source: FiniteGroupType, target: FiniteGroupType, q: int):
        """Block for ``Wh_q(source) -> Wh_q(target)``; ``None`` if it is zero."""
        s, t = source.canonical(), target.canonical()
        ws, wt = ktheory_of(s).wh_q(q), ktheory_of(t).wh_q(q)
        if ws.is_zero() or wt.is_zero():
            return None
        if ws.torsion or ws.inf_z2 or ws.nil0 or ws.nil1:
            raise MissingInducedMap(f"Wh_{q}({s}) has torsion; no induced map is modeled")
        try:
            m = self.maps[(s, t, q)]
        except KeyError:
            raise MissingInducedMap(f"no induced map Wh_{q}({s}) -> Wh_{q}({t})") from None
        if len(m) != wt.free or any(len(r) != ws.free for r in m):
            raise MissingInducedMap(f"catalog map {s} -> {t} at q={q} has the wrong shape")
        return m


DEFAULT_MAPS = InducedMapCatalog()


# ---------------------------------------------------------------------------
# E2 page


def kvalue_from_factors(free: int, factors) -> KValue:
    """``Z^free + sum Z/d``, each ``Z/d`` split into prime-power parts."""
    torsion = []
    for d in factors:
        for p, e in factorint(d).items():
            torsion.append(p**e)
    return KValue(free, tuple(torsion))


@dataclass(frozen=True)
class E2Column:
    e0: KValue
    e1: KValue


def e2_page(cx: EquivariantCellComplex, q: int, maps: InducedMapCatalog = DEFAULT_MAPS) -> E2Column:
    # generators of C0: free generators, then one per cyclic torsion summand
    row_of, rows, relations = {}, 0, []
    for v in cx.cells[0]:
        w = ktheory_of(v.stabilizer).wh_q(q)
        row_of[v] = rows
        rows += w.free
        for d in w.torsion:
            relations.append((rows, d))
            rows += 1
    cols = []
    for e in cx.cells[1]:
        w = ktheory_of(e.stabilizer).wh_q(q)
        if w.is_zero():
            continue
        blocks = []
        for sign, v in zip((1, -1), cx.boundary[e]):
            m = maps.matrix(e.stabilizer, v.stabilizer, q)
            if m is not None:
                blocks.append((sign, row_of[v], m))
        for c in range(w.free):
            col = [0] * rows
            for sign, start, m in blocks:
                for r, row in enumerate(m):
                    col[start + r] += sign * row[c]
            cols.append(col)

    def transpose(columns):
        return [[col[r] for col in columns] for r in range(rows)]

    torsion_cols = []
    for r, d in relations:
        col = [0] * rows
        col[r] = d
        torsion_cols.append(col)

    everything = cols + torsion_cols
    if rows == 0:
        return E2Column(ZERO, KValue(len(cols)))
    factors = invariant_factors(transpose(everything)) if everything else []
    coker = kvalue_from_factors(rows - len(factors), [d for d in factors if d > 1])
    rank_t = len(invariant_factors(transpose(torsion_cols))) if torsion_cols else 0
    ker = KValue(len(cols) - (len(factors) - rank_t))
    return E2Column(coker, ker)


def h_fin(diagram: CoxeterDiagram, maps: InducedMapCatalog = DEFAULT_MAPS) -> dict[int, KValue]:
    """Equivariant homology of the proper model, read off the collapsing page."""
    cx = build_cell_complex(diagram)
    out = {}
    for q in (1, 0, -1):
        col = e2_page(cx, q, maps)
        if not col.e1.is_zero():
            raise NonCollapsingPage(f"E2_(1,{q}) = {col.e1} for {diagram}")
        out[q] = col.e0
    out[-2] = ZERO
    return out


# ---------------------------------------------------------------------------
# cokernels of relative assembly maps


def cokernel_of(tag: CanonicalType, n: int) -> KValue:
    if tag.tag == AmalgamTag.DK_TIMES_DINF and tag.k in (3, 5):
        return ZERO
    if tag.tag == AmalgamTag.DK_TIMES_DINF and tag.k == 2 or tag.tag in (
        AmalgamTag.D4_STAR_D2_D4,
        AmalgamTag.MIXED_D2_D4,
    ):
        return INF_Z2 if n in (0, 1) else ZERO
    if tag.tag == AmalgamTag.DK_TIMES_DINF and tag.k == 4:
        return {0: NIL0, 1: NIL1}.get(n, ZERO)
    raise UnknownTag(f"no cokernel data for {tag}")


# ---------------------------------------------------------------------------
# assembly

JSON_KEYS = {1: "Wh", 0: "K0t", -1: "Km1", -2: "Kbelow"}


@dataclass(frozen=True)
class KTheoryResult:
    group: str
    values: dict  # degree -> KValue, degree -2 meaning every n <= -2

    def __getitem__(self, n: int) -> KValue:
        return self.values[max(n, -2)]

    def normalized(self) -> KTheoryResult:
        return KTheoryResult(self.group, {n: v.normalized() for n, v in self.values.items()})

    def to_json(self) -> dict:
        out = {"group": self.group}
        out.update({JSON_KEYS[n]: self.values[n].to_json() for n in DEGREES})
        return out

    def render(self, exact: bool = False) -> str:
        labels = {1: "Wh", 0: "K0t", -1: "Km1", -2: "K<=-2"}
        return "; ".join(f"{labels[n]} = {self.values[n].render(exact)}" for n in DEGREES)


def assemble(
    diagram: CoxeterDiagram,
    maps: InducedMapCatalog = DEFAULT_MAPS,
    stabilizers=None,
) -> KTheoryResult:
    """``K_n(Z G) = H_n(proper model) + sum of assembly-map cokernels``."""
    h = h_fin(diagram, maps)
    descs = enumerate_type1(diagram) if stabilizers is None else stabilizers
    values = {}
    for n in DEGREES:
        values[n] = h[n] + sum((cokernel_of(d.canonical, n) for d in descs), ZERO)
    return KTheoryResult(str(diagram), values)
