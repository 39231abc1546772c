"""Coxeter diagrams of rank 4, their special subgroups, and vertex types.

Simplex conventions used throughout the package:

* generator ``i`` <-> face hyperplane ``P_i``;
* simplex vertex ``v`` is the intersection of the three faces other than
  ``P_v``, so its stabilizer is the special subgroup omitting generator ``v``;
* simplex edge ``{i, j}`` is ``P_i & P_j``, with stabilizer ``D_{m_ij}`` and
  endpoints the two vertices in the complement of ``{i, j}``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

import numpy as np

from . import registry
from .errors import (
    AsymmetricMatrix,
    MalformedNotation,
    ToleranceAmbiguity,
    UnclassifiableRank3,
    UnknownName,
)
from .groups import C2xA5, C2xS4, S4, FiniteGroupType

GRAM_TOL = 1e-9


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric matrix of Coxeter labels with ones on the diagonal."""

    m: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.m)
        object.__setattr__(self, "m", rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise AsymmetricMatrix(f"matrix is not square: {rows}")
        for i in range(n):
            if rows[i][i] != 1:
                raise AsymmetricMatrix(f"diagonal entry m[{i}][{i}] = {rows[i][i]} != 1")
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise AsymmetricMatrix(f"m[{i}][{j}] != m[{j}][{i}]")
                if rows[i][j] < 2:
                    raise AsymmetricMatrix(f"label m[{i}][{j}] = {rows[i][j]} < 2")

    @property
    def rank(self) -> int:
        return len(self.m)

    def __getitem__(self, ij):
        i, j = ij
        return self.m[i][j]

    def restrict(self, gens) -> CoxeterMatrix:
        return CoxeterMatrix(tuple(tuple(self.m[i][j] for j in gens) for i in gens))

    def gram(self) -> np.ndarray:
        n = self.rank
        g = np.empty((n, n))
        for i in range(n):
            for j in range(n):
                g[i, j] = 1.0 if i == j else -math.cos(math.pi / self.m[i][j])
        return g

    def to_text(self) -> str:
        """Render in the raw-matrix literal format."""
        lines = [f"rank {self.rank}"]
        lines += [" ".join(str(x) for x in row) for row in self.m]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CoxeterDiagram:
    matrix: CoxeterMatrix
    name: str | None = None

    @property
    def rank(self) -> int:
        return self.matrix.rank

    def label(self, i: int, j: int) -> int:
        return self.matrix[i, j]

    def edges(self) -> list[tuple[int, int]]:
        """Simplex edges as generator pairs, in lexicographic order."""
        return list(combinations(range(self.rank), 2))

    def edge_endpoints(self, edge: tuple[int, int]) -> tuple[int, int]:
        rest = [k for k in range(self.rank) if k not in edge]
        return rest[0], rest[1]

    def vertex_generators(self, v: int) -> tuple[int, ...]:
        return tuple(k for k in range(self.rank) if k != v)

    def __str__(self):
        return self.name or "rank %d diagram %s" % (self.rank, self.matrix.m)


@dataclass(frozen=True)
class SpecialSubgroup:
    generators: tuple[int, ...]
    submatrix: CoxeterMatrix

    def labels(self) -> tuple[int, ...]:
        g = range(len(self.generators))
        return tuple(self.submatrix[i, j] for i, j in combinations(g, 2))


class CuspType(str, Enum):
    HEX = "[3,6]"
    SQUARE = "[4,4]"
    TRIANGLE = "[3^[3]]"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SubgroupClassification:
    """Either ``Spherical(group)`` or ``Affine(cusp)``; exactly one is set."""

    group: FiniteGroupType | None = None
    cusp: CuspType | None = None

    @property
    def is_affine(self) -> bool:
        return self.cusp is not None

    def __str__(self):
        return f"Affine({self.cusp})" if self.is_affine else f"Spherical({self.group})"


def Spherical(group: FiniteGroupType) -> SubgroupClassification:
    return SubgroupClassification(group=group)


def Affine(cusp: CuspType) -> SubgroupClassification:
    return SubgroupClassification(cusp=cusp)


# ---------------------------------------------------------------------------
# parsing

_INT_LIST = r"\s*\d+\s*(?:,\s*\d+\s*)*"


def _labels(text: str) -> list[int]:
    return [int(x) for x in text.split(",")]


def _check_labels(labels, text):
    bad = [x for x in labels if x < 2]
    if bad:
        raise MalformedNotation(f"labels must be >= 2 in {text!r}")


def parse_matrix_text(text: str) -> CoxeterMatrix:
    """Parse the raw-matrix literal: ``rank n`` then ``n`` rows of labels."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.strip().splitlines()]
    lines = [ln for ln in lines if ln]
    head = lines[0].split()
    if len(head) != 2 or head[0] != "rank" or not head[1].isdigit():
        raise MalformedNotation(f"expected 'rank N' header, got {lines[0]!r}")
    n = int(head[1])
    rows = lines[1:]
    if len(rows) != n:
        raise MalformedNotation(f"expected {n} matrix rows, got {len(rows)}")
    try:
        m = tuple(tuple(int(x) for x in r.split()) for r in rows)
    except ValueError as exc:
        raise MalformedNotation(f"non-integer label in matrix: {exc}") from None
    if any(len(r) != n for r in m):
        raise MalformedNotation("matrix rows have the wrong length")
    return CoxeterMatrix(m)


def parse_diagram(text: str) -> CoxeterDiagram:
    """Build a diagram from a registry name, ``[p,q,r]``, ``[(p,q,r,s)]``,
    or a raw-matrix literal."""
    if text.lstrip().startswith("rank"):
        return CoxeterDiagram(parse_matrix_text(text))
    rows = registry.matrix_rows(text)
    if rows is not None:
        return CoxeterDiagram(CoxeterMatrix(rows), registry.normalize_name(text))

    s = text.strip()
    m = re.fullmatch(rf"\[\s*\(({_INT_LIST})\)\s*\]", s)
    if m:
        labels = _labels(m.group(1))
        if len(labels) != 4:
            raise MalformedNotation(f"cycle notation needs 4 labels: {text!r}")
        _check_labels(labels, text)
        a, b, c, d = labels
        rows = [[1, a, 2, d], [a, 1, b, 2], [2, b, 1, c], [d, 2, c, 1]]
        return CoxeterDiagram(CoxeterMatrix(rows), s)
    m = re.fullmatch(rf"\[({_INT_LIST})\]", s)
    if m:
        labels = _labels(m.group(1))
        if len(labels) != 3:
            raise MalformedNotation(f"chain notation needs 3 labels: {text!r}")
        _check_labels(labels, text)
        a, b, c = labels
        rows = [[1, a, 2, 2], [a, 1, b, 2], [2, b, 1, c], [2, 2, c, 1]]
        return CoxeterDiagram(CoxeterMatrix(rows), s)
    raise UnknownName(f"unknown diagram {text!r}")


# ---------------------------------------------------------------------------
# special subgroups


def special_subgroups(diagram: CoxeterDiagram, k: int) -> list[SpecialSubgroup]:
    """All special subgroups on ``k`` generators, subsets in lexicographic order."""
    if not 1 <= k <= diagram.rank:
        raise ValueError(f"k must lie in 1..{diagram.rank}")
    return [
        SpecialSubgroup(gens, diagram.matrix.restrict(gens))
        for gens in combinations(range(diagram.rank), k)
    ]


_RANK3 = {
    (2, 2, 2): Spherical(FiniteGroupType.elem_abelian2(3)),
    (2, 3, 3): Spherical(S4),
    (2, 3, 4): Spherical(C2xS4),
    (2, 3, 5): Spherical(C2xA5),
    (3, 3, 3): Affine(CuspType.TRIANGLE),
    (2, 4, 4): Affine(CuspType.SQUARE),
    (2, 3, 6): Affine(CuspType.HEX),
}


def classify_rank3(sub: SpecialSubgroup) -> SubgroupClassification:
    if len(sub.generators) != 3:
        raise ValueError("classify_rank3 needs a rank-3 special subgroup")
    key = tuple(sorted(sub.labels()))
    if key in _RANK3:
        return _RANK3[key]
    if key[0] == key[1] == 2:
        return Spherical(FiniteGroupType.c2_dihedral(key[2]))
    raise UnclassifiableRank3(f"no finite or affine type with labels {key}")


def classify_rank2(sub: SpecialSubgroup) -> FiniteGroupType:
    (m,) = sub.labels()
    return FiniteGroupType.dihedral(m)


@dataclass(frozen=True)
class VertexProfile:
    classes: tuple[SubgroupClassification, ...]

    @property
    def ideal_count(self) -> int:
        return sum(c.is_affine for c in self.classes)

    def ideal_vertices(self) -> list[int]:
        return [v for v, c in enumerate(self.classes) if c.is_affine]

    def __getitem__(self, v):
        return self.classes[v]


def vertex_subgroup(diagram: CoxeterDiagram, v: int) -> SpecialSubgroup:
    gens = diagram.vertex_generators(v)
    return SpecialSubgroup(gens, diagram.matrix.restrict(gens))


def vertex_profile(diagram: CoxeterDiagram) -> VertexProfile:
    """Classification of each simplex vertex (vertex ``v`` omits generator ``v``)."""
    if diagram.rank != 4:
        raise ValueError("vertex profiles are defined for rank-4 diagrams")
    return VertexProfile(
        tuple(classify_rank3(vertex_subgroup(diagram, v)) for v in range(4))
    )


@dataclass(frozen=True)
class GramReport:
    sign: str  # "positive-definite" | "semidefinite" | "indefinite"
    eigenvalues: tuple[float, ...]
    kernel_dim: int


def gram_check(sub: SpecialSubgroup) -> GramReport:
    """Eigenvalue signs of the cosine Gram matrix, checked against the
    label lookup for rank-3 subgroups."""
    if len(sub.generators) > 3:
        raise ValueError("gram_check is for special subgroups of rank <= 3")
    eig = np.linalg.eigvalsh(sub.submatrix.gram())
    zero = int(np.sum(np.abs(eig) < GRAM_TOL))
    if np.any(eig < -GRAM_TOL):
        sign = "indefinite"
    elif zero:
        sign = "semidefinite"
    else:
        sign = "positive-definite"
    if len(sub.generators) == 3 and zero:
        try:
            cls = classify_rank3(sub)
        except UnclassifiableRank3:
            cls = None
        if cls is not None and not cls.is_affine:
            raise ToleranceAmbiguity(
                f"eigenvalue within {GRAM_TOL} of 0 for spherical labels {sub.labels()}"
            )
    return GramReport(sign, tuple(float(x) for x in eig), zero)
