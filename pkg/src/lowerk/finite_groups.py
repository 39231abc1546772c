"""Brute-force rank oracles for finite groups, and the curated K-theory table.

Groups are realized as permutation groups and enumerated completely (every
catalog group has order at most 120), so conjugacy classes, cyclic subgroups
and power maps are computed directly from the element list.

Two ranks are derived from class counts:

* the free rank of ``Wh(G)`` is ``r - q``, where ``r`` counts conjugacy
  classes of unordered pairs ``{x, x^-1}`` and ``q`` counts conjugacy classes
  of cyclic subgroups;
* the rank of ``K_{-1}(Z G)`` follows from Carter's exact sequence
  ``0 -> K_0(Z) -> K_0(QG) + sum_p K_0(Z_p G) -> sum_p K_0(Q_p G) -> K_{-1}(ZG) -> 0``
  (``p`` ranging over primes dividing ``|G|``), with the number of simple
  components of each group algebra counted as Galois orbits of conjugacy
  classes.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

from sympy import factorint, isprime

from .errors import NonPrimeP, UnknownType
from .groups import FiniteGroupType
from .kvalue import ZERO, KValue, Z, cyclic

Perm = tuple[int, ...]


def compose(p: Perm, q: Perm) -> Perm:
    """``p * q``: apply ``q`` first, then ``p``."""
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def perm_order(p: Perm) -> int:
    n, seen = 1, set()
    for i in range(len(p)):
        if i in seen:
            continue
        length, j = 0, i
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        n = math.lcm(n, length)
    return n


def power(p: Perm, k: int) -> Perm:
    out = tuple(range(len(p)))
    base = p
    while k:
        if k & 1:
            out = compose(base, out)
        base = compose(base, base)
        k >>= 1
    return out


class PermutationGroup:
    """A permutation group given by generators; elements are enumerated lazily.

    The element list is computed once and cached; concurrent first calls may
    both compute it, but they produce identical results.
    """

    def __init__(self, degree: int, generators, name: str = ""):
        self.degree = degree
        self.generators = [tuple(g) for g in generators]
        for g in self.generators:
            if sorted(g) != list(range(degree)):
                raise ValueError(f"{g} is not a permutation of {degree} points")
        self.name = name
        self._lock = threading.Lock()

    def __repr__(self):
        return f"PermutationGroup({self.name or self.generators}, degree={self.degree})"

    @cached_property
    def elements(self) -> list[Perm]:
        identity = tuple(range(self.degree))
        seen = {identity}
        order = [identity]
        frontier = [identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in self.generators:
                    y = compose(g, x)
                    if y not in seen:
                        seen.add(y)
                        order.append(y)
                        nxt.append(y)
            frontier = nxt
        return order

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*(perm_order(x) for x in self.elements))

    @cached_property
    def classes(self) -> ClassData:
        return ClassData.of(self)


@dataclass
class ClassData:
    classes: list[frozenset]
    representatives: list[Perm]
    class_of: dict = field(repr=False)
    element_orders: dict = field(repr=False)

    @classmethod
    def of(cls, g: PermutationGroup) -> ClassData:
        elements = g.elements
        inv = [inverse(h) for h in elements]
        class_of, classes, reps = {}, [], []
        for x in elements:
            if x in class_of:
                continue
            cl = frozenset(compose(compose(h, x), hi) for h, hi in zip(elements, inv))
            for y in cl:
                class_of[y] = len(classes)
            classes.append(cl)
            reps.append(x)
        orders = {x: perm_order(x) for x in elements}
        return cls(classes, reps, class_of, orders)

    def __len__(self):
        return len(self.classes)

    def power_class(self, i: int, k: int) -> int:
        """Index of the class containing ``x^k`` for ``x`` in class ``i``."""
        return self.class_of[power(self.representatives[i], k)]

    def orbits(self, exponents, classes=None) -> int:
        """Number of orbits of the given classes under ``x -> x^k``, ``k`` in ``exponents``."""
        idx = range(len(self.classes)) if classes is None else classes
        remaining, count = set(idx), 0
        while remaining:
            i = remaining.pop()
            count += 1
            stack = [i]
            while stack:
                j = stack.pop()
                for k in exponents:
                    t = self.power_class(j, k)
                    if t in remaining:
                        remaining.remove(t)
                        stack.append(t)
        return count


# ---------------------------------------------------------------------------
# realizations


def _cycle(n: int) -> Perm:
    return tuple((i + 1) % n for i in range(n))


def _flip(n: int) -> Perm:
    return tuple((-i) % n for i in range(n))


def _dihedral_gens(n: int) -> tuple[int, list[Perm]]:
    if n == 1:
        return 2, [(1, 0)]
    if n == 2:
        return 4, [(1, 0, 3, 2), (2, 3, 0, 1)]
    return n, [_cycle(n), _flip(n)]


def _disjoint(*factors: tuple[int, list[Perm]]) -> tuple[int, list[Perm]]:
    degree, gens, offset = sum(d for d, _ in factors), [], 0
    for d, fgens in factors:
        for g in fgens:
            full = list(range(degree))
            for i, j in enumerate(g):
                full[offset + i] = offset + j
            gens.append(tuple(full))
        offset += d
    return degree, gens


_C2_ACTION = (2, [(1, 0)])
_S4_ACTION = (4, [(1, 0, 2, 3), (1, 2, 3, 0)])
_A5_ACTION = (5, [(1, 2, 0, 3, 4), (1, 2, 3, 4, 0)])


def realize(t: FiniteGroupType) -> PermutationGroup:
    """A faithful permutation representation of ``t``."""
    kind, n = t.kind, t.n
    if kind == "Trivial":
        action = (1, [])
    elif kind == "C2":
        action = _C2_ACTION
    elif kind == "Dihedral":
        action = _dihedral_gens(n)
    elif kind == "C2xDihedral":
        action = _disjoint(_dihedral_gens(n), _C2_ACTION)
    elif kind == "ElemAbelian2":
        action = _disjoint(*([_C2_ACTION] * n)) if n else (1, [])
    elif kind == "S4":
        action = _S4_ACTION
    elif kind == "C2xS4":
        action = _disjoint(_S4_ACTION, _C2_ACTION)
    elif kind == "A5":
        action = _A5_ACTION
    elif kind == "C2xA5":
        action = _disjoint(_A5_ACTION, _C2_ACTION)
    else:  # pragma: no cover - FiniteGroupType validates kinds
        raise UnknownType(str(t))
    degree, gens = action
    return PermutationGroup(degree, gens, name=str(t))


# ---------------------------------------------------------------------------
# rank oracles


def count_r(g: PermutationGroup) -> int:
    """Conjugacy classes of unordered pairs ``{x, x^-1}``."""
    cd = g.classes
    return cd.orbits([-1 % g.exponent])


def cyclic_subgroups(g: PermutationGroup) -> set[frozenset]:
    return {frozenset(power(x, k) for k in range(perm_order(x))) for x in g.elements}


def count_q(g: PermutationGroup) -> int:
    """Conjugacy classes of cyclic subgroups."""
    subs = cyclic_subgroups(g)
    elements = g.elements
    inv = [inverse(h) for h in elements]
    remaining, count = set(subs), 0
    while remaining:
        s = remaining.pop()
        count += 1
        for h, hi in zip(elements, inv):
            remaining.discard(frozenset(compose(compose(h, x), hi) for x in s))
    return count


def wh_rank(g: PermutationGroup) -> int:
    return count_r(g) - count_q(g)


@dataclass(frozen=True)
class FieldDescriptor:
    kind: str  # "Rational" | "PadicRational" | "FiniteField"
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("Rational", "PadicRational", "FiniteField"):
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.kind != "Rational" and not isprime(self.p):
            raise NonPrimeP(f"{self.p} is not prime")

    def __str__(self):
        return {"Rational": "Q", "PadicRational": f"Q_{self.p}", "FiniteField": f"F_{self.p}"}[self.kind]


RATIONAL = FieldDescriptor("Rational")


def Padic(p: int) -> FieldDescriptor:
    return FieldDescriptor("PadicRational", p)


def FiniteField(p: int) -> FieldDescriptor:
    return FieldDescriptor("FiniteField", p)


def _units(e: int) -> list[int]:
    return [k for k in range(1, e + 1) if math.gcd(k, e) == 1] if e > 1 else [1]


def padic_galois_exponents(e: int, p: int) -> list[int]:
    """Units mod ``e`` realised by ``Gal(Q_p(zeta_e)/Q_p)``.

    Writing ``e = p^a * m``: every unit mod ``p^a`` (totally ramified part)
    combined with the powers of ``p`` mod ``m`` (unramified part).
    """
    m = e
    while m % p == 0:
        m //= p
    if m == 1:
        return _units(e)
    frob = {pow(p, i, m) for i in range(m)}
    return [k for k in _units(e) if k % m in frob]


def k_classes(g: PermutationGroup, f: FieldDescriptor) -> int:
    """Number of simple components of the group algebra ``f[G]``."""
    cd = g.classes
    e = g.exponent
    if f.kind == "Rational":
        return cd.orbits(_units(e))
    if f.kind == "PadicRational":
        return cd.orbits(padic_galois_exponents(e, f.p))
    regular = [i for i, x in enumerate(cd.representatives) if cd.element_orders[x] % f.p]
    return cd.orbits([f.p], classes=regular)


def carter_k_minus1_rank(g: PermutationGroup) -> int:
    primes = sorted(factorint(g.order))
    rank = 1 - k_classes(g, RATIONAL)
    for p in primes:
        rank += k_classes(g, Padic(p)) - k_classes(g, FiniteField(p))
    return rank


def oracle_report(t: FiniteGroupType) -> dict:
    """All rank data for one group, as plain JSON-ready values."""
    g = realize(t)
    primes = sorted(factorint(g.order))
    return {
        "type": str(t),
        "order": g.order,
        "r": count_r(g),
        "q": count_q(g),
        "wh_rank": wh_rank(g),
        "k_classes": {
            "Q": k_classes(g, RATIONAL),
            **{f"Q_{p}": k_classes(g, Padic(p)) for p in primes},
            **{f"F_{p}": k_classes(g, FiniteField(p)) for p in primes},
        },
        "carter_k_minus1_rank": carter_k_minus1_rank(g),
    }


# ---------------------------------------------------------------------------
# curated lower K-theory of the stabilizer groups


@dataclass(frozen=True)
class KTheoryRecord:
    wh: KValue = ZERO
    k0_tilde: KValue = ZERO
    k_minus1: KValue = ZERO
    k_below_minus1: KValue = ZERO
    torsion_free_k_minus1: bool = True
    source: str = ""

    def wh_q(self, q: int) -> KValue:
        """``Wh_q``: ``Wh`` for q=1, reduced ``K_0`` for q=0, ``K_q`` below."""
        if q == 1:
            return self.wh
        if q == 0:
            return self.k0_tilde
        if q == -1:
            return self.k_minus1
        if q <= -2:
            return self.k_below_minus1
        raise ValueError(f"Wh_q is only tabulated for q <= 1, got {q}")


_D = FiniteGroupType.dihedral
_C2D = FiniteGroupType.c2_dihedral

# Only the non-vanishing groups are listed; free ranks are cross-checked by the
# oracles above, torsion summands are taken from the literature as cited.
_NONZERO = {
    _D(5): KTheoryRecord(wh=Z(1), source="SK_1 = 0 for dihedral groups (Magurn)"),
    _D(6): KTheoryRecord(k_minus1=Z(1), source="Pearson; Carter sequence"),
    _C2D(4): KTheoryRecord(k0_tilde=cyclic(4), source="Carter, Curtis-Reiner, Oliver, Magurn"),
    _D(10): KTheoryRecord(k_minus1=Z(1), wh=Z(2), source="Carter sequence; SK_1 = 0 (Magurn)"),
    _C2D(6): KTheoryRecord(
        k_minus1=Z(3),
        k0_tilde=cyclic(2, 2),
        source="Carter sequence; Mayer-Vietoris for Z[Z/2][D_6] over F_2[D_6]",
    ),
    FiniteGroupType("C2xS4"): KTheoryRecord(k_minus1=Z(1), k0_tilde=cyclic(4), source="Carter sequence; Mayer-Vietoris over F_2[S_4]"),
    FiniteGroupType("A5"): KTheoryRecord(wh=Z(1), source="SK_1(Z A_5) = 0 (Oliver); Dress induction"),
    FiniteGroupType("C2xA5"): KTheoryRecord(
        k_minus1=Z(1),
        wh=Z(2),
        source="Mayer-Vietoris over F_2[A_5]; Swan induction; SK_1 = 0 (Magurn)",
    ),
}

_VANISHING = {
    FiniteGroupType("Trivial"),
    FiniteGroupType("C2"),
    _D(2),
    _D(3),
    _D(4),
    _C2D(2),
    FiniteGroupType("S4"),
}


def ktheory_of(t: FiniteGroupType) -> KTheoryRecord:
    c = t.canonical()
    if c in _NONZERO:
        return _NONZERO[c]
    if c in _VANISHING:
        return KTheoryRecord(source="vanishing results for small groups")
    raise UnknownType(f"no lower K-theory data for {t}")


def catalog_types() -> list[FiniteGroupType]:
    """Every finite group type with tabulated K-theory."""
    return sorted(set(_NONZERO) | _VANISHING, key=lambda t: (t.order, str(t)))
