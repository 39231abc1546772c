"""Isomorphism types of the finite groups that occur as cell stabilizers."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import UnknownType

_KINDS = (
    "Trivial",
    "C2",
    "Dihedral",
    "C2xDihedral",
    "ElemAbelian2",
    "S4",
    "C2xS4",
    "A5",
    "C2xA5",
)


@dataclass(frozen=True, order=True)
class FiniteGroupType:
    """A finite group named by a tag and an integer parameter.

    ``Dihedral(n)`` is the dihedral group of order ``2n``; ``ElemAbelian2(k)``
    is ``(Z/2)^k``.  Tags without a parameter carry ``n = 0``.

    Two tags can name the same group (``C2xDihedral(3)`` is ``Dihedral(6)``).
    The uncanonicalized tag is kept on purpose: a rank-3 vertex group such as
    ``[3] x [ ]`` behaves differently from a dihedral *edge* group when a
    geodesic passes through it.  Use :meth:`canonical` before comparing
    isomorphism types.
    """

    kind: str
    n: int = 0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise UnknownType(f"unknown finite group tag {self.kind!r}")

    # constructors -------------------------------------------------------
    @classmethod
    def dihedral(cls, n: int) -> FiniteGroupType:
        return cls("Dihedral", n)

    @classmethod
    def c2_dihedral(cls, n: int) -> FiniteGroupType:
        return cls("C2xDihedral", n)

    @classmethod
    def elem_abelian2(cls, k: int) -> FiniteGroupType:
        return cls("ElemAbelian2", k)

    # ---------------------------------------------------------------------
    def canonical(self) -> FiniteGroupType:
        """Return the preferred tag among all tags naming the same group."""
        kind, n = self.kind, self.n
        if kind == "C2xDihedral" and n % 2 == 1:
            return FiniteGroupType("Dihedral", 2 * n)
        if kind == "ElemAbelian2":
            if n == 0:
                return TRIVIAL
            if n == 1:
                return C2
            if n == 2:
                return FiniteGroupType("Dihedral", 2)
            if n == 3:
                return FiniteGroupType("C2xDihedral", 2)
        if kind == "Dihedral" and n == 1:
            return C2
        return self

    @property
    def order(self) -> int:
        return {
            "Trivial": 1,
            "C2": 2,
            "Dihedral": 2 * self.n,
            "C2xDihedral": 4 * self.n,
            "ElemAbelian2": 2**self.n,
            "S4": 24,
            "C2xS4": 48,
            "A5": 60,
            "C2xA5": 120,
        }[self.kind]

    def times_c2(self) -> FiniteGroupType:
        """The tag of ``self x Z/2`` (only for tags with such a form)."""
        g = self.canonical()
        table = {
            "Trivial": C2,
            "C2": FiniteGroupType("Dihedral", 2),
            "S4": C2xS4,
            "A5": C2xA5,
        }
        if g.kind in table:
            return table[g.kind]
        if g.kind == "Dihedral":
            return FiniteGroupType("C2xDihedral", g.n).canonical()
        raise UnknownType(f"{g} x Z/2 has no tag")

    def __str__(self):
        n = self.n
        return {
            "Trivial": "1",
            "C2": "Z/2",
            "Dihedral": f"D_{n}",
            "C2xDihedral": f"D_{n} x Z/2",
            "ElemAbelian2": f"(Z/2)^{n}",
            "S4": "S_4",
            "C2xS4": "S_4 x Z/2",
            "A5": "A_5",
            "C2xA5": "A_5 x Z/2",
        }[self.kind]

    @classmethod
    def parse(cls, text: str) -> FiniteGroupType:
        """Parse loose notations: ``D_5``, ``D10``, ``C2xD_6``, ``D_6 x Z/2``,
        ``S4``, ``C2xS4``, ``A5``, ``C2xA5``, ``(Z/2)^3``, ``C2``, ``1``."""
        s = re.sub(r"\s+", "", text)
        s = s.replace("Z/2", "C2").replace("Z_2", "C2").replace("_", "")
        s = s.replace("X", "x")
        if s in ("1", "Trivial", "trivial", "e"):
            return TRIVIAL
        m = re.fullmatch(r"\(C2\)\^(\d+)|ElemAbelian2\((\d+)\)", s)
        if m:
            return cls("ElemAbelian2", int(m.group(1) or m.group(2)))
        # normalise "G x C2" to "C2xG"
        if s.endswith("xC2") and s != "C2xC2":
            s = "C2x" + s[: -len("xC2")]
        simple = {"C2": C2, "S4": S4, "C2xS4": C2xS4, "A5": A5, "C2xA5": C2xA5,
                  "C2xC2": FiniteGroupType("Dihedral", 2)}
        if s in simple:
            return simple[s]
        m = re.fullmatch(r"(C2x)?(?:D|Dihedral)\(?(\d+)\)?", s)
        if m:
            kind = "C2xDihedral" if m.group(1) else "Dihedral"
            return cls(kind, int(m.group(2)))
        m = re.fullmatch(r"C2xDihedral\((\d+)\)", s)
        if m:
            return cls("C2xDihedral", int(m.group(1)))
        raise UnknownType(f"cannot parse finite group type {text!r}")


TRIVIAL = FiniteGroupType("Trivial")
C2 = FiniteGroupType("C2")
S4 = FiniteGroupType("S4")
C2xS4 = FiniteGroupType("C2xS4")
A5 = FiniteGroupType("A5")
C2xA5 = FiniteGroupType("C2xA5")
