"""Formal values of lower K-groups.

A :class:`KValue` is ``Z^free`` plus finite cyclic summands plus symbolic
atoms that cannot be written as finitely generated groups: countable sums
``(+)_inf Z/2`` and the Bass Nil-groups ``Nil0 = NK_0(Z D_4)`` and
``Nil1 = NK_1(Z D_4)``.  The atoms are opaque; only their multiplicity is
tracked.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field

# Facts about the Nil atoms that are recorded, never computed.
NIL_FACTS = {
    "Nil0": "NK_0(Z D_4); infinitely generated; every element has order dividing 8",
    "Nil1": "NK_1(Z D_4); trivial or infinitely generated; every element has order dividing 8",
}


@dataclass(frozen=True)
class KValue:
    free: int = 0
    torsion: tuple[int, ...] = field(default=())
    inf_z2: int = 0
    nil0: int = 0
    nil1: int = 0

    def __post_init__(self):
        t = tuple(sorted(int(d) for d in self.torsion if int(d) != 1))
        if any(d < 1 for d in t):
            raise ValueError(f"cyclic orders must be positive: {self.torsion}")
        object.__setattr__(self, "torsion", t)
        for name in ("free", "inf_z2", "nil0", "nil1"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")

    def __add__(self, other: KValue) -> KValue:
        return KValue(
            self.free + other.free,
            self.torsion + other.torsion,
            self.inf_z2 + other.inf_z2,
            self.nil0 + other.nil0,
            self.nil1 + other.nil1,
        )

    def __radd__(self, other):
        # lets sum() start from 0
        if other == 0:
            return self
        return NotImplemented

    def __bool__(self):
        return not self.is_zero()

    def is_zero(self) -> bool:
        return self == ZERO

    def normalized(self) -> KValue:
        """Collapse atom multiplicities to 0/1, the convention of printed tables."""
        return KValue(
            self.free,
            self.torsion,
            min(self.inf_z2, 1),
            min(self.nil0, 1),
            min(self.nil1, 1),
        )

    # text ----------------------------------------------------------------
    def render(self, exact: bool = False) -> str:
        """``Z^a + (Z/2)^b + (Z/4)^c + infZ2 + Nil0 + Nil1``; ``0`` if zero.

        Without ``exact`` the atom multiplicities are collapsed first.
        """
        v = self if exact else self.normalized()
        terms = []
        if v.free:
            terms.append("Z" if v.free == 1 else f"Z^{v.free}")
        for d, c in sorted(Counter(v.torsion).items()):
            terms.append(f"Z/{d}" if c == 1 else f"(Z/{d})^{c}")
        for name, c in (("infZ2", v.inf_z2), ("Nil0", v.nil0), ("Nil1", v.nil1)):
            if c:
                terms.append(name if c == 1 else f"{name}^{c}")
        return " + ".join(terms) if terms else "0"

    def __str__(self):
        return self.render(exact=True)

    @classmethod
    def parse(cls, text: str) -> KValue:
        s = text.strip()
        if s in ("0", ""):
            return ZERO
        free, torsion = 0, []
        counts = {"infZ2": 0, "Nil0": 0, "Nil1": 0}
        for term in s.split("+"):
            term = term.strip()
            m = re.fullmatch(r"Z(?:\^(\d+))?", term)
            if m:
                free += int(m.group(1) or 1)
                continue
            m = re.fullmatch(r"\(Z/(\d+)\)\^(\d+)|Z/(\d+)", term)
            if m:
                if m.group(3):
                    torsion.append(int(m.group(3)))
                else:
                    torsion += [int(m.group(1))] * int(m.group(2))
                continue
            m = re.fullmatch(r"(infZ2|Nil0|Nil1)(?:\^(\d+))?", term)
            if m:
                counts[m.group(1)] += int(m.group(2) or 1)
                continue
            raise ValueError(f"cannot parse K-value term {term!r} in {text!r}")
        return cls(free, tuple(torsion), counts["infZ2"], counts["Nil0"], counts["Nil1"])

    # json ----------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "free": self.free,
            "torsion": list(self.torsion),
            "inf_z2": self.inf_z2,
            "nil0": self.nil0,
            "nil1": self.nil1,
        }

    @classmethod
    def from_json(cls, d: dict) -> KValue:
        return cls(d["free"], tuple(d["torsion"]), d["inf_z2"], d["nil0"], d["nil1"])


ZERO = KValue()
INF_Z2 = KValue(inf_z2=1)
NIL0 = KValue(nil0=1)
NIL1 = KValue(nil1=1)


def Z(n: int = 1) -> KValue:
    return KValue(free=n)


def cyclic(order: int, copies: int = 1) -> KValue:
    return KValue(torsion=(order,) * copies)
