"""
Ranks from character-theoretic counting
=======================================

The Whitehead rank is r - q, where r counts conjugacy classes up to inversion
and q counts conjugacy classes of cyclic subgroups.  The rank of K_{-1} comes
from counting irreducible representations over Q, Q_p and F_p.
"""

from lowerk import FiniteGroupType, carter_k_minus1_rank, ktheory_of, realize, wh_rank
from lowerk.finite_groups import FiniteField, Padic, RATIONAL, catalog_types, k_classes

g = realize(FiniteGroupType.parse("C2xA5"))
print(g.name, "order", g.order, "exponent", g.exponent)

for field in (RATIONAL, Padic(2), FiniteField(2), Padic(3), FiniteField(3), Padic(5), FiniteField(5)):
    print(f"{field}: {k_classes(g, field)} classes")

# every stabilizer type that occurs in the catalog
print(f"{'type':8} {'order':>5} {'wh':>3} {'K-1':>4}   stored Wh / K0t / K-1")
for t in catalog_types():
    g = realize(t)
    rec = ktheory_of(t)
    print(
        f"{str(t):8} {g.order:5d} {wh_rank(g):3d} {carter_k_minus1_rank(g):4d}   "
        f"{rec.wh} / {rec.k0_tilde} / {rec.k_minus1}"
    )

# doubling: Wh(G x C2) has twice the rank of Wh(G)
for name in ("D5", "S4", "A5"):
    t = FiniteGroupType.parse(name)
    print(name, wh_rank(realize(t)), "->", wh_rank(realize(t.times_c2())))
