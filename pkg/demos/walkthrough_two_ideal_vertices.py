"""
From a Coxeter diagram to lower K-groups
========================================

A step-by-step run on the group [(3,5)^[2]], which has two ideal vertices.
"""

from lowerk import assemble, build_cell_complex, e2_page, parse_diagram, vertex_profile
from lowerk.geodesics import cusp_groups, geodesic_paths

d = parse_diagram("[(3,5)^[2]]")
print(d.matrix)

# each vertex of the tetrahedron is a rank-3 special subgroup, either finite
# (a real vertex) or affine (an ideal vertex that gets truncated)
profile = vertex_profile(d)
for v in range(4):
    print(v, profile[v])
print("cusps:", [str(c) for c in cusp_groups(d)])

# the truncated simplex as a cell complex with stabilizers
cx = build_cell_complex(d)
print("cells by dimension:", cx.counts())
for c in cx.cells[0]:
    print("  ", c)

# geodesic walks through the edges; only the type-I ones survive
for path in geodesic_paths(d):
    tag = "discarded" if path.discarded else path.descriptor().render()
    print(path.edges, "->", tag)

# the E2 page has two columns; the p = 1 column vanishes here
for q in (1, 0, -1):
    col = e2_page(cx, q)
    print(f"q={q:2d}  E2_0 = {col.e0}   E2_1 = {col.e1}")

print(assemble(d).normalized().render())
