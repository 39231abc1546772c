"""The 32 hyperbolic Coxeter tetrahedra, transcribed edge by edge.

Names use an ASCII form of the bracket notation:

* superscript brackets are written ``^[..]``: ``[(3,4)^[2]]``, ``[3,3^[3]]``,
  ``[4^[4]]``, ``[3^[3,3]]``;
* superscript index lists keep braces: ``[5,3^{1,1}]``, ``[4^{1,1,1}]``;
* ``[3^{[ ]x[ ]}]`` is written ``[3^[]x[]]``;
* powers inside cycles are plain: ``[(3^3,4)]``, ``[(3^2,4^2)]``.

Lookups ignore whitespace and also accept ``^{[3]}`` for ``^[3]`` and
``\\times`` / ``×`` for ``x`` (see :func:`normalize_name`).

Generator order: chains left to right; cycles in cyclic order, so that
``[(a,b,c,d)]`` has ``m01=a, m12=b, m23=c, m30=d``; Y-shaped and
triangle-with-tail diagrams put the tail first, then the branch vertex, then
the remaining two.
"""

from __future__ import annotations

import re

# name -> {(i, j): label} for i < j; unlisted pairs commute (label 2)
_EDGES: dict[str, dict[tuple[int, int], int]] = {}
_ORDER: list[str] = []


def _chain(a, b, c):
    return {(0, 1): a, (1, 2): b, (2, 3): c}


def _cycle(a, b, c, d):
    return {(0, 1): a, (1, 2): b, (2, 3): c, (0, 3): d}


def _y(tail, left, right):
    return {(0, 1): tail, (1, 2): left, (1, 3): right}


def _tail_triangle(tail):
    return {(0, 1): tail, (1, 2): 3, (1, 3): 3, (2, 3): 3}


def _add(name, edges):
    _EDGES[name] = edges
    _ORDER.append(name)


# cocompact
_add("[4,3,5]", _chain(4, 3, 5))
_add("[3,5,3]", _chain(3, 5, 3))
_add("[5,3^{1,1}]", _y(5, 3, 3))
_add("[(3^3,4)]", _cycle(3, 3, 3, 4))
_add("[5,3,5]", _chain(5, 3, 5))
_add("[(3^3,5)]", _cycle(3, 3, 3, 5))
_add("[(3,4)^[2]]", _cycle(3, 4, 3, 4))
_add("[(3,4,3,5)]", _cycle(3, 4, 3, 5))
_add("[(3,5)^[2]]", _cycle(3, 5, 3, 5))
# non-cocompact
_add("[(3^3,6)]", _cycle(3, 3, 3, 6))
_add("[(3,4,3,6)]", _cycle(3, 4, 3, 6))
_add("[(3,5,3,6)]", _cycle(3, 5, 3, 6))
_add("[(3,6)^[2]]", _cycle(3, 6, 3, 6))
_add("[5,3,6]", _chain(5, 3, 6))
_add("[6,3,6]", _chain(6, 3, 6))
_add("[3,3,6]", _chain(3, 3, 6))
_add("[4,3,6]", _chain(4, 3, 6))
_add("[3,3^[3]]", _tail_triangle(3))
_add("[3,6,3]", _chain(3, 6, 3))
_add("[6,3^{1,1}]", _y(6, 3, 3))
_add("[4,3^[3]]", _tail_triangle(4))
_add("[5,3^[3]]", _tail_triangle(5))
_add("[6,3^[3]]", _tail_triangle(6))
_add("[(3^2,4^2)]", _cycle(3, 3, 4, 4))
_add("[(3,4^3)]", _cycle(3, 4, 4, 4))
_add("[4^[4]]", _cycle(4, 4, 4, 4))
_add("[3,4^{1,1}]", _y(3, 4, 4))
_add("[3,4,4]", _chain(3, 4, 4))
_add("[4,4,4]", _chain(4, 4, 4))
_add("[4^{1,1,1}]", _y(4, 4, 4))
# K4 minus the edge 0-2, every other edge unlabelled (3)
_add("[3^[3,3]]", {(0, 1): 3, (1, 2): 3, (2, 3): 3, (0, 3): 3, (1, 3): 3})
# complete graph, every edge unlabelled (3)
_add("[3^[]x[]]", {(i, j): 3 for i in range(4) for j in range(i + 1, 4)})


def normalize_name(text: str) -> str:
    s = re.sub(r"\s+|\\,|\\ |\\hskip\s*\d+pt", "", text)
    s = s.replace("\\times", "x").replace("×", "x")
    s = re.sub(r"\^\{\[([^\]]*)\]\}", r"^[\1]", s)
    s = s.replace("^{[]x[]}", "^[]x[]")
    return s


def names() -> list[str]:
    """The 32 registered names, cocompact groups first."""
    return list(_ORDER)


def edge_labels(name: str) -> dict[tuple[int, int], int] | None:
    """Labels of the non-right-angled edges, or ``None`` if unregistered."""
    edges = _EDGES.get(normalize_name(name))
    return dict(edges) if edges is not None else None


def matrix_rows(name: str) -> tuple[tuple[int, ...], ...] | None:
    edges = edge_labels(name)
    if edges is None:
        return None
    m = [[1 if i == j else 2 for j in range(4)] for i in range(4)]
    for (i, j), label in edges.items():
        m[i][j] = m[j][i] = label
    return tuple(tuple(r) for r in m)
