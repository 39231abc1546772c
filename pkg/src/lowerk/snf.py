"""Smith normal form over the integers, with exact Python ints.

``smith_normal_form(A)`` returns ``(U, D, V)`` with ``U`` and ``V``
unimodular and ``U @ A @ V == D``, where ``D`` is diagonal with
``d_1 | d_2 | ...`` and every ``d_i >= 0``.
"""

from __future__ import annotations

from math import prod


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _copy(a):
    return [list(map(int, row)) for row in a]


def smith_normal_form(a):
    a = _copy(a)
    m = len(a)
    n = len(a[0]) if m else 0
    u, v = _identity(m), _identity(n)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):  # row dst += c * row src
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, c):
        for row in a:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(m, n):
        nonzero = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // p))
                    if a[i][t]:
                        done = False
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // p))
                    if a[t][j]:
                        done = False
            if not done:
                # a smaller remainder appeared in row or column t; pivot on it
                _, i, j = min(
                    [(abs(a[i][t]), i, t) for i in range(t, m) if a[i][t]]
                    + [(abs(a[t][j]), t, j) for j in range(t, n) if a[t][j]]
                )
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            # pivot must divide the rest of the block
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if a[t][t] < 0:
            negate_row(t)
        t += 1
    return u, a, v


def invariant_factors(a) -> list[int]:
    """Nonzero diagonal entries of the Smith form."""
    _, d, _ = smith_normal_form(a)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0)) if d[i][i]]


def rank(a) -> int:
    return len(invariant_factors(a)) if a and a[0] else 0


def cokernel(a, rows: int | None = None) -> tuple[int, list[int]]:
    """``Z^rows / im(a)`` as ``(free rank, torsion orders > 1)``.

    ``a`` is ``rows x cols``; an empty column set gives ``Z^rows``.
    """
    if rows is None:
        rows = len(a)
    if not a or not a[0]:
        return rows, []
    f = invariant_factors(a)
    return rows - len(f), [d for d in f if d > 1]


def cokernel_order(a) -> int | None:
    """``|coker a|`` for square-or-tall full-rank ``a``; ``None`` if infinite."""
    free, torsion = cokernel(a)
    return None if free else prod(torsion)
