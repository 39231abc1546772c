from math import gcd, prod

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st
from sympy import Matrix

from lowerk.snf import cokernel, invariant_factors, smith_normal_form

from snf_oracle import cosets, killed_by, maximal_minor_gcd


def matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def det(a):
    return int(Matrix(a).det())


@pytest.mark.parametrize(
    "a, diag",
    [
        ([[1], [1]], [1]),
        ([[2, 0], [0, 0]], [2, 0]),
        ([[2, 4], [6, 8]], [2, 4]),
        ([[0, 0], [0, 0]], [0, 0]),
        ([[6]], [6]),
        ([[4, 6]], [2]),
        ([[2, 0, 0], [0, 3, 0], [0, 0, 5]], [1, 1, 30]),
    ],
)
def test_examples(a, diag):
    u, d, v = smith_normal_form(a)
    assert [d[i][i] for i in range(len(diag))] == diag
    assert matmul(matmul(u, a), v) == d


def test_big_entries_stay_exact():
    a = [[10**30, 3], [7, 10**25]]
    u, d, v = smith_normal_form(a)
    assert matmul(matmul(u, a), v) == d
    assert d[0][0] * d[1][1] == abs(det(a))


def test_cokernel_shapes():
    assert cokernel([[1], [0]]) == (1, [])
    assert cokernel([[2], [0]]) == (1, [2])
    assert cokernel([[]], rows=3) == (3, [])


matrices = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r
        )
    )
)


@settings(max_examples=1000, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(matrices)
def test_snf_properties(a):
    u, d, v = smith_normal_form(a)
    rows, cols = len(a), len(a[0])
    assert matmul(matmul(u, a), v) == d
    assert abs(det(u)) == 1 and abs(det(v)) == 1
    diag = [d[i][i] for i in range(min(rows, cols))]
    assert all(d[i][j] == 0 for i in range(rows) for j in range(cols) if i != j)
    assert all(x >= 0 for x in diag)
    nz = [x for x in diag if x]
    assert diag[: len(nz)] == nz
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert len(nz) == Matrix(a).rank()

    free, torsion = cokernel(a)
    assert free == rows - len(nz)
    if free == 0:
        assert prod(nz) == maximal_minor_gcd(a)
        found = cosets(a)
        if found is not None:
            reps, reduce_vec = found
            assert len(reps) == prod(torsion)
            # the numbers of k-torsion points determine a finite abelian group
            top = max(torsion, default=1)
            for k in (k for k in range(2, top + 1) if top % k == 0):
                assert killed_by(reps, reduce_vec, k) == prod(gcd(k, t) for t in torsion)


def test_invariant_factors_zero_matrix():
    assert invariant_factors([[0, 0, 0]]) == []
