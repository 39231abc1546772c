from collections import Counter

import pytest

from lowerk import registry
from lowerk.coxeter import parse_diagram, vertex_profile


def test_thirty_two_names():
    names = registry.names()
    assert len(names) == len(set(names)) == 32


def test_ideal_vertex_partition(diagrams):
    counts = Counter(vertex_profile(d).ideal_count for d in diagrams.values())
    assert counts == {0: 9, 1: 9, 2: 9, 3: 2, 4: 3}


@pytest.mark.parametrize(
    "alias, name",
    [
        (r"[3^{[\hskip 2pt]\times [\hskip 2pt]}]", "[3^[]x[]]"),
        ("[(3,5)^{[2]}]", "[(3,5)^[2]]"),
        ("[3, 3^{[3]}]", "[3,3^[3]]"),
        ("[ 5 , 3 , 6 ]", "[5,3,6]"),
    ],
)
def test_aliases(alias, name):
    assert registry.normalize_name(alias) == name
    assert parse_diagram(alias).matrix == parse_diagram(name).matrix


def test_matrix_rows_symmetric():
    for name in registry.names():
        m = registry.matrix_rows(name)
        assert all(m[i][j] == m[j][i] for i in range(4) for j in range(4))
        assert all(m[i][i] == 1 for i in range(4))


def test_unregistered():
    assert registry.matrix_rows("[7,3,7]") is None
