from collections import Counter

import pytest

from lowerk import registry
from lowerk.coxeter import (
    Affine,
    CoxeterMatrix,
    CuspType,
    SpecialSubgroup,
    Spherical,
    classify_rank2,
    classify_rank3,
    gram_check,
    parse_diagram,
    parse_matrix_text,
    special_subgroups,
    vertex_profile,
)
from lowerk.errors import AsymmetricMatrix, MalformedNotation, UnclassifiableRank3, UnknownName
from lowerk.groups import C2xA5, C2xS4, S4, FiniteGroupType as F


def sub(*labels):
    a, b, c = labels
    return SpecialSubgroup((0, 1, 2), CoxeterMatrix(((1, a, b), (a, 1, c), (b, c, 1))))


def test_chain_and_cycle():
    m = parse_diagram("[5,3,5]").matrix.m
    assert m == ((1, 5, 2, 2), (5, 1, 3, 2), (2, 3, 1, 5), (2, 2, 5, 1))
    m = parse_diagram("[(3,4,3,5)]").matrix
    assert (m[0, 1], m[1, 2], m[2, 3], m[0, 3], m[0, 2], m[1, 3]) == (3, 4, 3, 5, 2, 2)


def test_generic_notation():
    d = parse_diagram("[2,2,2]")
    assert all(d.label(i, j) == 2 for i, j in d.edges())
    assert parse_diagram("[(3,3,3,7)]").label(0, 3) == 7


@pytest.mark.parametrize("text", ["[1,3,5]", "[3,5]", "[(3,4,5)]", "[3,3,3,3]"])
def test_malformed(text):
    with pytest.raises(MalformedNotation):
        parse_diagram(text)


def test_unknown_name():
    with pytest.raises(UnknownName):
        parse_diagram("[bogus]")
    with pytest.raises(UnknownName):
        parse_diagram("")


def test_raw_matrix_round_trip(diagrams):
    for d in diagrams.values():
        text = d.matrix.to_text()
        assert parse_diagram(text).matrix == d.matrix


def test_raw_matrix_errors():
    with pytest.raises(AsymmetricMatrix):
        parse_matrix_text("rank 2\n1 3\n4 1\n")
    with pytest.raises(AsymmetricMatrix):
        parse_matrix_text("rank 2\n2 3\n3 1\n")
    with pytest.raises(MalformedNotation):
        parse_matrix_text("rank 3\n1 3 2\n3 1 3\n")
    with pytest.raises(MalformedNotation):
        parse_matrix_text("size 2\n1 3\n3 1\n")


def test_special_subgroups_counts():
    d = parse_diagram("[5,3,5]")
    subs = special_subgroups(d, 3)
    assert [s.generators for s in subs] == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    assert [sorted(s.labels()) for s in subs] == [[2, 3, 5], [2, 2, 5], [2, 2, 5], [2, 3, 5]]
    assert len(special_subgroups(d, 4)) == 1
    pairs = special_subgroups(parse_diagram("[3,3,6]"), 2)
    assert Counter(s.labels()[0] for s in pairs) == {3: 2, 6: 1, 2: 3}


def test_rank2_is_dihedral(diagrams):
    for d in diagrams.values():
        for s in special_subgroups(d, 2):
            assert classify_rank2(s).order == 2 * s.labels()[0]


@pytest.mark.parametrize(
    "labels, expected",
    [
        ((2, 3, 6), Affine(CuspType.HEX)),
        ((2, 2, 2), Spherical(F.elem_abelian2(3))),
        ((5, 3, 2), Spherical(C2xA5)),
        ((3, 3, 2), Spherical(S4)),
        ((4, 2, 3), Spherical(C2xS4)),
        ((2, 6, 2), Spherical(F.c2_dihedral(6))),
        ((3, 3, 3), Affine(CuspType.TRIANGLE)),
        ((4, 4, 2), Affine(CuspType.SQUARE)),
    ],
)
def test_classify_rank3(labels, expected):
    assert classify_rank3(sub(*labels)) == expected


@pytest.mark.parametrize("labels", [(5, 5, 2), (3, 3, 4), (2, 3, 7)])
def test_unclassifiable(labels):
    with pytest.raises(UnclassifiableRank3):
        classify_rank3(sub(*labels))


def test_vertex_profiles():
    p = vertex_profile(parse_diagram("[(3,5)^[2]]"))
    assert p.classes == (Spherical(C2xA5),) * 4 and p.ideal_count == 0
    p = vertex_profile(parse_diagram("[3,4^{1,1}]"))
    assert Counter(p.classes) == {
        Spherical(C2xS4): 2,
        Spherical(F.elem_abelian2(3)): 1,
        Affine(CuspType.SQUARE): 1,
    }
    p = vertex_profile(parse_diagram("[4^[4]]"))
    assert p.classes == (Affine(CuspType.SQUARE),) * 4


def test_gram_examples():
    assert gram_check(sub(3, 3, 2)).sign == "positive-definite"
    r = gram_check(sub(3, 3, 3))
    assert r.sign == "semidefinite" and r.kernel_dim == 1
    assert gram_check(sub(2, 2, 2)).eigenvalues == pytest.approx((1.0, 1.0, 1.0))
    assert gram_check(sub(5, 5, 2)).sign == "indefinite"


def test_gram_agrees_on_catalog(diagrams):
    checked = 0
    for d in diagrams.values():
        for s in special_subgroups(d, 3):
            cls, rep = classify_rank3(s), gram_check(s)
            if cls.is_affine:
                assert rep.sign == "semidefinite" and rep.kernel_dim == 1
            else:
                assert rep.sign == "positive-definite"
            checked += 1
    assert checked == 128


def test_whole_group_is_hyperbolic(diagrams):
    import numpy as np

    for d in diagrams.values():
        eig = np.linalg.eigvalsh(d.matrix.gram())
        assert (eig < -1e-9).sum() == 1, d
