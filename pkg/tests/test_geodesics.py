from collections import Counter

import pytest
from hypothesis import given, strategies as st

from lowerk.coxeter import CuspType, parse_diagram
from lowerk.errors import LoopDetected, UnsupportedAmalgam
from lowerk.geodesics import (
    DEFAULT_PAIRING,
    DEFAULT_TABLE,
    DOUBLED,
    EXTENDS,
    PRODUCT,
    AmalgamTag,
    CanonicalType,
    StabilizerDescriptor,
    VertexForm,
    cusp_groups,
    enumerate_type1,
    geodesic_paths,
)
from lowerk.groups import C2xA5, C2xS4, S4, FiniteGroupType as F

P, D = VertexForm.PRODUCT_C2, VertexForm.DOUBLED


def rendered(name):
    return Counter(x.render() for x in enumerate_type1(parse_diagram(name)))


def test_table_rows():
    t = DEFAULT_TABLE
    assert [t.behavior(F.elem_abelian2(3), s) for s in range(3)] == [PRODUCT] * 3
    for n in range(3, 7):
        assert [t.behavior(F.c2_dihedral(n), s) for s in range(3)] == [PRODUCT, EXTENDS, EXTENDS]
    assert [t.behavior(S4, s) for s in range(3)] == [EXTENDS, EXTENDS, DOUBLED]
    assert [t.behavior(C2xS4, s) for s in range(3)] == [PRODUCT, DOUBLED, PRODUCT]
    assert [t.behavior(C2xA5, s) for s in range(3)] == [DOUBLED, DOUBLED, PRODUCT]


def test_pairing():
    assert DEFAULT_PAIRING.is_involution()
    assert DEFAULT_PAIRING.target(S4, 0) == 1
    assert DEFAULT_PAIRING.target(F.c2_dihedral(5), 1) == 2
    assert DEFAULT_PAIRING.target(F.c2_dihedral(6), 1) == 1
    # pairing is defined exactly on the Extends slots
    for (vertex, slot) in DEFAULT_PAIRING.pairs:
        assert DEFAULT_TABLE.behavior(vertex, slot) == EXTENDS


def test_appendix_groups():
    assert rendered("[(3,5)^[2]]") == {
        "D_10 *_{D_5} D_10": 2,
        "D_6 *_{D_3} D_6": 2,
        "D_2 x D_inf": 2,
    }
    got = Counter(d.canonical for d in enumerate_type1(parse_diagram("[3,4^{1,1}]")))
    assert got == {CanonicalType(AmalgamTag.DK_TIMES_DINF, 3): 1, CanonicalType(AmalgamTag.DK_TIMES_DINF, 2): 2}


def test_examples():
    assert rendered("[(3^3,6)]") == {}
    assert rendered("[3,3^[3]]") == {"D_4 *_{D_2} D_4": 1}
    assert rendered("[3,3,6]") == {"(D_2 x Z_2) *_{D_2} D_4": 1}


def test_fold_at_even_c2_dihedral():
    # [3,3,6]: the label-2 path folds back at the C2xD6 vertex
    (path,) = [p for p in geodesic_paths(parse_diagram("[3,3,6]")) if not p.discarded]
    assert path.label == 2 and set(path.ends) == {P, D}


def test_cusps():
    assert cusp_groups(parse_diagram("[5,3,6]")) == [CuspType.HEX]
    assert cusp_groups(parse_diagram("[6,3,6]")) == [CuspType.HEX] * 2
    assert cusp_groups(parse_diagram("[(3,5)^[2]]")) == []


def test_six_d_inf_bound(diagrams):
    for d in diagrams.values():
        assert len(enumerate_type1(d)) <= 6


def test_many_ideal_vertices_emit_nothing(diagrams):
    from lowerk.coxeter import vertex_profile

    for d in diagrams.values():
        if vertex_profile(d).ideal_count >= 3:
            assert enumerate_type1(d) == []


def test_paths_share_label_and_partition_edges(diagrams):
    for d in diagrams.values():
        paths = geodesic_paths(d)
        edges = [e for p in paths for e in p.edges]
        assert sorted(edges) == d.edges()
        for p in paths:
            assert {d.label(*e) for e in p.edges} == {p.label}


forms = st.sampled_from([P, D])


@given(st.sampled_from([2, 3, 5]), forms, forms)
def test_canonical_invariants(k, a, b):
    desc = StabilizerDescriptor(k, a, b)
    assert desc.canonical == desc.reversed().canonical
    if k % 2:
        assert desc.canonical == CanonicalType(AmalgamTag.DK_TIMES_DINF, k)


def test_canonical_k2():
    assert StabilizerDescriptor(2, D, D).canonical.tag == AmalgamTag.D4_STAR_D2_D4
    assert StabilizerDescriptor(2, P, D).canonical.tag == AmalgamTag.MIXED_D2_D4
    assert StabilizerDescriptor(4, P, P).canonical == CanonicalType(AmalgamTag.DK_TIMES_DINF, 4)


def test_unsupported_amalgam():
    with pytest.raises(UnsupportedAmalgam):
        StabilizerDescriptor(4, D, D).canonical
    with pytest.raises(UnsupportedAmalgam):
        StabilizerDescriptor(4, P, D).canonical


def test_loop_detected():
    # every vertex of the Euclidean 4-cycle is S4, so the label-3 edges close up
    with pytest.raises(LoopDetected) as info:
        enumerate_type1(parse_diagram("[(3,3,3,3)]"))
    assert info.value.descriptor == CanonicalType(AmalgamTag.LOOP, 3)


def test_injected_table_changes_output():
    table = DEFAULT_TABLE.with_rule(C2xA5, 0, PRODUCT)
    got = Counter(x.render() for x in enumerate_type1(parse_diagram("[5,3,5]"), table))
    assert got["D_5 x D_inf"] == 2
