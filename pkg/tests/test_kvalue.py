from hypothesis import given, strategies as st

import pytest

from lowerk.kvalue import INF_Z2, NIL0, ZERO, KValue, Z, cyclic

kvalues = st.builds(
    KValue,
    free=st.integers(0, 8),
    torsion=st.lists(st.sampled_from([2, 4]), max_size=5).map(tuple),
    inf_z2=st.integers(0, 3),
    nil0=st.integers(0, 2),
    nil1=st.integers(0, 2),
)


def test_render():
    assert ZERO.render() == "0"
    assert Z(1).render() == "Z"
    assert (Z(3) + INF_Z2).render() == "Z^3 + infZ2"
    assert (cyclic(4, 2) + INF_Z2 + INF_Z2 + NIL0).render() == "(Z/4)^2 + infZ2 + Nil0"
    assert (INF_Z2 + INF_Z2).render(exact=True) == "infZ2^2"
    assert (cyclic(2, 2) + cyclic(4)).render() == "(Z/2)^2 + Z/4"


@given(kvalues)
def test_exact_round_trip(v):
    assert KValue.parse(v.render(exact=True)) == v
    assert KValue.from_json(v.to_json()) == v


@given(kvalues)
def test_normalized_round_trip(v):
    assert KValue.parse(v.render()) == v.normalized()
    assert v.normalized().normalized() == v.normalized()


@given(kvalues, kvalues)
def test_addition(a, b):
    assert a + b == b + a
    assert a + ZERO == a
    assert sum([a, b]) == a + b


def test_zero():
    assert ZERO.is_zero() and not ZERO
    assert KValue(torsion=(1, 1)).is_zero()


def test_bad_values():
    with pytest.raises(ValueError):
        KValue(free=-1)
    with pytest.raises(ValueError):
        KValue.parse("Q^2")
