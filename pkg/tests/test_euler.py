from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from famring.diagram import DiagramError
from famring.euler import (
    OrbitComplex,
    StableTuple,
    brown_integrality,
    index,
    induced_module_tuple,
    inconsistencies,
    m_gamma,
    rational_euler_char,
    trivial_tuple,
    valid_indices,
)

from conftest import corpus_file, corpus_limit


def sl2():
    return corpus_file("sl2z").orbit_complex


def test_trivial_tuple_index():
    c = sl2()
    assert index(c, trivial_tuple(c.diagram)) == 1


def test_rational_euler_characteristic():
    assert rational_euler_char(sl2()) == Fraction(1, 4) + Fraction(1, 6) - Fraction(1, 2) == Fraction(-1, 12)


def test_m_gamma():
    assert m_gamma(sl2().diagram) == 12
    assert m_gamma(corpus_file("trivial").diagram) == 1


def test_induced_tuple_components():
    m = induced_module_tuple(sl2().diagram, 12)
    assert m.components["Z4"] == (3, 3, 3, 3)
    assert m.components["Z6"] == (2,) * 6
    assert m.components["Z2"] == (6, 6)
    assert index(sl2(), m) == -1


def test_divisibility_error():
    with pytest.raises(DiagramError, match="Z4"):
        induced_module_tuple(sl2().diagram, 6)


@pytest.mark.parametrize("n,chi", [(12, -1), (24, -2), (48, -4)])
def test_brown(n, chi):
    b = brown_integrality(sl2(), n)
    assert b.chi == chi and b.passed


def test_induced_identity_for_all_valid_indices():
    c = sl2()
    for n in valid_indices(c.diagram, 120):
        assert index(c, induced_module_tuple(c.diagram, n)) == n * rational_euler_char(c)


@given(st.data())
def test_index_is_additive(data):
    c = sl2()
    L = corpus_limit("sl2z", "C")
    vec = st.lists(st.integers(-4, 4), min_size=L.rank, max_size=L.rank)
    a = StableTuple.from_limit(L, data.draw(vec))
    b = StableTuple.from_limit(L, data.draw(vec))
    k = data.draw(st.integers(-3, 3))
    assert index(c, a + b) == index(c, a) + index(c, b)
    assert index(c, a.scale(k)) == k * index(c, a)


def test_inconsistent_tuple_rejected():
    c = sl2()
    m = trivial_tuple(c.diagram)
    comps = dict(m.components)
    comps["Z2"] = (0, 1)
    bad = StableTuple(comps)
    assert inconsistencies(c.diagram, bad)
    with pytest.raises(DiagramError):
        index(c, bad)


def test_complex_validation():
    d = sl2().diagram
    with pytest.raises(DiagramError):
        OrbitComplex(d, ((0, "nowhere"),))
    with pytest.raises(DiagramError):
        OrbitComplex(d, ((-1, "Z4"),))
    free = OrbitComplex(d, ((0, "1"), (1, "1")))
    assert rational_euler_char(free) == 0
    assert rational_euler_char(OrbitComplex(d, ((0, "Z6"),))) == Fraction(1, 6)
