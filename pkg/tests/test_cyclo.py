import cmath
from fractions import Fraction

from hypothesis import given, strategies as st

from famring.cyclo import CycloNumber, cyclotomic_poly, totient


def numeric(x: CycloNumber) -> complex:
    z = cmath.exp(2j * cmath.pi / x.conductor)
    return sum(complex(float(c)) * z**k for k, c in enumerate(x.coeffs))


conductors = st.sampled_from([1, 2, 3, 4, 5, 6, 8, 12])
small = st.integers(-3, 3)


@st.composite
def cyclo(draw, n=None):
    n = n or draw(conductors)
    coeffs = draw(st.lists(small, min_size=0, max_size=n))
    return CycloNumber(n, coeffs)


@given(st.integers(1, 40))
def test_cyclotomic_poly_degree(n):
    assert len(cyclotomic_poly(n)) - 1 == totient(n)


@given(conductors.flatmap(lambda n: st.tuples(cyclo(n), cyclo(n))))
def test_ring_ops_match_complex_numbers(pair):
    a, b = pair
    assert abs(numeric(a + b) - (numeric(a) + numeric(b))) < 1e-9
    assert abs(numeric(a * b) - numeric(a) * numeric(b)) < 1e-9
    assert abs(numeric(a.conj()) - numeric(a).conjugate()) < 1e-9


@given(cyclo())
def test_inverse(a):
    if a.is_zero():
        return
    assert a * a.inverse() == CycloNumber.one(a.conductor)


@given(cyclo(), st.sampled_from([1, 2, 3]))
def test_embedding_preserves_value(a, m):
    b = a.embed(a.conductor * m)
    assert b == a
    assert abs(numeric(b) - numeric(a)) < 1e-9


def test_roots_of_unity():
    z = CycloNumber.zeta(6)
    assert z**6 == CycloNumber.one(6)
    assert z**3 == CycloNumber.rational(-1, 6)
    assert z + z**5 == CycloNumber.one(6)  # 2 cos(pi/3)
    w = CycloNumber.zeta(3)
    assert (w + w**2).to_rational() == Fraction(-1)


def test_galois_action_on_sqrt():
    # i = zeta_4; galois(3) sends it to -i
    i = CycloNumber.zeta(4)
    assert i.galois(3) == -i
    assert (i * i).is_rational()
