import cmath
import warnings

import pytest
from hypothesis import given, strategies as st

from famring.characters import (
    SchurIndexWarning,
    character_table,
    conjugation_action,
    dixon_prime,
    rep_ring_basis,
    restriction_matrix,
)
from famring.groups import check_hom, find_embeddings, make_cyclic, power_automorphism

from conftest import SMALL_GROUP_FACTORIES, SMALL_GROUP_FACTS, small_group


def numeric(x) -> complex:
    z = cmath.exp(2j * cmath.pi / x.conductor)
    return sum(complex(float(c)) * z**k for k, c in enumerate(x.coeffs))


def numeric_table(G):
    t = character_table(G)
    return [[numeric(t.value(i, g)) for g in range(G.order)] for i in range(len(t))]


@pytest.mark.parametrize("name", sorted(SMALL_GROUP_FACTORIES))
def test_orthogonality_and_degrees(name):
    G = small_group(name)
    t = character_table(G)
    t.check_orthogonality()
    assert sum(d * d for d in t.degrees) == G.order
    assert len(t) == len(G.classes)
    if name in SMALL_GROUP_FACTS:
        assert sorted(t.degrees) == SMALL_GROUP_FACTS[name][2]


def _key(row):
    return tuple((round(v.real, 9) + 0.0, round(v.imag, 9) + 0.0) for v in row)


@pytest.mark.parametrize("n", range(1, 13))
def test_cyclic_table_matches_explicit_characters(n):
    got = sorted(_key(row) for row in numeric_table(make_cyclic(n)))
    want = sorted(_key([cmath.exp(2j * cmath.pi * k * g / n) for g in range(n)]) for k in range(n))
    assert got == want


@pytest.mark.parametrize("name", ["S3", "D8", "A4", "D10"])
def test_values_bounded_by_degree(name):
    G = small_group(name)
    t = character_table(G)
    for row, d in zip(numeric_table(G), t.degrees):
        assert all(abs(v) <= d + 1e-9 for v in row)


@given(st.integers(1, 200), st.integers(1, 60))
def test_dixon_prime_conditions(order, exponent):
    p = dixon_prime(order, exponent)
    assert (p - 1) % exponent == 0 and p * p > 4 * order


@pytest.mark.parametrize("name", sorted(SMALL_GROUP_FACTORIES))
def test_rational_rank_counts_cyclic_subgroups(name):
    G = small_group(name)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", SchurIndexWarning)
        B = rep_ring_basis(character_table(G), "Q")
    assert B.rank == len(G.cyclic_classes)


def test_schur_warning_for_q8():
    with pytest.warns(SchurIndexWarning):
        rep_ring_basis(character_table(small_group("Q8")), "Q")


def test_restriction_z2_in_z4_over_q():
    Z2, Z4 = make_cyclic(2), make_cyclic(4)
    R = restriction_matrix(check_hom(Z2, Z4, [0, 2]), "Q")
    assert R.matrix == [[1, 0, 1], [0, 2, 0]]


def _numeric_restriction(f, small, big):
    """Multiplicities <res chi, psi> by floating-point sums over elements."""
    nb, ns = numeric_table(big), numeric_table(small)
    out = []
    for chi in nb:
        res = [chi[f.images[h]] for h in range(small.order)]
        out.append([round((sum(a * b.conjugate() for a, b in zip(res, psi)) / small.order).real) for psi in ns])
    return [[out[j][i] for j in range(len(nb))] for i in range(len(ns))]


@pytest.mark.parametrize(
    "sub,sup",
    [("Z2", "V4"), ("Z3", "S3"), ("Z2", "S3"), ("V4", "A4"), ("Z3", "A4"), ("Z4", "D8"), ("Z2", "Q8"), ("S3", "D12")],
)
def test_restriction_matches_numeric_oracle(sub, sup):
    H, G = small_group(sub), small_group(sup)
    f = find_embeddings(H, G, limit=1)[0]
    R = restriction_matrix(f, "C")
    assert R.matrix == _numeric_restriction(f, H, G)


@given(st.sampled_from([5, 7, 8, 9, 12]), st.data())
def test_power_automorphism_permutes_and_preserves_products(n, data):
    G = make_cyclic(n)
    k = data.draw(st.sampled_from([k for k in range(1, n) if all(k % p or n % p for p in range(2, n + 1))]))
    A = conjugation_action(power_automorphism(G, k), "C").matrix
    assert sorted(map(sorted, A)) == sorted(map(sorted, [[int(i == j) for j in range(n)] for i in range(n)]))
    B = rep_ring_basis(character_table(G), "Q")
    AQ = conjugation_action(power_automorphism(G, k), "Q", B).matrix
    assert AQ == [[int(i == j) for j in range(B.rank)] for i in range(B.rank)]


@pytest.mark.parametrize("name", ["S3", "D8", "A4", "Z6"])
@pytest.mark.parametrize("field", ["Q", "C"])
def test_structure_constants_match_pointwise_products(name, field):
    G = small_group(name)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", SchurIndexWarning)
        B = rep_ring_basis(character_table(G), field)
    t = B.table
    nt = numeric_table(G)

    def values(coords):
        cc = B.expand(coords)
        return [sum(c * row[g] for c, row in zip(cc, nt)) for g in range(G.order)]

    for a in range(B.rank):
        for b in range(B.rank):
            ea = [int(i == a) for i in range(B.rank)]
            eb = [int(i == b) for i in range(B.rank)]
            prod = values(B.mul(ea, eb))
            want = [x * y for x, y in zip(values(ea), values(eb))]
            assert all(abs(p - w) < 1e-9 for p, w in zip(prod, want))
    assert B.degree(B.regular()) == G.order
    assert len(t) >= B.rank
