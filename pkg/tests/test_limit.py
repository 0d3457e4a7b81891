import pytest
from hypothesis import given, strategies as st

from famring.diagram import cyclic_subdiagram, fused_counts
from famring.lattice import rational_rank
from famring.limit import (
    check_ring_axioms,
    compute_limit,
    k1_rank,
    naturality,
    rank_checks,
    tree_torsion_count,
)
from famring.groups import make_cyclic

from conftest import CORPUS, corpus_file, corpus_limit
from strategies import one_node_diagrams


@pytest.mark.parametrize("name", CORPUS)
@pytest.mark.parametrize("field", ["Q", "C"])
def test_corpus_limit_axioms_and_counts(name, field):
    L = corpus_limit(name, field)
    assert check_ring_axioms(L).passed
    assert rank_checks(L).passed
    assert L.rank == L.ambient_dim - rational_rank(L.constraints)


@pytest.mark.parametrize("name", CORPUS)
def test_naturality(name):
    nat = naturality(corpus_limit(name, "Q"), corpus_limit(name, "C"))
    assert nat.injective
    assert corpus_limit(name, "Q").rank <= corpus_limit(name, "C").rank


def test_naturality_onto_only_when_ranks_agree():
    assert naturality(corpus_limit("sl3z-c2", "Q"), corpus_limit("sl3z-c2", "C")).onto
    assert not naturality(corpus_limit("sl2z", "Q"), corpus_limit("sl2z", "C")).onto


@given(one_node_diagrams(), st.sampled_from(["Q", "C"]))
def test_rank_one_iff_trivial(d, field):
    L = compute_limit(d, field)
    assert (L.rank == 1) == all(G.order == 1 for G in d.nodes.values())
    assert check_ring_axioms(L).passed


@given(one_node_diagrams())
def test_rank_formulas_on_random_one_node_diagrams(d):
    fc = fused_counts(d)
    assert compute_limit(d, "C", structure=False).rank == fc.n
    assert compute_limit(d, "Q", structure=False).rank == fc.c


@given(one_node_diagrams())
def test_cyclic_subdiagram_keeps_rational_rank(d):
    assert compute_limit(cyclic_subdiagram(d), "Q", structure=False).rank == compute_limit(d, "Q", structure=False).rank


@pytest.mark.parametrize("name", CORPUS)
def test_products_stay_stable(name):
    L = corpus_limit(name, "C")
    basis = L.lattice.basis
    for i in range(L.rank):
        for j in range(L.rank):
            assert L.is_stable(L.ambient_mul(basis[i], basis[j]))


@given(st.data())
def test_mul_is_commutative_and_distributive(data):
    L = corpus_limit("sl2z", "C")
    vec = st.lists(st.integers(-3, 3), min_size=L.rank, max_size=L.rank)
    u, v, w = data.draw(vec), data.draw(vec), data.draw(vec)
    assert L.mul(u, v) == L.mul(v, u)
    vw = [a + b for a, b in zip(v, w)]
    assert L.mul(u, vw) == [a + b for a, b in zip(L.mul(u, v), L.mul(u, w))]
    assert L.mul(L.unit_coords, u) == u


def test_tree_torsion_and_k1():
    assert tree_torsion_count([make_cyclic(4), make_cyclic(6)], [make_cyclic(2)]) == 8
    assert tree_torsion_count([make_cyclic(3), make_cyclic(5)], [make_cyclic(1)], [0]) == 7
    with pytest.raises(ValueError):
        tree_torsion_count([make_cyclic(2)], [], [-1])
    k = k1_rank(corpus_file("sl2z").diagram)
    assert (k.k0_rank, k.k1_rank, k.torsion) == (8, 0, ())
    k = k1_rank(corpus_file("s3-edge").diagram)
    assert (k.k0_rank, k.k1_rank) == (4, 1)


def test_k1_needs_graph():
    with pytest.raises(ValueError):
        k1_rank(corpus_file("sl3z-c2").diagram)


def test_basis_is_deterministic():
    d = corpus_file("bianchi-m1-f2").diagram
    a, b = compute_limit(d, "C"), compute_limit(d, "C")
    assert a.lattice.basis == b.lattice.basis and a.structure == b.structure
