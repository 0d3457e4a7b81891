import pytest

from famring.presentation import find_presentation_witness, generated_subring, verify_presentation
from famring.report import counts_report, limit_report

from conftest import CORPUS, corpus_file, corpus_limit

PRINTED_TYPOS = {("cyclic-6", "printed-st"), ("z3z5", "printed-cubic"), ("sl2z", "printed-u"), ("bianchi-m1-f2", "printed-v123")}


@pytest.mark.parametrize("name", CORPUS)
@pytest.mark.parametrize("field", ["Q", "C"])
def test_limit_checks_over_corpus(name, field):
    r = limit_report(corpus_file(name), field, checks=True)
    failing = {c.name for c in r.checks if not c.passed}
    expected = {f"presentation {p}" for n, p in PRINTED_TYPOS if n == name and corpus_file(n).presentation(p).field == field}
    assert failing == expected


@pytest.mark.parametrize("name", CORPUS)
def test_counts_over_corpus(name):
    assert counts_report(corpus_file(name)).passed


def test_z6_printed_relation_has_no_solution():
    L = corpus_limit("cyclic-6", "Q")
    w = find_presentation_witness(L, corpus_file("cyclic-6").presentation("printed-st"))
    assert not w.found and w.relation_solutions == 0


def test_z3z5_rational_limit_is_not_monogenic():
    # the ring has index 15 in Z^3 and no single element generates it: check every element within bound 4
    L = corpus_limit("z3z5", "Q")
    import itertools

    for c in itertools.product(range(-4, 5), repeat=L.rank):
        assert not generated_subring(L, [list(c)]).generated


def _sl2_element(L, on_z4, on_z6):
    """Limit coordinates of the tuple with the given values on Z/4 and Z/6 (restricted to the rest)."""
    values = {
        "Z4": on_z4,
        "Z6": on_z6,
        "Z2": [on_z4[0], on_z4[2]],
        "Z3": [on_z6[0], on_z6[2], on_z6[4]],
        "1": [on_z4[0]],
    }
    amb = []
    for label, B in zip(L.labels, L.bases):
        amb.extend(B.from_values(values[label]))
    return L.coords(amb)


def test_sl2z_printed_elements_generate_index_two():
    L = corpus_limit("sl2z", "Q")
    P = corpus_file("sl2z").presentation("printed-u")
    w = find_presentation_witness(L, P)
    assert not w.found and w.relation_solutions == 43
    x, y = [1, -1, 1, -1], [2, 0, -2, 0]
    s, t = [2, -1, -1, 2, -1, -1], [1, -1, 1, -1, 1, -1]
    u1 = _sl2_element(L, x, [1] * 6)
    u2 = _sl2_element(L, [2] * 4, s)
    u3 = _sl2_element(L, y, [2 * v for v in t])
    cert = verify_presentation(L, P.with_assignment({"u1": u1, "u2": u2, "u3": u3}))
    assert cert.relations_hold and not cert.generation.generated and cert.generation.index == 2
    # replacing 2t by st gives a generating set with one changed relation
    u3_fixed = _sl2_element(L, y, [a * b for a, b in zip(s, t)])
    fixed = corpus_file("sl2z").presentation("corrected-u")
    assert verify_presentation(L, fixed.with_assignment({"u1": u1, "u2": u2, "u3": u3_fixed})).passed


def test_v123_printed_relations_unsatisfiable():
    L = corpus_limit("bianchi-m1-f2", "C")
    w = find_presentation_witness(L, corpus_file("bianchi-m1-f2").presentation("printed-v123"))
    assert w.relation_solutions == 0
