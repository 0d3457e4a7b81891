from __future__ import annotations

import os
from functools import lru_cache

from hypothesis import settings

from famring.corpus import corpus_names, load_corpus
from famring.groups import FiniteGroup, direct_product, make_cyclic, make_from_permutations, perm_from_cycles
from famring.limit import LimitRing, compute_limit

settings.register_profile("ci", max_examples=30, deadline=None)
settings.register_profile("thorough", max_examples=300, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))


def _perm_group(cycles_list, degree, name):
    return make_from_permutations([perm_from_cycles(c, degree) for c in cycles_list], degree=degree, name=name)


def _dihedral(n: int) -> FiniteGroup:
    rot = [list(range(1, n + 1))]
    refl = [[i, n + 1 - i] for i in range(1, n // 2 + 1) if i != n + 1 - i]
    return _perm_group([rot, refl], n, f"D{2 * n}")


SMALL_GROUP_FACTORIES = {
    **{f"Z{n}": (lambda n=n: make_cyclic(n, name=f"Z{n}")) for n in range(1, 13)},
    "V4": lambda: _perm_group([[[1, 2], [3, 4]], [[1, 3], [2, 4]]], 4, "V4"),
    "S3": lambda: _perm_group([[[1, 2, 3]], [[1, 2]]], 3, "S3"),
    "D8": lambda: _dihedral(4),
    "Q8": lambda: _perm_group([[[1, 2, 3, 4], [5, 6, 7, 8]], [[1, 5, 3, 7], [2, 8, 4, 6]]], 8, "Q8"),
    "D10": lambda: _dihedral(5),
    "A4": lambda: _perm_group([[[1, 2, 3]], [[1, 2], [3, 4]]], 4, "A4"),
    "D12": lambda: _dihedral(6),
    "Z2xZ4": lambda: direct_product(make_cyclic(2), make_cyclic(4)),
    "Z2xZ6": lambda: direct_product(make_cyclic(2), make_cyclic(6)),
    "Z2^3": lambda: direct_product(direct_product(make_cyclic(2), make_cyclic(2)), make_cyclic(2)),
}

# (order, number of conjugacy classes, sorted degrees)
SMALL_GROUP_FACTS = {
    "V4": (4, 4, [1, 1, 1, 1]),
    "S3": (6, 3, [1, 1, 2]),
    "D8": (8, 5, [1, 1, 1, 1, 2]),
    "Q8": (8, 5, [1, 1, 1, 1, 2]),
    "D10": (10, 4, [1, 1, 2, 2]),
    "A4": (12, 4, [1, 1, 1, 3]),
    "D12": (12, 6, [1, 1, 1, 1, 2, 2]),
    "Z2xZ4": (8, 8, [1] * 8),
    "Z2xZ6": (12, 12, [1] * 12),
    "Z2^3": (8, 8, [1] * 8),
}


@lru_cache(maxsize=None)
def small_group(name: str) -> FiniteGroup:
    return SMALL_GROUP_FACTORIES[name]()


@lru_cache(maxsize=None)
def corpus_file(name: str):
    return load_corpus(name)


@lru_cache(maxsize=None)
def corpus_limit(name: str, field: str) -> LimitRing:
    return compute_limit(corpus_file(name).diagram, field)


CORPUS = corpus_names()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
