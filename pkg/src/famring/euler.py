"""The cohomological index I_K from orbit-complex data, and Brown's integrality check.

Invariants are measured with ordinary characters: the coefficient field is
assumed to have characteristic prime to m(Γ), so dim_K M^H is the
multiplicity of the trivial character in M restricted to H.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .characters import character_table, restriction_matrix
from .diagram import DiagramError, FamilyDiagram
from .limit import LimitRing


@dataclass(frozen=True)
class OrbitComplex:
    """One (dimension, stabilizer node) pair per orbit of cells."""

    diagram: FamilyDiagram
    cells: tuple[tuple[int, str], ...]

    def __post_init__(self):
        for dim, node in self.cells:
            if dim < 0:
                raise DiagramError(f"negative cell dimension {dim}")
            if node not in self.diagram.nodes:
                raise DiagramError(f"cell stabilizer {node!r} is not a diagram node")

    @property
    def top_dimension(self) -> int:
        return max((d for d, _ in self.cells), default=0)


@dataclass(frozen=True)
class StableTuple:
    """Per-node virtual characters in complex-irreducible coordinates."""

    components: dict[str, tuple[int, ...]]

    def __add__(self, other: "StableTuple") -> "StableTuple":
        return StableTuple({k: tuple(a + b for a, b in zip(v, other.components[k])) for k, v in self.components.items()})

    def scale(self, n: int) -> "StableTuple":
        return StableTuple({k: tuple(n * a for a in v) for k, v in self.components.items()})

    @classmethod
    def from_limit(cls, L: LimitRing, coords: Sequence[int]) -> "StableTuple":
        vec = L.ambient(coords)
        return cls({l: tuple(B.expand(L.block(vec, i))) for i, (l, B) in enumerate(zip(L.labels, L.bases))})


def inconsistencies(d: FamilyDiagram, m: StableTuple) -> list[str]:
    """Constraints of the diagram violated by a raw tuple (empty when stable)."""
    out = []
    for label, G in d.nodes.items():
        if label not in m.components:
            out.append(f"missing component for node {label}")
        elif len(m.components[label]) != len(character_table(G)):
            out.append(f"component for node {label} has the wrong length")
    if out:
        return out
    for r in d.res:
        R = restriction_matrix(r.hom, "C").apply(m.components[r.sup])
        if list(m.components[r.sub]) != R:
            out.append(f"restriction {r.sub} < {r.sup} does not match")
    for label, autos in d.autos.items():
        table = character_table(d.nodes[label])
        comp = m.components[label]
        for a in autos:
            perm = table.precompose_perm(a.images)
            if any(comp[perm[i]] != comp[i] for i in range(len(comp))):
                out.append(f"component at {label} is not invariant under its automorphisms")
                break
    return out


def index(c: OrbitComplex, m: StableTuple, *, check: bool = True) -> int:
    """Sum over cells of (-1)^dim times dim of the invariants at the stabilizer."""
    if check:
        bad = inconsistencies(c.diagram, m)
        if bad:
            raise DiagramError("tuple is not stable: " + "; ".join(bad))
    return sum((-1) ** dim * m.components[node][0] for dim, node in c.cells)


def trivial_tuple(d: FamilyDiagram) -> StableTuple:
    return StableTuple({l: tuple(int(i == 0) for i in range(len(character_table(G)))) for l, G in d.nodes.items()})


def m_gamma(d: FamilyDiagram) -> int:
    return lcm(*(G.order for G in d.nodes.values()))


def induced_module_tuple(d: FamilyDiagram, n: int) -> StableTuple:
    """(n/|H|) copies of the regular character at each node H."""
    if n < 1:
        raise ValueError("index must be positive")
    comps = {}
    for label, G in d.nodes.items():
        if n % G.order:
            raise DiagramError(f"node {label} has order {G.order}, which does not divide {n}")
        table = character_table(G)
        comps[label] = tuple((n // G.order) * deg for deg in table.degrees)
    m = StableTuple(comps)
    bad = inconsistencies(d, m)
    if bad:
        raise DiagramError("induced tuple is not stable: " + "; ".join(bad))
    return m


def rational_euler_char(c: OrbitComplex) -> Fraction:
    return sum((Fraction((-1) ** dim, c.diagram.nodes[node].order) for dim, node in c.cells), Fraction(0))


@dataclass(frozen=True)
class BrownReport:
    n: int
    chi: int
    m_gamma: int
    chi_rational: Fraction
    value: Fraction

    @property
    def integral(self) -> bool:
        return self.value.denominator == 1

    @property
    def consistent(self) -> bool:
        return self.chi == self.n * self.chi_rational

    @property
    def passed(self) -> bool:
        return self.integral and self.consistent


def brown_integrality(c: OrbitComplex, n: int) -> BrownReport:
    """chi(BΓ') from the induced tuple, and the check that m(Γ)·chi/n is an integer."""
    chi = index(c, induced_module_tuple(c.diagram, n), check=False)
    m = m_gamma(c.diagram)
    return BrownReport(n, chi, m, rational_euler_char(c), Fraction(m * chi, n))


def valid_indices(d: FamilyDiagram, upto: int) -> list[int]:
    m = m_gamma(d)
    return [n for n in range(1, upto + 1) if n % m == 0]

