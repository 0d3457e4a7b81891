"""The stable-element lattice G_F(K[Γ]) of a diagram and its ring structure."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .characters import (
    Field,
    RepRingBasis,
    character_table,
    conjugation_action,
    rep_ring_basis,
    restriction_matrix,
)
from .diagram import FamilyDiagram, FusedClasses, fused_counts, validate
from .groups import FiniteGroup
from .lattice import IntLattice, elementary_divisors, hnf_kernel, rational_rank


class LimitError(RuntimeError):
    """Internal inconsistency (e.g. a product falling outside the lattice)."""


@dataclass(eq=False)
class LimitRing:
    diagram: FamilyDiagram
    field: Field
    labels: list[str]
    bases: list[RepRingBasis]
    offsets: list[int]
    constraints: list[list[int]]
    lattice: IntLattice
    structure: list[list[list[int]]] = field(default_factory=list)
    unit_coords: list[int] = field(default_factory=list)

    @property
    def rank(self) -> int:
        return self.lattice.rank

    @property
    def ambient_dims(self) -> list[int]:
        return [b.rank for b in self.bases]

    @property
    def ambient_dim(self) -> int:
        return self.lattice.dim

    def node_index(self, label: str) -> int:
        return self.labels.index(label)

    def block(self, vec: Sequence[int], i: int) -> list[int]:
        return list(vec[self.offsets[i] : self.offsets[i] + self.bases[i].rank])

    def ambient(self, coords: Sequence[int]) -> list[int]:
        if len(coords) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(coords)}")
        return self.lattice.combine(coords)

    def coords(self, vec: Sequence[int]) -> Optional[list[int]]:
        return self.lattice.coordinates(vec)

    def ambient_mul(self, x: Sequence[int], y: Sequence[int]) -> list[int]:
        out = []
        for i, B in enumerate(self.bases):
            out.extend(B.mul(self.block(x, i), self.block(y, i)))
        return out

    def ambient_unit(self) -> list[int]:
        out = []
        for B in self.bases:
            out.extend(B.unit())
        return out

    def is_stable(self, vec: Sequence[int]) -> bool:
        return all(sum(a * b for a, b in zip(row, vec)) == 0 for row in self.constraints)

    # -- arithmetic in limit coordinates ---------------------------------

    def mul(self, u: Sequence[int], v: Sequence[int]) -> list[int]:
        r = self.rank
        out = [0] * r
        S = self.structure
        for i in range(r):
            if u[i]:
                for j in range(r):
                    if v[j]:
                        c = u[i] * v[j]
                        for k, x in enumerate(S[i][j]):
                            if x:
                                out[k] += c * x
        return out

    def power(self, u: Sequence[int], k: int) -> list[int]:
        result = list(self.unit_coords)
        for _ in range(k):
            result = self.mul(result, u)
        return result

    def basis_vector(self, i: int) -> list[int]:
        v = [0] * self.rank
        v[i] = 1
        return v


def _constraint_rows(d: FamilyDiagram, labels, bases, offsets, field: Field) -> list[list[int]]:
    total = offsets[-1] + bases[-1].rank if bases else 0
    idx = {l: i for i, l in enumerate(labels)}
    rows = []
    for m in d.res:
        i, j = idx[m.sub], idx[m.sup]
        R = restriction_matrix(m.hom, field, bases[i], bases[j]).matrix
        for a, Ra in enumerate(R):
            row = [0] * total
            row[offsets[i] + a] += 1
            for b, x in enumerate(Ra):
                row[offsets[j] + b] -= x
            if any(row):
                rows.append(row)
    for label, autos in d.autos.items():
        i = idx[label]
        for auto in autos:
            A = conjugation_action(auto, field, bases[i]).matrix
            for a, Aa in enumerate(A):
                row = [0] * total
                row[offsets[i] + a] += 1
                for b, x in enumerate(Aa):
                    row[offsets[i] + b] -= x
                if any(row):
                    rows.append(row)
    return rows


def compute_limit(d: FamilyDiagram, field: Field = "Q", *, structure: bool = True) -> LimitRing:
    """Saturated integer kernel of all stability constraints, with structure constants."""
    validate(d)
    labels = d.labels
    bases = [rep_ring_basis(character_table(d.nodes[l]), field) for l in labels]
    offsets, total = [], 0
    for B in bases:
        offsets.append(total)
        total += B.rank
    rows = _constraint_rows(d, labels, bases, offsets, field)
    lattice = hnf_kernel(rows, total)
    L = LimitRing(d, field, labels, bases, offsets, rows, lattice)
    unit = L.coords(L.ambient_unit())
    if unit is None:
        raise LimitError("the unit tuple is not stable")
    L.unit_coords = unit
    if structure:
        r = lattice.rank
        S = [[None] * r for _ in range(r)]
        for i in range(r):
            for j in range(i, r):
                prod = L.ambient_mul(lattice.basis[i], lattice.basis[j])
                c = L.coords(prod)
                if c is None:
                    raise LimitError(f"product of basis elements {i}, {j} left the lattice")
                S[i][j] = S[j][i] = c
        L.structure = S
    return L


# -- checks ---------------------------------------------------------------------


@dataclass
class RingAxiomReport:
    identity: bool
    commutative: bool
    associative: bool
    closure: bool
    stable: bool
    saturated: bool
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all((self.identity, self.commutative, self.associative, self.closure, self.stable, self.saturated))


def check_ring_axioms(L: LimitRing) -> RingAxiomReport:
    r = L.rank
    S = L.structure
    fails = []
    ident = all(L.mul(L.unit_coords, L.basis_vector(i)) == L.basis_vector(i) for i in range(r))
    if not ident:
        fails.append("unit is not an identity")
    comm = all(S[i][j] == S[j][i] for i in range(r) for j in range(r))
    if not comm:
        fails.append("tensor is not symmetric")
    assoc = True
    for i in range(r):
        for j in range(r):
            for k in range(r):
                left = [0] * r
                right = [0] * r
                for m in range(r):
                    a, b = S[i][j][m], S[j][k][m]
                    if a:
                        for l, x in enumerate(S[m][k]):
                            left[l] += a * x
                    if b:
                        for l, x in enumerate(S[i][m]):
                            right[l] += b * x
                if left != right:
                    assoc = False
                    fails.append(f"associativity fails at ({i},{j},{k})")
                    break
            if not assoc:
                break
        if not assoc:
            break
    closure = True
    for i in range(r):
        for j in range(r):
            prod = L.ambient_mul(L.lattice.basis[i], L.lattice.basis[j])
            if L.coords(prod) is None or L.ambient(S[i][j]) != prod:
                closure = False
                fails.append(f"product ({i},{j}) is not reproduced by the tensor")
    stable = all(L.is_stable(b) for b in L.lattice.basis)
    if not stable:
        fails.append("a basis tuple violates a constraint")
    saturated = L.ambient_dim - rational_rank(L.constraints) == r
    if not saturated:
        fails.append("lattice rank differs from the rational kernel dimension")
    return RingAxiomReport(ident, comm, assoc, closure, stable, saturated, fails)


@dataclass(frozen=True)
class RankCheck:
    field: str
    rank: int
    expected: int
    count_name: str

    @property
    def passed(self) -> bool:
        return self.rank == self.expected


def rank_checks(L: LimitRing, counts: Optional[FusedClasses] = None) -> RankCheck:
    """Rational rank against fused cyclic classes, complex rank against fused element classes."""
    counts = counts or fused_counts(L.diagram)
    if L.field == "Q":
        return RankCheck("Q", L.rank, counts.c, "C_F")
    return RankCheck("C", L.rank, counts.n, "n_F")


@dataclass
class NaturalityReport:
    matrix: list[list[int]]
    injective: bool
    onto: bool


def naturality(Lq: LimitRing, Lc: LimitRing) -> NaturalityReport:
    """Map the rational limit into the complex one by orbit-sum expansion."""
    if Lq.field != "Q" or Lc.field != "C" or Lq.diagram is not Lc.diagram:
        raise ValueError("need the rational and complex limits of one diagram")
    images = []
    for b in Lq.lattice.basis:
        vec = []
        for i, B in enumerate(Lq.bases):
            vec.extend(B.expand(Lq.block(b, i)))
        c = Lc.coords(vec)
        if c is None:
            raise LimitError("expanded rational element is not stable over C")
        images.append(c)
    injective = rational_rank(images) == Lq.rank
    onto = IntLattice.from_generators(images, Lc.rank).is_full() if images else Lc.rank == 0
    matrix = [[images[j][i] for j in range(Lq.rank)] for i in range(Lc.rank)]
    return NaturalityReport(matrix, injective, onto)


# -- graphs of groups ---------------------------------------------------------


def class_count(G: FiniteGroup) -> int:
    return len(G.classes)


def tree_torsion_count(
    vertex_groups: Sequence[FiniteGroup],
    edge_groups: Sequence[FiniteGroup],
    h1_dims: Optional[Sequence[int]] = None,
) -> int:
    """sum n(G_i) - sum n(H_j) + sum of the supplied H^1 dimensions."""
    h1 = list(h1_dims or [])
    if any(x < 0 for x in h1):
        raise ValueError("H^1 dimensions must be nonnegative")
    return sum(map(class_count, vertex_groups)) - sum(map(class_count, edge_groups)) + sum(h1)


@dataclass(frozen=True)
class K1Report:
    k0_rank: int
    k1_rank: int
    torsion: tuple[int, ...]
    source_rank: int
    target_rank: int


def k1_rank(d: FamilyDiagram) -> K1Report:
    """Cokernel of the difference of restrictions  (+) R(G_i) -> (+) R(H_j)."""
    if d.graph is None:
        raise ValueError("diagram does not carry a graph-of-groups structure")
    g = d.graph
    vbases = {v: rep_ring_basis(character_table(d.nodes[v]), "C") for v in g.vertices}
    voff, total = {}, 0
    for v in g.vertices:
        voff[v] = total
        total += vbases[v].rank
    rows = []
    for e in g.edges:
        Hb = rep_ring_basis(character_table(d.nodes[e.label]), "C")
        block = [[0] * total for _ in range(Hb.rank)]
        used = []
        for sign, end in ((1, e.ends[0]), (-1, e.ends[1])):
            m = next(
                m for m in d.res
                if m.sub == e.label and m.sup == end and m not in used
            )
            used.append(m)
            R = restriction_matrix(m.hom, "C", Hb, vbases[end]).matrix
            for a, Ra in enumerate(R):
                for b, x in enumerate(Ra):
                    block[a][voff[end] + b] += sign * x
        rows.extend(block)
    rk = rational_rank(rows) if rows else 0
    divisors = elementary_divisors(rows) if rows else []
    return K1Report(
        k0_rank=total - rk,
        k1_rank=len(rows) - rk,
        torsion=tuple(x for x in divisors if x > 1),
        source_rank=total,
        target_rank=len(rows),
    )
