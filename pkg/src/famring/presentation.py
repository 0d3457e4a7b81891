"""Ring presentations: relation checks, generation checks and witness search.

A relation is an integer polynomial in the presentation's variables.  It is
evaluated in a LimitRing through the structure-constant tensor; generation
is decided by closing the lattice spanned by 1 and the generators under
multiplication by the generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

import sympy
from sympy.parsing.sympy_parser import (
    implicit_multiplication,
    parse_expr,
    standard_transformations,
)

from .lattice import IntLattice
from .limit import LimitRing

Term = tuple[tuple[int, ...], int]


class PresentationError(ValueError):
    pass


def parse_relation(text: str, variables: Sequence[str]) -> list[Term]:
    """Parse ``text`` (``^`` or ``**`` for powers) into integer polynomial terms."""
    syms = {v: sympy.Symbol(v) for v in variables}
    try:
        expr = parse_expr(
            text.replace("^", "**"),
            local_dict=dict(syms),
            transformations=standard_transformations + (implicit_multiplication,),
            evaluate=True,
        )
    except Exception as exc:  # sympy raises a zoo of exception types here
        raise PresentationError(f"cannot parse relation {text!r}: {exc}") from exc
    if not isinstance(expr, sympy.Expr):
        raise PresentationError(f"relation {text!r} is not a polynomial")
    extra = expr.free_symbols - set(syms.values())
    if extra:
        raise PresentationError(f"relation {text!r} uses unknown symbols {sorted(map(str, extra))}")
    gens = [syms[v] for v in variables] or [sympy.Symbol("_unused")]
    try:
        poly = sympy.Poly(expr, *gens)
    except sympy.PolynomialError as exc:
        raise PresentationError(f"relation {text!r} is not a polynomial") from exc
    terms = []
    for exps, coeff in poly.terms():
        if not coeff.is_integer:
            raise PresentationError(f"relation {text!r} has a non-integer coefficient {coeff}")
        terms.append((tuple(exps[: len(variables)]), int(coeff)))
    return sorted(terms)


@dataclass
class Presentation:
    name: str
    variables: list[str]
    relations: list[str]
    field: Optional[str] = None
    assignment: Optional[dict[str, list[int]]] = None
    require_generation: bool = True

    @cached_property
    def polynomials(self) -> list[list[Term]]:
        return [parse_relation(r, self.variables) for r in self.relations]

    def with_assignment(self, assignment: dict[str, list[int]]) -> "Presentation":
        return Presentation(
            self.name, list(self.variables), list(self.relations), self.field, dict(assignment), self.require_generation
        )


# -- evaluation -------------------------------------------------------------------


def evaluate(L: LimitRing, terms: Sequence[Term], values: Sequence[Sequence[int]]) -> list[int]:
    """Value of a polynomial at limit elements (limit coordinates)."""
    r = L.rank
    powers: dict[tuple[int, int], list[int]] = {}

    def pw(i: int, k: int) -> list[int]:
        if k == 0:
            return list(L.unit_coords)
        key = (i, k)
        if key not in powers:
            powers[key] = L.mul(pw(i, k - 1), values[i])
        return powers[key]

    out = [0] * r
    for exps, coeff in terms:
        mono = list(L.unit_coords)
        for i, k in enumerate(exps):
            if k:
                mono = L.mul(mono, pw(i, k))
        for t in range(r):
            out[t] += coeff * mono[t]
    return out


def _evaluate_block(basis, terms: Sequence[Term], blocks: Sequence[Sequence[int]]) -> list[int]:
    powers: dict[tuple[int, int], list[int]] = {}

    def pw(i: int, k: int) -> list[int]:
        if k == 0:
            return basis.unit()
        key = (i, k)
        if key not in powers:
            powers[key] = basis.mul(pw(i, k - 1), blocks[i])
        return powers[key]

    out = [0] * basis.rank
    for exps, coeff in terms:
        mono = basis.unit()
        for i, k in enumerate(exps):
            if k:
                mono = basis.mul(mono, pw(i, k))
        for t in range(basis.rank):
            out[t] += coeff * mono[t]
    return out


@dataclass
class GenerationResult:
    generated: bool
    rank: int
    index: Optional[int]
    rounds: int


def generated_subring(L: LimitRing, gens: Sequence[Sequence[int]], max_rounds: Optional[int] = None) -> GenerationResult:
    """Smallest unital subring containing ``gens``, built by repeated lattice joins.

    Each round multiplies the current lattice basis by every generator.  A
    round that adds nothing proves closure.  Since every generator satisfies
    its monic characteristic polynomial of degree rank(L), monomials with
    exponents below rank(L) already span the subring, so
    len(gens) * (rank(L) - 1) + 1 rounds always suffice.
    """
    r = L.rank
    if max_rounds is None:
        max_rounds = len(gens) * max(r - 1, 0) + 1
    S = IntLattice.from_generators([list(L.unit_coords)] + [list(g) for g in gens], r)
    rounds = 0
    while rounds < max_rounds:
        rounds += 1
        new = [L.mul(b, g) for b in S.basis for g in gens]
        T = S.join(new)
        if T == S:
            break
        S = T
    return GenerationResult(S.is_full(), S.rank, S.index(), rounds)


@dataclass
class RelationVerdict:
    relation: str
    residue: list[int]

    @property
    def holds(self) -> bool:
        return not any(self.residue)


@dataclass
class PresentationCertificate:
    name: str
    relations: list[RelationVerdict]
    generation: GenerationResult
    assignment: dict[str, list[int]] = field(default_factory=dict)
    require_generation: bool = True

    @property
    def relations_hold(self) -> bool:
        return all(v.holds for v in self.relations)

    @property
    def passed(self) -> bool:
        return self.relations_hold and (self.generation.generated or not self.require_generation)


def verify_presentation(L: LimitRing, P: Presentation) -> PresentationCertificate:
    if P.assignment is None:
        raise PresentationError(f"presentation {P.name!r} has no assignment")
    values = []
    for v in P.variables:
        if v not in P.assignment:
            raise PresentationError(f"variable {v!r} is not assigned")
        c = list(P.assignment[v])
        if len(c) != L.rank:
            raise PresentationError(f"assignment of {v!r} has {len(c)} coordinates, the ring has rank {L.rank}")
        values.append(c)
    verdicts = [RelationVerdict(text, evaluate(L, terms, values)) for text, terms in zip(P.relations, P.polynomials)]
    gen = generated_subring(L, values)
    return PresentationCertificate(
        P.name, verdicts, gen, {v: list(c) for v, c in zip(P.variables, values)}, P.require_generation
    )


# -- witness search -----------------------------------------------------------------


@dataclass
class WitnessResult:
    assignment: Optional[dict[str, list[int]]]
    explored: int
    relation_solutions: int

    @property
    def found(self) -> bool:
        return self.assignment is not None


def _value_order(bound: int) -> list[int]:
    out = [0]
    for k in range(1, bound + 1):
        out += [k, -k]
    return out


def find_presentation_witness(L: LimitRing, P: Presentation, bound: int = 3) -> WitnessResult:
    """Depth-first search for an assignment satisfying every relation and generating L.

    With ``P.require_generation`` off, the first assignment satisfying the
    relations is returned.

    Variables are filled one limit coordinate at a time, trying 0, 1, -1, 2, ...
    up to ``bound``.  Because the lattice basis is in Hermite normal form, the
    ambient entries left of the next pivot are final once a coordinate is
    set, so every relation is checked node by node as soon as the blocks of
    all its variables are final.  Relations only ever multiply node
    components with each other, so a node-level failure rules out the
    whole subtree.
    """
    r = L.rank
    nv = len(P.variables)
    polys = P.polynomials
    basis = L.lattice.basis
    pivots = L.lattice.pivots
    dim = L.ambient_dim
    nodes = range(len(L.bases))

    # node blocks that become final right after coordinate i is set
    finished_at: list[list[int]] = [[] for _ in range(r)]
    done = set()
    for i in range(r):
        limit = pivots[i + 1] if i + 1 < r else dim
        for n in nodes:
            if n not in done and L.offsets[n] + L.bases[n].rank <= limit:
                finished_at[i].append(n)
                done.add(n)

    last_var = []
    for terms in polys:
        used = {i for exps, _ in terms for i, k in enumerate(exps) if k}
        last_var.append(max(used) if used else -1)
    checks_for = [[j for j, lv in enumerate(last_var) if lv == v] for v in range(nv)]

    def node_ok(n: int, rels: Sequence[int], ambients: Sequence[list[int]]) -> bool:
        B = L.bases[n]
        blocks = [L.block(a, n) for a in ambients]
        return all(not any(_evaluate_block(B, polys[j], blocks)) for j in rels)

    # constant relations (and rank-0 rings) are decided up front
    const = [j for j, lv in enumerate(last_var) if lv == -1]
    zero_amb = [[0] * dim for _ in range(nv)]
    if const and not all(node_ok(n, const, zero_amb) for n in nodes):
        return WitnessResult(None, 0, 0)
    if nv == 0:
        ok = not P.require_generation or generated_subring(L, []).generated
        return WitnessResult({} if ok else None, 1, 1)
    if r == 0:
        return WitnessResult(None, 0, 0)

    order = _value_order(bound)
    coords = [[0] * r for _ in range(nv)]
    ambients = [[0] * dim for _ in range(nv)]
    stats = {"explored": 0, "solutions": 0}
    found: list[dict] = []

    def set_coord(v: int, i: int, old: int, new: int) -> None:
        delta = new - old
        if delta:
            amb = ambients[v]
            row = basis[i]
            for t in range(pivots[i], dim):
                if row[t]:
                    amb[t] += delta * row[t]

    def dfs(v: int, i: int) -> bool:
        if v == nv:
            stats["solutions"] += 1
            if not P.require_generation or generated_subring(L, coords).generated:
                found.append({name: list(c) for name, c in zip(P.variables, coords)})
                return True
            return False
        rels = checks_for[v]
        for val in order:
            set_coord(v, i, coords[v][i], val)
            coords[v][i] = val
            stats["explored"] += 1
            if rels and finished_at[i] and not all(node_ok(n, rels, ambients) for n in finished_at[i]):
                continue
            if i + 1 < r:
                if dfs(v, i + 1):
                    return True
            elif dfs(v + 1, 0):
                return True
        set_coord(v, i, coords[v][i], 0)
        coords[v][i] = 0
        return False

    dfs(0, 0)
    return WitnessResult(found[0] if found else None, stats["explored"], stats["solutions"])
