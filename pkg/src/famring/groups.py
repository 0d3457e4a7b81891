"""Small finite groups as explicit multiplication tables.

Elements are the integers ``0 .. order-1`` and element 0 is always the
identity.  Every construction is checked exhaustively, which is cheap at
the sizes this package is meant for (order cap 64 by default).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Iterable, Optional, Sequence

DEFAULT_ORDER_CAP = 64


class GroupError(ValueError):
    """Raised for malformed group data."""


class OrderCapExceeded(GroupError):
    pass


class HomomorphismError(GroupError):
    """A map between groups is not a homomorphism (or has the wrong flag)."""

    def __init__(self, message: str, witness: Optional[tuple[int, int]] = None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class GroupConfig:
    order_cap: int = DEFAULT_ORDER_CAP


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    table: tuple[tuple[int, ...], ...]
    labels: Optional[tuple[str, ...]] = None
    name: str = ""
    order_cap: int = field(default=DEFAULT_ORDER_CAP, compare=False, repr=False)

    def __post_init__(self):
        n = len(self.table)
        if n == 0:
            raise GroupError("a group needs at least one element")
        if n > self.order_cap:
            raise OrderCapExceeded(f"group order {n} exceeds cap {self.order_cap}")
        for a, row in enumerate(self.table):
            if len(row) != n:
                raise GroupError(f"row {a} has length {len(row)}, expected {n}")
            for x in row:
                if not 0 <= x < n:
                    raise GroupError(f"entry {x} in row {a} out of range")
        if list(self.table[0]) != list(range(n)) or [r[0] for r in self.table] != list(range(n)):
            raise GroupError("element 0 must be the identity")
        for a in range(n):
            if len(set(self.table[a])) != n:
                raise GroupError(f"row {a} is not a permutation")
        t = self.table
        for a in range(n):
            ta = t[a]
            for b in range(n):
                tab = t[ta[b]]
                tb = t[b]
                for c in range(n):
                    if tab[c] != ta[tb[c]]:
                        raise GroupError(f"associativity fails for ({a}, {b}, {c})")
        if self.labels is not None and len(self.labels) != n:
            raise GroupError("labels must match the group order")

    # -- basic structure -------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        return tuple(row.index(0) for row in self.table)

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conj(self, g: int, x: int) -> int:
        """Return g x g^-1."""
        return self.table[self.table[g][x]][self.inverses[g]]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverses[a], -k
        result, base = 0, a
        while k:
            if k & 1:
                result = self.table[result][base]
            base = self.table[base][base]
            k >>= 1
        return result

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        orders = []
        for a in range(self.order):
            k, x = 1, a
            while x != 0:
                x = self.table[x][a]
                k += 1
            orders.append(k)
        return tuple(orders)

    @cached_property
    def exponent(self) -> int:
        e = 1
        for o in self.element_orders:
            e = e * o // gcd(e, o)
        return e

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def cyclic_subgroup(self, g: int) -> tuple[int, ...]:
        return tuple(sorted({self.power(g, k) for k in range(self.element_orders[g])}))

    def generated_subgroup(self, gens: Iterable[int]) -> tuple[int, ...]:
        elems = {0}
        frontier = [0]
        gens = [g for g in gens if g != 0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.table[x][g]
                    if y not in elems:
                        elems.add(y)
                        nxt.append(y)
            frontier = nxt
        return tuple(sorted(elems))

    def conjugate_set(self, g: int, subset: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted(self.conj(g, x) for x in subset))

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name or 'order ' + str(self.order)})"

    # -- derived data ----------------------------------------------------

    @cached_property
    def classes(self) -> "ConjClasses":
        return conjugacy_classes(self)

    @cached_property
    def cyclic_classes(self) -> list[tuple[int, ...]]:
        return cyclic_subgroup_classes(self)

    @cached_property
    def cyclic_class_of(self) -> tuple[int, ...]:
        """Index into ``cyclic_classes`` of the class of <g>, for each g."""
        lookup = {}
        for i, rep in enumerate(self.cyclic_classes):
            for g in range(self.order):
                lookup.setdefault(self.conjugate_set(g, rep), i)
        return tuple(lookup[self.cyclic_subgroup(g)] for g in range(self.order))

    def to_dict(self) -> dict:
        return {"table": [list(r) for r in self.table]}


@dataclass(frozen=True)
class ConjClasses:
    class_of: tuple[int, ...]
    representatives: tuple[int, ...]
    sizes: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.representatives)

    def members(self, i: int) -> list[int]:
        return [g for g, c in enumerate(self.class_of) if c == i]


def conjugacy_classes(G: FiniteGroup) -> ConjClasses:
    """Conjugacy classes ordered by element order, then by smallest member."""
    seen: dict[int, frozenset] = {}
    orbits = []
    for x in range(G.order):
        if x in seen:
            continue
        orbit = frozenset(G.conj(g, x) for g in range(G.order))
        for y in orbit:
            seen[y] = orbit
        orbits.append(orbit)
    orbits.sort(key=lambda o: (G.element_orders[min(o)], min(o)))
    class_of = [0] * G.order
    for i, orbit in enumerate(orbits):
        for y in orbit:
            class_of[y] = i
    return ConjClasses(
        class_of=tuple(class_of),
        representatives=tuple(min(o) for o in orbits),
        sizes=tuple(len(o) for o in orbits),
    )


def _fuse_subgroups(G: FiniteGroup, subgroups: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    reps = set()
    done = set()
    for S in subgroups:
        if S in done:
            continue
        orbit = {G.conjugate_set(g, S) for g in range(G.order)}
        done |= orbit
        reps.add(min(orbit))
    return sorted(reps, key=lambda S: (len(S), S))


def cyclic_subgroup_classes(G: FiniteGroup) -> list[tuple[int, ...]]:
    """One cyclic subgroup per conjugacy class, ordered by (order, elements)."""
    return _fuse_subgroups(G, {G.cyclic_subgroup(g) for g in range(G.order)})


def all_subgroups(G: FiniteGroup) -> list[tuple[int, ...]]:
    """All subgroups up to conjugacy, grown from the trivial group one generator at a time."""
    found = {(0,)}
    frontier = [(0,)]
    while frontier:
        nxt = []
        for S in frontier:
            members = set(S)
            for g in range(G.order):
                if g in members:
                    continue
                T = G.generated_subgroup(S + (g,))
                if T not in found:
                    found.add(T)
                    nxt.append(T)
        frontier = nxt
    return _fuse_subgroups(G, found)


# -- constructors -----------------------------------------------------------


def make_cyclic(n: int, *, order_cap: int = DEFAULT_ORDER_CAP, name: str = "") -> FiniteGroup:
    if n < 1:
        raise GroupError(f"cyclic group order must be positive, got {n}")
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteGroup(table, name=name or f"C{n}", order_cap=order_cap)


def perm_from_cycles(cycles: Sequence[Sequence[int]], degree: int, *, one_based: bool = True) -> tuple[int, ...]:
    """Build an image list from cycle notation, e.g. ``[[1, 2], [3, 4]]``."""
    img = list(range(degree))
    shift = 1 if one_based else 0
    for cyc in cycles:
        pts = [c - shift for c in cyc]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a] = b
    return tuple(img)


def make_from_permutations(
    generators: Sequence[Sequence[int]],
    *,
    degree: Optional[int] = None,
    order_cap: int = DEFAULT_ORDER_CAP,
    name: str = "",
) -> FiniteGroup:
    """Closure of permutations (given as 0-based image lists) under composition.

    The product ``a*b`` applies ``b`` first.  Elements are numbered in
    breadth-first order from the identity, so the numbering is reproducible.
    """
    gens = [tuple(g) for g in generators]
    if degree is None:
        degree = len(gens[0]) if gens else 1
    for g in gens:
        if len(g) != degree or sorted(g) != list(range(degree)):
            raise GroupError(f"{list(g)} is not a permutation of {degree} points")
    ident = tuple(range(degree))
    elems = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[x[i]] for i in range(degree))
                if y not in index:
                    index[y] = len(elems)
                    elems.append(y)
                    nxt.append(y)
                    if len(elems) > order_cap:
                        raise OrderCapExceeded(f"permutation group exceeds order cap {order_cap}")
        frontier = nxt
    table = tuple(
        tuple(index[tuple(a[b[i]] for i in range(degree))] for b in elems) for a in elems
    )
    labels = tuple(str(list(p)) for p in elems)
    return FiniteGroup(table, labels=labels, name=name, order_cap=order_cap)


def make_from_table(table: Sequence[Sequence[int]], *, order_cap: int = DEFAULT_ORDER_CAP, name: str = "") -> FiniteGroup:
    return FiniteGroup(tuple(tuple(r) for r in table), name=name, order_cap=order_cap)


def direct_product(G: FiniteGroup, H: FiniteGroup, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    n, m = G.order, H.order
    table = tuple(
        tuple(G.table[a // m][b // m] * m + H.table[a % m][b % m] for b in range(n * m))
        for a in range(n * m)
    )
    return FiniteGroup(table, name=f"{G.name}x{H.name}", order_cap=order_cap)


def trivial_group() -> FiniteGroup:
    return make_cyclic(1)


# -- homomorphisms ----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    images: tuple[int, ...]
    injective: bool = True

    def __call__(self, a: int) -> int:
        return self.images[a]

    @property
    def is_bijective(self) -> bool:
        return self.source is self.target and len(set(self.images)) == self.source.order


def check_hom(
    source: FiniteGroup,
    target: FiniteGroup,
    images: Sequence[int],
    injective: Optional[bool] = True,
) -> GroupHom:
    """Validate ``images`` as a homomorphism and return it.

    ``injective=None`` means "whatever the map is"; otherwise the flag has to
    agree with the map.
    """
    images = tuple(int(x) for x in images)
    if len(images) != source.order:
        raise HomomorphismError(f"map has {len(images)} entries, source has order {source.order}")
    for x in images:
        if not 0 <= x < target.order:
            raise HomomorphismError(f"image {x} outside target of order {target.order}")
    ts, tt = source.table, target.table
    for a in range(source.order):
        ia = images[a]
        for b in range(source.order):
            if images[ts[a][b]] != tt[ia][images[b]]:
                raise HomomorphismError(
                    f"f({a}*{b}) != f({a})*f({b})", witness=(a, b)
                )
    actual = len(set(images)) == source.order
    if injective is None:
        injective = actual
    elif injective != actual:
        raise HomomorphismError(
            f"map is {'injective' if actual else 'not injective'} but flagged otherwise"
        )
    return GroupHom(source, target, images, injective)


def identity_hom(G: FiniteGroup) -> GroupHom:
    return GroupHom(G, G, tuple(range(G.order)), True)


def compose_hom(f: GroupHom, g: GroupHom) -> GroupHom:
    """Return f o g (apply g first)."""
    if g.target is not f.source:
        raise HomomorphismError("composition undefined: target of g is not the source of f")
    return GroupHom(g.source, f.target, tuple(f.images[x] for x in g.images), f.injective and g.injective)


def check_automorphism(G: FiniteGroup, images: Sequence[int]) -> GroupHom:
    if len(set(images)) != G.order or len(images) != G.order:
        raise HomomorphismError("automorphism must be a bijection of the group")
    return check_hom(G, G, images, injective=True)


def inner_automorphism(G: FiniteGroup, g: int) -> GroupHom:
    return GroupHom(G, G, tuple(G.conj(g, x) for x in range(G.order)), True)


def power_automorphism(G: FiniteGroup, k: int) -> GroupHom:
    """x -> x^k, an automorphism when G is abelian and gcd(k, exponent) = 1."""
    return check_automorphism(G, [G.power(x, k) for x in range(G.order)])


def find_embeddings(H: FiniteGroup, G: FiniteGroup, limit: Optional[int] = None) -> list[GroupHom]:
    """Brute-force injective homomorphisms H -> G (small groups only)."""
    gens = _small_generating_set(H)
    words = _words_for(H, gens)
    out = []
    candidates = [
        [x for x in range(G.order) if G.element_orders[x] == H.element_orders[g]] for g in gens
    ]
    for choice in itertools.product(*candidates):
        images = [0] * H.order
        for h, word in words.items():
            x = 0
            for gi in word:
                x = G.table[x][choice[gi]]
            images[h] = x
        try:
            out.append(check_hom(H, G, images, injective=True))
        except HomomorphismError:
            continue
        if limit is not None and len(out) >= limit:
            break
    return out


def _small_generating_set(H: FiniteGroup) -> list[int]:
    gens: list[int] = []
    current = (0,)
    while len(current) < H.order:
        best = max(
            (g for g in range(H.order) if g not in current),
            key=lambda g: (len(H.generated_subgroup(current + (g,))), -g),
        )
        gens.append(best)
        current = H.generated_subgroup(tuple(gens))
    return gens


def _words_for(H: FiniteGroup, gens: list[int]) -> dict[int, tuple[int, ...]]:
    words = {0: ()}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for i, g in enumerate(gens):
                y = H.table[x][g]
                if y not in words:
                    words[y] = words[x] + (i,)
                    nxt.append(y)
        frontier = nxt
    return words
