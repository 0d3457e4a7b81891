"""Character tables, rational character-ring bases and restriction matrices.

Tables are computed with Dixon's method: the class-multiplication matrices
are split into common eigenspaces over a prime field F_p with
p = 1 (mod exponent), and each character value is lifted back to an exact
cyclotomic integer from its eigenvalue multiplicities.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, isqrt
from typing import Literal, Optional, Sequence

from .cyclo import CycloNumber
from .groups import FiniteGroup, GroupHom, HomomorphismError

Field = Literal["Q", "C"]
FIELDS = ("Q", "C")


class SchurIndexWarning(UserWarning):
    """The rational model (Galois-orbit sums) may be wrong for this group."""


# -- arithmetic mod p -------------------------------------------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def dixon_prime(order: int, exponent: int) -> int:
    """Smallest prime p = 1 (mod exponent) with p > 2*sqrt(order)."""
    p = exponent + 1
    while not (_is_prime(p) and p * p > 4 * order):
        p += exponent
    return p


def primitive_root(p: int) -> int:
    factors = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    return 1


def _rref_mod(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    A = [[x % p for x in r] for r in rows]
    if not A:
        return [], []
    n = len(A[0])
    pivots = []
    r = 0
    for j in range(n):
        k = next((i for i in range(r, len(A)) if A[i][j]), None)
        if k is None:
            continue
        A[r], A[k] = A[k], A[r]
        inv = pow(A[r][j], -1, p)
        A[r] = [x * inv % p for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][j]:
                c = A[i][j]
                A[i] = [(x - c * y) % p for x, y in zip(A[i], A[r])]
        pivots.append(j)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def _nullspace_mod(M: list[list[int]], p: int) -> list[list[int]]:
    """Basis of {v : M v = 0} over F_p."""
    n = len(M[0])
    R, pivots = _rref_mod(M, p)
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, pj in zip(R, pivots):
            v[pj] = -row[f] % p
        basis.append(v)
    return basis


def _charpoly_mod(A: list[list[int]], p: int) -> list[int]:
    """Characteristic polynomial (lowest degree first) via Hessenberg reduction."""
    n = len(A)
    H = [[x % p for x in r] for r in A]
    for j in range(n - 2):
        i = next((i for i in range(j + 1, n) if H[i][j]), None)
        if i is None:
            continue
        if i != j + 1:
            H[i], H[j + 1] = H[j + 1], H[i]
            for row in H:
                row[i], row[j + 1] = row[j + 1], row[i]
        inv = pow(H[j + 1][j], -1, p)
        for k in range(j + 2, n):
            u = H[k][j] * inv % p
            if u:
                H[k] = [(x - u * y) % p for x, y in zip(H[k], H[j + 1])]
                for row in H:
                    row[j + 1] = (row[j + 1] + u * row[k]) % p
    polys = [[1]]
    for k in range(1, n + 1):
        prev = polys[k - 1]
        cur = [0] + prev  # x * prev
        h = H[k - 1][k - 1]
        for t, c in enumerate(prev):
            cur[t] = (cur[t] - h * c) % p
        t_acc = 1
        for i in range(1, k):
            t_acc = t_acc * H[k - i][k - i - 1] % p
            coef = t_acc * H[k - i - 1][k - 1] % p
            if coef:
                for t, c in enumerate(polys[k - i - 1]):
                    cur[t] = (cur[t] - coef * c) % p
        polys.append(cur)
    return polys[n]


def _roots_mod(poly: list[int], p: int) -> list[int]:
    roots = []
    for x in range(p):
        acc = 0
        for c in reversed(poly):
            acc = (acc * x + c) % p
        if acc == 0:
            roots.append(x)
    return roots


# -- character tables -------------------------------------------------------


@dataclass(eq=False)
class CharacterTable:
    group: FiniteGroup
    conductor: int
    chars: list[list[CycloNumber]]
    degrees: list[int]

    @property
    def classes(self):
        return self.group.classes

    def __len__(self) -> int:
        return len(self.chars)

    def value(self, i: int, g: int) -> CycloNumber:
        return self.chars[i][self.group.classes.class_of[g]]

    @cached_property
    def _conj_chars(self) -> list[list[CycloNumber]]:
        return [[v.conj() for v in row] for row in self.chars]

    def inner(self, f: Sequence[CycloNumber], h: Sequence[CycloNumber]) -> Fraction:
        """<f, h> = (1/|G|) sum_g f(g) conj(h(g)) for class functions given per class."""
        total = CycloNumber.zero(self.conductor)
        for size, a, b in zip(self.classes.sizes, f, h):
            total = total + a * b.conj() * size
        return total.to_rational() / self.group.order

    def decompose(self, values: Sequence[CycloNumber]) -> list[int]:
        """Integer coordinates of a virtual character over the irreducibles."""
        n = self.group.order
        out = []
        for cj in self._conj_chars:
            total = CycloNumber.zero(self.conductor)
            for size, a, b in zip(self.classes.sizes, values, cj):
                total = total + a * b * size
            q = total.to_rational() / n
            if q.denominator != 1:
                raise ValueError("class function is not a virtual character")
            out.append(q.numerator)
        return out

    def values_of(self, coords: Sequence[int]) -> list[CycloNumber]:
        out = []
        for c in range(len(self.chars)):
            v = CycloNumber.zero(self.conductor)
            for a, row in zip(coords, self.chars):
                if a:
                    v = v + row[c] * a
            out.append(v)
        return out

    @cached_property
    def _row_index(self) -> dict[tuple, int]:
        return {tuple(v.key() for v in row): i for i, row in enumerate(self.chars)}

    def find_row(self, values: Sequence[CycloNumber]) -> Optional[int]:
        return self._row_index.get(tuple(v.embed(self.conductor).key() for v in values))

    def precompose_perm(self, images: Sequence[int]) -> list[int]:
        """Row permutation chi -> chi o a for an automorphism given by element images."""
        cls = self.classes
        perm = []
        for row in self.chars:
            vals = [row[cls.class_of[images[rep]]] for rep in cls.representatives]
            j = self.find_row(vals)
            if j is None:
                raise HomomorphismError("map does not permute the irreducible characters")
            perm.append(j)
        return perm

    def galois_perm(self, k: int) -> list[int]:
        """Row permutation induced by zeta -> zeta^k, computed as chi -> chi o (x -> x^k)."""
        G = self.group
        return self.precompose_perm([G.power(x, k) for x in range(G.order)])

    @cached_property
    def galois_orbits(self) -> list[list[int]]:
        e = self.conductor
        seen: dict[int, int] = {}
        orbits: list[list[int]] = []
        perms = [self.galois_perm(k) for k in range(1, e + 1) if gcd(k, e) == 1]
        for i in range(len(self.chars)):
            if i in seen:
                continue
            orbit = sorted({perm[i] for perm in perms})
            for j in orbit:
                seen[j] = len(orbits)
            orbits.append(orbit)
        return orbits

    @cached_property
    def tensor(self) -> list[list[list[int]]]:
        """N[a][b] = coordinates of chi_a * chi_b over the irreducibles."""
        r = len(self.chars)
        N = [[None] * r for _ in range(r)]
        for a in range(r):
            for b in range(a, r):
                prod = [x * y for x, y in zip(self.chars[a], self.chars[b])]
                j = self.find_row(prod)
                if j is not None:
                    coords = [0] * r
                    coords[j] = 1
                else:
                    coords = self.decompose(prod)
                N[a][b] = N[b][a] = coords
        return N

    def check_orthogonality(self) -> None:
        r = len(self.chars)
        for i in range(r):
            for j in range(r):
                if self.inner(self.chars[i], self.chars[j]) != int(i == j):
                    raise AssertionError(f"row orthogonality fails at ({i}, {j})")
        cls = self.classes
        for a in range(r):
            for b in range(r):
                s = CycloNumber.zero(self.conductor)
                for row in self.chars:
                    s = s + row[a] * row[b].conj()
                expected = Fraction(self.group.order, cls.sizes[a]) if a == b else 0
                if s != expected:
                    raise AssertionError(f"column orthogonality fails at ({a}, {b})")
        if sum(d * d for d in self.degrees) != self.group.order:
            raise AssertionError("sum of squared degrees differs from the group order")
        if any(v != 1 for v in self.chars[0]):
            raise AssertionError("first row is not the trivial character")

    def to_dict(self) -> dict:
        return {
            "conductor": self.conductor,
            "class_representatives": list(self.classes.representatives),
            "class_sizes": list(self.classes.sizes),
            "degrees": list(self.degrees),
            "chars": [[v.to_json() for v in row] for row in self.chars],
        }

    def format(self) -> str:
        cells = [[repr(v) for v in row] for row in self.chars]
        head = [f"c{i}(o{self.group.element_orders[r]})" for i, r in enumerate(self.classes.representatives)]
        widths = [max(len(head[c]), *(len(row[c]) for row in cells)) for c in range(len(head))]
        lines = ["      " + "  ".join(h.rjust(w) for h, w in zip(head, widths))]
        lines.append("size  " + "  ".join(str(s).rjust(w) for s, w in zip(self.classes.sizes, widths)))
        for i, row in enumerate(cells):
            lines.append(f"X{i:<4} " + "  ".join(v.rjust(w) for v, w in zip(row, widths)))
        return "\n".join(lines)


_TABLE_CACHE: dict[int, CharacterTable] = {}


def character_table(G: FiniteGroup) -> CharacterTable:
    """Exact complex character table (cached per group object)."""
    cached = _TABLE_CACHE.get(id(G))
    if cached is not None and cached.group is G:
        return cached
    table = _dixon(G)
    _TABLE_CACHE[id(G)] = table
    return table


def _dixon(G: FiniteGroup) -> CharacterTable:
    cls = G.classes
    r = len(cls)
    n = G.order
    e = G.exponent
    p = dixon_prime(n, e)
    w = pow(primitive_root(p), (p - 1) // e, p)

    members = [cls.members(i) for i in range(r)]
    # class matrices: M[i][j][k] = #{x in C_i : x^-1 z_k in C_j}
    mats = []
    for i in range(r):
        M = [[0] * r for _ in range(r)]
        for k in range(r):
            z = cls.representatives[k]
            for x in members[i]:
                M[cls.class_of[G.mul(G.inv(x), z)]][k] += 1
        mats.append(M)

    spaces = [[[int(a == b) for b in range(r)] for a in range(r)]]
    for i in range(1, r):
        if len(spaces) == r:
            break
        M = mats[i]
        new_spaces = []
        for B in spaces:
            if len(B) == 1:
                new_spaces.append(B)
                continue
            B, piv = _rref_mod(B, p)
            d = len(B)
            A = [[0] * d for _ in range(d)]
            for l, v in enumerate(B):
                Mv = [sum(M[j][k] * v[k] for k in range(r)) % p for j in range(r)]
                for m in range(d):
                    A[m][l] = Mv[piv[m]]
            pieces = []
            for lam in _roots_mod(_charpoly_mod(A, p), p):
                shifted = [[(A[a][b] - (lam if a == b else 0)) % p for b in range(d)] for a in range(d)]
                us = _nullspace_mod(shifted, p)
                vecs = [[sum(u[m] * B[m][t] for m in range(d)) % p for t in range(r)] for u in us]
                pieces.append(vecs)
            if sum(len(x) for x in pieces) != d:
                raise ArithmeticError("class matrix not diagonalizable mod p")
            new_spaces.extend(pieces)
        spaces = new_spaces
    if len(spaces) != r:
        raise ArithmeticError("failed to split the class algebra")

    inv_class = [cls.class_of[G.inv(x)] for x in cls.representatives]
    sizes = cls.sizes
    chars, degrees = [], []
    for (v,) in spaces:
        s = pow(v[0], -1, p)
        omega = [x * s % p for x in v]
        denom = sum(omega[k] * omega[inv_class[k]] * pow(sizes[k], -1, p) for k in range(r)) % p
        d2 = n * pow(denom, -1, p) % p
        deg = next(d for d in range(1, isqrt(n) + 1) if (d * d - d2) % p == 0)
        chi_mod = [deg * omega[k] * pow(sizes[k], -1, p) % p for k in range(r)]
        row = []
        for k in range(r):
            g = cls.representatives[k]
            o = G.element_orders[g]
            z = pow(w, e // o, p)
            vals = [chi_mod[cls.class_of[G.power(g, j)]] for j in range(o)]
            inv_o = pow(o, -1, p)
            coeffs = [0] * e
            for t in range(o):
                m = sum(vals[j] * pow(z, (-j * t) % o, p) for j in range(o)) * inv_o % p
                if m > deg:
                    raise ArithmeticError("eigenvalue multiplicity out of range")
                coeffs[t * (e // o)] += m
            row.append(CycloNumber(e, coeffs))
        chars.append(row)
        degrees.append(deg)

    order = sorted(
        range(r),
        key=lambda i: (
            degrees[i],
            0 if all(v == 1 for v in chars[i]) else 1,
            tuple(v.key() for v in chars[i]),
        ),
    )
    return CharacterTable(G, e, [chars[i] for i in order], [degrees[i] for i in order])


# -- representation-ring bases ----------------------------------------------


@dataclass(eq=False)
class RepRingBasis:
    """Distinguished Z-basis of G(K[H]) as integer combinations of irreducibles."""

    table: CharacterTable
    field: Field
    orbits: list[list[int]]

    @property
    def group(self) -> FiniteGroup:
        return self.table.group

    @property
    def rank(self) -> int:
        return len(self.orbits)

    @property
    def basis_chars(self) -> list[list[int]]:
        return [self.expand(_unit(self.rank, i)) for i in range(self.rank)]

    def expand(self, coords: Sequence[int]) -> list[int]:
        """Coordinates in this basis -> coordinates over the complex irreducibles."""
        out = [0] * len(self.table)
        for c, orbit in zip(coords, self.orbits):
            for i in orbit:
                out[i] += c
        return out

    def contract(self, ccoords: Sequence[int]) -> list[int]:
        """Inverse of ``expand``; the input must be constant on each orbit."""
        out = []
        for orbit in self.orbits:
            vals = {ccoords[i] for i in orbit}
            if len(vals) != 1:
                raise ValueError("class function is not Galois-stable")
            out.append(vals.pop())
        return out

    @cached_property
    def structure_constants(self) -> list[list[list[int]]]:
        N = self.table.tensor
        r = self.rank
        out = [[None] * r for _ in range(r)]
        for a in range(r):
            for b in range(a, r):
                acc = [0] * len(self.table)
                for i in self.orbits[a]:
                    for j in self.orbits[b]:
                        for t, c in enumerate(N[i][j]):
                            acc[t] += c
                out[a][b] = out[b][a] = self.contract(acc)
        return out

    def mul(self, u: Sequence[int], v: Sequence[int]) -> list[int]:
        S = self.structure_constants
        r = self.rank
        out = [0] * r
        for a in range(r):
            if u[a]:
                for b in range(r):
                    if v[b]:
                        c = u[a] * v[b]
                        for t, x in enumerate(S[a][b]):
                            if x:
                                out[t] += c * x
        return out

    def unit(self) -> list[int]:
        return _unit(self.rank, 0)

    def degree(self, coords: Sequence[int]) -> int:
        return sum(c * self.table.degrees[i] for c, orbit in zip(coords, self.orbits) for i in orbit)

    def regular(self) -> list[int]:
        return self.contract(self.table.degrees)

    def from_values(self, values: Sequence) -> list[int]:
        """Coordinates of a virtual character given by its value on every element."""
        cls = self.table.classes
        per_class = [_as_cyclo(values[rep]) for rep in cls.representatives]
        return self.contract(self.table.decompose(per_class))


def _as_cyclo(x) -> CycloNumber:
    return x if isinstance(x, CycloNumber) else CycloNumber.rational(x)


def _unit(n: int, i: int) -> list[int]:
    v = [0] * n
    v[i] = 1
    return v


def rep_ring_basis(table: CharacterTable, field: Field) -> RepRingBasis:
    if field == "C":
        return RepRingBasis(table, "C", [[i] for i in range(len(table))])
    if field != "Q":
        raise ValueError(f"unknown coefficient field {field!r}")
    return rational_basis(table)


def rational_basis(table: CharacterTable) -> RepRingBasis:
    """Galois-orbit sums of irreducible characters.

    This equals the rational representation ring only when every Schur
    index is 1; nonabelian groups of order divisible by 8 trigger a
    SchurIndexWarning since that is where quaternionic characters first show up.
    """
    G = table.group
    if not G.is_abelian and G.order % 8 == 0:
        warnings.warn(
            f"group of order {G.order} may have Schur index > 1; the rational ring is modelled by orbit sums",
            SchurIndexWarning,
            stacklevel=2,
        )
    return RepRingBasis(table, "Q", [list(o) for o in table.galois_orbits])


# -- restriction and conjugation ----------------------------------------------


@dataclass(eq=False)
class RestrictionMatrix:
    """Integer matrix of res along ``along``: x_small = matrix @ x_big."""

    along: GroupHom
    field: Field
    matrix: list[list[int]]

    def apply(self, coords: Sequence[int]) -> list[int]:
        return [sum(a * b for a, b in zip(row, coords)) for row in self.matrix]


def _restrict_ccoords(f: GroupHom, small: CharacterTable, big: CharacterTable) -> list[list[int]]:
    """Columns: res of each big irreducible, in small irreducible coordinates."""
    H = f.source
    M = big.conductor
    if M % small.conductor:
        M = M * small.conductor // gcd(M, small.conductor)
    cols = []
    for row in big.chars:
        vals = [row[big.classes.class_of[f.images[rep]]].embed(M) for rep in small.classes.representatives]
        cols.append(_decompose_at(small, vals, M))
    return cols


def _decompose_at(table: CharacterTable, values: list[CycloNumber], M: int) -> list[int]:
    n = table.group.order
    out = []
    for row in table.chars:
        total = CycloNumber.zero(M)
        for size, a, b in zip(table.classes.sizes, values, row):
            total = total + a * b.embed(M).conj() * size
        q = total.to_rational() / n
        if q.denominator != 1:
            raise ValueError("restriction produced a non-integral multiplicity")
        out.append(q.numerator)
    return out


def restriction_matrix(f: GroupHom, field: Field, small: Optional[RepRingBasis] = None,
                       big: Optional[RepRingBasis] = None) -> RestrictionMatrix:
    if not f.injective or len(set(f.images)) != f.source.order:
        raise HomomorphismError("restriction needs an injective homomorphism")
    small = small or rep_ring_basis(character_table(f.source), field)
    big = big or rep_ring_basis(character_table(f.target), field)
    ccols = _restrict_ccoords(f, small.table, big.table)
    cols = []
    for j in range(big.rank):
        acc = [0] * len(small.table)
        for i in big.orbits[j]:
            for t, x in enumerate(ccols[i]):
                acc[t] += x
        cols.append(small.contract(acc))
    matrix = [[cols[j][i] for j in range(big.rank)] for i in range(small.rank)]
    return RestrictionMatrix(f, field, matrix)


def conjugation_action(a: GroupHom, field: Field, basis: Optional[RepRingBasis] = None) -> RestrictionMatrix:
    """Matrix of x -> x o a on G(K[H]) for an automorphism a of H."""
    if a.source is not a.target or len(set(a.images)) != a.source.order:
        raise HomomorphismError("conjugation action needs a bijective self-map")
    basis = basis or rep_ring_basis(character_table(a.source), field)
    perm = basis.table.precompose_perm(a.images)
    cols = []
    for j in range(basis.rank):
        acc = [0] * len(basis.table)
        for i in basis.orbits[j]:
            acc[perm[i]] += 1
        cols.append(basis.contract(acc))
    matrix = [[cols[j][i] for j in range(basis.rank)] for i in range(basis.rank)]
    return RestrictionMatrix(a, field, matrix)


def invariants_dim(table: CharacterTable, ccoords: Sequence[int]) -> int:
    """<chi, 1> for a virtual character in complex-irreducible coordinates."""
    return int(ccoords[0])
