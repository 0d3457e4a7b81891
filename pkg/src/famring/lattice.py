"""Exact integer linear algebra: Hermite normal form, kernels, membership.

Matrices are plain lists of integer rows.  Nothing here uses floating
point; Python integers absorb any coefficient growth at the sizes we see
(a few dozen rows and columns).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

Matrix = list[list[int]]


def _copy(A: Sequence[Sequence[int]]) -> Matrix:
    return [[int(x) for x in row] for row in A]


def hnf(rows: Sequence[Sequence[int]], ncols: Optional[int] = None) -> Matrix:
    """Row Hermite normal form; zero rows are dropped.

    Pivot columns strictly increase, pivots are positive and every entry
    above a pivot lies in ``[0, pivot)``.
    """
    A = _copy(rows)
    if ncols is None:
        ncols = len(A[0]) if A else 0
    r = 0
    m = len(A)
    for j in range(ncols):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if A[i][j] != 0]
            if not nz:
                break
            k = min(nz, key=lambda i: abs(A[i][j]))
            A[r], A[k] = A[k], A[r]
            piv = A[r][j]
            done = True
            for i in range(r + 1, m):
                if A[i][j]:
                    q = A[i][j] // piv
                    if q:
                        Ai, Ar = A[i], A[r]
                        for t in range(j, ncols):
                            Ai[t] -= q * Ar[t]
                    if A[i][j]:
                        done = False
            if done:
                break
        if r < m and A[r][j] != 0:
            if A[r][j] < 0:
                A[r] = [-x for x in A[r]]
            piv = A[r][j]
            for i in range(r):
                q = A[i][j] // piv
                if q:
                    Ai, Ar = A[i], A[r]
                    for t in range(j, ncols):
                        Ai[t] -= q * Ar[t]
            r += 1
    return [row for row in A[:r]]


def rational_rank(A: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    M = _copy(A)
    if not M:
        return 0
    m, n = len(M), len(M[0])
    rank, prev = 0, 1
    for j in range(n):
        piv = next((i for i in range(rank, m) if M[i][j] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        p = M[rank][j]
        for i in range(rank + 1, m):
            a = M[i][j]
            Mi, Mr = M[i], M[rank]
            for t in range(j, n):
                Mi[t] = (p * Mi[t] - a * Mr[t]) // prev
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def transpose(A: Sequence[Sequence[int]], ncols: Optional[int] = None) -> Matrix:
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


@dataclass(frozen=True)
class IntLattice:
    """A sublattice of Z^n given by its row-HNF basis."""

    dim: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def from_generators(cls, rows: Sequence[Sequence[int]], dim: int) -> "IntLattice":
        for row in rows:
            if len(row) != dim:
                raise ValueError(f"generator of length {len(row)} in ambient dimension {dim}")
        return cls(dim, tuple(tuple(r) for r in hnf(rows, dim)))

    @classmethod
    def full(cls, dim: int) -> "IntLattice":
        return cls(dim, tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim)))

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(row) if x) for row in self.basis)

    def coordinates(self, v: Sequence[int]) -> Optional[list[int]]:
        """Integer coordinates of ``v`` in the basis, or None if v is not in the lattice."""
        if len(v) != self.dim:
            raise ValueError(f"vector of length {len(v)} in ambient dimension {self.dim}")
        w = [int(x) for x in v]
        coords = []
        for row, p in zip(self.basis, self.pivots):
            if any(w[:p]):
                return None
            q, rem = divmod(w[p], row[p])
            if rem:
                return None
            coords.append(q)
            if q:
                for t in range(p, self.dim):
                    w[t] -= q * row[t]
        if any(w):
            return None
        return coords

    def __contains__(self, v) -> bool:
        return self.coordinates(v) is not None

    def combine(self, coords: Sequence[int]) -> list[int]:
        out = [0] * self.dim
        for c, row in zip(coords, self.basis):
            if c:
                for t, x in enumerate(row):
                    out[t] += c * x
        return out

    def join(self, rows: Sequence[Sequence[int]]) -> "IntLattice":
        return IntLattice.from_generators(list(self.basis) + [list(r) for r in rows], self.dim)

    def is_full(self) -> bool:
        return self.rank == self.dim and all(self.basis[i][i] == 1 for i in range(self.dim))

    def index(self) -> Optional[int]:
        """Index in Z^dim, or None when the rank is deficient."""
        if self.rank < self.dim:
            return None
        out = 1
        for i in range(self.dim):
            out *= self.basis[i][i]
        return out


def hnf_kernel(A: Sequence[Sequence[int]], ncols: int) -> IntLattice:
    """Saturated integer kernel {x in Z^ncols : A x = 0}, HNF basis.

    Row-reduces [A^T | I]; rows whose A^T part vanishes carry a basis of the
    kernel, and since the transformation is unimodular that basis spans the
    whole integer kernel rather than a finite-index sublattice.
    """
    m = len(A)
    aug = []
    for j in range(ncols):
        aug.append([int(A[i][j]) for i in range(m)] + [int(j == k) for k in range(ncols)])
    H = hnf(aug, m + ncols)
    kernel_rows = [row[m:] for row in H if not any(row[:m])]
    return IntLattice(ncols, tuple(tuple(r) for r in hnf(kernel_rows, ncols)))


def elementary_divisors(A: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal of the Smith normal form, each dividing the next."""
    M = _copy(A)
    if not M or not M[0]:
        return []
    m, n = len(M), len(M[0])
    divisors = []
    t = 0
    while t < min(m, n):
        nz = [(abs(M[i][j]), i, j) for i in range(t, m) for j in range(t, n) if M[i][j]]
        if not nz:
            break
        _, i0, j0 = min(nz)
        M[t], M[i0] = M[i0], M[t]
        for row in M:
            row[t], row[j0] = row[j0], row[t]
        while True:
            p = M[t][t]
            dirty = False
            for i in range(t + 1, m):
                q = M[i][t] // p
                if q:
                    for k in range(t, n):
                        M[i][k] -= q * M[t][k]
                if M[i][t]:
                    dirty = True
            for j in range(t + 1, n):
                q = M[t][j] // p
                if q:
                    for k in range(t, m):
                        M[k][j] -= q * M[k][t]
                if M[t][j]:
                    dirty = True
            if not dirty:
                # pivot must divide the rest of the block
                bad = next(
                    ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if M[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                i, _ = bad
                for k in range(t, n):
                    M[t][k] += M[i][k]
                continue
            nz = [(abs(M[i][t]), i, t) for i in range(t, m) if M[i][t]]
            nz += [(abs(M[t][j]), t, j) for j in range(t, n) if M[t][j]]
            _, i0, j0 = min(nz)
            M[t], M[i0] = M[i0], M[t]
            for row in M:
                row[t], row[j0] = row[j0], row[t]
        divisors.append(abs(M[t][t]))
        t += 1
    return divisors
