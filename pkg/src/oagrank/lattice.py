"""Integer sublattices of Z^n: an unordered model used to cross-check ladders.

Everything is exact Python-int arithmetic.  Lattices are stored by their row
Hermite normal form, which is canonical, so ``==`` is set equality.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import INF, is_inf
from .errors import NonDiscreteBlock, NotSublattice, RankMismatch


def _hnf(rows, n, track=False):
    """Row-style Hermite normal form by integer row operations.

    Returns (basis, transform_rows_for_zero) where the second item lists the
    unimodular combinations of the input rows that vanish (kernel) when
    ``track`` is set.
    """
    m = len(rows)
    A = [list(r) for r in rows]
    T = [[int(i == j) for j in range(m)] for i in range(m)] if track else None
    r = 0
    for col in range(n):
        # gcd-reduce column col among rows r..m-1
        while True:
            nz = [i for i in range(r, m) if A[i][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(A[i][col]))
            A[r], A[piv] = A[piv], A[r]
            if track:
                T[r], T[piv] = T[piv], T[r]
            done = True
            for i in range(r + 1, m):
                if A[i][col]:
                    q = A[i][col] // A[r][col]
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
                    if track:
                        T[i] = [a - q * b for a, b in zip(T[i], T[r])]
                    if A[i][col]:
                        done = False
            if done:
                break
        if r < m and A[r][col] != 0:
            if A[r][col] < 0:
                A[r] = [-a for a in A[r]]
                if track:
                    T[r] = [-a for a in T[r]]
            for i in range(r):
                q = A[i][col] // A[r][col]
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
                    if track:
                        T[i] = [a - q * b for a, b in zip(T[i], T[r])]
            r += 1
    basis = [tuple(row) for row in A[:r]]
    kernel = [tuple(row) for row in T[r:]] if track else []
    return basis, kernel


@dataclass(frozen=True)
class IntegerLattice:
    n: int
    basis: tuple

    @classmethod
    def span(cls, n, generators=()):
        for g in generators:
            if len(g) != n:
                raise RankMismatch(f"generator {g} does not live in Z^{n}")
        basis, _ = _hnf([list(g) for g in generators], n)
        return cls(n, tuple(basis))

    @classmethod
    def standard(cls, n):
        return cls.span(n, [[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def rank(self):
        return len(self.basis)

    def pivots(self):
        return [next(j for j, a in enumerate(row) if a) for row in self.basis]

    def coordinates(self, v):
        """Integer coordinates of v in the HNF basis, or None when v is not in the lattice."""
        v = list(v)
        coords = []
        for row, j in zip(self.basis, self.pivots()):
            if v[j] % row[j]:
                return None
            q = v[j] // row[j]
            coords.append(q)
            v = [a - q * b for a, b in zip(v, row)]
        return coords if not any(v) else None

    def __contains__(self, v):
        return self.coordinates(v) is not None

    def scaled(self, k):
        return IntegerLattice.span(self.n, [[k * a for a in row] for row in self.basis])


def _same_rank(a, b):
    if a.n != b.n:
        raise RankMismatch(f"Z^{a.n} vs Z^{b.n}")


def lattice_sum(a, b):
    _same_rank(a, b)
    return IntegerLattice.span(a.n, list(a.basis) + list(b.basis))


def lattice_intersect(a, b):
    _same_rank(a, b)
    if not a.basis or not b.basis:
        return IntegerLattice(a.n, ())
    rows = list(a.basis) + list(b.basis)
    _, kernel = _hnf(rows, a.n, track=True)
    ka = len(a.basis)
    gens = []
    for t in kernel:
        u = t[:ka]
        gens.append([sum(ui * row[j] for ui, row in zip(u, a.basis)) for j in range(a.n)])
    return IntegerLattice.span(a.n, gens)


def _det(M):
    M = [[Fraction(x) for x in row] for row in M]
    k = len(M)
    det = Fraction(1)
    for c in range(k):
        piv = next((r for r in range(c, k) if M[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, k):
            f = M[r][c] / M[c][c]
            if f:
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return det


def lattice_index(a, b):
    """[a : b] for b a sublattice of a; INF when b has smaller rank."""
    _same_rank(a, b)
    coords = []
    for row in b.basis:
        c = a.coordinates(row)
        if c is None:
            raise NotSublattice(f"{row} is not in the larger lattice")
        coords.append(c)
    if b.rank < a.rank:
        return INF
    if a.rank == 0:
        return 1
    return abs(int(_det(coords)))


def embed(g, ladder):
    """Lattice of a ladder subgroup of an all-Z presentation, order forgotten."""
    from .core import Kind, finite_blocks
    blocks = finite_blocks(g)
    if any(b.kind is not Kind.DISCRETE for b in blocks):
        raise NonDiscreteBlock(f"{g} has a non-discrete block")
    n = len(blocks)
    gens = []
    for i, m in enumerate(ladder.moduli):
        if not is_inf(m):
            gens.append([m if j == i else 0 for j in range(n)])
    return IntegerLattice.span(n, gens)
