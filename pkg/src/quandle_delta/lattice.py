"""Exact integer linear algebra: Hermite/Smith normal forms and lattices.

Matrices are lists of rows of Python ints, so there is no overflow to
guard against.  Lattices are subgroups of Z^m stored by their canonical
row Hermite normal form: positive pivots, strictly increasing pivot
columns, entries above a pivot reduced into ``[0, pivot)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

Matrix = list[list[int]]


class LatticeError(ValueError):
    pass


class DimensionMismatch(LatticeError):
    pass


class NotASublattice(LatticeError):
    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__(f"vector {list(self.witness)} of the sublattice is not in the superlattice")


def _as_matrix(rows: Iterable[Sequence[int]]) -> Matrix:
    return [[int(x) for x in r] for r in rows]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    cols = len(b[0]) if b else 0
    bt = list(zip(*b)) if b else [()] * cols
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def det(m: Matrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# --- Hermite normal form --------------------------------------------------

def _hnf_rows(rows: Matrix, ncols: int) -> tuple[Matrix, list[int]]:
    rows = [r for r in rows if any(r)]
    pivots = []
    p = 0
    for col in range(ncols):
        if p >= len(rows):
            break
        while True:
            nz = [r for r in range(p, len(rows)) if rows[r][col]]
            if not nz:
                break
            best = min(nz, key=lambda r: abs(rows[r][col]))
            rows[p], rows[best] = rows[best], rows[p]
            piv = rows[p]
            clean = True
            for r in range(p + 1, len(rows)):
                x = rows[r][col]
                if x:
                    q = x // piv[col]
                    rows[r] = [a - q * b for a, b in zip(rows[r], piv)]
                    if rows[r][col]:
                        clean = False
            if clean:
                break
        if rows[p][col] == 0:
            continue
        if rows[p][col] < 0:
            rows[p] = [-a for a in rows[p]]
        piv = rows[p]
        for r in range(p):
            q = rows[r][col] // piv[col]
            if q:
                rows[r] = [a - q * b for a, b in zip(rows[r], piv)]
        pivots.append(col)
        p += 1
        # drop rows that became zero so the loop bound shrinks
        rows = rows[:p] + [r for r in rows[p:] if any(r)]
    return rows[:p], pivots


def hnf(m: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    """Canonical row HNF of the row span of ``m``; zero rows are dropped."""
    rows = _as_matrix(m)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    return _hnf_rows(rows, ncols)[0]


def is_hnf(m: Matrix) -> bool:
    last = -1
    for t, row in enumerate(m):
        nz = [c for c, x in enumerate(row) if x]
        if not nz or nz[0] <= last or row[nz[0]] <= 0:
            return False
        col = nz[0]
        for r in range(t):
            if not 0 <= m[r][col] < row[col]:
                return False
        last = col
    return True


# --- Smith normal form ----------------------------------------------------

@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == S`` with ``U``, ``V`` unimodular and ``S`` diagonal."""

    U: Matrix
    S: Matrix
    V: Matrix
    A: Matrix

    @property
    def diagonal(self) -> list[int]:
        return [self.S[i][i] for i in range(min(len(self.S), len(self.S[0]) if self.S else 0))]

    @property
    def invariant_factors(self) -> list[int]:
        return [d for d in self.diagonal if d]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def check(self) -> bool:
        d = self.invariant_factors
        return (
            matmul(matmul(self.U, self.A), self.V) == self.S
            and abs(det(self.U)) == 1
            and abs(det(self.V)) == 1
            and all(x > 0 for x in d)
            and all(d[i + 1] % d[i] == 0 for i in range(len(d) - 1))
            and all(
                self.S[i][j] == 0
                for i in range(len(self.S))
                for j in range(len(self.S[0]))
                if i != j
            )
        )


def _row_op(m, dst, src, q):
    """row[dst] -= q * row[src]"""
    m[dst] = [a - q * b for a, b in zip(m[dst], m[src])]


def _col_op(m, dst, src, q):
    """col[dst] -= q * col[src]"""
    for row in m:
        row[dst] -= q * row[src]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def snf(m: Sequence[Sequence[int]], ncols: int | None = None) -> SmithDecomposition:
    """Smith normal form with unimodular witnesses.

    Pivot is the smallest nonzero absolute value in the remaining block;
    once diagonal, pairs violating ``d_i | d_j`` are replaced by
    ``(gcd, lcm)`` through a 2x2 unimodular transform on each side.
    """
    A = _as_matrix(m)
    r = len(A)
    c = len(A[0]) if A else (ncols or 0)
    S = [list(row) for row in A]
    U = identity(r)
    V = identity(c)

    t = 0
    while t < min(r, c):
        block = [(abs(S[i][j]), i, j) for i in range(t, r) for j in range(t, c) if S[i][j]]
        if not block:
            break
        _, i, j = min(block)
        S[t], S[i] = S[i], S[t]
        U[t], U[i] = U[i], U[t]
        _swap_cols(S, t, j)
        _swap_cols(V, t, j)
        while True:
            p = S[t][t]
            for i in range(t + 1, r):
                if S[i][t]:
                    q = S[i][t] // p
                    _row_op(S, i, t, q)
                    _row_op(U, i, t, q)
            for j in range(t + 1, c):
                if S[t][j]:
                    q = S[t][j] // p
                    _col_op(S, j, t, q)
                    _col_op(V, j, t, q)
            rest = [(abs(S[i][t]), i, t) for i in range(t + 1, r) if S[i][t]]
            rest += [(abs(S[t][j]), t, j) for j in range(t + 1, c) if S[t][j]]
            if not rest:
                break
            _, i, j = min(rest)
            if j == t:
                S[t], S[i] = S[i], S[t]
                U[t], U[i] = U[i], U[t]
            else:
                _swap_cols(S, t, j)
                _swap_cols(V, t, j)
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]
        t += 1

    k = t
    for i in range(k):
        for j in range(i + 1, k):
            a, b = S[i][i], S[j][j]
            if b % a == 0:
                continue
            g, x, y = _xgcd(a, b)
            a1, b1 = a // g, b // g
            # [[x, y], [-b1, a1]] . diag(a, b) . [[1, -y*b1], [1, x*a1]] = diag(g, a*b1)
            Ui, Uj = U[i], U[j]
            U[i] = [x * u + y * w for u, w in zip(Ui, Uj)]
            U[j] = [-b1 * u + a1 * w for u, w in zip(Ui, Uj)]
            for row in V:
                vi, vj = row[i], row[j]
                row[i] = vi + vj
                row[j] = -y * b1 * vi + x * a1 * vj
            S[i][i], S[j][j] = g, a * b1
    return SmithDecomposition(U, S, V, A)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with x*a + y*b = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def invariant_factors(m: Sequence[Sequence[int]]) -> list[int]:
    return snf(m).invariant_factors


# --- lattices -------------------------------------------------------------

@dataclass(frozen=True)
class Lattice:
    """Subgroup of Z^dim, held by its canonical HNF basis."""

    dim: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> list[int]:
        return [next(c for c, x in enumerate(row) if x) for row in self.basis]

    def rows(self) -> Matrix:
        return [list(r) for r in self.basis]

    def __contains__(self, v) -> bool:
        return lattice_contains(self, v)

    def __le__(self, other: "Lattice") -> bool:
        _check_dims(self.dim, other.dim)
        return all(lattice_contains(other, row) for row in self.basis)


def _check_dims(a: int, b: int):
    if a != b:
        raise DimensionMismatch(f"ambient dimensions differ: {a} vs {b}")


def lattice_from_generators(dim: int, gens: Iterable[Sequence[int]]) -> Lattice:
    gens = _as_matrix(gens)
    for g in gens:
        if len(g) != dim:
            raise DimensionMismatch(f"generator of length {len(g)} in ambient dimension {dim}")
    return Lattice(dim, tuple(tuple(r) for r in hnf(gens, dim)))


def full_lattice(dim: int) -> Lattice:
    return Lattice(dim, tuple(tuple(r) for r in identity(dim)))


def coordinates(l: Lattice, v: Sequence[int]) -> tuple[list[int], list[int]]:
    """Forward substitution on the pivot columns.

    Returns ``(coeffs, residual)``; ``v`` is in ``l`` iff the residual is
    zero, in which case ``v == sum(coeffs[t] * basis[t])``.  An inexact
    division leaves the residual nonzero at that pivot.
    """
    if len(v) != l.dim:
        raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {l.dim}")
    res = [int(x) for x in v]
    coeffs = []
    for row, col in zip(l.basis, l.pivots):
        q, rem = divmod(res[col], row[col])
        if rem:
            coeffs.append(0)
            return coeffs + [0] * (l.rank - len(coeffs)), res
        coeffs.append(q)
        if q:
            res = [a - q * b for a, b in zip(res, row)]
    return coeffs, res


def lattice_contains(l: Lattice, v: Sequence[int]) -> bool:
    _, res = coordinates(l, v)
    return not any(res)


def lattice_equal(a: Lattice, b: Lattice) -> bool:
    _check_dims(a.dim, b.dim)
    return a.basis == b.basis


@dataclass(frozen=True)
class QuotientReport:
    """Structure of a finitely generated abelian group Z^free_rank + torsion."""

    free_rank: int
    torsion: tuple[int, ...]

    @property
    def order(self):
        """Group order as an int, or the string ``"infinite"``."""
        if self.free_rank:
            return "infinite"
        return math.prod(self.torsion)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def __str__(self):
        parts = [f"Z_{d}" for d in self.torsion] + ["Z"] * self.free_rank
        return " (+) ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {
            "free_rank": self.free_rank,
            "torsion": list(self.torsion),
            "order": self.order,
            "structure": str(self),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "QuotientReport":
        return cls(d["free_rank"], tuple(d["torsion"]))


def quotient_invariants(sup: Lattice, sub: Lattice) -> QuotientReport:
    """Invariant factors of ``sup / sub``; ``sub`` must lie inside ``sup``."""
    _check_dims(sup.dim, sub.dim)
    coords = []
    for row in sub.basis:
        x, res = coordinates(sup, row)
        if any(res):
            raise NotASublattice(row)
        coords.append(x)
    diag = snf(coords, ncols=sup.rank).invariant_factors if coords else []
    torsion = tuple(d for d in diag if d > 1)
    return QuotientReport(sup.rank - sub.rank, torsion)
