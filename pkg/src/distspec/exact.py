"""Exact linear algebra over the integers and rationals.

These routines are the ground-truth side of every numeric cross-check:
fraction-free Bareiss determinants, inertia by rational symmetric congruence,
minimal polynomial degree by exact rank of flattened matrix powers, and
equitable quotient matrices.  No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Partition = Sequence[Sequence[int]]


@dataclass(frozen=True)
class Inertia:
    positive: int
    zero: int
    negative: int

    @property
    def n(self) -> int:
        return self.positive + self.zero + self.negative

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.positive, self.zero, self.negative)


def _check_square(mat) -> int:
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise ValueError("matrix must be square")
    return n


def _check_symmetric(mat) -> None:
    n = len(mat)
    for i in range(n):
        for j in range(i + 1, n):
            if mat[i][j] != mat[j][i]:
                raise ValueError(f"matrix not symmetric at ({i}, {j})")


def det_exact(mat: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free Bareiss elimination.

    All intermediate divisions are exact, so the arithmetic stays in the
    integers no matter how large the entries grow.
    """
    n = _check_square(mat)
    for row in mat:
        for x in row:
            if not isinstance(x, int):
                raise ValueError("integer entries required")
    a = [list(row) for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def inertia_exact(mat: Sequence[Sequence]) -> Inertia:
    """Inertia (positive, zero, negative) of a symmetric rational matrix.

    Performs a symmetric congruence reduction with exact rational arithmetic,
    using a 1x1 pivot whenever some diagonal entry of the active block is
    nonzero and a 2x2 hyperbolic pivot otherwise.  Congruence preserves
    inertia, so the counts are exact.
    """
    n = _check_square(mat)
    _check_symmetric(mat)
    a = {(i, j): Fraction(mat[i][j]) for i in range(n) for j in range(i, n)
         if mat[i][j] != 0}

    def get(i: int, j: int) -> Fraction:
        if i > j:
            i, j = j, i
        return a.get((i, j), Fraction(0))

    def put(i: int, j: int, v: Fraction) -> None:
        if i > j:
            i, j = j, i
        if v:
            a[(i, j)] = v
        else:
            a.pop((i, j), None)

    active = list(range(n))
    pos = neg = zero = 0
    while active:
        pivot_idx = None
        best = None
        for idx, i in enumerate(active):
            v = get(i, i)
            if v != 0 and (best is None or abs(v) > best):
                best, pivot_idx = abs(v), idx
        if pivot_idx is not None:
            i = active.pop(pivot_idx)
            piv = get(i, i)
            if piv > 0:
                pos += 1
            else:
                neg += 1
            col = {j: get(i, j) for j in active if get(i, j) != 0}
            for j in col:
                cj = col[j]
                for k in active:
                    if k < j:
                        continue
                    ck = col.get(k, Fraction(0))
                    if ck:
                        put(j, k, get(j, k) - cj * ck / piv)
            for j in active:
                put(i, j, Fraction(0))
            continue
        # all active diagonal entries are zero; look for an off-diagonal pivot
        pair = None
        for x in range(len(active)):
            for y in range(x + 1, len(active)):
                if get(active[x], active[y]) != 0:
                    pair = (x, y)
                    break
            if pair:
                break
        if pair is None:
            zero += len(active)
            break
        x, y = pair
        i, j = active[y], active[x]
        active = [v for v in active if v not in (i, j)]
        # block [[0, c], [c, 0]] contributes one eigenvalue of each sign
        pos += 1
        neg += 1
        c = get(i, j)
        coli = {k: get(i, k) for k in active if get(i, k) != 0}
        colj = {k: get(j, k) for k in active if get(j, k) != 0}
        for k in active:
            bik = coli.get(k, Fraction(0))
            bjk = colj.get(k, Fraction(0))
            if not (bik or bjk):
                continue
            for l in active:
                if l < k:
                    continue
                bil = coli.get(l, Fraction(0))
                bjl = colj.get(l, Fraction(0))
                delta = (bik * bjl + bjk * bil) / c
                if delta:
                    put(k, l, get(k, l) - delta)
        for k in active:
            put(i, k, Fraction(0))
            put(j, k, Fraction(0))
    return Inertia(pos, zero, neg)


def rank_exact(mat: Sequence[Sequence]) -> int:
    """Rank of a rational matrix by Gaussian elimination over Fraction."""
    rows = [[Fraction(x) for x in row] for row in mat]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    col = 0
    while rank < len(rows) and col < ncols:
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][col] != 0:
                piv = r
                break
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        inv = 1 / pr[col]
        for r in range(rank + 1, len(rows)):
            f = rows[r][col]
            if f:
                f *= inv
                rr = rows[r]
                for c in range(col, ncols):
                    rr[c] -= f * pr[c]
        rank += 1
        col += 1
    return rank


_DISTINCT_CAP = 256


def distinct_eigenvalue_count(mat: Sequence[Sequence[int]]) -> int:
    """Number of distinct eigenvalues of a symmetric integer matrix.

    Equals the degree of the minimal polynomial, found as the first k for
    which I, M, ..., M^k become linearly dependent.  Dependence is tested
    exactly on flattened upper triangles with big integer arithmetic, so the
    answer carries no numeric tolerance.  Guarded at order 256; the search
    scales with (distinct count) x n^3.
    """
    n = _check_square(mat)
    _check_symmetric(mat)
    if n > _DISTINCT_CAP:
        raise ValueError(f"order {n} exceeds the exact search cap {_DISTINCT_CAP}")
    idx = [(i, j) for i in range(n) for j in range(i, n)]

    def flatten(p):
        return [p[i][j] for i, j in idx]

    def matmul(p):
        out = [[0] * n for _ in range(n)]
        for i in range(n):
            pi = p[i]
            oi = out[i]
            for k in range(n):
                pik = pi[k]
                if pik:
                    mk = mat[k]
                    for j in range(n):
                        oi[j] += pik * mk[j]
        return out

    power = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    basis: list[tuple[int, list[Fraction]]] = []  # (pivot position, reduced row)
    k = 0
    while True:
        vec = [Fraction(x) for x in flatten(power)]
        for pivot_pos, row in basis:
            f = vec[pivot_pos]
            if f:
                for c in range(pivot_pos, len(vec)):
                    vec[c] -= f * row[c]
        lead = next((c for c, x in enumerate(vec) if x != 0), None)
        if lead is None:
            return k
        inv = 1 / vec[lead]
        vec = [x * inv for x in vec]
        basis.append((lead, vec))
        power = matmul(power)
        k += 1
        if k > n:
            raise AssertionError("minimal polynomial search failed to terminate")


def check_partition(n: int, cells: Partition) -> list[list[int]]:
    """Validate that cells are disjoint, nonempty, and cover 0..n-1."""
    seen: set[int] = set()
    out = []
    for cell in cells:
        cl = list(cell)
        if not cl:
            raise ValueError("empty partition cell")
        for v in cl:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range")
            if v in seen:
                raise ValueError(f"vertex {v} appears in two cells")
            seen.add(v)
        out.append(cl)
    if len(seen) != n:
        missing = next(v for v in range(n) if v not in seen)
        raise ValueError(f"partition misses vertex {missing}")
    return out


def quotient_matrix(mat: Sequence[Sequence], cells: Partition) -> tuple[list[list[Fraction]], bool]:
    """Quotient matrix of a partition plus an exact equitability flag.

    Entry (i, j) is the average over rows in cell i of the row sum across
    cell j; the partition is equitable exactly when those row sums are
    constant within every block, tested with rational arithmetic.
    """
    n = _check_square(mat)
    parts = check_partition(n, cells)
    b = []
    equitable = True
    for ci in parts:
        row = []
        for cj in parts:
            sums = [sum(Fraction(mat[u][v]) for v in cj) for u in ci]
            if any(s != sums[0] for s in sums[1:]):
                equitable = False
            row.append(sum(sums) / len(ci))
        b.append(row)
    return b, equitable
