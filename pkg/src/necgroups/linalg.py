"""Exact integer linear algebra on Python ints.

Everything here works on arbitrary-precision integers: products of periods
and intermediate Smith normal form entries grow quickly, and a fixed-width
type would silently produce wrong invariant factors.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}")

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values):
        n = len(values)
        return cls(n, n, tuple(values[i] if i == j else 0
                               for i in range(n) for j in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self):
        return [list(self.entries[i * self.cols:(i + 1) * self.cols])
                for i in range(self.rows)]

    def transpose(self):
        return IntMatrix(self.cols, self.rows,
                         tuple(self[i, j] for j in range(self.cols)
                               for i in range(self.rows)))

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        a, b = self.to_rows(), other.to_rows()
        return IntMatrix.from_rows(
            [[sum(a[i][k] * b[k][j] for k in range(self.cols))
              for j in range(other.cols)] for i in range(self.rows)],
            other.cols)


@dataclass(frozen=True)
class SnfResult:
    diagonal: tuple

    @property
    def rank(self):
        return sum(1 for d in self.diagonal if d)

    @property
    def nonunit_factors(self):
        return tuple(d for d in self.diagonal if d > 1)


def invariant_factors_of_diagonal(values):
    """Invariant factors of diag(values) for non-zero values.

    Repeatedly replaces a pair (a, b) by (gcd, lcm); this is the Smith normal
    form of a diagonal matrix.  Units are kept; callers drop them if needed.
    """
    vals = [abs(v) for v in values]
    if any(v == 0 for v in vals):
        raise ValueError("zero entries are not torsion orders")
    n = len(vals)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = vals[i], vals[j]
            g = gcd(a, b)
            vals[i], vals[j] = g, a // g * b
    return vals


def _diagonalize(a, nrows, ncols):
    """Reduce the list-of-lists matrix a in place to a diagonal one."""
    t = 0
    while t < min(nrows, ncols):
        # smallest non-zero entry in the trailing block becomes the pivot
        best = None
        for i in range(t, nrows):
            row = a[i]
            for j in range(t, ncols):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            return
        _, pi, pj = best
        a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, nrows):
                v = a[i][t]
                if v:
                    q = v // p
                    ri, rt = a[i], a[t]
                    for j in range(t, ncols):
                        ri[j] -= q * rt[j]
                    if ri[t]:
                        done = False
            rt = a[t]
            for j in range(t + 1, ncols):
                v = rt[j]
                if v:
                    q = v // p
                    for i in range(t, nrows):
                        a[i][j] -= q * a[i][t]
                    if rt[j]:
                        done = False
            if done:
                break
            # a remainder survived: move the smallest entry of row/column t
            # into the pivot position and repeat
            best = (abs(p), t, t)
            for i in range(t + 1, nrows):
                if a[i][t] and abs(a[i][t]) < best[0]:
                    best = (abs(a[i][t]), i, t)
            for j in range(t + 1, ncols):
                if a[t][j] and abs(a[t][j]) < best[0]:
                    best = (abs(a[t][j]), t, j)
            _, bi, bj = best
            if bi != t:
                a[t], a[bi] = a[bi], a[t]
            if bj != t:
                for row in a:
                    row[t], row[bj] = row[bj], row[t]
        t += 1


def snf(m):
    """Smith normal form diagonal of an IntMatrix.

    The diagonal has min(rows, cols) entries, all non-negative, forming a
    divisibility chain with zeros last.
    """
    a = m.to_rows()
    _diagonalize(a, m.rows, m.cols)
    diag = [abs(a[i][i]) for i in range(min(m.rows, m.cols))]
    nonzero = [d for d in diag if d]
    return SnfResult(tuple(invariant_factors_of_diagonal(nonzero))
                     + (0,) * (len(diag) - len(nonzero)))


def rank_mod2(m):
    """Rank of an integer matrix reduced modulo 2."""
    rows = []
    for r in m.to_rows():
        bits = 0
        for j, v in enumerate(r):
            if v & 1:
                bits |= 1 << j
        rows.append(bits)
    return rank_f2_bitrows(rows)


def rank_f2_bitrows(rows):
    """Rank over F_2 of vectors given as int bitmasks."""
    basis = {}  # leading bit -> reduced vector
    for v in rows:
        while v:
            lead = v.bit_length() - 1
            if lead not in basis:
                basis[lead] = v
                break
            v ^= basis[lead]
    return len(basis)


def gcd_j_products(ms, j):
    """gcd of all products of j of the entries of ms (j = 0 gives 1).

    Dynamic programming over the entries: g[i] holds the gcd of the i-fold
    products of the entries seen so far, and a new entry m updates
    g[i] <- gcd(g[i], m * g[i-1]).
    """
    if not 0 <= j <= len(ms):
        raise ValueError(f"j must lie in [0, {len(ms)}], got {j}")
    g = [1] + [0] * j
    for m in ms:
        for i in range(j, 0, -1):
            g[i] = gcd(g[i], m * g[i - 1])
    return g[j]
