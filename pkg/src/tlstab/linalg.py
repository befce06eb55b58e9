"""Exact linear algebra over the rationals and the integers.

Matrices are plain lists of rows whose entries are ``int`` or ``Fraction``.
Nothing here ever touches floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

Number = int | Fraction
Matrix = list[list[Number]]
Vector = list[Number]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def shape(m: Sequence[Sequence[Number]], cols: int | None = None) -> tuple[int, int]:
    if not m:
        return 0, (cols or 0)
    return len(m), len(m[0])


def normalize(x: Number) -> Number:
    """Collapse integral fractions back to ``int`` so equality and JSON stay clean."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


def copy(m: Sequence[Sequence[Number]]) -> Matrix:
    return [list(row) for row in m]


def transpose(m: Sequence[Sequence[Number]], rows: int | None = None) -> Matrix:
    if not m:
        return [[] for _ in range(rows or 0)]
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence[Number]], b: Sequence[Sequence[Number]], inner: int | None = None) -> Matrix:
    """Product ``a @ b``; sparse-aware, so 0/1 action matrices multiply quickly."""
    if not a:
        return []
    cols = len(b[0]) if b else 0
    out: Matrix = []
    for row in a:
        acc = [0] * cols
        for k, x in enumerate(row):
            if x:
                bk = b[k]
                if x == 1:
                    for j, y in enumerate(bk):
                        if y:
                            acc[j] += y
                else:
                    for j, y in enumerate(bk):
                        if y:
                            acc[j] += x * y
        out.append([normalize(v) for v in acc])
    return out


def matvec(a: Sequence[Sequence[Number]], v: Sequence[Number]) -> Vector:
    return [normalize(sum(x * y for x, y in zip(row, v) if x and y)) for row in a]


def mat_eq(a: Sequence[Sequence[Number]], b: Sequence[Sequence[Number]]) -> bool:
    return len(a) == len(b) and all(list(r) == list(s) for r, s in zip(a, b))


def is_zero(m: Sequence[Sequence[Number]]) -> bool:
    return all(not x for row in m for x in row)


def sub(a: Sequence[Sequence[Number]], b: Sequence[Sequence[Number]]) -> Matrix:
    return [[normalize(x - y) for x, y in zip(r, s)] for r, s in zip(a, b)]


def block_diag(blocks: Iterable[Sequence[Sequence[Number]]], sizes: Iterable[int] | None = None) -> Matrix:
    blocks = [copy(b) for b in blocks]
    if sizes is None:
        sizes = [len(b) for b in blocks]
    sizes = list(sizes)
    total = sum(sizes)
    out = zeros(total, total)
    off = 0
    for blk, s in zip(blocks, sizes):
        for i in range(s):
            for j in range(s):
                out[off + i][off + j] = blk[i][j]
        off += s
    return out


def hstack(*mats: Sequence[Sequence[Number]]) -> Matrix:
    rows = max((len(m) for m in mats), default=0)
    return [sum((list(m[i]) for m in mats if m), []) for i in range(rows)]


def _integral_rows(m: Sequence[Sequence[Number]]) -> list[list[int]]:
    """Scale each row by its denominator lcm; row scaling never changes rank."""
    out = []
    for row in m:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = den * x.denominator // math.gcd(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def rank(m: Sequence[Sequence[Number]]) -> int:
    """Rank by fraction-free (Bareiss) elimination."""
    a = _integral_rows(m)
    if not a or not a[0]:
        return 0
    rows, cols = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, rows):
            aic = a[i][c]
            row_i = a[i]
            row_r = a[r]
            for j in range(c + 1, cols):
                row_i[j] = (p * row_i[j] - aic * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
        if r == rows:
            break
    return r


def rref(m: Sequence[Sequence[Number]], cols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = [[Fraction(x) for x in row] for row in m]
    if not a:
        return a, []
    rows, ncols = len(a), len(a[0]) if cols is None else cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                ri = a[i]
                rr = a[r]
                a[i] = [x - f * y for x, y in zip(ri, rr)]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def nullspace(m: Sequence[Sequence[Number]], cols: int | None = None) -> list[Vector]:
    """Basis of ``{x : m x = 0}``; ``cols`` is needed when ``m`` has no rows."""
    if not m:
        return [[int(i == j) for i in range(cols or 0)] for j in range(cols or 0)]
    ncols = len(m[0])
    r, pivots = rref(m)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v: Vector = [0] * ncols
        v[f] = 1
        for row, pc in zip(r, pivots):
            v[pc] = normalize(-row[f])
        basis.append(v)
    return basis


def column_basis(vectors: Sequence[Sequence[Number]], dim: int) -> list[Vector]:
    """Select a maximal independent subset of ``vectors`` (each of length ``dim``)."""
    span = Span(dim)
    return [list(v) for v in vectors if span.add(v)]


def solve_many(a: Sequence[Sequence[Number]], ys: Sequence[Sequence[Number]]) -> list[Vector]:
    """Solve ``a x = y`` for each column vector ``y``; ``a`` must have full column rank
    on the solution set.  Raises ``ValueError`` when some ``y`` is outside the column space."""
    rows = len(a)
    ncols = len(a[0]) if a else 0
    if not ys:
        return []
    aug = [list(a[i]) + [y[i] for y in ys] for i in range(rows)]
    r, pivots = rref(aug, cols=ncols)
    if len(pivots) != ncols:
        raise ValueError("coefficient matrix does not have full column rank")
    for row in r[len(pivots):]:
        if any(row[ncols:]):
            raise ValueError("right-hand side is not in the column space")
    sols = []
    for j in range(len(ys)):
        x: Vector = [0] * ncols
        for row, pc in zip(r, pivots):
            x[pc] = normalize(row[ncols + j])
        sols.append(x)
    return sols


def inverse(m: Sequence[Sequence[Number]]) -> Matrix:
    n = len(m)
    aug = [list(m[i]) + [int(i == j) for j in range(n)] for i in range(n)]
    r, pivots = rref(aug, cols=n)
    if len(pivots) != n:
        raise ValueError("matrix is singular")
    return [[normalize(x) for x in row[n:]] for row in r]


class Span:
    """Incrementally grown subspace of Q^dim kept in echelon form."""

    def __init__(self, dim: int):
        self.dim = dim
        self._rows: dict[int, list[Fraction]] = {}  # pivot column -> row with 1 at pivot

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, v: Sequence[Number]) -> list[Fraction]:
        w = [Fraction(x) for x in v]
        for c in range(self.dim):
            if w[c] and c in self._rows:
                f = w[c]
                w = [x - f * y for x, y in zip(w, self._rows[c])]
        return w

    def contains(self, v: Sequence[Number]) -> bool:
        return not any(self.reduce(v))

    def add(self, v: Sequence[Number]) -> bool:
        """Add ``v``; return True when it enlarged the span."""
        w = self.reduce(v)
        piv = next((c for c, x in enumerate(w) if x), None)
        if piv is None:
            return False
        inv = 1 / w[piv]
        w = [x * inv for x in w]
        for c, row in self._rows.items():
            if row[piv]:
                f = row[piv]
                self._rows[c] = [x - f * y for x, y in zip(row, w)]
        self._rows[piv] = w
        return True

    def basis(self) -> list[Vector]:
        return [[normalize(x) for x in self._rows[c]] for c in sorted(self._rows)]


def smith_invariants(m: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix."""
    a = [[int(x) for x in row] for row in m]
    if not a or not a[0]:
        return []
    rows, cols = len(a), len(a[0])
    diag: list[int] = []
    t = 0
    while t < min(rows, cols):
        entries = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // p
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        dirty = True
            if not dirty:
                # pivot must divide the rest of the block
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            entries = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols)
                       if a[i][j] and (i == t or j == t)]
            _, pi, pj = min(entries)
            a[t], a[pi] = a[pi], a[t]
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag
