"""Simplicial chain complexes, relative homology over Q, induced maps, and
integral homology through invariant factors."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

from . import linalg
from .linalg import Matrix, Span, Vector

Simplex = tuple


def close_under_faces(simplices: Iterable[Sequence]) -> set[Simplex]:
    out: set[Simplex] = set()
    for s in simplices:
        s = tuple(s)
        k = len(s)
        for mask in range(1, 1 << k):
            out.add(tuple(s[j] for j in range(k) if mask >> j & 1))
    return out


class ChainComplex:
    """Chains on the simplices in ``cells`` (a set closed under taking faces
    modulo the ignored simplices).  Faces outside ``cells`` are dropped, which
    is exactly the relative complex C(X)/C(A) when ``cells`` is X minus A.

    Simplices must be tuples already sorted in a fixed vertex order.
    """

    def __init__(self, cells: Iterable[Simplex]):
        by_dim: dict[int, list[Simplex]] = {}
        for s in cells:
            by_dim.setdefault(len(s) - 1, []).append(tuple(s))
        self.cells = {k: sorted(v) for k, v in by_dim.items()}
        self.index = {k: {s: j for j, s in enumerate(v)} for k, v in self.cells.items()}

    def size(self, k: int) -> int:
        return len(self.cells.get(k, []))

    def boundary(self, k: int) -> Matrix:
        """Matrix of the boundary C_k -> C_{k-1} (rows: (k-1)-simplices)."""
        rows, cols = self.size(k - 1), self.size(k)
        m = linalg.zeros(rows, cols)
        if k <= 0:
            return m
        lower = self.index.get(k - 1, {})
        for j, s in enumerate(self.cells.get(k, [])):
            for t in range(len(s)):
                face = s[:t] + s[t + 1:]
                r = lower.get(face)
                if r is not None:
                    m[r][j] += -1 if t % 2 else 1
        return m


@dataclass
class HomologyBasis:
    k: int
    boundaries: list[Vector]
    classes: list[Vector]  # cycle representatives, independent modulo boundaries

    @property
    def dim(self) -> int:
        return len(self.classes)


def homology_basis(cx: ChainComplex, k: int) -> HomologyBasis:
    nk = cx.size(k)
    if nk == 0:
        return HomologyBasis(k, [], [])
    d_k = cx.boundary(k)
    cycles = linalg.nullspace(d_k, cols=nk) if cx.size(k - 1) else [
        [int(i == j) for i in range(nk)] for j in range(nk)]
    up = cx.boundary(k + 1)
    span = Span(nk)
    boundaries = [v for v in linalg.transpose(up, rows=nk) if span.add(v)] if cx.size(k + 1) else []
    classes = [z for z in cycles if span.add(z)]
    return HomologyBasis(k, boundaries, classes)


def rational_betti(cx: ChainComplex, k: int) -> int:
    nk = cx.size(k)
    if nk == 0:
        return 0
    return nk - linalg.rank(cx.boundary(k)) - linalg.rank(cx.boundary(k + 1))


def chain_map_matrix(src: ChainComplex, dst: ChainComplex, k: int,
                     vertex_map: Callable[[Hashable], Hashable], order: Callable[[Hashable], int]) -> Matrix:
    """Matrix of the chain map induced by a vertex map in degree ``k``.

    Degenerate images and images outside ``dst`` (collapsed simplices) are 0.
    """
    rows, cols = dst.size(k), src.size(k)
    m = linalg.zeros(rows, cols)
    idx = dst.index.get(k, {})
    for j, s in enumerate(src.cells.get(k, [])):
        img = [vertex_map(v) for v in s]
        if len(set(img)) < len(img):
            continue
        perm = sorted(range(len(img)), key=lambda t: order(img[t]))
        target = tuple(img[t] for t in perm)
        r = idx.get(target)
        if r is None:
            continue
        m[r][j] = _perm_sign(perm)
    return m


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def induced_on_homology(basis: HomologyBasis, chain_map: Matrix) -> Matrix:
    """Matrix of the induced map on homology, in the coordinates of ``basis.classes``."""
    h = basis.dim
    if h == 0:
        return []
    cols = linalg.transpose(basis.boundaries + basis.classes)
    images = [linalg.matvec(chain_map, z) for z in basis.classes]
    coords = linalg.solve_many(cols, images)
    nb = len(basis.boundaries)
    return linalg.transpose([x[nb:] for x in coords])


@dataclass
class IntegralHomology:
    k: int
    free_rank: int
    torsion: list[int]

    def to_json(self) -> dict:
        return {"k": self.k, "free_rank": self.free_rank, "torsion": list(self.torsion)}


def integral_homology(cx: ChainComplex, k: int) -> IntegralHomology:
    nk = cx.size(k)
    if nk == 0:
        return IntegralHomology(k, 0, [])
    down = linalg.rank(cx.boundary(k)) if cx.size(k - 1) else 0
    inv_up = linalg.smith_invariants(cx.boundary(k + 1)) if cx.size(k + 1) else []
    free = nk - down - len(inv_up)
    return IntegralHomology(k, free, [x for x in inv_up if x > 1])
