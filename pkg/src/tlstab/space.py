"""Finite models of spaces with a TL_n action.

Two backends share one pointed-set interface: a list of *pieces* (cells of a
wedge, or simplices of a complex) together with the basepoint token ``BASE``,
and for each generator ``i`` a function ``image(i, piece)``.  In the
simplicial backend every simplex of the collapsed subcomplex is reported as
``BASE``, so both backends describe the quotient space X/A directly.

Generator maps are written as words read right to left: the product
``u_a u_b`` applies ``u_b`` first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Iterable, Mapping, Sequence

from . import homology as hom
from .comb import FiltrationProfile
from .std_module import MatrixRep

BASE = "*"


class SpaceError(ValueError):
    """Raised for malformed spaces: non-simplicial maps, moved basepoints, bad dimensions."""


def _compose_word(space, letters: Sequence[int], piece):
    for i in reversed(letters):
        piece = space.image(i, piece)
    return piece


class _PointedSpace:
    n: int

    def pieces(self) -> list:
        raise NotImplementedError

    def image(self, i: int, piece):
        raise NotImplementedError

    def apply_word(self, letters: Sequence[int], piece):
        """Apply the product ``u_{letters[0]} ... u_{letters[-1]}`` (rightmost first)."""
        return _compose_word(self, letters, piece)


@dataclass
class WedgeSpace(_PointedSpace):
    """A wedge of spheres: labelled cells, each a sphere of some dimension,
    joined at the basepoint.  Generator maps send each cell to a cell of the
    same dimension or to the basepoint."""

    n: int
    cells: list[str]
    maps: dict[int, dict[str, str]]
    dims: dict[str, int] = field(default_factory=dict)
    k: int = 2

    def __post_init__(self):
        if len(set(self.cells)) != len(self.cells) or BASE in self.cells:
            raise SpaceError("cell labels must be distinct and differ from the basepoint")
        for c in self.cells:
            self.dims.setdefault(c, self.k)
        if set(self.maps) != set(range(1, self.n)):
            raise SpaceError(f"need one map per generator 1..{self.n - 1}")
        known = set(self.cells)
        for i, f in self.maps.items():
            for c in self.cells:
                t = f.get(c, BASE)
                if t != BASE and t not in known:
                    raise SpaceError(f"u{i} sends {c} to unknown cell {t}")
                if t != BASE and self.dims[t] != self.dims[c]:
                    raise SpaceError(f"u{i} sends {c} to a cell of another dimension")
            if f.get(BASE, BASE) != BASE:
                raise SpaceError(f"u{i} moves the basepoint")

    def pieces(self) -> list:
        return [BASE] + list(self.cells)

    def image(self, i: int, piece):
        if piece == BASE:
            return BASE
        return self.maps[i].get(piece, BASE)

    def piece_dim(self, piece) -> int:
        return 0 if piece == BASE else self.dims[piece]


@dataclass
class SimplicialTLSpace(_PointedSpace):
    """A finite simplicial complex with one vertex map per generator.

    ``collapsed`` is a subcomplex identified to the basepoint; it always
    contains the basepoint vertex.
    """

    n: int
    vertices: list
    simplices: list
    basepoint: Hashable
    vertex_maps: dict[int, dict]
    collapsed: frozenset = frozenset()

    def __post_init__(self):
        self.vertices = list(self.vertices)
        self._vindex = {v: j for j, v in enumerate(self.vertices)}
        if len(self._vindex) != len(self.vertices):
            raise SpaceError("duplicate vertices")
        if self.basepoint not in self._vindex:
            raise SpaceError("basepoint is not a vertex")
        faces = hom.close_under_faces(self._key(s) for s in self.simplices)
        faces |= {(j,) for j in range(len(self.vertices))}
        self._all = faces
        self.simplices = sorted(faces, key=lambda s: (len(s), s))
        collapsed = hom.close_under_faces(self._key(s) for s in self.collapsed)
        collapsed.add((self._vindex[self.basepoint],))
        if not collapsed <= faces:
            raise SpaceError("collapsed set is not a subcomplex")
        self._collapsed = collapsed
        if set(self.vertex_maps) != set(range(1, self.n)):
            raise SpaceError(f"need one vertex map per generator 1..{self.n - 1}")
        self._vmaps: dict[int, list[int]] = {}
        for i, f in self.vertex_maps.items():
            try:
                table = [self._vindex[f.get(v, v)] for v in self.vertices]
            except KeyError as exc:
                raise SpaceError(f"u{i} sends a vertex outside the complex: {exc}") from None
            if table[self._vindex[self.basepoint]] != self._vindex[self.basepoint]:
                raise SpaceError(f"u{i} moves the basepoint")
            self._vmaps[i] = table
        for i in self._vmaps:
            for s in faces:
                img = self._raw_image(i, s)
                if img not in faces:
                    raise SpaceError(f"u{i} is not simplicial on {self.label(s)}")
                if s in collapsed and img not in collapsed:
                    raise SpaceError(f"u{i} does not preserve the collapsed subcomplex")

    def _key(self, s: Iterable) -> tuple:
        try:
            return tuple(sorted({self._vindex[v] for v in s}))
        except KeyError as exc:
            raise SpaceError(f"simplex uses unknown vertex {exc}") from None

    def label(self, s: tuple) -> tuple:
        return tuple(self.vertices[j] for j in s)

    def _raw_image(self, i: int, s: tuple) -> tuple:
        table = self._vmaps[i]
        return tuple(sorted({table[j] for j in s}))

    def pieces(self) -> list:
        return [BASE] + [s for s in self.simplices if s not in self._collapsed]

    def image(self, i: int, piece):
        if piece == BASE:
            return BASE
        img = self._raw_image(i, piece)
        return BASE if img in self._collapsed else img

    def piece_dim(self, piece) -> int:
        return 0 if piece == BASE else len(piece) - 1

    def maximal_simplices(self) -> list[tuple]:
        faces = set()
        for s in self.simplices:
            if len(s) > 1:
                faces.update(s[:t] + s[t + 1:] for t in range(len(s)))
        return [s for s in self.simplices if s not in faces]

    def collapsed_simplices(self) -> set:
        return set(self._collapsed)

    def vertex_table(self, i: int) -> list[int]:
        return self._vmaps[i]

    def chain_complex(self, subset: Iterable | None = None) -> hom.ChainComplex:
        """Relative chains: simplices of ``subset`` (default everything) outside the collapsed part."""
        cells = self._all if subset is None else subset
        return hom.ChainComplex(s for s in cells if s != BASE and s not in self._collapsed)

    def with_collapsed(self, extra: Iterable[tuple]) -> "SimplicialTLSpace":
        keep = [self.label(s) for s in self._collapsed] + [self.label(s) for s in extra]
        return SimplicialTLSpace(self.n, self.vertices, [self.label(s) for s in self.simplices],
                                 self.basepoint, self.vertex_maps, frozenset(keep))

    def components(self, subset: Iterable[tuple] | None = None) -> int:
        """Connected components of a subcomplex (default: everything), with the
        collapsed part counted as one point."""
        cells = set(self._all if subset is None else subset)
        parent = list(range(len(self.vertices)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        base = self._vindex[self.basepoint]
        collapsed_vertices = {s[0] for s in self._collapsed if len(s) == 1}
        for v in collapsed_vertices:
            union(v, base)
        present = {s[0] for s in cells if len(s) == 1} | collapsed_vertices
        for s in cells:
            if len(s) == 2:
                union(s[0], s[1])
        return len({find(v) for v in present})


TLSpace = WedgeSpace | SimplicialTLSpace


@dataclass
class SpaceReport:
    relations_ok: bool
    violations: list[str]
    surjective: bool
    Q_cells: list
    nifi_ok: bool
    isch_ok: bool
    q_retract_obstruction: bool
    connected: bool
    A: dict[int, list]

    def to_json(self, namer=str) -> dict:
        return {
            "relations_ok": self.relations_ok,
            "violations": self.violations,
            "surjective": self.surjective,
            "Q_cells": [namer(c) for c in self.Q_cells],
            "nifi_ok": self.nifi_ok,
            "isch_ok": self.isch_ok,
            "q_retract_obstruction": self.q_retract_obstruction,
            "connected": self.connected,
        }


def piece_name(space, piece) -> str:
    if piece == BASE:
        return BASE
    if isinstance(space, SimplicialTLSpace):
        return "(" + ",".join(str(v) for v in space.label(piece)) + ")"
    return str(piece)


def _image_set(space, letters: Sequence[int]) -> set:
    return {space.apply_word(letters, c) for c in space.pieces()}


def image_subspaces(space) -> dict[int, set]:
    return {i: _image_set(space, (i,)) for i in range(1, space.n)}


def relation_violations(space) -> list[str]:
    pieces = space.pieces()
    bad = []

    def same(w1, w2) -> bool:
        return all(space.apply_word(w1, c) == space.apply_word(w2, c) for c in pieces)

    for i in range(1, space.n):
        if not same((i, i), (i,)):
            bad.append(f"u{i}u{i} != u{i}")
        for j in (i - 1, i + 1):
            if 1 <= j <= space.n - 1 and not same((i, j, i), (i,)):
                bad.append(f"u{i}u{j}u{i} != u{i}")
        for j in range(i + 2, space.n):
            if not same((i, j), (j, i)):
                bad.append(f"u{i}u{j} != u{j}u{i}")
    return bad


def full_intersection(space) -> set:
    """Pieces fixed by every generator (always contains the basepoint)."""
    return {c for c in space.pieces() if all(space.image(i, c) == c for i in range(1, space.n))}


def long_distance_sets(n: int, m: int) -> list[tuple[int, ...]]:
    """Index sets {i_1 < ... < i_m} in 1..n-1 with pairwise gaps of at least 2."""
    return [s for s in combinations(range(1, n), m) if all(b - a >= 2 for a, b in zip(s, s[1:]))]


def transport_word(target: Sequence[int]) -> tuple[int, ...]:
    """The composite carrying A_1 n A_3 n ... onto A_{i_1} n ... n A_{i_m}:
    r_{i_1} ... r_1 r_{i_2} ... r_3 ... r_{i_m} ... r_{2m-1} as a word."""
    word: list[int] = []
    for k, i in enumerate(target, start=1):
        word.extend(range(i, 2 * k - 2, -1))
    return tuple(word)


def _intersection(A: Mapping[int, set], idx: Iterable[int], pieces) -> set:
    out = set(pieces)
    for i in idx:
        out &= A[i]
    return out


def check_structure(space, A: Mapping[int, set] | None = None) -> tuple[bool, bool, bool, bool]:
    """Return (nifi_ok, isch_ok, q_retract_obstruction, connected)."""
    A = A or image_subspaces(space)
    pieces = space.pieces()
    Q = full_intersection(space)
    nifi = all(A[i] & A[i + 1] <= Q for i in range(1, space.n - 1))
    isch = True
    for m in range(1, (space.n - 1 + 1) // 2 + 1):
        sets = long_distance_sets(space.n, m)
        if not sets:
            continue
        source = _intersection(A, range(1, 2 * m, 2), pieces)
        for target in sets:
            dest = _intersection(A, target, pieces)
            word = transport_word(target)
            imgs = {space.apply_word(word, c) for c in source}
            if len(dest) != len(source) or imgs != dest:
                isch = False
    if isinstance(space, SimplicialTLSpace):
        connected = space.components() == 1
        q_pieces = {c for c in Q if c != BASE}
        obstruction = connected and space.components(q_pieces) > 1
    else:
        connected, obstruction = True, False
    return nifi, isch, obstruction, connected


def verify_space(space) -> SpaceReport:
    bad = relation_violations(space)
    A = image_subspaces(space)
    covered = set().union(*A.values()) if A else {BASE}
    surjective = covered >= set(space.pieces())
    Q = full_intersection(space)
    nifi, isch, obstruction, connected = check_structure(space, A)
    return SpaceReport(
        relations_ok=not bad,
        violations=bad,
        surjective=surjective,
        Q_cells=sorted((c for c in Q if c != BASE), key=repr),
        nifi_ok=nifi,
        isch_ok=isch,
        q_retract_obstruction=obstruction,
        connected=connected,
        A={i: sorted(a, key=repr) for i, a in A.items()},
    )


def quotient_by_Q(space):
    Q = {c for c in full_intersection(space) if c != BASE}
    if not Q:
        return space
    if isinstance(space, WedgeSpace):
        cells = [c for c in space.cells if c not in Q]
        maps = {i: {c: (BASE if f.get(c, BASE) in Q else f.get(c, BASE)) for c in cells}
                for i, f in space.maps.items()}
        return WedgeSpace(space.n, cells, maps, {c: space.dims[c] for c in cells}, space.k)
    return space.with_collapsed(Q)


def filtration_pieces(space, p: int) -> set:
    """R_p: the image of u_1 u_3 ... u_{2p-1}."""
    return _image_set(space, tuple(range(1, 2 * p, 2)))


def reduced_betti(space, k: int, subset: set | None = None) -> int:
    if k < 0:
        raise ValueError("homological degree must be non-negative")
    if isinstance(space, WedgeSpace):
        cells = space.cells if subset is None else [c for c in space.cells if c in subset]
        return sum(1 for c in cells if space.dims[c] == k)
    return hom.rational_betti(space.chain_complex(subset), k)


def filtration(space, k: int) -> FiltrationProfile:
    if {c for c in full_intersection(space) if c != BASE}:
        raise SpaceError("the full intersection is larger than the basepoint; apply quotient_by_Q first")
    betti = [reduced_betti(space, k, filtration_pieces(space, p)) for p in range(1, space.n // 2 + 1)]
    return FiltrationProfile(space.n, k, tuple(betti))


def homology_rep(space, k: int) -> MatrixRep:
    """Induced action on reduced homology in degree ``k`` over Q."""
    if k < 0:
        raise ValueError("homological degree must be non-negative")
    if isinstance(space, WedgeSpace):
        cells = [c for c in space.cells if space.dims[c] == k]
        index = {c: j for j, c in enumerate(cells)}
        gens = {}
        for i in range(1, space.n):
            m = [[0] * len(cells) for _ in cells]
            for col, c in enumerate(cells):
                t = space.image(i, c)
                if t != BASE:
                    m[index[t]][col] = 1
            gens[i] = m
        return MatrixRep(space.n, len(cells), gens, list(cells))
    cx = space.chain_complex()
    basis = hom.homology_basis(cx, k)
    gens = {}
    for i in range(1, space.n):
        table = space.vertex_table(i)
        chain = hom.chain_map_matrix(cx, cx, k, lambda v, t=table: t[v], lambda v: v)
        gens[i] = hom.induced_on_homology(basis, chain)
    return MatrixRep(space.n, basis.dim, gens)


def integral_homology(space: SimplicialTLSpace, k: int, reduced: bool = True) -> hom.IntegralHomology:
    if not isinstance(space, SimplicialTLSpace):
        raise SpaceError("integral homology needs a simplicial space")
    if reduced:
        return hom.integral_homology(space.chain_complex(), k)
    return hom.integral_homology(hom.ChainComplex(space.simplices), k)
