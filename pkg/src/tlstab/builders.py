"""Ready-made spaces and representations: wedge models built from link
states, the torus action, and small simplicial test spaces."""

from __future__ import annotations

import warnings
from collections import defaultdict

from .comb import d
from .diagram import generator
from .link_state import ZERO, act_standard, enumerate_states
from .space import BASE, SimplicialTLSpace, WedgeSpace
from .std_module import MatrixRep


def wedge_label(p: int, copy: int, word: str) -> str:
    return f"V{p}#{copy}:{word}"


def build_wedge(n: int, spec, k: int = 2) -> WedgeSpace:
    """One k-sphere per (n, p) link state per requested copy; u_i moves spheres
    the way it moves link states, and kills them when a cup is gained."""
    if isinstance(spec, dict):
        spec = list(spec.items())
    copies: dict[int, int] = defaultdict(int)
    cells: list[str] = []
    maps: dict[int, dict[str, str]] = {i: {} for i in range(1, n)}
    gens = {i: generator(n, i) for i in range(1, n)}
    for p, mult in spec:
        if not 1 <= p <= n // 2:
            raise ValueError(f"p={p} out of range for n={n}")
        if mult < 0:
            raise ValueError("multiplicities are non-negative")
        states = enumerate_states(n, p)
        for _ in range(mult):
            copy = copies[p]
            copies[p] += 1
            for v in states:
                label = wedge_label(p, copy, v.word())
                cells.append(label)
                for i, g in gens.items():
                    w = act_standard(g, v, p)
                    maps[i][label] = BASE if w is ZERO else wedge_label(p, copy, w.word())
    return WedgeSpace(n, cells, maps, k=k)


def torus_bound(n: int) -> int:
    return max(d(n, 2), n - 1)


def build_torus_rep(n: int, c: int) -> MatrixRep:
    """Action on H_1 of the c-torus: r_i keeps only coordinate i, which becomes
    x_{i-1} + x_i + x_{i+1} with out-of-range neighbours dropped."""
    if n < 2:
        raise ValueError("need n >= 2")
    if c < n - 1:
        raise ValueError(f"need c >= n-1 = {n - 1} to place every generator")
    if c < torus_bound(n):
        warnings.warn(f"c={c} is below max(d(n,2), n-1) = {torus_bound(n)}", stacklevel=2)
    gens = {}
    for i in range(1, n):
        m = [[0] * c for _ in range(c)]
        row = i - 1
        for j in (i - 1, i, i + 1):
            if j == i - 1 and i < 2:
                continue
            if j == i + 1 and i + 1 > n - 1:
                continue
            m[row][j - 1] = 1
        gens[i] = m
    return MatrixRep(n, c, gens, [f"x{j}" for j in range(1, c + 1)])


def build_example2_space(n: int, c: int) -> WedgeSpace:
    """Wedge of circles: one per (n,2) state, plus c - d(n,2) copies of the (n,1) block."""
    if n < 4:
        raise ValueError("need n >= 4 for (n,2) link states")
    if c < torus_bound(n):
        raise ValueError(f"need c >= max(d(n,2), n-1) = {torus_bound(n)}")
    return build_wedge(n, [(2, 1), (1, c - d(n, 2))], k=1)


def circle_wedge_example() -> WedgeSpace:
    """Five circles for TL_5: q is fixed by everything, c1..c4 are shuffled.
    After collapsing q the first homology is V_{5,1}."""
    cells = ["q", "c1", "c2", "c3", "c4"]
    maps = {
        1: {"q": "q", "c1": "c1", "c2": "c1", "c3": "q", "c4": "q"},
        2: {"q": "q", "c1": "c2", "c2": "c2", "c3": "c2", "c4": BASE},
        3: {"q": "q", "c1": "q", "c2": "c3", "c3": "c3", "c4": "c3"},
        4: {"q": "q", "c1": BASE, "c2": BASE, "c3": "c4", "c4": "c4"},
    }
    return WedgeSpace(5, cells, maps, k=1)


def _octahedron(tag: str) -> list[tuple]:
    eq = [f"{tag}{j}" for j in range(1, 5)]
    tris = []
    for j in range(4):
        a, b = eq[j], eq[(j + 1) % 4]
        tris.append(("N", a, b))
        tris.append(("S", a, b))
    return tris


def glued_spheres() -> SimplicialTLSpace:
    """Two octahedral spheres sharing their poles N and S, TL_3 retracting
    each onto the other.  The poles are exactly the common fixed set."""
    a = [f"a{j}" for j in range(1, 5)]
    b = [f"b{j}" for j in range(1, 5)]
    vertices = ["N", "S"] + a + b
    u1 = {bj: aj for aj, bj in zip(a, b)}
    u2 = {aj: bj for aj, bj in zip(a, b)}
    return SimplicialTLSpace(3, vertices, _octahedron("a") + _octahedron("b"), "N", {1: u1, 2: u2})


def _torus_triangles(name) -> list[tuple]:
    tris = []
    for i in range(4):
        for j in range(4):
            p, q = (i + 1) % 4, (j + 1) % 4
            tris.append((name(i, j), name(p, j), name(p, q)))
            tris.append((name(i, j), name(i, q), name(p, q)))
    return tris


def glued_tori() -> SimplicialTLSpace:
    """Three 4x4 grid tori a, b, c for TL_4.  c meets a along the circle j = 0,
    b meets a in the two points (0,0) and (2,0).  u_1 retracts onto a, u_2 onto
    b, u_3 onto c; the common fixed set is those two points."""

    def va(i, j):
        return f"a{i}{j}"

    def vb(i, j):
        return va(i, j) if (i, j) in ((0, 0), (2, 0)) else f"b{i}{j}"

    def vc(i, j):
        return va(i, 0) if j == 0 else f"c{i}{j}"

    grid = [(i, j) for i in range(4) for j in range(4)]
    vertices = list(dict.fromkeys([va(*g) for g in grid] + [vb(*g) for g in grid] + [vc(*g) for g in grid]))
    simplices = _torus_triangles(va) + _torus_triangles(vb) + _torus_triangles(vc)
    u1, u2, u3 = {}, {}, {}
    for i, j in grid:
        u1[vb(i, j)] = va(i, j)
        u1[vc(i, j)] = va(i, 0)
        u2[va(i, j)] = vb(i, j)
        u2[vc(i, j)] = vb(i, j)
        u3[vb(i, j)] = vc(i, j)
        u3[va(i, j)] = va(i, 0)
    for i, j in grid:
        # the maps above were written per torus; vertices shared between tori
        # must agree, and the fixed tori win
        u1[va(i, j)] = va(i, j)
        u2[vb(i, j)] = vb(i, j)
        u3[vc(i, j)] = vc(i, j)
    return SimplicialTLSpace(4, vertices, simplices, va(0, 0), {1: u1, 2: u2, 3: u3})


def pinched_cylinder() -> SimplicialTLSpace:
    """A triangulated strip between two circles through a common point; u_1
    retracts onto the bottom circle, u_2 onto the top.  The strip itself is
    in neither image, so the action is not surjective."""
    vertices = ["*", "b1", "b2", "b3", "t1", "t2", "t3"]
    simplices = [("*", "b1", "t1"), ("b1", "b2", "t2"), ("b1", "t1", "t2"),
                 ("b2", "b3", "t3"), ("b2", "t2", "t3"), ("b3", "t3", "*")]
    u1 = {f"t{j}": f"b{j}" for j in range(1, 4)}
    u2 = {f"b{j}": f"t{j}" for j in range(1, 4)}
    return SimplicialTLSpace(3, vertices, simplices, "*", {1: u1, 2: u2})


def _trivial_maps(n: int) -> dict[int, dict]:
    return {i: {} for i in range(1, n)}


def hollow_triangle(n: int = 2) -> SimplicialTLSpace:
    """A circle with every generator acting as the identity."""
    return SimplicialTLSpace(n, [0, 1, 2], [(0, 1), (1, 2), (0, 2)], 0, _trivial_maps(n))


def tetrahedron_boundary(n: int = 2) -> SimplicialTLSpace:
    faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    return SimplicialTLSpace(n, [0, 1, 2, 3], faces, 0, _trivial_maps(n))


def projective_plane(n: int = 2) -> SimplicialTLSpace:
    """The six-vertex triangulation of the real projective plane."""
    faces = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2),
             (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4)]
    return SimplicialTLSpace(n, [1, 2, 3, 4, 5, 6], faces, 1, _trivial_maps(n))


def circle_and_point(n: int = 2) -> SimplicialTLSpace:
    return SimplicialTLSpace(n, [0, 1, 2, 3], [(0, 1), (1, 2), (0, 2), (3,)], 0, _trivial_maps(n))
