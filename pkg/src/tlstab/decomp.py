"""Recovering standard-module multiplicities from a matrix representation.

The rank of rho(E_p), with E_p = u_1 u_3 ... u_{2p-1}, is
sum_{q >= p} m_q d(n-2p, q-p) when rho is a sum of standards with
multiplicities m; the system is triangular and is solved from the top down.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import linalg
from .comb import d
from .diagram import generator
from .link_state import LinkState, act, back_to_back, enumerate_states
from .linalg import Matrix, Span, Vector
from .std_module import MatrixRep, all_diagram_matrices, rep_of_word, verify_relations


class DecompositionError(ValueError):
    def __init__(self, message: str, p: int | None = None):
        super().__init__(message)
        self.p = p


@dataclass(frozen=True)
class Decomposition:
    n: int
    mult: tuple[int, ...]  # mult[p-1] = multiplicity of V_{n,p}
    consistent: bool
    certified: bool | None = None  # None when no isomorphism certificate was attempted

    def to_json(self) -> dict:
        out = {"n": self.n, "mult": list(self.mult), "consistent": self.consistent}
        if self.certified is not None:
            out["certified"] = self.certified
        return out


def e_word(p: int) -> tuple[int, ...]:
    return tuple(range(1, 2 * p, 2))


def e_ranks(rep: MatrixRep) -> list[int]:
    return [linalg.rank(rep_of_word(rep, e_word(p))) for p in range(1, rep.n // 2 + 1)]


def decompose(rep: MatrixRep, certify: bool = False) -> Decomposition:
    report = verify_relations(rep)
    if not report.ok:
        raise DecompositionError("relations fail: " + "; ".join(report.violations))
    n, top = rep.n, rep.n // 2
    ranks = e_ranks(rep)
    m = [0] * (top + 1)
    for p in range(top, 0, -1):
        m[p] = ranks[p - 1] - sum(m[q] * d(n - 2 * p, q - p) for q in range(p + 1, top + 1))
        if m[p] < 0:
            raise DecompositionError(f"negative multiplicity {m[p]} at p={p}; not a sum of standard modules", p)
    mult = tuple(m[1:])
    consistent = sum(x * d(n, p) for p, x in enumerate(mult, start=1)) == rep.dim
    certified = None
    if certify:
        certified = consistent and certify_decomposition(rep, mult) is not None
    return Decomposition(n, mult, consistent, certified)


def _seed_state(n: int, p: int) -> LinkState:
    return LinkState.from_cups(n, [(2 * c + 1, 2 * c + 2) for c in range(p)])


def certify_decomposition(rep: MatrixRep, mult, rng: random.Random | None = None) -> Matrix | None:
    """Try to build an explicit isomorphism from the sum of standards onto ``rep``.

    A TL_n-map V_{n,p} -> W is fixed by the image alpha of the seed state
    s = ()()..()||..|; it must satisfy rho(E_p) alpha = alpha and kill every
    u_i v s* with u_i . v gaining cups.  The map is then v -> rho(v s*) alpha.
    Returns the change-of-basis matrix (columns are images of standard basis
    vectors, highest p first) or ``None`` if no certificate was found.
    """
    rng = rng or random.Random(0)
    n, dim = rep.n, rep.dim
    if sum(x * d(n, p) for p, x in enumerate(mult, start=1)) != dim:
        return None
    if dim == 0:
        return []
    mats = all_diagram_matrices(rep)
    span = Span(dim)
    columns: list[Vector] = []
    for p in range(len(mult), 0, -1):
        need = mult[p - 1]
        if need == 0:
            continue
        states = enumerate_states(n, p)
        seed = _seed_state(n, p)
        maps = [mats[back_to_back(v, seed)] for v in states]
        e_p = mats[back_to_back(seed, seed)]
        # constraints: (1 - E_p) alpha = 0 and rho(u_i v s*) alpha = 0 when u_i v has more cups
        rows = [list(r) for r in linalg.sub(linalg.identity(dim), e_p)]
        for i in range(1, n):
            g = generator(n, i)
            for v, mv in zip(states, maps):
                if act(g, v).p > p:
                    rows.extend(linalg.matmul(rep.generators[i], mv))
        kernel = linalg.nullspace(rows, cols=dim)
        candidates = list(kernel)
        for _ in range(4 * len(kernel)):
            candidates.append([linalg.normalize(sum(rng.randint(-3, 3) * b[j] for b in kernel)) for j in range(dim)])
        for alpha in candidates:
            if need == 0:
                break
            images = [linalg.matvec(mv, alpha) for mv in maps]
            trial = Span(dim)
            for b in span.basis():
                trial.add(b)
            if all(trial.add(img) for img in images):
                for img in images:
                    span.add(img)
                columns.extend(images)
                need -= 1
        if need:
            return None
    if len(columns) != dim:
        return None
    change = linalg.transpose(columns)
    if linalg.rank(change) != dim:
        return None
    return change


def cyclic_span(rep: MatrixRep, v: Vector) -> tuple[int, list[Vector], Decomposition | None]:
    """The submodule generated by ``v``: its dimension, a basis, and its decomposition.

    Closure under the generator matrices; the empty word puts ``v`` itself in.
    The decomposition is ``None`` when the restricted action is not a sum of
    standard modules.
    """
    if len(v) != rep.dim:
        raise ValueError(f"vector of length {len(v)} in a {rep.dim}-dimensional representation")
    span = Span(rep.dim)
    frontier = [list(v)] if span.add(v) else []
    while frontier:
        nxt = []
        for x in frontier:
            for i in range(1, rep.n):
                y = linalg.matvec(rep.generators[i], x)
                if span.add(y):
                    nxt.append(y)
        frontier = nxt
    basis = span.basis()
    sub = restrict(rep, basis)
    try:
        dec = decompose(sub)
    except DecompositionError:
        dec = None
    return len(basis), basis, dec


def restrict(rep: MatrixRep, basis: list[Vector]) -> MatrixRep:
    """Action on an invariant subspace, in coordinates of ``basis``."""
    k = len(basis)
    if k == 0:
        return MatrixRep(rep.n, 0, {i: [] for i in range(1, rep.n)})
    cols = linalg.transpose(basis)
    gens = {}
    for i in range(1, rep.n):
        images = [linalg.matvec(rep.generators[i], b) for b in basis]
        coords = linalg.solve_many(cols, images)
        gens[i] = linalg.transpose(coords)
    return MatrixRep(rep.n, k, gens)


def diagram_span_dim(rep: MatrixRep, v: Vector) -> int:
    """Dimension of span{rho(a) v} over every diagram a, computed from the full diagram table."""
    span = Span(rep.dim)
    for m in all_diagram_matrices(rep).values():
        span.add(linalg.matvec(m, v))
    return len(span)


def grothendieck_quotient(dec: Decomposition, kill) -> Decomposition:
    """Delete the V_{n,p} summands for each ``p`` in ``kill``."""
    mult = list(dec.mult)
    for p in kill:
        if not 1 <= p <= len(mult):
            raise ValueError(f"index p={p} out of range 1..{len(mult)}")
        mult[p - 1] = 0
    return Decomposition(dec.n, tuple(mult), dec.consistent)
