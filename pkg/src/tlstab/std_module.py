"""Matrix representations of TL_n, the standard modules V_{n,p}, and the
bilinear form on link states.

Matrices act on column vectors; the basis of V_{n,p} is the canonical order of
``enumerate_states(n, p)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import linalg
from .diagram import Diagram, Word, eval_word, generator, words_by_diagram
from .link_state import DEFECT, ZERO, LinkState, act_standard, enumerate_states
from .linalg import Matrix


@dataclass
class MatrixRep:
    n: int
    dim: int
    generators: dict[int, Matrix]
    labels: list[str] | None = None

    def __post_init__(self):
        want = set(range(1, self.n))
        if set(self.generators) != want:
            raise ValueError(f"need generator matrices for indices {sorted(want)}")
        for i, m in self.generators.items():
            if len(m) != self.dim or any(len(row) != self.dim for row in m):
                raise ValueError(f"generator {i} is not {self.dim}x{self.dim}")
        if self.labels is not None and len(self.labels) != self.dim:
            raise ValueError("label count does not match dimension")

    def matrix(self, i: int) -> Matrix:
        return self.generators[i]


@dataclass
class RelationReport:
    ok: bool
    violations: list[str] = field(default_factory=list)


def _check_p(n: int, p: int):
    if not 1 <= p <= n // 2:
        raise ValueError(f"need 1 <= p <= n//2, got n={n}, p={p}")


def standard_matrix(a: Diagram, p: int, states: Sequence[LinkState] | None = None) -> Matrix:
    """Matrix of a single diagram on V_{n,p}, read straight off the action on states."""
    if states is None:
        states = enumerate_states(a.n, p)
    index = {v: k for k, v in enumerate(states)}
    m = linalg.zeros(len(states), len(states))
    for col, v in enumerate(states):
        w = act_standard(a, v, p)
        if w is not ZERO:
            m[index[w]][col] = 1
    return m


@lru_cache(maxsize=None)
def _standard_rep_cached(n: int, p: int) -> tuple:
    states = enumerate_states(n, p)
    gens = {i: standard_matrix(generator(n, i), p, states) for i in range(1, n)}
    return states, gens


def standard_rep(n: int, p: int) -> MatrixRep:
    _check_p(n, p)
    states, gens = _standard_rep_cached(n, p)
    return MatrixRep(n, len(states), {i: linalg.copy(m) for i, m in gens.items()}, [str(v) for v in states])


def rep_of_word(rep: MatrixRep, w: Word | Sequence[int]) -> Matrix:
    """Product of generator matrices in word order; the empty word gives the identity."""
    if isinstance(w, Word):
        if w.n != rep.n:
            raise ValueError(f"word on {w.n} strands for a TL_{rep.n} representation")
        letters = w.letters
    else:
        letters = tuple(w)
        Word(rep.n, letters)
    out = linalg.identity(rep.dim)
    for i in letters:
        out = linalg.matmul(out, rep.generators[i])
    return out


def rep_of_diagram(rep: MatrixRep, a: Diagram, words: dict[Diagram, tuple[int, ...]] | None = None) -> Matrix:
    """Matrix of an arbitrary diagram, via a word that evaluates to it."""
    if words is None:
        words = words_by_diagram(rep.n)
    return rep_of_word(rep, words[a])


def all_diagram_matrices(rep: MatrixRep) -> dict[Diagram, Matrix]:
    """Matrix of every TL_n diagram, built breadth-first as rho(u_i a) = rho(u_i) rho(a)."""
    words = words_by_diagram(rep.n)
    order = sorted(words, key=lambda a: len(words[a]))
    out: dict[Diagram, Matrix] = {}
    for a in order:
        w = words[a]
        if not w:
            out[a] = linalg.identity(rep.dim)
        else:
            rest = eval_word(Word(rep.n, w[1:]))
            out[a] = linalg.matmul(rep.generators[w[0]], out[rest])
    return out


def verify_relations(rep: MatrixRep) -> RelationReport:
    g = rep.generators
    bad = []
    for i in range(1, rep.n):
        if not linalg.mat_eq(linalg.matmul(g[i], g[i]), g[i]):
            bad.append(f"u{i}u{i} != u{i}")
        for j in (i - 1, i + 1):
            if 1 <= j <= rep.n - 1:
                if not linalg.mat_eq(linalg.matmul(linalg.matmul(g[i], g[j]), g[i]), g[i]):
                    bad.append(f"u{i}u{j}u{i} != u{i}")
        for j in range(i + 2, rep.n):
            if not linalg.mat_eq(linalg.matmul(g[i], g[j]), linalg.matmul(g[j], g[i])):
                bad.append(f"u{i}u{j} != u{j}u{i}")
    return RelationReport(not bad, bad)


def pairing(v: LinkState, w: LinkState) -> int:
    """The bilinear form at loop value 1: 1 when every defect of ``v`` runs into a defect of ``w``."""
    if v.n != w.n:
        raise ValueError("states of different size")
    for start in v.defects():
        i = start - 1
        while True:
            j = w.sites[i]
            if j == DEFECT:
                break
            k = v.sites[j]
            if k == DEFECT:
                return 0
            i = k
    return 1


def gram_matrix(n: int, p: int) -> Matrix:
    _check_p(n, p)
    states = enumerate_states(n, p)
    return [[pairing(v, w) for w in states] for v in states]


def direct_sum(reps: Sequence[MatrixRep], n: int | None = None) -> MatrixRep:
    if not reps:
        if n is None:
            raise ValueError("n is needed for an empty direct sum")
        return MatrixRep(n, 0, {i: [] for i in range(1, n)}, [])
    n = reps[0].n
    if any(r.n != n for r in reps):
        raise ValueError("all summands must have the same n")
    sizes = [r.dim for r in reps]
    gens = {i: linalg.block_diag([r.generators[i] for r in reps], sizes) for i in range(1, n)}
    labels = [f"{k}:{lab}" for k, r in enumerate(reps) for lab in (r.labels or [str(j) for j in range(r.dim)])]
    return MatrixRep(n, sum(sizes), gens, labels)


def conjugate(rep: MatrixRep, change: Matrix) -> MatrixRep:
    """The representation ``P rho P^-1`` for an invertible ``P``."""
    inv = linalg.inverse(change)
    gens = {i: linalg.matmul(linalg.matmul(change, m), inv) for i, m in rep.generators.items()}
    return MatrixRep(rep.n, rep.dim, gens)


def to_json(rep: MatrixRep) -> dict:
    def enc(x):
        x = linalg.normalize(x)
        return x if isinstance(x, int) else f"{x.numerator}/{x.denominator}"

    out = {
        "n": rep.n,
        "dim": rep.dim,
        "generators": {str(i): [[enc(x) for x in row] for row in m] for i, m in sorted(rep.generators.items())},
    }
    if rep.labels is not None:
        out["labels"] = list(rep.labels)
    return out


def from_json(data: dict) -> MatrixRep:
    def dec(x):
        return linalg.normalize(Fraction(x)) if isinstance(x, str) else x

    gens = {int(i): [[dec(x) for x in row] for row in m] for i, m in data["generators"].items()}
    return MatrixRep(int(data["n"]), int(data["dim"]), gens, data.get("labels"))
