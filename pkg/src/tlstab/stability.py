"""Chains of representations indexed by n: the three-part stable-module
criterion, the one-generator check for standard chains, filtration stability,
and the multiplicity-level stability check for chains of spaces."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import linalg
from .comb import FiltrationProfile
from .decomp import DecompositionError, decompose, grothendieck_quotient
from .diagram import Diagram, enumerate_diagrams, max_enumeration_n, ResourceLimitError, words_by_diagram
from .link_state import act, all_states, enumerate_states, include
from .linalg import Matrix, Span
from .space import BASE, filtration, full_intersection, homology_rep, relation_violations
from .std_module import MatrixRep, all_diagram_matrices, rep_of_word, standard_rep, verify_relations


@dataclass
class LSChain:
    """Representations V_N..V_{N_max} with inclusion matrices (i_{m,n})_* for m < n.

    Indices below N carry the zero module.
    """

    N: int
    N_max: int
    modules: dict[int, MatrixRep]
    inclusions: dict[tuple[int, int], Matrix]

    def __post_init__(self):
        if self.N > self.N_max:
            raise ValueError("N must not exceed N_max")
        if set(self.modules) != set(range(self.N, self.N_max + 1)):
            raise ValueError("need exactly one module for each n in N..N_max")
        for n, rep in self.modules.items():
            if rep.n != n:
                raise ValueError(f"module at index {n} is a TL_{rep.n} representation")
        for m in range(self.N, self.N_max + 1):
            for n in range(m + 1, self.N_max + 1):
                mat = self.inclusions.get((m, n))
                if mat is None:
                    raise ValueError(f"missing inclusion {m}->{n}")
                if len(mat) != self.dim(n) or any(len(row) != self.dim(m) for row in mat):
                    raise ValueError(f"inclusion {m}->{n} has the wrong shape")

    def dim(self, n: int) -> int:
        return self.modules[n].dim if n in self.modules else 0

    def inclusion(self, m: int, n: int) -> Matrix:
        if m == n:
            return linalg.identity(self.dim(n))
        return self.inclusions[(m, n)]


@dataclass
class StabilityReport:
    compat_ok: bool
    equivariance_ok: bool
    criterion3_ok: bool
    relations_ok: bool = True
    witnesses: dict[str, dict] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.compat_ok and self.equivariance_ok and self.criterion3_ok and self.relations_ok

    def to_json(self) -> dict:
        return {
            "pass": self.ok,
            "compat_ok": self.compat_ok,
            "equivariance_ok": self.equivariance_ok,
            "criterion3_ok": self.criterion3_ok,
            "relations_ok": self.relations_ok,
            "witnesses": self.witnesses,
        }


def inclusion_matrix(m: int, n: int, p: int) -> Matrix:
    """0/1 matrix of include on the (m,p) basis states, in the (n,p) basis."""
    src = enumerate_states(m, p)
    index = {v: j for j, v in enumerate(enumerate_states(n, p))}
    mat = linalg.zeros(len(index), len(src))
    for col, v in enumerate(src):
        mat[index[include(v, n)]][col] = 1
    return mat


def standard_chain(p: int, N: int, N_max: int) -> LSChain:
    if p < 1 or 2 * p > N:
        raise ValueError(f"need 1 <= p and 2p <= N, got p={p}, N={N}")
    modules = {n: standard_rep(n, p) for n in range(N, N_max + 1)}
    inclusions = {(m, n): inclusion_matrix(m, n, p)
                  for m in range(N, N_max + 1) for n in range(m + 1, N_max + 1)}
    return LSChain(N, N_max, modules, inclusions)


def _diagram_name(a: Diagram) -> str:
    return "{" + ", ".join(f"{x}-{y}" for x, y in a.named_pairs()) + "}"


def check_ls_module(chain: LSChain) -> StabilityReport:
    if chain.N_max > max_enumeration_n():
        raise ResourceLimitError(f"N_max={chain.N_max} exceeds TL_MAX_N={max_enumeration_n()}")
    report = StabilityReport(True, True, True)
    span = range(chain.N, chain.N_max + 1)

    for n in span:
        bad = verify_relations(chain.modules[n]).violations
        if bad and report.relations_ok:
            report.relations_ok = False
            report.witnesses["relations"] = {"n": n, "violation": bad[0]}

    # (1) compatibility of composite inclusions
    for k in span:
        for m in range(k + 1, chain.N_max + 1):
            for n in range(m + 1, chain.N_max + 1):
                lhs = linalg.matmul(chain.inclusion(m, n), chain.inclusion(k, m))
                if not linalg.mat_eq(lhs, chain.inclusion(k, n)) and report.compat_ok:
                    report.compat_ok = False
                    report.witnesses["compat"] = {"k": k, "m": m, "n": n}

    # (2) inclusions commute with diagrams padded by through strands
    for m in span:
        words = words_by_diagram(m)
        rho_m = all_diagram_matrices(chain.modules[m])
        for n in range(m + 1, chain.N_max + 1):
            inc = chain.inclusion(m, n)
            for a in enumerate_diagrams(m):
                lhs = linalg.matmul(rep_of_word(chain.modules[n], words[a]), inc)
                rhs = linalg.matmul(inc, rho_m[a])
                if not linalg.mat_eq(lhs, rhs):
                    report.equivariance_ok = False
                    report.witnesses.setdefault("equivariance", {"m": m, "n": n, "a": _diagram_name(a)})
                    break

    # (3) diagrams that agree on the included link states agree after the inclusion
    for n in span:
        rho_n = all_diagram_matrices(chain.modules[n])
        diagrams = enumerate_diagrams(n)
        for m in range(max(chain.N, 1), n + 1):
            included = [include(v, n) for v in all_states(m)]
            groups: dict[tuple, list[Diagram]] = {}
            for a in diagrams:
                groups.setdefault(tuple(act(a, v) for v in included), []).append(a)
            inc = chain.inclusion(m, n)
            failed = False
            for members in groups.values():
                first = linalg.matmul(rho_n[members[0]], inc)
                for b in members[1:]:
                    if not linalg.mat_eq(first, linalg.matmul(rho_n[b], inc)):
                        report.criterion3_ok = False
                        report.witnesses.setdefault("criterion3", {
                            "m": m, "n": n, "a": _diagram_name(members[0]), "b": _diagram_name(b)})
                        failed = True
                        break
                if failed:
                    break
    return report


def check_rank_one(chain: LSChain, seed: int = 0) -> bool:
    """Does the single basis vector ``seed`` of V_N generate the whole chain?

    The generated subspace at each n is closed under the generator matrices
    and contains the images of the subspaces generated at smaller indices.
    """
    spans: dict[int, list] = {}
    for n in range(chain.N, chain.N_max + 1):
        rep = chain.modules[n]
        span = Span(rep.dim)
        start = []
        if n == chain.N and rep.dim:
            start.append([int(j == seed) for j in range(rep.dim)])
        for m, basis in spans.items():
            start.extend(linalg.matvec(chain.inclusion(m, n), b) for b in basis)
        frontier = [v for v in start if span.add(v)]
        while frontier:
            nxt = []
            for x in frontier:
                for i in range(1, n):
                    y = linalg.matvec(rep.generators[i], x)
                    if span.add(y):
                        nxt.append(y)
            frontier = nxt
        if len(span) != rep.dim:
            return False
        spans[n] = span.basis()
    return True


def _pad(vec: Sequence[int], length: int) -> tuple[int, ...]:
    return tuple(vec) + (0,) * (length - len(vec))


def check_filtration_stability(profiles: Sequence[FiltrationProfile], p: int) -> bool:
    """Are the entries dim H_k(R_q), q >= p, the same for every n in the chain?

    Profiles must share k and cover consecutive n; a missing top entry
    (R_q empty because 2q > n) counts as zero.
    """
    if not profiles:
        return True
    profiles = sorted(profiles, key=lambda f: f.n)
    if len({f.k for f in profiles}) > 1:
        raise ValueError("profiles mix homological degrees")
    ns = [f.n for f in profiles]
    if ns != list(range(ns[0], ns[0] + len(ns))):
        raise ValueError("profiles must cover consecutive n")
    width = max(len(f.betti) for f in profiles)
    tails = {_pad(f.betti, width)[p - 1:] for f in profiles}
    return len(tails) == 1


@dataclass
class FsirsReport:
    p: int
    k: int
    mult: dict[int, list[int]]
    surviving: dict[int, list[int]]
    stable: bool
    filtration_stable: bool | None
    problems: list[str]

    @property
    def ok(self) -> bool:
        return self.stable and not self.problems

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "mult": {str(n): m for n, m in self.mult.items()},
            "surviving": {str(n): s for n, s in self.surviving.items()},
            "stable": self.stable,
            "filtration_stable": self.filtration_stable,
            "problems": self.problems,
            "pass": self.ok,
        }


def _trim(vec: Sequence[int]) -> tuple[int, ...]:
    vec = list(vec)
    while vec and vec[-1] == 0:
        vec.pop()
    return tuple(vec)


def verify_fsirs(spaces: Sequence, p: int, k: int) -> FsirsReport:
    """Decompose H_k of every space, delete the V_{n,q} with q < p, and check
    the surviving multiplicities are the same at every n."""
    problems: list[str] = []
    mult: dict[int, list[int]] = {}
    surviving: dict[int, list[int]] = {}
    profiles = []
    for space in sorted(spaces, key=lambda s: s.n):
        n = space.n
        if n in mult:
            problems.append(f"n={n}: more than one space")
            continue
        bad = relation_violations(space)
        if bad:
            problems.append(f"n={n}: relations fail ({bad[0]})")
            continue
        if {c for c in full_intersection(space) if c != BASE}:
            problems.append(f"n={n}: full intersection larger than the basepoint")
            continue
        try:
            dec = decompose(homology_rep(space, k))
        except DecompositionError as exc:
            problems.append(f"n={n}: {exc}")
            continue
        if not dec.consistent:
            problems.append(f"n={n}: decomposition does not account for the whole dimension")
        quotient = grothendieck_quotient(dec, range(1, min(p, n // 2 + 1)))
        mult[n] = list(dec.mult)
        surviving[n] = list(quotient.mult[p - 1:])
        profiles.append(filtration(space, k))
    stable = len({_trim(s) for s in surviving.values()}) <= 1
    filtration_stable = None
    if profiles:
        try:
            filtration_stable = check_filtration_stability(profiles, p)
        except ValueError as exc:
            problems.append(str(exc))
    return FsirsReport(p, k, mult, surviving, stable, filtration_stable, problems)
