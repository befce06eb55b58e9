"""Compositions, the dimension numbers d(n, p), the coefficients d^r_lambda,
and the multiplicity calculator for filtration profiles."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

MAX_COMPOSITION_TOTAL = 20


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if any(x < 1 for x in self.parts):
            raise ValueError(f"composition parts must be positive: {self.parts}")

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def rows(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class FiltrationProfile:
    n: int
    k: int
    betti: tuple[int, ...]  # betti[p-1] = dim H_k(R_p)

    def __post_init__(self):
        object.__setattr__(self, "betti", tuple(self.betti))
        if self.n < 1:
            raise ValueError("n must be positive")
        if len(self.betti) != self.n // 2:
            raise ValueError(f"profile for n={self.n} needs {self.n // 2} entries, got {len(self.betti)}")
        if any(b < 0 for b in self.betti):
            raise ValueError("betti numbers are non-negative")


@dataclass(frozen=True)
class Multiplicities:
    n: int
    mult: tuple[int, ...]  # mult[p-1] = multiplicity of V_{n,p}

    @property
    def realizable(self) -> bool:
        return all(m >= 0 for m in self.mult)

    def to_json(self) -> dict:
        return {"n": self.n, "mult": list(self.mult), "realizable": self.realizable}


@lru_cache(maxsize=None)
def _compositions(m: int) -> tuple[tuple[int, ...], ...]:
    if m == 0:
        return ((),)
    out = []
    for first in range(1, m + 1):
        for rest in _compositions(m - first):
            out.append((first,) + rest)
    # more parts first, then reverse-lexicographic: (1,1,1), (2,1), (1,2), (3)
    out.sort(key=lambda c: (-len(c), tuple(-x for x in c)))
    return tuple(out)


def compositions(m: int) -> list[Composition]:
    if m < 1:
        raise ValueError("m must be positive")
    if m > MAX_COMPOSITION_TOTAL:
        raise ValueError(f"m={m} exceeds the enumeration bound {MAX_COMPOSITION_TOTAL}")
    return [Composition(c) for c in _compositions(m)]


def d(n: int, p: int) -> int:
    """dim V_{n,p}; zero outside 0 <= 2p <= n."""
    if p < 0 or 2 * p > n:
        return 0
    if p == 0:
        return 1
    return math.comb(n, p) - math.comb(n, p - 1)


def d_lambda(r: int, lam: Composition | tuple[int, ...]) -> int:
    parts = lam.parts if isinstance(lam, Composition) else tuple(lam)
    out = 1
    used = 0
    for part in parts:
        out *= d(r - 2 * used, part)
        used += part
    return out


def check_hddr(r: int, t: int, mu: Composition | tuple[int, ...]) -> bool:
    """Peeling the first part off: d^r_{(t, mu)} == d(r, t) * d^{r-2t}_mu."""
    parts = mu.parts if isinstance(mu, Composition) else tuple(mu)
    return d_lambda(r, (t,) + parts) == d(r, t) * d_lambda(r - 2 * t, parts)


@lru_cache(maxsize=None)
def closed_coefficient(r: int, m: int) -> int:
    """sum over compositions lambda of m of (-1)^rows(lambda) d^r_lambda."""
    return sum((-1) ** lam.rows * d_lambda(r, lam) for lam in compositions(m))


def multiplicity_closed(profile: FiltrationProfile) -> Multiplicities:
    n, betti = profile.n, profile.betti
    top = n // 2
    s = []
    for p in range(1, top + 1):
        total = betti[p - 1]
        for q in range(p + 1, top + 1):
            total += closed_coefficient(n - 2 * p, q - p) * betti[q - 1]
        s.append(total)
    return Multiplicities(n, tuple(s))


def multiplicity_recursive(profile: FiltrationProfile) -> Multiplicities:
    n, betti = profile.n, profile.betti
    top = n // 2
    s = [0] * (top + 1)
    for p in range(top, 0, -1):
        s[p] = betti[p - 1] - sum(d(n - 2 * p, q - p) * s[q] for q in range(p + 1, top + 1))
    return Multiplicities(n, tuple(s[1:]))


def profile_of_sum(n: int, mult: tuple[int, ...] | list[int], k: int = 0) -> FiltrationProfile:
    """Profile a direct sum of standards would have: betti_p = sum_{q>=p} m_q d(n-2p, q-p)."""
    top = n // 2
    betti = [sum(mult[q - 1] * d(n - 2 * p, q - p) for q in range(p, top + 1)) for p in range(1, top + 1)]
    return FiltrationProfile(n, k, tuple(betti))
