"""Link states and the action of TL_n diagrams on them.

A link state on ``n`` points has ``p`` non-crossing cups and ``n - 2p``
defects, with no defect nested under a cup.  ``sites[i]`` is ``-1`` for a
defect and the (0-based) partner position for a cup end, so tuple order puts
defects before cups as required for the canonical basis order.

Convention for the action: the state is attached to the bottom boundary of
the diagram and the result is read off the top boundary.  With ``compose(a,
b)`` meaning "a stacked above b" this gives a left action,
``act(compose(a, b), v) == act(a, act(b, v))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .diagram import Diagram

DEFECT = -1


def _valid_sites(sites: Sequence[int]) -> bool:
    n = len(sites)
    for i, j in enumerate(sites):
        if j == DEFECT:
            continue
        if not 0 <= j < n or j == i or sites[j] != i:
            return False
    # cups may not cross and defects may not sit under a cup: scan with a stack
    stack: list[int] = []
    for i, j in enumerate(sites):
        if j == DEFECT:
            if stack:
                return False
        elif j > i:
            stack.append(j)
        elif not stack or stack.pop() != i:
            return False
    return True


@dataclass(frozen=True, order=True)
class LinkState:
    n: int
    sites: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sites", tuple(self.sites))
        if self.n < 1 or len(self.sites) != self.n:
            raise ValueError(f"sites must have length n={self.n}")
        if not _valid_sites(self.sites):
            raise ValueError(f"not a link state: {self.sites}")

    @classmethod
    def from_cups(cls, n: int, cups: Iterable[tuple[int, int]]) -> "LinkState":
        """Build from 1-based cup endpoints; every other site is a defect."""
        sites = [DEFECT] * n
        for i, j in cups:
            sites[i - 1], sites[j - 1] = j - 1, i - 1
        return cls(n, tuple(sites))

    @classmethod
    def from_word(cls, word: str) -> "LinkState":
        """Parse the bracket notation used by ``str``: ``(`` ``)`` for cups, ``|`` for defects."""
        sites = [DEFECT] * len(word)
        stack: list[int] = []
        for i, ch in enumerate(word):
            if ch == "(":
                stack.append(i)
            elif ch == ")":
                if not stack:
                    raise ValueError(f"unbalanced link state {word!r}")
                j = stack.pop()
                sites[i], sites[j] = j, i
            elif ch != "|":
                raise ValueError(f"bad character {ch!r} in link state")
        if stack:
            raise ValueError(f"unbalanced link state {word!r}")
        return cls(len(word), tuple(sites))

    @property
    def p(self) -> int:
        return sum(1 for j in self.sites if j != DEFECT) // 2

    def cups(self) -> list[tuple[int, int]]:
        return [(i + 1, j + 1) for i, j in enumerate(self.sites) if j > i]

    def defects(self) -> list[int]:
        return [i + 1 for i, j in enumerate(self.sites) if j == DEFECT]

    def word(self) -> str:
        return "".join("|" if j == DEFECT else ("(" if j > i else ")") for i, j in enumerate(self.sites))

    def __str__(self) -> str:
        return self.word()


class _Zero:
    """The absorbing zero of a standard module."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO"

    def __reduce__(self):
        return (_Zero, ())


ZERO = _Zero()


def dim_standard(n: int, p: int) -> int:
    if p < 0 or 2 * p > n:
        return 0
    return math.comb(n, p) - (math.comb(n, p - 1) if p >= 1 else 0)


def _states(n: int, p: int) -> Iterable[list[int]]:
    # position 0 is either a defect (then nothing to its right may close over it)
    # or opens a cup closing at some odd offset
    if n == 0:
        if p == 0:
            yield []
        return
    if p < 0 or 2 * p > n:
        return
    for rest in _states(n - 1, p):
        yield [DEFECT] + [j + 1 if j != DEFECT else DEFECT for j in rest]
    if p == 0:
        return
    for k in range(1, n, 2):
        inner_cups = (k - 1) // 2
        for inner in _cup_only(k - 1, inner_cups):
            for rest in _states(n - k - 1, p - 1 - inner_cups):
                sites = [k] + [j + 1 for j in inner] + [0]
                sites += [j + k + 1 if j != DEFECT else DEFECT for j in rest]
                yield sites


def _cup_only(m: int, p: int) -> Iterable[list[int]]:
    """Perfect non-crossing matchings of ``m`` points (all cups)."""
    if m == 0:
        yield []
        return
    for k in range(1, m, 2):
        for inner in _cup_only(k - 1, (k - 1) // 2):
            for rest in _cup_only(m - k - 1, (m - k - 1) // 2):
                yield [k] + [j + 1 for j in inner] + [0] + [j + k + 1 for j in rest]


def enumerate_states(n: int, p: int) -> list[LinkState]:
    """All (n, p) link states in canonical order."""
    if n < 1:
        raise ValueError("n must be positive")
    if p < 0 or 2 * p > n:
        raise ValueError(f"need 0 <= 2p <= n, got n={n}, p={p}")
    return sorted(LinkState(n, tuple(s)) for s in _states(n, p))


def all_states(n: int) -> list[LinkState]:
    """The set M_n: every link state with at least one cup."""
    return [v for p in range(1, n // 2 + 1) for v in enumerate_states(n, p)]


def act(a: Diagram, v: LinkState) -> LinkState:
    if a.n != v.n:
        raise ValueError(f"diagram on {a.n} strands cannot act on a state of size {v.n}")
    n = a.n
    sites = [DEFECT] * n
    done = [False] * n
    for t in range(n):
        if done[t]:
            continue
        q = a.partner[t]
        while True:
            if q < n:
                sites[t], sites[q] = q, t
                done[t] = done[q] = True
                break
            j = q - n
            k = v.sites[j]
            if k == DEFECT:
                done[t] = True
                break
            q = a.partner[n + k]
    return LinkState(n, tuple(sites))


def act_standard(a: Diagram, v, p: int):
    """Action on V_{n,p}: anything that gains cups becomes ``ZERO``."""
    if v is ZERO:
        return ZERO
    if v.p != p:
        raise ValueError(f"state has {v.p} cups, expected {p}")
    w = act(a, v)
    return ZERO if w.p > p else w


def include(v: LinkState, n_target: int) -> LinkState:
    """Append ``n_target - n`` defects on the right."""
    if n_target < v.n:
        raise ValueError("cannot include into fewer points")
    return LinkState(n_target, v.sites + (DEFECT,) * (n_target - v.n))


def back_to_back(v: LinkState, w: LinkState) -> Diagram:
    """The diagram with ``v`` on top, ``w`` reflected underneath, defects joined in order."""
    if v.n != w.n or v.p != w.p:
        raise ValueError("back_to_back needs states with equal n and p")
    n = v.n
    partner = [0] * (2 * n)
    for i, j in enumerate(v.sites):
        if j != DEFECT:
            partner[i] = j
    for i, j in enumerate(w.sites):
        if j != DEFECT:
            partner[n + i] = n + j
    for top, bottom in zip(v.defects(), w.defects()):
        partner[top - 1], partner[n + bottom - 1] = n + bottom - 1, top - 1
    return Diagram(n, tuple(partner))
