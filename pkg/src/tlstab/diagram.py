"""Temperley-Lieb diagrams at loop value 1.

A diagram on ``n`` strands is a planar perfect matching of ``2n`` boundary
points.  Internally the points are numbered ``0..n-1`` for the top row (left
to right) and ``n..2n-1`` for the bottom row (left to right), and the matching
is stored as an involution ``partner``.  ``compose(a, b)`` stacks ``a`` on top
of ``b``; closed loops are counted but otherwise ignored, since they evaluate
to 1.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from typing import Iterable, Sequence

DEFAULT_MAX_N = 8


class ResourceLimitError(ValueError):
    """Raised when an enumeration would exceed the configured size bound."""


def max_enumeration_n() -> int:
    return int(os.environ.get("TL_MAX_N", DEFAULT_MAX_N))


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def _cyclic_position(point: int, n: int) -> int:
    # top 1..n, then bottom n..1
    return point if point < n else 3 * n - 1 - point


def is_planar_matching(partner: Sequence[int], n: int) -> bool:
    if len(partner) != 2 * n:
        return False
    if not all(0 <= partner[i] < 2 * n and partner[i] != i and partner[partner[i]] == i
               for i in range(2 * n)):
        return False
    order = sorted(range(2 * n), key=lambda p: _cyclic_position(p, n))
    pos = {p: _cyclic_position(p, n) for p in order}
    stack: list[int] = []
    for p in order:
        q = partner[p]
        if pos[q] > pos[p]:
            stack.append(q)
        elif not stack or stack.pop() != p:
            return False
    return True


def _point_name(point: int, n: int) -> str:
    return f"t{point + 1}" if point < n else f"b{point - n + 1}"


def _point_key(point: int, n: int) -> tuple[int, int]:
    return (0, point) if point < n else (1, point - n)


@dataclass(frozen=True, eq=False)
class Diagram:
    n: int
    partner: tuple[int, ...]
    loop_count: int = field(default=0)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a diagram needs at least one strand")
        if not is_planar_matching(self.partner, self.n):
            raise ValueError(f"not a planar perfect matching: {self.partner}")

    def __eq__(self, other):
        if not isinstance(other, Diagram):
            return NotImplemented
        return self.n == other.n and self.partner == other.partner

    def __hash__(self):
        return hash((self.n, self.partner))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[str, str]], loop_count: int = 0) -> "Diagram":
        """Build from pairs of point names such as ``("t1", "b3")``."""
        partner = [-1] * (2 * n)
        for x, y in pairs:
            i, j = _parse_point(x, n), _parse_point(y, n)
            if partner[i] != -1 or partner[j] != -1:
                raise ValueError(f"point matched twice in pair {x}-{y}")
            partner[i], partner[j] = j, i
        if -1 in partner:
            raise ValueError("not every boundary point is matched")
        return cls(n, tuple(partner), loop_count)

    def pairs(self) -> list[tuple[int, int]]:
        """Matched pairs in canonical (sorted) order, as internal point indices."""
        out = []
        for p in range(2 * self.n):
            q = self.partner[p]
            a, b = sorted((p, q), key=lambda x: _point_key(x, self.n))
            if a == p:
                out.append((a, b))
        out.sort(key=lambda ab: (_point_key(ab[0], self.n), _point_key(ab[1], self.n)))
        return out

    def named_pairs(self) -> list[tuple[str, str]]:
        return [(_point_name(a, self.n), _point_name(b, self.n)) for a, b in self.pairs()]

    def sort_key(self) -> tuple:
        return tuple((_point_key(a, self.n), _point_key(b, self.n)) for a, b in self.pairs())

    def through_strands(self) -> int:
        return sum(1 for p in range(self.n) if self.partner[p] >= self.n)

    def top_cups(self) -> list[tuple[int, int]]:
        """Cups on the top row as 1-based position pairs."""
        return [(p + 1, q + 1) for p in range(self.n) for q in [self.partner[p]] if p < q < self.n]

    def bottom_cups(self) -> list[tuple[int, int]]:
        n = self.n
        return [(p - n + 1, q - n + 1) for p in range(n, 2 * n) for q in [self.partner[p]] if p < q]

    def render(self) -> str:
        """Three-line ASCII picture: top row, through strands, bottom row."""
        n = self.n

        def row(points: range) -> str:
            chars = []
            for p in points:
                q = self.partner[p]
                same_row = (q < n) == (p < n)
                chars.append("|" if not same_row else ("(" if q > p else ")"))
            return " ".join(chars)

        throughs = [f"t{p + 1}-b{self.partner[p] - n + 1}" for p in range(n) if self.partner[p] >= n]
        return "\n".join([
            "top    " + row(range(n)),
            "       " + (" ".join(throughs) if throughs else "(no through strands)"),
            "bottom " + row(range(n, 2 * n)),
        ])

    def __repr__(self) -> str:
        body = ", ".join(f"{a}-{b}" for a, b in self.named_pairs())
        return f"Diagram(n={self.n}, {{{body}}})"


def _parse_point(name: str, n: int) -> int:
    side, idx = name[0], int(name[1:])
    if side not in "tb" or not 1 <= idx <= n:
        raise ValueError(f"bad boundary point {name!r} for n={n}")
    return idx - 1 if side == "t" else n + idx - 1


@dataclass(frozen=True)
class Word:
    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for i in self.letters:
            if not 1 <= i <= self.n - 1:
                raise ValueError(f"generator index {i} out of range for n={self.n}")


def identity(n: int) -> Diagram:
    if n < 1:
        raise ValueError("n must be positive")
    return Diagram(n, tuple(list(range(n, 2 * n)) + list(range(n))))


def generator(n: int, i: int) -> Diagram:
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for n={n}")
    partner = list(range(n, 2 * n)) + list(range(n))
    a, b = i - 1, i
    partner[a], partner[b] = b, a
    partner[n + a], partner[n + b] = n + b, n + a
    return Diagram(n, tuple(partner))


def compose(a: Diagram, b: Diagram) -> Diagram:
    """Stack ``a`` above ``b`` and trace strands through the middle row."""
    if a.n != b.n:
        raise ValueError(f"cannot compose diagrams on {a.n} and {b.n} strands")
    n = a.n
    pa, pb = a.partner, b.partner
    result = [-1] * (2 * n)
    seen = [False] * n
    for start in range(2 * n):
        if result[start] != -1:
            continue
        in_a = start < n
        p = pa[start] if in_a else pb[start]
        while True:
            if in_a:
                if p < n:
                    end = p
                    break
                m = p - n
                seen[m] = True
                in_a, p = False, pb[m]
            else:
                if p >= n:
                    end = p
                    break
                m = p
                seen[m] = True
                in_a, p = True, pa[n + m]
        result[start], result[end] = end, start
    loops = 0
    for m in range(n):
        if seen[m]:
            continue
        loops += 1
        cur = m
        while not seen[cur]:
            seen[cur] = True
            nxt = pa[n + cur] - n  # stays in the middle row for a closed loop
            seen[nxt] = True
            cur = pb[nxt]
    return Diagram(n, tuple(result), a.loop_count + b.loop_count + loops)


def eval_word(w: Word) -> Diagram:
    return reduce(compose, (generator(w.n, i) for i in w.letters), identity(w.n))


def pad(a: Diagram, n: int) -> Diagram:
    """The image of ``a`` under TL_m -> TL_n: extra through strands on the right."""
    m = a.n
    if n < m:
        raise ValueError("cannot pad to fewer strands")

    def lift(p: int) -> int:
        return p if p < m else p - m + n

    partner = [0] * (2 * n)
    for p in range(2 * m):
        partner[lift(p)] = lift(a.partner[p])
    for j in range(m, n):
        partner[j], partner[n + j] = n + j, j
    return Diagram(n, tuple(partner), a.loop_count)


def _noncrossing_matchings(points: list[int]) -> Iterable[list[tuple[int, int]]]:
    if not points:
        yield []
        return
    first = points[0]
    for k in range(1, len(points), 2):
        inside, outside = points[1:k], points[k + 1:]
        for left in _noncrossing_matchings(inside):
            for right in _noncrossing_matchings(outside):
                yield [(first, points[k])] + left + right


def enumerate_diagrams(n: int) -> list[Diagram]:
    """All ``catalan(n)`` diagrams on ``n`` strands in canonical order."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_enumeration_n():
        raise ResourceLimitError(f"n={n} exceeds TL_MAX_N={max_enumeration_n()}")
    cyclic = list(range(n)) + list(range(2 * n - 1, n - 1, -1))
    out = []
    for matching in _noncrossing_matchings(cyclic):
        partner = [0] * (2 * n)
        for x, y in matching:
            partner[x], partner[y] = y, x
        out.append(Diagram(n, tuple(partner)))
    out.sort(key=Diagram.sort_key)
    return out


def words_by_diagram(n: int) -> dict[Diagram, tuple[int, ...]]:
    """A shortest word for every diagram, found breadth-first from the identity.

    Words are grown on the left, so ``eval_word(word) == diagram``.  The result
    is shared between callers and must not be modified.
    """
    if n > max_enumeration_n():
        raise ResourceLimitError(f"n={n} exceeds TL_MAX_N={max_enumeration_n()}")
    return _words_by_diagram(n)


@lru_cache(maxsize=None)
def _words_by_diagram(n: int) -> dict[Diagram, tuple[int, ...]]:
    start = identity(n)
    words = {start: ()}
    frontier = [start]
    gens = [generator(n, i) for i in range(1, n)]
    while frontier:
        nxt = []
        for d in frontier:
            for i, g in enumerate(gens, start=1):
                e = compose(g, d)
                if e not in words:
                    words[e] = (i,) + words[d]
                    nxt.append(e)
        frontier = nxt
    return words
