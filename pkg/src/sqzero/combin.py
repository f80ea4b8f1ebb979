"""
Involutions, orbit dimensions, conjugating permutations and reduced words.

Conventions: permutations are 1-based and composed as functions,
``(s*t)(x) == s(t(x))``.  A word ``a1, ..., al`` stands for the product
``s_a1 * ... * s_al``, so its last letter acts first.  A permutation
matrix sends ``e_j`` to ``e_sigma(j)``, hence conjugation moves the entry
at ``(i, j)`` to ``(sigma(i), sigma(j))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _perms
from typing import Iterator, Sequence

__all__ = [
    "Permutation", "Involution", "ReducedWord", "UpperMatrix",
    "NotUpperTriangular", "NotBlockSupported", "RankTooLarge",
    "enumerate_involutions", "n_matrix", "orbit_dim", "orbit_dim_arcs",
    "arc_diagram", "pi_w", "length", "reduced_word", "all_reduced_words",
    "conjugate", "minimal_involution", "corner", "block_flag_permutation",
    "conjugating_permutations", "resolution_chain", "count_involutions",
]


class NotUpperTriangular(ValueError):
    """Conjugation moved an entry onto or below the diagonal."""


class NotBlockSupported(ValueError):
    """The involution is not a full-rank matrix in the upper-right block."""


class RankTooLarge(ValueError):
    """Rank m with 2m > n."""


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``1..n`` in one-line notation."""
    one_line: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "one_line", tuple(int(a) for a in self.one_line))
        if sorted(self.one_line) != list(range(1, len(self.one_line) + 1)):
            raise ValueError(f"not a permutation: {self.one_line}")

    @property
    def n(self) -> int:
        return len(self.one_line)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, n: int, i: int) -> "Permutation":
        if not 1 <= i < n:
            raise IndexError(f"s_{i} is not a simple reflection of S_{n}")
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(tuple(w))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def from_word(cls, n: int, letters: Sequence[int]) -> "Permutation":
        w = list(range(1, n + 1))
        # s_a1 * ... * s_al: right-multiplying by s_a swaps positions a, a+1
        for a in letters:
            if not 1 <= a < n:
                raise IndexError(f"s_{a} is not a simple reflection of S_{n}")
            w[a - 1], w[a] = w[a], w[a - 1]
        return cls(tuple(w))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        text = text.strip()
        if "," in text or " " in text:
            parts = [p for p in re.split(r"[,\s]+", text) if p]
        else:
            parts = list(text)
        return cls(tuple(int(p) for p in parts))

    def __call__(self, i: int) -> int:
        return self.one_line[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.n != self.n:
            raise ValueError("permutations of different sizes")
        return Permutation(tuple(self.one_line[k - 1] for k in other.one_line))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.one_line, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def length(self) -> int:
        w = self.one_line
        return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])

    def right_descents(self) -> list[int]:
        """``i`` with ``l(self * s_i) < l(self)``."""
        w = self.one_line
        return [i for i in range(1, self.n) if w[i - 1] > w[i]]

    def left_descents(self) -> list[int]:
        """``i`` with ``l(s_i * self) < l(self)``."""
        return self.inverse().right_descents()

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.one_line, start=1))

    def __str__(self):
        return ",".join(map(str, self.one_line))

    def compact(self) -> str:
        """Digits run together, as in ``132``; only sensible for n <= 9."""
        return "".join(map(str, self.one_line))


def length(pi: Permutation) -> int:
    return pi.length()


@dataclass(frozen=True)
class ReducedWord:
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(a) for a in self.letters))

    @classmethod
    def parse(cls, text: str) -> "ReducedWord":
        text = text.strip()
        if not text or text in ("()", "[]", "-"):
            return cls(())
        return cls(tuple(int(p) for p in re.split(r"[,\s]+", text.strip("()[]")) if p))

    def product(self, n: int) -> Permutation:
        return Permutation.from_word(n, self.letters)

    def is_reduced(self, n: int) -> bool:
        return self.product(n).length() == len(self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        return ",".join(map(str, self.letters))


def reduced_word(pi: Permutation) -> ReducedWord:
    """Peel the smallest left descent each time; gives the lexicographically smallest reduced word."""
    w = list(pi.one_line)
    pos = {v: k for k, v in enumerate(w)}
    letters = []
    while True:
        for i in range(1, len(w)):
            if pos[i] > pos[i + 1]:
                break
        else:
            return ReducedWord(tuple(letters))
        letters.append(i)
        # s_i * w swaps the values i and i+1
        a, b = pos[i], pos[i + 1]
        w[a], w[b] = i + 1, i
        pos[i], pos[i + 1] = b, a


def all_reduced_words(pi: Permutation, limit: int | None = None) -> list[ReducedWord]:
    """Every reduced word of ``pi`` in lexicographic order, optionally the first ``limit``."""
    out: list[ReducedWord] = []

    def walk(w: tuple[int, ...], prefix: list[int]) -> bool:
        if limit is not None and len(out) >= limit:
            return False
        p = Permutation(w)
        desc = p.left_descents()
        if not desc:
            out.append(ReducedWord(tuple(prefix)))
            return True
        for i in desc:
            nxt = tuple(i + 1 if v == i else i if v == i + 1 else v for v in w)
            prefix.append(i)
            walk(nxt, prefix)
            prefix.pop()
            if limit is not None and len(out) >= limit:
                return False
        return True

    walk(pi.one_line, [])
    return out


@dataclass(frozen=True)
class Involution:
    """A product of disjoint transpositions ``(i1,j1)...(im,jm)`` with ``i1 < ... < im`` and ``ik < jk``."""
    n: int
    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        pairs = tuple(sorted((min(a, b), max(a, b)) for a, b in self.pairs))
        ends = [e for p in pairs for e in p]
        if len(set(ends)) != len(ends) or any(a == b for a, b in pairs):
            raise ValueError(f"transpositions are not disjoint: {self.pairs}")
        if ends and (min(ends) < 1 or max(ends) > self.n):
            raise ValueError(f"index out of range 1..{self.n}: {self.pairs}")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def parse(cls, text: str, n: int) -> "Involution":
        s = re.sub(r"\s+", "", text)
        if s in ("id", "()", "e", ""):
            return cls(n, ())
        if not re.fullmatch(r"(\(\d+,\d+\))+", s):
            raise ValueError(f"cannot parse involution {text!r}; expected (i,j)(k,l)... or id")
        pairs = [(int(a), int(b)) for a, b in re.findall(r"\((\d+),(\d+)\)", s)]
        return cls(n, tuple(pairs))

    @property
    def rank(self) -> int:
        return len(self.pairs)

    def fixed_points(self) -> list[int]:
        moved = {e for p in self.pairs for e in p}
        return [k for k in range(1, self.n + 1) if k not in moved]

    def as_permutation(self) -> Permutation:
        w = list(range(1, self.n + 1))
        for a, b in self.pairs:
            w[a - 1], w[b - 1] = b, a
        return Permutation(tuple(w))

    def is_identity(self) -> bool:
        return not self.pairs

    def __str__(self):
        if not self.pairs:
            return "id"
        return "".join(f"({a},{b})" for a, b in self.pairs)


@dataclass(frozen=True)
class UpperMatrix:
    """A strictly upper-triangular 0/1 matrix given by the positions of its ones."""
    n: int
    entries: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "entries", frozenset(self.entries))
        for i, j in self.entries:
            if not (1 <= i < j <= self.n):
                raise NotUpperTriangular(f"entry {(i, j)} is not strictly upper-triangular")

    def squares_to_zero(self) -> bool:
        rows = {i for i, _ in self.entries}
        return not any(j in rows for _, j in self.entries)

    def __str__(self):
        return "\n".join(
            " ".join("1" if (i, j) in self.entries else "0" for j in range(1, self.n + 1))
            for i in range(1, self.n + 1))


def n_matrix(w: Involution) -> UpperMatrix:
    return UpperMatrix(w.n, frozenset(w.pairs))


def conjugate(sigma: Permutation, N: UpperMatrix) -> UpperMatrix:
    if sigma.n != N.n:
        raise ValueError("size mismatch")
    moved = []
    for i, j in N.entries:
        a, b = sigma(i), sigma(j)
        if a >= b:
            raise NotUpperTriangular(f"{(i, j)} -> {(a, b)}")
        moved.append((a, b))
    return UpperMatrix(N.n, frozenset(moved))


def _matchings(points: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    if not points:
        yield ()
        return
    first, rest = points[0], points[1:]
    yield from _matchings(rest)
    for k, other in enumerate(rest):
        remaining = rest[:k] + rest[k + 1:]
        for tail in _matchings(remaining):
            yield ((first, other),) + tail


@lru_cache(maxsize=None)
def enumerate_involutions(n: int) -> tuple[Involution, ...]:
    """All involutions of S_n ordered by rank, then lexicographically by pairs."""
    if n < 1:
        raise ValueError("n must be positive")
    found = {Involution(n, m) for m in _matchings(tuple(range(1, n + 1)))}
    return tuple(sorted(found, key=lambda w: (w.rank, w.pairs)))


def count_involutions(n: int) -> int:
    """Telephone numbers via a(n) = a(n-1) + (n-1) a(n-2)."""
    a, b = 1, 1
    for k in range(2, n + 1):
        a, b = b, b + (k - 1) * a
    return b


def orbit_dim(w: Involution) -> int:
    """mn + sum(i_k - j_k) - sum_{k>=2} r_k, r_k counting earlier j's below j_k and below i_k."""
    m, n = w.rank, w.n
    total = m * n + sum(i - j for i, j in w.pairs)
    for k in range(1, m):
        ik, jk = w.pairs[k]
        earlier = [j for _, j in w.pairs[:k]]
        total -= sum(1 for j in earlier if j < jk) + sum(1 for j in earlier if j < ik)
    return total


def orbit_dim_arcs(w: Involution) -> int:
    """m(n-m) minus arc crossings minus, for each fixed point, the arcs passing over it."""
    m, n = w.rank, w.n
    crossings = sum(1 for a, b in w.pairs for c, d in w.pairs if a < c < b < d)
    covers = sum(1 for f in w.fixed_points() for a, b in w.pairs if a < f < b)
    return m * (n - m) - crossings - covers


def arc_diagram(w: Involution) -> str:
    """One character per point: a letter shared by the two ends of each arc, '.' for fixed points."""
    cells = ["."] * w.n
    for k, (a, b) in enumerate(w.pairs):
        ch = chr(ord("a") + k) if k < 26 else "*"
        cells[a - 1] = cells[b - 1] = ch
    return "".join(cells)


def minimal_involution(n: int, m: int) -> Involution:
    """The closed orbit of rank m: (1, n-m+1)(2, n-m+2)...(m, n)."""
    if m < 0 or 2 * m > n:
        raise RankTooLarge(f"no rank {m} square-zero matrices of size {n}")
    return Involution(n, tuple((k, n - m + k) for k in range(1, m + 1)))


def corner(n: int, m: int) -> list[tuple[int, int]]:
    """Coordinates of the linear space closing the minimal orbit: i <= m, n-m+i <= j <= n."""
    if m < 0 or 2 * m > n:
        raise RankTooLarge(f"no rank {m} square-zero matrices of size {n}")
    return [(i, j) for i in range(1, m + 1) for j in range(n - m + i, n + 1)]


def pi_w(w: Involution) -> Permutation:
    """One-line ``i1..im, fixed points in order, j1..jm``."""
    return Permutation(tuple(i for i, _ in w.pairs) + tuple(w.fixed_points())
                       + tuple(j for _, j in w.pairs))


def conjugating_permutations(w: Involution, shortest: bool = False) -> list[Permutation]:
    """All sigma with conjugate(sigma, N_{w_m}) == N_w, sorted; optionally only those of minimal length."""
    m, n = w.rank, w.n
    fixed = w.fixed_points()
    out = []
    for order in _perms(w.pairs):
        for mid in _perms(fixed):
            out.append(Permutation(tuple(i for i, _ in order) + mid + tuple(j for _, j in order)))
    out.sort(key=lambda p: (p.length(), p.one_line))
    if shortest and out:
        best = out[0].length()
        out = [p for p in out if p.length() == best]
    return out


def resolution_chain(word: ReducedWord, n: int, m: int) -> list[UpperMatrix]:
    """
    Matrices met while building a resolution along ``word``: start at N_{w_m}
    and conjugate by the letters from last to first.  Raises
    :class:`NotUpperTriangular` if some step leaves the upper triangle.
    """
    N = n_matrix(minimal_involution(n, m))
    chain = [N]
    for a in reversed(word.letters):
        N = conjugate(Permutation.simple(n, a), N)
        chain.append(N)
    return chain


def block_flag_permutation(w: Involution, n_block: int) -> Permutation:
    """
    Reverse the rows of the upper-right ``n_block`` square of N_w and read off
    a permutation: a pair ``(i, j)`` gives ``pi(n+1-i) = j - n``.
    """
    n = n_block
    if w.n != 2 * n or w.rank != n or any(not (i <= n < j) for i, j in w.pairs):
        raise NotBlockSupported(f"{w} is not a full-rank matrix in the upper-right {n}x{n} block")
    out = [0] * n
    for i, j in w.pairs:
        out[n - i] = j - n
    return Permutation(tuple(out))


def block_involutions(n_block: int) -> list[Involution]:
    """Full-rank involutions of S_2n supported in the upper-right block, ordered by their pairs."""
    n = n_block
    return sorted((Involution(2 * n, tuple((i, n + p) for i, p in enumerate(perm, start=1)))
                   for perm in _perms(range(1, n + 1))), key=lambda w: w.pairs)
