"""
Equivariant classes of orbit closures and orbits in the space N of strictly
upper-triangular n x n matrices.

The torus acts on the coordinate ``(i, j)`` of N with weight ``u t_i/t_j``.
Every class is produced the same way: start from the minimal orbit of the
same rank, whose closure is a coordinate subspace, run an operator word
along a reduced word of the conjugating permutation, and multiply back by
the Euler class of N.  The fixed-point sum over a Bott-Samelson type
resolution is provided as an independent check of the fundamental class.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from itertools import product as _cartesian
from typing import Sequence, Union

from .combin import (Involution, Permutation, ReducedWord, conjugate, corner,
                     minimal_involution, n_matrix, orbit_dim, pi_w, reduced_word,
                     resolution_chain)
from .operators import OperatorKind, Theory, TheoryContext, UMode, apply_word
from .ring import LaurentPoly, NotDivisible, RatFunc, VariableContext

__all__ = [
    "ClassKind", "ClassResult", "FixedPoint", "DimensionMismatch", "WordMismatch",
    "coordinate_euler", "coordinate_chern", "euler_class",
    "base_fundamental", "base_characteristic", "compute_class",
    "fixed_points", "localization_pushforward", "csm_lowest_part",
    "theory_context", "check_word",
]


class ClassKind(Enum):
    FUND = "fund"
    CSM = "csm"
    MC = "mc"


class DimensionMismatch(ValueError):
    """Word length plus m(m+1)/2 differs from the orbit dimension."""


class WordMismatch(ValueError):
    """The word does not conjugate the minimal orbit onto the requested one."""


def theory_context(theory: Union[TheoryContext, Theory, str], n: int,
                   u_mode: Union[UMode, str, None] = None) -> TheoryContext:
    if isinstance(theory, TheoryContext):
        if theory.n != n:
            raise ValueError(f"theory context is for n={theory.n}, need n={n}")
        return theory
    return TheoryContext(Theory(theory), n, UMode(u_mode or "keep"))


def _weight(tc: TheoryContext, i: int, j: int) -> LaurentPoly:
    """The character ``u t_i / t_j`` (K-theory) as a Laurent monomial."""
    ctx = tc.vars
    return tc.u() * LaurentPoly.t(ctx, i) * LaurentPoly.t(ctx, j) ** -1


def coordinate_euler(tc: TheoryContext, i: int, j: int) -> LaurentPoly:
    """Euler class of the coordinate line (i, j): ``u + t_i - t_j`` or ``1 - t_j/(u t_i)``."""
    ctx = tc.vars
    if tc.theory is Theory.H:
        return tc.u() + LaurentPoly.t(ctx, i) - LaurentPoly.t(ctx, j)
    return 1 - _weight(tc, i, j) ** -1


def coordinate_chern(tc: TheoryContext, i: int, j: int) -> LaurentPoly:
    """Characteristic class of the line: ``1 + u + t_i - t_j`` or ``1 + y t_j/(u t_i)``."""
    ctx = tc.vars
    if tc.theory is Theory.H:
        return 1 + tc.u() + LaurentPoly.t(ctx, i) - LaurentPoly.t(ctx, j)
    return 1 + tc.y() * _weight(tc, i, j) ** -1


def euler_class(n: int, theory: Union[TheoryContext, str]) -> LaurentPoly:
    tc = theory_context(theory, n)
    acc = LaurentPoly.one(tc.vars)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            acc = acc * coordinate_euler(tc, i, j)
    return acc


def base_fundamental(n: int, m: int, theory: Union[TheoryContext, str]) -> RatFunc:
    """Closure of the minimal rank-m orbit divided by e(N): one inverse Euler factor per corner entry."""
    tc = theory_context(theory, n)
    den = LaurentPoly.one(tc.vars)
    for i, j in corner(n, m):
        den = den * coordinate_euler(tc, i, j)
    return RatFunc(LaurentPoly.one(tc.vars), den)


def base_characteristic(n: int, m: int, theory: Union[TheoryContext, str]) -> RatFunc:
    """
    CSM (H) or motivic Chern (K) class of the minimal orbit over e(N).

    Corner entries off the anti-diagonal ``j = n-m+i`` contribute ``c/e``;
    on the anti-diagonal the coordinate must be nonzero, giving ``c/e - 1``.
    """
    tc = theory_context(theory, n)
    ctx = tc.vars
    num = LaurentPoly.one(ctx)
    den = LaurentPoly.one(ctx)
    for i, j in corner(n, m):
        e = coordinate_euler(tc, i, j)
        c = coordinate_chern(tc, i, j)
        num = num * (c - e if j == n - m + i else c)
        den = den * e
    return RatFunc(num, den)


@dataclass
class ClassResult:
    involution: Involution
    theory: Theory
    kind: ClassKind
    u_mode: UMode
    word: ReducedWord
    value: LaurentPoly
    normalized: RatFunc
    dim: int
    codim: int

    @property
    def n(self) -> int:
        return self.involution.n

    def to_json(self) -> dict:
        return {
            "involution": [list(p) for p in self.involution.pairs],
            "n": self.n,
            "dim": self.dim,
            "codim": self.codim,
            "theory": self.theory.value,
            "kind": self.kind.value,
            "u_mode": self.u_mode.value,
            "word": list(self.word.letters),
            "terms": self.value.to_json(),
        }


def _check_kind(tc: TheoryContext, kind: ClassKind):
    if kind is ClassKind.CSM and tc.theory is not Theory.H:
        raise ValueError("CSM classes live in cohomology; use kind=mc for K-theory")
    if kind is ClassKind.MC and tc.theory is not Theory.K:
        raise ValueError("motivic Chern classes live in K-theory; use kind=csm for cohomology")


def _operator(tc: TheoryContext, kind: ClassKind) -> OperatorKind:
    if kind is ClassKind.FUND:
        return OperatorKind.BETA_H if tc.theory is Theory.H else OperatorKind.BETA_K
    return OperatorKind.A_H if tc.theory is Theory.H else OperatorKind.A_K


def check_word(w: Involution, word: ReducedWord):
    """Raise unless ``word`` drives a resolution from the minimal orbit onto ``w``."""
    n, m = w.n, w.rank
    dim = orbit_dim(w)
    if len(word) + m * (m + 1) // 2 != dim:
        raise DimensionMismatch(
            f"word of length {len(word)} plus {m * (m + 1) // 2} != dim {dim} for {w}")
    if not word.is_reduced(n):
        raise WordMismatch(f"{word} is not reduced")
    chain = resolution_chain(word, n, m)
    if chain[-1] != n_matrix(w):
        raise WordMismatch(f"{word} does not carry the minimal rank-{m} orbit to {w}")


def compute_class(w: Involution, theory: Union[TheoryContext, str], kind: Union[ClassKind, str],
                  word: ReducedWord | Sequence[int] | None = None,
                  u_mode: Union[UMode, str, None] = None) -> ClassResult:
    """
    Fundamental, CSM or motivic Chern class of the orbit (closure) of ``w``.

    >>> from sqzero.combin import Involution
    >>> r = compute_class(Involution(2, ((1, 2),)), "H", "fund")
    >>> str(r.value)
    '1'
    """
    n, m = w.n, w.rank
    tc = theory_context(theory, n, u_mode)
    kind = ClassKind(kind)
    _check_kind(tc, kind)
    if word is None:
        word = reduced_word(pi_w(w))
    elif not isinstance(word, ReducedWord):
        word = ReducedWord(tuple(word))
    check_word(w, word)
    dim = orbit_dim(w)
    codim = n * (n - 1) // 2 - dim
    if kind is ClassKind.FUND:
        base = base_fundamental(n, m, tc)
    else:
        base = base_characteristic(n, m, tc)
    normalized = apply_word(word, base, _operator(tc, kind))
    try:
        value = _times_euler(normalized, tc)
    except NotDivisible:
        raise NotDivisible(f"{kind.value} class of {w} is not a polynomial: internal error") from None
    return ClassResult(w, tc.theory, kind, tc.u_mode, word, value, normalized, dim, codim)


def _times_euler(x: RatFunc, tc: TheoryContext) -> LaurentPoly:
    """``x * e(N)`` as a polynomial; den is cancelled factor by factor before multiplying."""
    n = tc.n
    den = x.den
    kept = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            f = coordinate_euler(tc, i, j)
            unit, core = f.split_unit()
            if not den.is_unit():
                try:
                    den = den.exact_div(core)
                    kept.append(unit)
                    continue
                except NotDivisible:
                    pass
            kept.append(f)
    # multiply small factors first, the big numerator last
    kept.sort(key=len)
    acc = LaurentPoly.one(tc.vars)
    for f in kept:
        acc = acc * f
    return (x.num * acc).exact_div(den)


def csm_lowest_part(result: ClassResult) -> LaurentPoly:
    """The degree-codim part of a cohomological CSM class, which should be the fundamental class."""
    if result.theory is not Theory.H or result.kind is not ClassKind.CSM:
        raise ValueError("lowest-degree part is defined for cohomological CSM classes")
    return result.value.homogeneous_component(result.codim)


# -- fixed-point localization ---------------------------------------------

@dataclass(frozen=True)
class FixedPoint:
    """
    A torus-fixed point of the resolution, indexed by a 0/1 choice per letter.

    ``twist`` is the product of the chosen letters in word order and
    ``factors`` the tangent weights' Euler classes, whose product is ``euler``.
    """
    subword: tuple[int, ...]
    twist: Permutation
    factors: tuple[LaurentPoly, ...] = field(repr=False)
    ctx: VariableContext = field(repr=False, compare=False, default=None)

    @property
    def euler(self) -> LaurentPoly:
        acc = LaurentPoly.one(self.ctx or self.factors[0].ctx)
        for f in self.factors:
            acc = acc * f
        return acc


def _fiber_euler(tc: TheoryContext, a: int) -> LaurentPoly:
    """Euler class of the character ``t_{a+1}/t_a`` (the tangent line at the untwisted point)."""
    ctx = tc.vars
    ta, tb = LaurentPoly.t(ctx, a), LaurentPoly.t(ctx, a + 1)
    if tc.theory is Theory.H:
        return tb - ta
    return 1 - ta * tb ** -1


def fixed_points(word: ReducedWord | Sequence[int], n: int, m: int,
                 theory: Union[TheoryContext, str]) -> list[FixedPoint]:
    tc = theory_context(theory, n)
    letters = word.letters if isinstance(word, ReducedWord) else tuple(word)
    base = [coordinate_euler(tc, i, j) for i, j in corner(n, m)]
    fibers = [_fiber_euler(tc, a) for a in letters]
    out = []
    ident = Permutation.identity(n)
    for bits in _cartesian((0, 1), repeat=len(letters)):
        sigma = ident
        factors = []
        for a, f, b in zip(letters, fibers, bits):
            if b:
                sigma = sigma * Permutation.simple(n, a)
            # weight t_{a+1}/t_a seen through the letters chosen so far (this one included)
            factors.append(f.act(sigma))
        factors.extend(e.act(sigma) for e in base)
        out.append(FixedPoint(bits, sigma, tuple(factors), tc.vars))
    return out


def localization_pushforward(word: ReducedWord | Sequence[int], n: int, m: int,
                             theory: Union[TheoryContext, str]) -> RatFunc:
    """
    Sum of ``1/euler`` over all fixed points of the resolution.

    All reciprocals are put over the least common multiple of the factor
    multisets, so the only gcd is taken once at the end.
    """
    tc = theory_context(theory, n)
    ctx = tc.vars
    points = fixed_points(word, n, m, tc)
    split = []
    lcm: Counter = Counter()
    for q in points:
        unit = LaurentPoly.one(ctx)
        mult: Counter = Counter()
        for f in q.factors:
            u, core = f.split_unit()
            unit = unit * u
            if not core.is_one():
                mult[core] += 1
        split.append((unit, mult))
        for k, c in mult.items():
            if c > lcm[k]:
                lcm[k] = c
    total = LaurentPoly.zero(ctx)
    for unit, mult in split:
        term = unit ** -1
        for k, c in lcm.items():
            if c > mult[k]:
                term = term * k ** (c - mult[k])
        total = total + term
    den = LaurentPoly.one(ctx)
    for k, c in lcm.items():
        den = den * k ** c
    return RatFunc(total, den)
