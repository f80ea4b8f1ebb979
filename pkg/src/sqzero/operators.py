"""
Divided-difference type operators on rational functions of t1..tn.

All four operators have the shape ``x -> (P * s_i(x) + Q * x) / D`` with
``P, Q, D`` fixed polynomials in ``t_i, t_{i+1}`` (and ``y``):

========  ==========================  ====================  =================
operator  P                           Q                     D
========  ==========================  ====================  =================
beta_H    1                           -1                    t_i - t_{i+1}
beta_K    -t_i                        t_{i+1}               t_{i+1} - t_i
a_H       1 + t_i - t_{i+1}           -1                    t_i - t_{i+1}
a_K       t_i + y t_{i+1}             -(1 + y) t_i          t_i - t_{i+1}
========  ==========================  ====================  =================

They act on the t-variables only; ``u`` and ``y`` are scalars.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Union

from .combin import Permutation, ReducedWord
from .ring import LaurentPoly, NotDivisible, RatFunc, VariableContext

__all__ = [
    "Theory", "UMode", "TheoryContext", "OperatorKind",
    "beta_H", "beta_K", "a_H", "a_K",
    "a_H_termwise", "a_H_via_beta", "a_K_termwise", "a_K_via_beta", "a_K_via_beta_with_pole",
    "apply_word", "simple_act",
]


class Theory(Enum):
    H = "H"
    K = "K"


class UMode(Enum):
    KEEP = "keep"
    ZERO = "zero"
    ONE = "one"


@dataclass(frozen=True)
class TheoryContext:
    """Cohomology or K-theory on n letters, and what to do with the scaling variable u."""
    theory: Theory
    n: int
    u_mode: UMode = UMode.KEEP

    def __post_init__(self):
        object.__setattr__(self, "theory", Theory(self.theory))
        object.__setattr__(self, "u_mode", UMode(self.u_mode))
        if self.u_mode is UMode.ZERO and self.theory is not Theory.H:
            raise ValueError("u -> 0 only makes sense in cohomology")
        if self.u_mode is UMode.ONE and self.theory is not Theory.K:
            raise ValueError("u -> 1 only makes sense in K-theory")

    @property
    def vars(self) -> VariableContext:
        k = self.theory is Theory.K
        return VariableContext(self.n, has_u=self.u_mode is UMode.KEEP, has_y=k, laurent=k)

    def u(self) -> LaurentPoly:
        if self.u_mode is UMode.ZERO:
            return LaurentPoly.zero(self.vars)
        if self.u_mode is UMode.ONE:
            return LaurentPoly.one(self.vars)
        return LaurentPoly.u(self.vars)

    def t(self, i: int) -> LaurentPoly:
        return LaurentPoly.t(self.vars, i)

    def y(self) -> LaurentPoly:
        return LaurentPoly.y(self.vars)


class OperatorIndexError(IndexError):
    pass


def _as_rat(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, LaurentPoly):
        return RatFunc(x)
    raise TypeError(f"expected a RatFunc or LaurentPoly, got {type(x).__name__}")


def _swap(n: int, i: int) -> tuple[int, ...]:
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def simple_act(x: RatFunc, i: int) -> RatFunc:
    """``s_i`` acting on the t-variables."""
    return x.act(_swap(x.ctx.n, i))


def _check_index(ctx: VariableContext, i: int):
    if not 1 <= i <= ctx.n - 1:
        raise OperatorIndexError(f"operator index {i} outside 1..{ctx.n - 1}")


def _hecke(x: RatFunc, i: int, P: LaurentPoly, Q: LaurentPoly, D: LaurentPoly) -> RatFunc:
    a, b = x.num, x.den
    sx = simple_act(x, i)
    if sx.den == b:
        top = P * sx.num + Q * a
        bottom = b
    else:
        r = RatFunc(P) * sx + RatFunc(Q) * x
        top, bottom = r.num, r.den
    try:
        # the usual case: D divides the numerator and den stays coprime to it
        return RatFunc(top.exact_div(D), bottom)
    except NotDivisible:
        return RatFunc(top, bottom * D)


def beta_H(x, i: int) -> RatFunc:
    """``(s_i x - x) / (t_i - t_{i+1})``, i.e. minus the divided difference."""
    x = _as_rat(x)
    ctx = x.ctx
    _check_index(ctx, i)
    ti, tj = LaurentPoly.t(ctx, i), LaurentPoly.t(ctx, i + 1)
    return _hecke(x, i, LaurentPoly.one(ctx), LaurentPoly.constant(ctx, -1), ti - tj)


def beta_K(x, i: int) -> RatFunc:
    """``(t_{i+1} x - t_i s_i x) / (t_{i+1} - t_i)``."""
    x = _as_rat(x)
    ctx = x.ctx
    _check_index(ctx, i)
    ti, tj = LaurentPoly.t(ctx, i), LaurentPoly.t(ctx, i + 1)
    return _hecke(x, i, -ti, tj, tj - ti)


def a_H(x, i: int) -> RatFunc:
    """``(-x + (1 + t_i - t_{i+1}) s_i x) / (t_i - t_{i+1})``."""
    x = _as_rat(x)
    ctx = x.ctx
    _check_index(ctx, i)
    ti, tj = LaurentPoly.t(ctx, i), LaurentPoly.t(ctx, i + 1)
    return _hecke(x, i, 1 + ti - tj, LaurentPoly.constant(ctx, -1), ti - tj)


def a_K(x, i: int) -> RatFunc:
    """``((t_i + y t_{i+1}) s_i x - (1 + y) t_i x) / (t_i - t_{i+1})``."""
    x = _as_rat(x)
    ctx = x.ctx
    _check_index(ctx, i)
    y = LaurentPoly.y(ctx)
    ti, tj = LaurentPoly.t(ctx, i), LaurentPoly.t(ctx, i + 1)
    return _hecke(x, i, ti + y * tj, -(1 + y) * ti, ti - tj)


# The forms below are written out term by term with generic fraction
# arithmetic; tests compare them with the fused versions above.

def a_H_termwise(x, i: int) -> RatFunc:
    """``x / (t_{i+1} - t_i) + (1 + t_i - t_{i+1}) / (t_i - t_{i+1}) * s_i x``."""
    x = _as_rat(x)
    ctx = x.ctx
    _check_index(ctx, i)
    ti, tj = RatFunc(LaurentPoly.t(ctx, i)), RatFunc(LaurentPoly.t(ctx, i + 1))
    return x / (tj - ti) + (1 + ti - tj) / (ti - tj) * simple_act(x, i)


def a_H_via_beta(x, i: int) -> RatFunc:
    """``beta_H(x) + s_i x``."""
    x = _as_rat(x)
    return beta_H(x, i) + simple_act(x, i)


def a_K_termwise(x, i: int) -> RatFunc:
    """``(1+y) (t_i/t_{i+1}) / (1 - t_i/t_{i+1}) x + (1 + y t_{i+1}/t_i) / (1 - t_{i+1}/t_i) s_i x``."""
    x = _as_rat(x)
    ctx = x.ctx
    _check_index(ctx, i)
    y = RatFunc(LaurentPoly.y(ctx))
    r = RatFunc(LaurentPoly.t(ctx, i)) / RatFunc(LaurentPoly.t(ctx, i + 1))
    return (1 + y) * r / (1 - r) * x + (1 + y / r) / (1 - 1 / r) * simple_act(x, i)


def a_K_via_beta(x, i: int) -> RatFunc:
    """``beta_K((1 + y t_i/t_{i+1}) x) - x``."""
    x = _as_rat(x)
    ctx = x.ctx
    _check_index(ctx, i)
    y = RatFunc(LaurentPoly.y(ctx))
    r = RatFunc(LaurentPoly.t(ctx, i)) / RatFunc(LaurentPoly.t(ctx, i + 1))
    return beta_K((1 + y * r) * x, i) - x


def a_K_via_beta_with_pole(x, i: int) -> RatFunc:
    """
    ``beta_K((1 + y t_i/t_{i+1}) / (1 - t_i/t_{i+1}) x) - x``.

    Kept only to show that the extra ``1/(1 - t_i/t_{i+1})`` factor breaks
    the identity with :func:`a_K`; it would hold if ``beta_K`` dropped its
    own denominators, i.e. for ``f -> f + s_i f``.
    """
    x = _as_rat(x)
    ctx = x.ctx
    _check_index(ctx, i)
    y = RatFunc(LaurentPoly.y(ctx))
    r = RatFunc(LaurentPoly.t(ctx, i)) / RatFunc(LaurentPoly.t(ctx, i + 1))
    return beta_K((1 + y * r) / (1 - r) * x, i) - x


class OperatorKind(Enum):
    BETA_H = "beta_H"
    BETA_K = "beta_K"
    A_H = "A_H"
    A_K = "A_K"

    @property
    def func(self) -> Callable[[RatFunc, int], RatFunc]:
        return _OPS[self]

    def __call__(self, x, i: int) -> RatFunc:
        return _OPS[self](x, i)


_OPS = {
    OperatorKind.BETA_H: beta_H,
    OperatorKind.BETA_K: beta_K,
    OperatorKind.A_H: a_H,
    OperatorKind.A_K: a_K,
}


def apply_word(word: Union[ReducedWord, Iterable[int]], x, op: OperatorKind) -> RatFunc:
    """``op_{a1}(op_{a2}(... op_{al}(x)))``: the first letter is applied last."""
    letters = word.letters if isinstance(word, ReducedWord) else tuple(word)
    x = _as_rat(x)
    f = OperatorKind(op).func
    for a in reversed(letters):
        x = f(x, a)
    return x
