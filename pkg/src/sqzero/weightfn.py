"""
Motivic Chern classes of orbits in Hom(C^{n-1}, C^n) and the normalized
trigonometric weight functions obtained from them.

Hom(C^{n-1}, C^n) sits in the upper-right block of (2n-1) x (2n-1) matrices
(rows 1..n, columns n+1..2n-1).  A permutation tau of n letters labels the
orbit of the map e_{n+j} -> e_{tau(j)}, j <= n-1.  Its motivic Chern class
is computed in K-theory with u = 1, divided by lambda_y of the Borel
subalgebra b_{n-1}, and written in z_i = t_i, gamma_j = t_{n+j}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .classes import base_characteristic
from .combin import Involution, Permutation, ReducedWord, orbit_dim, pi_w, reduced_word
from .operators import OperatorKind, Theory, TheoryContext, UMode, a_K, apply_word
from .report import Report
from .ring import LaurentPoly, RatFunc, VariableContext
from .schubert import MiddleReflectionInBlockMode

__all__ = [
    "WeightFunction", "BorelLambda", "tau_to_involution", "hom_context", "zgamma_context",
    "hom_euler_k", "mc_hom_orbit", "lambda_y_borel", "weight_function",
    "weight_recursion_rhs", "verify_weight_recursion", "minimal_orbit_display", "to_zgamma", "from_zgamma",
    "verify_weight_functions",
]


@dataclass(frozen=True)
class WeightFunction:
    tau: Permutation
    value: RatFunc


@dataclass(frozen=True)
class BorelLambda:
    k: int
    value: LaurentPoly


def hom_context(n: int) -> TheoryContext:
    return TheoryContext(Theory.K, 2 * n - 1, UMode.ONE)


@lru_cache(maxsize=None)
def zgamma_context(n: int) -> VariableContext:
    names = tuple(f"z{i}" for i in range(1, n + 1)) + tuple(f"γ{j}" for j in range(1, n))
    return VariableContext(2 * n - 1, has_u=False, has_y=True, laurent=True, t_names=names)


def tau_to_involution(tau: Permutation, n: int) -> Involution:
    """Pairs ``(tau(j), n + j)`` for j = 1..n-1, an involution of 2n-1 letters."""
    if tau.n != n:
        raise ValueError(f"tau must permute {n} letters")
    return Involution(2 * n - 1, tuple((tau(j), n + j) for j in range(1, n)))


def hom_euler_k(n: int) -> LaurentPoly:
    """``prod_{i <= n < j <= 2n-1} (1 - t_j/t_i)``."""
    ctx = hom_context(n).vars
    acc = LaurentPoly.one(ctx)
    for i in range(1, n + 1):
        for j in range(n + 1, 2 * n):
            acc = acc * (1 - LaurentPoly.t(ctx, j) * LaurentPoly.t(ctx, i) ** -1)
    return acc


def mc_hom_orbit(tau: Permutation, n: int, word: ReducedWord | None = None) -> LaurentPoly:
    """mC of the orbit of tau inside Hom(C^{n-1}, C^n), in t-variables with u = 1."""
    tc = hom_context(n)
    w = tau_to_involution(tau, n)
    word = word or reduced_word(pi_w(w))
    if n in word.letters:
        raise MiddleReflectionInBlockMode(f"word {word} uses s_{n}")
    normalized = apply_word(word, base_characteristic(2 * n - 1, n - 1, tc), OperatorKind.A_K)
    return (normalized * RatFunc(hom_euler_k(n))).as_poly()


def lambda_y_borel(n: int) -> BorelLambda:
    """``prod_{1 <= i <= j <= n-1} (1 + y gamma_j/gamma_i)`` with gamma_i = t_{n+i}."""
    ctx = hom_context(n).vars
    y = LaurentPoly.y(ctx)
    acc = LaurentPoly.one(ctx)
    for i in range(1, n):
        for j in range(i, n):
            acc = acc * (1 + y * LaurentPoly.t(ctx, n + j) * LaurentPoly.t(ctx, n + i) ** -1)
    return BorelLambda(n - 1, acc)


def to_zgamma(x, n: int):
    """Rename ``t_i -> z_i`` and ``t_{n+j} -> gamma_j``."""
    src = x.ctx
    target = zgamma_context(n)
    mapping = {src.names[k]: LaurentPoly.gen(target, target.names[k])
               for k in range(src.nvars)}
    out = x.substitute(mapping, target)
    return out.as_poly() if isinstance(x, LaurentPoly) else out


def from_zgamma(x, n: int):
    src = x.ctx
    target = hom_context(n).vars
    mapping = {src.names[k]: LaurentPoly.gen(target, target.names[k])
               for k in range(src.nvars)}
    out = x.substitute(mapping, target)
    return out.as_poly() if isinstance(x, LaurentPoly) else out


def weight_function(tau: Permutation, n: int) -> WeightFunction:
    """
    ``mC / lambda_y(b_{n-1})`` in z/gamma variables.

    >>> str(weight_function(Permutation((1, 2)), 2).value)
    'z1^-1*γ1 - z1^-1*z2^-1*γ1^2'
    """
    mc = mc_hom_orbit(tau, n)
    lam = lambda_y_borel(n).value
    return WeightFunction(tau, to_zgamma(RatFunc(mc, lam), n))


def weight_recursion_rhs(W: RatFunc, a: int) -> RatFunc:
    """
    ``(1 + y z_{a+1}/z_a)/(1 - z_{a+1}/z_a) W(s_a z)
    + (1+y)(z_a/z_{a+1})/(1 - z_a/z_{a+1}) W(z)``.
    """
    ctx = W.ctx
    y = RatFunc(LaurentPoly.y(ctx))
    za, zb = RatFunc(LaurentPoly.t(ctx, a)), RatFunc(LaurentPoly.t(ctx, a + 1))
    swap = list(range(1, ctx.n + 1))
    swap[a - 1], swap[a] = swap[a], swap[a - 1]
    return ((1 + y * zb / za) / (1 - zb / za) * W.act(tuple(swap))
            + (1 + y) * (za / zb) / (1 - za / zb) * W)


def verify_weight_recursion(n: int) -> Report:
    rep = Report(f"weight-recursion-n{n}")
    W = {p: weight_function(Permutation(p), n).value for p in permutations(range(1, n + 1))}
    for p, Wp in W.items():
        tau = Permutation(p)
        for a in range(1, n):
            up = Permutation.simple(n, a) * tau
            if up.length() <= tau.length():
                continue
            want = W[up.one_line]
            rep.add(f"{tau.compact()} -> {up.compact()} (a={a})", weight_recursion_rhs(Wp, a) == want)
            rep.add(f"{tau.compact()} -> {up.compact()} (a={a}) as A^K", a_K(Wp, a) == want)
    return rep


def minimal_orbit_display(n: int) -> LaurentPoly:
    """
    ``prod_j [prod_{i<j} (1 + y gamma_j/z_i) * (1+y) gamma_j/z_j * prod_{j<i<=n} (1 - gamma_j/z_i)]``,
    the closed-form mC of the orbit of the identity, in z/gamma variables.
    """
    ctx = zgamma_context(n)
    y = LaurentPoly.y(ctx)
    z = [None] + [LaurentPoly.t(ctx, i) for i in range(1, n + 1)]
    g = [None] + [LaurentPoly.t(ctx, n + j) for j in range(1, n)]
    acc = LaurentPoly.one(ctx)
    for j in range(1, n):
        for i in range(1, j):
            acc = acc * (1 + y * g[j] * z[i] ** -1)
        acc = acc * (1 + y) * g[j] * z[j] ** -1
        for i in range(j + 1, n + 1):
            acc = acc * (1 - g[j] * z[i] ** -1)
    return acc


def verify_weight_functions(n: int) -> Report:
    """Round trip W * lambda = mC, y-degree = orbit dimension, and the identity-orbit closed form."""
    rep = Report(f"weight-functions-n{n}")
    lam = lambda_y_borel(n).value
    for p in permutations(range(1, n + 1)):
        tau = Permutation(p)
        mc = mc_hom_orbit(tau, n)
        W = weight_function(tau, n).value
        back = from_zgamma(W, n) * RatFunc(lam)
        rep.add(f"{tau.compact()} round trip", back == RatFunc(mc))
        dim = orbit_dim(tau_to_involution(tau, n))
        rep.add(f"{tau.compact()} deg_y = dim {dim}", mc.degree("y") == dim if not mc.is_zero() else False)
    ident = Permutation.identity(n)
    rep.add("identity orbit closed form", to_zgamma(mc_hom_orbit(ident, n), n) == minimal_orbit_display(n))
    return rep
