"""
Verification suites behind ``sqzero verify``.

Each suite is a list of independent tasks (plain top-level functions with
picklable arguments) whose reports are merged in task order, so the output
does not depend on how many worker processes ran them.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from typing import Callable

from . import classes, combin, schubert, weightfn
from .classes import (base_characteristic, base_fundamental, compute_class,
                      csm_lowest_part, localization_pushforward)
from .combin import (Involution, Permutation, ReducedWord, all_reduced_words,
                     block_flag_permutation, conjugate, conjugating_permutations,
                     count_involutions, enumerate_involutions, minimal_involution,
                     n_matrix, orbit_dim, orbit_dim_arcs, pi_w, resolution_chain)
from .operators import (OperatorKind, TheoryContext, a_H, a_H_via_beta, a_H_termwise, a_K,
                        a_K_via_beta, a_K_termwise, beta_H, beta_K, simple_act)
from .report import Report
from .ring import LaurentPoly, RatFunc, VariableContext, parse

SUITES = ("dim", "words", "localization", "paper-examples", "schubert",
          "grothendieck", "porteous", "weightfn", "properties")

DEFAULT_N_MAX = {
    "dim": 8, "words": 5, "localization": 5, "schubert": 4, "grothendieck": 3,
    "porteous": 6, "weightfn": 4, "properties": 5, "paper-examples": 0,
}

KINDS = (("H", "fund"), ("H", "csm"), ("K", "fund"), ("K", "mc"))


# -- dim ---------------------------------------------------------------------

def dim_task(n: int) -> Report:
    rep = Report("dim")
    invs = enumerate_involutions(n)
    brute = sum(1 for p in _all_perms(n) if (p * p).is_identity())
    rep.add(f"n={n} involution count {len(invs)}", len(invs) == brute == count_involutions(n))
    base = {m: n_matrix(minimal_involution(n, m)) for m in range(n // 2 + 1)}
    for w in invs:
        m = w.rank
        d, arcs, word_dim = orbit_dim(w), orbit_dim_arcs(w), pi_w(w).length() + m * (m + 1) // 2
        conj = conjugate(pi_w(w), base[m]) == n_matrix(w)
        try:
            chain = resolution_chain(combin.reduced_word(pi_w(w)), n, m)
            upper = chain[-1] == n_matrix(w)
        except combin.NotUpperTriangular:
            upper = False
        ok = d == arcs == word_dim and conj and upper and n_matrix(w).squares_to_zero()
        rep.add(f"{w} n={n}", ok, f"formula {d} arcs {arcs} length+m(m+1)/2 {word_dim} conj {conj}")
    return rep


def _all_perms(n: int):
    from itertools import permutations
    return (Permutation(p) for p in permutations(range(1, n + 1)))


def dim_extras() -> Report:
    rep = Report("dim")
    w = Involution.parse("(2,6)(4,7)", 8)
    rep.add("dim O_(2,6)(4,7) = 8", orbit_dim(w) == orbit_dim_arcs(w) == 8)
    w = Involution.parse("(1,5)(2,6)(3,4)", 6)
    shortest = [str(p) for p in conjugating_permutations(w, shortest=True)]
    expected = ["1,2,3,5,6,4", "1,3,2,5,4,6", "3,1,2,4,5,6"]
    rep.add("three shortest conjugators of (1,5)(2,6)(3,4)",
            sorted(shortest) == sorted(expected)
            and all(Permutation.parse(p).length() == 2 for p in expected)
            and all(conjugate(Permutation.parse(p), n_matrix(minimal_involution(6, 3))) == n_matrix(w)
                    for p in expected),
            ", ".join(shortest))
    return rep


# -- words -------------------------------------------------------------------

def available_words(w: Involution) -> tuple[list[ReducedWord], list[ReducedWord]]:
    """Reduced words of pi_w, and those of every shortest conjugator that drive a valid resolution."""
    own = all_reduced_words(pi_w(w))
    extra = []
    for q in conjugating_permutations(w, shortest=True):
        for word in all_reduced_words(q):
            try:
                classes.check_word(w, word)
            except (ValueError, combin.NotUpperTriangular):
                continue
            extra.append(word)
    seen = set(own)
    allw = list(own) + [x for x in extra if x not in seen and not seen.add(x)]
    return own, allw


def words_task(n: int) -> Report:
    rep = Report("words")
    for w in enumerate_involutions(n):
        if pi_w(w).length() < 2:
            continue
        own, allw = available_words(w)
        for th, kind in KINDS:
            values = {str(compute_class(w, th, kind, word=word).value) for word in allw}
            rep.add(f"{w} n={n} {th} {kind}", len(values) == 1,
                    f"{len(allw)} words ({len(own)} of pi_w)")
    return rep


# -- localization --------------------------------------------------------------

def localization_task(n: int) -> Report:
    rep = Report("localization")
    for w in enumerate_involutions(n):
        for th in ("H", "K"):
            r = compute_class(w, th, "fund")
            loc = localization_pushforward(r.word, n, w.rank, th)
            rep.add(f"{w} n={n} {th}", loc == r.normalized, f"{2 ** len(r.word)} fixed points")
    return rep


# -- worked examples ------------------------------------------------------------

def worked_examples() -> Report:
    rep = Report("paper-examples")
    rep.add("N_(1,3)(2,4) in n=5", n_matrix(Involution.parse("(1,3)(2,4)", 5)).entries == {(1, 3), (2, 4)})
    w = Involution.parse("(1,6)(3,4)", 7)
    p = pi_w(w)
    rep.add("pi_(1,6)(3,4) = 1,3,2,5,7,6,4", str(p) == "1,3,2,5,7,6,4" and p.length() == 5)
    other_word = ReducedWord((2, 6, 4, 5, 6))
    rep.add("s2 s6 s4 s5 s6 = pi_(1,6)(3,4)", other_word.product(7) == p)
    for th, kind in KINDS:
        a = compute_class(w, th, kind)
        b = compute_class(w, th, kind, word=other_word)
        rep.add(f"(1,6)(3,4) {th} {kind}: word 2,6,4,5,6 agrees with default word",
                a.value == b.value, f"{len(a.value)} terms")
    rep.add("minimal rank 2 orbit in n=4", str(minimal_involution(4, 2)) == "(1,3)(2,4)")
    rep.add("block flag permutation of (1,4)(2,6)(3,5)",
            str(block_flag_permutation(Involution.parse("(1,4)(2,6)(3,5)", 6), 3)) == "2,3,1")

    cH = TheoryContext("H", 4).vars
    cK = TheoryContext("K", 4).vars
    five_H = "((t1-t2+u)*(t1-t3+u)*(t1-t4+u)*(t2-t4+u)*(t3-t4+u))"
    five_K = "((1-t2/(u*t1))*(1-t3/(u*t1))*(1-t4/(u*t1))*(1-t4/(u*t2))*(1-t4/(u*t3)))"
    rep.add("n=4 base class H", base_fundamental(4, 2, "H")
            == parse("1/((t1-t3+u)*(t1-t4+u)*(t2-t4+u))", cH))
    rep.add("n=4 base mC", base_characteristic(4, 2, "K") == parse(
        "(1+y)^2*(t3/(u*t1))*(t4/(u*t2))*(1+y*t4/(u*t1))/((1-t3/(u*t1))*(1-t4/(u*t1))*(1-t4/(u*t2)))", cK))
    w = Involution.parse("(1,2)(3,4)", 4)
    expected = {
        ("H", "fund"): parse(f"(t1-t4+2*u)/{five_H}", cH),
        ("H", "csm"): parse(f"(1+t1-t4+u)*(t1-t4+2*u+(t1-t3+u)*(t2-t4+u))/{five_H}", cH),
        ("K", "fund"): parse(f"(1-t4/(u^2*t1))/{five_K}", cK),
        ("K", "mc"): parse("(1+y)^2*(t4/(u^2*t1))*(1+y*t4/(u*t1))"
                           "*(1-t2/(u*t1)+t2/t3-t4/(u*t3)+y*(1-t4/(u^2*t1)))/" + five_K, cK),
    }
    for (th, kind), want in expected.items():
        r = compute_class(w, th, kind)
        e = classes.euler_class(4, th)
        rep.add(f"n=4 (1,2)(3,4) {th} {kind}", r.normalized == want and RatFunc(r.value) == want * RatFunc(e))

    rep.extend(schubert.verify_schubert_block(3))
    rep.extend(schubert.boundary_identity_checks())
    rep.add("Porteous (4,6) in n=8 is c3^2 - c2*c4", str(schubert.porteous_symbolic(4, 6, 8)) == "-c2*c4 + c3^2")
    rep.extend(weightfn_examples())
    return rep


def weightfn_examples() -> Report:
    rep = Report("weightfn-examples")
    c2, c3 = weightfn.zgamma_context(2), weightfn.zgamma_context(3)
    W = weightfn.weight_function
    rep.add("W12", W(Permutation((1, 2)), 2).value == parse("(γ1/z1)*(1-γ1/z2)", c2))
    rep.add("W21 (recursion applied to W12)", W(Permutation((2, 1)), 2).value == parse("(1+y*γ1/z1)*(γ1/z2)", c2))
    rep.add("W123", W(Permutation((1, 2, 3)), 3).value == parse(
        "(1+y*γ2/γ1)^(-1)*(γ1*γ2/(z1*z2))*(1+y*γ2/z1)*(1-γ1/z2)*(1-γ1/z3)*(1-γ2/z3)", c3))
    if W(Permutation((2, 1)), 2).value != parse("(1+y*γ1/z2)*(γ1/z2)", c2):
        rep.notes.append("the reversed form W21 = (1+y γ1/z2) γ1/z2 differs from the recursion/mC value "
                         "(1+y γ1/z1) γ1/z2; see the decisions ledger")
    rep.add("n=2 mC of the minimal orbit", weightfn.mc_hom_orbit(Permutation((1, 2)), 2) == parse(
        "(1+y)*(t3/t1)*(1-t3/t2)", weightfn.hom_context(2).vars).as_poly())
    rep.add("tau -> involution", [str(weightfn.tau_to_involution(Permutation(t), len(t)))
                                   for t in ((1, 2), (2, 1), (1, 2, 3))] == ["(1,3)", "(2,3)", "(1,4)(2,5)"])
    return rep


# -- schubert / grothendieck / porteous / weightfn -----------------------------

def schubert_task(n: int) -> Report:
    return schubert.verify_schubert_block(n)


def left_recursion_task(n: int) -> Report:
    return schubert.verify_left_recursion(n)


def schubert_stability_task(n: int) -> Report:
    rep = Report("schubert-paths")
    for p in _all_perms(n):
        rep.add(f"S_{p.compact()} path independent",
                schubert.double_schubert(p, True).poly == schubert.double_schubert(p, False).poly)
    return rep


def grothendieck_task(n: int) -> Report:
    return schubert.verify_grothendieck_block(n)


def porteous_task(n: int) -> Report:
    return schubert.verify_porteous(n)


def porteous_extras() -> Report:
    rep = Report("porteous")
    rep.add("(4,6) in n=8 is c3^2 - c2*c4", str(schubert.porteous_symbolic(4, 6, 8)) == "-c2*c4 + c3^2")
    rep.extend(schubert.verify_walks(8, 4, 5, ["LLDDLD", "DLDDLL"]))
    words = [schubert.walk_word(p, 8) for p in ("LLDDLD", "DLDDLL")]
    rep.add("walk words are beta3 beta5 beta2 beta1 beta6 beta7 and beta5 beta6 beta3 beta2 beta7 beta1",
            words == [(3, 5, 2, 1, 6, 7), (5, 6, 3, 2, 7, 1)])
    return rep


def weightfn_task(n: int) -> Report:
    rep = weightfn.verify_weight_recursion(n)
    rep.extend(weightfn.verify_weight_functions(n))
    return rep


# -- properties ----------------------------------------------------------------

def random_ratfunc(ctx: VariableContext, rng: random.Random, max_terms: int = 3,
                   max_exp: int = 2) -> RatFunc:
    def poly():
        d = {}
        for _ in range(rng.randint(1, max_terms)):
            e = tuple(rng.randint(0, max_exp) for _ in range(ctx.nvars))
            d[e] = rng.choice([-3, -2, -1, 1, 2, 3])
        return LaurentPoly.from_dict(ctx, d)

    den = poly()
    while den.is_zero():
        den = poly()
    return RatFunc(poly(), den)


OPS = {"beta_H": ("H", beta_H), "beta_K": ("K", beta_K), "A_H": ("H", a_H), "A_K": ("K", a_K)}


def operator_properties_task(n: int, samples: int = 20, seed: int = 0) -> Report:
    rep = Report("properties")
    rng = random.Random(seed * 1000 + n)
    for name, (th, op) in OPS.items():
        ctx = TheoryContext(th, n).vars
        braid = commute = True
        for _ in range(samples):
            x = random_ratfunc(ctx, rng)
            for i in range(1, n - 1):
                braid &= op(op(op(x, i), i + 1), i) == op(op(op(x, i + 1), i), i + 1)
            for i in range(1, n):
                for j in range(i + 2, n):
                    commute &= op(op(x, i), j) == op(op(x, j), i)
        rep.add(f"{name} braid relations n={n} ({samples} samples)", braid)
        rep.add(f"{name} far commutation n={n} ({samples} samples)", commute)
    for th, op in (("H", beta_H), ("K", beta_K)):
        ctx = TheoryContext(th, n).vars
        ok = sym = True
        for _ in range(samples):
            x = random_ratfunc(ctx, rng)
            for i in range(1, n):
                once = op(x, i)
                ok &= (op(once, i).is_zero() if th == "H" else op(once, i) == once)
                sym &= simple_act(once, i) == once
        rep.add(f"beta_{th} {'nilpotent' if th == 'H' else 'idempotent'} n={n}", ok)
        rep.add(f"beta_{th} output s_i-symmetric n={n}", sym)
    cH, cK = TheoryContext("H", n).vars, TheoryContext("K", n).vars
    forms = True
    for _ in range(samples):
        xh, xk = random_ratfunc(cH, rng), random_ratfunc(cK, rng)
        for i in range(1, n):
            forms &= a_H(xh, i) == a_H_termwise(xh, i) == a_H_via_beta(xh, i)
            forms &= a_K(xk, i) == a_K_termwise(xk, i) == a_K_via_beta(xk, i)
    rep.add(f"A_H and A_K written forms agree n={n}", forms)
    y = LaurentPoly.y(cK)
    rep.add(f"A_i(1) = 1 and A^K_i(1) = -y n={n}",
            all(a_H(RatFunc.one(cH), i) == 1 and a_K(RatFunc.one(cK), i) == RatFunc(-y)
                for i in range(1, n)))
    return rep


def exploratory_quadratic(n: int = 3, samples: int = 10, seed: int = 0) -> Report:
    """A_H^2 = id and (A^K + 1)(A^K + y) = 0; not acceptance checks, recorded for information."""
    rep = Report("exploratory")
    rng = random.Random(seed)
    cH, cK = TheoryContext("H", n).vars, TheoryContext("K", n).vars
    y = RatFunc(LaurentPoly.y(cK))
    h = k = True
    for _ in range(samples):
        xh, xk = random_ratfunc(cH, rng), random_ratfunc(cK, rng)
        for i in range(1, n):
            h &= a_H(a_H(xh, i), i) == xh
            ax = a_K(xk, i)
            k &= a_K(ax, i) + (1 + y) * ax + y * xk == 0
    rep.add("A_i^2 = 1", h)
    rep.add("(A^K_i + 1)(A^K_i + y) = 0", k)
    return rep


def class_properties_task(n: int) -> Report:
    rep = Report("properties")
    for w in enumerate_involutions(n):
        fund = compute_class(w, "H", "fund")
        csm = compute_class(w, "H", "csm")
        lo, hi = fund.value.degree_range()
        rep.add(f"{w} n={n} [X] homogeneous of degree codim {fund.codim}", lo == hi == fund.codim)
        rep.add(f"{w} n={n} lowest part of csm = [X]", csm_lowest_part(csm) == fund.value)
        mc = compute_class(w, "K", "mc")
        rep.add(f"{w} n={n} deg_y mC = dim {mc.dim}", mc.value.degree("y") == mc.dim)
    return rep


# -- driver ------------------------------------------------------------------------

def tasks_for(suite: str, n_max: int | None = None) -> list[tuple[Callable[..., Report], tuple]]:
    if suite not in SUITES:
        raise KeyError(suite)
    top = DEFAULT_N_MAX[suite] if n_max is None else n_max
    if suite == "dim":
        return [(dim_extras, ())] + [(dim_task, (n,)) for n in range(1, top + 1)]
    if suite == "words":
        return [(words_task, (n,)) for n in range(1, top + 1)]
    if suite == "localization":
        return [(localization_task, (n,)) for n in range(1, top + 1)]
    if suite == "paper-examples":
        return [(worked_examples, ())]
    if suite == "schubert":
        return ([(schubert_task, (n,)) for n in range(1, min(top, 4) + 1)]
                + [(left_recursion_task, (n,)) for n in (3, 4)]
                + [(schubert_stability_task, (n,)) for n in (3, 4)])
    if suite == "grothendieck":
        return [(grothendieck_task, (n,)) for n in range(1, min(top, 3) + 1)]
    if suite == "porteous":
        return [(porteous_extras, ())] + [(porteous_task, (n,)) for n in range(2, top + 1)]
    if suite == "weightfn":
        return [(weightfn_examples, ())] + [(weightfn_task, (n,)) for n in range(1, min(top, 4) + 1)]
    if suite == "properties":
        return ([(operator_properties_task, (n,)) for n in (2, 3, 4)]
                + [(class_properties_task, (n,)) for n in range(1, top + 1)]
                + [(exploratory_quadratic, ())])
    raise KeyError(suite)


def _call(task):
    fn, args = task
    return fn(*args)


def run_suite(suite: str, n_max: int | None = None, jobs: int | None = None) -> Report:
    tasks = tasks_for(suite, n_max)
    jobs = jobs or os.cpu_count() or 1
    if jobs <= 1 or len(tasks) == 1:
        reports = [_call(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
            reports = list(pool.map(_call, tasks))
    out = Report(suite)
    for r in reports:
        out.cases.extend(r.cases)
        out.notes.extend(n for n in r.notes if n not in out.notes)
    return out
