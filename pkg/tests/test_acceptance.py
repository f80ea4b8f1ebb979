"""
The eleven acceptance criteria, all exact.  A summary line per criterion is
printed at the end of the run (see conftest.py).
"""

import pytest

from sqzero import schubert, suites, weightfn
from sqzero.classes import compute_class, euler_class
from sqzero.combin import Involution, Permutation, count_involutions, enumerate_involutions, orbit_dim, pi_w
from sqzero.operators import TheoryContext
from sqzero.ring import RatFunc, parse

criterion = pytest.mark.criterion


def ok(report):
    return report.ok, [c.label for c in report.failures][:5]


# 1 ------------------------------------------------------------------------------

@criterion(1)
def test_dimension_agreement(record_property):
    total = 0
    for n in range(1, 9):
        rep = suites.dim_task(n)
        assert ok(rep)[0], ok(rep)[1]
        total += len(enumerate_involutions(n))
    assert total == sum(count_involutions(n) for n in range(1, 9)) == 1115
    assert orbit_dim(Involution.parse("(2,6)(4,7)", 8)) == 8
    record_property("detail", f"3 formulas agree on all {total} involutions n<=8; dim O_(2,6)(4,7) = 8")


# 2 ------------------------------------------------------------------------------

@criterion(2)
def test_conjugation(record_property):
    for n in range(1, 9):
        rep = suites.dim_task(n)
        assert all(c.ok and "conj True" in c.detail for c in rep.cases if "conj" in c.detail)
    rep = suites.dim_extras()
    assert ok(rep)[0], ok(rep)[1]
    record_property("detail", "pi_w conjugates N_{w_m} to N_w for all n<=8; three length-2 conjugators of (1,5)(2,6)(3,4)")


# 3 ------------------------------------------------------------------------------

FIVE_H = "((t1-t2+u)*(t1-t3+u)*(t1-t4+u)*(t2-t4+u)*(t3-t4+u))"
FIVE_K = "((1-t2/(u*t1))*(1-t3/(u*t1))*(1-t4/(u*t1))*(1-t4/(u*t2))*(1-t4/(u*t3)))"
KNOWN_N4 = {
    ("H", "fund"): f"(t1-t4+2*u)/{FIVE_H}",
    ("H", "csm"): f"(1+t1-t4+u)*(t1-t4+2*u+(t1-t3+u)*(t2-t4+u))/{FIVE_H}",
    ("K", "fund"): f"(1-t4/(u^2*t1))/{FIVE_K}",
}


@criterion(3)
@pytest.mark.parametrize("theory, kind", list(KNOWN_N4))
def test_worked_n4_example(theory, kind, record_property):
    w = Involution.parse("(1,2)(3,4)", 4)
    ctx = TheoryContext(theory, 4).vars
    expected = parse(KNOWN_N4[(theory, kind)], ctx)
    r = compute_class(w, theory, kind)
    expanded = (expected * RatFunc(euler_class(4, theory))).as_poly()
    assert r.value.terms() == expanded.terms()
    assert r.normalized == expected
    record_property("detail", "[X], c_SM, [X]_K of (1,2)(3,4) match term for term")


# 4 ------------------------------------------------------------------------------

@criterion(4)
def test_localization_oracle(record_property):
    count = 0
    for n in range(1, 6):
        rep = suites.localization_task(n)
        assert ok(rep)[0], ok(rep)[1]
        count += len(rep.cases)
    record_property("detail", f"localization = recursion for {count} (orbit, theory) pairs, n<=5")


# 5 ------------------------------------------------------------------------------

def _word_counts():
    rows = []
    for n in range(1, 6):
        for w in enumerate_involutions(n):
            if pi_w(w).length() >= 2:
                own, allw = suites.available_words(w)
                rows.append((w, len(own), len(allw)))
    return rows


@criterion(5)
def test_word_independence(record_property):
    for n in range(1, 6):
        rep = suites.words_task(n)
        assert ok(rep)[0], ok(rep)[1]
    rows = _word_counts()
    short = [r for r in rows if r[2] < 3]
    record_property("detail", f"all available words agree in 4 kinds for {len(rows)} orbits; "
                              f"{len(short)} orbits have fewer than 3 valid words")


@criterion(5)
@pytest.mark.xfail(strict=True, reason="some orbits have fewer than 3 reduced words in existence")
def test_word_independence_three_words_per_orbit():
    assert all(r[2] >= 3 for r in _word_counts())


# 6 ------------------------------------------------------------------------------

@criterion(6)
def test_schubert_oracle(record_property):
    for n in (2, 3, 4):
        rep = schubert.verify_schubert_block(n)
        assert ok(rep)[0], ok(rep)[1]
    ctx = schubert.xy_context(3)
    table = {"3,2,1": "(x1-y1)*(x1-y2)*(x2-y1)", "2,3,1": "(x1-y1)*(x2-y1)",
             "3,1,2": "(x1-y1)*(x1-y2)", "1,3,2": "x1+x2-y1-y2", "2,1,3": "x1-y1", "1,2,3": "1"}
    for one_line, text in table.items():
        assert schubert.double_schubert(Permutation.parse(one_line)).poly == parse(text, ctx).as_poly()
    for n in (3, 4):
        rep = schubert.verify_left_recursion(n)
        assert ok(rep)[0], ok(rep)[1]
    record_property("detail", "block orbits = double Schubert for n=2,3,4; S_3 table; left recursion on S_3, S_4")


# 7 ------------------------------------------------------------------------------

@criterion(7)
def test_grothendieck_oracle(record_property):
    notes = []
    for n in (2, 3):
        rep = schubert.verify_grothendieck_block(n)
        assert ok(rep)[0], ok(rep)[1]
        notes += rep.notes
    assert any("i+j<=n matches, i+j=n fails" in s for s in notes)
    record_property("detail", "block K-classes = Grothendieck for n=2,3; longest element prod_{i+j<=n}(1 - y_j/x_i)")


# 8 ------------------------------------------------------------------------------

@criterion(8)
def test_porteous(record_property):
    assert str(schubert.porteous_symbolic(4, 6, 8)) == "-c2*c4 + c3^2"
    for n in range(2, 7):
        rep = schubert.verify_porteous(n)
        assert ok(rep)[0], ok(rep)[1]
    rep = suites.porteous_extras()
    assert ok(rep)[0], ok(rep)[1]
    record_property("detail", "c3^2 - c2c4; determinant = beta pipeline for all transpositions n<=6; both (4,5) walks agree")


# 9 ------------------------------------------------------------------------------

@criterion(9)
def test_boundary_identities(record_property):
    rep = schubert.boundary_identity_checks()
    assert ok(rep)[0], ok(rep)[1]
    record_property("detail", "[X_w2]^2 = (y2-y1)[X_w2] + [X_(13)]; beta4 beta5 beta4 = beta5 beta4 beta1 on [X_w2]")


# 10 -----------------------------------------------------------------------------

@criterion(10)
def test_weight_functions(record_property):
    c2, c3 = weightfn.zgamma_context(2), weightfn.zgamma_context(3)
    W = lambda t: weightfn.weight_function(Permutation(t), len(t)).value
    assert W((1, 2)) == parse("(γ1/z1)*(1-γ1/z2)", c2)
    assert W((1, 2, 3)) == parse(
        "(1+y*γ2/γ1)^(-1)*(γ1*γ2/(z1*z2))*(1+y*γ2/z1)*(1-γ1/z2)*(1-γ1/z3)*(1-γ2/z3)", c3)
    assert W((2, 1)) == parse("(1+y*γ1/z1)*(γ1/z2)", c2)
    for n in (2, 3):
        rep = weightfn.verify_weight_recursion(n)
        assert ok(rep)[0], ok(rep)[1]
        assert weightfn.to_zgamma(weightfn.mc_hom_orbit(Permutation.identity(n), n), n) \
            == weightfn.minimal_orbit_display(n)
    record_property("detail", "W12, W123 exact; W21 = (1+y γ1/z1) γ1/z2; recursion on S_2, S_3; minimal orbit display")


@criterion(10)
@pytest.mark.xfail(strict=True, reason="W21 = (1+y γ1/z2) γ1/z2 contradicts W12 and the recursion")
def test_weight_function_w21_reversed_form():
    W21 = weightfn.weight_function(Permutation((2, 1)), 2).value
    assert W21 == parse("(1+y*γ1/z2)*(γ1/z2)", weightfn.zgamma_context(2))


# 11 -----------------------------------------------------------------------------

@criterion(11)
def test_property_suites(record_property):
    for n in (2, 3, 4):
        rep = suites.operator_properties_task(n, samples=20)
        assert ok(rep)[0], ok(rep)[1]
    for n in range(1, 6):
        rep = suites.class_properties_task(n)
        assert ok(rep)[0], ok(rep)[1]
    record_property("detail", "beta_H^2=0, beta_K^2=beta_K, braids for 4 operators on 20 samples n<=4; "
                              "A(1)=1, A^K(1)=-y; c_SM lowest part and deg_y mC for n<=5")
