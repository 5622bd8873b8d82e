"""Acceptance suite: one check (and one printed pass/fail line) per criterion.

Run with ``pytest tests/test_acceptance.py -v -s``.  Every tolerance is
pinned here; the exact checks use exact equality, the asymptotic checks
use the stated 5% window, and the stated runtime budgets are asserted on
a monotonic clock.
"""

import math
import time

from adetau.backend import Rat
from adetau import frobenius, integrality, invariants, kernels, oderec, psido, verify

A4_TABLE = [
    Rat(1), Rat(1, 6), Rat(11, 3600), Rat(0), Rat(341, 25920000),
    Rat(161, 2 ** 10 * 3 ** 5 * 5 ** 5), Rat(3397, 2 ** 13 * 3 ** 6 * 5 ** 6),
    Rat(3421, 2 ** 13 * 3 ** 8 * 5 ** 7), Rat(0),
    Rat(1670581, 2 ** 20 * 3 ** 10 * 5 ** 9 * 7), Rat(26605753, 2 ** 23 * 3 ** 12 * 5 ** 12),
]
D4_TABLE = [
    Rat(1), Rat(1, 3), Rat(0), Rat(13, 40824), Rat(13, 122472), Rat(0),
    Rat(1433, 16665989760), Rat(253, 9999593856), Rat(0), Rat(33917, 2041117097886720),
]
E6_TABLE = [
    Rat(1), Rat(1, 4), Rat(0), Rat(5, 1152), Rat(25, 27648), Rat(0),
    Rat(145, 5750784), Rat(4235, 414056448), Rat(0), Rat(23065, 79498838016),
    Rat(174145, 3338951196672),
]


def _report(num, desc, ok, elapsed=None, budget=None):
    timing = ""
    if elapsed is not None:
        timing = f"  ({elapsed:.1f}s" + (f" / budget {budget:.0f}s)" if budget else ")")
    print(f"\nACCEPTANCE {num:02d} {'PASS' if ok else 'FAIL'}  {desc}{timing}")
    assert ok, f"criterion {num} failed: {desc}"


def test_criterion_01_a4_table_five_methods():
    t0 = time.monotonic()
    rec = oderec.tau_a4_recursion(10)
    closed = [invariants.tau_a_closed(5, g) for g in range(11)]
    genfunc = invariants.tau_a_genfunc(5, 10)
    hyper = [invariants.tau_a_hyper(5, g) for g in range(11)]
    product = invariants.tau_a_product(5, 10)
    elapsed = time.monotonic() - t0
    ok = rec == closed == genfunc == hyper == product == A4_TABLE and elapsed < 10
    _report(1, "rank-four table by recursion/closed/genfunc/hyper/product, exact", ok, elapsed, 10)


def test_criterion_02_d4_and_e6_tables():
    t0 = time.monotonic()
    d4 = invariants.tau_d_genfunc(4, 9)
    e6 = invariants.tau_e6(10)
    elapsed = time.monotonic() - t0
    ok = d4 == D4_TABLE and e6 == E6_TABLE and elapsed < 10
    _report(2, "even-rank (g <= 9) and E6 (g <= 10) tables, exact", ok, elapsed, 10)


def test_criterion_03_cross_method_at_scale():
    t0 = time.monotonic()
    results = verify.suite_cross_method(100, 300)
    elapsed = time.monotonic() - t0
    ok = all(r.ok for r in results) and elapsed < 300
    _report(3, "A r=2..8 and D l=4..6 agree to g=100; recursion vs closed to g=300", ok, elapsed, 300)


def test_criterion_04_operator_oracle():
    t0 = time.monotonic()
    ok = True
    for r in (2, 3, 4, 5):
        for g in range(0, 4):
            ok = ok and psido.tau_from_psido("A", r, g) == invariants.tau_a_closed(r, g)
    for g in range(0, 3):
        ok = ok and psido.tau_from_psido("D", 6, g) == invariants.tau_d_closed(4, g)
    elapsed = time.monotonic() - t0
    ok = ok and elapsed < 120
    _report(4, "operator oracle equals the other methods (A r<=5 g<=3; D l=4 g<=2)", ok, elapsed, 120)


def test_criterion_05_low_genus_closed_forms():
    ok = True
    for r in range(2, 13):
        ok = ok and invariants.tau_a_genfunc(r, 1)[1] == Rat(r - 1, 24)
    for r in range(3, 13):
        ok = ok and invariants.tau_a_genfunc(r, 2)[2] == Rat((r - 3) * (r - 1) * (2 * r + 1), 5760 * r)
    ok = ok and invariants.tau_a_genfunc(2, 2)[2] == Rat(1, 1152)
    for r in range(5, 13):
        want = Rat((r - 5) * (r - 1) * (2 * r + 1) * (8 * r ** 2 - 13 * r - 13), 2903040 * r ** 2)
        ok = ok and invariants.tau_a_genfunc(r, 3)[3] == want
    ok = ok and invariants.tau_a_genfunc(3, 3)[3] == Rat(1, 31104)
    ok = ok and invariants.tau_a_genfunc(4, 3)[3] == Rat(3, 20480)
    ok = ok and invariants.tau_a_genfunc(2, 3)[3] == Rat(1, 82944)
    for l in range(4, 9):
        r = 2 * l - 2
        taus = invariants.tau_d_genfunc(l, 3)
        ok = ok and taus[1] == Rat(r + 2, 24)
        ok = ok and taus[2] == Rat((r + 2) * (r - 6) * (2 * r + 1), 5760 * r)
        ok = ok and taus[3] == Rat((r + 2) * (2 * r + 1) * (8 * r ** 3 - 77 * r ** 2 + 196 * r + 188), 2903040 * r ** 2)
    _report(5, "low-genus closed forms match at every admissible rank <= 12, exact", ok)


def test_criterion_06_integrality_at_scale():
    t0 = time.monotonic()
    taus = oderec.tau_a4_recursion(300)
    ok = True
    for g in range(301):
        a, b, c = integrality.normalize_abc(g, taus[g])
        ok = ok and all(integrality.in_ring_Z_inv(v, (2, 3, 5)) for v in (a, b, c))
        if g >= 4:
            ok = ok and integrality.in_ring_Z_inv(a / (g - 3), (2, 3, 5))
    for g in range(1, 201):
        if g % 5 == 3:
            continue
        for s in range(g // 2 + 1):
            ok = ok and integrality.in_ring_Z_inv(integrality.cg_summand(g, s), (5,))
    elapsed = time.monotonic() - t0
    _report(6, "integrality to g=300 (three sequences + shifted) and per-summand to g=200", ok, elapsed)


def test_criterion_07_arrangement_proof():
    t0 = time.monotonic()
    ok = True
    for spec in integrality.F_SPECS:
        rep = integrality.arrangement_analyze(spec)
        ok = ok and rep.min_value == 0 and {v for _, v in rep.cells} <= {0, 1, 2}
    for spec in integrality.G_SPECS:
        rep = integrality.arrangement_analyze(spec)
        ok = ok and rep.min_value == 0
    elapsed = time.monotonic() - t0
    ok = ok and elapsed < 10
    _report(7, "exact cell enumeration: f-family within {0,1,2}, g-family nonneg", ok, elapsed, 10)


def test_criterion_08_duality():
    ok = True
    for name in ("A1", "A2", "A4", "D4", "E6"):
        ok = ok and all(r.equal for r in frobenius.duality_report(name))
        ok = ok and frobenius.vstar_consistency(name)
    cat = frobenius.catalogue()
    a4 = {(t.alpha, t.m): t for t in cat["A4"].thetas}
    ca = frobenius.special_point("A4", "lower")
    ok = ok and frobenius.theta_eval(a4[(2, 1)], ca) == Rat(341, 25920000)
    ok = ok and frobenius.theta_eval(a4[(4, 1)], ca) == Rat(161, 777600000)
    ok = ok and frobenius.theta_eval(a4[(1, 2)], ca) == Rat(3397, 93312000000)
    d4 = {(t.alpha, t.m): t for t in cat["D4"].thetas}
    cd = frobenius.special_point("D4", "upper")
    ok = ok and frobenius.theta_eval(d4[(1, 1)], cd) == Rat(13, 122472)
    ok = ok and frobenius.theta_eval(d4[(3, 1)], cd) == Rat(1433, 16665989760)
    e6 = {(t.alpha, t.m): t for t in cat["E6"].thetas}
    ce = frobenius.special_point("E6", "upper")
    ok = ok and frobenius.theta_eval(e6[(1, 1)], ce) == Rat(4235, 414056448)
    _report(8, "every catalogued calibration value matches its invariant at the special point", ok)


def test_criterion_09_kernel_identities():
    results = verify.suite_kernels()
    ok = all(r.ok for r in results)
    _report(9, "kernel identity suites (shift, index-shift, product, symmetry, recursion)", ok)


def test_criterion_10_ode_suite():
    results = verify.suite_odes()
    ok = all(r.ok for r in results)
    _report(10, "differential-equation suite (annihilation, branch values, E6 displays)", ok)


def test_criterion_11_bernoulli_identities():
    from adetau.scalar import bernoulli

    ok = True
    for g in range(1, 9):
        val, target = invariants.bernoulli_limit("A", g)
        ok = ok and val == target == bernoulli(2 * g) / math.factorial(2 * g)
        val, target = invariants.bernoulli_limit("D", g)
        ok = ok and val == target == -(1 - Rat(2) ** (1 - 2 * g)) * bernoulli(2 * g) / math.factorial(2 * g)
    _report(11, "interpolated limits at r=-1 equal the Bernoulli targets (g <= 8), exact", ok)


def test_criterion_12_asymptotics():
    t0 = time.monotonic()
    _, ra_small = invariants.asymptotic_predict("A", 5, 250)
    _, ra = invariants.asymptotic_predict("A", 5, 500)
    _, rd_small = invariants.asymptotic_predict("D", 4, 150)
    _, rd = invariants.asymptotic_predict("D", 4, 300)
    _, re_small = invariants.asymptotic_predict("E6", 6, 150)
    _, re = invariants.asymptotic_predict("E6", 6, 300)
    ok = all(abs(x - 1) < 0.05 for x in (ra, rd, re))
    ok = ok and abs(ra - 1) < abs(ra_small - 1)
    ok = ok and abs(rd - 1) < abs(rd_small - 1)
    ok = ok and abs(re - 1) < abs(re_small - 1)
    taus = invariants.tau_a_genfunc(2, 30)
    ok = ok and all(taus[g] == Rat(1, 24 ** g * math.factorial(g)) for g in range(31))
    _, r1 = invariants.asymptotic_predict("A", 2, 400)
    ok = ok and abs(r1 - 1) < 0.05
    elapsed = time.monotonic() - t0
    ok = ok and elapsed < 120
    _report(12, "asymptotic laws within 5% at large genus, error decreasing, exact rank-one law", ok, elapsed, 120)


def test_criterion_13_wave_pairing():
    ok = True
    for r in (3, 5):
        for i in range(0, 5):
            ok = ok and psido.pairing_defect(r, Rat(r), i, 8).is_zero()
    results = verify.suite_pairing()
    ok = ok and all(r.ok for r in results)
    _report(13, "pairing defect zero to order 8 (i <= 4, r in {3,5}); 12-order product identity", ok)
