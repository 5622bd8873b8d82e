import random

import pytest

from adetau.backend import Rat
from adetau import frobenius as fro
from adetau.scalar import QuadElem

rng = random.Random(23)


def test_catalogue_families():
    cat = fro.catalogue()
    assert set(cat) == {"A1", "A2", "A4", "D4", "E6"}
    assert cat["A4"].r == 5 and cat["D4"].r == 6 and cat["E6"].r == 12
    assert cat["D4"].exponents == (1, 3, 5, 3)
    assert cat["E6"].exponents == (1, 4, 5, 7, 8, 11)


def test_eta_involution():
    for name, fam in fro.catalogue().items():
        v = [Rat(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(fam.rank)]
        twice = fro.apply_eta(fam.eta, fro.apply_eta(fam.eta, v))
        assert list(twice) == v


def test_theta_eval_a4_acceptance_values():
    cat = fro.catalogue()
    coords = fro.special_point("A4", "lower")
    table = {(t.alpha, t.m): t for t in cat["A4"].thetas}
    assert fro.theta_eval(table[(2, 1)], coords) == Rat(341, 25920000)
    assert fro.theta_eval(table[(4, 1)], coords) == Rat(161, 777600000)
    assert fro.theta_eval(table[(1, 2)], coords) == Rat(3397, 93312000000)
    assert fro.theta_eval(table[(1, 1)], coords) == 0  # both odd-slot coordinates vanish


def test_theta_eval_d4_e6_acceptance_values():
    cat = fro.catalogue()
    cd = fro.special_point("D4", "upper")
    d4 = {(t.alpha, t.m): t for t in cat["D4"].thetas}
    assert fro.theta_eval(d4[(1, 1)], cd) == Rat(13, 122472)
    assert fro.theta_eval(d4[(3, 1)], cd) == Rat(1433, 16665989760)
    ce = fro.special_point("E6", "upper")
    e6 = {(t.alpha, t.m): t for t in cat["E6"].thetas}
    assert fro.theta_eval(e6[(1, 1)], ce) == Rat(4235, 414056448)


def test_duality_full_catalogue():
    for name in ("A1", "A2", "A4", "D4", "E6"):
        rows = fro.duality_report(name)
        assert rows, name
        assert all(r.equal for r in rows), [r for r in rows if not r.equal]


def test_vstar_consistency_all():
    for name in ("A1", "A2", "A4", "D4", "E6"):
        assert fro.vstar_consistency(name), name


def test_theta_eval_rejects_wrong_arity():
    cat = fro.catalogue()
    th = cat["A4"].thetas[0]
    with pytest.raises(ValueError):
        fro.theta_eval(th, (Rat(1), Rat(2)))


def test_uk_residues_two_routes_random():
    for _ in range(10):
        s = [Rat(rng.randint(-8, 8), rng.randint(1, 5)) for _ in range(4)]
        rep = fro.uk_residues("A", s, 15)
        assert rep["u_inversion"] == rep["u_residue"]
    for _ in range(10):
        s = [Rat(rng.randint(-8, 8), rng.randint(1, 5)) for _ in range(4)]
        if not s[-1]:
            s[-1] = Rat(2, 3)
        rep = fro.uk_residues("D", s, 15)
        assert rep["u_inversion"] == rep["u_residue"]
        assert rep["v_inversion"] == rep["v_residue"]


def test_uk_residues_examples():
    rep = fro.uk_residues("A", [Rat(3)], 4)
    assert rep["u_inversion"][0] == Rat(-3, 2)
    s = [Rat(1, 2), Rat(2, 3), Rat(3, 5), Rat(5, 7)]
    rep = fro.uk_residues("D", s, 8)
    assert rep["u_inversion"][0] == -s[0] / 6
    assert rep["v_inversion"][0] == s[-1]
    s0 = [Rat(1), Rat(1), Rat(1), Rat(0)]
    rep = fro.uk_residues("D", s0, 6)
    assert all(v == 0 for v in rep["v_inversion"])


def test_hyper_bridge():
    for r in (3, 4, 5, 6, 7):
        for g in (1, 2, 3):
            lhs, rhs = fro.hyper_bridge_a(r, g)
            assert lhs == rhs


def test_special_coordinates_a_first_value():
    s = fro.special_coordinates_a(5)
    assert s[0] == Rat(5, 6)  # binom(6,3)/(4*6)
    assert s[1] == 0
    assert s[2] == Rat(1, 16)  # binom(6,5)/(16*6)


def test_eguchi_yang_superpotential_monic_degree_12():
    t = {"t0": Rat(1, 3), "t3": Rat(1, 2), "t4": Rat(2), "t6": Rat(-1, 5), "t7": Rat(1), "t10": Rat(1, 4)}
    lam = fro.eguchi_yang_superpotential(t, 12)
    assert lam[12] == QuadElem(1)
    # inversion over Q(sqrt3) runs and yields quadratic-field coefficients
    from adetau.series import invert_superpotential

    u = invert_superpotential(lam, 12, 3)
    assert all(isinstance(v, QuadElem) or v == 0 for v in u)
