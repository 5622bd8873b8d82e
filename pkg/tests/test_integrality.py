import random

import pytest

from adetau.backend import Rat
from adetau import integrality as intg
from adetau.oderec import tau_a4_recursion

rng = random.Random(17)


def test_normalize_abc_low_genus():
    taus = tau_a4_recursion(10)
    a, b, c = intg.normalize_abc(1, taus[1])
    assert a == Rat(1, 30) and b == Rat(1, 30)
    assert intg.normalize_abc(0, taus[0]) == (Rat(1), Rat(1), Rat(1))
    assert intg.normalize_abc(3, taus[3]) == (Rat(0), Rat(0), Rat(0))


def test_normalize_abc_uniform_a_form():
    from adetau.scalar import poch_asc, sign_pow

    taus = tau_a4_recursion(40)
    for g in range(41):
        m = (2 * g - 1) // 5
        A = Rat(2 * g - 1, 5) - m
        if m >= 0:
            uniform = Rat(sign_pow(m), 5) * poch_asc(A, m) * taus[g]
            assert intg.normalize_abc(g, taus[g])[0] == uniform


def test_normalize_abc_bc_fractional_part_arguments():
    # the second Pochhammer argument is always {(3g+1)/5} for b, {(4g+3)/5} for c
    from adetau.scalar import poch_asc

    taus = tau_a4_recursion(30)
    lengths = {0: lambda n: (n, n), 4: lambda n: (n, n), 2: lambda n: (n - 1, n), 1: lambda n: (n, n - 1)}
    nn = {0: lambda g: g // 5, 4: lambda g: (g + 1) // 5, 2: lambda g: (g + 3) // 5, 1: lambda g: (g + 4) // 5}
    for g in range(1, 31):
        gm = g % 5
        if gm == 3:
            continue
        n = nn[gm](g)
        la, lb = lengths[gm](n)
        A = Rat(2 * g - 1, 5) - (2 * g - 1) // 5
        B = Rat(3 * g + 1, 5) - (3 * g + 1) // 5
        C = Rat(4 * g + 3, 5) - (4 * g + 3) // 5
        _, b, c = intg.normalize_abc(g, taus[g])
        assert b == poch_asc(A, la) * poch_asc(B, lb) * taus[g]
        assert c == poch_asc(A, la) * poch_asc(C, lb) * taus[g]


def test_in_ring():
    assert intg.in_ring_Z_inv(Rat(11, 3600), (2, 3, 5))
    assert not intg.in_ring_Z_inv(Rat(1, 7), (2, 3, 5))
    assert intg.in_ring_Z_inv(Rat(0), (2,))


def test_cg_summand_values_and_assembly():
    from adetau.scalar import poch_asc

    s0 = intg.cg_summand(5, 0)
    assert s0 == poch_asc(Rat(3, 5), 1) * poch_asc(Rat(4, 5), 1) * poch_asc(Rat(1, 5), 3) / 120
    taus = tau_a4_recursion(40)
    for g in range(1, 41):
        if g % 5 == 3:
            continue
        assert intg.cg_assemble(g) == intg.normalize_abc(g, taus[g])[2]
    with pytest.raises(ValueError):
        intg.cg_summand(5, 3)
    with pytest.raises(ValueError):
        intg.cg_summand(3, 0)


def test_integrality_sweep_small():
    taus = tau_a4_recursion(80)
    for g in range(81):
        a, b, c = intg.normalize_abc(g, taus[g])
        assert intg.in_ring_Z_inv(a, (2, 3, 5))
        assert intg.in_ring_Z_inv(b, (2, 3, 5))
        assert intg.in_ring_Z_inv(c, (2, 3, 5))
        if g >= 4:
            assert intg.in_ring_Z_inv(a / (g - 3), (2, 3, 5))


def test_tau9_denominator_contains_7_but_a9_does_not():
    taus = tau_a4_recursion(9)
    assert taus[9].denominator % 7 == 0
    a9 = intg.normalize_abc(9, taus[9])[0]
    assert a9.denominator % 7 != 0


def test_arrangement_f_specs():
    for spec in intg.F_SPECS:
        rep = intg.arrangement_analyze(spec)
        assert rep.min_value == 0
        assert rep.max_value == 2
        assert {v for _, v in rep.cells} <= {0, 1, 2}
        assert rep.cell_count >= 3


def test_arrangement_g_specs_nonnegative():
    for spec in intg.G_SPECS:
        rep = intg.arrangement_analyze(spec)
        assert rep.min_value == 0


def test_specs_doubly_periodic():
    for spec in intg.F_SPECS + intg.G_SPECS:
        assert spec.is_doubly_periodic()


def test_arrangement_rejects_aperiodic():
    bad = intg.FloorFuncSpec("bad", ((1, 0, Rat(0)),), (1,))
    with pytest.raises(ValueError):
        intg.arrangement_analyze(bad)


def test_cell_values_independent_of_interior_point():
    for spec in (intg.F_SPECS[0], intg.G_SPECS[2]):
        rep = intg.arrangement_analyze(spec)
        for poly, val in rep.cells:
            assert spec.value(*intg.second_interior_point(poly)) == val


def test_cells_cover_sampled_values():
    # dense generic sampling can't discover values outside the cell report
    spec = intg.F_SPECS[1]
    rep = intg.arrangement_analyze(spec)
    cell_values = {v for _, v in rep.cells}
    for _ in range(400):
        x = Rat(rng.randint(0, 10000), 10007)
        y = Rat(rng.randint(0, 10000), 10009)
        assert spec.value(x, y) in cell_values


def test_report_json_shape():
    rep = intg.arrangement_analyze(intg.F_SPECS[0])
    obj = rep.json_obj()
    assert obj["min"] == 0 and len(obj["cells"]) == rep.cell_count
    assert all("vertices" in c and "value" in c for c in obj["cells"])
