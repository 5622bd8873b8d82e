import hashlib
import json
from importlib import resources

import pytest

from adetau.backend import Rat
from adetau.oderec import (
    A4_SEEDS,
    BranchSpec,
    branch_series,
    catalogue,
    indicial_roots,
    recursion_check_a4,
    tau_a4_recursion,
)

# pins the exact integer data of the shipped equations
ODES_SHA256 = "51286bdfc6a06c39e00bdb7d2ed61588ffacd1e3704621e70df40a4ff799724d"


def test_catalogue_checksum():
    raw = resources.files("adetau.data").joinpath("odes.json").read_bytes()
    assert hashlib.sha256(raw).hexdigest() == ODES_SHA256


def test_catalogue_structure():
    cat = catalogue()
    assert set(cat) == {"a4_dual", "d4_dual", "e6_dual"}
    assert max(k for k, _ in cat["a4_dual"].terms) == 4
    assert max(k for k, _ in cat["d4_dual"].terms) == 2
    assert max(k for k, _ in cat["e6_dual"].terms) == 4


def test_indicial_roots():
    cat = catalogue()
    assert indicial_roots(cat["a4_dual"]) == [Rat(0), Rat(1, 5), Rat(2, 5), Rat(4, 5)]
    assert indicial_roots(cat["d4_dual"]) == [Rat(-1, 6), Rat(13, 6)]
    assert indicial_roots(cat["e6_dual"]) == [Rat(-1, 12), Rat(25, 12), Rat(77, 12), Rat(103, 12)]


def test_e6_branch_first_coefficients():
    cat = catalogue()
    e6 = cat["e6_dual"]
    assert branch_series(e6, BranchSpec(Rat(25, 12), 13), 1)[1] == Rat(4235, 2 ** 9 * 3 * 13)
    assert branch_series(e6, BranchSpec(Rat(103, 12), 13), 1)[1] == Rat(34829, 2 ** 8 * 5 * 7 * 13)
    assert branch_series(e6, BranchSpec(Rat(-1, 12), 13), 1)[1] == Rat(435, 2 ** 8 * 13)


def test_branch_series_rejects_wrong_step():
    cat = catalogue()
    with pytest.raises(ValueError):
        branch_series(cat["e6_dual"], BranchSpec(Rat(25, 12), 5), 3)


def test_branch_series_rejects_non_root():
    cat = catalogue()
    with pytest.raises(ValueError):
        branch_series(cat["d4_dual"], BranchSpec(Rat(1, 2), 7), 3)


def test_recursion_seeds_and_table():
    taus = tau_a4_recursion(10)
    expected = [
        Rat(1),
        Rat(1, 6),
        Rat(11, 3600),
        Rat(0),
        Rat(341, 25920000),
        Rat(161, 2 ** 10 * 3 ** 5 * 5 ** 5),
        Rat(3397, 2 ** 13 * 3 ** 6 * 5 ** 6),
        Rat(3421, 2 ** 13 * 3 ** 8 * 5 ** 7),
        Rat(0),
        Rat(1670581, 2 ** 20 * 3 ** 10 * 5 ** 9 * 7),
        Rat(26605753, 2 ** 23 * 3 ** 12 * 5 ** 12),
    ]
    assert taus == expected
    assert list(A4_SEEDS) == expected[:5]


def test_recursion_check_detects_perturbation():
    taus = tau_a4_recursion(20)
    assert recursion_check_a4(taus) == (True, None)
    taus[10] = taus[10] + 1
    ok, bad = recursion_check_a4(taus)
    assert not ok and bad == 10


def test_recursion_vanishing_class():
    taus = tau_a4_recursion(60)
    for g in range(61):
        assert (taus[g] == 0) == ((2 * g - 1) % 5 == 0)


def test_recursion_matches_closed_formula_sample():
    from adetau.invariants import tau_a_closed

    taus = tau_a4_recursion(40)
    for g in (17, 23, 31, 40):
        assert taus[g] == tau_a_closed(5, g)
