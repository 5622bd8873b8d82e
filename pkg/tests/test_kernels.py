import random

import pytest

from adetau.backend import Rat
from adetau import kernels, psido
from adetau.kernels import C_coeff, Ctilde, X_series, c_poly, d_coeff, f_series, w_series
from adetau.scalar import poch_asc, sign_pow

rng = random.Random(5)


def test_c_poly_table_entries():
    r = Rat(5)
    assert c_poly(1, 1, r) == Rat(5, 2)
    assert c_poly(2, 3, r) == Rat(25, 3)
    assert c_poly(3, 2, r) == 0
    assert c_poly(0, 0, r) == 1
    # the displayed degree-5 row, as polynomials in r
    for rr in (Rat(5), Rat(7, 2), Rat(-3, 4)):
        assert c_poly(2, 5, rr) == rr * (4 * rr - 7) / 60 * (rr * (rr - 1) * (rr - 2) / 6)
        assert c_poly(3, 5, rr) == rr ** 3 * (rr - 1) * (7 * rr - 10) / 576
        assert c_poly(5, 5, rr) == (rr / 2) ** 5 / 120


def test_d_coeff_low_orders():
    lam, r = Rat(7, 3), Rat(3)
    assert d_coeff(lam, r, 0, 0) == 1
    assert d_coeff(lam, r, 1, 1) == (r / 2) * lam * (lam - 1) * (lam - 2)


def test_d_coeff_matches_operator_expansion():
    # brute-force oracle: coefficients of L^{k/r} for L = d^r + C x
    r, C, k = 3, Rat(7, 3), 7
    L = psido.PsiDOp({r: (Rat(1),), 0: (Rat(0), C)})
    depth = k + 6
    R = psido.rth_root(L, r, depth)
    P = psido.op_power(R, k, k - 1 - depth)
    lam = Rat(k, r)
    for j in range(3):
        for s in range(3):
            order = k - r * s - (r + 1) * j
            if P.min_order is not None and order < P.min_order:
                continue
            poly = P.terms.get(order, ())
            got = poly[s] if s < len(poly) else Rat(0)
            assert got == C ** (j + s) * d_coeff(lam, Rat(r), j, s)


def test_w_series_displayed_coefficients():
    for r in (Rat(5), Rat(3), Rat(9, 2)):
        w = w_series(r, 5)
        assert w[0] == 1 and w[1] == 1
        assert w[2] == -(r - 1) / 6
        assert w[3] == (r - 1) * (2 * r + 1) / 72
    w5 = w_series(Rat(5), 5)
    assert w5[2] == Rat(-2, 3) and w5[3] == Rat(11, 18)


def test_w_series_rejects_degenerate_r():
    with pytest.raises(ValueError):
        w_series(Rat(0), 4)
    with pytest.raises(ValueError):
        w_series(Rat(-1), 4)


def test_C_coeff_displayed():
    r, j = Rat(5), Rat(2)
    assert C_coeff(r, j, 0) == 1
    assert C_coeff(r, j, 1) == j / 2 - (r - 1) / 6
    assert C_coeff(r, j, 2) == j * (j - r) / 6 + (r - 1) * (2 * r + 1) / 72
    assert C_coeff(r, j, 3) == j * (j - r) * (j - r - 1) / 24 - (r - 1) * (r + 2) * (2 * r + 1) / 540
    assert C_coeff(r, j, -1) == 0 and C_coeff(r, j, -2) == 0


def test_C_coeff_log_branch_consistency():
    # d/dj of (w^{j+1}-1)/(j+1) at j = -1 is log w; check the j -> -1 limit
    # numerically through two nearby rational j values bracketing -1
    r = Rat(4)
    for n in range(5):
        left = C_coeff(r, Rat(-1), n)
        # interpolate linearly from j = -1 +/- 1/1000
        a = C_coeff(r, Rat(-999, 1000), n)
        b = C_coeff(r, Rat(-1001, 1000), n)
        assert abs(float((a + b) / 2 - left)) < 1e-4


def test_f_series_constant_and_linear():
    r, j = Rat(6), Rat(3, 2)
    f = f_series(r, j, 4)
    assert f[0] == 1
    assert f[1] == -3 * C_coeff(r, j, 2)
    # half-integer indices accepted
    fh = f_series(r, Rat(1, 2), 3)
    assert fh[0] == 1


def test_X_series_displays_and_parity():
    for r in (Rat(5), Rat(7), Rat(11, 3)):
        X = X_series(r, 9)
        assert X[-1] == 1
        assert X[1] == -(r - 1) / 6
        assert X[3] == (r - 1) * (2 * r + 1) * (r - 3) / 360
        assert X.is_odd()


def test_X_series_defining_equation_integer_r():
    # ((X+1)^{r+1} - (X-1)^{r+1}) / (2(r+1)) = u^{-r}
    from adetau.series import LaurentSeries

    r = 5
    N = 12
    X = X_series(Rat(r), N)
    one = LaurentSeries.constant(Rat(1), N + r + 1)
    Xp = (X.extend(N) + one.truncate(X.trunc_order)).pow_int(r + 1)
    Xm = (X.extend(N) - one.truncate(X.trunc_order)).pow_int(r + 1)
    lhs = (Xp - Xm).scale(Rat(1, 2 * (r + 1)))
    assert lhs[-r] == 1
    assert all(lhs[k] == 0 for k in range(-r + 1, lhs.trunc_order))


def test_Ctilde_first_values():
    for _ in range(6):
        r = Rat(rng.randint(2, 9))
        i = Rat(rng.randint(-4, 4), rng.randint(1, 3))
        j = Rat(rng.randint(-4, 4), rng.randint(1, 3))
        assert Ctilde(r, i, j, 0) == 1
        assert Ctilde(r, i, j, 1) == i - j


def test_Ctilde_cross_check_against_residues():
    # independent pipeline: operator residues of L = d^r + C x at x = 0
    r, C = 5, Rat(5)
    for n in (1, 2):
        k = -1 + (r + 1) * n
        z = psido.residue_at_zero(r, C, k)
        expected = (
            sign_pow((r + 1) * n)
            * poch_asc(1 + Rat(n - 1, r), n)
            * Ctilde(Rat(r), Rat(0), Rat(0), n)
            * C ** n
            / Rat(2) ** n
        )
        assert z == expected


def test_product_identity_spot():
    from adetau.verify import _alt

    r, i, j = Rat(5), Rat(1, 2), Rat(-1, 2)
    K = 8
    lhs = f_series(r, i, K + 1) * _alt(f_series(r, j, K + 1))
    for n in range(K):
        rhs = poch_asc(1 + (Rat(n) - i - j - 1) / r, n) * Ctilde(r, i, j, n) * (r / 2) ** n
        assert lhs[n] == rhs
