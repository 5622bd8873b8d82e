"""Calibration polynomials, special points, and the duality checks.

The catalogue (``data/theta_catalogue.json``) ships the displayed
calibration polynomials theta_{alpha,m} and the special point v* for the
five families with explicit tables (A1, A2, A4, D4, E6), each in its own
coordinate convention (upper indices v^a or lowered v_a = eta v^b).  The
duality under test: theta_{alpha,m}(v*) equals the invariant tau_g with
2g - 1 = m_alpha + r m, and 0 whenever that g is not an integer.

The module also carries the superpotential side: coefficients of the
inverse branches computed two independent ways (compositional inversion
vs. residues of fractional powers), the rational special coordinates
bridging to the hypergeometric sum, and a construction of the quadratic
field superpotential for the E6 family as a structural smoke test.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .backend import ONE, Rat, rat_from_str
from .scalar import QuadElem, gen_binom
from .series import (
    LaurentSeries,
    invert_superpotential,
    invert_superpotential_neg,
    series_pow_frac,
    series_sqrt,
)
from . import invariants


@dataclass(frozen=True)
class ThetaPoly:
    family: str
    alpha: int
    m: int
    monomials: tuple  # ((exponents per upper/lower coordinate), coefficient)
    note: str = ""


@dataclass(frozen=True)
class FamilyData:
    name: str
    family: str
    r: int
    rank: int
    exponents: tuple
    eta: tuple  # rows of the pairing matrix
    theta_coords: str  # coordinate convention the theta tables use
    vstar: tuple  # values in vstar_coords convention
    vstar_coords: str
    thetas: tuple


_catalogue_cache = None


def catalogue() -> dict:
    global _catalogue_cache
    if _catalogue_cache is None:
        raw = json.loads(
            resources.files("adetau.data").joinpath("theta_catalogue.json").read_text()
        )
        out = {}
        for name, fam in raw.items():
            thetas = tuple(
                ThetaPoly(
                    fam["family"],
                    t["alpha"],
                    t["m"],
                    tuple((tuple(e), rat_from_str(c)) for e, c in t["monomials"]),
                    t.get("note", ""),
                )
                for t in fam["thetas"]
            )
            out[name] = FamilyData(
                name,
                fam["family"],
                fam["r"],
                fam["rank"],
                tuple(fam["exponents"]),
                tuple(tuple(row) for row in fam["eta"]),
                fam["theta_coords"],
                tuple(rat_from_str(v) for v in fam["vstar"]["values"]),
                fam["vstar"]["coords"],
                thetas,
            )
        _catalogue_cache = out
    return _catalogue_cache


def apply_eta(eta, coords):
    """Lower (or raise) coordinates with the pairing matrix.

    All shipped pairings are involutive permutation matrices, so the same
    map converts in both directions.
    """
    return tuple(
        sum((Rat(eta[i][j]) * coords[j] for j in range(len(coords))), Rat(0))
        for i in range(len(eta))
    )


def special_point(name: str, coords: str):
    """The special point of a catalogued family, in the requested convention."""
    fam = catalogue()[name]
    v = fam.vstar
    if coords == fam.vstar_coords:
        return v
    return apply_eta(fam.eta, v)


def theta_eval(poly: ThetaPoly, coords) -> object:
    """Exact evaluation of a calibration polynomial at explicit coordinates.

    ``coords`` must already be in the convention of the family's theta
    table (use :func:`special_point` with the family's ``theta_coords``).
    """
    acc = Rat(0)
    for exps, coeff in poly.monomials:
        if len(exps) != len(coords):
            raise ValueError("coordinate count mismatch")
        term = coeff
        for e, v in zip(exps, coords):
            if e:
                term = term * v ** e
        acc = acc + term
    return acc


@dataclass(frozen=True)
class DualityRow:
    name: str
    alpha: int
    m: int
    g2: int  # 2g (even when the genus is integral)
    theta_value: object
    tau_value: object

    @property
    def equal(self) -> bool:
        return self.theta_value == self.tau_value


def _family_tau(fam: FamilyData, g: int):
    if fam.family == "A":
        if fam.r == 5:
            from .oderec import tau_a4_recursion

            return tau_a4_recursion(g)[g]
        return invariants.tau_a_genfunc(fam.r, g)[g]
    if fam.family == "D":
        return invariants.tau_d_genfunc(fam.rank, g)[g]
    return invariants.tau_e6(g)[g]


def duality_report(name: str):
    """Evaluate every catalogued theta at v* against the matching invariant.

    Each theta_{alpha,m} pairs with the genus solving
    2g - 1 = m_alpha + r m; a non-integral genus means the value must be
    zero.  For the even-rank family the duplicated top exponent pairs with
    the identically-vanishing bracket, which at v* agrees with zero.
    """
    fam = catalogue()[name]
    coords = special_point(name, fam.theta_coords)
    rows = []
    for th in fam.thetas:
        m_alpha = fam.exponents[th.alpha - 1]
        twice_g = m_alpha + fam.r * th.m + 1
        theta_val = theta_eval(th, coords)
        if twice_g % 2 == 0:
            tau_val = _family_tau(fam, twice_g // 2)
            if fam.family == "D" and th.alpha == fam.rank:
                tau_val = Rat(0)
        else:
            tau_val = Rat(0)
        rows.append(DualityRow(name, th.alpha, th.m, twice_g, theta_val, tau_val))
    return rows


def vstar_consistency(name: str) -> bool:
    """Each special-point coordinate equals the invariant with 2g-1 = m_alpha.

    Non-integral genus forces the coordinate to vanish.
    """
    fam = catalogue()[name]
    v_lower = special_point(name, "lower")
    for alpha, m_alpha in enumerate(fam.exponents, start=1):
        twice_g = m_alpha + 1
        if twice_g % 2 == 0:
            expected = _family_tau(fam, twice_g // 2)
        else:
            expected = Rat(0)
        if fam.family == "D" and alpha == fam.rank:
            expected = Rat(0)
        if v_lower[alpha - 1] != expected:
            return False
    return True


# ---------------------------------------------------------------------------
# superpotentials and residues


def superpotential_a(r: int, s) -> LaurentSeries:
    """lambda(p) = p^r + s_1 p^{r-2} + ... + s_{r-1} p^0 (no p^{r-1} term)."""
    if len(s) != r - 1:
        raise ValueError("A-family superpotential needs r-1 coefficients")
    terms = {r: ONE}
    for beta, sb in enumerate(s, start=1):
        terms[r - 1 - beta] = sb
    return LaurentSeries.from_terms(terms, r + 1)


def superpotential_d(l: int, s) -> LaurentSeries:
    """lambda(p) = p^r + sum_b s_b p^{r-2b} + s_l^2 p^{-2} with r = 2l-2."""
    if len(s) != l:
        raise ValueError("D-family superpotential needs l coefficients")
    r = 2 * l - 2
    terms = {r: ONE}
    for beta in range(1, l):
        terms[r - 2 * beta] = s[beta - 1]
    terms[-2] = s[-1] * s[-1]
    return LaurentSeries.from_terms(terms, r + 1)


def _h_series(lam: LaurentSeries, r: int, N: int) -> LaurentSeries:
    """lambda * w^r as a power series in w = 1/p (unit constant term)."""
    terms = {r - e: c for e, c in lam.known_terms()}
    return LaurentSeries.from_terms({e: c for e, c in terms.items() if e < N}, N)


def uk_from_residues(lam: LaurentSeries, r: int, kmax: int):
    """u_k from k u_k = -[w^{k+1}] (lambda w^r)^{k/r}; independent of inversion."""
    out = []
    for k in range(1, kmax + 1):
        h = _h_series(lam, r, k + 2)
        hk = series_pow_frac(h, Rat(k, r), k + 2)
        out.append(-hk[k + 1] / k)
    return out


def vm_from_residues(lam: LaurentSeries, r: int, mmax: int, sl=None):
    """v_m of the negative branch from residues of half-integer powers.

    Nonzero entries sit at m = r*j with v_{rj} = [p^{2j}] G^{j+1/2} / (2j+1)
    for G = p^2 lambda; everything else vanishes.
    """
    from .scalar import scalar_sqrt

    sl2 = lam[-2] if lam.valuation <= -2 else Rat(0)
    if sl is None:
        sl = scalar_sqrt(sl2)
        if sl is None:
            raise ValueError("p^-2 coefficient is not a perfect square")
    if not sl:
        return [Rat(0)] * (mmax + 1)
    G = lam.shift(2)  # p^2 * lambda, ordinary polynomial with G(0) = sl^2
    inv = ONE / sl2
    unit = G.scale(inv).extend(max(G.trunc_order, 2 * mmax + 3))
    out = [Rat(0)] * (mmax + 1)
    j = 0
    while r * j <= mmax:
        gp = series_pow_frac(unit, Rat(2 * j + 1, 2), 2 * j + 1)
        out[r * j] = sl ** (2 * j + 1) * gp[2 * j] / (2 * j + 1)
        j += 1
    return out


def uk_residues(family: str, s, kmax: int) -> dict:
    """Inverse-branch coefficients by two independent routes.

    Returns {"u_inversion", "u_residue"} (plus "v_inversion", "v_residue"
    for the D family); the pairs must agree entrywise.
    """
    family = family.upper()
    if family == "A":
        r = len(s) + 1
        lam = superpotential_a(r, s)
        return {
            "u_inversion": invert_superpotential(lam, r, kmax),
            "u_residue": uk_from_residues(lam, r, kmax),
        }
    if family == "D":
        l = len(s)
        r = 2 * l - 2
        lam = superpotential_d(l, s)
        mmax = max(r, kmax)
        return {
            "u_inversion": invert_superpotential(lam, r, kmax),
            "u_residue": uk_from_residues(lam, r, kmax),
            "v_inversion": invert_superpotential_neg(lam, r, mmax, sl=s[-1]),
            "v_residue": vm_from_residues(lam, r, mmax, sl=s[-1]),
        }
    raise ValueError("two-route residues implemented for the A and D families")


def special_coordinates_a(r: int):
    """Rational special s-coordinates: s_{2i-1} = binom(r+1, 2i+1)/(4^i (r+1)).

    At this point (1-2g) u_{2g-1} reproduces the terminating hypergeometric
    sum of the A family; the bridge is exercised in the duality suite.
    """
    s = [Rat(0)] * (r - 1)
    for i in range(1, (r - 1) // 2 + 1 + 1):
        idx = 2 * i - 1
        if idx > r - 1:
            break
        s[idx - 1] = gen_binom(Rat(r + 1), 2 * i + 1) / (Rat(4) ** i * (r + 1))
    return s


def hyper_bridge_a(r: int, g: int):
    """((1-2g) u_{2g-1} at the special point, the hypergeometric sum)."""
    s = special_coordinates_a(r)
    lam = superpotential_a(r, s)
    u = invert_superpotential(lam, r, 2 * g - 1)
    lhs = (1 - 2 * g) * u[2 * g - 2]
    rhs = invariants._hyper_sum(
        r, g, r // 2, lambda i: gen_binom(Rat(r + 1), 2 * i + 1) / Rat(4 ** i * (r + 1))
    )
    return lhs, rhs


# ---------------------------------------------------------------------------
# E6 superpotential over Q(sqrt3): structural smoke construction


def _q3(a, b=0):
    def q(x):
        return Rat(x) if not isinstance(x, tuple) else Rat(*x)

    return QuadElem(q(a), q(b))


def eguchi_yang_superpotential(t: dict, N: int) -> LaurentSeries:
    """The rank-six superpotential over Q(sqrt3) at rational flat times.

    ``t`` maps the keys t0, t3, t4, t6, t7, t10 to rationals.  Returns the
    Laurent expansion in p down to p^{12-N}: degree 12, monic after the
    overall normalization (the leading coefficients of the polynomial data
    combine to 270 + 156 sqrt3, which the prefactor cancels).  Used as a
    structural check only; the theta tables are evaluated directly.
    """
    t0, t3, t4, t6, t7, t10 = (Rat(t[k]) for k in ("t0", "t3", "t4", "t6", "t7", "t10"))
    # polynomial data in p, coefficients in Q(sqrt3)
    Q1 = {
        15: _q3(270),
        13: _q3(171, 57) * t10,
        11: _q3(54, 27) * t10 ** 2,
        10: _q3(126, 84) * t7,
        9: _q3((35, 4), (175, 36)) * t10 ** 3 + _q3(144, 72) * t6,
        8: _q3((135, 2), (81, 2)) * t7 * t10,
        7: _q3((225, 4), (125, 4)) * t6 * t10 + _q3((345, 384), (35, 96)) * t10 ** 4 + _q3(135, 81) * t4,
        6: _q3(126, 72) * t3 + _q3(10, (35, 6)) * t7 * t10 ** 2,
        5: _q3((63, 4), 9) * t7 ** 2 + _q3(36, 21) * t4 * t10 + _q3((11, 768), (19, 2304)) * t10 ** 5
           + _q3((21, 4), 3) * t6 * t10 ** 2,
        4: _q3((33, 2), (19, 2)) * t3 * t10 + _q3((19, 48), (11, 48)) * t7 * t10 ** 3 + _q3(24, 14) * t6 * t7,
        3: -_q3((11, 8), (19, 24)) * t7 ** 3 * t10,
        1: _q3((45, 4), (13, 2)) * t3 * t7,
        0: _q3((5, 8), (13, 36)) * t7 ** 3,
    }
    P1 = {
        10: _q3(78),
        8: _q3(30, 10) * t10,
        6: _q3((14, 3), (7, 3)) * t10 ** 2,
        5: _q3((33, 2), 11) * t7,
        4: _q3((1, 4), (5, 36)) * t10 ** 3 + _q3(16, 8) * t6,
        3: _q3((25, 12), (5, 4)) * t7 * t10,
        2: _q3(5, 3) * t4 + _q3((7, 3456), (1, 864)) * t10 ** 4 + _q3((3, 4), (5, 12)) * t6 * t10,
        1: -_q3((7, 2), 2) * t3,
        0: -_q3((7, 12), (1, 3)) * t7 ** 2,
    }
    P2 = {
        10: _q3(12),
        8: _q3(6, 2) * t10,
        6: _q3((4, 3), (2, 3)) * t10 ** 2,
        5: _q3(6, 4) * t7,
        4: _q3(8, 4) * t6 + _q3((1, 8), (5, 72)) * t10 ** 3,
        3: _q3((5, 3), 1) * t7 * t10,
        2: _q3(10, 6) * t4 + _q3((7, 1728), (1, 432)) * t10 ** 4 + _q3((3, 2), (5, 6)) * t6 * t10,
        1: _q3(14, 8) * t3,
        0: _q3((7, 12), (1, 3)) * t7 ** 2,
    }
    u0 = (
        -_q3(270, 156) * t0
        - _q3((19, 16), (11, 16)) * t4 * t10 ** 2
        - _q3((33, 576), (19, 576)) * t6 * t10 ** 3
        - _q3((21, 4), 3) * t6 ** 2
        - _q3((33, 16), (19, 16)) * t10 * t7 ** 2
    )
    # work in w = 1/p: exponent of p^k becomes index -k
    order = N + 16
    q1 = LaurentSeries.from_terms({-k: c for k, c in Q1.items() if c}, order)
    p1 = LaurentSeries.from_terms({-k: c for k, c in P1.items() if c}, order)
    p2 = LaurentSeries.from_terms({-k: c for k, c in P2.items() if c}, order)
    sq = series_sqrt(p2, order - 10)
    inner = q1 + p1 * sq
    lam_w = (inner.shift(3) + LaurentSeries.constant(-u0, order).truncate(inner.trunc_order + 3)).scale(
        _q3(270, 156).inverse()
    )
    # back to p-exponents, truncated below p^{12-N}
    terms = {-e: c for e, c in lam_w.known_terms() if -e > 12 - N}
    return LaurentSeries.from_terms(terms, 13)
