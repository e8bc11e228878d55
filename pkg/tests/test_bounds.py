import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from nonsimple.bounds import (
    FOURTH_POWER,
    PARABOLIC,
    BoundParams,
    CoverCase,
    all_cases,
    bck_bound_log,
    case_bound,
    cover_degree,
    cover_degree_log,
    eehk_bound_log,
    height_lift_bound_log,
    log_B0,
    moduli_dims,
    optimize_level,
    parse_log_B,
    s_bound_log,
    total_bound_log,
)
from nonsimple.errors import BelowThresholdError, InvalidInputError
from nonsimple.symplectic import block_diag_index

DIAG = CoverCase.diagonal(1, 1)
REL = 1e-9


def close(a, b):
    return math.isclose(a, b, rel_tol=REL, abs_tol=REL)


def test_moduli_dims():
    assert moduli_dims(1) == (2, 36)
    assert moduli_dims(2) == (4, 136)
    assert moduli_dims(8)[0] == 37


def test_fourth_power_substitutes_genus():
    P = BoundParams()
    assert FOURTH_POWER.genus(P) == 8
    assert FOURTH_POWER.level_exponent_inverse(P) == 36
    N, M = moduli_dims(8)
    assert (N, M) == (37, 64 * 65 // 2)  # M = dim A_64


def test_cover_degree_examples():
    P = BoundParams()
    assert close(cover_degree_log(DIAG, P, 2), math.log(math.comb(140, 4)) + math.log(20))
    assert close(cover_degree_log(PARABOLIC, P, 3), math.log(math.comb(140, 4)) + math.log(40))
    P2 = BoundParams(d=2)
    assert close(cover_degree_log(PARABOLIC, P2, 3) - cover_degree_log(PARABOLIC, P, 3), math.log(2))
    assert cover_degree(DIAG, P, 2) == math.comb(140, 4) * 20


def test_diagonal_index_asymptotics():
    P = BoundParams()
    base = math.log(math.comb(140, 4))
    gaps = [cover_degree_log(DIAG, P, ell) - 4 * math.log(ell) - base for ell in sympy.primerange(2, 98)]
    assert all(g > 0 for g in gaps)
    assert all(a > b for a, b in zip(gaps, gaps[1:]))
    assert gaps[-1] < 1e-3


@pytest.mark.parametrize("ell", list(sympy.primerange(2, 98)))
def test_block_index_ratio(ell):
    r = block_diag_index(2, 1, ell) / ell**4
    assert 1 <= r <= 2


def test_height_lift_examples():
    P = BoundParams()
    assert close(height_lift_bound_log(1.0, P, 3), 8 * math.log(3) + 9)
    assert close(height_lift_bound_log(0.0, P, 3), 8 * math.log(3))
    # half the log-degree of a degree-l^(8g) isogeny
    assert close(height_lift_bound_log(2.5, P, 7), 0.5 * math.log(7 ** 16) + 9 * 2.5)


def test_bck_examples():
    P = BoundParams(kappa=0)
    assert close(bck_bound_log(2, 1.0, P), 2 * math.log(2) + 1)
    with pytest.raises(InvalidInputError):
        bck_bound_log(2, math.log(2), P)
    exps = [(2 * P.d_K / D) for D in (1, 10, 10**6)]
    assert exps[-1] < 1e-5


def test_bck_matches_chain_symbolically():
    """bck(deg, lift) expands to log(c deg^2 (l^(4g) B^(9d))^(2 d_K/deg) (log H)^kappa)."""
    P = BoundParams(c=3.0, kappa=2.5, d_K=2, C_iota=1.5)
    ell, L = 11, 1000.0
    deg = cover_degree(PARABOLIC, P, ell)
    H = height_lift_bound_log(L, P, ell)
    expected = math.log(3.0) + 2 * math.log(deg) + (4 / deg) * (math.log(1.5) + 8 * math.log(11) + 9 * L) + 2.5 * math.log(H)
    assert close(bck_bound_log(deg, H, P), expected)


def test_optimizer_examples():
    P = BoundParams(ell0=2)
    assert optimize_level(1000.0, PARABOLIC, P) == 11
    assert optimize_level(16.0, DIAG, P) == 2
    with pytest.raises(BelowThresholdError) as err:
        optimize_level(math.log(10), PARABOLIC, BoundParams(ell0=100))
    assert err.value.log_B0 == 100.0**3
    assert log_B0(PARABOLIC, BoundParams()) == 125.0


@settings(max_examples=200)
@given(st.floats(1e3, 1e12), st.sampled_from([DIAG, PARABOLIC]), st.integers(2, 7))
def test_optimizer_properties(log_B, case, ell0):
    P = BoundParams(ell0=ell0)
    q = case.level_exponent_inverse(P)
    if log_B < ell0**q:
        with pytest.raises(BelowThresholdError):
            optimize_level(log_B, case, P)
        return
    ell = optimize_level(log_B, case, P)
    assert sympy.isprime(ell) and ell >= ell0
    n = math.ceil(log_B ** (1 / q) - 1e-9)
    assert ell == sympy.nextprime(max(ell0, n) - 1)


def test_optimizer_ratio_on_grid():
    P = BoundParams(ell0=2)
    for case in (DIAG, PARABOLIC):
        q = case.level_exponent_inverse(P)
        for k in range(3, 7):
            ratio = 10.0**k / optimize_level(10.0**k, case, P) ** q
            assert 1 / 8 <= ratio <= 8


def test_s_bound_monotone_and_finite():
    P = BoundParams()
    grid = [100.0 * k for k in range(2, 11)]
    vals = [s_bound_log(L, PARABOLIC, P) for L in grid]
    assert all(math.isfinite(v) for v in vals)
    assert all(a < b for a, b in zip(vals, vals[1:]))


@pytest.mark.parametrize("case", [DIAG, PARABOLIC])
def test_s_bound_slope_in_loglog_b(case):
    # the squared cover degree contributes (log B)^2 on top of the (log H)^kappa factor
    P = BoundParams()
    grid = [10.0**k for k in range(3, 12)]
    xs = [math.log(9 * P.d * L) for L in grid]
    ys = [s_bound_log(L, case, P) for L in grid]
    slope = np.polyfit(xs, ys, 1)[0]
    assert abs(slope - (P.kappa + 2)) <= 0.1 * (P.kappa + 2)


def test_doubling_d():
    P1, P2 = BoundParams(), BoundParams(d=2)
    for L in (1e4, 1e6, 1e8):
        for case in (DIAG, PARABOLIC):
            diff = s_bound_log(L, case, P2) - s_bound_log(L, case, P1)
            assert 0 < diff <= (P1.kappa + 2) * math.log(2)


def test_total_bound_structure():
    P = BoundParams(ell0=2)
    assert [str(c) for c in all_cases(2)] == ["diagonal(1,1)", "parabolic", "fourth"]
    L = 1e11
    parts = [s_bound_log(L, c, P) for c in all_cases(2)]
    total = total_bound_log(L, P)
    assert all(total >= p for p in parts)
    assert total <= max(parts) + math.log(3) + 1e-12
    with pytest.raises(BelowThresholdError):
        total_bound_log(1e3, P)


def test_eehk_examples():
    assert close(eehk_bound_log(1.0, 1), 11 * math.log(math.log(2 * math.e)))
    vals = [eehk_bound_log(10.0**k, 2) for k in range(3, 7)]
    assert all(a < b for a, b in zip(vals, vals[1:]))
    with pytest.raises(InvalidInputError):
        eehk_bound_log(1.0, 2, D=0.5)


def test_case_bound_fields():
    cb = case_bound(1000.0, PARABOLIC, BoundParams(ell0=2))
    assert cb.ell == 11
    assert close(cb.cover_degree_log, cover_degree_log(PARABOLIC, BoundParams(ell0=2), 11))


def test_params_validation():
    with pytest.raises(InvalidInputError):
        BoundParams(d=0)
    with pytest.raises(InvalidInputError):
        CoverCase.diagonal(2, 1)
    with pytest.raises(InvalidInputError):
        DIAG.genus(BoundParams(g=3))


def test_parse_log_b():
    assert parse_log_B("e1000") == 1000.0
    assert close(parse_log_B("100"), math.log(100))
    with pytest.raises(InvalidInputError):
        parse_log_B("zz")
