from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from meixnerops.exact import Poly, X, ZERO
from meixnerops.meixner import (
    InvalidParams,
    MeixnerParams,
    NotASquare,
    TranslationCombo,
    comm_ux_closed_form,
    one_meixner_limit_check,
    pmd_a0,
    pmd_aminus,
    pmd_aplus,
    pmd_number,
    pmd_u,
    pmd_v,
    pmd_x,
    series_decomposition,
    szego_jacobi,
    translation_form,
)
from meixnerops.operators import commutator, position_op, quantum_ops, semi_ops

GAUSSIAN = MeixnerParams(0, 0, 0, 1)
POISSON = MeixnerParams(1, 1, 0, 1)
PASCAL = MeixnerParams(3, 0, 2, 2)
GAMMA = MeixnerParams(2, 1, 1, 1)
SECH = MeixnerParams(0, 0, 1, 1)
COIN = MeixnerParams(0, 0, -1, 2)
ALL = (GAUSSIAN, POISSON, PASCAL, GAMMA, SECH, COIN)


def test_params_validation():
    with pytest.raises(InvalidParams):
        MeixnerParams(1, 0, 0, 0)  # t must be positive
    with pytest.raises(InvalidParams):
        MeixnerParams(-1, 0, 0, 1)  # alpha must be nonnegative
    with pytest.raises(InvalidParams):
        MeixnerParams(0, 0, -1, F(3, 2))  # t/(-beta) must be a positive integer
    MeixnerParams(0, 0, F(-1, 2), F(3, 2))  # t/(-beta) = 3 is fine


def test_from_strings():
    p = MeixnerParams.from_strings("3/2", "-1", "0", "2")
    assert p.alpha == F(3, 2) and p.alpha0 == -1 and p.beta == 0 and p.t == 2
    with pytest.raises(ValueError):
        MeixnerParams.from_strings("x", "0", "0", "1")


def test_derived_quantities():
    d = PASCAL.derived()
    assert d.delta == 1 and d.tau == 4 and d.support_bound is None
    dc = COIN.derived()
    assert dc.delta == 4 and dc.tau == 4 and dc.support_bound == 3


def test_szego_jacobi_coefficients():
    sj = szego_jacobi(POISSON)
    assert [sj.alpha(n) for n in range(4)] == [1, 2, 3, 4]
    assert [sj.omega(n) for n in range(1, 5)] == [1, 2, 3, 4]
    sj2 = szego_jacobi(COIN)
    assert sj2.support_bound == 3
    assert [sj2.omega(n) for n in range(1, 4)] == [2, 2, 0]


def test_step1_commutator_closed_form():
    for p in (POISSON, PASCAL, GAMMA, SECH):
        sj = szego_jacobi(p)
        aplus, azero, aminus = quantum_ops(sj, 12)
        u, _ = semi_ops(aplus, azero, aminus)
        x = position_op(sj, 12)
        lhs = commutator(u, x)
        rhs = comm_ux_closed_form(p, 12)
        assert lhs.valid_degree >= 10
        for n in range(11):
            assert lhs.column(n) == rhs.column(n), (p, n)


def test_double_commutator_closed_form():
    for p in (POISSON, PASCAL, COIN):
        d = p.derived()
        sj = szego_jacobi(p)
        trunc = 12 if d.support_bound is None else d.support_bound - 1
        aplus, azero, aminus = quantum_ops(sj, trunc)
        u, _ = semi_ops(aplus, azero, aminus)
        x = position_op(sj, trunc)
        lhs = commutator(commutator(u, x), x)
        rhs = (x - u.scale(2)).scale(-d.delta / 2)
        top = min(lhs.valid_degree, rhs.valid_degree)
        assert top >= (9 if d.support_bound is None else 0)
        for n in range(top + 1):
            assert lhs.column(n) == rhs.column(n), (p, n)


def test_pmd_u_gaussian_is_pure_momentum():
    u = pmd_u(GAUSSIAN, 6)
    assert u.coeff(0) == ZERO
    assert u.coeff(1) == Poly.of(1)
    assert all(u.coeff(n) == ZERO for n in range(2, 7))


def test_pmd_u_coin_frozen_coefficients():
    u = pmd_u(COIN, 4)
    assert u.coeff(0) == ZERO
    assert u.coeff(1) == Poly.of(2)  # (alpha/2)(X - alpha0) + t with alpha = 0
    assert u.coeff(2) == -X  # -(1/2) Delta/2! X with Delta = 4
    assert u.coeff(3) == Poly.of(F(4, 3))  # Delta/3! * t
    assert u.coeff(4) == F(-1, 3) * X  # -(1/2) Delta^2/4! X


def test_pmd_a0_poisson():
    a0 = pmd_a0(POISSON, 4)
    assert a0.coeff(0) == Poly.of(1)  # alpha0
    assert a0.coeff(1) == Poly.of(-1, 1)  # alpha (X - alpha0)
    assert a0.coeff(2) == Poly.of(F(-1, 2), F(-1, 2))  # -(alpha/2)(alpha X + tau)
    assert a0.k == 0


def test_pmd_partitions_of_x():
    for p in ALL:
        u = pmd_u(p, 8)
        v = pmd_v(p, 8)
        assert (u.coeff(0) + v.coeff(0)) == X
        for n in range(1, 9):
            assert u.coeff(n) + v.coeff(n) == ZERO
        am = pmd_aminus(p, 8)
        a0 = pmd_a0(p, 8)
        ap = pmd_aplus(p, 8)
        assert am.coeff(0) + a0.coeff(0) + ap.coeff(0) == X
        for n in range(1, 9):
            assert am.coeff(n) + a0.coeff(n) + ap.coeff(n) == ZERO
    assert pmd_x().coeff(0) == X
    assert pmd_x().order == 0


def test_pmd_recursion_invariant():
    # A_{n+2} = Delta/((n+2)(n+1)) * (A_n - (1/2) X delta_{n0}) for the U series
    for p in ALL:
        delta = p.derived().delta
        u = pmd_u(p, 9)
        for n in range(8):
            base = u.coeff(n) - (F(1, 2) * X if n == 0 else ZERO)
            assert u.coeff(n + 2) == delta * base * F(1, (n + 2) * (n + 1)), (p, n)


def test_series_decomposition_dispatch():
    assert series_decomposition(POISSON, "U", 3).coeff(0) == Poly.of(F(1, 2))
    with pytest.raises(ValueError):
        series_decomposition(POISSON, "Q", 3)


def test_one_meixner_limit():
    report = one_meixner_limit_check(GAMMA, order=10)
    assert report.passed
    gauss = one_meixner_limit_check(GAUSSIAN, order=10)
    assert gauss.passed
    with pytest.raises(InvalidParams):
        one_meixner_limit_check(PASCAL)


def test_translation_form_exact_square():
    rep = translation_form(PASCAL)
    assert rep.mode == "exact_if_square"
    assert rep.delta == 1
    assert rep.passed is True
    assert set(rep.forms) == {"U", "N", "a0", "a-"}
    u = {shift: poly for poly, shift in rep.forms["U"].terms}
    assert u[F(1)] == Poly.of(1, F(1, 2))
    assert u[F(-1)] == Poly.of(-1, -1)
    assert u[F(0)] == F(1, 2) * X
    assert all(check.passed for check in rep.checks)


def test_translation_form_apply_matches_operator_series():
    # applying the translation expression reproduces the series action on monomials
    rep = translation_form(COIN)
    am = pmd_aminus(COIN, 12)
    for m in range(8):
        mono = Poly.monomial(m)
        assert rep.forms["a-"].apply(mono) == am.apply(mono)


def test_translation_form_collapses_at_delta_zero():
    rep = translation_form(GAMMA)
    assert rep.delta == 0
    assert rep.forms == {}
    assert set(rep.limit_forms) == {"U", "N", "a0", "a-"}
    assert rep.passed is True
    assert rep.limit_forms["U"].coeff(1) == F(1, 2) * Poly.of(GAMMA.derived().tau, GAMMA.alpha)


def test_translation_form_irrational_delta_raises():
    odd = MeixnerParams(1, 0, F(-1, 2), 1)  # Delta = 3
    with pytest.raises(NotASquare):
        translation_form(odd)


def test_translation_form_numeric_mode():
    odd = MeixnerParams(1, 0, F(-1, 2), 1)
    rep = translation_form(odd, mode="numeric")
    assert rep.passed is None
    assert set(rep.rendered) == {"U", "N", "a0", "a-"}
    assert any("1.7320508" in str(term) for term in rep.rendered["U"])


def test_translation_form_numeric_rejects_negative_delta():
    with pytest.raises(NotASquare):
        translation_form(SECH, mode="numeric")
    with pytest.raises(NotASquare):
        translation_form(SECH)


def test_combo_parse_format_roundtrip():
    combo = TranslationCombo.parse("1:1,-1/2:0, 3/2:-2")
    assert combo.terms == ((F(1), F(1)), (F(-1, 2), F(0)), (F(3, 2), F(-2)))
    assert TranslationCombo.parse(combo.format()).terms == combo.terms
    with pytest.raises(ValueError):
        TranslationCombo.parse("")
    with pytest.raises(ValueError):
        TranslationCombo.parse("1;2")


def test_combo_apply():
    combo = TranslationCombo.parse("1:1,-1:0")
    f = Poly.of(0, 0, 1)
    assert combo.apply(f) == Poly.of(1, 2)  # (X+1)^2 - X^2


rat_alpha = st.fractions(min_value=0, max_value=3, max_denominator=4)
rat_alpha0 = st.fractions(min_value=-2, max_value=2, max_denominator=4)
rat_beta = st.fractions(min_value=0, max_value=2, max_denominator=4)
rat_t = st.fractions(min_value=F(1, 4), max_value=3, max_denominator=4)


@settings(deadline=None, max_examples=30)
@given(rat_alpha, rat_alpha0, rat_beta, rat_t)
def test_extraction_matches_closed_forms_random(alpha, alpha0, beta, t):
    from meixnerops.operators import number_op, to_monomial_basis
    from meixnerops.pmd import extract_pmd

    p = MeixnerParams(alpha, alpha0, beta, t)
    sj = szego_jacobi(p)
    trunc = 9
    aplus, azero, aminus = quantum_ops(sj, trunc)
    u, v = semi_ops(aplus, azero, aminus)
    for name, graded, k in (
        ("U", u, 0),
        ("V", v, 1),
        ("N", number_op(trunc), 0),
        ("a0", azero, 0),
        ("a-", aminus, -1),
        ("a+", aplus, 1),
    ):
        order = 6
        extracted = extract_pmd(to_monomial_basis(graded, sj), k, order)
        closed = series_decomposition(p, name, order)
        for n in range(order + 1):
            assert extracted.coeff(n) == closed.coeff(n), (name, n)
