from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from orthoinvert.exactnum import DomainError, binom_rat
from orthoinvert.families import jacobi
from orthoinvert.poly import X, Poly
from orthoinvert.ultrade import (
    a0_by_recurrence,
    a0_sequence,
    bc_closed_form,
    closed_form_coeffs,
    coeffs_via_inversion,
    identity_55_check,
    parity_sum,
    parity_sum_closed,
    parity_sum_telescoped,
    parity_sum_via_1f0,
    synthesize,
    unshifted_bc,
    unshifted_consistency,
    unshifted_via_solver,
    shifted_f0,
    system_check,
    verify_de,
)

ALPHAS = [F(0), F(1, 2), F(-1, 3), F(2)]
alphas = st.fractions(min_value=F(-6, 7), max_value=4, max_denominator=7).filter(lambda a: a > -1)


def test_a0_examples():
    for alpha in ALPHAS:
        seq = a0_sequence(alpha, F(5, 2), 6)
        assert seq[0] == 0 and seq[1] == F(5, 2)
        assert seq[2] == 4 * (2 * alpha + 3)
    assert a0_sequence(0, 0, 4)[4] == 180 == 4 * 3 * binom_rat(6, 2)
    assert a0_sequence(0, 3, 4)[4] == 180


@settings(max_examples=30, deadline=None)
@given(alphas, st.fractions(min_value=-5, max_value=5, max_denominator=5))
def test_a0_recurrence_property(alpha, a01):
    assert a0_sequence(alpha, a01, 20) == a0_by_recurrence(alpha, a01, 20)


def test_a0_domain():
    with pytest.raises(DomainError):
        a0_sequence(-1, 0, 3)


@settings(max_examples=30, deadline=None)
@given(alphas, st.integers(1, 10), st.booleans())
def test_parity_sums(alpha, n, odd):
    direct = parity_sum(alpha, n, odd)
    assert direct == parity_sum_closed(alpha, n, odd)
    assert direct == parity_sum_via_1f0(alpha, n, odd)
    assert direct == parity_sum_telescoped(alpha, n, odd)


def test_bc_examples():
    alpha = F(2, 7)
    assert bc_closed_form(alpha, 1) == (-X, Poly())
    b2, c2 = bc_closed_form(alpha, 2)
    assert b2 == X**2
    assert c2 == Poly([1, 0, -1]).scale(2 * (2 * alpha + 3))
    with pytest.raises(DomainError):
        bc_closed_form(-2, 3)


def test_route_examples():
    a01 = F(7, 3)
    assert coeffs_via_inversion(F(1, 2), a01, 1, "System54")[1] == (-X).scale(a01)
    assert shifted_f0(F(1, 2), a01).is_zero()
    assert unshifted_bc(F(-1, 3), 3)[1][1].is_zero()
    with pytest.raises(ValueError):
        coeffs_via_inversion(0, 0, 2, "Other")


@pytest.mark.parametrize("alpha", ALPHAS)
def test_routes_agree(alpha):
    for a01 in (F(0), F(5)):
        closed = closed_form_coeffs(alpha, a01, 8)
        assert coeffs_via_inversion(alpha, a01, 8, "System54") == closed
        assert coeffs_via_inversion(alpha, a01, 8, "System52") == closed
        assert unshifted_via_solver(alpha, a01, 8) == closed
    for i, (b, c) in unshifted_bc(alpha, 8).items():
        assert (b, c) == bc_closed_form(alpha, i)


def test_routes_at_half_integer_boundary():
    # 2alpha+1 = 0 is removable in every route
    closed = closed_form_coeffs(F(-1, 2), 1, 6)
    assert coeffs_via_inversion(F(-1, 2), 1, 6, "System54") == closed
    assert coeffs_via_inversion(F(-1, 2), 1, 6, "System52") == closed


def test_companion_identity_examples():
    assert identity_55_check(F(3, 4), 2).passed
    assert identity_55_check(0, 5).passed
    assert identity_55_check(F(1, 2), 9).passed
    with pytest.raises(ValueError):
        identity_55_check(0, 1)
    with pytest.raises(DomainError):
        identity_55_check(F(-3, 2), 4)


def test_de_examples():
    assert verify_de(0, F(1, 5), 3, 11).passed
    for a01 in (F(0), F(-4)):
        assert verify_de(1, F(1, 3), F(1, 2), a01).passed
    for a01 in (F(0), F(5)):
        r = verify_de(6, F(1, 3), 2, a01)
        assert r.passed and r.identity == "Eq32"
    with pytest.raises(DomainError):
        verify_de(3, 0, -1)
    with pytest.raises(DomainError):
        verify_de(3, -1, 1)


def test_de_at_zero_M_is_classical():
    for n in range(6):
        assert verify_de(n, F(2, 3), 0, 9).passed


@pytest.mark.parametrize("system", ["Eq38", "Eq39", "Eq52"])
def test_raw_systems(system):
    for n in range(9):
        assert system_check(system, n, F(1, 2), 5).passed


@pytest.mark.parametrize("system", ["Eq50", "Eq53"])
def test_raw_shifted_systems(system):
    for n in range(2, 9):
        assert system_check(system, n, F(-1, 3), 5).passed
    with pytest.raises(ValueError):
        system_check(system, 1, 0)


def test_broken_coefficients_fail_the_systems():
    co = synthesize(0, 0, 4)
    co.a[2] = co.a[2] + X
    from orthoinvert.ultrade import _system_residual

    assert not _system_residual("Eq38", 3, F(0), co).passed


def test_shifted_solution_solves_unshifted_system():
    assert all(r.passed for r in unshifted_consistency(F(1, 2), 3, 12))


def test_synthesis_json_and_latex():
    co = synthesize(0, 0, 4)
    assert co.a[2] == Poly([6, 0, -6])
    assert co.a[1].is_zero()
    data = co.to_json()
    assert data["a0"][:3] == ["0", "0", "12"]
    assert data["a"][1] == ["6", "0", "-6"]
    assert any(line.startswith("a_{2}(x)") for line in co.to_latex())
    for i in range(1, 5):
        assert co.a[i] == co.b[i].scale(co.a01) + co.c[i]


def test_c_closed_form_uses_shifted_jacobi():
    alpha = F(1, 3)
    _, c4 = bc_closed_form(alpha, 4)
    assert c4 == (Poly([1, 0, -1]) * jacobi(2, alpha - 1, alpha - 1)).scale((2 * alpha + 3) * F(16, 24))


def test_de_and_systems_at_half_integer_boundary():
    alpha = F(-1, 2)
    for n in range(9):
        assert verify_de(n, alpha, F(3, 2), 2).passed
        for system in ("Eq38", "Eq39", "Eq52"):
            assert system_check(system, n, alpha, 2).passed
        if n >= 2:
            assert system_check("Eq50", n, alpha, 2).passed
