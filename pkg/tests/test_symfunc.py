from fractions import Fraction

import pytest

import oracles
from rockdim.arith import multinomial, params
from rockdim.partitions import ColoredComposition, K_coeff, multipartitions
from rockdim.symfunc import (ColorMatrix, Pi_omega_closed_form, SymElement, build_Pi,
                             build_Pi_omega, build_Pi_single, closed_formula, enumerate_M,
                             individual_inner_formula, matrix_sum_formula, mult_pieri_e,
                             mult_pieri_h, mult_pieri_q, power_element, psi_A, sym_inner,
                             pi_omega_inner, to_kappa)
from rockdim.verify import colored_compositions

PRM1 = params(1)


def _component(v, comp):
    return {mp[comp]: c for mp, c in v.terms.items()}


@pytest.mark.parametrize("n", range(5))
def test_schur_pieri_against_oracle(n):
    for lam in oracles.partitions(n):
        start = SymElement.basis(((), lam))
        for r in range(4):
            want_h = oracles.schur_times(lam, oracles.h(r))
            want_e = oracles.schur_times(lam, oracles.e(r))
            assert _component(mult_pieri_h(start, 1, r), 1) == want_h
            assert _component(mult_pieri_e(start, 1, r), 1) == want_e


@pytest.mark.parametrize("n", range(6))
def test_q_pieri_against_oracle(n):
    for lam in oracles.strict_partitions(n):
        start = SymElement.basis((lam, ()))
        for r in range(5 if n < 4 else 3):
            got = _component(mult_pieri_q(start, r), 0)
            assert got == oracles.P_times(lam, oracles.q(r))


def test_pieri_rejects_component_zero():
    with pytest.raises(ValueError):
        mult_pieri_h(SymElement.one(PRM1), 0, 1)
    with pytest.raises(ValueError):
        SymElement({((1, 1), ()): 1})


def test_inner_product_weights():
    v = SymElement.basis(((2, 1), (1,)), 3)
    assert sym_inner(v, v) == Fraction(9, 4)
    assert to_kappa(v)[((2, 1), (1,))] == Fraction(3, 4)


def test_single_pi_examples():
    prm = params(2)
    assert build_Pi_single(1, 0, prm).terms == {((1,), (), ()): 2, ((), (1,), ()): 1}
    assert build_Pi_single(1, 1, prm).terms == {((), (1,), ()): 1, ((), (), (1,)): 1}


CASES = [(ell, cc) for ell in (1, 2, 3) for d in range(1, 4)
         for cc in colored_compositions(d, 3, params(ell))]


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_pi_is_sum_over_matrices(ell):
    prm = params(ell)
    for cc in colored_compositions(3, 3, prm):
        total = SymElement()
        for A in enumerate_M(cc, prm):
            total = total + psi_A(A, cc, prm)
        assert build_Pi(cc, prm) == total


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_pi_coefficients_count_tableaux(ell):
    prm = params(ell)
    for cc in colored_compositions(3, 3, prm):
        pi = build_Pi(cc, prm)
        for mp in multipartitions(cc.d, ell + 1, strict0=True):
            assert pi[mp] == K_coeff(mp, cc, prm)


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_omega_closed_form(ell):
    prm = params(ell)
    for d in range(5):
        assert build_Pi_omega(d, prm) == Pi_omega_closed_form(d, prm)


@pytest.mark.parametrize("ell,cc", CASES)
def test_inner_product_formula(ell, cc):
    prm = params(ell)
    value = pi_omega_inner(cc, prm)
    assert value == closed_formula(cc, prm)
    assert value == matrix_sum_formula(cc, prm) * multinomial(cc.mu)


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_matrix_sum_identity(ell):
    prm = params(ell)
    for d in range(1, 6):
        for cc in colored_compositions(d, 3, prm):
            m = sum(x for x, j in zip(cc.mu, cc.colors) if j == ell - 1)
            assert matrix_sum_formula(cc, prm) == 4 ** (d - m) * 3 ** m


@pytest.mark.parametrize("ell", [1, 2])
def test_individual_inner_products(ell):
    prm = params(ell)
    for cc in colored_compositions(3, 2, prm):
        for A in enumerate_M(cc, prm):
            psi = psi_A(A, cc, prm)
            for ks in weak_compositions(3, ell + 1):
                assert sym_inner(psi, power_element(ks, prm)) == individual_inner_formula(A, ks, prm)


def weak_compositions(d, n):
    if n == 1:
        yield (d,)
        return
    for k in range(d + 1):
        for rest in weak_compositions(d - k, n - 1):
            yield (k,) + rest


def test_color_matrix_validation():
    prm = params(2)
    cc = ColoredComposition((2,), (1,))
    assert len(enumerate_M(cc, prm)) == 3
    with pytest.raises(ValueError):
        ColorMatrix(((1, 1, 0),)).check(cc, prm)
    with pytest.raises(ValueError):
        ColorMatrix(((0, 1, 0),)).check(cc, prm)
    with pytest.raises(ValueError):
        power_element((1, 1), prm)


def test_closed_formula_examples():
    prm = params(2)
    assert closed_formula(ColoredComposition((1,), (0,)), prm) == 4
    assert closed_formula(ColoredComposition((1,), (1,)), prm) == 3
    assert closed_formula(ColoredComposition((1, 1), (0, 1)), prm) == 24
    assert closed_formula(ColoredComposition((2,), (1,)), prm) == 9
