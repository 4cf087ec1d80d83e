from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rockdim.arith import (ONE, Q, ZERO, LaurentPoly, format_fraction, gram_matrix,
                           is_power_of_two, laurent_eval_q1, multinomial, params, pow2,
                           quantum_factorial, quantum_integer)

laurent = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentPoly)


@given(laurent, laurent, laurent)
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert f + ZERO == f and f * ONE == f
    assert f - f == ZERO


@given(laurent, laurent)
def test_eval_at_one_is_multiplicative(f, g):
    assert laurent_eval_q1(f * g) == laurent_eval_q1(f) * laurent_eval_q1(g)
    assert laurent_eval_q1(f + g) == laurent_eval_q1(f) + laurent_eval_q1(g)


@given(laurent, laurent)
def test_exact_division_roundtrip(f, g):
    if g:
        assert (f * g).divmod_exact(g) == f


def test_inexact_division_raises():
    with pytest.raises(ArithmeticError):
        (ONE + Q).divmod_exact(ONE + Q * Q)


def test_zero_coefficients_are_dropped():
    f = LaurentPoly({0: 1, 3: 0})
    assert f.coeffs == {0: 1}
    assert (Q - Q).coeffs == {}


def test_eval_examples():
    assert laurent_eval_q1(ONE - LaurentPoly.monomial(4)) == 0
    assert laurent_eval_q1(ONE + LaurentPoly.monomial(2)) == 2
    assert laurent_eval_q1(ZERO) == 0


def test_str():
    assert str(LaurentPoly({4: -1, 0: 1})) == "-q^4 + 1"
    assert str(ZERO) == "0"
    assert str(LaurentPoly({-1: 2, 1: 1})) == "q + 2*q^-1"


def test_gram_matrices():
    assert gram_matrix(1) == ((2, -4), (-4, 8))
    assert gram_matrix(3) == ((2, -2, 0, 0), (-2, 4, -2, 0), (0, -2, 4, -4), (0, 0, -4, 8))
    for ell in range(1, 6):
        g = gram_matrix(ell)
        assert all(g[i][j] == g[j][i] for i in range(ell + 1) for j in range(ell + 1))
        # the null root pairs to zero with every simple root
        delta = params(ell).delta
        assert all(sum(g[i][j] * delta[j] for j in range(ell + 1)) == 0 for i in range(ell + 1))


def test_params():
    prm = params(2)
    assert (prm.p, prm.I, prm.J) == (5, (0, 1, 2), (0, 1))
    assert [prm.half_norm(i) for i in prm.I] == [1, 2, 4]
    with pytest.raises(ValueError):
        params(0)


def test_quantum_integers():
    prm = params(2)
    assert quantum_integer(1, 1, prm) == ONE
    assert quantum_integer(2, 0, prm) == LaurentPoly({1: 1, -1: 1})
    assert quantum_integer(2, 2, prm) == LaurentPoly({4: 1, -4: 1})
    assert quantum_integer(0, 0, prm) == ZERO
    assert quantum_integer(-2, 0, prm) == -quantum_integer(2, 0, prm)
    assert quantum_factorial(3, 0, prm) == LaurentPoly({3: 1, 1: 2, -1: 2, -3: 1})


@given(st.integers(0, 8), st.integers(0, 2))
def test_quantum_integer_specializes_to_n(n, i):
    prm = params(2)
    assert laurent_eval_q1(quantum_integer(n, i, prm)) == n
    q_i = LaurentPoly.monomial(prm.half_norm(i))
    lhs = quantum_integer(n, i, prm) * (q_i - q_i.bar())
    assert lhs == LaurentPoly.monomial(n * prm.half_norm(i)) - LaurentPoly.monomial(-n * prm.half_norm(i))


def test_multinomial():
    assert multinomial([2, 1, 1]) == 12
    assert multinomial([5]) == 1
    assert multinomial([1, 1, 1]) == 6
    assert multinomial([]) == 1
    with pytest.raises(ValueError):
        multinomial([-1, 2])


@pytest.mark.parametrize("c", range(21))
def test_binomial_sums(c):
    assert sum(multinomial([a, c - a]) for a in range(c + 1)) == 2 ** c
    assert sum(2 ** a * multinomial([a, c - a]) for a in range(c + 1)) == 3 ** c


def test_pow2_and_formatting():
    assert pow2(3) == 8 and pow2(-2) == Fraction(1, 4)
    assert is_power_of_two(Fraction(1, 8)) and not is_power_of_two(Fraction(3, 4))
    assert not is_power_of_two(Fraction(0))
    assert format_fraction(Fraction(4)) == "4" and format_fraction(Fraction(-1, 2)) == "-1/2"
