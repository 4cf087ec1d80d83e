from itertools import product

import pytest

from rockdim.arith import params
from rockdim.barcore import is_bar_core, smallest_rock_core
from rockdim.partitions import content
from rockdim.weyl import (NotExtremalError, apply_word, core_from_word, exponents, form,
                          format_word, lambda0, null_root, pair, parse_word, reflect,
                          root_weight, simple_root, theta_decompose)


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_reflections_are_involutions(ell):
    prm = params(ell)
    x = lambda0(prm) - simple_root(0, prm).scale(3) + simple_root(ell, prm)
    for i in prm.I:
        assert reflect(reflect(x, i, prm), i, prm) == x
        assert pair(reflect(x, i, prm), i, prm) == -pair(x, i, prm)
        assert form(reflect(x, i, prm), reflect(x, i, prm), prm) == form(x, x, prm)
        # the null root is fixed
        assert reflect(null_root(prm), i, prm) == null_root(prm)


def test_pairings_with_lambda0():
    prm = params(2)
    assert [pair(lambda0(prm), i, prm) for i in prm.I] == [1, 0, 0]
    assert form(lambda0(prm), lambda0(prm), prm) == 0


def test_word_order():
    prm = params(2)
    assert exponents([1, 0], prm).values == (1, 1)
    assert exponents([0, 1], prm).values == (0, 1)
    assert exponents([0, 0], prm).values == (1, -1)
    assert not exponents([0, 0], prm).admissible
    assert apply_word([1, 0], lambda0(prm), prm) == reflect(reflect(lambda0(prm), 0, prm), 1, prm)


def test_parse_word():
    prm = params(2)
    assert parse_word("1,0", prm) == (1, 0)
    assert parse_word("") == ()
    assert format_word((2, 1, 0)) == "2,1,0"
    with pytest.raises(ValueError):
        parse_word("3", prm)
    with pytest.raises(ValueError):
        parse_word("a,b")


def test_core_from_word_examples():
    prm = params(2)
    assert core_from_word((), prm) == ()
    assert core_from_word((0,), prm) == (1,)
    assert core_from_word((1, 0), prm) == (2,)
    assert core_from_word((2, 1, 0), prm) == (3,)
    with pytest.raises(NotExtremalError):
        core_from_word((0, 0), prm)


@pytest.mark.parametrize("ell", [1, 2])
def test_words_give_cores_with_matching_content(ell):
    prm = params(ell)
    seen = 0
    for n in range(6):
        for word in product(prm.I, repeat=n):
            if not exponents(word, prm).admissible:
                continue
            core = core_from_word(word, prm)
            assert is_bar_core(core, prm)
            w = apply_word(word, lambda0(prm), prm)
            assert (lambda0(prm) - w).alpha_coeffs == content(core, prm)
            seen += 1
    assert seen > 20


def test_theta_decompose():
    prm = params(2)
    core = smallest_rock_core(1, prm)
    weight, rock = theta_decompose(core, 1, prm)
    assert rock and weight == root_weight((4, 3, 1), prm)
    with pytest.raises(ValueError):
        root_weight((1, 2), prm)
