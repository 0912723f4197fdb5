from fractions import Fraction as F

import pytest

from klrcell.params import (
    Params,
    ParamsError,
    asymptotic_theta,
    flotw_theta,
    make_params,
    parse_e,
    parse_rational,
)


def test_parse_rational_forms():
    assert parse_rational("3/2") == F(3, 2)
    assert parse_rational("7 1/2") == F(15, 2)
    assert parse_rational("-1 1/2") == F(-3, 2)
    assert parse_rational(4) == 4


@pytest.mark.parametrize("text,value", [("inf", None), ("oo", None), ("0", None), ("3", 3), (None, None)])
def test_parse_e(text, value):
    assert parse_e(text) == value


def test_theta_denominator_must_divide_ell():
    with pytest.raises(ParamsError):
        make_params(2, 2, (0, F(1, 3)), (0, 1))


def test_integer_differences_rejected():
    with pytest.raises(ParamsError):
        make_params(2, 2, (0, 1), (0, 1))


def test_kappa_range_checked():
    with pytest.raises(ParamsError):
        make_params(2, 2, (0, F(1, 2)), (0, 2))


def test_lengths_must_agree():
    with pytest.raises(ParamsError):
        Params(2, 2, (F(0), F(1, 2)), (0,))


def test_e_at_least_two():
    with pytest.raises(ParamsError):
        Params(1, 2, (F(0),), (0,))


def test_negative_n():
    with pytest.raises(ParamsError):
        make_params(2, -1, (0,), (0,))


def test_residue_arithmetic():
    p = make_params(3, 2, (0, F(1, 2)), (0, 1))
    assert p.mod(-1) == 2
    assert p.adjacent(0, 2) and p.adjacent(2, 0)
    assert not p.adjacent(1, 1)
    q = make_params(None, 2, (0, F(1, 2)), (0, 5))
    assert q.mod(-7) == -7
    assert not q.adjacent(0, 2)


def test_helper_weightings_are_valid():
    for ell in (1, 2, 3):
        Params(None, 3, flotw_theta(ell), (0,) * ell)
        Params(None, 3, asymptotic_theta(ell, 3), (0,) * ell)


def test_normalized_theta_and_dict():
    p = make_params(2, 1, (F(3, 2), 0), (0, 1))
    assert p.normalized_theta() == (0, F(-3, 2))
    assert p.as_dict() == {"e": "2", "ell": 2, "n": 1, "theta": ["3/2", "0"], "kappa": [0, 1]}
