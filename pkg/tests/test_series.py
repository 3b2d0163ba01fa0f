"""Truncated power series over F_p."""

import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from oneunits import (ModulusMismatch, NonUnitConstantTerm,
                      NonzeroConstantInner, NotAPthPower, Prime,
                      PrecisionExhausted, ShapeMismatch, TruncSeries,
                      lucas_binom, outer_product, subst_group_law)
from oracles import naive_mul

P2, P3, P5 = Prime(2), Prime(3), Prime(5)


def series(p, values):
    return TruncSeries.from_ints(Prime(p), values)


def rand_series(rng, p, n, unit=False):
    c = [rng.randrange(p) for _ in range(n)]
    if unit:
        c[0] = rng.randrange(1, p)
    return series(p, c)


# -- construction and basics ------------------------------------------------

def test_from_ints_reduces_mod_p():
    assert series(3, [1, 3, -1]) == series(3, [1, 0, 2])


def test_raw_constructor_wants_residues():
    with pytest.raises(ValueError):
        TruncSeries(P3, np.array([1, 3]))
    with pytest.raises(ValueError):
        TruncSeries(P3, np.array([1, -1]))


def test_rejects_empty():
    with pytest.raises(ValueError):
        series(2, [])


def test_coefficient_and_precision():
    f = series(5, [1, 2, 3])
    assert f.precision == 3
    assert [f.coefficient(i) for i in range(3)] == [1, 2, 3]
    with pytest.raises(PrecisionExhausted):
        f.coefficient(3)


def test_truncate():
    f = series(5, [1, 2, 3, 4])
    assert f.truncate(2) == series(5, [1, 2])
    assert f.truncate(4) == f
    with pytest.raises(PrecisionExhausted):
        f.truncate(5)
    with pytest.raises(PrecisionExhausted):
        f.truncate(0)


def test_equality_is_exact():
    assert series(2, [1, 1]) != series(2, [1, 1, 0])
    assert series(2, [1, 1]) != series(3, [1, 1])


# -- ring operations --------------------------------------------------------

def test_square_of_one_plus_x_char_2():
    f = TruncSeries.one_plus_x(P2, 4)
    assert f.pow_int(2) == series(2, [1, 0, 1, 0])


def test_fourth_power_char_3():
    f = TruncSeries.one_plus_x(P3, 5)
    assert f.pow_int(4) == series(3, [1, 1, 0, 1, 1])


def test_pow_int_rejects_negative():
    with pytest.raises(ValueError):
        TruncSeries.one_plus_x(P2, 3).pow_int(-1)


def test_mixed_precision_rejected():
    with pytest.raises(ShapeMismatch):
        series(2, [1, 1]) * series(2, [1, 1, 0])
    with pytest.raises(ShapeMismatch):
        series(2, [1, 1]) + series(2, [1])


def test_mixed_modulus_rejected():
    with pytest.raises(ModulusMismatch):
        series(2, [1, 1]) * series(3, [1, 1])


def test_mul_matches_schoolbook():
    rng = random.Random(7)
    for p in (2, 3, 5):
        for _ in range(25):
            n = rng.randrange(1, 14)
            f, g = rand_series(rng, p, n), rand_series(rng, p, n)
            want = naive_mul(f.coeffs.tolist(), g.coeffs.tolist(), p, n)
            assert (f * g).coeffs.tolist() == want


def test_invert_one_plus_x_frozen():
    assert TruncSeries.one_plus_x(P3, 4).invert() == series(3, [1, 2, 1, 2])
    assert TruncSeries.one_plus_x(P2, 6).invert() == series(2, [1] * 6)


def test_invert_requires_unit():
    with pytest.raises(NonUnitConstantTerm):
        series(5, [0, 1]).invert()


@given(st.sampled_from([2, 3, 5]), st.integers(1, 20), st.integers(0, 10**6))
def test_invert_round_trip(p, n, seed):
    rng = random.Random(seed)
    f = rand_series(rng, p, n, unit=True)
    one = TruncSeries.constant(Prime(p), n)
    assert f * f.invert() == one


@given(st.sampled_from([2, 3, 5]), st.integers(1, 12), st.integers(0, 10**6))
def test_ring_laws(p, n, seed):
    rng = random.Random(seed)
    f = rand_series(rng, p, n)
    g = rand_series(rng, p, n)
    h = rand_series(rng, p, n)
    assert f + g == g + f
    assert (f + g) + h == f + (g + h)
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == TruncSeries.constant(Prime(p), n, 0)


# -- Hasse derivatives ------------------------------------------------------

def test_hasse_frozen_char_2():
    f = series(2, [1, 1, 0, 0, 1, 1, 0, 0])
    assert f.hasse_derivative(1) == series(2, [1, 0, 0, 0, 1, 0, 0])


def test_hasse_frozen_char_3():
    f = TruncSeries.one_plus_x(P3, 5).pow_int(4)
    assert f.hasse_derivative(3) == series(3, [1, 1])


def test_hasse_order_zero_is_identity():
    f = series(5, [1, 4, 2])
    assert f.hasse_derivative(0) == f


def test_hasse_order_bounds():
    f = series(3, [1, 1, 1])
    with pytest.raises(PrecisionExhausted):
        f.hasse_derivative(3)
    with pytest.raises(ValueError):
        f.hasse_derivative(-1)


@given(st.sampled_from([2, 3, 5]), st.integers(2, 14), st.integers(0, 10**6),
       st.data())
def test_hasse_composition_rule(p, n, seed, data):
    """D^i D^j = C(i+j, i) D^(i+j), the reason these are not plain d/dx."""
    rng = random.Random(seed)
    f = rand_series(rng, p, n)
    i = data.draw(st.integers(0, n - 1))
    j = data.draw(st.integers(0, n - 1 - i))
    lhs = f.hasse_derivative(j).hasse_derivative(i)
    c = int(lucas_binom(i + j, i, Prime(p)))
    rhs = f.hasse_derivative(i + j).scaled(c)
    assert lhs == rhs


@given(st.sampled_from([2, 3, 5]), st.integers(2, 12), st.integers(0, 10**6),
       st.data())
def test_hasse_product_rule(p, n, seed, data):
    rng = random.Random(seed)
    f = rand_series(rng, p, n)
    g = rand_series(rng, p, n)
    m = data.draw(st.integers(1, n - 1))
    lhs = (f * g).hasse_derivative(m)
    rhs = TruncSeries.constant(Prime(p), n - m, 0)
    for i in range(m + 1):
        a = f.hasse_derivative(i).truncate(n - m)
        b = g.hasse_derivative(m - i).truncate(n - m)
        rhs = rhs + a * b
    assert lhs == rhs


# -- frobenius and p-th roots -----------------------------------------------

def test_frobenius_keeps_precision():
    f = TruncSeries.one_plus_x(P2, 8)
    assert f.frobenius() == series(2, [1, 0, 1, 0, 0, 0, 0, 0])
    g = series(3, [1, 1, 1, 0, 0, 0, 0, 0, 0])
    assert g.frobenius() == series(3, [1, 0, 0, 1, 0, 0, 1, 0, 0])


@given(st.sampled_from([2, 3, 5]), st.integers(1, 16), st.integers(0, 10**6))
def test_frobenius_is_pth_power(p, n, seed):
    rng = random.Random(seed)
    f = rand_series(rng, p, n)
    assert f.frobenius() == f.pow_int(p)


@given(st.sampled_from([2, 3, 5]), st.integers(1, 16), st.integers(0, 10**6))
def test_root_undoes_frobenius(p, n, seed):
    rng = random.Random(seed)
    f = rand_series(rng, p, n)
    assert f.frobenius().pth_root() == f.truncate((n - 1) // p + 1)


def test_pth_root_failure_names_offender():
    with pytest.raises(NotAPthPower) as exc:
        TruncSeries.one_plus_x(P2, 4).pth_root()
    assert "x^1" in str(exc.value)


def test_pth_root_precision():
    f = series(2, [1, 0, 1, 0, 0, 0, 0, 0])
    assert f.pth_root() == series(2, [1, 1, 0, 0])


# -- composition ------------------------------------------------------------

def test_compose_with_x_is_identity():
    f = series(5, [1, 2, 3, 4])
    x = series(5, [0, 1, 0, 0])
    assert f.compose(x) == f


def test_compose_frozen():
    f = TruncSeries.one_plus_x(P2, 3)
    inner = series(2, [0, 1, 1])
    assert f.compose(inner) == series(2, [1, 1, 1])


def test_compose_power_of_group_element():
    cube = TruncSeries.one_plus_x(P2, 8).pow_int(3)
    inner = cube - TruncSeries.constant(P2, 8)
    assert cube.compose(inner) == series(2, [1, 1, 0, 0, 0, 0, 0, 0])


def test_compose_rejects_nonzero_constant():
    f = series(3, [1, 1])
    with pytest.raises(NonzeroConstantInner):
        f.compose(series(3, [1, 1]))


# -- two-variable boxes -----------------------------------------------------

def test_group_law_box_of_one_plus_x():
    f = TruncSeries.one_plus_x(P2, 2)
    box = subst_group_law(f)
    assert box == outer_product(f, f)
    assert box.table.tolist() == [[1, 1], [1, 1]]


def test_group_law_box_of_square():
    f = TruncSeries.one_plus_x(P2, 3).pow_int(2)
    assert subst_group_law(f) == outer_product(f, f)


def test_first_mismatch_row_major():
    f = TruncSeries.one_plus_x(P2, 2)
    g = TruncSeries.constant(P2, 2)
    a = outer_product(f, f)
    b = outer_product(f, g)
    assert a.first_mismatch(a) is None
    assert a.first_mismatch(b) == (0, 1)


def test_box_shape_checks():
    f2 = TruncSeries.one_plus_x(P2, 2)
    f3 = TruncSeries.one_plus_x(P2, 3)
    with pytest.raises(ShapeMismatch):
        outer_product(f2, f2).first_mismatch(outer_product(f3, f3))
    with pytest.raises(ModulusMismatch):
        outer_product(f2, f2).first_mismatch(
            outer_product(TruncSeries.one_plus_x(P3, 2),
                          TruncSeries.one_plus_x(P3, 2)))


# -- text form --------------------------------------------------------------

def test_serialize_frozen():
    f = series(2, [1, 1, 0, 0, 1, 1, 0, 0])
    assert f.serialize() == "p=2;N=8;coeffs=1,1,0,0,1,1,0,0"


def test_parse_round_trip():
    rng = random.Random(11)
    for p in (2, 3, 5):
        for _ in range(10):
            f = rand_series(rng, p, rng.randrange(1, 20))
            assert TruncSeries.parse(f.serialize()) == f


def test_parse_rejects_malformed():
    for bad in ("", "p=2;N=2", "p=2;N=3;coeffs=1,1", "q=2;N=1;coeffs=1",
                "p=2;N=1;coeffs=2", "p=4;N=1;coeffs=1"):
        with pytest.raises(ValueError):
            TruncSeries.parse(bad)
