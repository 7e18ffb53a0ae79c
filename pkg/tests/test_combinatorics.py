import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ehrenfest.combinatorics import (
    compositions,
    elementary_symmetric,
    elementary_symmetric_all,
    monomial_symmetric_at_type,
    monomial_symmetric_column,
    multinomial,
)
from ehrenfest.shuffles import configuration_type

from oracles import monomial_brute, type_values


@pytest.mark.parametrize(
    "r, n, expected",
    [
        (2, 1, [(1, 0), (0, 1)]),
        (3, 2, [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]),
        (1, 5, [(5,)]),
    ],
)
def test_compositions_examples(r, n, expected):
    assert list(compositions(r, n)) == expected


@pytest.mark.parametrize("r, n", [(r, n) for r in range(1, 6) for n in range(0, 8)])
def test_compositions_count_and_order(r, n):
    comps = compositions(r, n)
    assert len(comps) == math.comb(n + r - 1, r - 1)
    assert len(set(comps)) == len(comps)
    assert all(len(c) == r and sum(c) == n and min(c) >= 0 for c in comps)
    assert list(comps) == sorted(comps, reverse=True)


def test_compositions_rejects_bad_arguments():
    with pytest.raises(ValueError):
        compositions(0, 3)
    with pytest.raises(ValueError):
        compositions(2, -1)


@pytest.mark.parametrize("k, expected", [((2, 0), 1), ((1, 1, 1), 6), ((2, 1, 1), 12)])
def test_multinomial_examples(k, expected):
    assert multinomial(k) == expected


def test_multinomial_is_exact_beyond_int64():
    assert multinomial((20, 20, 20)) == math.factorial(60) // math.factorial(20) ** 3
    assert multinomial((20, 20, 20)) > 2**63


@pytest.mark.parametrize("r", range(1, 6))
@pytest.mark.parametrize("n", range(0, 9))
def test_multinomials_sum_to_power(r, n):
    assert sum(multinomial(k) for k in compositions(r, n)) == r**n


def test_monomial_examples():
    n = 4
    for ell in compositions(3, n):
        assert monomial_symmetric_at_type((n, 0, 0), ell) == 1
    assert abs(monomial_symmetric_at_type((1, 1), (1, 1))) < 1e-15
    assert abs(monomial_symmetric_at_type((0, 2), (0, 2)) - 1) < 1e-15


@pytest.mark.parametrize("r, n", [(2, 4), (3, 3), (3, 4), (4, 3), (5, 2)])
def test_monomial_matches_brute_force_expansion(r, n):
    for ell in compositions(r, n):
        values = type_values(ell)
        for k in compositions(r, n):
            assert abs(monomial_symmetric_at_type(k, ell) - monomial_brute(k, values)) < 1e-10


@pytest.mark.parametrize("r, n", [(2, 6), (3, 5), (4, 4)])
def test_monomial_at_all_ones_is_multinomial(r, n):
    col = monomial_symmetric_column((n,) + (0,) * (r - 1))
    for k, v in zip(compositions(r, n), col):
        assert abs(v - multinomial(k)) < 1e-12


def test_monomial_rejects_mismatch():
    with pytest.raises(ValueError):
        monomial_symmetric_at_type((1, 1), (1, 0, 1))
    with pytest.raises(ValueError):
        monomial_symmetric_at_type((1, 1), (3, 0))


def test_monomial_large_n_uses_exact_object_coefficients():
    # r**n >= 2**62 switches to Python ints; value at all ones stays exact
    n = 32
    col = monomial_symmetric_column((n, 0, 0, 0))
    comps = compositions(4, n)
    idx = comps.index((8, 8, 8, 8))
    assert col[idx].real == pytest.approx(multinomial((8, 8, 8, 8)), rel=1e-15)


@pytest.mark.parametrize(
    "j, values, expected",
    [(0, [3.0, 7.0], 1), (2, [1, -1], -1), (1, [2, -1, -1], 0)],
)
def test_elementary_examples(j, values, expected):
    assert elementary_symmetric(j, values) == expected


def test_elementary_out_of_range():
    with pytest.raises(ValueError):
        elementary_symmetric(3, [1, 2])
    with pytest.raises(ValueError):
        elementary_symmetric(-1, [1, 2])


complex_values = st.lists(
    st.complex_numbers(max_magnitude=2, allow_nan=False, allow_infinity=False), min_size=0, max_size=10
)


@settings(max_examples=200)
@given(complex_values)
def test_elementary_sum_is_product(values):
    assert abs(elementary_symmetric_all(values).sum() - np.prod(1 + np.asarray(values, dtype=complex))) < 1e-12 * max(
        1, np.prod(1 + np.abs(values))
    )


@pytest.mark.parametrize("r, n", [(2, 5), (3, 4), (4, 4), (5, 3)])
def test_grouped_monomials_are_elementary_in_phi(r, n):
    # sum over k with n - k_0 nonzero exponents of m_{lambda(k)} = e_j(Phi)
    for ell in compositions(r, n):
        col = monomial_symmetric_column(ell)
        phi = [r - 1.0] * ell[0] + [-1.0] * (n - ell[0])
        e = elementary_symmetric_all(phi)
        for j in range(n + 1):
            grouped = sum(v for k, v in zip(compositions(r, n), col) if n - k[0] == j)
            assert abs(grouped - e[j]) < 1e-10


def test_configuration_type_counts():
    assert configuration_type((0, 1, 1), 3) == (1, 2, 0)


@pytest.mark.parametrize("r, n", [(2, 7), (3, 6), (4, 5), (5, 4)])
def test_batched_table_matches_exact_columns(r, n, monkeypatch):
    from ehrenfest import combinatorics

    exact = np.stack([monomial_symmetric_column(ell) for ell in compositions(r, n)], axis=1)
    batched = combinatorics.monomial_symmetric_table(r, n)
    dims = np.array([multinomial(k) for k in compositions(r, n)], dtype=float)
    assert np.max(np.abs(batched - exact) / dims[:, None]) < 1e-13
    monkeypatch.setattr(combinatorics, "BATCHED_TABLE_BYTES", 0)
    assert np.array_equal(combinatorics.monomial_symmetric_table(r, n), exact)
