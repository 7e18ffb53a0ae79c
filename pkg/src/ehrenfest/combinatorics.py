"""Compositions, multinomials and symmetric polynomials at roots of unity.

A composition of ``n`` into ``r`` parts is a plain tuple of ``r``
non-negative ints summing to ``n``. The same tuples index two things:

* an irreducible ``k``, through the exponent multiset
  ``lambda(k) = (0^k_0, 1^k_1, ..., (r-1)^k_{r-1})``;
* an orbit type ``l``, through the value multiset
  ``(1^l_0, xi^l_1, ..., xi^{r-1}^l_{r-1})`` with ``xi = exp(2 pi i / r)``.

Compositions are always listed in lexicographically decreasing order, so
``(n, 0, ..., 0)`` comes first and ``(0, ..., 0, n)`` last.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Sequence

import numpy as np

Composition = tuple[int, ...]

# int64 coefficient arrays are safe while r**n stays below this
_INT64_SAFE = 2**62


def compositions(r: int, n: int) -> tuple[Composition, ...]:
    """All compositions of ``n`` into ``r`` parts, lexicographically decreasing.

    >>> compositions(3, 2)
    ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))
    """
    if r < 1:
        raise ValueError(f"number of parts must be >= 1, got r={r}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got n={n}")
    return _compositions(r, n)


@lru_cache(maxsize=None)
def _compositions(r: int, n: int) -> tuple[Composition, ...]:
    if r == 1:
        return ((n,),)
    out = []
    for first in range(n, -1, -1):
        for rest in _compositions(r - 1, n - first):
            out.append((first,) + rest)
    return tuple(out)


def num_compositions(r: int, n: int) -> int:
    return math.comb(n + r - 1, r - 1)


@lru_cache(maxsize=None)
def composition_index(r: int, n: int) -> dict[Composition, int]:
    """Position of each composition in :func:`compositions` order."""
    return {c: i for i, c in enumerate(compositions(r, n))}


def check_composition(k: Sequence[int], r: int | None = None, n: int | None = None) -> Composition:
    """Validate ``k`` and return it as a tuple of ints."""
    k = tuple(int(x) for x in k)
    if len(k) < 1 or any(x < 0 for x in k):
        raise ValueError(f"not a composition: {k}")
    if r is not None and len(k) != r:
        raise ValueError(f"composition {k} has {len(k)} parts, expected r={r}")
    if n is not None and sum(k) != n:
        raise ValueError(f"composition {k} sums to {sum(k)}, expected n={n}")
    return k


def _check_pair(k: Sequence[int], ell: Sequence[int]) -> tuple[Composition, Composition]:
    k = check_composition(k)
    ell = check_composition(ell)
    if len(k) != len(ell):
        raise ValueError(f"mismatched r: {k} has {len(k)} parts, {ell} has {len(ell)}")
    if sum(k) != sum(ell):
        raise ValueError(f"mismatched n: {k} sums to {sum(k)}, {ell} sums to {sum(ell)}")
    return k, ell


def multinomial(k: Sequence[int]) -> int:
    """Exact multinomial coefficient ``n! / (k_0! ... k_{r-1}!)``."""
    k = check_composition(k)
    out, total = 1, 0
    for part in k:
        total += part
        out *= math.comb(total, part)
    return out


@lru_cache(maxsize=None)
def roots_of_unity(r: int) -> np.ndarray:
    """``xi**j`` for ``j = 0..r-1``, with components that are exactly 0 or +-1 snapped."""
    angles = 2.0 * np.pi * np.arange(r) / r
    re, im = np.cos(angles), np.sin(angles)
    for part in (re, im):
        for exact in (-1.0, 0.0, 1.0):
            part[np.abs(part - exact) < 1e-15] = exact
    roots = re + 1j * im
    roots.setflags(write=False)
    return roots


def root_of_unity_values(ell: Sequence[int]) -> np.ndarray:
    """The value list of type ``ell``: ``xi**j`` repeated ``ell[j]`` times."""
    ell = check_composition(ell)
    return np.repeat(roots_of_unity(len(ell)), ell)


@lru_cache(maxsize=None)
def _raise_maps(r: int, d: int) -> np.ndarray:
    # row i maps index of c in compositions(r, d) to index of c + e_i in compositions(r, d + 1)
    nxt = composition_index(r, d + 1)
    maps = np.empty((r, num_compositions(r, d)), dtype=np.intp)
    for j, c in enumerate(compositions(r, d)):
        for i in range(r):
            maps[i, j] = nxt[c[:i] + (c[i] + 1,) + c[i + 1:]]
    maps.setflags(write=False)
    return maps


def monomial_coefficients(ell: Sequence[int]) -> np.ndarray:
    """Exact cyclotomic coefficients of ``m_{lambda(k)}(ell)`` for every ``k``.

    Returns an integer array ``C`` of shape ``(len(compositions(r, n)), r)``
    with ``m_{lambda(k)}(ell) = sum_j C[idx(k), j] * xi**j``.

    Uses ``sum_k m_{lambda(k)}(x) y^k = prod_v (sum_i x_v**i y_i)``: the
    product runs over the ``n`` variables, grouped by value class, and the
    coefficient of ``y^k`` collects every assignment of the exponent multiset
    ``lambda(k)`` to the variables. Powers of ``xi`` are tracked mod ``r``.
    """
    return _monomial_coefficients(check_composition(ell))


@lru_cache(maxsize=256)
def _monomial_coefficients(ell: Composition) -> np.ndarray:
    r, n = len(ell), sum(ell)
    dtype = np.int64 if r**n < _INT64_SAFE else object
    coef = np.zeros((1, r), dtype=dtype)
    coef[0, 0] = 1
    d = 0
    for color, mult in enumerate(ell):
        shifts = [(color * i) % r for i in range(r)]
        for _ in range(mult):
            maps = _raise_maps(r, d)
            new = np.zeros((num_compositions(r, d + 1), r), dtype=dtype)
            for i in range(r):
                new[maps[i]] += np.roll(coef, shifts[i], axis=1)
            coef = new
            d += 1
    coef.setflags(write=False)
    return coef


BATCHED_TABLE_BYTES = 512 * 2**20


def monomial_symmetric_table(r: int, n: int) -> np.ndarray:
    """``M[i, j] = m_{lambda(k_i)}(l_j)`` over ``compositions(r, n)`` for both axes.

    Same generating function as :func:`monomial_coefficients`, but all types
    are built together degree by degree: the product for ``l`` is the product
    for ``l - e_c`` times one more factor ``sum_i xi**(c i) y_i``. Falls back to
    the per-column exact routine when the batched arrays would be too large.
    """
    size = num_compositions(r, n)
    if size * size * 16 * 2 > BATCHED_TABLE_BYTES:
        return np.stack([monomial_symmetric_column(ell) for ell in compositions(r, n)], axis=1)
    roots = roots_of_unity(r)
    # level[t, j]: coefficient of y^(j-th composition) in the product for the t-th type
    level = np.ones((1, 1), dtype=complex)
    for d in range(n):
        maps = _raise_maps(r, d)
        parents = composition_index(r, d)
        children = compositions(r, d + 1)
        new = np.zeros((len(children), len(children)), dtype=complex)
        for c in range(r):
            rows = [t for t, ell in enumerate(children) if max(j for j, x in enumerate(ell) if x) == c]
            if not rows:
                continue
            src = [parents[children[t][:c] + (children[t][c] - 1,) + children[t][c + 1:]] for t in rows]
            block = level[src]
            for i in range(r):
                new[np.ix_(rows, maps[i])] += roots[(c * i) % r] * block
        level = new
    return level.T


def _cyclotomic_value(coef: np.ndarray, r: int) -> np.ndarray:
    if coef.dtype == object:
        coef = coef.astype(float)
    return coef @ roots_of_unity(r)


def monomial_symmetric_column(ell: Sequence[int]) -> np.ndarray:
    """``m_{lambda(k)}(ell)`` as a complex vector over all ``k`` in composition order."""
    ell = check_composition(ell)
    return _cyclotomic_value(monomial_coefficients(ell), len(ell))


def monomial_symmetric_at_type(k: Sequence[int], ell: Sequence[int]) -> complex:
    """Monomial symmetric polynomial ``m_{lambda(k)}`` at the value multiset of ``ell``.

    >>> monomial_symmetric_at_type((1, 1), (1, 1))
    0j
    """
    k, ell = _check_pair(k, ell)
    row = monomial_coefficients(ell)[composition_index(len(k), sum(k))[k]]
    return complex(_cyclotomic_value(row[None, :], len(k))[0])


def elementary_symmetric_all(values: Sequence[complex]) -> np.ndarray:
    """``[e_0, e_1, ..., e_n]`` of ``values`` by the product recurrence."""
    values = np.asarray(values, dtype=complex)
    e = np.zeros(len(values) + 1, dtype=complex)
    e[0] = 1.0
    for m, x in enumerate(values, start=1):
        e[1:m + 1] = e[1:m + 1] + x * e[0:m]
    return e


def elementary_symmetric(j: int, values: Sequence[complex]) -> complex:
    """The ``j``-th elementary symmetric polynomial of ``values``."""
    if not 0 <= j <= len(values):
        raise ValueError(f"j={j} out of range for {len(values)} values")
    return complex(elementary_symmetric_all(values)[j])
