"""The three one-ball shuffles on ``B(r, n)`` and their Fourier coefficients.

A configuration is a tuple ``b`` with ``b[i]`` the urn (0..r-1) holding ball
``i``. Every step picks a ball uniformly and moves it by a color shift:

* ``ANY_OTHER``: to any of the other ``r - 1`` urns, uniformly;
* ``CYCLIC_LEFT``: from urn ``i`` to urn ``i + 1 (mod r)``;
* ``CYCLIC_BIDIR``: to urn ``i + 1`` or ``i - 1 (mod r)`` with probability 1/2
  each. For ``r = 2`` the two targets coincide and get the full weight.
"""

from __future__ import annotations

import enum
import itertools
from fractions import Fraction
from typing import Sequence

import numpy as np

from .combinatorics import Composition, check_composition, compositions, roots_of_unity
from .gelfand import zonal_value


class ShuffleKind(enum.Enum):
    ANY_OTHER = "any-other"
    CYCLIC_LEFT = "cyclic-left"
    CYCLIC_BIDIR = "cyclic-bidir"

    @classmethod
    def parse(cls, name: "str | ShuffleKind") -> "ShuffleKind":
        if isinstance(name, cls):
            return name
        try:
            return cls(name)
        except ValueError:
            choices = ", ".join(s.value for s in cls)
            raise ValueError(f"unknown shuffle {name!r}; choose one of {choices}") from None

    def __str__(self) -> str:
        return self.value


def move_weights(s: ShuffleKind | str, r: int) -> dict[int, Fraction]:
    """Distribution of the color shift applied to the chosen ball."""
    s = ShuffleKind.parse(s)
    if r < 2:
        raise ValueError(f"shuffles need r >= 2, got r={r}")
    if s is ShuffleKind.ANY_OTHER:
        return {j: Fraction(1, r - 1) for j in range(1, r)}
    if s is ShuffleKind.CYCLIC_LEFT:
        return {1: Fraction(1)}
    weights: dict[int, Fraction] = {}
    for j in (1, r - 1):
        weights[j] = weights.get(j, Fraction(0)) + Fraction(1, 2)
    return weights


def check_configuration(b: Sequence[int], r: int) -> tuple[int, ...]:
    b = tuple(int(x) for x in b)
    if any(not 0 <= x < r for x in b):
        raise ValueError(f"configuration {b} has urn labels outside 0..{r - 1}")
    return b


def configuration_type(b: Sequence[int], r: int) -> Composition:
    """Number of balls in each urn."""
    counts = [0] * r
    for x in check_configuration(b, r):
        counts[x] += 1
    return tuple(counts)


def hamming_distance(b: Sequence[int], c: Sequence[int]) -> int:
    if len(b) != len(c):
        raise ValueError(f"configurations have different lengths: {len(b)} and {len(c)}")
    return sum(x != y for x, y in zip(b, c))


def transition_probability(s: ShuffleKind | str, b: Sequence[int], c: Sequence[int], r: int) -> Fraction:
    """Exact one-step probability of moving from ``b`` to ``c``.

    >>> transition_probability("any-other", (0, 0), (0, 2), r=3)
    Fraction(1, 4)
    """
    b, c = check_configuration(b, r), check_configuration(c, r)
    if hamming_distance(b, c) != 1:
        return Fraction(0)
    (i,) = [i for i in range(len(b)) if b[i] != c[i]]
    weight = move_weights(s, r).get((c[i] - b[i]) % r, Fraction(0))
    return weight / len(b)


def fourier_coefficient(s: ShuffleKind | str, k: Sequence[int]) -> complex:
    """Closed-form eigenvalue ``f_k`` of the shuffle on ``V(k)``."""
    s = ShuffleKind.parse(s)
    k = check_composition(k)
    r, n = len(k), sum(k)
    if s is ShuffleKind.ANY_OTHER:
        return complex((r * k[0] / n - 1.0) / (r - 1))
    # conj(xi**i) = xi**-i
    powers = np.conj(roots_of_unity(r))
    weights = np.asarray(k, dtype=float) / n
    if s is ShuffleKind.CYCLIC_LEFT:
        return complex(weights @ powers)
    return complex(weights @ powers.real)


def fourier_coefficient_numeric(s: ShuffleKind | str, k: Sequence[int]) -> complex:
    """``f_k`` by direct summation over the one-step moves from the all-zero state.

    ``f_k = sum_b p(I_0, b) * conj(omega_k(type(b)))``; independent of the
    closed forms in :func:`fourier_coefficient`.
    """
    s = ShuffleKind.parse(s)
    k = check_composition(k)
    r, n = len(k), sum(k)
    start = (0,) * n
    total = 0j
    for ball, color in itertools.product(range(n), range(1, r)):
        c = start[:ball] + (color,) + start[ball + 1:]
        p = transition_probability(s, start, c, r)
        if p:
            total += float(p) * np.conj(zonal_value(k, configuration_type(c, r)))
    return complex(total)


def fourier_coefficients(s: ShuffleKind | str, r: int, n: int) -> np.ndarray:
    """Closed-form ``f_k`` for every ``k`` in composition order."""
    return np.array([fourier_coefficient(s, k) for k in compositions(r, n)])
