"""Zonal spherical functions of the Gelfand pair ``(G(r,1,n), S_n)``.

``G(r,1,n)`` is the wreath product of ``Z/rZ`` with ``S_n``. Its elements are
pairs ``(colors; sigma)`` acting on urn configurations by

    (g . b)_i = colors_i + b_{sigma^{-1}(i)}  (mod r).

Zonal spherical functions are bi-``S_n``-invariant, so they depend only on
the *type* of the colors: the composition counting how many colors equal
each residue. The table is indexed by pairs of compositions ``(k, l)``:

    omega[k, l] = m_{lambda(k)}(l) / multinomial(k)
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .combinatorics import (
    Composition,
    _check_pair,
    composition_index,
    compositions,
    monomial_symmetric_at_type,
    monomial_symmetric_table,
    multinomial,
    num_compositions,
)

DEFAULT_MAX_TYPES = 50_000


def max_types() -> int:
    """Cap on the number of compositions a table may have (``EHRENFEST_MAX_TYPES``)."""
    return int(os.environ.get("EHRENFEST_MAX_TYPES", DEFAULT_MAX_TYPES))


class ResourceLimitError(ValueError):
    """A requested object would exceed a configured size cap."""


def check_type_count(r: int, n: int, cap: int | None = None) -> int:
    count = num_compositions(r, n)
    cap = max_types() if cap is None else cap
    if count > cap:
        raise ResourceLimitError(
            f"r={r}, n={n} has {count} compositions, above the cap of {cap} "
            "(raise EHRENFEST_MAX_TYPES to override)"
        )
    return count


@dataclass(frozen=True)
class GroupElement:
    """An element ``(colors; permutation)`` of ``G(r,1,n)``.

    ``permutation`` is 0-based: ``permutation[i]`` is the image of ``i``.
    """

    colors: tuple[int, ...]
    permutation: tuple[int, ...]
    r: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) % self.r for c in self.colors))
        object.__setattr__(self, "permutation", tuple(int(p) for p in self.permutation))
        if sorted(self.permutation) != list(range(len(self.colors))):
            raise ValueError(f"{self.permutation} is not a permutation of 0..{len(self.colors) - 1}")

    @property
    def n(self) -> int:
        return len(self.colors)

    def act(self, b: Sequence[int]) -> tuple[int, ...]:
        """Apply the element to a configuration ``b`` (a tuple of urn labels)."""
        if len(b) != self.n:
            raise ValueError(f"configuration has {len(b)} balls, element acts on {self.n}")
        inv = [0] * self.n
        for i, p in enumerate(self.permutation):
            inv[p] = i
        return tuple((self.colors[i] + b[inv[i]]) % self.r for i in range(self.n))


def group_element_type(g: GroupElement) -> Composition:
    """Composition ``l`` with ``l[j] = #{i : colors_i == j}``; ignores the permutation."""
    counts = [0] * g.r
    for c in g.colors:
        counts[c] += 1
    return tuple(counts)


def zonal_value(k: Sequence[int], ell: Sequence[int]) -> complex:
    """``omega[k, l]``, the zonal spherical function of ``V(k)`` at type ``l``."""
    k, ell = _check_pair(k, ell)
    n = sum(k)
    if k[0] == n or ell[0] == n:
        return 1.0 + 0.0j
    return monomial_symmetric_at_type(k, ell) / multinomial(k)


@dataclass(frozen=True)
class ZonalTable:
    r: int
    n: int
    index: tuple[Composition, ...]
    values: np.ndarray  # values[i, j] = omega[index[i], index[j]]

    @property
    def dimensions(self) -> np.ndarray:
        """``dim V(k)`` for each row, as floats."""
        return np.array([float(multinomial(k)) for k in self.index])

    @property
    def orbit_sizes(self) -> np.ndarray:
        """Number of configurations of each column type, as floats."""
        return self.dimensions

    def position(self, k: Sequence[int]) -> int:
        return composition_index(self.r, self.n)[tuple(k)]

    def __getitem__(self, key: tuple[Sequence[int], Sequence[int]]) -> complex:
        k, ell = key
        return complex(self.values[self.position(k), self.position(ell)])


_TABLE_CACHE: dict[tuple[int, int], ZonalTable] = {}


def zonal_table(r: int, n: int, cap: int | None = None) -> ZonalTable:
    """The full table of zonal spherical values over ``compositions(r, n)``.

    Cached per ``(r, n)``; the returned table is read-only.

    >>> zonal_table(2, 1).values.real
    array([[ 1.,  1.],
           [ 1., -1.]])
    """
    if r < 2 or n < 1:
        raise ValueError(f"need r >= 2 and n >= 1, got r={r}, n={n}")
    check_type_count(r, n, cap)
    key = (r, n)
    if key not in _TABLE_CACHE:
        index = compositions(r, n)
        dims = np.array([float(multinomial(k)) for k in index])
        values = monomial_symmetric_table(r, n) / dims[:, None]
        # trivial representation row and identity-coset column are exactly 1
        values[0, :] = 1.0
        values[:, 0] = 1.0
        values.setflags(write=False)
        _TABLE_CACHE[key] = ZonalTable(r, n, index, values)
    return _TABLE_CACHE[key]
