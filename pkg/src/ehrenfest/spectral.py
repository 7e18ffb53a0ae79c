"""Exact N-step distributions, total variation and cutoff via spherical Fourier inversion.

Starting from the all-zero configuration, the chain stays bi-``S_n``-invariant,
so its law is constant on configuration types. The per-state mass of type
``l`` after ``N`` steps is

    p_N(l) = r**-n * sum_k multinomial(k) * f_k**N * omega[k, l]

and everything here is stored per type, never per configuration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .combinatorics import composition_index, compositions, elementary_symmetric_all, multinomial
from .gelfand import zonal_table
from .shuffles import ShuffleKind, fourier_coefficients

IMAG_TOL = 1e-9
NEG_TOL = 1e-12


@dataclass(frozen=True)
class TypeDistribution:
    """Probability law on ``B(r, n)`` that is constant on configuration types.

    ``masses[j]`` is the probability of any *single* configuration of type
    ``index[j]``; the total probability of the type is that times its orbit size.
    """

    r: int
    n: int
    masses: np.ndarray

    def __post_init__(self):
        masses = np.array(self.masses, dtype=float)
        if masses.shape != (len(self.index),):
            raise ValueError(f"expected {len(self.index)} masses for r={self.r}, n={self.n}, got {masses.shape}")
        masses.setflags(write=False)
        object.__setattr__(self, "masses", masses)

    @property
    def index(self) -> tuple[tuple[int, ...], ...]:
        return compositions(self.r, self.n)

    @property
    def orbit_sizes(self) -> np.ndarray:
        return np.array([float(multinomial(ell)) for ell in self.index])

    def mass(self, ell: Sequence[int]) -> float:
        return float(self.masses[composition_index(self.r, self.n)[tuple(ell)]])

    def type_probabilities(self) -> np.ndarray:
        """Total probability of each type."""
        return self.orbit_sizes * self.masses

    def total(self) -> float:
        return float(self.type_probabilities().sum())

    def as_dict(self) -> dict[tuple[int, ...], float]:
        return dict(zip(self.index, self.masses.tolist()))


@dataclass(frozen=True)
class SpectralProfile:
    shuffle: ShuffleKind
    r: int
    n: int
    coefficients: np.ndarray  # f_k in composition order; f_k = 1 at the trivial k

    @classmethod
    def of(cls, s: ShuffleKind | str, r: int, n: int) -> "SpectralProfile":
        s = ShuffleKind.parse(s)
        f = fourier_coefficients(s, r, n)
        f[0] = 1.0
        f.setflags(write=False)
        return cls(s, r, n, f)

    @property
    def is_real(self) -> bool:
        return not np.any(self.coefficients.imag)

    def powers(self, N: int) -> np.ndarray:
        if self.is_real:
            return self.coefficients.real ** N
        return self.coefficients ** N


def uniform(r: int, n: int) -> TypeDistribution:
    return TypeDistribution(r, n, np.full(len(compositions(r, n)), float(r) ** -n))


def point_mass(r: int, n: int) -> TypeDistribution:
    """The law concentrated on the all-zero configuration."""
    masses = np.zeros(len(compositions(r, n)))
    masses[0] = 1.0
    return TypeDistribution(r, n, masses)


def _realize(values: np.ndarray) -> np.ndarray:
    values = np.atleast_1d(values)
    if np.iscomplexobj(values):
        worst = float(np.max(np.abs(values.imag), initial=0.0))
        if worst > IMAG_TOL:
            raise ArithmeticError(f"reconstructed masses have imaginary part {worst:.3g}")
        values = values.real
    if np.any(values < -NEG_TOL):
        raise ArithmeticError(f"reconstructed mass {values.min():.3g} is negative beyond tolerance")
    return np.clip(values, 0.0, None)


def _inversion_matrix(r: int, n: int) -> np.ndarray:
    # row k: multinomial(k) * omega[k, :] / r**n
    table = zonal_table(r, n)
    return table.dimensions[:, None] * table.values / float(r) ** n


def distribution_curve(s: ShuffleKind | str, r: int, n: int, steps: Iterable[int]) -> list[TypeDistribution]:
    """``distribution_after`` for several step counts, sharing the zonal table."""
    profile = SpectralProfile.of(s, r, n)
    inversion = _inversion_matrix(r, n)
    out = []
    for N in steps:
        if N < 0:
            raise ValueError(f"N must be >= 0, got {N}")
        out.append(TypeDistribution(r, n, _realize(profile.powers(N) @ inversion)))
    return out


def distribution_after(s: ShuffleKind | str, N: int, r: int, n: int) -> TypeDistribution:
    """Law of the chain started at the all-zero configuration after ``N`` steps."""
    return distribution_curve(s, r, n, [N])[0]


def distribution_after_elementary(N: int, r: int, n: int) -> TypeDistribution:
    """``distribution_after`` for the any-other shuffle via the collapsed ``k_0`` sum.

    ``p_N(l) = r**-n * sum_{k0} ((r k0 - n) / (n (r - 1)))**N * e_{n-k0}(Phi)``
    where ``Phi_i = r - 1`` for balls in urn 0 and ``-1`` otherwise.
    """
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    k0 = np.arange(n + 1)
    eigen = ((r * k0 - n) / (n * (r - 1.0))) ** N
    masses = []
    for ell in compositions(r, n):
        phi = [r - 1.0] * ell[0] + [-1.0] * (n - ell[0])
        e = elementary_symmetric_all(phi).real
        masses.append(eigen @ e[n - k0])
    return TypeDistribution(r, n, _realize(np.array(masses) / float(r) ** n))


def tv_distance(a: TypeDistribution, b: TypeDistribution) -> float:
    """Total variation distance, summed over all ``r**n`` configurations by type."""
    if (a.r, a.n) != (b.r, b.n):
        raise ValueError(f"distributions live on different spaces: (r={a.r}, n={a.n}) vs (r={b.r}, n={b.n})")
    return 0.5 * float(a.orbit_sizes @ np.abs(a.masses - b.masses))


class Bound(NamedTuple):
    value: float
    squared: float


def tv_upper_bound(s: ShuffleKind | str, N: int, r: int, n: int) -> Bound:
    """Upper bound on TV to uniform: ``bound**2 = 1/4 sum_{k nontrivial} dim V(k) |f_k|**2N``."""
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    profile = SpectralProfile.of(s, r, n)
    dims = zonal_table(r, n).dimensions
    moduli = np.abs(profile.coefficients[1:])
    squared = 0.25 * float(dims[1:] @ moduli ** (2 * N))
    return Bound(math.sqrt(squared), squared)


class Cutoff(NamedTuple):
    steps: float  # real threshold; callers round up
    guarantee: float  # bound on TV**2 - offset
    offset: float  # 1/4 when r == 2, else 0

    @property
    def whole_steps(self) -> int:
        return math.ceil(self.steps)


def cutoff_threshold(r: int, n: int, c: float) -> Cutoff:
    """Threshold ``N = n (r-1) / (2r) * (log r**n + c)`` for the any-other shuffle.

    At that many steps ``TV**2 <= exp(-c) / 4`` for ``r >= 3`` and
    ``TV**2 - 1/4 <= exp(-c) / 4`` for ``r == 2``.
    """
    if r < 2 or n < 1:
        raise ValueError(f"need r >= 2 and n >= 1, got r={r}, n={n}")
    steps = n * (r - 1) / (2 * r) * (n * math.log(r) + c)
    return Cutoff(steps, 0.25 * math.exp(-c), 0.25 if r == 2 else 0.0)


def limit_distribution(r: int, n: int, parity: str = "even") -> TypeDistribution:
    """Limit of the any-other chain along even or odd step counts.

    For ``r > 2`` both limits are uniform. For ``r = 2`` the chain is periodic:
    the limit puts ``2**-(n-1)`` on each configuration whose urn-1 count has the
    given parity and nothing elsewhere.
    """
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    if r > 2:
        return uniform(r, n)
    want = 0 if parity == "even" else 1
    masses = [2.0 ** -(n - 1) if ell[1] % 2 == want else 0.0 for ell in compositions(2, n)]
    return TypeDistribution(r, n, np.array(masses))


class CurveRow(NamedTuple):
    N: int
    tv_exact: float
    tv_bound: float
    tv_squared: float
    bound_squared: float
    tv_parity_limit: float | None  # r == 2 only: TV to the limit of N's parity class


def tv_curve(s: ShuffleKind | str, r: int, n: int, steps: Sequence[int]) -> list[CurveRow]:
    """Exact TV to uniform and its spectral upper bound along ``steps``."""
    profile = SpectralProfile.of(s, r, n)
    dims = zonal_table(r, n).dimensions[1:]
    moduli_sq = np.abs(profile.coefficients[1:]) ** 2
    pi = uniform(r, n)
    limits = {p: limit_distribution(r, n, p) for p in ("even", "odd")} if r == 2 else {}
    rows = []
    for N, dist in zip(steps, distribution_curve(s, r, n, steps)):
        tv = tv_distance(dist, pi)
        bound_sq = 0.25 * float(dims @ moduli_sq ** N)
        parity = tv_distance(dist, limits["even" if N % 2 == 0 else "odd"]) if limits else None
        rows.append(CurveRow(N, tv, math.sqrt(bound_sq), tv * tv, bound_sq, parity))
    return rows
