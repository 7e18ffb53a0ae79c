"""Ground truth for the spectral results: exact kernel powering and Monte Carlo.

Configurations are indexed in mixed radix, ball 0 most significant:
``index(b) = sum_i b[i] * r**(n - 1 - i)``.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

import numpy as np
import scipy.sparse as sp

from .combinatorics import composition_index, compositions
from .gelfand import ResourceLimitError
from .shuffles import ShuffleKind, move_weights
from .spectral import TypeDistribution, distribution_curve

DEFAULT_MAX_STATES = 4096
RNG_ALGORITHM = "numpy.random.PCG64"


def max_states() -> int:
    """Cap on ``r**n`` for oracle computations (``EHRENFEST_MAX_STATES``)."""
    return int(os.environ.get("EHRENFEST_MAX_STATES", DEFAULT_MAX_STATES))


def check_state_count(r: int, n: int, cap: int | None = None) -> int:
    cap = max_states() if cap is None else cap
    count = r**n
    if count > cap:
        raise ResourceLimitError(
            f"r={r}, n={n} has {count} configurations, above the oracle cap of {cap} "
            "(raise EHRENFEST_MAX_STATES to override)"
        )
    return count


def all_configurations(r: int, n: int) -> np.ndarray:
    """Every configuration as a row of digits, in index order."""
    idx = np.arange(r**n)
    place = r ** np.arange(n - 1, -1, -1)
    return (idx[:, None] // place) % r


def configuration_index(b, r: int) -> int:
    out = 0
    for x in b:
        out = out * r + int(x)
    return out


def type_labels(r: int, n: int) -> np.ndarray:
    """Position in ``compositions(r, n)`` of the type of every configuration."""
    configs = all_configurations(r, n)
    counts = np.stack([(configs == j).sum(axis=1) for j in range(r)], axis=1)
    lookup = composition_index(r, n)
    return np.array([lookup[tuple(row)] for row in counts.tolist()])


@dataclass(frozen=True)
class Move:
    """One (ball, shift) move as a bijection on configuration indices."""

    source: np.ndarray
    target: np.ndarray
    numerator: int


@dataclass(frozen=True)
class DenseKernel:
    """Exact transition kernel: ``P[b, c] = weights[b, c] / denominator``."""

    shuffle: ShuffleKind
    r: int
    n: int
    denominator: int
    weights: sp.csr_matrix
    moves: tuple[Move, ...] = field(repr=False)

    @property
    def size(self) -> int:
        return self.r**self.n

    def entry(self, b, c) -> Fraction:
        i, j = configuration_index(b, self.r), configuration_index(c, self.r)
        return Fraction(int(self.weights[i, j]), self.denominator)

    def row_sums(self) -> list[Fraction]:
        sums = np.asarray(self.weights.sum(axis=1)).ravel()
        return [Fraction(int(x), self.denominator) for x in sums]

    def to_fractions(self) -> np.ndarray:
        """Dense object array of ``Fraction`` entries; meant for small kernels."""
        dense = self.weights.toarray()
        out = np.empty(dense.shape, dtype=object)
        for idx, w in np.ndenumerate(dense):
            out[idx] = Fraction(int(w), self.denominator)
        return out


def build_kernel(s: ShuffleKind | str, r: int, n: int, cap: int | None = None) -> DenseKernel:
    s = ShuffleKind.parse(s)
    size = check_state_count(r, n, cap)
    per_move = {j: w / n for j, w in move_weights(s, r).items()}
    denominator = math.lcm(*(p.denominator for p in per_move.values()))
    configs = all_configurations(r, n)
    source = np.arange(size)
    moves = []
    for ball in range(n):
        place = r ** (n - 1 - ball)
        digit = configs[:, ball]
        for shift, p in per_move.items():
            target = source + (((digit + shift) % r) - digit) * place
            moves.append(Move(source, target, int(p * denominator)))
    rows = np.concatenate([m.source for m in moves])
    cols = np.concatenate([m.target for m in moves])
    data = np.concatenate([np.full(size, m.numerator, dtype=np.int64) for m in moves])
    weights = sp.csr_matrix((data, (rows, cols)), shape=(size, size), dtype=np.int64)
    weights.sum_duplicates()
    return DenseKernel(s, r, n, denominator, weights, tuple(moves))


@dataclass(frozen=True)
class ConfigurationDistribution:
    """Exact law over configurations: ``P(b) = numerators[index(b)] / denominator``."""

    r: int
    n: int
    numerators: np.ndarray  # object array of Python ints
    denominator: int

    def probability(self, b) -> Fraction:
        return Fraction(int(self.numerators[configuration_index(b, self.r)]), self.denominator)

    def probabilities(self) -> np.ndarray:
        # int / int is correctly rounded in Python
        return np.array([int(x) / self.denominator for x in self.numerators])

    def to_types(self) -> TypeDistribution:
        """Collapse to per-type masses, checking every type class is constant."""
        labels = type_labels(self.r, self.n)
        masses = np.zeros(len(compositions(self.r, self.n)))
        seen: dict[int, int] = {}
        for label, num in zip(labels.tolist(), self.numerators):
            if label in seen and seen[label] != num:
                raise ArithmeticError(f"mass is not constant on type {compositions(self.r, self.n)[label]}")
            seen[label] = num
        for label, num in seen.items():
            masses[label] = int(num) / self.denominator
        return TypeDistribution(self.r, self.n, masses)


def iterate_distributions(kernel: DenseKernel, n_steps: int) -> Iterator[ConfigurationDistribution]:
    """Exact laws after ``0, 1, ..., n_steps`` steps from the all-zero configuration."""
    v = np.zeros(kernel.size, dtype=object)
    v[:] = 0
    v[0] = 1
    denominator = 1
    yield ConfigurationDistribution(kernel.r, kernel.n, v.copy(), denominator)
    for _ in range(n_steps):
        new = np.zeros(kernel.size, dtype=object)
        new[:] = 0
        for move in kernel.moves:
            new[move.target] += move.numerator * v[move.source]
        v = new
        denominator *= kernel.denominator
        yield ConfigurationDistribution(kernel.r, kernel.n, v.copy(), denominator)


def power_distribution(kernel: DenseKernel, N: int) -> ConfigurationDistribution:
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    for dist in iterate_distributions(kernel, N):
        pass
    return dist


@dataclass(frozen=True)
class EmpiricalDistribution:
    shuffle: ShuffleKind
    r: int
    n: int
    N: int
    counts: np.ndarray  # per configuration, index order
    trials: int
    seed: int
    algorithm: str = RNG_ALGORITHM

    def probabilities(self) -> np.ndarray:
        return self.counts / self.trials

    def tv_to(self, exact: np.ndarray) -> float:
        return 0.5 * float(np.abs(self.probabilities() - exact).sum())


def simulate(s: ShuffleKind | str, r: int, n: int, N: int, trials: int, seed: int) -> EmpiricalDistribution:
    """Run ``trials`` independent copies of the shuffle for ``N`` steps from all-zero.

    All trials advance together from one ``PCG64`` stream, so the result is a
    pure function of the arguments.
    """
    s = ShuffleKind.parse(s)
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    size = check_state_count(r, n)
    rng = np.random.Generator(np.random.PCG64(seed))
    state = np.zeros((trials, n), dtype=np.int64)
    rows = np.arange(trials)
    for _ in range(N):
        balls = rng.integers(0, n, size=trials)
        if s is ShuffleKind.ANY_OTHER:
            shifts = rng.integers(1, r, size=trials)
        elif s is ShuffleKind.CYCLIC_LEFT:
            shifts = np.ones(trials, dtype=np.int64)
        else:
            shifts = np.where(rng.random(trials) < 0.5, 1, r - 1)
        state[rows, balls] = (state[rows, balls] + shifts) % r
    index = state @ (r ** np.arange(n - 1, -1, -1))
    counts = np.bincount(index, minlength=size)
    return EmpiricalDistribution(s, r, n, N, counts, trials, seed)


def verify(s: ShuffleKind | str, r: int, n: int, n_steps: int, tolerance: float = 1e-10) -> dict:
    """Compare spectral per-state masses with exact kernel powering for ``N = 0..n_steps``."""
    s = ShuffleKind.parse(s)
    kernel = build_kernel(s, r, n)
    spectral = distribution_curve(s, r, n, range(n_steps + 1))
    labels = type_labels(r, n)
    errors = []
    for exact, approx in zip(iterate_distributions(kernel, n_steps), spectral):
        errors.append(float(np.max(np.abs(exact.probabilities() - approx.masses[labels]))))
    row_sums_exact = all(x == 1 for x in kernel.row_sums())
    worst = max(errors)
    return {
        "shuffle": s.value,
        "r": r,
        "n": n,
        "n_steps": n_steps,
        "states": kernel.size,
        "types": len(compositions(r, n)),
        "tolerance": tolerance,
        "max_error": worst,
        "max_error_per_step": errors,
        "row_sums_exact": row_sums_exact,
        "status": "pass" if worst <= tolerance and row_sums_exact else "fail",
    }
