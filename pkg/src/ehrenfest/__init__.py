"""Exact mixing analysis of r-urn Ehrenfest diffusions through the Gelfand pair (G(r,1,n), S_n)."""

__version__ = "0.1.0"

from .combinatorics import (
    Composition,
    compositions,
    elementary_symmetric,
    monomial_symmetric_at_type,
    multinomial,
)
from .gelfand import GroupElement, ResourceLimitError, ZonalTable, group_element_type, zonal_table, zonal_value
from .oracle import DenseKernel, EmpiricalDistribution, build_kernel, power_distribution, simulate, verify
from .shuffles import (
    ShuffleKind,
    fourier_coefficient,
    fourier_coefficient_numeric,
    hamming_distance,
    transition_probability,
)
from .spectral import (
    SpectralProfile,
    TypeDistribution,
    cutoff_threshold,
    distribution_after,
    distribution_after_elementary,
    limit_distribution,
    tv_curve,
    tv_distance,
    tv_upper_bound,
    uniform,
)

__all__ = [
    "Composition",
    "DenseKernel",
    "EmpiricalDistribution",
    "GroupElement",
    "ResourceLimitError",
    "ShuffleKind",
    "SpectralProfile",
    "TypeDistribution",
    "ZonalTable",
    "build_kernel",
    "compositions",
    "cutoff_threshold",
    "distribution_after",
    "distribution_after_elementary",
    "elementary_symmetric",
    "fourier_coefficient",
    "fourier_coefficient_numeric",
    "group_element_type",
    "hamming_distance",
    "limit_distribution",
    "monomial_symmetric_at_type",
    "multinomial",
    "power_distribution",
    "simulate",
    "transition_probability",
    "tv_curve",
    "tv_distance",
    "tv_upper_bound",
    "uniform",
    "verify",
    "zonal_table",
    "zonal_value",
]
