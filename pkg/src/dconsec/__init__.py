"""Exact counts of permutations avoiding d-consecutive values at distance d."""
from .asymptotics import (
    HighPrecisionReal,
    SeriesExpansion,
    convergence_report,
    e_squared,
    empirical_first_order,
    exact_ratio_scaled,
    series_bracket,
)
from .combi import binomial, block_assignments, compositions, factorial
from .counts import (
    CountSpec,
    count_d0,
    count_d0_formula,
    count_d1,
    count_exact,
    count_general,
    count_general_reference,
    q_value,
    q_value_reference,
    residue_profile,
)
from .oracle import OracleRefused, inverse_condition_count, oracle_count, oracle_count_parallel

__all__ = [
    "CountSpec",
    "HighPrecisionReal",
    "OracleRefused",
    "SeriesExpansion",
    "binomial",
    "block_assignments",
    "compositions",
    "convergence_report",
    "count_d0",
    "count_d0_formula",
    "count_d1",
    "count_exact",
    "count_general",
    "count_general_reference",
    "e_squared",
    "empirical_first_order",
    "exact_ratio_scaled",
    "factorial",
    "inverse_condition_count",
    "oracle_count",
    "oracle_count_parallel",
    "q_value",
    "q_value_reference",
    "residue_profile",
    "series_bracket",
]
