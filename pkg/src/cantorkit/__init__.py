"""Exact rational constructions of deterministic Cantor sets on [0, 1]."""

from .families import (
    DigitIFS,
    EndpointTable,
    Gamma1,
    Gamma2,
    Gamma3,
    address_interval,
    digit_expansions,
    digit_stage,
    gamma1_gaps,
    gamma1_stage,
    gamma2_gaps,
    gamma2_stage,
    gamma3_delta,
    gamma3_digit_spec,
    gamma3_endpoints,
    gamma3_interval_length,
    gamma3_measure,
    nested_middle_alpha_stage,
    parse_spec,
    stage_set,
)
from .intervals import (
    ClosedInterval,
    GapList,
    IntervalSet,
    OpenInterval,
    contains_point,
    gaps_within,
    intersect,
    normalize,
    subtract_gaps,
    total_length,
    translate,
)
from .measures import CdfBound, WeightVector, cdf_bounds, cylinder_mass, staircase_samples
from .oracle import ComparisonReport, compare_stages, exhaustive_digit_membership
from .rational import make

__version__ = "0.1.0"
