"""Exact degree-like functions, filtrations and affine root-count checks."""

__version__ = "0.1.0"

from .degfun import (  # noqa: E402
    NEG_INF,
    MonomialDegree,
    PullbackSemidegree,
    Quasidegree,
    SampleSpec,
    WeightedDegree,
    check_degree_like,
    check_power_law,
    check_semidegree,
    evaluate,
    leading_form,
    minimal_presentation,
    nonredundancy_witness,
)
from .iterate import IteratedSemidegree, evaluate_iterated, primality_check, rees_presentation  # noqa: E402
from .poly import MonomialOrder, Polynomial, parse, variables  # noqa: E402
