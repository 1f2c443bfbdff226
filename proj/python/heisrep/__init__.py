"""Exact-arithmetic representations of the additive and Heisenberg groups."""

from ._core import (
    FieldError,
    HypothesisError,
    IoError,
    Rep,
    coalg,
    construct,
    expform,
    factor,
    lucas_binomial,
    rep_from_json,
    search,
)

__all__ = [
    "FieldError",
    "HypothesisError",
    "IoError",
    "Rep",
    "coalg",
    "construct",
    "expform",
    "factor",
    "lucas_binomial",
    "rep_from_json",
    "search",
]
