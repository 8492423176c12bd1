"""Lifted set-cover distributions, exact oracles, learners and the distinguisher.

Points are strings of ell-bit blocks joined by '.', e.g. "110.011".
DNFs use the text form accepted by the command line tool.
Exact rationals come back as fractions.Fraction.
"""

from ._core import (
    MonoliftError,
    SetCoverInstance,
    dist,
    evaluate,
    exact_sampler_pmf,
    falsify,
    greedy_cover,
    is_cover,
    label,
    learn,
    load_instance,
    normalize_dnf,
    opt_exact,
    planted_instance,
    pmf,
    random_instance,
    reduce,
    sample,
    suite,
    support_size,
    verify,
)

__all__ = [
    "MonoliftError",
    "SetCoverInstance",
    "dist",
    "evaluate",
    "exact_sampler_pmf",
    "falsify",
    "greedy_cover",
    "is_cover",
    "label",
    "learn",
    "load_instance",
    "normalize_dnf",
    "opt_exact",
    "planted_instance",
    "pmf",
    "random_instance",
    "reduce",
    "sample",
    "suite",
    "support_size",
    "verify",
]
