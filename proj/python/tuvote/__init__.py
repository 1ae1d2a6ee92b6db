"""Committee selection and Young scores via integer programs solved relaxation-first."""

from ._core import (
    ApprovalProfile,
    ParseError,
    Profile,
    brute_force,
    candidate_interval_axis,
    committee,
    egalitarian,
    generate,
    has_c1p,
    is_totally_unimodular,
    parse_profile,
    run_cli,
    single_crossing_ordering,
    single_peaked_axis,
    young,
    young_bruteforce,
)

__all__ = [
    "ApprovalProfile",
    "ParseError",
    "Profile",
    "brute_force",
    "candidate_interval_axis",
    "committee",
    "egalitarian",
    "generate",
    "has_c1p",
    "is_totally_unimodular",
    "parse_profile",
    "run_cli",
    "single_crossing_ordering",
    "single_peaked_axis",
    "young",
    "young_bruteforce",
]
