"""Exact level sets of the keep-k-of-m interval construction.

Everything exact crosses the boundary as ``int`` or ``fractions.Fraction``;
floats appear only in log-log slopes and chi-square diagnostics.
"""

from ._core import (
    BudgetExceeded,
    Construction,
    Error,
    InvalidParams,
    IoError,
    LevelSet,
    MalformedInput,
    NotAMember,
    SieveCapExceeded,
    SourceExhausted,
    box_count_at_scale,
    equidistribution,
    level_set_from_json,
    nth_prime,
    residues,
    s_sum,
)

__all__ = [
    "BudgetExceeded",
    "Construction",
    "Error",
    "InvalidParams",
    "IoError",
    "LevelSet",
    "MalformedInput",
    "NotAMember",
    "SieveCapExceeded",
    "SourceExhausted",
    "box_count_at_scale",
    "equidistribution",
    "level_set_from_json",
    "nth_prime",
    "residues",
    "s_sum",
]
