"""Exact combinatorics of noncrossing partitions, distinguished permutations,
and the algebras they span.

Thin Python surface over the C++ core.  Permutations travel as comma-form
words ("2,3,1"), diagrams and reports as the same text and JSON the
command-line tool prints, so results here are byte-comparable with the CLI.
"""

from _qsvcore import (
    basis_check,
    classes,
    cycle_form,
    enumerate_ncp,
    enumerate_qsv,
    hasse_dot,
    normal_form,
    palpha,
    palpha_eval,
    palpha_json,
    verify,
)

__all__ = [
    "basis_check",
    "classes",
    "cycle_form",
    "enumerate_ncp",
    "enumerate_qsv",
    "hasse_dot",
    "normal_form",
    "palpha",
    "palpha_eval",
    "palpha_json",
    "verify",
]

__version__ = "1.0.0"
