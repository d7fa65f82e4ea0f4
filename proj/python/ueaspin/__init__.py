"""Exact multipoles of U(so(3)) and the spin algebras."""

import json

from ._core import (
    ParseError,
    UsageError,
    decompose,
    multipole,
    multipole_rank,
    multipole_table,
    normal_form,
    oracle_max_deviation,
    spin_dimension,
    spin_table,
    verify,
)

__all__ = [
    "ParseError",
    "UsageError",
    "decompose",
    "multipole",
    "multipole_rank",
    "multipole_table",
    "multipole_table_data",
    "normal_form",
    "oracle_max_deviation",
    "spin_dimension",
    "spin_table",
    "spin_table_data",
    "verify",
]


def multipole_table_data(k_max):
    return json.loads(multipole_table(k_max, "json"))


def spin_table_data(two_s):
    return json.loads(spin_table(two_s, "json"))
