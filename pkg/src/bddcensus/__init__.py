"""Exact enumeration of Boolean functions by the size of their ROBDD.

The package computes, for k Boolean variables, how many functions have a
reduced ordered binary decision diagram with exactly i decision nodes,
for every i up to a bound n.  The engine works with exact big-integer
polynomial arithmetic throughout; a brute-force enumerator over all truth
tables provides independent ground truth for k <= 4.
"""

from .bigpoly import BiPoly, UPoly, XPoly
from .combin import CombinTables, build_tables
from .linmap import PhiTable, apply_phi, build_phi_table
from .oracle import Census, Robdd, TruthTable, build_robdd, census
from .profilecount import count_multientry, count_robdds_with_profile
from .sizegf import (
    MemoLevel,
    VarphiBasis,
    build_varphi_basis,
    distribution,
    initial_level,
    iterate_levels,
    max_size,
    next_level,
)

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "Census",
    "CombinTables",
    "MemoLevel",
    "PhiTable",
    "Robdd",
    "TruthTable",
    "UPoly",
    "VarphiBasis",
    "XPoly",
    "apply_phi",
    "build_phi_table",
    "build_robdd",
    "build_tables",
    "build_varphi_basis",
    "census",
    "count_multientry",
    "count_robdds_with_profile",
    "distribution",
    "initial_level",
    "iterate_levels",
    "max_size",
    "next_level",
]
