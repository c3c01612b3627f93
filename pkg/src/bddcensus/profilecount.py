"""Counting ROBDDs and multientry ROBDDs with a prescribed profile.

A profile <p_1, ..., p_k> fixes how many decision nodes carry each
variable.  The count is obtained by chaining the layer maps phi_{p_1},
..., phi_{p_k} over the start monomial X**m (m = number of incoming half
edges) and evaluating the resulting polynomial at X = 2, the two constant
sinks.  Impossible profiles come out as zero algebraically, with no
special-casing.
"""

from __future__ import annotations

import operator

from .bigpoly import XPoly
from .linmap import apply_phi, build_phi_table


def normalize_profile(profile):
    """Validate and freeze a profile into a tuple of non-negative ints."""
    widths = tuple(operator.index(w) for w in profile)
    if any(w < 0 for w in widths):
        raise ValueError(f"profile entries must be non-negative: {widths}")
    return widths


def _table_for(widths, m):
    # Chain degrees peak at m + sum(widths); widths themselves stay below.
    return build_phi_table(m + sum(widths), shape="full")


def count_multientry(profile, m, table=None):
    """Number of multientry ROBDDs with the given profile and m half edges."""
    widths = normalize_profile(profile)
    m = operator.index(m)
    if m < 0:
        raise ValueError("half-edge count must be non-negative")
    if table is None:
        table = _table_for(widths, m)
    else:
        need = max(max(widths, default=0), m + sum(widths) - 1, 0)
        if table.n < need:
            raise ValueError(f"table covers n={table.n}, profile needs n>={need}")
    poly = XPoly.monomial(m)
    for r in widths:
        poly = apply_phi(r, poly, table)
    return poly(2)


def count_robdds_with_profile(profile, table=None):
    """Number of (single-root) ROBDDs whose profile is exactly the one given."""
    return count_multientry(profile, 1, table)
