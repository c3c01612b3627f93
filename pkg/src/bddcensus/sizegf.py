"""Size-distribution engine for ROBDDs of Boolean functions.

The count of functions by ROBDD size is carried as a generating
polynomial in u (u marks decision nodes) truncated to the requested size
bound n.  One pass of the engine adds a layer: for every half-edge count
m it combines the previous level's polynomials through the layer maps,

    next[m] = sum_r u^r * sum_j phi_r[X^m][j] * prev[j],

starting from level 0 where m half edges can only be wired to the two
constant sinks (2**m ways).  After k passes the entry for m = 1 is the
size distribution of all Boolean functions in k variables.

Two exact prunings keep the iteration polynomial and fast:

* level ell only needs entries m <= 2**(k - ell), since the X-degree can
  at most double per remaining layer on the way back to the root;
* reaching degree m already costs at least m - 1 nodes, so entry m only
  needs its u-coefficients up to degree n + 1 - m (the "band").  The band
  is closed under the update and leaves the final entry (m = 1) intact.
"""

from __future__ import annotations

import multiprocessing
import operator
from dataclasses import dataclass

from .bigpoly import BiPoly, UPoly, _strip, mpz
from .linmap import build_phi_table

_MPZ0 = mpz(0)
_MPZ2 = mpz(2)


def max_size(k):
    """Largest possible ROBDD size over k variables."""
    k = operator.index(k)
    if k < 1:
        raise ValueError("k must be >= 1")
    theta = (k - (k.bit_length() - 1)).bit_length() - 1
    return (1 << (k - theta)) - 3 + (1 << (1 << theta))


class VarphiBasis:
    """Bivariate images of the basis monomials: entries[m] = sum_r u^r * phi_r[X^m]."""

    __slots__ = ("entries", "cap")

    def __init__(self, entries, cap):
        self.entries = tuple(entries)
        self.cap = cap


def build_varphi_basis(table, n, m_max=None):
    """Collect the u-weighted layer maps into one BiPoly per basis monomial.

    Entries cover m = 0 .. m_max (default n + 1).  A wider range lets
    ``next_level`` chains stay exact over many layers, since entry m
    consumes inputs up to X-degree 2m.
    """
    if table.n < n:
        raise ValueError(f"table covers n={table.n}, need n={n}")
    if m_max is None:
        m_max = n + 1
    if table.n + 1 < m_max:
        raise ValueError(f"table covers m={table.n + 1}, need m={m_max}")
    entries = []
    for m in range(m_max + 1):
        terms = [(r, table.entry(r, m)) for r in range(min(m, n) + 1)]
        entries.append(BiPoly.collect(terms, n))
    return VarphiBasis(entries, n)


@dataclass(frozen=True)
class MemoLevel:
    """Per-layer state: one truncated u-polynomial per half-edge count m."""

    level: int
    cap: int
    polys: tuple


def initial_level(n, m_max=None):
    """Level 0: m half edges wired straight to the sinks, 2**m ways.

    ``m_max`` defaults to n + 1.  Chaining ``next_level`` halves the
    covered range roughly once per layer (entry m consumes inputs up to
    X-degree 2m), so start from m_max >= 2**k to keep entry m = 1 alive
    through k layers.
    """
    if n < 0:
        raise ValueError("cap must be non-negative")
    if m_max is None:
        m_max = n + 1
    polys = tuple(UPoly._raw((_MPZ2**m,), n) for m in range(m_max + 1))
    return MemoLevel(0, n, polys)


def next_level(prev, basis):
    """Add one layer: combine prev through the basis, truncating at the cap.

    Only entries whose inputs are fully covered by ``prev`` are produced,
    so every returned polynomial is the exact truncated value; the
    covered range shrinks accordingly.
    """
    if prev.cap != basis.cap:
        raise ValueError(f"cap mismatch: {prev.cap} != {basis.cap}")
    polys = []
    avail = len(prev.polys)
    for ent in basis.entries:
        if ent.x_degree >= avail:
            break
        acc = UPoly._raw((), prev.cap)
        for j, q in enumerate(ent.by_x_degree):
            if not q or not prev.polys[j]:
                continue
            acc = acc + prev.polys[j] * q
        polys.append(acc)
    if not polys:
        raise ValueError("previous level too narrow to add a layer")
    return MemoLevel(prev.level + 1, prev.cap, tuple(polys))


# ---------------------------------------------------------------------------
# Fast banded iteration used by distribution().


def _band_caps(n, m_hi):
    # caps[m] = largest u-degree of entry m that can still matter.
    return [n] + [n + 1 - m for m in range(1, m_hi + 1)]


def _m_bound(k, level, n):
    spare = k - level
    if spare >= (n + 1).bit_length():
        return n + 1
    return min(n + 1, 1 << spare)


def _entry(m, prev, rows_m, cap, avail):
    limit = cap + 1
    acc = [_MPZ0] * limit
    for r in range(min(len(rows_m) - 1, cap) + 1):
        row = rows_m[r]
        room = limit - r
        for j, c in enumerate(row):
            if j >= avail:
                break
            if not c:
                continue
            v = prev[j]
            if not v:
                continue
            t = len(v)
            if t == 1:
                acc[r] += c * v[0]
            else:
                if t > room:
                    t = room
                end = r + t
                acc[r:end] = [a + c * b for a, b in zip(acc[r:end], v)]
    _strip(acc)
    return acc


_FORK_STATE = None


def _entry_batch(ms):
    prev, by_m, caps, avail = _FORK_STATE
    return [(m, _entry(m, prev, by_m[m], caps[m], avail)) for m in ms]


def _advance(prev, by_m, caps, m_hi, threads):
    avail = len(prev)
    if threads > 1 and m_hi >= 16 and "fork" in multiprocessing.get_all_start_methods():
        global _FORK_STATE
        _FORK_STATE = (prev, by_m, caps, avail)
        try:
            chunks = [list(range(i, m_hi + 1, threads)) for i in range(threads)]
            with multiprocessing.get_context("fork").Pool(threads) as pool:
                parts = pool.map(_entry_batch, chunks)
        finally:
            _FORK_STATE = None
        out = [None] * (m_hi + 1)
        for part in parts:
            for m, coeffs in part:
                out[m] = coeffs
        return out
    return [_entry(m, prev, by_m[m], caps[m], avail) for m in range(m_hi + 1)]


def iterate_levels(k, n=None, table=None, threads=1, resume=None):
    """Yield the MemoLevel sequence 0 .. k of the banded iteration.

    ``table`` may be any PhiTable covering the bound (a banded one is
    built when omitted).  ``resume`` restarts from a previously produced
    MemoLevel instead of level 0.
    """
    k = operator.index(k)
    if k < 0:
        raise ValueError("k must be non-negative")
    if n is None:
        n = max_size(k) if k >= 1 else 0
    n = operator.index(n)
    if n < 0:
        raise ValueError("size bound must be non-negative")
    threads = max(1, operator.index(threads))
    if table is None:
        table = build_phi_table(n, shape="banded")
    elif table.n < n:
        raise ValueError(f"table covers n={table.n}, need n={n}")
    by_m = table._by_m
    caps = _band_caps(n, n + 1)

    if resume is None:
        start = 0
        m_hi = _m_bound(k, 0, n)
        prev = [[_MPZ2**m] for m in range(m_hi + 1)]
        yield MemoLevel(0, n, tuple(UPoly._raw(tuple(p), n) for p in prev))
    else:
        if resume.cap != n:
            raise ValueError(f"resume level has cap {resume.cap}, run needs {n}")
        if not 0 <= resume.level <= k:
            raise ValueError(f"resume level {resume.level} outside 0..{k}")
        if len(resume.polys) < _m_bound(k, resume.level, n) + 1:
            raise ValueError("resume level does not cover enough half-edge counts")
        start = resume.level
        prev = [list(p.coeffs) for p in resume.polys]
        yield resume

    for level in range(start + 1, k + 1):
        m_hi = _m_bound(k, level, n)
        prev = _advance(prev, by_m, caps, m_hi, threads)
        yield MemoLevel(level, n, tuple(UPoly._raw(tuple(p), n) for p in prev))


def distribution(k, n=None, table=None, threads=1):
    """Size distribution of Boolean functions in k variables, up to size n.

    The coefficient of u**i in the result is the exact number of
    functions whose ROBDD has i decision nodes, for 0 <= i <= n
    (n defaults to the maximal possible size).
    """
    last = None
    for last in iterate_levels(k, n, table, threads):
        pass
    return last.polys[1]
