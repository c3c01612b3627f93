"""The family of layer maps phi_r on the monomial basis.

Adding a layer of r decision nodes below m dangling half-edges acts on
counting polynomials as a linear map phi_r.  On the basis monomial X**m
it takes the closed form

    phi_r[X^m] = P_r(X) * Q_{r,m}(X)

where P_r(X) is the inclusion-exclusion product of the factors
(X^2 - X - i) for i = 0 .. r-1, and Q_{r,m} distributes the half-edges:
its X^j coefficient is binom(m, j) * S2(m - j, r), with j half-edges
passing through and the rest partitioned onto the r new nodes.

A ``PhiTable`` holds these polynomials for every width r and half-edge
count m needed at size bound n.  Two storage shapes exist:

* ``"full"``   -- r up to min(m, n): every entry of the map family;
* ``"banded"`` -- r up to min(m, n + 1 - m): the entries that can still
  influence a size-<= n result once reaching degree m has already cost
  m - 1 nodes.  The distribution engine only ever reads this band, and
  the band is several times smaller at large n.
"""

from __future__ import annotations

from .bigpoly import XPoly, _conv, _strip, mpz
from .combin import build_tables

_MPZ0 = mpz(0)
_MPZ1 = mpz(1)


def _r_bound(n, m, shape):
    if shape == "full":
        return min(m, n)
    return min(m, n + 1 - m)


class PhiTable:
    """Precomputed phi_r[X^m] polynomials for a size bound n.

    Entries are dense coefficient tuples indexed ``(r, m)`` with
    0 <= r <= n and 0 <= m <= n + 1; entries with r > m are identically
    zero and not stored.
    """

    __slots__ = ("n", "shape", "_by_m", "_p_rows")

    def __init__(self, n, shape, by_m, p_rows):
        self.n = n
        self.shape = shape
        self._by_m = by_m
        self._p_rows = p_rows

    def row(self, r, m):
        """Raw coefficient tuple of phi_r[X^m]; () when identically zero."""
        if not 0 <= r <= self.n:
            raise ValueError(f"width r={r} outside table range 0..{self.n}")
        if not 0 <= m <= self.n + 1:
            raise ValueError(f"degree m={m} outside table range 0..{self.n + 1}")
        rows = self._by_m[m]
        if r < len(rows):
            return rows[r]
        if r > m:
            return ()
        raise ValueError(
            f"entry (r={r}, m={m}) is outside the banded table; "
            "build with shape='full' to access it"
        )

    def entry(self, r, m):
        """phi_r[X^m] as an XPoly."""
        return XPoly._raw(self.row(r, m))

    def p_poly(self, r):
        """The inclusion-exclusion factor P_r(X)."""
        if not 0 <= r < len(self._p_rows):
            raise ValueError(f"P_{r} not materialized (have 0..{len(self._p_rows) - 1})")
        return XPoly._raw(self._p_rows[r])

    @property
    def p_polys(self):
        """All materialized P_r, in order."""
        return [XPoly._raw(row) for row in self._p_rows]


def _p_family(r_hi):
    """Coefficient tuples of P_0 .. P_{r_hi} via P_r = P_{r-1} * (X^2 - X - (r-1))."""
    rows = [(_MPZ1,)]
    p = [_MPZ1]
    for r in range(1, r_hi + 1):
        i = mpz(r - 1)
        nxt = [_MPZ0] * (len(p) + 2)
        for d, c in enumerate(p):
            if not c:
                continue
            nxt[d + 2] += c
            nxt[d + 1] -= c
            nxt[d] -= c * i
        p = nxt
        rows.append(tuple(p))
    return rows


def build_phi_table(n, tables=None, shape="full"):
    """Precompute phi_r[X^m] for 0 <= r <= n and 0 <= m <= n + 1.

    ``tables`` may supply prebuilt combinatorial tables covering index n + 1
    (i.e. ``tables.limit >= n``); they are built on the fly otherwise.
    """
    if n < 0:
        raise ValueError("size bound must be non-negative")
    if shape not in ("full", "banded"):
        raise ValueError(f"unknown table shape: {shape!r}")
    if tables is None:
        tables = build_tables(n + 1)
    elif tables.limit < n:
        raise ValueError(f"combinatorial tables cover {tables.limit + 1}, need {n + 1}")

    binom = tables.binom
    stirl = tables.stirling2

    r_hi = 0
    for m in range(n + 2):
        r_hi = max(r_hi, _r_bound(n, m, shape))
    p_rows = _p_family(r_hi)

    by_m = []
    for m in range(n + 2):
        bm = binom[m]
        rows = []
        for r in range(_r_bound(n, m, shape) + 1):
            if r == 0:
                rows.append((_MPZ0,) * m + (_MPZ1,))
                continue
            q = [bm[j] * stirl[m - j][r] for j in range(m - r + 1)]
            rows.append(tuple(_conv(p_rows[r], q)))
        by_m.append(tuple(rows))

    return PhiTable(n, shape, tuple(by_m), tuple(p_rows))


def apply_phi(r, p, table):
    """Apply the width-r layer map to an XPoly by linearity."""
    if not 0 <= r <= table.n:
        raise ValueError(f"width r={r} outside table range 0..{table.n}")
    if p.degree > table.n + 1:
        raise ValueError(f"degree {p.degree} exceeds table range {table.n + 1}")
    if not p:
        return XPoly._raw(())
    out = [_MPZ0] * (p.degree + r + 1)
    for m, pm in enumerate(p.coeffs):
        if not pm or m < r:
            continue
        row = table.row(r, m)
        end = len(row)
        out[:end] = [x + pm * y for x, y in zip(out[:end], row)]
    return XPoly._raw(tuple(_strip(out)))
