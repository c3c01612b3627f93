"""Dense polynomial arithmetic over arbitrary-precision integers.

Three flavours, one per ring the counting engine works in:

* ``XPoly``  -- exact polynomials in X over the integers;
* ``UPoly``  -- polynomials in u truncated to a fixed degree cap;
* ``BiPoly`` -- polynomials in u and X, stored as one UPoly per X-degree.

Coefficients are ``gmpy2.mpz`` when gmpy2 is importable (it is a declared
dependency; GMP is several times faster than plain ``int`` once
coefficients grow past a thousand bits) and fall back to ``int``
otherwise.  Values are immutable after construction and safe to share
across threads.
"""

from __future__ import annotations

try:
    from gmpy2 import mpz
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    mpz = int

_MPZ0 = mpz(0)
_INTEGRAL = (int, type(_MPZ0))


def _strip(coeffs):
    """Drop trailing zeros in place; canonical form has nonzero lead."""
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    del coeffs[n:]
    return coeffs


def _conv(a, b):
    """Full convolution of two coefficient sequences."""
    if not a or not b:
        return []
    out = [_MPZ0] * (len(a) + len(b) - 1)
    if len(b) < len(a):
        a, b = b, a
    for i, c in enumerate(a):
        if not c:
            continue
        end = i + len(b)
        out[i:end] = [x + c * y for x, y in zip(out[i:end], b)]
    return out


class XPoly:
    """Polynomial in X with dense coefficients, index = degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = tuple(_strip([mpz(c) for c in coeffs]))

    @classmethod
    def _raw(cls, coeffs):
        # Internal: wrap an already-normalized tuple of mpz without copying.
        p = cls.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def monomial(cls, degree, coeff=1):
        """The polynomial coeff * X**degree."""
        if degree < 0:
            raise ValueError("degree must be non-negative")
        if not coeff:
            return cls()
        return cls._raw((_MPZ0,) * degree + (mpz(coeff),))

    @property
    def degree(self):
        """Degree of the polynomial, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, XPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"XPoly({[int(c) for c in self.coeffs]})"

    def __neg__(self):
        return XPoly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return XPoly._raw(tuple(_strip(out)))

    def __sub__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, XPoly):
            return XPoly._raw(tuple(_conv(self.coeffs, other.coeffs)))
        if isinstance(other, _INTEGRAL):
            if not other:
                return XPoly._raw(())
            c = mpz(other)
            return XPoly._raw(tuple(x * c for x in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __call__(self, x):
        """Evaluate at an integer point by Horner's scheme."""
        acc = _MPZ0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


class UPoly:
    """Polynomial in u truncated to degree <= cap.

    Arithmetic re-truncates eagerly, so a UPoly never stores more than
    cap + 1 coefficients.  Mixed-cap arithmetic is a usage error and
    raises ValueError.
    """

    __slots__ = ("coeffs", "cap")

    def __init__(self, coeffs, cap):
        if cap < 0:
            raise ValueError("cap must be non-negative")
        vals = [mpz(c) for c in list(coeffs)[: cap + 1]]
        self.coeffs = tuple(_strip(vals))
        self.cap = cap

    @classmethod
    def _raw(cls, coeffs, cap):
        p = cls.__new__(cls)
        p.coeffs = coeffs
        p.cap = cap
        return p

    @classmethod
    def zero(cls, cap):
        return cls((), cap)

    @classmethod
    def constant(cls, value, cap):
        return cls((value,), cap)

    def _check_cap(self, other):
        if self.cap != other.cap:
            raise ValueError(f"cap mismatch: {self.cap} != {other.cap}")

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coefficient(self, i):
        """Coefficient of u**i (zero beyond the stored length)."""
        if i < 0:
            raise ValueError("negative degree")
        if i >= len(self.coeffs):
            return _MPZ0
        return self.coeffs[i]

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.cap == other.cap and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.cap, self.coeffs))

    def __repr__(self):
        return f"UPoly({[int(c) for c in self.coeffs]}, cap={self.cap})"

    def __add__(self, other):
        if not isinstance(other, UPoly):
            return NotImplemented
        self._check_cap(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UPoly._raw(tuple(_strip(out)), self.cap)

    def __sub__(self, other):
        if not isinstance(other, UPoly):
            return NotImplemented
        self._check_cap(other)
        return self + other.scale(-1)

    def __mul__(self, other):
        if isinstance(other, UPoly):
            self._check_cap(other)
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return UPoly._raw((), self.cap)
            limit = self.cap + 1
            out = [_MPZ0] * min(len(a) + len(b) - 1, limit)
            if len(b) < len(a):
                a, b = b, a
            for i, c in enumerate(a):
                if i >= limit:
                    break
                if not c:
                    continue
                end = min(i + len(b), limit)
                out[i:end] = [x + c * y for x, y in zip(out[i:end], b)]
            return UPoly._raw(tuple(_strip(out)), self.cap)
        if isinstance(other, _INTEGRAL):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, c):
        """Multiply every coefficient by the integer c."""
        if not c:
            return UPoly._raw((), self.cap)
        c = mpz(c)
        return UPoly._raw(tuple(x * c for x in self.coeffs), self.cap)

    def shift(self, r):
        """Multiply by u**r, dropping what overflows the cap."""
        if r < 0:
            raise ValueError("shift must be non-negative")
        if not self.coeffs or r > self.cap:
            return UPoly._raw((), self.cap)
        kept = self.coeffs[: self.cap + 1 - r]
        out = (_MPZ0,) * r + kept
        return UPoly._raw(tuple(_strip(list(out))), self.cap)

    def truncated(self, new_cap):
        """The same polynomial in the ring with the smaller cap."""
        if new_cap < 0:
            raise ValueError("cap must be non-negative")
        return UPoly(self.coeffs[: new_cap + 1], new_cap)

    def __call__(self, x):
        acc = _MPZ0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


class BiPoly:
    """Polynomial in u and X: one UPoly per X-degree, all sharing a cap."""

    __slots__ = ("by_x_degree", "cap")

    def __init__(self, by_x_degree, cap):
        polys = []
        for q in by_x_degree:
            if not isinstance(q, UPoly):
                q = UPoly(q, cap)
            elif q.cap != cap:
                raise ValueError(f"cap mismatch: {q.cap} != {cap}")
            polys.append(q)
        while polys and not polys[-1]:
            polys.pop()
        self.by_x_degree = tuple(polys)
        self.cap = cap

    @classmethod
    def collect(cls, terms, cap):
        """Regroup a sum of u**r * p_r(X) terms by X-degree.

        ``terms`` is an iterable of (r, XPoly) pairs; repeated r values
        accumulate.  Terms with r above the cap vanish.
        """
        if cap < 0:
            raise ValueError("cap must be non-negative")
        cols = []
        for r, p in terms:
            if r < 0:
                raise ValueError("u-degree must be non-negative")
            if r > cap:
                continue
            for j, c in enumerate(p.coeffs):
                if not c:
                    continue
                while len(cols) <= j:
                    cols.append([_MPZ0] * (cap + 1))
                cols[j][r] += c
        polys = [UPoly._raw(tuple(_strip(col)), cap) for col in cols]
        return cls(polys, cap)

    @property
    def x_degree(self):
        """Largest X-degree with a nonzero coefficient, -1 if zero."""
        return len(self.by_x_degree) - 1

    def coefficient(self, j):
        """The UPoly multiplying X**j."""
        if j < 0:
            raise ValueError("negative degree")
        if j >= len(self.by_x_degree):
            return UPoly._raw((), self.cap)
        return self.by_x_degree[j]

    def __bool__(self):
        return bool(self.by_x_degree)

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.cap == other.cap and self.by_x_degree == other.by_x_degree
        return NotImplemented

    def __repr__(self):
        return f"BiPoly({list(self.by_x_degree)}, cap={self.cap})"
