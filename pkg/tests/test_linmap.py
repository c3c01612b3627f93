import random

import pytest

from bddcensus.bigpoly import XPoly
from bddcensus.combin import build_tables
from bddcensus.linmap import apply_phi, build_phi_table


def rand_xpoly(rng, max_deg, max_coeff=9):
    return XPoly([rng.randint(-max_coeff, max_coeff) for _ in range(rng.randint(0, max_deg + 1))])


def test_basis_images_known_values(phi12):
    assert phi12.entry(1, 1) == XPoly([0, -1, 1])            # X^2 - X
    assert phi12.entry(2, 2) == XPoly([0, 1, 0, -2, 1])      # X^4 - 2X^3 + X
    assert phi12.entry(0, 5) == XPoly.monomial(5)


def test_identity_map_on_basis(phi12):
    for m in range(14):
        assert phi12.entry(0, m) == XPoly.monomial(m)


def test_entries_vanish_above_diagonal(phi12):
    for m in range(10):
        for r in range(m + 1, 13):
            assert not phi12.entry(r, m)


def test_entry_degrees(phi12):
    for m in range(13):
        for r in range(m + 1):
            assert phi12.entry(r, m).degree == r + m


def test_p_factor_recurrence(phi12):
    step = XPoly([0, -1, 1])  # X^2 - X, shifted by -i below
    assert phi12.p_poly(0) == XPoly([1])
    for r in range(1, 13):
        factor = step - XPoly([r - 1])
        assert phi12.p_poly(r) == phi12.p_poly(r - 1) * factor


def test_apply_phi_running_example(phi12):
    p = XPoly([0, 1])
    p = apply_phi(1, p, phi12)
    assert p == XPoly([0, -1, 1])
    p = apply_phi(2, p, phi12)
    assert p == XPoly([0, 1, 0, -2, 1])
    p = apply_phi(4, p, phi12)
    assert p == XPoly([0, 6, 5, -16, -6, 14, 0, -4, 1])
    p = apply_phi(2, p, phi12)
    assert p == XPoly([0, 0, 6, -8, -12, 92, 76, -112, -98, 28, 28])


def test_apply_phi_zero_width_is_identity(phi12):
    rng = random.Random(23)
    for _ in range(50):
        p = rand_xpoly(rng, 13)
        assert apply_phi(0, p, phi12) == p


def test_apply_phi_linearity(phi12):
    rng = random.Random(29)
    for _ in range(100):
        r = rng.randint(0, 6)
        p, q = rand_xpoly(rng, 10), rand_xpoly(rng, 10)
        a, b = rng.randint(-4, 4), rng.randint(-4, 4)
        left = apply_phi(r, a * p + b * q, phi12)
        right = a * apply_phi(r, p, phi12) + b * apply_phi(r, q, phi12)
        assert left == right


def test_basis_images_count_nonnegatively_at_two(phi12):
    for m in range(13):
        for r in range(m + 1):
            assert phi12.entry(r, m)(2) >= 0


def test_apply_phi_range_errors(phi12):
    with pytest.raises(ValueError):
        apply_phi(13, XPoly([0, 1]), phi12)
    with pytest.raises(ValueError):
        apply_phi(-1, XPoly([0, 1]), phi12)
    with pytest.raises(ValueError):
        apply_phi(1, XPoly.monomial(14), phi12)


def test_build_accepts_prebuilt_tables():
    tables = build_tables(7)
    t = build_phi_table(6, tables=tables)
    assert t.entry(1, 1) == XPoly([0, -1, 1])
    with pytest.raises(ValueError):
        build_phi_table(8, tables=tables)


def test_banded_shape_covers_the_band_and_refuses_outside():
    n = 9
    full = build_phi_table(n, shape="full")
    banded = build_phi_table(n, shape="banded")
    for m in range(n + 2):
        for r in range(min(m, n + 1 - m) + 1):
            assert banded.row(r, m) == full.row(r, m)
    with pytest.raises(ValueError, match="banded"):
        banded.row(7, 8)
    # Above the diagonal it is still identically zero, band or not.
    assert banded.entry(9, 2) == XPoly()


def test_build_rejects_bad_arguments():
    with pytest.raises(ValueError):
        build_phi_table(-1)
    with pytest.raises(ValueError):
        build_phi_table(3, shape="sparse")
