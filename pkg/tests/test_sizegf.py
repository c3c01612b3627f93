import os
import random

import pytest

from bddcensus.bigpoly import UPoly, XPoly
from bddcensus.linmap import build_phi_table
from bddcensus.sizegf import (
    MemoLevel,
    build_varphi_basis,
    distribution,
    initial_level,
    iterate_levels,
    max_size,
    next_level,
)

GOLDEN = {
    1: [2, 2],
    2: [2, 4, 8, 2],
    3: [2, 6, 24, 62, 88, 74],
    4: [2, 8, 48, 236, 960, 3248, 8928, 17666, 23280, 11160],
}


def run_full_chain(k, n):
    """Iterate the contract-level update k times; no banded shortcuts.

    Starts wide enough (m up to 2**k) that the exactness pyramid still
    covers the root entry m = 1 after k layers.
    """
    width = max(n + 1, 1 << k)
    table = build_phi_table(max(n, width - 1), shape="full")
    basis = build_varphi_basis(table, n, m_max=width)
    level = initial_level(n, m_max=width)
    for _ in range(k):
        level = next_level(level, basis)
    return level.polys[1]


# ---------------------------------------------------------------------------
# max_size


def test_max_size_sequence():
    want = [1, 3, 5, 9, 17, 29, 45, 77, 141, 269, 509, 765, 1277]
    assert [max_size(k) for k in range(1, 14)] == want


def test_max_size_rejects_nonpositive():
    with pytest.raises(ValueError):
        max_size(0)
    with pytest.raises(ValueError):
        max_size(-3)


# ---------------------------------------------------------------------------
# basis


def test_basis_entry_one(phi12):
    basis = build_varphi_basis(phi12, 4)
    ent = basis.entries[1]  # u*(X^2 - X) + X  ->  {X^2: u, X: 1 - u}
    assert ent.coefficient(2) == UPoly([0, 1], 4)
    assert ent.coefficient(1) == UPoly([1, -1], 4)


def test_basis_entry_zero_is_constant_one(phi12):
    basis = build_varphi_basis(phi12, 4)
    ent = basis.entries[0]
    assert ent.coefficient(0) == UPoly([1], 4)
    assert ent.x_degree == 0


def test_basis_identity_term(phi12):
    basis = build_varphi_basis(phi12, 5)
    for m in range(7):
        # u^0 part of entries[m] is the untouched monomial X^m.
        for j in range(m + 1):
            want = 1 if j == m else 0
            assert basis.entries[m].coefficient(j).coefficient(0) == want


def test_basis_degree_bounds(phi12):
    n = 6
    basis = build_varphi_basis(phi12, n)
    for m, ent in enumerate(basis.entries):
        assert ent.x_degree <= 2 * m
        for q in ent.by_x_degree:
            assert q.degree <= min(m, n)


# ---------------------------------------------------------------------------
# level iteration (contract form)


def test_initial_level_powers_of_two():
    lvl = initial_level(5)
    assert lvl.level == 0
    assert [p.coefficient(0) for p in lvl.polys] == [2**m for m in range(7)]


def test_next_level_reproduces_small_distributions(phi12):
    basis = build_varphi_basis(phi12, 3)
    lvl1 = next_level(initial_level(3), basis)
    assert lvl1.polys[1] == UPoly([2, 2], 3)
    lvl2 = next_level(lvl1, basis)
    assert lvl2.polys[1] == UPoly([2, 4, 8, 2], 3)


def test_next_level_truncates_at_cap(phi12):
    basis = build_varphi_basis(phi12, 3)
    lvl2 = next_level(next_level(initial_level(3, m_max=8), basis), basis)
    # Untruncated this entry would carry 74 u^4; the cap drops it.
    assert lvl2.polys[2] == UPoly([4, 20, 68, 90], 3)


def test_next_level_covers_only_backed_entries(phi12):
    # Entry m consumes previous entries up to X-degree 2m, so the covered
    # range halves per layer instead of emitting silently wrong values.
    basis = build_varphi_basis(phi12, 3)
    lvl1 = next_level(initial_level(3), basis)  # default coverage m <= 4
    assert len(lvl1.polys) == 3  # m = 2 needs j <= 4, m = 3 would need j <= 6
    narrow = next_level(MemoLevel(0, 3, initial_level(3).polys[:1]), basis)
    assert len(narrow.polys) == 1  # only the void-function entry survives
    with pytest.raises(ValueError):
        next_level(MemoLevel(0, 3, ()), basis)


def test_full_chain_matches_goldens():
    for k, coeffs in GOLDEN.items():
        n = max_size(k)
        assert run_full_chain(k, n) == UPoly(coeffs, n)


# ---------------------------------------------------------------------------
# distribution


def test_distribution_goldens(phi12):
    for k, coeffs in GOLDEN.items():
        n = max_size(k)
        assert distribution(k, n, table=phi12) == UPoly(coeffs, n)


def test_distribution_truncated_golden(phi12):
    assert distribution(3, 3, table=phi12) == UPoly([2, 6, 24, 62], 3)


def test_distribution_k0():
    assert distribution(0, 0) == UPoly([2], 0)


def test_distribution_defaults_to_max_size():
    d = distribution(2)
    assert d.cap == 3
    assert d == UPoly([2, 4, 8, 2], 3)


def test_distribution_matches_contract_chain_small():
    # The banded fast path and the contract-level chain agree exactly.
    for k in range(7):
        n = max_size(k) if k >= 1 else 0
        assert distribution(k, n) == run_full_chain(k, n)


def test_truncation_prefix_property():
    rng = random.Random(43)
    for _ in range(12):
        k = rng.randint(1, 6)
        n2 = rng.randint(1, max_size(k))
        n1 = rng.randint(0, n2 - 1)
        wide = distribution(k, n2)
        narrow = distribution(k, n1)
        for i in range(n1 + 1):
            assert wide.coefficient(i) == narrow.coefficient(i)


def test_mass_conservation_small():
    for k in range(1, 7):
        d = distribution(k)
        assert d(1) == 2 ** (2**k)


def test_vanishing_beyond_max_size():
    for k in (2, 3, 4):
        mk = max_size(k)
        d = distribution(k, mk + 5)
        assert d.coefficient(mk) != 0
        assert d.degree == mk


def test_small_coefficient_law():
    for k in range(1, 7):
        d = distribution(k)
        assert d.coefficient(0) == 2
        assert d.coefficient(1) == 2 * k


def test_determinism_across_thread_counts():
    cpus = os.cpu_count() or 1
    runs = [distribution(6, threads=t) for t in (1, 2, max(1, cpus))]
    assert runs[0] == runs[1] == runs[2]


def test_iterate_levels_resume_roundtrip():
    k, n = 5, max_size(5)
    levels = list(iterate_levels(k, n))
    assert [lvl.level for lvl in levels] == list(range(k + 1))
    resumed = list(iterate_levels(k, n, resume=levels[2]))
    assert [lvl.level for lvl in resumed] == [2, 3, 4, 5]
    assert resumed[-1].polys[1] == levels[-1].polys[1]


def test_iterate_levels_resume_validation():
    levels = list(iterate_levels(4, 9))
    with pytest.raises(ValueError):
        list(iterate_levels(4, 8, resume=levels[1]))
    clipped = MemoLevel(1, 9, levels[1].polys[:2])
    with pytest.raises(ValueError):
        list(iterate_levels(4, 9, resume=clipped))


def test_distribution_input_validation(phi12):
    with pytest.raises(ValueError):
        distribution(-1, 3)
    with pytest.raises(ValueError):
        distribution(2, -1)
    with pytest.raises(ValueError):
        distribution(5, 13, table=phi12)  # table covers 12 only
