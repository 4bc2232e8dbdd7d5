import math

import pytest

from confcoh.f2algebra import (
    DegreeCapExceededError,
    IllDefinedDerivationError,
    NotApplicableError,
    PresentedF2Algebra,
    binom_mod2,
    config_mod2_ring,
    dihedral_mod2_ring,
    split_sq1_homology,
    two_variable_poly_ring,
    unordered_config_ring,
)


# ---------------------------------------------------------------------------
# Binomial coefficients mod 2
# ---------------------------------------------------------------------------


def test_binom_examples():
    assert binom_mod2(4, 2) == 0
    assert binom_mod2(6, 1) == 0  # (m - i, i) for m = 7, i = 1
    assert binom_mod2(1, 1) == 1  # (a - j, j) for a = 2, j = 1
    assert binom_mod2(3, 5) == 0


def test_binom_against_math_comb():
    for n in range(64):
        for k in range(64):
            want = (math.comb(n, k) % 2) if k <= n else 0
            assert binom_mod2(n, k) == want, (n, k)


def test_relation_coefficient_vanishing():
    # exponents killed mod 2 in the two defining relations when m = 4a + 3
    for a in range(0, 6):
        m = 4 * a + 3
        for i in range(0, m // 2 + 1):
            if i % 4 != 0:
                assert binom_mod2(m - i, i) == 0, (m, i)
        for i in range(0, (m + 1) // 2 + 1):
            if i % 4 == 3:
                assert binom_mod2(m + 1 - i, i) == 0, (m, i)


def test_rewritten_relation_coefficients():
    # C(4(a-j)+3, 4j) reduces to C(a-j, j) mod 2
    for a in range(0, 9):
        for j in range(0, a + 1):
            assert binom_mod2(4 * (a - j) + 3, 4 * j) == binom_mod2(a - j, j)


# ---------------------------------------------------------------------------
# Hilbert series
# ---------------------------------------------------------------------------


def test_dihedral_ring_dimensions():
    ring = dihedral_mod2_ring(24)
    for d in range(22):
        assert ring.quotient_dimension(d) == d + 1
    assert ring.quotient_dimension(5) == 6


def test_two_variable_ring_dimensions():
    ring = two_variable_poly_ring(24)
    for d in range(22):
        assert ring.quotient_dimension(d) == d + 1
    assert ring.quotient_dimension(3) == 4


@pytest.mark.parametrize("m", range(2, 9))
@pytest.mark.parametrize("kind", ["B", "F"])
def test_config_ring_dimension_pattern(kind, m):
    ring = config_mod2_ring(kind, m)
    for d in range(2 * m + 3):
        if d <= m - 1:
            want = d + 1
        elif d <= 2 * m - 1:
            want = 2 * m - d
        else:
            want = 0
        assert ring.quotient_dimension(d) == want, (kind, m, d)


def test_unordered_p4_degree_6():
    assert unordered_config_ring(4).quotient_dimension(6) == 2


def test_degree_cap():
    ring = unordered_config_ring(3)
    with pytest.raises(DegreeCapExceededError):
        ring.quotient_dimension(9)  # cap is 2m + 2 = 8


def test_basis_deterministic():
    a = unordered_config_ring(5)
    b = unordered_config_ring(5)
    for d in range(11):
        assert a.degree_basis(d).basis_monomials == b.degree_basis(d).basis_monomials


def test_basis_x_exponent_at_most_one():
    ring = unordered_config_ring(7)
    for d in range(15):
        for mono in ring.degree_basis(d).basis_monomials:
            assert mono[0] <= 1


# ---------------------------------------------------------------------------
# Sq1
# ---------------------------------------------------------------------------


def test_sq1_on_free_two_variable_ring():
    ring = two_variable_poly_ring(10)
    basis1 = ring.degree_basis(1).basis_monomials
    assert basis1 == ((1, 0), (0, 1))
    cols = ring.sq1_matrix(1)
    basis2 = ring.degree_basis(2).basis_monomials
    # x1 -> x1^2 and y1 -> y1^2, read off in basis coordinates
    assert cols[0] == 1 << basis2.index((2, 0))
    assert cols[1] == 1 << basis2.index((0, 2))


def test_sq1_parity_rule_on_unordered_ring():
    # Sq1(x^i x1^i1 x2^i2) is zero for even i+i1+i2 and bumps the middle
    # exponent for odd totals.
    ring = config_mod2_ring("B", 5)
    for d in range(2, 10):
        basis = ring.degree_basis(d).basis_monomials
        cols = ring.sq1_matrix(d)
        for mono, col in zip(basis, cols):
            i, i1, i2 = mono
            if (i + i1 + i2) % 2 == 0:
                assert col == 0, mono
            else:
                bumped = (i, i1 + 1, i2)
                want = ring.coords(frozenset({bumped}), d + 1)
                assert col == want, mono


def test_sq1_squares_to_zero_everywhere():
    rings = [
        dihedral_mod2_ring(14),
        two_variable_poly_ring(14),
        config_mod2_ring("B", 4),
        config_mod2_ring("F", 4),
        config_mod2_ring("B", 7),
        config_mod2_ring("F", 7),
    ]
    for ring in rings:
        top = ring.degree_cap - 2
        for d in range(min(top, 12)):
            assert ring.sq1_square_is_zero(d), (ring.generators, d)


def test_ill_defined_derivation_detected():
    # relation b = 0 with Sq1 b = a^3 not in the ideal
    ring = PresentedF2Algebra(
        [("a", 1), ("b", 2)],
        [frozenset({(0, 1)})],
        {0: frozenset({(2, 0)}), 1: frozenset({(3, 0)})},
        degree_cap=8,
    )
    with pytest.raises(IllDefinedDerivationError):
        ring.sq1_matrix(2)


def test_sq1_homology_examples():
    assert config_mod2_ring("B", 3).sq1_homology_rank(4) == 1
    assert config_mod2_ring("B", 5).sq1_homology_rank(4) == 1
    one_var = PresentedF2Algebra(
        [("x1", 1)], [], {0: frozenset({(2,)})}, degree_cap=8
    )
    assert one_var.sq1_homology_rank(0) == 1
    for d in range(1, 6):
        assert one_var.sq1_homology_rank(d) == 0


# ---------------------------------------------------------------------------
# R / x*R splitting
# ---------------------------------------------------------------------------


def test_split_examples():
    assert split_sq1_homology(3, 4) == (1, 0)
    assert split_sq1_homology(3, 0) == (1, 0)
    assert split_sq1_homology(7, 8) == (1, 0)


def test_split_requires_3_mod_4():
    with pytest.raises(NotApplicableError):
        split_sq1_homology(5, 4)


@pytest.mark.parametrize("m", [3, 7])
def test_split_sums_to_total(m):
    ring = config_mod2_ring("B", m)
    for d in range(2 * m + 1):
        r, xr = split_sq1_homology(m, d)
        assert r + xr == ring.sq1_homology_rank(d), (m, d)
