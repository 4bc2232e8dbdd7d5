"""Degreewise linear algebra for finitely presented graded F2-algebras.

A presentation is a list of generators with degrees and a list of
homogeneous relation polynomials.  Each graded piece of the quotient is
computed by enumerating the free monomials of that degree, spanning all
monomial multiples of the relations, and running dense bitset Gaussian
elimination.  On top of that sits the degree-raising derivation Sq1
(squaring on degree-1 generators, extended by the Leibniz rule) and its
homology, the first page of the mod-2 Bockstein tower.

Monomials are exponent tuples ordered lexicographically descending, so
bases and matrices are reproducible run to run.  With the relation
x^2 = x*x1 declared on the leading generator this order also guarantees
that basis monomials carry x-exponent at most 1, which is what the
R / x*R splitting below relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

Monomial = tuple[int, ...]
Poly = frozenset  # frozenset[Monomial] over F2


class DegreeCapExceededError(ValueError):
    """Requested degree above the configured cap of the presentation."""


class IllDefinedDerivationError(ValueError):
    """Sq1 of a relation is not in the ideal: no induced derivation."""


class NotApplicableError(ValueError):
    """Operation not defined for these parameters."""


def binom_mod2(n: int, k: int) -> int:
    """C(n, k) mod 2 by the bitwise rule (Lucas at p = 2)."""
    if k < 0 or k > n:
        return 0
    return 1 if (k & (n - k)) == 0 else 0


# ---------------------------------------------------------------------------
# GF(2) row reduction on int bitsets
# ---------------------------------------------------------------------------


class F2Echelon:
    """Reduced row echelon basis over GF(2); rows are int bitmasks.

    The pivot of a row is its lowest set bit, and every row is zero on the
    pivots of all other rows, so reduce() yields canonical coordinates.
    """

    def __init__(self) -> None:
        self.rows: dict[int, int] = {}

    @staticmethod
    def _lsb(v: int) -> int:
        return (v & -v).bit_length() - 1

    def reduce(self, v: int) -> int:
        for p, row in self.rows.items():
            if (v >> p) & 1:
                v ^= row
        return v

    def add(self, v: int) -> bool:
        """Insert v; returns True if it enlarged the span."""
        v = self.reduce(v)
        if v == 0:
            return False
        p = self._lsb(v)
        for q, row in list(self.rows.items()):
            if (row >> p) & 1:
                self.rows[q] = row ^ v
        self.rows[p] = v
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> set[int]:
        return set(self.rows)


def f2_rank(columns: list[int]) -> int:
    ech = F2Echelon()
    for c in columns:
        ech.add(c)
    return ech.rank


# ---------------------------------------------------------------------------
# Presented algebras
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DegreeBasis:
    """Ordered monomial basis of one graded piece of the quotient."""

    degree: int
    basis_monomials: tuple[Monomial, ...]
    index: dict  # Monomial -> position in basis_monomials

    def __len__(self) -> int:
        return len(self.basis_monomials)


class PresentedF2Algebra:
    def __init__(
        self,
        generators: list[tuple[str, int]],
        relations: list[Poly],
        sq1_on_generators: dict[int, Poly] | None = None,
        degree_cap: int = 40,
    ) -> None:
        self.generators = tuple(generators)
        self.degrees = tuple(d for _, d in generators)
        if any(d < 1 for d in self.degrees):
            raise ValueError("generator degrees must be >= 1")
        self.relations = tuple(frozenset(r) for r in relations)
        for r in self.relations:
            if not r:
                raise ValueError("zero relation")
            degs = {self.monomial_degree(m) for m in r}
            if len(degs) != 1:
                raise ValueError(f"relation {set(r)} is not homogeneous")
        self.sq1_on_generators = dict(sq1_on_generators or {})
        for g, poly in self.sq1_on_generators.items():
            want = self.degrees[g] + 1
            if any(self.monomial_degree(m) != want for m in poly):
                raise ValueError("Sq1 image of a generator has the wrong degree")
        self.degree_cap = degree_cap
        self._sq1_checked_through = -1
        self._monomials_cache: dict[int, list[Monomial]] = {}
        self._mono_index_cache: dict[int, dict[Monomial, int]] = {}
        self._rel_ech_cache: dict[int, F2Echelon] = {}
        self._basis_cache: dict[int, DegreeBasis] = {}
        self._sq1_matrix_cache: dict[int, list[int]] = {}

    # -- monomial bookkeeping ---------------------------------------------

    def monomial_degree(self, mono: Monomial) -> int:
        return sum(e * d for e, d in zip(mono, self.degrees))

    def monomials(self, d: int) -> list[Monomial]:
        """All free monomials of degree d, lexicographically descending."""
        if d in self._monomials_cache:
            return self._monomials_cache[d]
        out: list[Monomial] = []
        n = len(self.degrees)

        def rec(pos: int, remaining: int, acc: list[int]) -> None:
            if pos == n:
                if remaining == 0:
                    out.append(tuple(acc))
                return
            step = self.degrees[pos]
            for e in range(remaining // step, -1, -1):
                acc.append(e)
                rec(pos + 1, remaining - e * step, acc)
                acc.pop()

        rec(0, d, [])
        self._monomials_cache[d] = out
        self._mono_index_cache[d] = {m: i for i, m in enumerate(out)}
        return out

    def _index(self, d: int) -> dict[Monomial, int]:
        self.monomials(d)
        return self._mono_index_cache[d]

    def poly_to_bits(self, poly, d: int) -> int:
        idx = self._index(d)
        bits = 0
        for mono in poly:
            bits ^= 1 << idx[mono]
        return bits

    def bits_to_poly(self, bits: int, d: int) -> Poly:
        monos = self.monomials(d)
        out = set()
        i = 0
        while bits:
            if bits & 1:
                out.add(monos[i])
            bits >>= 1
            i += 1
        return frozenset(out)

    @staticmethod
    def mono_mul(a: Monomial, b: Monomial) -> Monomial:
        return tuple(x + y for x, y in zip(a, b))

    def poly_mul_mono(self, poly: Poly, mono: Monomial) -> Poly:
        return frozenset(self.mono_mul(m, mono) for m in poly)

    # -- relation spans and quotient bases ----------------------------------

    def relation_echelon(self, d: int) -> F2Echelon:
        """Echelon basis of the degree-d piece of the relation ideal."""
        if d in self._rel_ech_cache:
            return self._rel_ech_cache[d]
        ech = F2Echelon()
        for rel in self.relations:
            e = self.monomial_degree(next(iter(rel)))
            if e > d:
                continue
            for u in self.monomials(d - e):
                ech.add(self.poly_to_bits(self.poly_mul_mono(rel, u), d))
        self._rel_ech_cache[d] = ech
        return ech

    def quotient_dimension(self, d: int) -> int:
        if d < 0:
            return 0
        if d > self.degree_cap:
            raise DegreeCapExceededError(f"degree {d} exceeds cap {self.degree_cap}")
        return len(self.monomials(d)) - self.relation_echelon(d).rank

    def degree_basis(self, d: int) -> DegreeBasis:
        if d in self._basis_cache:
            return self._basis_cache[d]
        if d > self.degree_cap:
            raise DegreeCapExceededError(f"degree {d} exceeds cap {self.degree_cap}")
        monos = self.monomials(d)
        pivots = self.relation_echelon(d).pivots()
        basis = tuple(m for i, m in enumerate(monos) if i not in pivots)
        db = DegreeBasis(d, basis, {m: i for i, m in enumerate(basis)})
        self._basis_cache[d] = db
        return db

    def coords(self, poly, d: int) -> int:
        """Coordinates of a degree-d polynomial in the quotient basis, as bits."""
        reduced = self.relation_echelon(d).reduce(self.poly_to_bits(poly, d))
        basis = self.degree_basis(d)
        monos = self.monomials(d)
        out = 0
        i = 0
        v = reduced
        while v:
            if v & 1:
                out ^= 1 << basis.index[monos[i]]
            v >>= 1
            i += 1
        return out

    # -- Sq1 -----------------------------------------------------------------

    def sq1_free(self, mono: Monomial) -> Poly:
        """Leibniz expansion of Sq1 on a free monomial (char 2)."""
        out: set[Monomial] = set()
        for i, e in enumerate(mono):
            if e % 2 == 0:
                continue
            image = self.sq1_on_generators.get(i)
            if not image:
                continue
            lowered = mono[:i] + (e - 1,) + mono[i + 1 :]
            for im in image:
                out ^= {self.mono_mul(lowered, im)}
        return frozenset(out)

    def sq1_poly_free(self, poly: Poly) -> Poly:
        out: set[Monomial] = set()
        for mono in poly:
            out ^= set(self.sq1_free(mono))
        return frozenset(out)

    def check_sq1_well_defined(self, through_degree: int) -> None:
        """Verify Sq1(relation) lies in the ideal degreewise, up to a bound."""
        if not self.sq1_on_generators:
            raise IllDefinedDerivationError("no Sq1 declared on generators")
        if through_degree <= self._sq1_checked_through:
            return
        for rel in self.relations:
            target = self.monomial_degree(next(iter(rel))) + 1
            if target > through_degree or target > self.degree_cap:
                continue
            image = self.sq1_poly_free(rel)
            if not image:
                continue
            if not self.relation_echelon(target).contains(
                self.poly_to_bits(image, target)
            ):
                raise IllDefinedDerivationError(
                    f"Sq1 of relation {set(rel)} is not in the ideal"
                )
        self._sq1_checked_through = through_degree

    def sq1_matrix(self, d: int) -> list[int]:
        """Matrix of Sq1 from the degree-d basis to the degree-(d+1) basis.

        Returned as one bit-column per degree-d basis monomial, bits indexed
        by the degree-(d+1) basis.
        """
        if d in self._sq1_matrix_cache:
            return self._sq1_matrix_cache[d]
        if d + 1 > self.degree_cap:
            raise DegreeCapExceededError(f"degree {d + 1} exceeds cap {self.degree_cap}")
        self.check_sq1_well_defined(d + 1)
        cols = [
            self.coords(self.sq1_free(mono), d + 1)
            for mono in self.degree_basis(d).basis_monomials
        ]
        self._sq1_matrix_cache[d] = cols
        return cols

    def sq1_homology_rank(self, d: int) -> int:
        """dim ker(Sq1 at d) - rank(Sq1 at d-1)."""
        if d < 0:
            return 0
        dim_d = self.quotient_dimension(d)
        rank_out = f2_rank(self.sq1_matrix(d)) if dim_d else 0
        rank_in = 0
        if d >= 1 and self.quotient_dimension(d - 1):
            rank_in = f2_rank(self.sq1_matrix(d - 1))
        return dim_d - rank_out - rank_in

    def sq1_square_is_zero(self, d: int) -> bool:
        """Check Sq1(d+1) . Sq1(d) = 0 on the computed bases."""
        first = self.sq1_matrix(d)
        second = self.sq1_matrix(d + 1)
        for col in first:
            acc = 0
            i = 0
            v = col
            while v:
                if v & 1:
                    acc ^= second[i]
                v >>= 1
                i += 1
            if acc:
                return False
        return True


# ---------------------------------------------------------------------------
# The concrete presentations used by the configuration-space computations
# ---------------------------------------------------------------------------


def dihedral_mod2_ring(degree_cap: int = 40) -> PresentedF2Algebra:
    """F2[x, x1, x2] / (x^2 + x*x1): the mod-2 cohomology of the dihedral
    group of order 8, with Sq1 x = x^2, Sq1 x1 = x1^2, Sq1 x2 = x1*x2."""
    rel = frozenset({(2, 0, 0), (1, 1, 0)})
    sq1 = {
        0: frozenset({(2, 0, 0)}),
        1: frozenset({(0, 2, 0)}),
        2: frozenset({(0, 1, 1)}),
    }
    return PresentedF2Algebra(
        [("x", 1), ("x1", 1), ("x2", 2)], [rel], sq1, degree_cap
    )


def unordered_config_ring(m: int, degree_cap: int | None = None) -> PresentedF2Algebra:
    """Mod-2 cohomology ring of the unordered two-point configuration space
    of P^m: F2[x, x1, x2] modulo

        x^2 + x*x1,
        sum_{0 <= i <= m/2}   C(m-i, i)   x1^(m-2i)   x2^i,
        sum_{0 <= i <= (m+1)/2} C(m+1-i, i) x1^(m+1-2i) x2^i.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if degree_cap is None:
        degree_cap = 2 * m + 2
    rel1 = frozenset({(2, 0, 0), (1, 1, 0)})

    def dual_class_relation(n: int) -> Poly:
        monos = set()
        for i in range(0, n // 2 + 1):
            if binom_mod2(n - i, i):
                monos.add((0, n - 2 * i, i))
        return frozenset(monos)

    sq1 = {
        0: frozenset({(2, 0, 0)}),
        1: frozenset({(0, 2, 0)}),
        2: frozenset({(0, 1, 1)}),
    }
    return PresentedF2Algebra(
        [("x", 1), ("x1", 1), ("x2", 2)],
        [rel1, dual_class_relation(m), dual_class_relation(m + 1)],
        sq1,
        degree_cap,
    )


def ordered_config_ring(m: int, degree_cap: int | None = None) -> PresentedF2Algebra:
    """Mod-2 cohomology ring of the ordered two-point configuration space of
    P^m: F2[x1, y1] / (x1^(m+1), y1^(m+1), sum_{i+j=m} x1^i y1^j)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if degree_cap is None:
        degree_cap = 2 * m + 2
    rels = [
        frozenset({(m + 1, 0)}),
        frozenset({(0, m + 1)}),
        frozenset({(i, m - i) for i in range(m + 1)}),
    ]
    sq1 = {0: frozenset({(2, 0)}), 1: frozenset({(0, 2)})}
    return PresentedF2Algebra([("x1", 1), ("y1", 1)], rels, sq1, degree_cap)


def two_variable_poly_ring(degree_cap: int = 40) -> PresentedF2Algebra:
    """Free F2[x1, y1] with the squaring Sq1; mod-2 cohomology of a product
    of two infinite projective spaces."""
    sq1 = {0: frozenset({(2, 0)}), 1: frozenset({(0, 2)})}
    return PresentedF2Algebra([("x1", 1), ("y1", 1)], [], sq1, degree_cap)


@lru_cache(maxsize=None)
def _cached_unordered_ring(m: int) -> PresentedF2Algebra:
    return unordered_config_ring(m)


@lru_cache(maxsize=None)
def _cached_ordered_ring(m: int) -> PresentedF2Algebra:
    return ordered_config_ring(m)


def config_mod2_ring(kind: str, m: int) -> PresentedF2Algebra:
    """Shared presented ring for the 'F' (ordered) or 'B' (unordered) space."""
    if kind == "B":
        return _cached_unordered_ring(m)
    if kind == "F":
        return _cached_ordered_ring(m)
    raise ValueError(f"unknown space kind {kind!r}")


# ---------------------------------------------------------------------------
# Splitting of the unordered ring into R and x*R
# ---------------------------------------------------------------------------


def _restrict_matrix(
    cols: list[int], src_positions: list[int], dst_positions: list[int]
) -> list[int]:
    dst_map = {p: i for i, p in enumerate(dst_positions)}
    out = []
    for pos in src_positions:
        col = cols[pos]
        new = 0
        i = 0
        while col:
            if col & 1:
                if i not in dst_map:
                    raise AssertionError("Sq1 does not preserve the splitting")
                new ^= 1 << dst_map[i]
            col >>= 1
            i += 1
        out.append(new)
    return out


def split_sq1_homology(m: int, d: int) -> tuple[int, int]:
    """Sq1-homology ranks at degree d of the two summands R and x*R of the
    unordered configuration ring, for m = 4a + 3.

    R is spanned by the basis monomials with x-exponent 0 and x*R by those
    with x-exponent 1; the leading relation keeps basis exponents below 2.
    """
    if m % 4 != 3:
        raise NotApplicableError("splitting is used for m = 3 mod 4 only")
    ring = config_mod2_ring("B", m)

    def positions(degree: int, want_x: int) -> list[int]:
        basis = ring.degree_basis(degree).basis_monomials
        for mono in basis:
            if mono[0] > 1:
                raise AssertionError("basis monomial with x-exponent above 1")
        return [i for i, mono in enumerate(basis) if mono[0] == want_x]

    ranks = []
    for want_x in (0, 1):
        here = positions(d, want_x)
        above = positions(d + 1, want_x)
        rank_out = (
            f2_rank(_restrict_matrix(ring.sq1_matrix(d), here, above)) if here else 0
        )
        rank_in = 0
        if d >= 1:
            below = positions(d - 1, want_x)
            if below:
                rank_in = f2_rank(
                    _restrict_matrix(ring.sq1_matrix(d - 1), below, here)
                )
        ranks.append(len(here) - rank_out - rank_in)
    return ranks[0], ranks[1]
