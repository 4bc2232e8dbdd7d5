"""Closed-form cohomology of two-point configuration spaces of P^m.

The ordered space F(P^m, 2) and the unordered space B(P^m, 2) are closed
(2m-1)-manifolds up to homotopy (they deformation-retract onto quotients
of the Stiefel manifold V_{m+1,2}).  This module holds their integral
cohomology tables in all degrees, the mod-2 Betti numbers, homology via
universal coefficients, twisted cohomology via (twisted) Poincare duality
and the torsion linking pairing, and the degreewise behaviour of the map
to the relevant classifying space.

Notation used throughout: <k> is an elementary abelian 2-group of rank k
and {k} is <k> plus one Z/4 summand.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .abelian import AbGroup2, GradedGroups, Z, ZERO, uct_homology
from .groupcoh import CoeffId, GroupId, classifying_cohomology
from .report import VerificationReport
from . import stiefel


class DegreeOutOfRangeError(ValueError):
    pass


@dataclass(frozen=True)
class SpaceId:
    """kind is "F" (ordered pairs) or "B" (unordered pairs)."""

    kind: str
    m: int

    def __post_init__(self) -> None:
        if self.kind not in ("F", "B"):
            raise ValueError("kind must be 'F' or 'B'")
        if self.m < 1:
            raise ValueError("m must be >= 1")

    @property
    def support_bound(self) -> int:
        return 2 * self.m - 1

    @property
    def group(self) -> GroupId:
        return GroupId.D8 if self.kind == "B" else GroupId.Z2xZ2

    def __str__(self) -> str:
        return f"{self.kind}(P^{self.m},2)"


def ordered(m: int) -> SpaceId:
    return SpaceId("F", m)


def unordered(m: int) -> SpaceId:
    return SpaceId("B", m)


# ---------------------------------------------------------------------------
# The integral tables
# ---------------------------------------------------------------------------


def _ordered_even(n: int, i: int) -> AbGroup2:
    # m = 2n with n > 0
    if i == 0 or i == 4 * n - 1:
        return Z
    if 1 <= i <= 2 * n:
        if i % 2 == 0:
            return AbGroup2.elementary(i // 2 + 1)
        return AbGroup2.elementary((i - 1) // 2)
    if 2 * n < i < 4 * n - 1:
        if i % 2 == 0:
            return AbGroup2.elementary(2 * n + 1 - i // 2)
        return AbGroup2.elementary(2 * n - (i + 1) // 2)
    return ZERO


def _ordered_odd(n: int, i: int) -> AbGroup2:
    # m = 2n + 1 with n >= 0
    if i == 0:
        return Z
    if i == 2 * n + 1:
        return Z + AbGroup2.elementary(n)
    if 1 <= i <= 2 * n:
        if i % 2 == 0:
            return AbGroup2.elementary(i // 2 + 1)
        return AbGroup2.elementary((i - 1) // 2)
    if 2 * n + 1 < i <= 4 * n + 1:
        if i % 2 == 0:
            return AbGroup2.elementary(2 * n + 1 - i // 2)
        return AbGroup2.elementary(2 * n + 1 - (i - 1) // 2)
    return ZERO


def _unordered_even(n: int, i: int) -> AbGroup2:
    # m = 2n with n > 0
    if i == 0 or i == 4 * n - 1:
        return Z
    a, b = divmod(i, 4)
    if 1 <= i <= 2 * n:
        if b == 0:
            return AbGroup2.elementary_with_z4(2 * a)
        if b == 1:
            return AbGroup2.elementary(2 * a)
        if b == 2:
            return AbGroup2.elementary(2 * a + 2)
        return AbGroup2.elementary(2 * a + 1)
    if 2 * n < i < 4 * n - 1:
        if b == 0:
            return AbGroup2.elementary_with_z4(2 * n - 2 * a)
        if b == 1:
            return AbGroup2.elementary(2 * n - 2 * a - 1)
        if b == 2:
            return AbGroup2.elementary(2 * n - 2 * a)
        return AbGroup2.elementary(2 * n - 2 * a - 2)
    return ZERO


def _unordered_odd(n: int, i: int) -> AbGroup2:
    # m = 2n + 1 with n >= 0
    if i == 0:
        return Z
    if i == 2 * n + 1:
        return Z + AbGroup2.elementary(n)
    a, b = divmod(i, 4)
    if 1 <= i < 2 * n + 1:
        if b == 0:
            return AbGroup2.elementary_with_z4(2 * a)
        if b == 1:
            return AbGroup2.elementary(2 * a)
        if b == 2:
            return AbGroup2.elementary(2 * a + 2)
        return AbGroup2.elementary(2 * a + 1)
    if 2 * n + 1 < i <= 4 * n + 1:
        if b == 0:
            return AbGroup2.elementary_with_z4(2 * n - 2 * a)
        if b == 1:
            return AbGroup2.elementary(2 * n + 1 - 2 * a)
        return AbGroup2.elementary(2 * n - 2 * a)
    return ZERO


def cohomology(s: SpaceId, i: int) -> AbGroup2:
    """Integral cohomology H^i of the configuration space."""
    if i < 0:
        return ZERO
    if s.kind == "F":
        if s.m % 2 == 0:
            return _ordered_even(s.m // 2, i)
        return _ordered_odd((s.m - 1) // 2, i)
    if s.m % 2 == 0:
        return _unordered_even(s.m // 2, i)
    return _unordered_odd((s.m - 1) // 2, i)


def cohomology_table(s: SpaceId) -> GradedGroups:
    return GradedGroups.from_dict(
        s.support_bound,
        {i: cohomology(s, i) for i in range(s.support_bound + 1)},
    )


def mod2_dimension(s: SpaceId, i: int) -> int:
    """Mod-2 Betti number: i+1 up to the middle, then 2m-i, then 0."""
    if i < 0:
        return 0
    if i <= s.m - 1:
        return i + 1
    if i <= 2 * s.m - 1:
        return 2 * s.m - i
    return 0


def homology(s: SpaceId) -> GradedGroups:
    return uct_homology(cohomology_table(s))


def is_orientable(s: SpaceId) -> bool:
    """Both spaces retract onto quotients of V_{m+1,2}; orientable iff
    m + 1 is odd."""
    return stiefel.quotient_orientable(
        s.m + 1, stiefel.Subgroup.from_group(s.group)
    )


def twisted_cohomology(s: SpaceId, j: int) -> AbGroup2:
    """H^j with coefficients twisted by the orientation character.

    Orientable case: the twist is trivial.  Non-orientable case: Poincare
    duality against the (2m-1)-manifold gives free part from H^(2m-1-j)
    and, by the torsion linking pairing, torsion from H^(2m-j).
    """
    if j < 0 or j > s.support_bound:
        raise DegreeOutOfRangeError(f"degree {j} outside 0..{s.support_bound}")
    if is_orientable(s):
        return cohomology(s, j)
    free = cohomology(s, 2 * s.m - 1 - j).free_part()
    torsion = cohomology(s, 2 * s.m - j).torsion_part()
    return free + torsion


def duality_symmetry_check(s: SpaceId) -> VerificationReport:
    """Torsion symmetry forced by the linking pairing.

    Orientable (even m): torsion of H^i equals torsion of H^(2m-i).
    Non-orientable (odd m): below the connectivity bound the twisted groups
    are the classifying-space ones, so torsion of H^(2m-j) must equal the
    twisted classifying group in degree j for j <= m - 2.
    """
    report = VerificationReport()
    m = s.m
    if is_orientable(s):
        for i in range(2 * m):
            report.add(
                "duality",
                f"torsion H^{i} vs H^{2 * m - i}",
                cohomology(s, i).torsion_part(),
                cohomology(s, 2 * m - i).torsion_part(),
                m=m,
                degree=i,
            )
    else:
        for j in range(m - 1):
            report.add(
                "duality",
                f"torsion H^{2 * m - j} vs twisted classifying H^{j}",
                classifying_cohomology(s.group, CoeffId.INTEGER_TWISTED, j),
                cohomology(s, 2 * m - j).torsion_part(),
                m=m,
                degree=j,
            )
    return report


# ---------------------------------------------------------------------------
# Behaviour of the classifying map
# ---------------------------------------------------------------------------


class PStarBehavior(Enum):
    ISO = "iso"
    EPI_NONZERO_KERNEL = "epi"
    MONO_ONTO_TORSION = "mono-onto-torsion"
    ZERO = "zero"
    OPEN = "open"


@dataclass(frozen=True)
class PStarProfile:
    behavior: PStarBehavior
    kernel_rank: int | None = None


def p_star_profile(g: GroupId, m: int, i: int) -> PStarProfile:
    """Degreewise behaviour of the classifying map on integral cohomology.

    For the dihedral group with m = 3 mod 4 the surjectivity above the
    middle dimension is not settled; those degrees come back OPEN and no
    suite asserts anything there.
    """
    s = SpaceId("B" if g is GroupId.D8 else "F", m)
    open_band = g is GroupId.D8 and m % 4 == 3 and m > 1

    def rank_of_kernel() -> int | None:
        bg = classifying_cohomology(g, CoeffId.INTEGER_TRIVIAL, i)
        space = cohomology(s, i)
        return bg.torsion_order_log2 - space.torsion_order_log2

    if m % 2 == 0:
        if i <= m:
            return PStarProfile(PStarBehavior.ISO)
        if i < 2 * m - 1:
            return PStarProfile(PStarBehavior.EPI_NONZERO_KERNEL, rank_of_kernel())
        if i == 2 * m - 1:
            return PStarProfile(PStarBehavior.ZERO, rank_of_kernel())
        return PStarProfile(PStarBehavior.ZERO)
    if i < m:
        return PStarProfile(PStarBehavior.ISO)
    if i == m:
        return PStarProfile(PStarBehavior.MONO_ONTO_TORSION)
    if i <= 2 * m - 1:
        if open_band:
            return PStarProfile(PStarBehavior.OPEN)
        return PStarProfile(PStarBehavior.EPI_NONZERO_KERNEL, rank_of_kernel())
    return PStarProfile(PStarBehavior.ZERO)


def global_checks(s: SpaceId) -> VerificationReport:
    """Whole-table sanity: free ranks sit at 0 and at 2m-1 (even m) or m
    (odd m); the top group matches the orientability of the quotient; the
    mod-2 universal-coefficient count holds degreewise; the Euler
    characteristic vanishes; and no torsion exceeds order 4 (order 2 for
    the ordered space)."""
    if s.m < 2:
        raise ValueError("global checks need m >= 2")
    report = VerificationReport()
    m = s.m
    free_degree = 2 * m - 1 if m % 2 == 0 else m
    free_profile = {
        i: cohomology(s, i).free_rank for i in range(2 * m) if cohomology(s, i).free_rank
    }
    report.add(
        "global", "free ranks", {0: 1, free_degree: 1}, free_profile, m=m
    )
    report.add(
        "global",
        "top group vs quotient orientability",
        stiefel.top_group_V_quotient(m + 1, s.group),
        cohomology(s, 2 * m - 1),
        m=m,
        degree=2 * m - 1,
    )
    for i in range(2 * m + 2):
        lhs = (
            cohomology(s, i).stats().two_rank_tensor
            + cohomology(s, i + 1).stats().mult2_kernel_rank
        )
        report.add(
            "global", "mod-2 UCT", mod2_dimension(s, i), lhs, m=m, degree=i
        )
    euler = sum(
        (-1) ** i * cohomology(s, i).free_rank for i in range(2 * m)
    )
    report.add("global", "Euler characteristic", 0, euler, m=m)
    bound = 2 if s.kind == "B" else 1
    worst = max(
        (e for i in range(2 * m) for e in cohomology(s, i).torsion_exponents),
        default=0,
    )
    report.add_bool(
        "global",
        f"torsion exponent <= {bound}",
        worst <= bound,
        m=m,
        expected=f"<= {bound}",
        got=worst,
    )
    return report
