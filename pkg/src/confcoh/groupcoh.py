"""Closed-form graded cohomology of the two relevant classifying spaces.

The groups are the dihedral group of order 8 and its rank-2 elementary
abelian subgroup (whose classifying space is a product of two infinite
real projective spaces).  Coefficients are the integers, the sign
representation twisted by the orientation character (written Z_alpha),
or the field with two elements.
"""

from __future__ import annotations

from enum import Enum

from .abelian import AbGroup2, Z, ZERO
from .report import VerificationReport


class GroupId(Enum):
    D8 = "D8"
    Z2xZ2 = "Z2xZ2"


class CoeffId(Enum):
    INTEGER_TRIVIAL = "Z"
    INTEGER_TWISTED = "Z_alpha"
    MOD_TWO = "F2"


def _d8_integral(i: int) -> AbGroup2:
    if i == 0:
        return Z
    a, b = divmod(i, 4)
    if b == 0:
        return AbGroup2.elementary_with_z4(2 * a)  # a > 0 here
    if b == 1:
        return AbGroup2.elementary(2 * a)
    if b == 2:
        return AbGroup2.elementary(2 * a + 2)
    return AbGroup2.elementary(2 * a + 1)


def _d8_twisted(i: int) -> AbGroup2:
    a, b = divmod(i, 4)
    if b == 0:
        return AbGroup2.elementary(2 * a)
    if b == 1:
        return AbGroup2.elementary(2 * a + 1)
    if b == 2:
        return AbGroup2.elementary_with_z4(2 * a)
    return AbGroup2.elementary(2 * a + 2)


def _z2z2_integral(i: int) -> AbGroup2:
    if i == 0:
        return Z
    if i % 2 == 0:
        return AbGroup2.elementary(i // 2 + 1)
    return AbGroup2.elementary((i - 1) // 2)


def _z2z2_twisted(i: int) -> AbGroup2:
    if i % 2 == 0:
        return AbGroup2.elementary(i // 2)
    return AbGroup2.elementary((i + 1) // 2)


def classifying_cohomology(g: GroupId, c: CoeffId, i: int) -> AbGroup2:
    """H^i of the classifying space of g with coefficients c."""
    if i < 0:
        return ZERO
    if c is CoeffId.MOD_TWO:
        return AbGroup2.elementary(i + 1)
    if g is GroupId.D8:
        return _d8_integral(i) if c is CoeffId.INTEGER_TRIVIAL else _d8_twisted(i)
    return _z2z2_integral(i) if c is CoeffId.INTEGER_TRIVIAL else _z2z2_twisted(i)


def uct_mod2_check(g: GroupId, i_max: int) -> VerificationReport:
    """Mod-2 universal-coefficient consistency of the integral closed forms.

    dim(H^i tensor F2) + #(2-torsion of H^(i+1)) must equal the mod-2
    Betti number i + 1 in every degree.
    """
    report = VerificationReport()
    for i in range(i_max + 1):
        lhs = (
            classifying_cohomology(g, CoeffId.INTEGER_TRIVIAL, i).stats().two_rank_tensor
            + classifying_cohomology(g, CoeffId.INTEGER_TRIVIAL, i + 1)
            .stats()
            .mult2_kernel_rank
        )
        dim = len(classifying_cohomology(g, CoeffId.MOD_TWO, i).torsion_exponents)
        report.add(f"uct-mod2-{g.value}", "tensor+tor vs mod-2 dim", dim, lhs, degree=i)
    return report
