"""Serre-construction planning on the projective plane.

Rank-2 bundles arise from extensions 0 -> O -> E -> Q (x) I_Z -> 0 with Q a
line bundle and Z a 0-cycle; c2(E) equals the cycle length.  Given a twisting
line bundle M, the planner picks the minimal even-degree Q = O(2n) and cycle
length so that the section-counting conditions

    h0(Q) > 0,   deg Q > deg M,   l(Z) > h0(Q (x) M)

all hold; these force h0(ad(E) (x) M) = 0 for the constructed bundle.  The
reported minimal c2 is a certified sufficient bound, the smallest this
counting argument can justify; whether a genuinely smaller constant works is
not decided here.  Only the plane is supported (closed-form h0).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import chern
from .encoding import format_integer
from .errors import DomainError


@dataclass(frozen=True)
class PlaneLineBundle:
    """O(degree) on the plane."""

    degree: int


@dataclass(frozen=True)
class SerrePlan:
    """A certified choice of twist degree and cycle length.

    q_degree = 2n, h0_QM = h0(Q (x) M), lz_min is the minimal admissible
    cycle length, c2_min = max(lz_min, stability_floor).
    """

    n: int
    q_degree: int
    h0_QM: int
    lz_min: int
    c2_min: int
    stability_floor: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("twist parameter n must be >= 1", code="bad_plan")
        if self.q_degree != 2 * self.n:
            raise DomainError("q_degree must equal 2n", code="bad_plan")
        if self.c2_min < self.lz_min:
            raise DomainError("c2_min must be at least the cycle length", code="bad_plan")

    def to_json(self) -> dict:
        return {
            "n": format_integer(self.n),
            "q_degree": format_integer(self.q_degree),
            "h0_QM": format_integer(self.h0_QM),
            "lz_min": format_integer(self.lz_min),
            "c2_min": format_integer(self.c2_min),
            "stability_floor": format_integer(self.stability_floor),
        }


def h0_plane(d: int) -> int:
    """h0(O(d)) on the plane: binom(d+2, 2) for d >= 0, else 0."""
    if d < 0:
        return 0
    return (d + 2) * (d + 1) // 2


def plan(m: PlaneLineBundle, extra_stability_floor: int = 0) -> SerrePlan:
    """Minimal plan for the twist M.

    n is the least positive integer with 2n > deg M (h0(O(2n)) > 0 is then
    automatic), and the cycle length is one more than h0(Q (x) M).  The
    stability floor is a caller-supplied extra lower bound on c2 (default 0);
    no threshold for "large enough to have stable bundles" is invented here.
    """
    if extra_stability_floor < 0:
        raise DomainError("stability floor must be nonnegative", code="bad_plan")
    n = 1 if m.degree < 2 else m.degree // 2 + 1
    h0_qm = h0_plane(2 * n + m.degree)
    lz_min = h0_qm + 1
    return SerrePlan(
        n=n,
        q_degree=2 * n,
        h0_QM=h0_qm,
        lz_min=lz_min,
        c2_min=max(lz_min, extra_stability_floor),
        stability_floor=extra_stability_floor,
    )


def alpha_of_curve(curve_degree: int, extra_stability_floor: int = 0) -> SerrePlan:
    """Plan for restricting to a plane curve of the given degree.

    The relevant twist is M = O(C) (x) K, and K = O(-3) on the plane, so
    this is the plan for O(curve_degree - 3).
    """
    if curve_degree < 1:
        raise DomainError("curve degree must be positive", code="bad_curve")
    return plan(PlaneLineBundle(curve_degree - 3), extra_stability_floor)


def check_assumptions(p: SerrePlan, m: PlaneLineBundle) -> list[tuple[str, bool]]:
    """Re-verify the three section-counting conditions from scratch.

    Returns machine-checkable (condition, holds) pairs; h0(Q (x) M) is
    recomputed rather than trusted from the plan.
    """
    h0_qm = h0_plane(p.q_degree + m.degree)
    return [
        ("h0_Q_positive", h0_plane(p.q_degree) > 0),
        ("deg_Q_exceeds_deg_M", p.q_degree > m.degree),
        ("cycle_length_exceeds_h0_QM", p.lz_min > h0_qm),
    ]


def twisted_c2(p: SerrePlan, c2_e: int) -> Fraction:
    """c2 of E (x) O(-n) for the constructed rank-2 E with det = O(2n).

    Computed through the tensor calculus: the twist kills c1 and shifts c2
    by -n^2.
    """
    n = p.n
    e = chern.ChernData(2, Fraction(2 * n), Fraction(4 * n * n), Fraction(c2_e))
    line = chern.ChernData(1, Fraction(-n), Fraction(n * n), Fraction(0))
    twisted = chern.tensor(e, line, cross=Fraction(-2 * n * n))
    if not twisted.has_vanishing_c1():
        raise DomainError("twist failed to kill c1", code="internal")
    return twisted.c2
