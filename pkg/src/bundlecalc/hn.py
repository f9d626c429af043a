"""Slope predicates on Harder-Narasimhan data of finite covers.

These are consistency checks on user-supplied (rank, degree) factor lists,
not sheaf computations: validity of a profile, the pushforward slope bound
mu_max(f_* W) <= mu(W)/deg f for finite separable covers, the criterion
"f etale iff f_* O is semistable of degree 0", the genuinely-ramified
criterion "maximal destabilizing part of f_* O is the trivial line bundle"
(operationalized on slope data as: top factor has slope 0 and rank 1), and
degree scaling under Frobenius pullback.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .encoding import format_rational, parse_integer, parse_rational
from .errors import DomainError
from .primes import is_prime


@dataclass(frozen=True)
class HNProfile:
    """Ordered (rank, degree) data of the successive semistable quotients.

    Valid iff the slopes deg_i/rank_i strictly decrease.
    """

    factors: tuple[tuple[int, Fraction], ...]

    def __post_init__(self):
        if not self.factors:
            raise DomainError("profile must be nonempty", code="empty_profile")
        clean = []
        for rank, deg in self.factors:
            if not isinstance(rank, int) or isinstance(rank, bool) or rank < 1:
                raise DomainError("factor ranks must be positive integers", code="bad_profile")
            if isinstance(deg, float):
                raise DomainError("floating-point degree rejected", code="float_rejected")
            clean.append((rank, Fraction(deg)))
        object.__setattr__(self, "factors", tuple(clean))

    @staticmethod
    def of(pairs: Sequence) -> "HNProfile":
        return HNProfile(tuple((r, d) for r, d in pairs))

    @staticmethod
    def from_json(obj) -> "HNProfile":
        if not isinstance(obj, list):
            raise DomainError("profile must be a JSON list of [rank, deg] pairs", code="bad_profile")
        pairs = []
        for item in obj:
            if not isinstance(item, list) or len(item) != 2:
                raise DomainError("each factor must be a [rank, deg] pair", code="bad_profile")
            pairs.append((parse_integer(item[0]), parse_rational(item[1])))
        return HNProfile.of(pairs)

    def to_json(self) -> list:
        return [[rank, format_rational(deg)] for rank, deg in self.factors]

    def slopes(self) -> list[Fraction]:
        return [Fraction(deg, 1) / rank for rank, deg in self.factors]

    @property
    def total_rank(self) -> int:
        return sum(rank for rank, _ in self.factors)


@dataclass(frozen=True)
class CoverData:
    """A finite cover: its degree and whether it is separable."""

    degree: int
    separable: bool = True

    def __post_init__(self):
        if self.degree < 1:
            raise DomainError("cover degree must be >= 1", code="bad_cover")


class ProfileCheck(NamedTuple):
    valid: bool
    first_violation: Optional[int]


class EtaleVerdict(enum.Enum):
    ETALE_CONSISTENT = "etale_consistent"
    NOT_ETALE = "not_etale"


class RamificationVerdict(enum.Enum):
    GENUINELY_RAMIFIED = "genuinely_ramified"
    FACTORS_THROUGH_ETALE = "factors_through_etale"


def validate_profile(p: HNProfile) -> ProfileCheck:
    """True iff slopes strictly decrease; otherwise the first bad index."""
    slopes = p.slopes()
    for i in range(1, len(slopes)):
        if not slopes[i - 1] > slopes[i]:
            return ProfileCheck(False, i)
    return ProfileCheck(True, None)


def _require_valid(p: HNProfile) -> None:
    check = validate_profile(p)
    if not check.valid:
        raise DomainError(
            f"invalid profile: slopes do not strictly decrease at index {check.first_violation}",
            code="invalid_profile",
        )


def mu_max(p: HNProfile) -> Fraction:
    """Slope of the first (maximal destabilizing) factor."""
    _require_valid(p)
    rank, deg = p.factors[0]
    return Fraction(deg) / rank


def total_slope(p: HNProfile) -> Fraction:
    """Total degree over total rank."""
    _require_valid(p)
    total_deg = sum(deg for _, deg in p.factors)
    return Fraction(total_deg) / p.total_rank


def pushforward_bound_check(w_slope: Fraction, f: CoverData, candidate: HNProfile) -> bool:
    """Could ``candidate`` be the HN profile of the pushforward of a
    semistable bundle of slope ``w_slope`` under ``f``?

    Necessary condition: mu_max(candidate) <= w_slope / deg f.  Requires a
    separable cover.
    """
    if not f.separable:
        raise DomainError("pushforward bound unsupported for inseparable covers",
                          code="inseparable_unsupported")
    return mu_max(candidate) <= Fraction(w_slope) / f.degree


def etale_criterion(pushforward_structure_profile: HNProfile) -> EtaleVerdict:
    """Etale-consistent iff f_* O is semistable of degree 0: a single factor
    of slope 0."""
    p = pushforward_structure_profile
    _require_valid(p)
    if len(p.factors) == 1 and p.factors[0][1] == 0:
        return EtaleVerdict.ETALE_CONSISTENT
    return EtaleVerdict.NOT_ETALE


def genuinely_ramified_criterion(pushforward_structure_profile: HNProfile) -> RamificationVerdict:
    """Genuinely ramified iff the maximal slope-0 part of f_* O is a line.

    Profiles with mu_max != 0 are rejected: a finite separable cover always
    pins mu_max(f_* O) = 0 (the structure sheaf sits inside the maximal
    part), so such input cannot be the HN data of a pushforward of O.  The
    predicate sees slope data only; it cannot check the algebra-structure
    side of "the maximal part is the trivial line bundle".
    """
    p = pushforward_structure_profile
    if mu_max(p) != 0:
        raise DomainError(
            "inconsistent input: mu_max of a pushforward structure sheaf is 0",
            code="mu_max_nonzero",
        )
    if p.factors[0][0] == 1:
        return RamificationVerdict.GENUINELY_RAMIFIED
    return RamificationVerdict.FACTORS_THROUGH_ETALE


def frobenius_degree_scale(deg: Fraction, p: int, n: int) -> Fraction:
    """Degree of the n-fold Frobenius pullback: p^n * deg."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime", code="not_prime")
    if n < 0:
        raise DomainError("iteration count must be nonnegative", code="bad_power")
    if isinstance(deg, float):
        raise DomainError("floating-point degree rejected", code="float_rejected")
    return Fraction(deg) * p ** n
