"""Finite matrix groups from generators: closure enumeration, the two-
elementary-matrix generation of SL(2, F_q), the Burnside matrix-algebra
span test for absolute irreducibility, and free-group representations as
desk-scale models of finite covers with their holonomy (image) groups.

All enumerations are returned in the canonical sorted order (lexicographic
on entry-index rows), so repeated runs are bit-identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import CapExceededError, DomainError
from .fields import FqField, Q_CAP
from .matrices import FqMatrix, dual_matrix, flatten, kronecker, sym_matrix, wedge_matrix

CLOSURE_CAP = 10 ** 6
SPAN_DIM_CAP = 256


@dataclass(frozen=True)
class FqMatrixGroup:
    """A finite matrix group: generators plus its full sorted element set."""

    field: FqField
    dim: int
    generators: tuple[FqMatrix, ...]
    elements: tuple[FqMatrix, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_set(self) -> frozenset[FqMatrix]:
        return frozenset(self.elements)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FqMatrixGroup)
            and self.field == other.field
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash((self.field, self.elements))

    def to_json(self, sample: int = 4) -> dict:
        return {
            "order": str(self.order),
            "generators": [g.to_coeff_rows() for g in self.generators],
            "sample_elements": [m.to_coeff_rows() for m in self.elements[:sample]],
        }


def closure(generators: Sequence[FqMatrix], cap: int = CLOSURE_CAP) -> tuple[FqMatrix, ...]:
    """Multiplicative closure of the generators, sorted canonically.

    In a finite matrix group, closing under products from the identity
    already yields the generated subgroup (inverses are powers).
    """
    if not generators:
        raise DomainError("at least one generator required", code="no_generators")
    field = generators[0].field
    n = generators[0].n
    for g in generators:
        if g.field != field or g.n != n:
            raise DomainError("generators must share a field and dimension", code="bad_matrix")
        if not g.is_invertible():
            raise DomainError("generators must be invertible", code="not_invertible")
    identity = FqMatrix.identity(field, n)
    seen = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for m in frontier:
            for g in generators:
                prod = m * g
                if prod not in seen:
                    seen.add(prod)
                    new.append(prod)
                    if len(seen) > cap:
                        raise CapExceededError(
                            f"group closure exceeded the element cap {cap}"
                        )
        frontier = new
    return tuple(sorted(seen))


def group_from_generators(generators: Sequence[FqMatrix], cap: int = CLOSURE_CAP) -> FqMatrixGroup:
    gens = tuple(generators)
    elements = closure(gens, cap)
    return FqMatrixGroup(gens[0].field, gens[0].n, gens, elements)


def sl2_elementary_generators(field: FqField) -> list[FqMatrix]:
    """The elementary transvections [[1,b],[0,1]], [[1,0],[b,1]] with b
    running over the canonical basis 1, x, ..., x^(e-1) of F_q over F_p.

    For a prime field this is exactly the classical pair [[1,1],[0,1]] and
    [[1,0],[1,1]].  Over a proper extension the unit-entry pair only
    generates SL(2, F_p) (in characteristic 2 two elementary matrices can
    only generate a dihedral group), so the basis entries are required for
    the closure to be all of SL(2, F_q).
    """
    one, zero = field.one, field.zero
    gens = []
    for i in range(field.e):
        b = field.index(tuple(1 if k == i else 0 for k in range(field.e)))
        gens.append(FqMatrix(field, [[one, b], [zero, one]]))
        gens.append(FqMatrix(field, [[one, zero], [b, one]]))
    return gens


def sl2_generate(field: FqField, cap: int = CLOSURE_CAP) -> FqMatrixGroup:
    """SL(2, F_q) as the closure of its elementary transvection generators;
    every element is checked to have determinant 1."""
    if field.q > Q_CAP:
        raise CapExceededError(f"field size {field.q} exceeds the cap {Q_CAP}")
    group = group_from_generators(sl2_elementary_generators(field), cap)
    one = field.one
    for m in group.elements:
        if m.det() != one:
            raise DomainError("closure produced a non-unimodular element", code="internal")
    return group


@dataclass(frozen=True)
class BurnsideResult:
    irreducible: bool
    span_dim: int


def burnside_irreducible(gens: Sequence[FqMatrix]) -> BurnsideResult:
    """Absolute irreducibility by matrix-algebra span.

    The group generated acts absolutely irreducibly iff its elements span
    the full r^2-dimensional matrix algebra.  The span of all group elements
    is the unital algebra generated by the generators, so a basis is grown
    incrementally (multiplying basis elements by generators) until the
    dimension stabilizes; the group itself is never enumerated.

    An empty generator list is the trivial group (span dimension 1).
    """
    if gens:
        field = gens[0].field
        r = gens[0].n
        for g in gens:
            if g.field != field or g.n != r:
                raise DomainError("generators must share a field and dimension", code="bad_matrix")
    else:
        raise DomainError("at least one matrix (or the identity) required", code="no_generators")
    if r * r > SPAN_DIM_CAP:
        raise CapExceededError(f"span dimension {r * r} exceeds the cap {SPAN_DIM_CAP}")

    f = field
    basis: list[tuple[int, ...]] = []  # reduced echelon rows over F_q
    pivots: list[int] = []

    def reduce_and_insert(vec: list[int]) -> Optional[FqMatrix]:
        for pivot, row in zip(pivots, basis):
            c = vec[pivot]
            if c:
                vec[:] = [f.sub(x, f.mul(c, y)) for x, y in zip(vec, row)]
        pivot = next((i for i, x in enumerate(vec) if x), None)
        if pivot is None:
            return None
        inv = f.inv(vec[pivot])
        normalized = tuple(f.mul(inv, x) for x in vec)
        basis.append(normalized)
        pivots.append(pivot)
        return pivot

    identity = FqMatrix.identity(f, r)
    pending = [identity] + [g for g in gens]
    members = []
    for m in pending:
        if reduce_and_insert(list(flatten(m))) is not None:
            members.append(m)
    frontier = list(members)
    while frontier and len(basis) < r * r:
        new = []
        for m in frontier:
            for g in gens:
                prod = m * g
                if reduce_and_insert(list(flatten(prod))) is not None:
                    new.append(prod)
                    if len(basis) == r * r:
                        break
            if len(basis) == r * r:
                break
        frontier = new
    span = len(basis)
    return BurnsideResult(span == r * r, span)


@dataclass(frozen=True)
class FreeGroupRep:
    """A representation of the free group on g generators into GL_r(F_q),
    modeling the monodromy of a finite cover of a curve whose fundamental
    group is (the profinite completion of) that free group."""

    field: FqField
    dim: int
    images: tuple[FqMatrix, ...]

    def __post_init__(self):
        if not self.images:
            raise DomainError("representation needs at least one image", code="no_generators")
        for m in self.images:
            if m.field != self.field or m.n != self.dim:
                raise DomainError("images must share a field and dimension", code="bad_matrix")
            if not m.is_invertible():
                raise DomainError("images must be invertible", code="not_invertible")

    @property
    def free_rank(self) -> int:
        return len(self.images)

    @staticmethod
    def of(images: Sequence[FqMatrix]) -> "FreeGroupRep":
        images = tuple(images)
        return FreeGroupRep(images[0].field, images[0].n, images)


@dataclass(frozen=True)
class HolonomyResult:
    group: FqMatrixGroup
    full: Optional[bool]


def holonomy(
    rep: FreeGroupRep,
    target: Optional[FqMatrixGroup] = None,
    cap: int = CLOSURE_CAP,
) -> HolonomyResult:
    """Image closure of the representation; with a target group supplied,
    also reports whether the image is the whole target (full holonomy)."""
    group = group_from_generators(rep.images, cap)
    full = None
    if target is not None:
        full = group.element_set() == target.element_set()
    return HolonomyResult(group, full)


def associated_rep(rep: FreeGroupRep, functor: str, n: int = 0,
                   other: Optional[FreeGroupRep] = None) -> FreeGroupRep:
    """Apply a matrix functor generator-wise.

    functor is one of "dual", "sym", "wedge", "tensor_with"; sym/wedge take
    the power n and tensor_with takes the second representation (of the same
    free group, matched generator by generator).
    """
    if functor == "dual":
        images = [dual_matrix(m) for m in rep.images]
    elif functor == "sym":
        images = [sym_matrix(m, n) for m in rep.images]
    elif functor == "wedge":
        images = [wedge_matrix(m, n) for m in rep.images]
    elif functor == "tensor_with":
        if other is None:
            raise DomainError("tensor_with requires a second representation", code="bad_functor")
        if other.free_rank != rep.free_rank or other.field != rep.field:
            raise DomainError(
                "tensor_with requires matching free rank and field", code="bad_functor"
            )
        images = [kronecker(a, b) for a, b in zip(rep.images, other.images)]
    else:
        raise DomainError(f"unknown functor {functor!r}", code="bad_functor")
    new_dim = images[0].n
    if new_dim * new_dim > SPAN_DIM_CAP:
        raise CapExceededError(
            f"functor output dimension {new_dim} exceeds the span cap"
        )
    return FreeGroupRep.of(images)


def apply_matrix_functor(m: FqMatrix, functor: str, n: int = 0,
                         other: Optional[FqMatrix] = None) -> FqMatrix:
    """Single-matrix version of the functors above (for functoriality checks)."""
    if functor == "dual":
        return dual_matrix(m)
    if functor == "sym":
        return sym_matrix(m, n)
    if functor == "wedge":
        return wedge_matrix(m, n)
    if functor == "tensor_with":
        if other is None:
            raise DomainError("tensor_with requires a second matrix", code="bad_functor")
        return kronecker(m, other)
    raise DomainError(f"unknown functor {functor!r}", code="bad_functor")
