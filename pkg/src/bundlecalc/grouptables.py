"""Abstract finite groups as multiplication tables, and the brute-force
verification of Jordan's theorem: every finite linear group of degree r has
an abelian normal subgroup of index at most J(r).

The search for the abelian normal subgroup of minimal index enumerates
candidates as multiplicative closures of unions of conjugacy classes (any
normal subgroup is such a union, so the search is complete for normal
subgroups) and filters for abelianness.  Classes whose elements do not all
commute with each other are discarded up front, and unions are restricted
to cliques in the class-commutation graph, which keeps the enumeration far
below the full subset lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import CapExceededError, DomainError
from .groups import FqMatrixGroup

JORDAN_ORDER_CAP = 360
_CLIQUE_CAP = 200_000


@dataclass(frozen=True)
class FiniteGroupTable:
    """A finite group given by its multiplication table.

    table[i][j] is the index of element i times element j.  Identity,
    inverses and associativity are verified at construction.
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    identity: int = -1  # filled in during validation

    def __post_init__(self):
        n = self.order
        if n < 1:
            raise DomainError("group order must be >= 1", code="bad_table")
        table = tuple(tuple(row) for row in self.table)
        if len(table) != n or any(len(row) != n for row in table):
            raise DomainError("table must be n x n", code="bad_table")
        for row in table:
            for x in row:
                if not 0 <= x < n:
                    raise DomainError("table entries must be element indices", code="bad_table")
        if len(self.labels) != n:
            raise DomainError("one label per element required", code="bad_table")
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))
        ident = None
        for e in range(n):
            if all(table[e][x] == x and table[x][e] == x for x in range(n)):
                ident = e
                break
        if ident is None:
            raise DomainError("no identity element", code="bad_table")
        object.__setattr__(self, "identity", ident)
        for a in range(n):
            if not any(table[a][b] == ident and table[b][a] == ident for b in range(n)):
                raise DomainError(f"element {a} has no inverse", code="bad_table")
        for a in range(n):
            ta = table[a]
            for b in range(n):
                left = table[ta[b]]
                tb = table[b]
                if any(left[c] != ta[tb[c]] for c in range(n)):
                    raise DomainError(
                        f"associativity fails at ({a}, {b})", code="bad_table"
                    )

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        e = self.identity
        row = self.table[a]
        for b in range(self.order):
            if row[b] == e:
                return b
        raise DomainError("inverse disappeared", code="internal")

    def is_abelian(self) -> bool:
        t = self.table
        n = self.order
        return all(t[a][b] == t[b][a] for a in range(n) for b in range(a + 1, n))

    def exponent(self) -> int:
        """Least common multiple of the element orders."""
        from math import lcm

        e = self.identity
        result = 1
        for a in range(self.order):
            x, k = a, 1
            while x != e:
                x = self.table[x][a]
                k += 1
            result = lcm(result, k)
        return result

    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        """Sorted classes, identity class first."""
        n = self.order
        t = self.table
        invs = [self.inv(g) for g in range(n)]
        seen = [False] * n
        classes = []
        for a in range(n):
            if seen[a]:
                continue
            cls = {t[t[g][a]][invs[g]] for g in range(n)}
            for x in cls:
                seen[x] = True
            classes.append(tuple(sorted(cls)))
        classes.sort(key=lambda c: (self.identity not in c, c))
        return classes


def table_from_matrix_group(g: FqMatrixGroup) -> FiniteGroupTable:
    """Multiplication table of a matrix group under its canonical order."""
    index = {m: i for i, m in enumerate(g.elements)}
    table = tuple(
        tuple(index[a * b] for b in g.elements) for a in g.elements
    )
    labels = tuple(m.label() for m in g.elements)
    return FiniteGroupTable(g.order, table, labels)


def _closure_of_subset(t: FiniteGroupTable, subset: set[int]) -> frozenset[int]:
    out = set(subset)
    out.add(t.identity)
    frontier = list(out)
    while frontier:
        new = []
        for a in frontier:
            row = t.table[a]
            for b in list(out):
                for prod in (row[b], t.table[b][a]):
                    if prod not in out:
                        out.add(prod)
                        new.append(prod)
        frontier = new
    return frozenset(out)


def _all_commute(t: FiniteGroupTable, elements: Sequence[int]) -> bool:
    table = t.table
    els = list(elements)
    return all(
        table[a][b] == table[b][a] for i, a in enumerate(els) for b in els[i + 1:]
    )


def _is_normal(t: FiniteGroupTable, subgroup: frozenset[int]) -> bool:
    table = t.table
    for g in range(t.order):
        ig = t.inv(g)
        for s in subgroup:
            if table[table[g][s]][ig] not in subgroup:
                return False
    return True


@dataclass(frozen=True)
class JordanCertificate:
    """Outcome of the minimal-index search, with the witness subgroup."""

    subgroup: tuple[int, ...]
    order: int
    index: int
    bound: int
    holds: bool

    def to_json(self) -> dict:
        return {
            "N_order": str(self.order),
            "index": str(self.index),
            "bound": str(self.bound),
            "holds": self.holds,
        }


def jordan_verify(g: FiniteGroupTable, r: int, j_value: int) -> JordanCertificate:
    """Find the abelian normal subgroup of minimal index and compare with
    the degree-r Jordan bound.

    The witness is re-verified abelian and normal by exhaustive pair and
    conjugation checks before any index claim.
    """
    if r < 1:
        raise DomainError("degree must be positive", code="bad_rank")
    if j_value < 1:
        raise DomainError("bound must be >= 1", code="bad_mode")
    n = g.order
    if n > JORDAN_ORDER_CAP:
        raise CapExceededError(
            f"group order {n} exceeds the search cap {JORDAN_ORDER_CAP}"
        )

    if g.is_abelian():
        best = frozenset(range(n))
    else:
        classes = g.conjugacy_classes()
        usable = [c for c in classes if _all_commute(g, c)]
        # identity class is always usable and sits in every subgroup
        ident_cls = next(c for c in usable if g.identity in c)
        others = [c for c in usable if c is not ident_cls]
        compat = {}
        for i, ci in enumerate(others):
            for j in range(i + 1, len(others)):
                cj = others[j]
                compat[(i, j)] = all(
                    g.table[a][b] == g.table[b][a] for a in ci for b in cj
                )
        best = frozenset({g.identity})
        stack: list[tuple[list[int], int]] = [([], 0)]
        visited = 0
        while stack:
            chosen, start = stack.pop()
            visited += 1
            if visited > _CLIQUE_CAP:
                raise CapExceededError("conjugacy-class clique enumeration exploded")
            union = set(ident_cls)
            for i in chosen:
                union.update(others[i])
            closure = _closure_of_subset(g, union)
            if _all_commute(g, closure) and len(closure) > len(best):
                best = closure
            for nxt in range(start, len(others)):
                if all(compat[(min(i, nxt), max(i, nxt))] for i in chosen):
                    stack.append((chosen + [nxt], nxt + 1))

    if not _all_commute(g, best):
        raise DomainError("witness subgroup failed the abelian re-check", code="internal")
    if not _is_normal(g, best):
        raise DomainError("witness subgroup failed the normality re-check", code="internal")
    index = n // len(best)
    return JordanCertificate(
        subgroup=tuple(sorted(best)),
        order=len(best),
        index=index,
        bound=j_value,
        holds=index <= j_value,
    )
