"""Square matrices over a small finite field, plus the matrix functors
(Kronecker product, inverse-transpose, symmetric and exterior powers) used
to transport representations.

Entries are field element indices (see fields.FqField); matrices are
immutable nested tuples, so they hash and sort.  The sort order is the
lexicographic order of index rows, which coincides with the lexicographic
order of coefficient-tuple serializations because the element indices are
themselves lexicographically ordered.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .errors import DomainError
from .fields import FqField


class FqMatrix:
    """An r x r matrix over an FqField."""

    __slots__ = ("field", "rows", "n")

    def __init__(self, field: FqField, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise DomainError("matrix must be square and nonempty", code="bad_matrix")
        q = field.q
        for row in rows:
            for x in row:
                if not 0 <= x < q:
                    raise DomainError("entry is not a field element index", code="bad_matrix")
        self.field = field
        self.rows = rows
        self.n = n

    # -- constructors ----------------------------------------------------
    @staticmethod
    def identity(field: FqField, n: int) -> "FqMatrix":
        one, zero = field.one, field.zero
        return FqMatrix(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @staticmethod
    def from_ints(field: FqField, rows: Sequence[Sequence[int]]) -> "FqMatrix":
        """Build from integer entries via the prime-field embedding."""
        return FqMatrix(field, [[field.from_int(x) for x in row] for row in rows])

    @staticmethod
    def from_coeff_rows(field: FqField, rows) -> "FqMatrix":
        """Build from nested coefficient vectors (the JSON wire format)."""
        return FqMatrix(field, [[field.index(c) for c in row] for row in rows])

    def to_coeff_rows(self) -> list[list[list[int]]]:
        f = self.field
        return [[list(f.coeffs(x)) for x in row] for row in self.rows]

    # -- ring operations ---------------------------------------------------
    def __mul__(self, other: "FqMatrix") -> "FqMatrix":
        if self.field != other.field or self.n != other.n:
            raise DomainError("matrix dimension/field mismatch", code="bad_matrix")
        f = self.field
        mul, add = f.mul_table, f.add_table
        n = self.n
        bcols = tuple(zip(*other.rows))
        out = []
        for arow in self.rows:
            row = []
            for bcol in bcols:
                acc = 0
                for k in range(n):
                    acc = add[acc][mul[arow[k]][bcol[k]]]
                row.append(acc)
            out.append(row)
        return FqMatrix(f, out)

    def transpose(self) -> "FqMatrix":
        return FqMatrix(self.field, tuple(zip(*self.rows)))

    def det(self) -> int:
        """Determinant by fraction-free-ish Gaussian elimination over F_q."""
        f = self.field
        n = self.n
        m = [list(row) for row in self.rows]
        det = f.one
        for col in range(n):
            pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
            if pivot is None:
                return f.zero
            if pivot != col:
                m[col], m[pivot] = m[pivot], m[col]
                det = f.neg(det)
            det = f.mul(det, m[col][col])
            inv = f.inv(m[col][col])
            for r in range(col + 1, n):
                factor = f.mul(m[r][col], inv)
                if factor:
                    for c in range(col, n):
                        m[r][c] = f.sub(m[r][c], f.mul(factor, m[col][c]))
        return det

    def inverse(self) -> "FqMatrix":
        f = self.field
        n = self.n
        m = [list(row) + list(FqMatrix.identity(f, n).rows[i]) for i, row in enumerate(self.rows)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
            if pivot is None:
                raise DomainError("matrix is singular", code="not_invertible")
            m[col], m[pivot] = m[pivot], m[col]
            inv = f.inv(m[col][col])
            m[col] = [f.mul(inv, x) for x in m[col]]
            for r in range(n):
                if r != col and m[r][col]:
                    factor = m[r][col]
                    m[r] = [f.sub(m[r][c], f.mul(factor, m[col][c])) for c in range(2 * n)]
        return FqMatrix(f, [row[n:] for row in m])

    def is_invertible(self) -> bool:
        return self.det() != self.field.zero

    # -- value semantics ---------------------------------------------------
    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FqMatrix)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash(self.rows)

    def __lt__(self, other: "FqMatrix") -> bool:
        return self.rows < other.rows

    def __repr__(self) -> str:
        return f"FqMatrix({self.rows})"

    def label(self) -> str:
        """Compact deterministic label using coefficient tuples."""
        f = self.field
        if f.e == 1:
            body = ";".join(",".join(str(x) for x in row) for row in self.rows)
        else:
            body = ";".join(
                ",".join("".join(str(c) for c in f.coeffs(x)) for x in row)
                for row in self.rows
            )
        return f"[{body}]"


def flatten(m: FqMatrix) -> tuple[int, ...]:
    return tuple(x for row in m.rows for x in row)


def kronecker(a: FqMatrix, b: FqMatrix) -> FqMatrix:
    """Kronecker product on the row-major basis e_i (x) e_j."""
    if a.field != b.field:
        raise DomainError("field mismatch", code="bad_matrix")
    f = a.field
    mul = f.mul_table
    n, m = a.n, b.n
    out = [[0] * (n * m) for _ in range(n * m)]
    for i in range(n):
        for k in range(n):
            aik = a.rows[i][k]
            if aik == 0:
                continue
            for j in range(m):
                brow = b.rows[j]
                orow = out[i * m + j]
                for l in range(m):
                    orow[k * m + l] = mul[aik][brow[l]]
    return FqMatrix(f, out)


def dual_matrix(a: FqMatrix) -> FqMatrix:
    """Inverse transpose, the matrix of the dual representation."""
    return a.inverse().transpose()


def _monomials(r: int, n: int) -> list[tuple[int, ...]]:
    """Exponent vectors of total degree n in r variables, lexicographic."""
    out = [t for t in itertools.product(range(n + 1), repeat=r) if sum(t) == n]
    out.sort()
    return out


def sym_matrix(a: FqMatrix, n: int) -> FqMatrix:
    """Matrix of Sym^n(a) on the degree-n monomial basis.

    Column alpha is the expansion of prod_j (a . x_j)^(alpha_j) as a
    polynomial; this makes Sym multiplicative: Sym(ab) = Sym(a) Sym(b).
    """
    if n < 0:
        raise DomainError("power must be nonnegative", code="bad_power")
    f = a.field
    r = a.n
    basis = _monomials(r, n)
    pos = {m: i for i, m in enumerate(basis)}
    unit_exps = [tuple(1 if k == j else 0 for k in range(r)) for j in range(r)]
    # columns of a as linear polynomials
    col_polys = []
    for j in range(r):
        poly = {}
        for i in range(r):
            if a.rows[i][j]:
                poly[unit_exps[i]] = a.rows[i][j]
        col_polys.append(poly)

    def poly_mul(p1, p2):
        out = {}
        for e1, c1 in p1.items():
            for e2, c2 in p2.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                c = f.mul(c1, c2)
                if e in out:
                    c = f.add(out[e], c)
                if c:
                    out[e] = c
                elif e in out:
                    del out[e]
        return out

    cols = []
    for alpha in basis:
        poly = {tuple([0] * r): f.one}
        for j, aj in enumerate(alpha):
            for _ in range(aj):
                poly = poly_mul(poly, col_polys[j])
        col = [f.zero] * len(basis)
        for e, c in poly.items():
            col[pos[e]] = c
        cols.append(col)
    return FqMatrix(f, [list(row) for row in zip(*cols)])


def wedge_matrix(a: FqMatrix, n: int) -> FqMatrix:
    """Compound matrix of Lambda^n(a) on the sorted n-subset basis."""
    if n < 0:
        raise DomainError("power must be nonnegative", code="bad_power")
    if n > a.n:
        raise DomainError("exterior power exceeds the dimension", code="bad_power")
    f = a.field
    subsets = list(itertools.combinations(range(a.n), n))
    if n == 0:
        return FqMatrix.identity(f, 1)
    out = []
    for rows_sel in subsets:
        row = []
        for cols_sel in subsets:
            sub = FqMatrix(f, [[a.rows[i][j] for j in cols_sel] for i in rows_sel])
            row.append(sub.det())
        out.append(row)
    return FqMatrix(f, out)
