"""Independent brute-force oracles.

Each routine here recomputes a quantity by a route deliberately different
from the main implementation, for cross-checking:

  * symmetric/exterior power Chern data by expanding formal Chern roots in a
    truncated polynomial ring (against the Adams-operation recursion);
  * the surd expansion (sqrt(8r)+1)^N - (sqrt(8r)-1)^N by iterated
    multiplication in Z[sqrt(8r)] (against the binomial-sum expansion);
  * SL(2, F_q) by filtering all q^4 matrices for determinant 1 (against the
    two-generator closure);
  * reducibility of a 2-dimensional matrix group by searching for a common
    eigenvector over the quadratic extension (against the algebra span test).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .chern import ChernData
from .errors import DomainError
from .fields import FqField, make_field
from .matrices import FqMatrix
from .groups import closure

# -- truncated polynomials in formal Chern roots -------------------------

_Poly = dict  # exponent tuple -> Fraction, total degree <= 2


def _poly_add(a: _Poly, b: _Poly) -> _Poly:
    out = dict(a)
    for e, c in b.items():
        c2 = out.get(e, Fraction(0)) + c
        if c2:
            out[e] = c2
        elif e in out:
            del out[e]
    return out


def _poly_mul(a: _Poly, b: _Poly) -> _Poly:
    out: _Poly = {}
    for e1, c1 in a.items():
        d1 = sum(e1)
        for e2, c2 in b.items():
            if d1 + sum(e2) > 2:
                continue
            e = tuple(x + y for x, y in zip(e1, e2))
            c = out.get(e, Fraction(0)) + c1 * c2
            if c:
                out[e] = c
            elif e in out:
                del out[e]
    return out


def _unit(r: int, i: int) -> _Poly:
    return {tuple(1 if k == i else 0 for k in range(r)): Fraction(1)}


@lru_cache(maxsize=None)
def _functor_shape(r: int, n: int, kind: str) -> tuple[int, Fraction, Fraction, Fraction]:
    """(rank t, alpha, beta, gamma) with c1(S) = alpha e1 and
    c2(S) = beta e1^2 + gamma e2 as symmetric functions of the input roots."""
    if kind == "sym":
        selections = list(itertools.combinations_with_replacement(range(r), n))
    elif kind == "wedge":
        selections = list(itertools.combinations(range(r), n))
    else:
        raise DomainError(f"unknown kind {kind!r}", code="bad_functor")
    t = len(selections)
    if t == 0:
        return 0, Fraction(0), Fraction(0), Fraction(0)
    roots = []
    for sel in selections:
        s: _Poly = {}
        for i in sel:
            s = _poly_add(s, _unit(r, i))
        roots.append(s)
    c1: _Poly = {}
    for s in roots:
        c1 = _poly_add(c1, s)
    c2: _Poly = {}
    for i in range(t):
        for j in range(i + 1, t):
            c2 = _poly_add(c2, _poly_mul(roots[i], roots[j]))

    e1: _Poly = {}
    for i in range(r):
        e1 = _poly_add(e1, _unit(r, i))
    e1sq = _poly_mul(e1, e1)
    e2: _Poly = {}
    for i in range(r):
        for j in range(i + 1, r):
            e2 = _poly_add(e2, _poly_mul(_unit(r, i), _unit(r, j)))

    x1 = tuple(1 if k == 0 else 0 for k in range(r))
    x1sq = tuple(2 if k == 0 else 0 for k in range(r))
    alpha = c1.get(x1, Fraction(0))
    if _poly_add(c1, {e: -alpha * c for e, c in e1.items()}):
        raise DomainError("degree-1 part is not a multiple of e1", code="internal")
    beta = c2.get(x1sq, Fraction(0))
    if r >= 2:
        x1x2 = tuple(1 if k <= 1 else 0 for k in range(r))
        gamma = c2.get(x1x2, Fraction(0)) - 2 * beta
    else:
        gamma = Fraction(0)
    recomposed = _poly_add(
        {e: beta * c for e, c in e1sq.items()},
        {e: gamma * c for e, c in e2.items()},
    )
    if _poly_add(c2, {e: -c for e, c in recomposed.items()}):
        raise DomainError("degree-2 part escapes the (e1^2, e2) span", code="internal")
    return t, alpha, beta, gamma


def _pairings(e: ChernData, n: int, kind: str) -> tuple[Fraction, Fraction, Fraction]:
    """(rank, c1 multiple, ch2 pairing) of the functor applied to e."""
    t, alpha, beta, gamma = _functor_shape(e.rank, n, kind)
    c1sq = alpha * alpha * e.c1sq
    c2 = beta * e.c1sq + gamma * e.c2
    return Fraction(t), alpha, (c1sq - 2 * c2) / 2


def power_by_roots(e: ChernData, n: int, kind: str) -> ChernData:
    """Chern data of Sym^n(e) ("sym") or Lambda^n(e) ("wedge") by the
    splitting principle, independent of the Adams recursion.

    A rank-1 record can carry c2 data that no single Chern root realizes
    (ideal-sheaf-like classes), so rank 1 is reduced to honest rank-2
    splitting through the virtual presentation e = (e + O) - O and the
    classical series identities Sym_t(A - B) = Sym_t(A)/Sym_t(B) and
    lambda_t(A - B) = lambda_t(A)/lambda_t(B); out-of-range exterior powers
    follow the zero-sheaf convention of the public API.
    """
    if e.rank == 1:
        if kind == "wedge" and n > 1:
            return ChernData.zero()
        padded = ChernData(2, e.deg, e.c1sq, e.c2)
        if kind == "sym":
            # Sym^n(F - O) = Sym^n(F) - Sym^(n-1)(F)
            terms = [(1, n)] + ([(-1, n - 1)] if n >= 1 else [])
        else:
            # lambda_t(F - O) = lambda_t(F) / (1 + t)
            terms = [((-1) ** k, n - k) for k in range(n + 1)]
        t = alpha = ch2 = Fraction(0)
        for sign, j in terms:
            tj, aj, cj = _pairings(padded, j, kind)
            t += sign * tj
            alpha += sign * aj
            ch2 += sign * cj
        if t.denominator != 1 or t < 0:
            raise DomainError("virtual reduction produced a bad rank", code="internal")
        if t == 0:
            if alpha or ch2:
                raise DomainError("virtual reduction left a nonzero character", code="internal")
            return ChernData.zero()
        c1sq = alpha * alpha * e.c1sq
        return ChernData(t.numerator, alpha * e.deg, c1sq, (c1sq - 2 * ch2) / 2)

    t, alpha, beta, gamma = _functor_shape(e.rank, n, kind)
    if t == 0:
        return ChernData.zero()
    deg = alpha * e.deg
    c1sq = alpha * alpha * e.c1sq
    c2 = beta * e.c1sq + gamma * e.c2
    return ChernData(t, deg, c1sq, c2)


# -- surd expansion -------------------------------------------------------

def surd_power_difference(r: int) -> tuple[int, int]:
    """(u, v) with (sqrt(8r)+1)^N - (sqrt(8r)-1)^N = u + v sqrt(8r), N = 2r^2,
    computed by iterated multiplication in Z[sqrt(8r)].  u must be 0."""
    radicand = 8 * r
    n = 2 * r * r

    def mul(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
        return (x[0] * y[0] + radicand * x[1] * y[1], x[0] * y[1] + x[1] * y[0])

    plus = minus = (1, 0)
    for _ in range(n):
        plus = mul(plus, (1, 1))
        minus = mul(minus, (-1, 1))
    return (plus[0] - minus[0], plus[1] - minus[1])


# -- SL(2, F_q) by exhaustive filter --------------------------------------

def sl2_by_filter(field: FqField) -> tuple[FqMatrix, ...]:
    """All 2x2 matrices of determinant 1 over the field, sorted."""
    one = field.one
    out = []
    for a, b, c, d in itertools.product(field.elements(), repeat=4):
        det = field.sub(field.mul(a, d), field.mul(b, c))
        if det == one:
            out.append(FqMatrix(field, ((a, b), (c, d))))
    return tuple(sorted(out))


# -- common-eigenvector reducibility oracle (dimension 2) -----------------

def _embedding_root(field: FqField, ext: FqField) -> int:
    """Index in ext of a root of field's modulus (defines F_q -> F_(q^2))."""
    coeffs = [ext.from_int(c) for c in field.modulus]
    for x in ext.elements():
        acc = ext.zero
        power = ext.one
        for c in coeffs:
            acc = ext.add(acc, ext.mul(c, power))
            power = ext.mul(power, x)
        if acc == ext.zero:
            return x
    raise DomainError("modulus has no root in the quadratic extension", code="internal")


def reducible_by_common_eigenvector(gens: Sequence[FqMatrix]) -> bool:
    """True iff all elements of the generated 2-dimensional group share an
    eigenvector over the quadratic extension.

    For 2x2 matrices every invariant line over the algebraic closure is
    already defined over F_(q^2), so scanning the projective line of the
    extension decides absolute reducibility.
    """
    field = gens[0].field
    if any(g.n != 2 for g in gens):
        raise DomainError("eigenvector oracle is 2-dimensional only", code="bad_matrix")
    elements = closure(gens)
    ext = make_field(field.p, 2 * field.e)
    root = _embedding_root(field, ext)

    def embed(i: int) -> int:
        acc = ext.zero
        power = ext.one
        for c in field.coeffs(i):
            acc = ext.add(acc, ext.mul(ext.from_int(c), power))
            power = ext.mul(power, root)
        return acc

    mats = [
        ((embed(m.rows[0][0]), embed(m.rows[0][1])),
         (embed(m.rows[1][0]), embed(m.rows[1][1])))
        for m in elements
    ]
    lines = [(ext.one, t) for t in ext.elements()] + [(ext.zero, ext.one)]
    for v in lines:
        ok = True
        for m in mats:
            w0 = ext.add(ext.mul(m[0][0], v[0]), ext.mul(m[0][1], v[1]))
            w1 = ext.add(ext.mul(m[1][0], v[0]), ext.mul(m[1][1], v[1]))
            if ext.sub(ext.mul(w0, v[1]), ext.mul(w1, v[0])) != ext.zero:
                ok = False
                break
        if ok:
            return True
    return False
