"""Relation matrices over integer polynomials in q.

A monomial system instance becomes a matrix whose rows are the exponent
vectors of its equations followed by one membership row (q^n - 1)*e_i per
unknown.  Counting solutions at a concrete q reduces to the elementary
divisors of the evaluated matrix, or equivalently to the gcd of the
evaluated maximal minors.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations
from math import comb, gcd

from .polynomial import IntPoly

#: Soft limit on the number of row subsets enumerated by maximal_minors.
DEFAULT_SUBSET_LIMIT = 10**6


@dataclass(frozen=True)
class RelationMatrix:
    """Matrix of exponent polynomials: equation rows plus k membership rows."""

    k: int
    n: int
    rows: tuple[tuple[IntPoly, ...], ...]


def membership_poly(n: int) -> IntPoly:
    """The exponent q^n - 1 every unknown must satisfy."""
    return IntPoly.monomial(1, n) - 1


def build_relation_matrix(equation_rows, k: int, n: int) -> RelationMatrix:
    """Assemble the relation matrix for the given equation rows.

    The k membership rows are always appended; callers never supply them.
    """
    if k < 1 or n < 1:
        raise ValueError("need at least one unknown and extension degree >= 1")
    rows = []
    for row in equation_rows:
        row = tuple(p if isinstance(p, IntPoly) else IntPoly.constant(p) for p in row)
        if len(row) != k:
            raise ValueError(f"equation row has length {len(row)}, expected {k}")
        rows.append(row)
    mem = membership_poly(n)
    zero = IntPoly()
    for i in range(k):
        rows.append(tuple(mem if j == i else zero for j in range(k)))
    return RelationMatrix(k=k, n=n, rows=tuple(rows))


def poly_det(rows: list[list[IntPoly]]) -> IntPoly:
    """Determinant of a square matrix of integer polynomials, exactly."""
    size = len(rows)
    if any(len(r) != size for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if size <= 4:
        return _det_cofactor(rows)
    return _det_bareiss(rows)


def _det_cofactor(rows) -> IntPoly:
    size = len(rows)
    if size == 1:
        return rows[0][0]
    if size == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = IntPoly()
    sign = 1
    for i in range(size):
        if rows[i][0]:
            minor = [r[1:] for j, r in enumerate(rows) if j != i]
            acc = acc + sign * (rows[i][0] * _det_cofactor(minor))
        sign = -sign
    return acc


def _det_bareiss(rows) -> IntPoly:
    # fraction-free elimination: every division below is exact in Z[q]
    a = [list(r) for r in rows]
    size = len(a)
    sign = 1
    prev = IntPoly.constant(1)
    for t in range(size - 1):
        if not a[t][t]:
            for i in range(t + 1, size):
                if a[i][t]:
                    a[i], a[t] = a[t], a[i]
                    sign = -sign
                    break
            else:
                return IntPoly()
        for i in range(t + 1, size):
            for j in range(t + 1, size):
                num = a[t][t] * a[i][j] - a[i][t] * a[t][j]
                a[i][j] = num.exact_div(prev)
            a[i][t] = IntPoly()
        prev = a[t][t]
    return sign * a[size - 1][size - 1]


def maximal_minors(m: RelationMatrix, subset_limit: int = DEFAULT_SUBSET_LIMIT) -> list[IntPoly]:
    """Determinants of every k-row subset, in lexicographic subset order.

    Zero polynomials are kept so the list always has C(rows, k) entries.
    The enumeration is warned about (not refused) past subset_limit.
    """
    nrows = len(m.rows)
    if nrows < m.k:
        raise ValueError("fewer rows than columns")
    total = comb(nrows, m.k)
    if total > subset_limit:
        warnings.warn(
            f"enumerating {total} row subsets exceeds the soft limit {subset_limit}",
            stacklevel=2,
        )
    out = []
    for subset in combinations(range(nrows), m.k):
        out.append(poly_det([list(m.rows[i]) for i in subset]))
    return out


def evaluate_matrix(m: RelationMatrix, q0: int) -> list[list[int]]:
    """Entrywise evaluation at q0, giving a plain integer matrix."""
    if q0 <= 1:
        raise ValueError("degenerate modulus: q^n - 1 <= 0 for q <= 1")
    return [[p(q0) for p in row] for row in m.rows]


def minor_gcd_at(minors, q0: int) -> int:
    """Gcd of the absolute evaluated minors, ignoring zeros (gcd(0, a) = |a|)."""
    g = 0
    for p in minors:
        g = gcd(g, p(q0))
    return g
