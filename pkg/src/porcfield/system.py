"""Monomial systems and their exact counting functions.

A system fixes k unknowns ranging over the nonzero elements of the degree-n
extension field and a list of monomial constraints whose exponents are
integer polynomials in q.  Counting proceeds by inclusion-exclusion over
the inequations: each subset contributes the solution count of a pure
equation system, obtained from the elementary divisors of its relation
matrix, and symbolically from the gcd of the matrix's maximal minors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, ScaleCapError
from .polynomial import IntPoly
from .porc import GcdPorcFunction, porc_eval, synthesize_gcd_function
from .relmat import build_relation_matrix, evaluate_matrix, maximal_minors
from .snf import divisor_product, smith_normal_form

#: Default bound on inequations before inclusion-exclusion is refused.
DEFAULT_MAX_INEQUATIONS = 20

EQ = "eq"
NEQ = "neq"


@dataclass(frozen=True)
class MonomialRelation:
    """One constraint: the monomial with these exponents equals (or differs from) 1."""

    exponents: tuple[IntPoly, ...]
    kind: str  # EQ or NEQ


@dataclass(frozen=True)
class MonomialSystem:
    """k unknowns over the degree-n extension, plus the user relations.

    Membership constraints are implicit; they are appended to every
    relation matrix and never stored here.
    """

    k: int
    n: int
    relations: tuple[MonomialRelation, ...] = ()
    variables: tuple[str, ...] = ()

    def __post_init__(self):
        if self.k < 1 or self.n < 1:
            raise ValueError("need k >= 1 unknowns and extension degree n >= 1")
        if not self.variables:
            object.__setattr__(
                self, "variables", tuple(f"x{i + 1}" for i in range(self.k))
            )
        if len(self.variables) != self.k:
            raise ValueError("variable name count differs from k")
        for rel in self.relations:
            if len(rel.exponents) != self.k:
                raise ValueError("relation exponent vector has wrong length")

    @property
    def equations(self) -> tuple[MonomialRelation, ...]:
        return tuple(r for r in self.relations if r.kind == EQ)

    @property
    def inequations(self) -> tuple[MonomialRelation, ...]:
        return tuple(r for r in self.relations if r.kind == NEQ)


def make_system(k: int, n: int, eqs=(), neqs=(), variables=()) -> MonomialSystem:
    """Convenience constructor from plain exponent rows (ints or IntPoly)."""

    def rel(row, kind):
        exps = tuple(p if isinstance(p, IntPoly) else IntPoly.constant(p) for p in row)
        return MonomialRelation(exponents=exps, kind=kind)

    relations = [rel(r, EQ) for r in eqs] + [rel(r, NEQ) for r in neqs]
    return MonomialSystem(k=k, n=n, relations=tuple(relations), variables=tuple(variables))


@dataclass(frozen=True)
class CountingFunction:
    """Signed sum of closed-form gcd functions; one term per inequation subset."""

    terms: tuple[tuple[int, GcdPorcFunction], ...]

    def __call__(self, q0: int) -> int:
        return counting_eval(self, q0)

    def render(self, var: str = "q") -> str:
        out = ""
        for i, (sign, g) in enumerate(self.terms):
            body = g.render(var)
            if i == 0:
                out = f"-{body}" if sign < 0 else body
            else:
                out += f" - {body}" if sign < 0 else f" + {body}"
        return out

    def __str__(self):
        return self.render()


def _subset_masks(system: MonomialSystem, max_inequations: int):
    neqs = system.inequations
    if len(neqs) > max_inequations:
        raise ScaleCapError(
            f"inclusion-exclusion blow-up: {len(neqs)} inequations exceed the cap "
            f"{max_inequations}"
        )
    eq_rows = [r.exponents for r in system.equations]
    for mask in range(1 << len(neqs)):
        rows = list(eq_rows)
        rows += [neqs[i].exponents for i in range(len(neqs)) if mask >> i & 1]
        sign = -1 if bin(mask).count("1") % 2 else 1
        yield sign, rows


def count_at(
    system: MonomialSystem, q0: int, *, max_inequations: int = DEFAULT_MAX_INEQUATIONS
) -> int:
    """Number of solutions at the concrete q0, via elementary divisors."""
    if q0 < 2:
        raise ValueError("q must be at least 2")
    total = 0
    for sign, rows in _subset_masks(system, max_inequations):
        matrix = build_relation_matrix(rows, system.k, system.n)
        divisors = smith_normal_form(evaluate_matrix(matrix, q0))
        if 0 in divisors:
            raise ConsistencyError("rank-deficient relation matrix at q >= 2")
        total += sign * divisor_product(divisors)
    if total < 0:
        raise ConsistencyError("negative inclusion-exclusion total")
    return total


def synthesize_counting_function(
    system: MonomialSystem, *, max_inequations: int = DEFAULT_MAX_INEQUATIONS
) -> CountingFunction:
    """Closed PORC form of q -> count_at(system, q).

    One signed term per inequation subset, in ascending bitmask order; each
    term is synthesized from the maximal minors of that subset's relation
    matrix.
    """
    terms = []
    for sign, rows in _subset_masks(system, max_inequations):
        matrix = build_relation_matrix(rows, system.k, system.n)
        minors = maximal_minors(matrix)
        terms.append((sign, synthesize_gcd_function(minors)))
    return CountingFunction(terms=tuple(terms))


def counting_eval(cf: CountingFunction, q0: int) -> int:
    """Exact value of the counting function at q0 (any integer >= 2)."""
    if q0 < 2:
        raise ValueError("q must be at least 2")
    total = Fraction(0)
    for sign, g in cf.terms:
        total += sign * porc_eval(g.d, q0) * abs(g.f(q0))
    if total.denominator != 1:
        raise ConsistencyError("counting function value is not an integer")
    if total < 0:
        raise ConsistencyError("counting function value is negative")
    return total.numerator
