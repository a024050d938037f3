"""JSON encoding/decoding for the exact data types.

Polynomials are ascending coefficient arrays; rationals are "num" or
"num/den" strings, so nothing is ever rounded.
"""

from __future__ import annotations

from fractions import Fraction

from .polynomial import IntPoly
from .porc import GcdPorcFunction, PorcExpression
from .system import CountingFunction


def frac_to_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def poly_to_list(p: IntPoly) -> list[int]:
    return list(p.coeffs)


def poly_from_list(coeffs) -> IntPoly:
    return IntPoly(tuple(int(c) for c in coeffs))


def porc_to_dict(e: PorcExpression) -> dict:
    return {
        "alpha": frac_to_str(e.alpha),
        "terms": [
            {"coeff": frac_to_str(c), "n": n, "m": m} for c, n, m in e.terms
        ],
    }


def porc_from_dict(data: dict) -> PorcExpression:
    terms = tuple(
        (Fraction(t["coeff"]), int(t["n"]), int(t["m"])) for t in data["terms"]
    )
    return PorcExpression(alpha=Fraction(data["alpha"]), terms=terms)


def gcd_function_to_dict(g: GcdPorcFunction) -> dict:
    return {"f": poly_to_list(g.f), "d": porc_to_dict(g.d), "m": g.m}


def gcd_function_from_dict(data: dict) -> GcdPorcFunction:
    return GcdPorcFunction(
        f=poly_from_list(data["f"]), d=porc_from_dict(data["d"]), m=int(data["m"])
    )


def counting_function_to_dict(cf: CountingFunction) -> dict:
    return {
        "terms": [
            {"sign": sign, "g": gcd_function_to_dict(g)} for sign, g in cf.terms
        ]
    }


def counting_function_from_dict(data: dict) -> CountingFunction:
    terms = tuple(
        (int(t["sign"]), gcd_function_from_dict(t["g"])) for t in data["terms"]
    )
    return CountingFunction(terms=terms)


def table_to_dict(modulus: int, polys) -> dict:
    return {"modulus": modulus, "classes": [poly_to_list(p) for p in polys]}
