"""Shared fixtures: the worked quadratic example and a small system corpus."""

import pytest

from porcfield import parse_system

QUADRATIC_TEXT = (
    "field GF(q^2); vars x1, x2; "
    "eq x1^(q^2-1) = 1; neq x1^(q-1) = 1; eq x1^(q+1)*x2^-2 = 1"
)

CORPUS_TEXTS = {
    "quadratic": QUADRATIC_TEXT,
    "quadratic-eqs": (
        "field GF(q^2); vars x1, x2; eq x1^(q^2-1) = 1; eq x1^(q+1)*x2^-2 = 1"
    ),
    "empty-k1-n2": "field GF(q^2); vars x",
    "empty-k2-n1": "field GF(q^1); vars x, y",
    "empty-k1-n3": "field GF(q^3); vars y",
    "square-roots-of-one": "field GF(q^1); vars x; eq x^2 = 1",
    "cube-vs-frobenius": "field GF(q^2); vars x; eq x^(3*q+3) = 1; neq x^3 = 1",
    "two-inequations": (
        "field GF(q^2); vars x; eq x^(q^2-1) = 1; neq x^(q-1) = 1; neq x^(q+1) = 1"
    ),
    "negative-exponents": "field GF(q^1); vars a, b; eq a^(q-1)*b^-3 = 1; neq b^2 = 1",
    "three-unknowns": (
        "field GF(q^1); vars x1, x2, x3; eq x1^1*x2^1*x3^1 = 1; eq x1^2*x3^-1 = 1"
    ),
    "repeated-factor": "field GF(q^1); vars x; eq x^2*x^3 = 1",
}

CORPUS = {name: parse_system(text) for name, text in CORPUS_TEXTS.items()}


@pytest.fixture
def quadratic_system():
    """Pick a root of an irreducible quadratic plus a square root of the root product."""
    return parse_system(QUADRATIC_TEXT)


@pytest.fixture
def quadratic_equations_only():
    return parse_system(CORPUS_TEXTS["quadratic-eqs"])


@pytest.fixture
def corpus():
    return CORPUS
