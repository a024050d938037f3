"""Smith normal form: examples, unimodular invariance, divisor chains."""

import random

import pytest

from porcfield import divisor_product, smith_normal_form


class TestExamples:
    def test_identity_already_reduced(self):
        assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == [1, 1, 1]

    def test_2x2(self):
        # entry gcd 2, |det| 8
        assert smith_normal_form([[2, 4], [6, 8]]) == [2, 4]

    def test_quadratic_system_matrix_at_3(self):
        assert smith_normal_form([[8, 0], [4, -2], [8, 0], [0, 8]]) == [2, 8]

    def test_rank_deficient_pads_zeros(self):
        assert smith_normal_form([[2, 4], [4, 8]]) == [2, 0]
        assert smith_normal_form([[0, 0], [0, 0]]) == [0, 0]

    def test_wide_matrix(self):
        assert smith_normal_form([[1, 0, 0]]) == [1, 0, 0]


class TestDivisorProduct:
    def test_unit(self):
        assert divisor_product([1, 1, 1]) == 1

    def test_quadratic_system_count(self):
        assert divisor_product([2, 8]) == 16

    def test_zero_propagates(self):
        assert divisor_product([2, 0]) == 0


class TestValidation:
    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            smith_normal_form([])

    def test_ragged_rejected(self):
        with pytest.raises(ValueError):
            smith_normal_form([[1, 2], [3]])


def _random_matrix(rng, max_dim=5, bound=30):
    r = rng.randint(1, max_dim)
    k = rng.randint(1, max_dim)
    return [[rng.randint(-bound, bound) for _ in range(k)] for _ in range(r)]


def _apply_random_unimodular_ops(rng, mat, count):
    a = [row[:] for row in mat]
    r, k = len(a), len(a[0])
    for _ in range(count):
        kind = rng.randrange(6)
        if kind == 0 and r > 1:
            i, j = rng.sample(range(r), 2)
            a[i], a[j] = a[j], a[i]
        elif kind == 1:
            i = rng.randrange(r)
            a[i] = [-x for x in a[i]]
        elif kind == 2 and r > 1:
            i, j = rng.sample(range(r), 2)
            c = rng.randint(-3, 3)
            a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        elif kind == 3 and k > 1:
            i, j = rng.sample(range(k), 2)
            for row in a:
                row[i], row[j] = row[j], row[i]
        elif kind == 4:
            i = rng.randrange(k)
            for row in a:
                row[i] = -row[i]
        elif kind == 5 and k > 1:
            i, j = rng.sample(range(k), 2)
            c = rng.randint(-3, 3)
            for row in a:
                row[i] += c * row[j]
    return a


def test_divisors_invariant_under_unimodular_ops():
    rng = random.Random(2718)
    for _ in range(500):
        mat = _random_matrix(rng)
        reference = smith_normal_form(mat)
        shuffled = _apply_random_unimodular_ops(rng, mat, rng.randint(1, 12))
        assert smith_normal_form(shuffled) == reference


def test_divisibility_chain_always_holds():
    rng = random.Random(31415)
    for _ in range(400):
        divisors = smith_normal_form(_random_matrix(rng))
        for a, b in zip(divisors, divisors[1:]):
            if a == 0:
                assert b == 0, "zeros must trail"
            elif b != 0:
                assert b % a == 0
        assert all(d >= 0 for d in divisors)
