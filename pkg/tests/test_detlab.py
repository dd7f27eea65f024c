"""Exact determinants, Dodgson condensation and the ASM-sum expansion."""

import random
from fractions import Fraction

import pytest

from betheq.asmcounts import asm_count
from betheq.detlab import (
    ASMMatrix,
    CondensationSingularError,
    asm_enumerate,
    det_exact,
    lambda_det_asm_sum,
    lambda_det_dodgson,
)


def random_matrix(rng, n, *, positive=False):
    def entry():
        num = rng.randint(1, 9) if positive else rng.randint(-9, 9)
        return Fraction(num, rng.randint(1, 5))

    return [[entry() for _ in range(n)] for _ in range(n)]


class TestDetExact:
    def test_known_integer_determinant(self):
        assert det_exact([[1, 2], [3, 4]]) == -2
        assert det_exact([[2, 0, 1], [1, 3, 2], [0, 1, 4]]) == 21

    def test_singular(self):
        assert det_exact([[1, 2], [2, 4]]) == 0

    def test_empty_matrix(self):
        assert det_exact([]) == 1

    def test_bareiss_matches_field_path(self):
        rng = random.Random(7)
        for _ in range(20):
            n = rng.randint(1, 5)
            m_int = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            m_frac = [[Fraction(x) for x in row] for row in m_int]
            assert det_exact(m_int) == det_exact(m_frac)

    def test_multiplicativity(self):
        rng = random.Random(11)
        for _ in range(10):
            n = rng.randint(1, 4)
            a = random_matrix(rng, n)
            b = random_matrix(rng, n)
            ab = [
                [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
                for i in range(n)
            ]
            assert det_exact(ab) == det_exact(a) * det_exact(b)

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            det_exact([[1, 2, 3], [4, 5, 6]])


class TestASMEnumeration:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_counts_match_product_formula(self, n):
        assert len(asm_enumerate(n)) == asm_count(n)

    def test_all_distinct(self):
        asms = asm_enumerate(4)
        assert len({a.entries for a in asms}) == len(asms)

    def test_permutation_inversions(self):
        # for permutation matrices the inversion number is the ordinary one
        perm = [2, 0, 3, 1]
        entries = [[1 if j == perm[i] else 0 for j in range(4)] for i in range(4)]
        a = ASMMatrix.from_entries(entries)
        classic = sum(
            1 for i in range(4) for k in range(i + 1, 4) if perm[i] > perm[k]
        )
        assert a.inversion_number == classic
        assert a.num_neg == 0

    def test_minimal_negative_example(self):
        entries = [[0, 1, 0], [1, -1, 1], [0, 1, 0]]
        a = ASMMatrix.from_entries(entries)
        assert a.num_neg == 1
        assert a.inversion_number == 2

    def test_invalid_asm_rejected(self):
        with pytest.raises(ValueError):
            ASMMatrix.from_entries([[1, 1], [0, -1]])

    def test_guard(self):
        with pytest.raises(ValueError):
            asm_enumerate(7)


class TestLambdaDeterminant:
    @pytest.mark.parametrize("n", range(1, 5))
    def test_dodgson_matches_asm_sum(self, n):
        rng = random.Random(100 + n)
        lams = [Fraction(2), Fraction(-3, 2), Fraction(1, 5)]
        for trial in range(10):
            m = random_matrix(rng, n, positive=True)
            lam = lams[trial % len(lams)]
            try:
                d = lambda_det_dodgson(m, lam)
            except CondensationSingularError:
                continue
            assert d == lambda_det_asm_sum(m, lam)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_lambda_minus_one_is_determinant(self, n):
        rng = random.Random(200 + n)
        for _ in range(10):
            m = random_matrix(rng, n, positive=True)
            try:
                d = lambda_det_dodgson(m, Fraction(-1))
            except CondensationSingularError:
                continue
            assert d == det_exact(m)
            assert lambda_det_asm_sum(m, Fraction(-1)) == det_exact(m)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_vandermonde_product(self, n):
        rng = random.Random(300 + n)
        ws = [Fraction(rng.randint(1, 50), rng.randint(1, 7)) for _ in range(n)]
        lam = Fraction(3, 2)
        m = [[ws[i] ** (n - j) for j in range(1, n + 1)] for i in range(n)]
        expect = Fraction(1)
        for i in range(n):
            for j in range(i + 1, n):
                expect *= ws[i] + lam * ws[j]
        if n <= 4:
            assert lambda_det_asm_sum(m, lam) == expect
        assert lambda_det_dodgson(m, lam) == expect

    def test_singular_interior_raises(self):
        m = [[1, 0, 1], [1, 0, 2], [3, 1, 1]]
        with pytest.raises(CondensationSingularError):
            lambda_det_dodgson(m, Fraction(2))
