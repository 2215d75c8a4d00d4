import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from latquot.errors import NotSymmetric, PivotBreakdown, SingularMatrix
from latquot.exactnum import MatQ, MatZ, det, hnf, inverse, is_positive_definite, ldl

from conftest import rand_invertible, rand_matq, rand_unimodular, rand_unimodular_pm


def frac(p, q=1):
    return Fraction(p, q)


# independent determinant oracle: Laplace cofactor expansion
def det_cofactor(m: MatQ) -> Fraction:
    n = m.n
    if n == 1:
        return m.rows[0][0]
    total = Fraction(0)
    for j in range(n):
        minor = MatQ([[m.rows[r][c] for c in range(n) if c != j] for r in range(1, n)])
        term = m.rows[0][j] * det_cofactor(minor)
        total += term if j % 2 == 0 else -term
    return total


_small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=5)


def _matrix_strategy(n):
    return st.lists(st.lists(_small_fracs, min_size=n, max_size=n), min_size=n, max_size=n).map(MatQ)


matrices_2_to_4 = st.integers(min_value=2, max_value=4).flatmap(_matrix_strategy)


class TestDet:
    def test_identity(self):
        assert det(MatQ.identity(3)) == 1

    def test_diagonal(self):
        assert det(MatQ([[2, 0], [0, 3]])) == 6

    def test_triangular(self):
        assert det(MatQ([[1, 1], [0, 1]])) == 1

    def test_rational_entries(self):
        m = MatQ([[frac(1, 2), frac(1, 3)], [frac(1, 4), frac(1, 5)]])
        assert det(m) == frac(1, 10) - frac(1, 12)

    def test_zero_pivot_needs_row_swap(self):
        assert det(MatQ([[0, 1], [1, 0]])) == -1
        m = MatQ([[0, 1, 2], [1, 0, 3], [2, 3, 0]])
        assert det(m) == det_cofactor(m)

    def test_zero_pivot_mid_elimination(self):
        # elimination hits a zero pivot at step 1
        m = MatQ([[1, 2, 3], [2, 4, 5], [3, 5, 6]])
        assert det(m) == det_cofactor(m)

    def test_one_by_one(self):
        assert det(MatQ([[frac(-7, 3)]])) == frac(-7, 3)

    @given(matrices_2_to_4)
    def test_matches_cofactor_expansion(self, m):
        assert det(m) == det_cofactor(m)

    @given(matrices_2_to_4.flatmap(lambda m: st.tuples(st.just(m), _matrix_strategy(m.n))))
    def test_multiplicative(self, pair):
        m1, m2 = pair
        assert det(m1 @ m2) == det(m1) * det(m2)


class TestInverse:
    def test_identity(self):
        assert inverse(MatQ.identity(2)) == MatQ.identity(2)

    def test_unipotent(self):
        assert inverse(MatQ([[1, 1], [0, 1]])) == MatQ([[1, -1], [0, 1]])

    def test_diagonal_reciprocal(self):
        assert inverse(MatQ([[2, 0], [0, frac(1, 2)]])) == MatQ([[frac(1, 2), 0], [0, 2]])

    def test_singular_raises(self):
        with pytest.raises(SingularMatrix):
            inverse(MatQ([[1, 1], [1, 1]]))

    def test_involution(self):
        rng = random.Random(11)
        for _ in range(25):
            m = rand_invertible(rng, rng.randint(1, 4))
            assert inverse(inverse(m)) == m

    def test_product_is_identity(self):
        rng = random.Random(12)
        for _ in range(25):
            m = rand_invertible(rng, rng.randint(1, 4))
            assert m @ inverse(m) == MatQ.identity(m.n)

    def test_elimination_path_agrees_with_adjugate(self):
        # n = 7 exercises the elimination branch
        rng = random.Random(13)
        m = rand_invertible(rng, 7, height=3)
        assert m @ m.inverse() == MatQ.identity(7)

    def test_unimodular_inverse_is_integral(self):
        rng = random.Random(14)
        for _ in range(30):
            u = rand_unimodular_pm(rng, rng.randint(2, 4)).to_matq()
            assert inverse(u).is_integral()


class TestHnf:
    def test_identity(self):
        assert hnf(MatZ.identity(2)) == MatZ.identity(2)

    def test_shear_reduces_to_identity(self):
        # column reduction by hand: subtract column 1 from column 2
        assert hnf(MatZ([[1, 1], [0, 1]])) == MatZ.identity(2)

    def test_already_hnf(self):
        assert hnf(MatZ([[2, 0], [0, 3]])) == MatZ([[2, 0], [0, 3]])

    def test_singular_raises(self):
        with pytest.raises(SingularMatrix):
            hnf(MatZ([[1, 2], [2, 4]]))

    def _assert_hnf_shape(self, h: MatZ):
        for i in range(h.n):
            assert h.rows[i][i] > 0
            for j in range(i + 1, h.n):
                assert h.rows[i][j] == 0
            for j in range(i):
                assert 0 <= h.rows[i][j] < h.rows[i][i]

    def test_shape_and_lattice_preserved(self):
        rng = random.Random(21)
        for _ in range(40):
            n = rng.randint(1, 4)
            m = MatZ([[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)])
            if m.det() == 0:
                continue
            h = hnf(m)
            self._assert_hnf_shape(h)
            # same column lattice: the change of basis is integer and unimodular
            u = h.to_matq().inverse() @ m.to_matq()
            assert u.is_integral() and abs(u.det()) == 1
            assert abs(h.det()) == abs(m.det())

    def test_idempotent(self):
        rng = random.Random(22)
        for _ in range(20):
            n = rng.randint(1, 4)
            m = MatZ([[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)])
            if m.det() == 0:
                continue
            h = hnf(m)
            assert hnf(h) == h

    def test_canonical_across_presentations(self):
        rng = random.Random(23)
        for _ in range(20):
            n = rng.randint(2, 4)
            m = MatZ([[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)])
            if m.det() == 0:
                continue
            u = rand_unimodular(rng, n)
            assert hnf(m) == hnf(m @ u)


class TestLdl:
    def test_identity(self):
        low, diag = ldl(MatQ.identity(2))
        assert low == MatQ.identity(2)
        assert diag == (1, 1)

    def test_hand_elimination(self):
        # eliminate: pivot 1, multiplier 1, Schur complement 2 - 1 = 1
        low, diag = ldl(MatQ([[1, 1], [1, 2]]))
        assert low == MatQ([[1, 0], [1, 1]])
        assert diag == (1, 1)

    def test_indefinite_zero_pivot_breaks(self):
        with pytest.raises(PivotBreakdown, match="non-positive pivot"):
            ldl(MatQ([[0, 1], [1, 0]]))

    def test_not_symmetric(self):
        with pytest.raises(NotSymmetric):
            ldl(MatQ([[1, 2], [0, 1]]))

    def test_zero_pivot_with_zero_residual_is_fine(self):
        low, diag = ldl(MatQ([[1, 0], [0, 0]]))
        assert diag == (1, 0)
        assert low == MatQ.identity(2)

    def test_negative_pivots_reported(self):
        _, diag = ldl(MatQ([[-2, 0], [0, 3]]))
        assert diag == (-2, 3)
        assert not is_positive_definite(MatQ([[-2, 0], [0, 3]]))

    def test_round_trip(self):
        rng = random.Random(31)
        for _ in range(30):
            n = rng.randint(1, 4)
            t = rand_invertible(rng, n, height=4)
            s = t.transpose() @ t
            low, diag = ldl(s)
            d = MatQ([[diag[i] if i == j else 0 for j in range(n)] for i in range(n)])
            assert low @ d @ low.transpose() == s
            assert all(x > 0 for x in diag)

    def test_positive_definiteness_detects_indefinite(self):
        assert not is_positive_definite(MatQ([[1, 2], [2, 1]]))
        assert is_positive_definite(MatQ([[2, 1], [1, 2]]))


class TestMatrixBasics:
    def test_float_entries_rejected(self):
        with pytest.raises(TypeError):
            MatQ([[0.5, 0], [0, 1]])

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            MatQ([[1, 2, 3], [4, 5, 6]])

    def test_string_entries_parse(self):
        assert MatQ([["1/2", "0"], ["0", "2"]]).rows[0][0] == frac(1, 2)

    def test_matz_requires_integers(self):
        with pytest.raises(ValueError):
            MatZ([[frac(1, 2), 0], [0, 1]])

    def test_from_columns(self):
        m = MatQ.from_columns([[1, 0], [2, 3]])
        assert m.col(1) == (2, 3)

    def test_random_products_stay_exact(self):
        rng = random.Random(41)
        m = rand_matq(rng, 3)
        assert (m + (-m)) == MatQ([[0] * 3 for _ in range(3)])
        assert 2 * m == m + m
