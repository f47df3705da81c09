import random
from fractions import Fraction

import pytest

from exacthom.errors import ShapeError
from exacthom.rational import RationalMatrix, block_diag, rat


def rows(*data):
    return RationalMatrix.from_rows(data)


class TestRank:
    def test_identity(self):
        assert RationalMatrix.identity(2).rank() == 2

    def test_dependent_rows(self):
        assert rows([1, 2], [2, 4]).rank() == 1

    def test_zero(self):
        assert RationalMatrix.zero(3, 4).rank() == 0

    def test_transpose_preserves_rank(self):
        rng = random.Random(4)
        for _ in range(30):
            r, c = rng.randint(0, 3), rng.randint(0, 3)
            m = RationalMatrix(r, c, [rng.randint(-3, 3) for _ in range(r * c)])
            assert m.rank() == m.transpose().rank()


class TestKernel:
    def test_injective_map_has_empty_kernel(self):
        k = RationalMatrix.identity(2).kernel_basis()
        assert (k.rows, k.cols) == (2, 0)

    def test_one_dimensional_kernel(self):
        # free column gets coefficient 1, pivot column the negated entry
        k = rows([1, 1]).kernel_basis()
        assert k.cols == 1
        assert k.entries() == (Fraction(-1), Fraction(1))

    def test_product_with_kernel_vanishes(self):
        """Oracle: m times its kernel basis is zero and the count matches rank."""
        m = rows([1, 2], [2, 4])
        k = m.kernel_basis()
        assert (m @ k).is_zero()
        assert k.cols == m.cols - m.rank()
        assert k.rank() == k.cols

    def test_random_kernels(self):
        rng = random.Random(11)
        for _ in range(40):
            r, c = rng.randint(0, 3), rng.randint(0, 4)
            m = RationalMatrix(r, c, [rng.randint(-2, 2) for _ in range(r * c)])
            k = m.kernel_basis()
            assert (m @ k).is_zero()
            assert k.cols == c - m.rank()
            assert k.rank() == k.cols


class TestMultiply:
    def test_identity_neutral(self):
        m = rows([1, 2], [3, 4])
        assert RationalMatrix.identity(2) @ m == m

    def test_zero_absorbs(self):
        m = rows([1, 2], [3, 4])
        assert (m @ RationalMatrix.zero(2, 3)).is_zero()

    def test_involution(self):
        swap = rows([0, 1], [1, 0])
        assert swap @ swap == RationalMatrix.identity(2)

    def test_shape_mismatch(self):
        with pytest.raises(ShapeError):
            rows([1, 2]) @ rows([1, 2])

    def test_rank_of_product_bounded(self):
        rng = random.Random(7)
        for _ in range(30):
            a = RationalMatrix(2, 3, [rng.randint(-2, 2) for _ in range(6)])
            b = RationalMatrix(3, 2, [rng.randint(-2, 2) for _ in range(6)])
            assert (a @ b).rank() <= min(a.rank(), b.rank())


class TestTranspose:
    def test_involution(self):
        m = rows([1, 2], [3, 4])
        assert m.transpose().transpose() == m

    def test_values(self):
        assert rows([1, 2], [3, 4]).transpose() == rows([1, 3], [2, 4])

    def test_zero_shape(self):
        t = RationalMatrix.zero(2, 3).transpose()
        assert (t.rows, t.cols) == (3, 2) and t.is_zero()


class TestInvertible:
    def test_identity(self):
        assert RationalMatrix.identity(3).is_invertible()

    def test_rank_deficient(self):
        assert not rows([1, 2], [2, 4]).is_invertible()

    def test_non_square(self):
        assert not RationalMatrix.zero(2, 3).is_invertible()

    def test_empty_matrix_is_invertible(self):
        # the unique map on the zero space is its own inverse
        assert RationalMatrix.zero(0, 0).is_invertible()


def test_exact_arithmetic_no_drift():
    third = rat("1/3")
    m = RationalMatrix(1, 1, [third])
    acc = m
    for _ in range(30):
        acc = acc + m
    assert acc[0, 0] == Fraction(31, 3)


def test_entry_reduction_invariant():
    m = rows(["2/4", "3/6"])
    assert m[0, 0] == Fraction(1, 2) and m[0, 1] == Fraction(1, 2)
    assert all(x.denominator > 0 for x in m.entries())


def test_scale_and_add():
    m = rows([1, 2], [3, 4])
    assert 2 * m - m == m
    assert (m - m).is_zero()


def test_block_diag():
    a = rows([1])
    b = rows([2, 0], [0, 3])
    d = block_diag(a, b)
    assert d.rows == 3 and d.cols == 3
    assert d[0, 0] == 1 and d[1, 1] == 2 and d[2, 2] == 3
    assert d[0, 1] == 0 and d[1, 0] == 0


def test_block_diag_degenerate():
    a = RationalMatrix.zero(0, 2)
    b = rows([5])
    d = block_diag(a, b)
    assert (d.rows, d.cols) == (1, 3)
    assert d[0, 2] == 5


def test_bad_entry_count():
    with pytest.raises(ShapeError):
        RationalMatrix(2, 2, [1, 2, 3])


def test_ragged_rows_rejected():
    with pytest.raises(ShapeError):
        RationalMatrix.from_rows([[1, 2], [3]])
