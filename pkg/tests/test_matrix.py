import random
from fractions import Fraction

import pytest

from iterant_lab.matrix import SquareMatrix, scalar_matrix
from iterant_lab.scalars import GaussianRational


def rand_matrix(rng, n, complex_entries=True):
    def cell():
        re = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        im = Fraction(rng.randint(-5, 5), rng.randint(1, 3)) if complex_entries else Fraction(0)
        return GaussianRational(re, im)

    return SquareMatrix(tuple(tuple(cell() for _ in range(n)) for _ in range(n)))


def test_rejects_non_square():
    with pytest.raises(ValueError, match="not square"):
        SquareMatrix.from_rows([[1, 2], [3]])


def test_identity_and_zero():
    assert SquareMatrix.identity(3) * SquareMatrix.identity(3) == SquareMatrix.identity(3)
    assert SquareMatrix.zero(3).is_zero()
    assert scalar_matrix(2, Fraction(3)) == SquareMatrix.diagonal([3, 3])


def test_ring_axioms_random():
    rng = random.Random(70)
    for _ in range(50):
        a, b, c = (rand_matrix(rng, 3) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) - b == a


def test_determinant_against_cofactor_oracle():
    rng = random.Random(71)
    for _ in range(100):
        m = rand_matrix(rng, 3)
        (a, b, c), (d, e, f), (g, h, k) = m.rows
        cofactor = a * (e * k - f * h) - b * (d * k - f * g) + c * (d * h - e * g)
        assert m.determinant() == cofactor


def test_determinant_2x2_and_multiplicative():
    rng = random.Random(72)
    for _ in range(100):
        m = rand_matrix(rng, 2)
        (a, b), (c, d) = m.rows
        assert m.determinant() == a * d - b * c
        w = rand_matrix(rng, 2)
        assert (m * w).determinant() == m.determinant() * w.determinant()


def test_determinant_singular():
    m = SquareMatrix.from_rows([[1, 2], [2, 4]])
    assert m.determinant() == GaussianRational()


def test_transpose_and_conjugate_transpose():
    m = SquareMatrix.from_rows(
        [[GaussianRational(Fraction(1), Fraction(2)), GaussianRational(Fraction(3))],
         [GaussianRational(Fraction(0), Fraction(-1)), GaussianRational(Fraction(5))]]
    )
    assert m.transpose().entry(0, 1) == GaussianRational(Fraction(0), Fraction(-1))
    assert m.conjugate_transpose().entry(0, 1) == GaussianRational(Fraction(0), Fraction(1))
    assert m.conjugate_transpose().conjugate_transpose() == m


def test_trace_is_additive():
    rng = random.Random(73)
    a, b = rand_matrix(rng, 4), rand_matrix(rng, 4)
    assert (a + b).trace() == a.trace() + b.trace()


def test_kron_mixed_product():
    rng = random.Random(74)
    a, b = rand_matrix(rng, 2), rand_matrix(rng, 2)
    c, d = rand_matrix(rng, 2), rand_matrix(rng, 2)
    # (a kron c)(b kron d) = (ab) kron (cd)
    assert a.kron(c) * b.kron(d) == (a * b).kron(c * d)
    assert a.kron(c).n == 4


def test_scale_and_neg():
    m = SquareMatrix.from_rows([[1, -2], [0, 3]])
    assert m.scale(Fraction(1, 2)) + m.scale(Fraction(1, 2)) == m
    assert -m + m == SquareMatrix.zero(2)
    assert 2 * m == m * 2


def test_pow():
    m = SquareMatrix.from_rows([[0, -1], [1, 0]])
    assert m ** 4 == SquareMatrix.identity(2)
    assert m ** 0 == SquareMatrix.identity(2)
    with pytest.raises(ValueError):
        m ** -1


def test_dimension_mismatch():
    with pytest.raises(ValueError, match="dimension mismatch"):
        SquareMatrix.identity(2) * SquareMatrix.identity(3)


def test_json_lists_roundtrip():
    rng = random.Random(75)
    m = rand_matrix(rng, 3)
    assert SquareMatrix.from_lists(m.to_lists()) == m
    # plain-number and string cells are also accepted
    assert SquareMatrix.from_lists([[1, "1/2"], [[3, 4], 0]]) == SquareMatrix.from_rows(
        [[1, Fraction(1, 2)], [Fraction(3, 4), 0]]
    )


def test_str_is_aligned():
    text = str(SquareMatrix.from_rows([[1, -10], [100, 2]]))
    lines = text.splitlines()
    assert len(lines) == 2
    assert len(lines[0]) == len(lines[1])
