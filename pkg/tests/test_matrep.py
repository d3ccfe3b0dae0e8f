import random
from fractions import Fraction

import pytest

from iterant_lab import groups, matrep
from iterant_lab.groups import Permutation, natural_action, regular_action
from iterant_lab.iterants import (
    determinant_period2,
    natural_sn_algebra,
    period_two_algebra,
    regular_algebra,
    term_by_permutation,
)
from iterant_lab.matrix import SquareMatrix
from iterant_lab.scalars import GaussianRational


def rand_element(algebra, rng, max_terms=3, span=4):
    total = algebra.zero()
    for _ in range(rng.randint(1, max_terms)):
        vec = [Fraction(rng.randint(-span, span)) for _ in range(algebra.degree)]
        total = total + algebra.term(vec, rng.randrange(algebra.group.order))
    return total


def rand_matrix(rng, n, span=5):
    return SquareMatrix.from_rows(
        [[Fraction(rng.randint(-span, span), rng.randint(1, 3)) for _ in range(n)]
         for _ in range(n)]
    )


def test_to_matrix_period_two_layout():
    alg = period_two_algebra()
    z = alg.vector([1, 4]) + alg.term([2, 3], "e")
    assert matrep.to_matrix(z) == SquareMatrix.from_rows([[1, 2], [3, 4]])


def test_to_matrix_period_three_layout():
    alg = regular_algebra(groups.cyclic(3))
    a, b, c, d, e, f, g, h, k = (Fraction(v) for v in (1, 2, 3, 4, 5, 6, 7, 8, 9))
    s = "S"
    z = (
        alg.vector([a, b, c])
        + alg.term([d, e, f], s)
        + alg.term([g, h, k], "S^2")
    )
    expected = SquareMatrix.from_rows([[a, d, g], [h, b, e], [f, k, c]])
    assert matrep.to_matrix(z) == expected


def test_to_matrix_identity():
    for alg in (period_two_algebra(), natural_sn_algebra(3)):
        assert matrep.to_matrix(alg.one()) == SquareMatrix.identity(alg.degree)


def test_to_matrix_is_homomorphism():
    rng = random.Random(20)
    algebras = [
        period_two_algebra(),
        regular_algebra(groups.cyclic(3)),
        regular_algebra(groups.symmetric(3)),
        natural_sn_algebra(3),
    ]
    for alg in algebras:
        for _ in range(100):
            x, y = rand_element(alg, rng), rand_element(alg, rng)
            assert matrep.to_matrix(x * y) == matrep.to_matrix(x) * matrep.to_matrix(y)
            assert matrep.to_matrix(x + y) == matrep.to_matrix(x) + matrep.to_matrix(y)


def test_embed_all_ones_matrix():
    m = SquareMatrix.from_rows([[1] * 3 for _ in range(3)])
    element = matrep.embed_matrix(m)
    assert len(element.terms) == 6
    half = GaussianRational(Fraction(1, 2))
    for _, vec in element.terms:
        assert vec == (half, half, half)


def test_embed_identity_2x2():
    element = matrep.embed_matrix(SquareMatrix.identity(2))
    alg = natural_sn_algebra(2)
    assert element == alg.vector([1, 1])


def test_section_property():
    rng = random.Random(21)
    for n in (2, 3, 4):
        for _ in range(34):
            m = rand_matrix(rng, n)
            assert matrep.to_matrix(matrep.embed_matrix(m)) == m


def test_decompose_zero_matrix():
    terms = matrep.decompose_matrix(SquareMatrix.zero(3))
    assert all(all(c.is_zero() for c in t.diag) for t in terms)


def test_decompose_reassembles_random_4x4():
    rng = random.Random(22)
    for _ in range(25):
        m = rand_matrix(rng, 4)
        terms = matrep.decompose_matrix(m)
        assert len(terms) == 24
        assert matrep.reassemble(terms, 4) == m


def test_decompose_worked_3x3():
    m = SquareMatrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    got = {
        t.perm.cycle_string(): tuple(int(c.re) for c in t.diag)
        for t in matrep.decompose_matrix(m)
    }
    assert got == {
        "()": (1, 5, 9),
        "(123)": (2, 6, 7),
        "(132)": (3, 4, 8),
        "(23)": (1, 6, 8),
        "(13)": (3, 5, 7),
        "(12)": (2, 4, 9),
    }
    # the six diagonal-times-permutation products add to 2! times the matrix
    total = SquareMatrix.zero(3)
    for t in matrep.decompose_matrix(m):
        total = total + SquareMatrix.diagonal(t.diag) * groups.perm_matrix(t.perm)
    assert total == m.scale(2)


def test_size_limit():
    with pytest.raises(ValueError, match="n <= 5"):
        matrep.embed_matrix(SquareMatrix.identity(6))
    with pytest.raises(ValueError, match="n <= 5"):
        matrep.decompose_matrix(SquareMatrix.identity(6))


def test_kernel_single_transposition_element():
    alg = natural_sn_algebra(3)
    e1 = [1, 0, 0]
    x = alg.vector(e1) - term_by_permutation(alg, e1, Permutation.from_cycles(3, "(23)"))
    report = matrep.kernel_test(x)
    assert report.in_kernel
    assert report.criteria_agree
    assert x * x == 2 * x


def test_kernel_circulant_difference():
    alg = natural_sn_algebra(3)
    perm = Permutation.from_cycles
    a, b, c = Fraction(1), Fraction(2), Fraction(3)
    y = (
        alg.scalar(a)
        + term_by_permutation(alg, [b] * 3, perm(3, "(123)"))
        + term_by_permutation(alg, [c] * 3, perm(3, "(132)"))
        - term_by_permutation(alg, [c, a, b], perm(3, "(13)"))
        - term_by_permutation(alg, [b, c, a], perm(3, "(12)"))
        - term_by_permutation(alg, [a, b, c], perm(3, "(23)"))
    )
    assert matrep.kernel_test(y).in_kernel


def test_kernel_nine_parameter_family():
    alg = natural_sn_algebra(3)
    perm = Permutation.from_cycles
    rng = random.Random(23)
    for _ in range(25):
        x, y, z, w, t, r, s, p, q = (Fraction(rng.randint(-5, 5)) for _ in range(9))
        elem = (
            alg.vector([x, y, z])
            + term_by_permutation(alg, [-x, w, t], perm(3, "(23)"))
            + term_by_permutation(alg, [r, -y, s], perm(3, "(13)"))
            + term_by_permutation(alg, [p, q, -z], perm(3, "(12)"))
            + term_by_permutation(alg, [-p, -w, -s], perm(3, "(123)"))
            + term_by_permutation(alg, [-r, -q, -t], perm(3, "(132)"))
        )
        assert matrep.kernel_test(elem).in_kernel


def test_kernel_criteria_agree_on_random_elements():
    alg = natural_sn_algebra(3)
    rng = random.Random(24)
    for _ in range(100):
        report = matrep.kernel_test(rand_element(alg, rng, max_terms=4))
        assert report.criteria_agree


def test_conjugate_matrix_is_classical_adjoint():
    from iterant_lab.iterants import conjugate_period2, shift_element

    alg = period_two_algebra()
    rng = random.Random(26)
    for _ in range(50):
        z = rand_element(alg, rng)
        m = matrep.to_matrix(z)
        adj = matrep.to_matrix(conjugate_period2(z))
        # adjugate property: M adj(M) = adj(M) M = det(M) I
        det = m.determinant()
        assert m * adj == SquareMatrix.identity(2).scale(det)
        assert adj * m == SquareMatrix.identity(2).scale(det)
    # the bare shift conjugates to its negative
    e = shift_element()
    assert conjugate_period2(e) == -e


def test_determinant_bridge():
    alg = period_two_algebra()
    rng = random.Random(25)
    for _ in range(100):
        z = rand_element(alg, rng)
        assert determinant_period2(z) == matrep.to_matrix(z).determinant()


def test_iso_check_cyclic_regular():
    report = matrep.iso_check(regular_action(groups.cyclic(3)), samples=50)
    assert report.isomorphism
    assert report.algebra_dim == 9 == report.matrix_dim


def test_iso_check_s3_regular():
    report = matrep.iso_check(regular_action(groups.symmetric(3)), samples=30)
    assert report.isomorphism
    assert report.matrix_dim == 36


def test_iso_check_natural_action_not_faithful():
    report = matrep.iso_check(natural_action(3), samples=50)
    assert report.homomorphism_ok
    assert not report.injective_on_basis
    assert report.algebra_dim == 18
    assert report.matrix_dim == 9
    assert report.spans_matrix_algebra
    assert not report.isomorphism
