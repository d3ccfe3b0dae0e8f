import random
from fractions import Fraction

import pytest

from iterant_lab import groups
from iterant_lab.iterants import (
    an_basis,
    conjugate_period2,
    determinant_period2,
    element_from_json,
    format_period2,
    imaginary_unit,
    natural_sn_algebra,
    parse_period2,
    period_two_algebra,
    polarity_element,
    regular_algebra,
    shift_element,
)
from iterant_lab.scalars import GaussianRational


def rand_element(algebra, rng, max_terms=3, span=4):
    total = algebra.zero()
    for _ in range(rng.randint(1, max_terms)):
        vec = [Fraction(rng.randint(-span, span)) for _ in range(algebra.degree)]
        total = total + algebra.term(vec, rng.randrange(algebra.group.order))
    return total


def test_add_componentwise():
    alg = period_two_algebra()
    assert alg.vector([1, 2]) + alg.vector([3, 4]) == alg.vector([4, 6])


def test_add_zero_identity():
    alg = period_two_algebra()
    x = alg.term([1, 2], "e") + alg.vector([5, -1])
    assert x + alg.zero() == x


def test_add_merges_like_terms():
    alg = period_two_algebra()
    assert alg.term([1, 0], "e") + alg.term([0, 1], "e") == alg.term([1, 1], "e")


def test_mul_componentwise_on_identity_terms():
    alg = period_two_algebra()
    assert alg.vector([2, 3]) * alg.vector([5, 7]) == alg.vector([10, 21])


def test_imaginary_unit_squares_to_minus_one():
    alg = period_two_algebra()
    for first in (-1, 1):
        i = imaginary_unit(first=first)
        assert i * i == alg.scalar(-1)
    assert imaginary_unit() ** 4 == alg.one()


def test_imaginary_unit_rotates_vectors():
    alg = period_two_algebra()
    i = imaginary_unit()
    # i [a,b] = [-b, a] e for a=3, b=5
    assert i * alg.vector([3, 5]) == alg.term([-5, 3], "e")


def test_shift_relations():
    alg = period_two_algebra()
    e = shift_element()
    assert e * e == alg.one()
    rng = random.Random(7)
    for _ in range(100):
        a, b = Fraction(rng.randint(-5, 5)), Fraction(rng.randint(-5, 5))
        assert alg.vector([a, b]) * e == e * alg.vector([b, a])


def test_shift_commutes_past_reversed_vector_times_anything():
    alg = period_two_algebra()
    e = shift_element()
    rng = random.Random(8)
    for _ in range(50):
        b, c = Fraction(rng.randint(-5, 5)), Fraction(rng.randint(-5, 5))
        x = rand_element(alg, rng)
        assert (alg.vector([b, c]) * e) * x == (e * alg.vector([c, b])) * x


def test_polarity_anticommutes_with_shift():
    eps = polarity_element()
    eta = shift_element()
    assert (eps * eta + eta * eps).is_zero()
    assert eps * eps == eps.algebra.one()


def test_period3_shift_relation():
    alg = regular_algebra(groups.cyclic(3))
    s = alg.element_of("S")
    assert alg.vector([2, 3, 5]) * s == s * alg.vector([5, 2, 3])
    t = s * s
    assert alg.vector([2, 3, 5]) * t == t * alg.vector([3, 5, 2])
    assert s * s * s == alg.one()


def test_conjugate_and_determinant_example():
    alg = period_two_algebra()
    z = alg.vector([1, 2]) + alg.term([3, 4], "e")
    # D(Z) = ab - cd = 1*2 - 3*4 = -10
    assert determinant_period2(z) == GaussianRational(Fraction(-10))
    assert conjugate_period2(alg.one()) == alg.one()
    assert conjugate_period2(conjugate_period2(z)) == z


def test_determinant_multiplicative():
    alg = period_two_algebra()
    rng = random.Random(9)
    for _ in range(100):
        z, w = rand_element(alg, rng), rand_element(alg, rng)
        assert determinant_period2(z * w) == determinant_period2(z) * determinant_period2(w)


def test_conjugate_product_antihomomorphism():
    alg = period_two_algebra()
    rng = random.Random(10)
    for _ in range(50):
        z, w = rand_element(alg, rng), rand_element(alg, rng)
        assert conjugate_period2(z * w) == conjugate_period2(w) * conjugate_period2(z)
        assert conjugate_period2(z + w) == conjugate_period2(z) + conjugate_period2(w)


def test_conjugate_requires_period_two():
    a3 = natural_sn_algebra(3)
    with pytest.raises(ValueError):
        conjugate_period2(a3.one())


@pytest.mark.parametrize("n,count", [(1, 1), (2, 4), (3, 18)])
def test_an_basis_size(n, count):
    assert len(an_basis(n)) == count
    assert natural_sn_algebra(n).dimension() == count


def test_an_basis_size_limit():
    with pytest.raises(ValueError):
        an_basis(6)


def test_associativity_across_algebras():
    rng = random.Random(11)
    algebras = [
        period_two_algebra(),
        regular_algebra(groups.cyclic(3)),
        regular_algebra(groups.symmetric(3)),
        natural_sn_algebra(3),
    ]
    for alg in algebras:
        for _ in range(500):
            x, y, z = (rand_element(alg, rng, 2) for _ in range(3))
            assert (x * y) * z == x * (y * z)


def test_distributivity():
    rng = random.Random(12)
    alg = natural_sn_algebra(3)
    for _ in range(100):
        x, y, z = (rand_element(alg, rng) for _ in range(3))
        assert x * (y + z) == x * y + x * z
        assert (y + z) * x == y * x + z * x


def test_spacetime_polarity_product_form():
    # with s = [-1,1] of square one, (t + x s)(t' + x' s) = (tt'+xx') + (tx'+xt') s,
    # and t + x s is the light-cone pair [t-x, t+x]
    alg = period_two_algebra()
    sigma = polarity_element()
    rng = random.Random(15)
    for _ in range(100):
        t, x, t2, x2 = (Fraction(rng.randint(-9, 9)) for _ in range(4))
        lhs = (alg.scalar(t) + x * sigma) * (alg.scalar(t2) + x2 * sigma)
        rhs = alg.scalar(t * t2 + x * x2) + (t * x2 + x * t2) * sigma
        assert lhs == rhs
        assert alg.scalar(t) + x * sigma == alg.vector([t - x, t + x])


def test_rescaling_pair_preserves_component_product():
    # T[a,b] = [k a, b/k] leaves the componentwise product ab unchanged
    alg = period_two_algebra()
    rng = random.Random(13)
    for _ in range(100):
        a, b = Fraction(rng.randint(-9, 9)), Fraction(rng.randint(-9, 9))
        k = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        boosted = alg.vector([k * a, b / k])
        product = boosted.coefficient("1")[0] * boosted.coefficient("1")[1]
        assert product == a * b


def test_algebra_mismatch_raises():
    x = period_two_algebra().one()
    y = natural_sn_algebra(3).one()
    with pytest.raises(ValueError, match="algebra mismatch"):
        x + y
    with pytest.raises(ValueError, match="algebra mismatch"):
        x * y


def test_equal_algebras_built_separately_interoperate():
    first = regular_algebra(groups.cyclic(3))
    second = regular_algebra(groups.cyclic(3))
    assert first.vector([1, 2, 3]) + second.vector([1, 0, 0]) == first.vector([2, 2, 3])
    assert second.element_of("S") * first.element_of("S") == first.element_of("S^2")


def test_period2_text_roundtrip():
    alg = period_two_algebra()
    z = alg.vector([Fraction(1, 2), -2]) + alg.term([3, Fraction(-4, 3)], "e")
    assert parse_period2(format_period2(z)) == z
    assert format_period2(alg.zero()) == "0"
    assert parse_period2("[1,2] + [3,4]e") == alg.vector([1, 2]) + alg.term([3, 4], "e")
    assert parse_period2("-[1,0]e") == alg.term([-1, 0], "e")


def test_json_roundtrip():
    alg = natural_sn_algebra(3)
    rng = random.Random(14)
    x = rand_element(alg, rng)
    assert element_from_json(alg, x.to_json()) == x


def test_vector_length_is_checked():
    with pytest.raises(ValueError, match="length"):
        period_two_algebra().vector([1, 2, 3])
