from fractions import Fraction

import pytest

from tricochain.freemodel import ComTriMonomial, generator
from tricochain.tensoralg import (TensorElement, check_associativity,
                                  generator_basis_triples, random_tensor_triples,
                                  tensor_product, triples_max_degree)


def pure(i, k, c=1):
    return TensorElement.pure(generator(i), k, c)


def test_tensor_element_arithmetic():
    u = pure(1, 0) + pure(1, 0)
    assert u == pure(1, 0, 2)
    assert (u - u) == TensorElement.zero()
    assert not (u - u)
    assert Fraction(1, 2) * u == pure(1, 0)
    v = TensorElement.from_vector(generator(2), (Fraction(0), Fraction(3)))
    assert v == TensorElement.pure(generator(2), 1, 3)
    assert u.max_degree() == 1


def test_product_of_generators_one_dim(one_dim):
    # x1(x)e times x2(x)e: three terms, the bullet one negated
    t = tensor_product(one_dim, pure(1, 0), pure(2, 0))
    assert t.terms == {
        (ComTriMonomial((1,), (2,)), 0): Fraction(1),
        (ComTriMonomial((2,), (1,)), 0): Fraction(1),
        (ComTriMonomial((1, 2)), 0): Fraction(-1),
    }
    assert t.render() == "x1*x2@e0 - (x1.x2)@e0 + x2*x1@e0"


def test_product_mixed_basis_two_dim_vanishes(two_dim):
    # all mixed basis products of the diagonal fixture vanish
    assert tensor_product(two_dim, pure(1, 0), pure(2, 1)) == TensorElement.zero()
    t = tensor_product(two_dim, pure(1, 1), pure(2, 1))
    assert (ComTriMonomial((1, 2)), 1) in t.terms


def test_product_with_zero_and_bilinearity(one_dim):
    u = pure(1, 0, Fraction(2, 3))
    assert tensor_product(one_dim, u, TensorElement.zero()) == TensorElement.zero()
    v, w = pure(2, 0), pure(3, 0, -2)
    lhs = tensor_product(one_dim, u, v + w)
    rhs = tensor_product(one_dim, u, v) + tensor_product(one_dim, u, w)
    assert lhs == rhs


def test_index_validation(one_dim):
    with pytest.raises(ValueError):
        tensor_product(one_dim, pure(1, 1), pure(2, 0))


def test_exhaustive_generator_triples(one_dim, two_dim):
    for alg in (one_dim, two_dim):
        triples = generator_basis_triples(alg)
        assert len(triples) == 27 * alg.dim ** 3
        rep = check_associativity(alg, triples)
        assert rep.passed
        assert rep.checked == len(triples)


def test_random_triples_associative(one_dim, two_dim):
    for alg in (one_dim, two_dim):
        triples = random_tensor_triples(alg, 60, max_degree=3, seed=7)
        assert len(triples) == 60
        assert triples_max_degree(triples) <= 3
        assert check_associativity(alg, triples).passed


def test_random_triples_deterministic(one_dim):
    a = random_tensor_triples(one_dim, 10, seed=5)
    b = random_tensor_triples(one_dim, 10, seed=5)
    assert all(x == y for ta, tb in zip(a, b) for x, y in zip(ta, tb))
    c = random_tensor_triples(one_dim, 10, seed=6)
    assert any(x != y for ta, tc in zip(a, c) for x, y in zip(ta, tc))


def test_broken_algebra_fails_with_witness(two_dim_broken):
    rep = check_associativity(two_dim_broken, generator_basis_triples(two_dim_broken))
    assert not rep.passed
    # the axiom-4 break shows up on a concrete generator triple
    v = rep.violations[0]
    assert v.axiom == "tensor_assoc"
    assert v.left != v.right


def test_seven_identity_decomposition(two_dim_broken):
    # the associator on generator triples decomposes over the P(I) monomials
    # into exactly the seven identities; axiom 4 broken at (e1,e2,e2) must
    # surface in the ({2,3}) component of the triple (x1@e0, x2@e1, x3@e1)
    u, v, w = pure(1, 0), pure(2, 1), pure(3, 1)
    lhs = tensor_product(two_dim_broken, tensor_product(two_dim_broken, u, v), w)
    rhs = tensor_product(two_dim_broken, u, tensor_product(two_dim_broken, v, w))
    diff = lhs - rhs
    assert diff
    assert any(mono == ComTriMonomial((2, 3), (1,)) for mono, _ in diff.terms)


def test_report_render_strings(one_dim):
    t = tensor_product(one_dim, pure(1, 0), pure(2, 0))
    assert "@e0" in t.render()
    assert TensorElement.zero().render() == "0"
