import random
from fractions import Fraction

import pytest

from tricochain.algebra import (CommTriAlgebraFD, TriDendAlgebra, basis_vector,
                                verify_comm_tri, verify_tridendriform)


def one_dim_table(c):
    return (((Fraction(c),),),)


def test_one_dim_operations(one_dim):
    e = one_dim.basis(0)
    assert one_dim.op_prec(e, e) == e
    assert one_dim.op_succ(e, e) == e
    assert one_dim.op_dot(e, e) == (Fraction(-1),)
    assert one_dim.total(e, e) == e
    z = one_dim.zero()
    assert one_dim.op_prec(e, z) == z
    assert one_dim.total(z, e) == z


def test_two_dim_operations(two_dim):
    e1, e2 = two_dim.basis(0), two_dim.basis(1)
    assert two_dim.op_prec(e1, e1) == e1
    assert two_dim.op_dot(e2, e2) == (Fraction(0), Fraction(-1))
    # mixed products all vanish
    assert two_dim.op_prec(e1, e2) == two_dim.zero()
    assert two_dim.op_succ(e2, e1) == two_dim.zero()
    assert two_dim.op_dot(e1, e2) == two_dim.zero()
    assert two_dim.total(e1, e2) == two_dim.zero()


def test_dimension_mismatch_raises(one_dim):
    with pytest.raises(ValueError):
        one_dim.op_prec((Fraction(1),), (Fraction(1), Fraction(0)))


def test_fixtures_verify(one_dim, two_dim):
    for alg in (one_dim, two_dim):
        rep = verify_tridendriform(alg)
        assert rep.passed
        assert rep.violations == ()
        assert rep.checked == 8 * alg.dim ** 3


def test_broken_fixture_witnesses(one_dim_broken):
    rep = verify_tridendriform(one_dim_broken)
    assert not rep.passed
    by_axiom = {v.axiom: v for v in rep.violations}
    # with dot flipped to +1 the sum product is 3e, so the nesting identity
    # compares e against 3e at the only basis triple
    v = by_axiom["axiom1"]
    assert v.at == (0, 0, 0)
    assert v.left == (Fraction(1),)
    assert v.right == (Fraction(3),)


def test_broken_two_dim_violates_axiom4(two_dim_broken):
    rep = verify_tridendriform(two_dim_broken)
    assert not rep.passed
    hits = [v for v in rep.violations if v.axiom == "axiom4"]
    assert hits
    assert (0, 1, 1) in {v.at for v in hits}


def test_every_sign_flip_is_caught(one_dim):
    # flipping the sign of any single structure constant must break something
    for field in ("prec", "succ", "dot"):
        tables = {k: getattr(one_dim, k) for k in ("prec", "succ", "dot")}
        tables[field] = one_dim_table(-tables[field][0][0][0])
        mutated = TriDendAlgebra(dim=1, **tables)
        assert not verify_tridendriform(mutated).passed


def test_random_elements_satisfy_identities(one_dim, two_dim):
    # bilinearity: basis triples passing implies arbitrary triples pass;
    # spot-check that on seeded random rational vectors
    rng = random.Random(99)
    for alg in (one_dim, two_dim):
        for _ in range(100):
            x, y, z = (tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(alg.dim))
                       for _ in range(3))
            assert alg.op_prec(alg.op_prec(x, y), z) == alg.op_prec(x, alg.total(y, z))
            assert alg.op_succ(x, alg.op_dot(y, z)) == alg.op_dot(alg.op_succ(x, y), z)
            assert alg.total(alg.total(x, y), z) == alg.total(x, alg.total(y, z))


def test_verify_comm_tri():
    ok = CommTriAlgebraFD(dim=1, star=one_dim_table(1), bullet=one_dim_table(1))
    rep = verify_comm_tri(ok)
    assert rep.passed
    # x*x = x with x.x = 2x breaks compatibility
    bad = CommTriAlgebraFD(dim=1, star=one_dim_table(1), bullet=one_dim_table(2))
    rep = verify_comm_tri(bad)
    assert not rep.passed
    assert {v.axiom for v in rep.violations} & {"compat_star_bullet", "compat_bullet_star", "bullet_assoc"}
    zero = CommTriAlgebraFD(dim=1, star=one_dim_table(0), bullet=one_dim_table(0))
    assert verify_comm_tri(zero).passed


def test_axiom_report_to_dict(one_dim_broken):
    rep = verify_tridendriform(one_dim_broken)
    d = rep.to_dict()
    assert d["passed"] is False
    assert d["violation_count"] == len(rep.violations)
    assert d["violations"][0]["axiom"].startswith("axiom")
    assert isinstance(d["violations"][0]["left"], list)


def test_zero_dimensional_algebra():
    empty = TriDendAlgebra(dim=0, prec=(), succ=(), dot=())
    rep = verify_tridendriform(empty)
    assert rep.passed and rep.checked == 0


def test_basis_vector_bounds():
    assert basis_vector(2, 1) == (Fraction(0), Fraction(1))
    with pytest.raises(ValueError):
        basis_vector(2, 2)
