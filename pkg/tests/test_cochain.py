import random
from fractions import Fraction
from itertools import product

import pytest

from tricochain.algebra import TriDendAlgebra, basis_vector
from tricochain.cochain import (TriCochain, basis_cochain, check_commutation,
                                check_injectivity, check_roundtrip, cochain_cells,
                                cochain_from_json, cochain_to_json, extract,
                                generator_inputs, hoch_delta_on_psi, hochschild_matrix,
                                p_of, psi_eval, psi_eval_tensors, psi_matrix,
                                tri_delta, tri_delta_explicit)
from tricochain.exactlin import rank
from tricochain.freemodel import ComTriMonomial, generator, p_monomial, subsets_ordered
from tricochain.tensoralg import TensorElement

F = Fraction


def cochain_1d(degree, values):
    # values: map subset -> rational, on the unique basis tuple
    alg = TriDendAlgebra(dim=1, prec=(((F(1),),),), succ=(((F(1),),),), dot=(((F(-1),),),))
    jt = (0,) * degree
    return TriCochain(alg, degree, {(s, jt): (F(v),) for s, v in values.items()})


def test_tricochain_validation(one_dim):
    with pytest.raises(ValueError):
        TriCochain(one_dim, 0)
    with pytest.raises(ValueError):
        TriCochain(one_dim, 1, {((2,), (0,)): (F(1),)})
    with pytest.raises(ValueError):
        TriCochain(one_dim, 1, {((1,), (1,)): (F(1),)})
    with pytest.raises(ValueError):
        TriCochain(one_dim, 1, {((1,), (0,)): (F(1), F(2))})
    # zero coefficients are dropped
    g = TriCochain(one_dim, 1, {((1,), (0,)): (F(0),)})
    assert g.coeffs == {}


def test_eval_b_multilinear(two_dim):
    g = TriCochain(two_dim, 1, {((1,), (0,)): (F(1), F(0)), ((1,), (1,)): (F(0), F(2))})
    b = (F(3), F(5))
    assert g.eval_b((1,), (b,)) == (F(3), F(10))


def test_cells_and_dims():
    assert len(cochain_cells(1, 1)) == 1
    assert len(cochain_cells(2, 1)) == 3
    assert len(cochain_cells(3, 1)) == 7
    assert len(cochain_cells(1, 2)) == 4
    assert len(cochain_cells(2, 2)) == 24
    assert len(cochain_cells(3, 2)) == 112
    # canonical order starts with the singleton subsets
    assert cochain_cells(2, 1)[0] == ((1,), (0, 0), 0)


def test_p_of_general_monomials():
    a = [ComTriMonomial((1,), (2,)), ComTriMonomial((3,))]
    # block over slot 2 starred with slot 1
    assert p_of(a, (2,)) == ComTriMonomial((3,), (1, 2))
    assert p_of(a, (1, 2)) == ComTriMonomial((1, 3), (2,))
    gens = [generator(i) for i in (1, 2, 3)]
    for s in subsets_ordered(3):
        assert p_of(gens, s) == p_monomial(3, s)


def test_psi_eval_degree1(one_dim):
    g = cochain_1d(1, {(1,): F(3, 2)})
    t = psi_eval(g, generator_inputs(1, (0,)))
    assert t == TensorElement.pure(generator(1), 0, F(3, 2))


def test_psi_eval_degree2(one_dim):
    g = cochain_1d(2, {(1,): 2, (2,): 5, (1, 2): 7})
    t = psi_eval(g, generator_inputs(1, (0, 0)))
    assert t.terms == {
        (p_monomial(2, (1,)), 0): F(2),
        (p_monomial(2, (2,)), 0): F(5),
        (p_monomial(2, (1, 2)), 0): F(7),
    }


def test_psi_eval_zero_and_linearity(two_dim):
    z = TriCochain.zero(two_dim, 2)
    assert psi_eval(z, generator_inputs(2, (0, 1))) == TensorElement.zero()
    rng = random.Random(4)
    cells = cochain_cells(2, 2)
    for _ in range(10):
        c1, c2 = rng.choice(cells), rng.choice(cells)
        lam = F(rng.randint(-5, 5), rng.randint(1, 3))
        g1, g2 = basis_cochain(two_dim, 2, c1), basis_cochain(two_dim, 2, c2)
        combo = g1.scale(lam) + g2
        jt = tuple(rng.randrange(2) for _ in range(2))
        inputs = generator_inputs(2, jt)
        assert psi_eval(combo, inputs) == lam * psi_eval(g1, inputs) + psi_eval(g2, inputs)


def test_psi_eval_tensors_expands_slots(one_dim):
    g = cochain_1d(1, {(1,): 1})
    slot = TensorElement.pure(generator(1), 0, 2) + TensorElement.pure(generator(2), 0, -3)
    t = psi_eval_tensors(g, [slot])
    assert t == TensorElement.pure(generator(1), 0, 2) + TensorElement.pure(generator(2), 0, -3)


def test_hoch_delta_degree1_matches_display(one_dim):
    # coboundary of g(b) = lambda*b lands on the three-term combination
    lam = F(3, 2)
    g = cochain_1d(1, {(1,): lam})
    h = hoch_delta_on_psi(g, generator_inputs(1, (0, 0)))
    assert h.terms == {
        (p_monomial(2, (1,)), 0): lam,
        (p_monomial(2, (2,)), 0): lam,
        (p_monomial(2, (1, 2)), 0): -lam,
    }


def test_hoch_delta_degree2_matches_display(one_dim):
    a, b, c = F(2), F(5), F(7)
    g = cochain_1d(2, {(1,): a, (2,): b, (1, 2): c})
    h = hoch_delta_on_psi(g, generator_inputs(1, (0, 0, 0)))
    comp = extract(h, 3, 1)
    expected = {s: (F(0),) for s in subsets_ordered(3)}
    expected[(1,)] = (b + c,)
    expected[(3,)] = (-(a + c),)
    expected[(1, 3)] = (a - b,)
    assert comp == expected


def test_degree2_cocycle_killed(one_dim):
    g = cochain_1d(2, {(1,): 1, (2,): 1, (1, 2): -1})
    assert hoch_delta_on_psi(g, generator_inputs(1, (0, 0, 0))) == TensorElement.zero()


def test_extract_roundtrip_and_errors(one_dim, two_dim):
    for alg in (one_dim, two_dim):
        for n in (1, 2):
            assert check_roundtrip(alg, n).passed
    assert extract(TensorElement.zero(), 2, 1) == {s: (F(0),) for s in subsets_ordered(2)}
    stray = TensorElement.pure(ComTriMonomial((1, 1)), 0)
    with pytest.raises(ValueError):
        extract(stray, 2, 1)
    with pytest.raises(ValueError):
        extract(TensorElement.pure(p_monomial(2, (1,)), 3), 2, 1)


def test_tri_delta_degree1_values(one_dim):
    lam = F(4, 3)
    g = cochain_1d(1, {(1,): lam})
    dg = tri_delta(g)
    jt = (0, 0)
    assert dg.coeffs == {((1,), jt): (lam,), ((2,), jt): (lam,), ((1, 2), jt): (-lam,)}


def test_explicit_matches_extraction(one_dim, two_dim):
    for alg in (one_dim, two_dim):
        for n in (1, 2):
            for cell in cochain_cells(n, alg.dim):
                g = basis_cochain(alg, n, cell)
                assert tri_delta(g).coeffs == tri_delta_explicit(g).coeffs


def test_explicit_rejects_high_degree(one_dim):
    g = cochain_1d(3, {(1,): 1})
    with pytest.raises(ValueError):
        tri_delta_explicit(g)


def test_commutation(one_dim, two_dim):
    for alg in (one_dim, two_dim):
        for n in (1, 2):
            assert check_commutation(alg, n, explicit=True).passed
            assert check_commutation(alg, n).passed
    assert check_commutation(one_dim, 3).passed


def test_injectivity(one_dim, two_dim):
    for n in (1, 2, 3):
        assert check_injectivity(one_dim, n)
    for n in (1, 2):
        assert check_injectivity(two_dim, n)
    m = psi_matrix(two_dim, 2)
    # on generator inputs the evaluation matrix is a permutation matrix
    assert (m.rows, m.cols) == (24, 24)
    assert rank(m) == 24
    empty = TriDendAlgebra(dim=0, prec=(), succ=(), dot=())
    assert check_injectivity(empty, 2)


def test_cochain_json_roundtrip(two_dim):
    g = TriCochain(two_dim, 2, {((1,), (0, 1)): (F(1, 2), F(0)), ((1, 2), (1, 1)): (F(-3), F(7))})
    rows = cochain_to_json(g)
    assert all(isinstance(x, str) for _, _, vec in rows for x in vec)
    back = cochain_from_json(two_dim, 2, rows)
    assert back == g
    assert cochain_to_json(back) == rows


def test_hochschild_matrix_one_dim_idempotent():
    # A = span{x}, x*x = x: delta^1 is the 1x1 identity, so rank 1, kernel 0
    table = (((F(1),),),)
    m = hochschild_matrix(table, 1)
    assert (m.rows, m.cols) == (1, 1)
    assert m.entries == (F(1),)
    assert rank(m) == 1


def test_hochschild_matrix_rejects_nonassociative():
    # x*x = x on e1 only, with e1*e2 = e1 and e2*anything = 0 is not associative
    bad = [[[F(0), F(1)], [F(1), F(0)]], [[F(0), F(0)], [F(0), F(0)]]]
    with pytest.raises(ValueError):
        hochschild_matrix(bad, 1)
    with pytest.raises(ValueError):
        hochschild_matrix((((F(1),),),), 0)


def test_hochschild_composites_zero(one_dim, two_dim):
    for alg in (one_dim, two_dim):
        total = alg.total_table()
        mats = {n: hochschild_matrix(total, n) for n in (1, 2, 3, 4)}
        for n in (1, 2, 3):
            assert mats[n + 1].matmul(mats[n]).is_zero()


def test_hochschild_zero_algebra():
    table = (((F(0),),),)
    m = hochschild_matrix(table, 2)
    assert m.is_zero()
