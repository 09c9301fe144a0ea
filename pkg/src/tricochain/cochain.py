"""Cochains of a three-product algebra and their Hochschild embedding.

A degree-n cochain g assigns to each nonempty subset I of {1..n} a
multilinear map B^n -> B.  Psi sends g to the Hochschild n-cochain of the
tensor algebra whose value on generator inputs x_1 @ b_1, ..., x_n @ b_n is
the sum over I of P(I) @ g(I; b_1..b_n), where P(I) is the bullet block over
I starred with the remaining generators.  Since distinct I give distinct
monomials P(I), the Hochschild coboundary of Psi(g) on generator inputs can
be read back off component by component; that readback defines the
differential `tri_delta`.  The low-degree closed formulas are kept alongside
as `tri_delta_explicit` and the two are cross-checked in the tests.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct
from typing import Mapping, Sequence

from .algebra import (AxiomReport, TriDendAlgebra, Vector, Violation, as_vector,
                      basis_vector, vec_add, vec_scale, vec_sub, vec_zero, _canon_table)
from .exactlin import QMatrix, rank
from .freemodel import ComTriMonomial, bullet, generator, p_monomial, star, subsets_ordered
from .tensoralg import TensorElement, tensor_product

_ZERO = Fraction(0)
_ONE = Fraction(1)

Subset = tuple[int, ...]
CochainKey = tuple[Subset, tuple[int, ...]]


class TriCochain:
    """Degree-n cochain: (subset of {1..n}, basis n-tuple) -> vector in B."""

    __slots__ = ("algebra", "degree", "coeffs")

    def __init__(self, algebra: TriDendAlgebra, degree: int,
                 coeffs: Mapping[CochainKey, Sequence] | None = None) -> None:
        if degree < 1:
            raise ValueError("cochain degree must be at least 1")
        self.algebra = algebra
        self.degree = degree
        d = algebra.dim
        clean: dict[CochainKey, Vector] = {}
        if coeffs:
            for (subset, jt), vec in coeffs.items():
                subset = tuple(sorted(subset))
                if not subset or subset[0] < 1 or subset[-1] > degree or len(set(subset)) != len(subset):
                    raise ValueError(f"bad subset {subset} for degree {degree}")
                jt = tuple(jt)
                if len(jt) != degree or any(not 0 <= j < d for j in jt):
                    raise ValueError(f"bad basis tuple {jt} for dimension {d}")
                v = as_vector(vec, d)
                if any(v):
                    clean[(subset, jt)] = v
        self.coeffs = clean

    @classmethod
    def zero(cls, algebra: TriDendAlgebra, degree: int) -> "TriCochain":
        return cls(algebra, degree)

    def value(self, subset, jtuple) -> Vector:
        return self.coeffs.get((tuple(sorted(subset)), tuple(jtuple)), vec_zero(self.algebra.dim))

    def eval_b(self, subset, bvecs: Sequence[Vector]) -> Vector:
        """Multilinear evaluation g(I; b_1..b_n)."""
        subset = tuple(sorted(subset))
        if len(bvecs) != self.degree:
            raise ValueError("input count must equal cochain degree")
        d = self.algebra.dim
        out = [_ZERO] * d
        for (s, jt), vec in self.coeffs.items():
            if s != subset:
                continue
            c = _ONE
            for bv, j in zip(bvecs, jt):
                c *= bv[j]
                if not c:
                    break
            if c:
                for k in range(d):
                    if vec[k]:
                        out[k] += c * vec[k]
        return tuple(out)

    def __eq__(self, other) -> bool:
        return (isinstance(other, TriCochain) and self.degree == other.degree
                and self.algebra.dim == other.algebra.dim and self.coeffs == other.coeffs)

    def __add__(self, other: "TriCochain") -> "TriCochain":
        if self.degree != other.degree:
            raise ValueError("degrees differ")
        keys = set(self.coeffs) | set(other.coeffs)
        d = self.algebra.dim
        return TriCochain(self.algebra, self.degree,
                          {key: vec_add(self.coeffs.get(key, vec_zero(d)),
                                        other.coeffs.get(key, vec_zero(d))) for key in keys})

    def scale(self, c) -> "TriCochain":
        c = Fraction(c)
        return TriCochain(self.algebra, self.degree,
                          {key: tuple(c * x for x in vec) for key, vec in self.coeffs.items()})

    def __repr__(self) -> str:
        return f"TriCochain(degree={self.degree}, cells={len(self.coeffs)})"


def cochain_cells(n: int, dim: int) -> list[tuple[Subset, tuple[int, ...], int]]:
    """Canonical cell order: subsets by (size, lex), then basis tuples, then value index."""
    return [(s, jt, k)
            for s in subsets_ordered(n)
            for jt in iproduct(range(dim), repeat=n)
            for k in range(dim)]


def basis_cochain(alg: TriDendAlgebra, n: int, cell) -> TriCochain:
    s, jt, k = cell
    return TriCochain(alg, n, {(s, jt): basis_vector(alg.dim, k)})


def cochain_to_json(g: TriCochain) -> list:
    """JSON form: sorted rows [subset, basis tuple, coefficient strings]."""
    return [[list(s), list(jt), [str(x) for x in g.coeffs[(s, jt)]]]
            for s, jt in sorted(g.coeffs)]


def cochain_from_json(alg: TriDendAlgebra, degree: int, rows) -> TriCochain:
    coeffs = {}
    for s, jt, vec in rows:
        key = (tuple(int(i) for i in s), tuple(int(j) for j in jt))
        coeffs[key] = vec_add(coeffs.get(key, vec_zero(alg.dim)),
                              as_vector([Fraction(x) for x in vec], alg.dim))
    return TriCochain(alg, degree, coeffs)


def p_of(a_parts: Sequence[ComTriMonomial], subset) -> ComTriMonomial:
    """P(a_1..a_n; I): bullet block over I starred with the remaining slots."""
    members = tuple(sorted(subset))
    out = a_parts[members[0] - 1]
    for i in members[1:]:
        out = bullet(out, a_parts[i - 1])
    chosen = set(members)
    for j in range(1, len(a_parts) + 1):
        if j not in chosen:
            out = star(out, a_parts[j - 1])
    return out


PureInput = tuple[ComTriMonomial, Vector]


def generator_inputs(dim: int, jtuple: Sequence[int]) -> list[PureInput]:
    """Inputs x_1 @ e_{j_1}, ..., x_n @ e_{j_n}."""
    return [(generator(i + 1), basis_vector(dim, j)) for i, j in enumerate(jtuple)]


def psi_eval(g: TriCochain, inputs: Sequence[PureInput]) -> TensorElement:
    """Psi(g) on pure tensors: sum over I of P(a; I) @ g(I; b_1..b_n)."""
    n = g.degree
    if len(inputs) != n:
        raise ValueError("input count must equal cochain degree")
    a_parts = [a for a, _ in inputs]
    bvecs = [b for _, b in inputs]
    acc: dict[tuple[ComTriMonomial, int], Fraction] = {}
    for subset in subsets_ordered(n):
        vec = g.eval_b(subset, bvecs)
        if not any(vec):
            continue
        mono = p_of(a_parts, subset)
        for k, c in enumerate(vec):
            if c:
                key = (mono, k)
                acc[key] = acc.get(key, _ZERO) + c
    return TensorElement(acc)


def psi_eval_tensors(g: TriCochain, slots: Sequence[TensorElement]) -> TensorElement:
    """Multilinear extension of psi_eval to tensor-element slots."""
    n = g.degree
    if len(slots) != n:
        raise ValueError("slot count must equal cochain degree")
    d = g.algebra.dim
    out = TensorElement.zero()
    for combo in iproduct(*(list(s.terms.items()) for s in slots)):
        coeff = _ONE
        inputs = []
        for (mono, k), c in combo:
            coeff *= c
            inputs.append((mono, basis_vector(d, k)))
        out = out + coeff * psi_eval(g, inputs)
    return out


def hoch_delta_on_psi(g: TriCochain, inputs: Sequence[PureInput]) -> TensorElement:
    """Hochschild coboundary of Psi(g), evaluated on degree+1 pure tensors."""
    n = g.degree
    if len(inputs) != n + 1:
        raise ValueError("need degree+1 inputs")
    alg = g.algebra
    xs = [TensorElement.from_vector(a, b) for a, b in inputs]
    out = tensor_product(alg, xs[0], psi_eval(g, inputs[1:]))
    for i in range(1, n + 1):
        merged = tensor_product(alg, xs[i - 1], xs[i])
        slots = xs[:i - 1] + [merged] + xs[i + 1:]
        term = psi_eval_tensors(g, slots)
        out = (out + term) if i % 2 == 0 else (out - term)
    last = tensor_product(alg, psi_eval(g, inputs[:n]), xs[n])
    return (out + last) if (n + 1) % 2 == 0 else (out - last)


def extract(t: TensorElement, n: int, dim: int) -> dict[Subset, Vector]:
    """Components of a generator-multilinear element in the P(I) monomial basis.

    Raises ValueError if any term's monomial is not P(I) for a nonempty
    subset I of {1..n}.
    """
    subset_of = {p_monomial(n, s): s for s in subsets_ordered(n)}
    out = {s: [_ZERO] * dim for s in subsets_ordered(n)}
    for (mono, k), c in t.terms.items():
        s = subset_of.get(mono)
        if s is None:
            raise ValueError(f"{mono.render()} is not a P(I) monomial for n={n}")
        if k >= dim:
            raise ValueError(f"basis index {k} out of range for dimension {dim}")
        out[s][k] += c
    return {s: tuple(v) for s, v in out.items()}


def tri_delta(g: TriCochain) -> TriCochain:
    """The induced differential, read off the Hochschild coboundary on generators."""
    alg = g.algebra
    n = g.degree
    d = alg.dim
    coeffs: dict[CochainKey, Vector] = {}
    for jt in iproduct(range(d), repeat=n + 1):
        comp = extract(hoch_delta_on_psi(g, generator_inputs(d, jt)), n + 1, d)
        for subset, vec in comp.items():
            if any(vec):
                coeffs[(subset, jt)] = vec
    return TriCochain(alg, n + 1, coeffs)


def tri_delta_explicit(g: TriCochain) -> TriCochain:
    """Closed formulas for the differential in degrees 1 and 2."""
    if g.degree == 1:
        return _explicit_degree1(g)
    if g.degree == 2:
        return _explicit_degree2(g)
    raise ValueError("explicit formulas cover degrees 1 and 2 only")


def _explicit_degree1(g: TriCochain) -> TriCochain:
    alg = g.algebra
    d = alg.dim
    ops = {(1,): alg.op_prec, (2,): alg.op_succ, (1, 2): alg.op_dot}
    coeffs: dict[CochainKey, Vector] = {}
    for jt in iproduct(range(d), repeat=2):
        b1, b2 = basis_vector(d, jt[0]), basis_vector(d, jt[1])
        g1 = lambda b: g.eval_b((1,), (b,))
        for subset, op in ops.items():
            vec = vec_sub(vec_add(op(b1, g1(b2)), op(g1(b1), b2)), g1(op(b1, b2)))
            if any(vec):
                coeffs[(subset, jt)] = vec
    return TriCochain(alg, 2, coeffs)


def _explicit_degree2(g: TriCochain) -> TriCochain:
    alg = g.algebra
    d = alg.dim
    coeffs: dict[CochainKey, Vector] = {}

    def ge(subset, u, v):
        return g.eval_b(subset, (u, v))

    def gsum(u, v):
        return vec_add(ge((1,), u, v), ge((2,), u, v), ge((1, 2), u, v))

    for jt in iproduct(range(d), repeat=3):
        b1, b2, b3 = (basis_vector(d, j) for j in jt)
        comp: dict[Subset, Vector] = {}
        comp[(1,)] = vec_add(
            alg.op_prec(b1, gsum(b2, b3)),
            vec_scale(-1, ge((1,), alg.op_prec(b1, b2), b3)),
            ge((1,), b1, alg.total(b2, b3)),
            vec_scale(-1, alg.op_prec(ge((1,), b1, b2), b3)))
        comp[(2,)] = vec_add(
            alg.op_succ(b1, ge((1,), b2, b3)),
            vec_scale(-1, ge((1,), alg.op_succ(b1, b2), b3)),
            ge((2,), b1, alg.op_prec(b2, b3)),
            vec_scale(-1, alg.op_prec(ge((2,), b1, b2), b3)))
        comp[(3,)] = vec_add(
            alg.op_succ(b1, ge((2,), b2, b3)),
            vec_scale(-1, ge((2,), alg.total(b1, b2), b3)),
            ge((2,), b1, alg.op_succ(b2, b3)),
            vec_scale(-1, alg.op_succ(gsum(b1, b2), b3)))
        comp[(1, 2)] = vec_add(
            alg.op_dot(b1, ge((1,), b2, b3)),
            vec_scale(-1, ge((1,), alg.op_dot(b1, b2), b3)),
            ge((1, 2), b1, alg.op_prec(b2, b3)),
            vec_scale(-1, alg.op_prec(ge((1, 2), b1, b2), b3)))
        comp[(1, 3)] = vec_add(
            alg.op_dot(b1, ge((2,), b2, b3)),
            vec_scale(-1, ge((1, 2), alg.op_prec(b1, b2), b3)),
            ge((1, 2), b1, alg.op_succ(b2, b3)),
            vec_scale(-1, alg.op_dot(ge((1,), b1, b2), b3)))
        comp[(2, 3)] = vec_add(
            alg.op_succ(b1, ge((1, 2), b2, b3)),
            vec_scale(-1, ge((1, 2), alg.op_succ(b1, b2), b3)),
            ge((2,), b1, alg.op_dot(b2, b3)),
            vec_scale(-1, alg.op_dot(ge((2,), b1, b2), b3)))
        comp[(1, 2, 3)] = vec_add(
            alg.op_dot(b1, ge((1, 2), b2, b3)),
            vec_scale(-1, ge((1, 2), alg.op_dot(b1, b2), b3)),
            ge((1, 2), b1, alg.op_dot(b2, b3)),
            vec_scale(-1, alg.op_dot(ge((1, 2), b1, b2), b3)))
        for subset, vec in comp.items():
            if any(vec):
                coeffs[(subset, jt)] = vec
    return TriCochain(alg, 3, coeffs)


def check_roundtrip(alg: TriDendAlgebra, n: int) -> AxiomReport:
    """Extraction of psi_eval on generator inputs must return the coefficients."""
    d = alg.dim
    checked = 0
    violations = []
    for cell in cochain_cells(n, d):
        g = basis_cochain(alg, n, cell)
        for jt in iproduct(range(d), repeat=n):
            comp = extract(psi_eval(g, generator_inputs(d, jt)), n, d)
            for subset in subsets_ordered(n):
                checked += 1
                expected = g.value(subset, jt)
                if comp[subset] != expected:
                    violations.append(Violation("psi_roundtrip", (cell, jt, subset),
                                                comp[subset], expected))
    return AxiomReport.collect(checked, violations)


def check_commutation(alg: TriDendAlgebra, n: int, explicit: bool = False) -> AxiomReport:
    """Certify psi_eval(tri_delta g) = hoch_delta_on_psi(g) on generator inputs."""
    d = alg.dim
    checked = 0
    violations = []
    for cell in cochain_cells(n, d):
        g = basis_cochain(alg, n, cell)
        dg = tri_delta_explicit(g) if explicit else tri_delta(g)
        for jt in iproduct(range(d), repeat=n + 1):
            inputs = generator_inputs(d, jt)
            lhs = psi_eval(dg, inputs)
            rhs = hoch_delta_on_psi(g, inputs)
            checked += 1
            if lhs != rhs:
                violations.append(Violation("psi_commutes", (cell, jt), lhs, rhs))
    return AxiomReport.collect(checked, violations)


def psi_matrix(alg: TriDendAlgebra, n: int) -> QMatrix:
    """Matrix of g -> Psi(g) on generator inputs over all basis b-tuples."""
    d = alg.dim
    cells = cochain_cells(n, d)
    subsets = subsets_ordered(n)
    subset_of = {p_monomial(n, s): s for s in subsets}
    row_index = {}
    for jt in iproduct(range(d), repeat=n):
        for s in subsets:
            for k in range(d):
                row_index[(jt, s, k)] = len(row_index)
    entries = [[_ZERO] * len(cells) for _ in range(len(row_index))]
    for col, cell in enumerate(cells):
        g = basis_cochain(alg, n, cell)
        for jt in iproduct(range(d), repeat=n):
            t = psi_eval(g, generator_inputs(d, jt))
            for (mono, k), c in t.terms.items():
                entries[row_index[(jt, subset_of[mono], k)]][col] = c
    return QMatrix(len(row_index), len(cells), tuple(x for row in entries for x in row))


def check_injectivity(alg: TriDendAlgebra, n: int) -> bool:
    """Whether Psi is injective in degree n (full column rank, exact)."""
    m = psi_matrix(alg, n)
    return rank(m) == m.cols


def _require_associative(table, d: int) -> None:
    def mul(i, j):
        return table[i][j]

    def mulv(x: Vector, y: Vector) -> Vector:
        out = [_ZERO] * d
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                cell = mul(i, j)
                for k in range(d):
                    if cell[k]:
                        out[k] += c * cell[k]
        return tuple(out)

    for i in range(d):
        for j in range(d):
            for k in range(d):
                lhs = mulv(mulv(basis_vector(d, i), basis_vector(d, j)), basis_vector(d, k))
                rhs = mulv(basis_vector(d, i), mulv(basis_vector(d, j), basis_vector(d, k)))
                if lhs != rhs:
                    raise ValueError(f"table is not associative at basis triple ({i},{j},{k})")


def hochschild_matrix(table, n: int) -> QMatrix:
    """Coboundary matrix C^n(A,A) -> C^{n+1}(A,A) for an associative table.

    Cells are (basis n-tuple, value index) in lex order; the input table is
    validated for associativity and rejected otherwise.  n >= 1.
    """
    if n < 1:
        raise ValueError("degree must be at least 1")
    d = len(table)
    tab = _canon_table(d, table, "table")
    _require_associative(tab, d)

    def mulv(x: Vector, y: Vector) -> Vector:
        out = [_ZERO] * d
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                cell = tab[i][j]
                for k in range(d):
                    if cell[k]:
                        out[k] += c * cell[k]
        return tuple(out)

    in_cells = [(jt, k) for jt in iproduct(range(d), repeat=n) for k in range(d)]
    out_tuples = list(iproduct(range(d), repeat=n + 1))
    entries = [[_ZERO] * len(in_cells) for _ in range(len(out_tuples) * d)]
    for col, (jt0, k0) in enumerate(in_cells):
        ek = basis_vector(d, k0)

        def f(args: Sequence[Vector]) -> Vector:
            c = _ONE
            for arg, j in zip(args, jt0):
                c *= arg[j]
                if not c:
                    return vec_zero(d)
            return tuple(c * x for x in ek)

        for r, it in enumerate(out_tuples):
            args = [basis_vector(d, i) for i in it]
            v = mulv(args[0], f(args[1:]))
            for l in range(1, n + 1):
                merged = mulv(args[l - 1], args[l])
                w = f(args[:l - 1] + [merged] + args[l + 1:])
                v = vec_add(v, w) if l % 2 == 0 else vec_sub(v, w)
            w = mulv(f(args[:n]), args[n])
            v = vec_add(v, w) if (n + 1) % 2 == 0 else vec_sub(v, w)
            for k in range(d):
                entries[r * d + k][col] = v[k]
    return QMatrix(len(out_tuples) * d, len(in_cells), tuple(x for row in entries for x in row))
