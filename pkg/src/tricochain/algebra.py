"""Structure-constant algebras and exhaustive axiom verification.

Elements are coefficient tuples over a fixed basis; a product is a d*d*d
table with table[i][j][k] the coefficient of e_k in e_i op e_j.  Every
identity is multilinear, so checking it on all basis triples checks it on
the whole space.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

_ZERO = Fraction(0)
_ONE = Fraction(1)

Vector = tuple[Fraction, ...]
Table = tuple[tuple[Vector, ...], ...]


def vec_zero(dim: int) -> Vector:
    return (_ZERO,) * dim

def basis_vector(dim: int, k: int) -> Vector:
    if not 0 <= k < dim:
        raise ValueError(f"basis index {k} out of range for dimension {dim}")
    return tuple(_ONE if i == k else _ZERO for i in range(dim))

def as_vector(coeffs: Sequence, dim: int) -> Vector:
    v = tuple(Fraction(x) for x in coeffs)
    if len(v) != dim:
        raise ValueError(f"vector length {len(v)} does not match dimension {dim}")
    return v

def vec_add(*vs: Vector) -> Vector:
    return tuple(sum(col, _ZERO) for col in zip(*vs))

def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))

def vec_scale(c, v: Vector) -> Vector:
    c = Fraction(c)
    return tuple(c * x for x in v)


def _canon_table(dim: int, table, label: str) -> Table:
    if len(table) != dim:
        raise ValueError(f"{label}: expected {dim} rows, got {len(table)}")
    rows = []
    for i, row in enumerate(table):
        if len(row) != dim:
            raise ValueError(f"{label}[{i}]: expected {dim} cells")
        cells = []
        for j, cell in enumerate(row):
            if len(cell) != dim:
                raise ValueError(f"{label}[{i}][{j}]: expected {dim} coefficients")
            cells.append(tuple(Fraction(x) for x in cell))
        rows.append(tuple(cells))
    return tuple(rows)


def _apply_table(table: Table, x: Vector, y: Vector, dim: int) -> Vector:
    if len(x) != dim or len(y) != dim:
        raise ValueError("operand dimension mismatch")
    out = [_ZERO] * dim
    for i, xi in enumerate(x):
        if not xi:
            continue
        ti = table[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            c = xi * yj
            cell = ti[j]
            for k in range(dim):
                if cell[k]:
                    out[k] += c * cell[k]
    return tuple(out)


@dataclass(frozen=True)
class TriDendAlgebra:
    """Finite-dimensional algebra with three products prec, succ, dot."""

    dim: int
    prec: Table
    succ: Table
    dot: Table

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise ValueError("dimension must be nonnegative")
        object.__setattr__(self, "prec", _canon_table(self.dim, self.prec, "prec"))
        object.__setattr__(self, "succ", _canon_table(self.dim, self.succ, "succ"))
        object.__setattr__(self, "dot", _canon_table(self.dim, self.dot, "dot"))

    def zero(self) -> Vector:
        return vec_zero(self.dim)

    def basis(self, k: int) -> Vector:
        return basis_vector(self.dim, k)

    def op_prec(self, x: Vector, y: Vector) -> Vector:
        return _apply_table(self.prec, x, y, self.dim)

    def op_succ(self, x: Vector, y: Vector) -> Vector:
        return _apply_table(self.succ, x, y, self.dim)

    def op_dot(self, x: Vector, y: Vector) -> Vector:
        return _apply_table(self.dot, x, y, self.dim)

    def total(self, x: Vector, y: Vector) -> Vector:
        """The sum product prec + succ + dot; associative when the axioms hold."""
        return vec_add(self.op_prec(x, y), self.op_succ(x, y), self.op_dot(x, y))

    def total_table(self) -> Table:
        out = []
        for i in range(self.dim):
            row = []
            for j in range(self.dim):
                row.append(vec_add(self.prec[i][j], self.succ[i][j], self.dot[i][j]))
            out.append(tuple(row))
        return tuple(out)


@dataclass(frozen=True)
class CommTriAlgebraFD:
    """Finite-dimensional algebra with products star (Perm) and bullet."""

    dim: int
    star: Table
    bullet: Table

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise ValueError("dimension must be nonnegative")
        object.__setattr__(self, "star", _canon_table(self.dim, self.star, "star"))
        object.__setattr__(self, "bullet", _canon_table(self.dim, self.bullet, "bullet"))

    def op_star(self, x: Vector, y: Vector) -> Vector:
        return _apply_table(self.star, x, y, self.dim)

    def op_bullet(self, x: Vector, y: Vector) -> Vector:
        return _apply_table(self.bullet, x, y, self.dim)


def _render_value(value) -> object:
    render = getattr(value, "render", None)
    if callable(render):
        return render()
    if isinstance(value, tuple):
        return [str(x) for x in value]
    return str(value)


@dataclass(frozen=True)
class Violation:
    """One failed identity instance with both evaluated sides."""

    axiom: str
    at: tuple
    left: object
    right: object

    def to_dict(self) -> dict:
        return {
            "axiom": self.axiom,
            "at": list(self.at),
            "left": _render_value(self.left),
            "right": _render_value(self.right),
        }


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of an exhaustive identity check; passed iff no violations."""

    passed: bool
    checked: int
    violations: tuple[Violation, ...]

    @classmethod
    def collect(cls, checked: int, violations) -> "AxiomReport":
        violations = tuple(violations)
        return cls(not violations, checked, violations)

    def to_dict(self, max_violations: int = 10) -> dict:
        return {
            "passed": self.passed,
            "checked": self.checked,
            "violation_count": len(self.violations),
            "violations": [v.to_dict() for v in self.violations[:max_violations]],
        }


# The seven defining identities of the three-product algebras, plus the
# associativity of the sum product, in the order used everywhere below.
TRIDEND_AXIOM_NAMES = tuple(f"axiom{i}" for i in range(1, 9))


def _tridend_identity_pairs(alg: TriDendAlgebra, x: Vector, y: Vector, z: Vector):
    total_yz = alg.total(y, z)
    yield "axiom1", alg.op_prec(alg.op_prec(x, y), z), alg.op_prec(x, total_yz)
    yield "axiom2", alg.op_prec(alg.op_succ(x, y), z), alg.op_succ(x, alg.op_prec(y, z))
    yield "axiom3", alg.op_succ(alg.total(x, y), z), alg.op_succ(x, alg.op_succ(y, z))
    yield "axiom4", alg.op_succ(x, alg.op_dot(y, z)), alg.op_dot(alg.op_succ(x, y), z)
    yield "axiom5", alg.op_dot(alg.op_prec(x, y), z), alg.op_dot(x, alg.op_succ(y, z))
    yield "axiom6", alg.op_prec(alg.op_dot(x, y), z), alg.op_dot(x, alg.op_prec(y, z))
    yield "axiom7", alg.op_dot(alg.op_dot(x, y), z), alg.op_dot(x, alg.op_dot(y, z))
    yield "axiom8", alg.total(alg.total(x, y), z), alg.total(x, total_yz)


def verify_tridendriform(alg: TriDendAlgebra) -> AxiomReport:
    """Check the seven identities and sum-product associativity on all basis triples."""
    d = alg.dim
    basis = [alg.basis(i) for i in range(d)]
    checked = 0
    violations = []
    for i in range(d):
        for j in range(d):
            for k in range(d):
                for name, lhs, rhs in _tridend_identity_pairs(alg, basis[i], basis[j], basis[k]):
                    checked += 1
                    if lhs != rhs:
                        violations.append(Violation(name, (i, j, k), lhs, rhs))
    return AxiomReport.collect(checked, violations)


def verify_comm_tri(alg: CommTriAlgebraFD) -> AxiomReport:
    """Check the Perm laws, commutativity/associativity of bullet, and compatibility."""
    d = alg.dim
    basis = [basis_vector(d, i) for i in range(d)]
    checked = 0
    violations = []
    for i in range(d):
        for j in range(d):
            x, y = basis[i], basis[j]
            checked += 1
            lhs, rhs = alg.op_bullet(x, y), alg.op_bullet(y, x)
            if lhs != rhs:
                violations.append(Violation("bullet_comm", (i, j), lhs, rhs))
            for k in range(d):
                z = basis[k]
                pairs = (
                    ("perm_assoc", alg.op_star(alg.op_star(x, y), z), alg.op_star(x, alg.op_star(y, z))),
                    ("perm_symm", alg.op_star(x, alg.op_star(y, z)), alg.op_star(x, alg.op_star(z, y))),
                    ("bullet_assoc", alg.op_bullet(alg.op_bullet(x, y), z), alg.op_bullet(x, alg.op_bullet(y, z))),
                    ("compat_star_bullet", alg.op_star(x, alg.op_bullet(y, z)), alg.op_star(x, alg.op_star(y, z))),
                    ("compat_bullet_star", alg.op_star(alg.op_bullet(x, y), z), alg.op_bullet(x, alg.op_star(y, z))),
                )
                for name, lhs, rhs in pairs:
                    checked += 1
                    if lhs != rhs:
                        violations.append(Violation(name, (i, j, k), lhs, rhs))
    return AxiomReport.collect(checked, violations)
