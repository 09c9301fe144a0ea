"""The associative product on (free monomial model) tensor B.

For pure tensors the product is
    (p @ u)(q @ v) = star(p,q) @ (u prec v) + star(q,p) @ (u succ v)
                     + bullet(p,q) @ (u dot v)
extended bilinearly; it is associative exactly when B satisfies the seven
identities.  `check_associativity` certifies triples and reports witnesses.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product as iproduct
from typing import Iterable, Sequence

from .algebra import AxiomReport, TriDendAlgebra, Vector, Violation
from .freemodel import ComTriMonomial, bullet, generator, star

_ZERO = Fraction(0)

TensorKey = tuple[ComTriMonomial, int]


class TensorElement:
    """Finite rational combination of pure tensors monomial @ e_k."""

    __slots__ = ("terms",)

    def __init__(self, terms=None) -> None:
        acc: dict[TensorKey, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, c in items:
                c = Fraction(c)
                if not c:
                    continue
                prev = acc.get(key, _ZERO)
                tot = prev + c
                if tot:
                    acc[key] = tot
                elif key in acc:
                    del acc[key]
        self.terms = acc

    @classmethod
    def zero(cls) -> "TensorElement":
        return cls()

    @classmethod
    def pure(cls, mono: ComTriMonomial, k: int, coeff=1) -> "TensorElement":
        if k < 0:
            raise ValueError("basis index must be nonnegative")
        return cls([((mono, k), Fraction(coeff))])

    @classmethod
    def from_vector(cls, mono: ComTriMonomial, vec: Sequence) -> "TensorElement":
        return cls([((mono, k), Fraction(c)) for k, c in enumerate(vec)])

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, TensorElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "TensorElement") -> "TensorElement":
        return TensorElement(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> "TensorElement":
        return TensorElement({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def __rmul__(self, scalar) -> "TensorElement":
        scalar = Fraction(scalar)
        return TensorElement({k: scalar * c for k, c in self.terms.items()})

    def max_degree(self) -> int:
        return max((mono.degree for mono, _ in self.terms), default=0)

    def render(self) -> str:
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda t: (t[0].sort_key(), t[1]))
        parts = []
        for mono, k in keys:
            c = self.terms[(mono, k)]
            body = f"{mono.render()}@e{k}"
            if c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"TensorElement<{self.render()}>"


def _check_indices(alg: TriDendAlgebra, u: TensorElement) -> None:
    for _, k in u.terms:
        if k >= alg.dim:
            raise ValueError(f"basis index {k} out of range for dimension {alg.dim}")


def tensor_product(alg: TriDendAlgebra, u: TensorElement, v: TensorElement) -> TensorElement:
    """Product of two elements over the three-product algebra alg."""
    _check_indices(alg, u)
    _check_indices(alg, v)
    acc: dict[TensorKey, Fraction] = {}

    def put(mono: ComTriMonomial, cell: Vector, c: Fraction) -> None:
        for k, t in enumerate(cell):
            if t:
                key = (mono, k)
                tot = acc.get(key, _ZERO) + c * t
                if tot:
                    acc[key] = tot
                elif key in acc:
                    del acc[key]

    for (p, i), a in u.terms.items():
        for (q, j), b in v.terms.items():
            c = a * b
            put(star(p, q), alg.prec[i][j], c)
            put(star(q, p), alg.succ[i][j], c)
            put(bullet(p, q), alg.dot[i][j], c)
    return TensorElement(acc)


Triple = tuple[TensorElement, TensorElement, TensorElement]


def check_associativity(alg: TriDendAlgebra, triples: Iterable[Triple]) -> AxiomReport:
    """Evaluate (uv)w - u(vw) on each triple; collect nonzero witnesses."""
    checked = 0
    violations = []
    for idx, (u, v, w) in enumerate(triples):
        checked += 1
        lhs = tensor_product(alg, tensor_product(alg, u, v), w)
        rhs = tensor_product(alg, u, tensor_product(alg, v, w))
        if lhs != rhs:
            at = tuple(t.render() for t in (u, v, w))
            violations.append(Violation("tensor_assoc", (idx,) + at, lhs, rhs))
    return AxiomReport.collect(checked, violations)


def generator_basis_triples(alg: TriDendAlgebra, generator_indices=(1, 2, 3)) -> list[Triple]:
    """All pure triples x_g @ e_j over the given generators and the full basis."""
    out = []
    for gs in iproduct(generator_indices, repeat=3):
        for js in iproduct(range(alg.dim), repeat=3):
            out.append(tuple(TensorElement.pure(generator(g), j) for g, j in zip(gs, js)))
    return out


def random_tensor_triples(alg: TriDendAlgebra, count: int, max_degree: int = 3,
                          seed: int = 0, num_gens: int = 3) -> list[Triple]:
    """Seeded pseudorandom triples with monomial degree <= max_degree."""
    if alg.dim == 0:
        return []
    rng = random.Random(seed)

    def rand_monomial() -> ComTriMonomial:
        deg = rng.randint(1, max_degree)
        head = rng.randint(1, deg)
        idxs = [rng.randint(1, num_gens) for _ in range(deg)]
        return ComTriMonomial(tuple(idxs[:head]), tuple(idxs[head:]))

    def rand_coeff() -> Fraction:
        num = rng.choice([n for n in range(-9, 10) if n])
        return Fraction(num, rng.randint(1, 9))

    def rand_element() -> TensorElement:
        terms = []
        for _ in range(rng.randint(1, 2)):
            terms.append(((rand_monomial(), rng.randrange(alg.dim)), rand_coeff()))
        return TensorElement(terms)

    return [(rand_element(), rand_element(), rand_element()) for _ in range(count)]


def triples_max_degree(triples: Iterable[Triple]) -> int:
    """Largest monomial degree occurring in any element of the triples."""
    return max((t.max_degree() for triple in triples for t in triple), default=0)
