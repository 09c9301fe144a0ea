"""Normal-form monomial model of the free commutative tri-algebra.

A monomial is a pair of multisets (M, N) with M nonempty, standing for the
word (bullet-product over M) * (star-product over N).  Both products have
closed forms on normal forms; `tricochain.rewrite` re-derives those closed
forms from the defining identities alone and the tests use it as an
independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

_ZERO = Fraction(0)


def _merge(*tuples: tuple[int, ...]) -> tuple[int, ...]:
    out: list[int] = []
    for t in tuples:
        out.extend(t)
    out.sort()
    return tuple(out)


@dataclass(frozen=True)
class ComTriMonomial:
    """(M, N) normal form: bullet block M (nonempty multiset), star tail N."""

    m: tuple[int, ...]
    n: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        ms = tuple(sorted(self.m))
        ns = tuple(sorted(self.n))
        if not ms:
            raise ValueError("bullet block must be nonempty")
        if ms[0] < 1 or (ns and ns[0] < 1):
            raise ValueError("generator indices start at 1")
        object.__setattr__(self, "m", ms)
        object.__setattr__(self, "n", ns)

    @property
    def degree(self) -> int:
        return len(self.m) + len(self.n)

    def sort_key(self) -> tuple:
        return (self.degree, self.m, self.n)

    def render(self) -> str:
        if len(self.m) == 1:
            block = f"x{self.m[0]}"
        else:
            block = "(" + ".".join(f"x{i}" for i in self.m) + ")"
        return block + "".join(f"*x{i}" for i in self.n)

    def __repr__(self) -> str:
        return f"ComTriMonomial({self.m!r}, {self.n!r})"


def generator(i: int) -> ComTriMonomial:
    """The degree-1 monomial x_i."""
    if i < 1:
        raise ValueError("generator indices start at 1")
    return ComTriMonomial((i,))


def star(p: ComTriMonomial, q: ComTriMonomial) -> ComTriMonomial:
    """Closed form of the Perm product: the right factor dissolves into the tail."""
    return ComTriMonomial(p.m, _merge(p.n, q.m, q.n))


def bullet(p: ComTriMonomial, q: ComTriMonomial) -> ComTriMonomial:
    """Closed form of the commutative product: blocks and tails merge."""
    return ComTriMonomial(_merge(p.m, q.m), _merge(p.n, q.n))


def p_monomial(n: int, subset: Iterable[int]) -> ComTriMonomial:
    """P(I) on generators x_1..x_n: bullet block I, star tail its complement."""
    members = tuple(sorted(subset))
    if not members:
        raise ValueError("subset must be nonempty")
    if len(set(members)) != len(members):
        raise ValueError("subset has repeated indices")
    if members[0] < 1 or members[-1] > n:
        raise ValueError(f"subset {members} not contained in 1..{n}")
    rest = tuple(j for j in range(1, n + 1) if j not in set(members))
    return ComTriMonomial(members, rest)


def subsets_ordered(n: int) -> list[tuple[int, ...]]:
    """Nonempty subsets of {1..n}, ordered by cardinality then lexicographically."""
    out: list[tuple[int, ...]] = []
    for k in range(1, n + 1):
        out.extend(combinations(range(1, n + 1), k))
    return out


class FreeElement:
    """Finite rational linear combination of monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms=None) -> None:
        acc: dict[ComTriMonomial, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for mono, c in items:
                c = Fraction(c)
                if not c:
                    continue
                prev = acc.get(mono, _ZERO)
                tot = prev + c
                if tot:
                    acc[mono] = tot
                elif mono in acc:
                    del acc[mono]
        self.terms = acc

    @classmethod
    def zero(cls) -> "FreeElement":
        return cls()

    @classmethod
    def monomial(cls, mono: ComTriMonomial, coeff=1) -> "FreeElement":
        return cls([(mono, Fraction(coeff))])

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, FreeElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "FreeElement") -> "FreeElement":
        return FreeElement(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> "FreeElement":
        return FreeElement({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "FreeElement") -> "FreeElement":
        return self + (-other)

    def __rmul__(self, scalar) -> "FreeElement":
        scalar = Fraction(scalar)
        return FreeElement({m: scalar * c for m, c in self.terms.items()})

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=ComTriMonomial.sort_key):
            c = self.terms[mono]
            body = mono.render() if c == 1 else (f"-{mono.render()}" if c == -1 else f"{c}*{mono.render()}")
            parts.append(body)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"FreeElement<{self.render()}>"


def _bilinear(op, u: FreeElement, v: FreeElement) -> FreeElement:
    acc: dict[ComTriMonomial, Fraction] = {}
    for p, a in u.terms.items():
        for q, b in v.terms.items():
            mono = op(p, q)
            acc[mono] = acc.get(mono, _ZERO) + a * b
    return FreeElement(acc)


def star_lin(u: FreeElement, v: FreeElement) -> FreeElement:
    """Bilinear extension of `star` to linear combinations."""
    return _bilinear(star, u, v)


def bullet_lin(u: FreeElement, v: FreeElement) -> FreeElement:
    """Bilinear extension of `bullet` to linear combinations."""
    return _bilinear(bullet, u, v)
