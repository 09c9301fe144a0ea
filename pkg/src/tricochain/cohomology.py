"""Differential matrices, cocycle bases, and cohomology dimensions.

Everything is computed over the rationals with exact elimination; the cell
order of `cochain_cells` fixes the coordinates, so matrices, kernels and
reports are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct

from .algebra import TriDendAlgebra
from .cochain import basis_cochain, cochain_cells, tri_delta, tri_delta_explicit
from .exactlin import QMatrix, kernel_basis, rank
from .freemodel import ComTriMonomial

_ZERO = Fraction(0)


def tri_cochain_dim(n: int, dim: int) -> int:
    """Closed form (2^n - 1) * dim^n * dim for the degree-n cochain space."""
    return (2 ** n - 1) * dim ** n * dim


def assemble_tri_delta_matrix(alg: TriDendAlgebra, n: int, explicit: bool = False) -> QMatrix:
    """Matrix of the degree-n differential in the canonical cell coordinates."""
    d = alg.dim
    cols = cochain_cells(n, d)
    row_cells = cochain_cells(n + 1, d)
    row_index = {cell: i for i, cell in enumerate(row_cells)}
    entries = [[_ZERO] * len(cols) for _ in row_cells]
    for col, cell in enumerate(cols):
        g = basis_cochain(alg, n, cell)
        dg = tri_delta_explicit(g) if explicit else tri_delta(g)
        for (subset, jt), vec in dg.coeffs.items():
            for k, c in enumerate(vec):
                if c:
                    entries[row_index[(subset, jt, k)]][col] = c
    return QMatrix(len(row_cells), len(cols), tuple(x for row in entries for x in row))


def cocycle_basis(alg: TriDendAlgebra, n: int) -> list[tuple[Fraction, ...]]:
    """Kernel basis of the degree-n differential, in cell coordinates."""
    return kernel_basis(assemble_tri_delta_matrix(alg, n))


def multilinear_slice_dim(n: int, dim: int) -> int:
    """Dimension of the degree-n multilinear monomial span tensor B, times B^n inputs.

    Enumerated, not assumed: the monomials with leaf set {1..n}, each index
    once, are collected explicitly.
    """
    monos = set()
    for bits in iproduct((0, 1), repeat=n):
        block = tuple(i + 1 for i, b in enumerate(bits) if b)
        if not block:
            continue
        tail = tuple(i + 1 for i, b in enumerate(bits) if not b)
        monos.add(ComTriMonomial(block, tail))
    return dim ** n * len(monos) * dim


@dataclass(frozen=True)
class DegreeSummary:
    n: int
    dim_cochains: int
    rank_delta: int
    kernel_dim: int
    h_dim: int
    quotient_slice_dim: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "dim_cochains": self.dim_cochains,
            "rank_delta": self.rank_delta,
            "kernel_dim": self.kernel_dim,
            "h_dim": self.h_dim,
            "quotient_slice_dim": self.quotient_slice_dim,
        }


@dataclass(frozen=True)
class CohomologyReport:
    max_degree: int
    degrees: tuple[DegreeSummary, ...]
    composites_zero: tuple[tuple[int, bool], ...]
    cocycles: tuple[tuple[int, tuple[tuple[Fraction, ...], ...]], ...] = field(default=())

    @property
    def all_composites_zero(self) -> bool:
        return all(flag for _, flag in self.composites_zero)

    def h_dims(self) -> dict[int, int]:
        return {s.n: s.h_dim for s in self.degrees}

    def to_dict(self) -> dict:
        out = {
            "max_degree": self.max_degree,
            "degrees": [s.to_dict() for s in self.degrees],
            "composites_zero": {str(n): flag for n, flag in self.composites_zero},
        }
        if self.cocycles:
            out["cocycles"] = {str(n): [[str(x) for x in vec] for vec in vecs]
                               for n, vecs in self.cocycles}
        return out


def cohomology_dims(alg: TriDendAlgebra, n_max: int, emit_cocycles: bool = False) -> CohomologyReport:
    """Dims, ranks, kernels and H^n for 1 <= n <= n_max, with delta*delta checks."""
    if n_max < 1:
        raise ValueError("max degree must be at least 1")
    d = alg.dim
    mats = {n: assemble_tri_delta_matrix(alg, n) for n in range(1, n_max + 1)}
    ranks = {n: rank(mats[n]) for n in mats}
    summaries = []
    cocycles = []
    for n in range(1, n_max + 1):
        dim_cn = len(cochain_cells(n, d))
        ker = dim_cn - ranks[n]
        prev_rank = ranks.get(n - 1, 0)
        summaries.append(DegreeSummary(
            n=n,
            dim_cochains=dim_cn,
            rank_delta=ranks[n],
            kernel_dim=ker,
            h_dim=ker - prev_rank,
            quotient_slice_dim=multilinear_slice_dim(n, d) - dim_cn,
        ))
        if emit_cocycles:
            cocycles.append((n, tuple(kernel_basis(mats[n]))))
    composites = []
    for n in range(2, n_max + 1):
        composites.append((n, mats[n].matmul(mats[n - 1]).is_zero()))
    return CohomologyReport(
        max_degree=n_max,
        degrees=tuple(summaries),
        composites_zero=tuple(composites),
        cocycles=tuple(cocycles),
    )
