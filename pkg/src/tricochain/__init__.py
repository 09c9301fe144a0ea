"""Exact computer algebra for three-product (tri-dendriform) algebras.

Everything is computed over the rationals with `fractions.Fraction`; no
floating point enters any mathematical path.
"""

__version__ = "0.1.0"

from .algebra import (AxiomReport, CommTriAlgebraFD, TriDendAlgebra, Vector,
                      Violation, basis_vector, verify_comm_tri, verify_tridendriform)
from .algfile import AlgebraFileError, algebra_to_obj, dump_algebra, load_algebra, parse_algebra
from .cochain import (TriCochain, basis_cochain, check_commutation, check_injectivity,
                      check_roundtrip, cochain_cells, cochain_from_json, cochain_to_json,
                      extract, generator_inputs, hoch_delta_on_psi, hochschild_matrix,
                      p_of, psi_eval, psi_eval_tensors, psi_matrix, tri_delta,
                      tri_delta_explicit)
from .cohomology import (CohomologyReport, DegreeSummary, assemble_tri_delta_matrix,
                         cocycle_basis, cohomology_dims, multilinear_slice_dim,
                         tri_cochain_dim)
from .exactlin import QMatrix, image_dim, kernel_basis, kernel_dim, rank
from .freemodel import (ComTriMonomial, FreeElement, bullet, bullet_lin, generator,
                        p_monomial, star, star_lin, subsets_ordered)
from .tensoralg import (TensorElement, check_associativity, generator_basis_triples,
                        random_tensor_triples, tensor_product, triples_max_degree)
