"""Exact computer algebra for queer Lie superalgebras.

Builds q(n), map superalgebras q (x) A and their equivariant subalgebras,
Clifford-module machinery for the Cartan part, truncated highest-weight
modules, irreducible products and evaluation modules, and enumerates the
irreducible finite-dimensional modules over preset coefficient algebras.
All arithmetic is exact, over a tower of quadratic extensions of Q(i).
"""

from .scalars import Scalar, Tower, parse_scalar
from .graded import EVEN, ODD, GradedMap, GradedSpace, commutant, \
    graded_tensor, kernel
from .assocsuper import (AssocSuper, ModuleAction, QuadraticPair, SimpleType,
                         assoc_tensor, classify_simple, clifford,
                         clifford_irrep, density_type, make_M, make_Q,
                         odd_center)
from .liesuper import (LieModule, LieSuper, check_solvable_module_dim,
                       derived_series, direct_sum, from_assoc, ideal_closure,
                       is_simple, is_solvable, module_hom_basis, subalgebra)
from .queer import QueerData, build_q, build_q_hat, build_q_tilde, \
    cartan_generation_check
from .coeffalg import (CoeffAlgebra, GammaAction, IdealRep, algebra_from_spec,
                       crt_split, gamma_from_spec, gamma_validate,
                       ideal_intersect, ideal_product, preset_base_field,
                       preset_truncated, quotient_algebra, radical, support,
                       zero_ideal)
from .mapsuper import (InvariantSub, MapSuper, ann_and_support,
                       ann_and_support_gamma, ev, ev_gamma, ev_gamma_rank,
                       invariants, tensor_lie)
from .cartanmod import (CartanAlgebra, CliffordData, HModule, PsiFunctional,
                        build_H, classify_cartan_module, i_psi)
from .hwmod import (SimpleQuotient, TruncatedVerma, WeightModule,
                    check_psi0_ideal, is_irreducible_hw, simple_quotient,
                    top_psi, triangular_of_invariants, triangular_of_map,
                    verma)
from .products import (Catalog, SchurData, assoc_check, classify_enumerate,
                       ev_hat, ev_hat_gamma, ev_module, hat_tensor_flat,
                       hat_tensor_weight, hom_space_weight,
                       is_isomorphic_weight, schur_data, tensor_same_algebra,
                       trivial_q_module, adjoint_q_module)

__version__ = "0.1.0"
