"""Exact computations with n-ary Nambu-Poisson brackets: potential algebras
and tori, valuations and their graded brackets, isolated singularities,
torus invariants, Fermat automorphism groups and separable Jacobian PDEs."""

from .exact_algebra import Poly, RatFn, rf_equal, poly_substitute, complete_unimodular
from .expression import parse_expression, parse_poly, parse_ratfn, format_expr, ParseError
from .nambu_bracket import (Potential, Torus, bracket, jacobian, fermat, weyl, center_test,
                            sign_law_holds, epsilon_morphism_scalar, FULL, QUOTIENT, SHIFTED)
from .grading_valuation import (OrderedValue, INFINITY, WeightValuation, value_of, rf_value,
                                leading_form, check_w_valuation, is_classical, graded_bracket,
                                torus_faithful_check, point_valuation_classify, adams_valuations)
from .singularity import buchberger, reduce, quotient_dimension, is_isolated_singularity, INFINITE
from .torus_invariants import (QSkew, NK, WeylField, PotentialField, kappa_invariant,
                               torus_normal_form, torus_iso_decide, torus_embed_decide,
                               varrho_invariant, gamma_cap_classify, depth_width_lookup)
from .automorphism_groups import (enumerate_group, fermat_aut_structure,
                                  verify_monomial_automorphism, solve_for_permutation)
from .pde_decider import pde_decide, verify_pde_solution, pde_compose, classify_side

__version__ = "0.1.0"
