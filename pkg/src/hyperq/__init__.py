"""hyperq: quaternionic function calculus with residual verification.

Quaternions live in the complex-pair form q = z1 + z2*j; functions are
pairs of component expressions over z1, z2 and their conjugates, evaluated
through first-order Wirtinger jets.  The operators module checks the
modified Cauchy-Fueter kernel conditions, product-rule splits and closure
conditions; the geometry module covers the quaternionic projective line,
atlas transitions and symmetric functions of branch values.
"""

__version__ = "0.1.0"

from .errors import (BothZero, EmptyGrid, HyperqError, NearPole, NotAZero,
                     NotPolynomial, NotRational, OutsideChart, ParseError,
                     SingularValue)
from .quaternion import (EPS_SING, I, J, K, ONE, ZERO, Quaternion,
                         from_real4, hamilton_mul_real4, norm_sq, q_conj,
                         q_inverse, q_mul, to_real4)
from .jets import (FD_STEP, WirtingerJet, fd_partials, jet_add, jet_conj,
                   jet_mul, jet_recip, seed_const, seed_z1, seed_z2)
from .expr import (Add, Conj, Expr, Lit, Mul, Neg, Pow, Recip, Var,
                   parse_expr, parse_program, program_source, to_source)
from .functions import (QFunction, constant, eval_q, identity, parse,
                        q_fun_add, q_fun_conj, q_fun_inverse, q_fun_mul)
from .polynomials import (Polynomial4, pole_order, to_poly, to_rational,
                          zero_order)
from .operators import (EPS_POLE, Classification, classify_on_grid, fueter,
                        fueter_of_inverse, hyperholomorphy_residuals,
                        inverse_hyperholomorphy_residuals,
                        leibniz_decomposition, product_condition_residuals,
                        product_rule_rhs_literal, product_rule_second_term,
                        sum_condition_residual)
from .grid import Axis, GridSpec, default_grid
from .geometry import (Atlas, HPPoint, Transition, a_alpha_beta_membership,
                       chart_zeta, chart_zeta_prime, elementary_symmetric_coeffs,
                       embed_complex_line, embed_cp1, eval_monic_poly,
                       hp_normalize, load_atlas, verify_atlas,
                       verify_sha_transition)
from .report import ResidualReport, pair_abs, run_pointwise
