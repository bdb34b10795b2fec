"""Exact Witt-ring and lambda-ring arithmetic, geometric q-deformations,
Bost-Connes algebras with normal-form rewriting, Habiro-ring truncations,
and numeric q-analog zeta / partition-function evaluation."""

from .series import TruncSeries, series_mul, series_pow
from .groupring import (GroupRingElem, QExpPoly, QmodZ, group_ring_mul,
                        qexp_rho, qexp_sigma, qmz)
from .witt import (FactorProduct, GhostVector, W0Elem, WittVector,
                   artin_hasse, frobenius, ghost_from_witt, series_to_witt,
                   teichmuller, verschiebung, w0_L, w0_divisor, w0_frobenius,
                   w0_verschiebung, witt_add, witt_from_ghost, witt_mul,
                   witt_vector_add, witt_vector_mul)
from .qwitt import (AqtSeries, LambdaQElem, Lq, QWittVector, aqt_mul,
                    aqt_unit, delta_q_rescale, diagram_checks, eta, eta_inv,
                    iota_q, lambda_q_add, lq_series, qghost,
                    qghost_components, qwitt_add, qwitt_from_ghost, qwitt_mul,
                    qwitt_one, star_q, w0_ghost)
from .geodef import (DeformedGenerator, GradedW0Elem, affine_factor_product,
                     deformed_divisor, graded_frobenius, graded_mul,
                     graded_verschiebung, omega, points_factor_product,
                     rho_hat, rho_hat_rational, rho_points, sigma_hat,
                     sigma_points)
from .zetageo import (FORMAL, Provenance, ZetaFunction, counts_to_degrees,
                      degrees_to_counts, necklace, q_integer_witt, tate_root,
                      zeta_affine, zeta_affine_shift, zeta_disjoint_union,
                      zeta_from_counts, zeta_from_degrees, zeta_product,
                      zeta_projective)
from .bcalg import (BCElem, BCMonomial, HabiroElem, bc_mul, bc_normalize,
                    bc_q_mul, bc_q_normalize, habiro_add, habiro_mul,
                    habiro_reduce, habiro_rho, habiro_sigma, pochhammer_poly,
                    rho_tilde_n, sigma_n)
from .qsm import (CovarianceReport, DivergenceError, DomainError, Embedding,
                  SeriesValue, StateVector, WeightSpec, covariance_check,
                  curly_bracket, hamiltonian_eig, partition_Z,
                  partition_Zq_system, q_bracket, rep_apply, riemann_zeta,
                  trace_weighted_partition, v_weight, zeta_q)

__version__ = "0.1.0"
