"""Exact Jacobian-ring computations for Calabi-Yau complete intersections of four diagonal quadrics."""

__version__ = "0.1.0"

from .scalar import Field, QQ, Scalar
from .poly import Poly, Ring
from .groebner import GroebnerIdeal, buchberger
from .matrixgen import CoeffMatrix, GenConfig, check_nondegenerate, generate_matrix
from .cohomology import GradedBasis, JacobianRing, build_jacobian_ring, compute_graded_basis, poly2vec
from .higgs import ThetaMatrices, compute_theta_matrices
from .symmetric import PlethysmReport, SymIndexer, run_plethysm
from .charvar import CharVariety, charvar_dimension_genus, charvar_first, charvar_second
from .hilbert import hilbert_series
