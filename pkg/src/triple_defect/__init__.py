"""Defect and Hodge numbers of threefolds with ordinary triple points.

Exact linear algebra over Q or a prime field F_p (p >= 5): find and
certify the ordinary triple points of a hypersurface in P^4 or a weighted
P(w0..w4), compute the dimension of the relevant graded piece of the
equisingular ideal, and turn it into the defect, the Hodge numbers of the
crepant resolution, and the Q-factoriality verdict.  Triple cyclic covers
of P^3 branched along a surface of degree 3k are built in.
"""

from .cover import CoverSpec, lift_point, lift_points, triple_cover
from .defect import DefectResult, defect, equisingular_dim, equisingular_dim_oracle
from .errors import CertificationError, InputError
from .exactalg import GF, RATIONALS, FieldSpec, Matrix
from .hodge import HodgeReport, dim_graded, euler_p4, hodge_p4, hodge_weighted
from .jets import Chart, choose_chart, jet2, jet_matrix, partial_jets
from .locus import (ConeCertificate, ProjectivePoint, TriplePointCertificate,
                    certify_cone_smooth, find_singular_points, verify_triple_point)
from .poly import Polynomial, Ring, local_ring, monomial_basis, parse, ring
from .stevens import stevens_surface

__version__ = "0.1.0"

__all__ = [
    "CertificationError", "Chart", "ConeCertificate", "CoverSpec",
    "DefectResult", "FieldSpec", "GF", "HodgeReport", "InputError", "Matrix",
    "Polynomial", "ProjectivePoint", "RATIONALS", "Ring",
    "TriplePointCertificate", "certify_cone_smooth", "choose_chart", "defect",
    "dim_graded", "equisingular_dim", "equisingular_dim_oracle", "euler_p4",
    "find_singular_points", "hodge_p4", "hodge_weighted", "jet2", "jet_matrix",
    "lift_point", "lift_points", "local_ring", "monomial_basis", "parse",
    "partial_jets", "ring", "stevens_surface", "triple_cover",
    "verify_triple_point",
]
