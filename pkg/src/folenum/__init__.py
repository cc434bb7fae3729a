"""Exact enumerative geometry of degenerate singularities of plane foliations.

Computes, in exact rational arithmetic, the codimensions and degree
polynomials of the loci of degree-d holomorphic foliations on the
projective plane (and on abstract polarized surfaces) with a singularity
of order >= k, a dicritical singularity, or a dicritical singularity with
a leaf of maximal contact after blowup.
"""

from .bundles import (BundleClass, BundleError, cotangent, dual, jet, line,
                      segre, sym, tensor, trivial_line, twist, wedge2, whitney)
from .chow import (P2_NUMBERS, IntersectionNumbers, abstract_surface_context,
                   integrate, p2_context)
from .loci import (CheckEntry, LocusReport, VerificationReport,
                   VkCoefficients, closed_form_C, closed_form_D,
                   closed_form_M, closed_vk, deg_C, deg_D, deg_M,
                   foliation_space_dim, general_surface_deg_M,
                   recover_bivariate, singular_point_count,
                   specialize_surface, verify_all, vk_coeffs)
from .ring import (ContextMismatch, GradedContext, NotAUnit, NotSymmetric,
                   RingElement, RingError, interpolate_univariate,
                   invert_unit, mono, symmetrize_in_roots)

__version__ = "0.1.0"

__all__ = [
    "BundleClass", "BundleError", "CheckEntry", "ContextMismatch",
    "GradedContext", "IntersectionNumbers", "LocusReport", "NotAUnit",
    "NotSymmetric", "P2_NUMBERS", "RingElement", "RingError",
    "VerificationReport", "VkCoefficients", "abstract_surface_context",
    "closed_form_C", "closed_form_D", "closed_form_M", "closed_vk",
    "cotangent", "deg_C", "deg_D", "deg_M", "dual", "foliation_space_dim",
    "general_surface_deg_M", "integrate", "interpolate_univariate",
    "invert_unit", "jet", "line", "mono", "p2_context", "recover_bivariate",
    "segre", "singular_point_count", "specialize_surface", "sym",
    "symmetrize_in_roots", "tensor", "trivial_line", "twist", "verify_all",
    "vk_coeffs", "wedge2", "whitney",
]
