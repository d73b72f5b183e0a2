"""Exact Newton-polyhedron geometry, numerical exponent estimates and
exponent-region classification for Radon-type averages along polynomial
graphs."""

from .estimators import (DecayEstimator, NewtonIndexTransformer, SmoothingRegionClassifier,
                         SublevelGrowthEstimator)
from .exceptions import (DimensionMismatchError, HypothesisViolation, InputError,
                         InsufficientDataError, NumericalError, PolynomialSyntaxError,
                         QuadratureError, RadonSmoothError)
from .newton import (Face, NewtonPolyhedron, StarPoly, face_polynomial, newton_distance,
                     newton_of, newton_polyhedron, star_polynomial)
from .oscillatory import (CutoffSpec, DecayFit, check_L2_exponent, decay_exponent,
                          default_decay_settings, envelope,
                          surface_fourier)
from .poly import MultiPoly, format_poly, parse_poly, validate_surface
from .regions import (ConvexRegion3, IndexBundle, Interval, Plane3, Point3, Region2, Verdict,
                      classify, classify_Lp_Lps, eta_combine, plane_P, plane_Q, region_A, region_B,
                      region_D, regions_Y, regions_Y34, regions_Z, slice_s0)
from .report import SmoothingReport, build_report
from .sublevel import (GrowthFit, Region, SublevelCurve, estimate_g, estimate_h, fit_growth,
                       predicted_h, sublevel_curve, sublevel_measure)
from .univariate import real_root_max_multiplicity
from .zero_order import ZeroOrderResult, oscillation_order, zero_order_face

__version__ = "0.1.0"
