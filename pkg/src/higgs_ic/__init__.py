"""Exact intersection-cohomology invariants of twisted Higgs moduli spaces
and higher rank Teichmueller components.

The heart of the package is an exact sparse Laurent-polynomial /
rational-function engine over arbitrary-precision rationals, on top of
which sit: integer partitions with arm/leg statistics, truncated plethystic
series, the point-count pipeline producing compactly supported
intersection-cohomology Poincare polynomials of K^l-twisted GL(n,C) and
PGL(n,C) Higgs moduli, and the named invariants of the Cayley components
for SO(n,n+1), SO_0(n,n+2), U(n,n), PU(n,n) and the quaternionic E6 form.
"""

from .cayley import (ComponentSpec, HodgePolynomial, fiber_hodge, hodge_collier_gothen,
                     hodge_so012_component, poincare_e6, poincare_punn, poincare_so0_nn2,
                     poincare_unn)
from .errors import (HiggsICError, InternalInconsistencyError, NotDivisibleError,
                     OrderMismatchError, PoleError, ZeroDenominatorError)
from .laurent import LaurentPoly, even_total_degree_part, exact_poly_divide, weil
from .partitions import Cell, Partition, enumerate_partitions, partitions_of
from .pipeline import (SPECIALIZE_EARLY, SYMBOLIC_LATE, CurveParams, PoincarePolynomial,
                       dt_invariant, expected_gl_degree, h_series, hodge_to_poincare,
                       omega_series, omega_term, poincare_gl, poincare_pgl)
from .ratfunc import RatFunc, ratfunc_arith
from .series import (TruncSeries, moebius, plethystic_exp, plethystic_log, series_exp,
                     series_log)

__version__ = "0.1.0"

__all__ = [
    "Cell", "ComponentSpec", "CurveParams", "HiggsICError", "HodgePolynomial",
    "InternalInconsistencyError", "LaurentPoly", "NotDivisibleError", "OrderMismatchError",
    "Partition", "PoincarePolynomial", "PoleError", "RatFunc", "SPECIALIZE_EARLY",
    "SYMBOLIC_LATE", "TruncSeries", "ZeroDenominatorError", "dt_invariant",
    "enumerate_partitions", "even_total_degree_part", "exact_poly_divide",
    "expected_gl_degree", "fiber_hodge", "h_series", "hodge_collier_gothen",
    "hodge_so012_component", "hodge_to_poincare", "moebius", "omega_series", "omega_term",
    "partitions_of", "plethystic_exp", "plethystic_log", "poincare_e6", "poincare_gl",
    "poincare_pgl", "poincare_punn", "poincare_so0_nn2", "poincare_unn", "ratfunc_arith",
    "series_exp", "series_log", "weil",
]
