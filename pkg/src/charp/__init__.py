"""Exact prime-characteristic commutative algebra.

Finite-field arithmetic with Frobenius and p-th roots, sparse polynomial
rings, pushforward decomposition over the reduced-monomial basis, the
multiplier algebra of maps inverse to Frobenius (splittings, composition,
ideal compatibility), power-series-embedded discrete valuations with
certified precision, and evidence-backed excellence reports.
"""

from .errors import (CharpError, ContextMismatch, DegreeTooLarge,
                     ExponentOverflow, NotInRing, NotPrime, NotSolid,
                     PolySyntaxError, PrecisionExhausted, PrecisionMismatch,
                     SizeBound, StreamsAgree)
from .ffield import (FieldContext, FieldElement, frobenius_pow, make_context,
                     pth_root)
from .poly import (MonomialIdeal, MultiPoly, RationalFn, format_poly,
                   format_rational, member, random_poly)
from .parser import parse_poly, parse_rational
from .series import TruncatedSeries, substitute_series
from .frobenius import (FrobDecomposition, decompose, free_basis,
                        frobenius_image, is_pe_power, recompose)
from .cartier import (CartierMap, apply_map, canonical_splitting,
                      check_compatible, check_linearity, compose,
                      is_splitting, trace_project)
from .streams import (SeriesStream, builtin_streams, from_seed,
                      geometric_gap, lacunary, lacunary_shift,
                      parse_stream_spec, perturb, t_stream)
from .valuation import (EmbeddingValuation, INFINITY, distinguishing_fraction,
                        first_difference, order)
from .excellence import (ExcellenceReport, IMPLICATIONS, THEOREMS, dvr_report,
                         f_finite_report, solidity_witness)

__version__ = "0.1.0"

__all__ = [
    "CharpError", "ContextMismatch", "DegreeTooLarge", "ExponentOverflow",
    "NotInRing", "NotPrime", "NotSolid", "PolySyntaxError",
    "PrecisionExhausted", "PrecisionMismatch", "SizeBound", "StreamsAgree",
    "FieldContext", "FieldElement", "frobenius_pow", "make_context",
    "pth_root",
    "MonomialIdeal", "MultiPoly", "RationalFn", "format_poly",
    "format_rational", "member", "random_poly",
    "parse_poly", "parse_rational",
    "TruncatedSeries", "substitute_series",
    "FrobDecomposition", "decompose", "free_basis", "frobenius_image",
    "is_pe_power", "recompose",
    "CartierMap", "apply_map", "canonical_splitting", "check_compatible",
    "check_linearity", "compose", "is_splitting", "trace_project",
    "SeriesStream", "builtin_streams", "from_seed", "geometric_gap",
    "lacunary", "lacunary_shift", "parse_stream_spec", "perturb", "t_stream",
    "EmbeddingValuation", "INFINITY", "distinguishing_fraction",
    "first_difference", "order",
    "ExcellenceReport", "IMPLICATIONS", "THEOREMS", "dvr_report",
    "f_finite_report", "solidity_witness",
    "__version__",
]
