"""Exact theta series of Construction-A lattices over imaginary quadratic
fields, and the search for non-equivalent codes sharing a theta function."""

from .arith import Level, RingContext, RingKind, check_admissible, ring_for
from .codes import Code, SpanKind, build_code, dual_of_span, make_code
from .enumerators import WeightEnumerator, cwe, swe, symmetrize, evaluate
from .kernel import build_matrix, exact_nullity, stabilized_nullity
from .qseries import QSeries
from .search import SearchSpec, VectorDomain, count_table, find_collisions
from .theta import (code_theta, code_theta_oracle, coset_theta,
                    coset_theta_direct, coset_theta_factored, norm_form,
                    one_dim_theta)

__version__ = "0.1.0"
