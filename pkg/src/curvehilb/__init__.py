"""Exact q-series for Euler characteristics of punctual (Flag) Hilbert schemes
of torus-invariant plane and space curve singularities, with brute-force
oracles to check them against."""

from .formulas import LciParams, Z_le_part  # noqa: F401, Z_r_part, Z_rsn_closed, Z_tm, Z_tm_coeff, hilb_series_lci
from .partitions import (Partition, RsnParams, classify_decomposition, enumerate_rsn, enumerate_tm,
                         is_member_rsn, is_member_tm, minimal_size, series_from_enumeration)
from .qseries import EXACT, BivariatePoly, LaurentPoly, geom_expand, stabilization_check
from .semigroup import (NumericalSemigroup, ResourceError, count_flag_pairs, count_staircases,
                        flag_series_oracle, hilb_series_oracle, semigroup_new, space_curve_semigroup)
from .verify import CheckSpec, HypothesisError, Status, VerificationReport, run_suite

__version__ = "0.1.0"
