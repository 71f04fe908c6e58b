"""Exact q-series, partition enumeration and injection checks for difference series
of partitions with bounded range and fixed smallest part."""

from .genfun import (G_brute, G_closed, H_closed, H_comb, CorrectionPolynomial, SeriesSpec,
                     bounds, minimal_correction, table_row_count)
from .partitions import Partition, PartitionConstraint, enumerate_partitions
from .semigroup import SemigroupSolution, alternate_456, solve_fixed, two_gen
from .series import TruncatedSeries, inv_pochhammer, q_binomial

__version__ = "0.1.0"
