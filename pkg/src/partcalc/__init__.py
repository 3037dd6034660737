"""Exact hook-length sums, difference operators on partition functions and an identity suite."""

from .partitions import Partition, parse
from .report import VerificationReport
from .stats import parse_stat_id, statistic_function

__version__ = "0.1.0"

__all__ = ["Partition", "VerificationReport", "parse", "parse_stat_id", "statistic_function"]
