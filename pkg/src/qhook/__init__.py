"""Exact q-hook generating functions, cumulants and their DUSTPAN limit laws."""

__version__ = "0.1.0"

from .errors import DomainError, GuardExceeded, ParseError, QHookError
from .exactpoly import CGF, DensePoly, cgf_cumulant, expand_cgf, standardized_cumulants
from .tableaux import Partition, distance_profile, parse_partition, ssyt_cumulant
from .dustpan import DustpanLaw, DustpanParams, WeightMultiset, cdf, density
from .forests import RootedForest, forest_cgf, forest_cumulant, parse_forest

__all__ = [
    "__version__",
    "QHookError",
    "ParseError",
    "DomainError",
    "GuardExceeded",
    "CGF",
    "DensePoly",
    "cgf_cumulant",
    "expand_cgf",
    "standardized_cumulants",
    "Partition",
    "parse_partition",
    "distance_profile",
    "ssyt_cumulant",
    "WeightMultiset",
    "DustpanParams",
    "DustpanLaw",
    "density",
    "cdf",
    "RootedForest",
    "parse_forest",
    "forest_cgf",
    "forest_cumulant",
]
