"""Linear MDS codes in the NRT metric, optimum distributions, and digital
nets, with exact integer arithmetic throughout."""

from .gf import GF
from .words import Distribution, Space, hamming_weight, nrt_weight
from .codes import LinearCode, is_mds
from .construct import build_mds_code, build_optimum_distribution, default_nodes
from .geometry import ElementaryBox, is_net, is_optimum, star_discrepancy
from .poly import INF, hasse_derivative, hermite_interpolate

__all__ = [
    "GF",
    "Space",
    "Distribution",
    "LinearCode",
    "ElementaryBox",
    "INF",
    "nrt_weight",
    "hamming_weight",
    "is_mds",
    "is_net",
    "is_optimum",
    "star_discrepancy",
    "build_mds_code",
    "build_optimum_distribution",
    "default_nodes",
    "hasse_derivative",
    "hermite_interpolate",
]
