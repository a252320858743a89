"""Exact character-theoretic computations for finite groups of Lie type."""

from .cyclotomic import CycNum, cyc, gauss_sum, sqrt_delta_q, zeta
from .qpoly import QPoly, QRatFun
from .weyl import CartanType, ElementStore, RootSystem, relative_weyl_type
from .unipotent import count_unipotent, enumerate_X, series_breakdown, xcirc

__version__ = "0.1.0"

__all__ = [
    "CartanType",
    "CycNum",
    "ElementStore",
    "QPoly",
    "QRatFun",
    "RootSystem",
    "count_unipotent",
    "cyc",
    "enumerate_X",
    "gauss_sum",
    "relative_weyl_type",
    "series_breakdown",
    "sqrt_delta_q",
    "xcirc",
    "zeta",
]
